import json

from qflag import cache, cli
from qflag.classical import clear_caches, fgp_cache, fgp_expand
from qflag.errors import InternalError
from qflag.perm import DimSeq, Permutation

A = DimSeq(7, (2, 4))
W = Permutation.parse("1536247")


def test_disabled_without_directory(monkeypatch):
    monkeypatch.delenv("QFLAG_CACHE_DIR", raising=False)
    assert cache.cache_path() is None
    assert cache.save() is None
    assert cache.load() == 0


def test_round_trip(tmp_path):
    expected = fgp_expand(W, A)
    path = cache.save(tmp_path)
    assert path.exists()
    clear_caches()
    assert cache.load(tmp_path) > 0
    assert (W, A.a, A.n) in fgp_cache()
    assert fgp_expand(W, A) == expected


def test_corrupted_payload_is_ignored(tmp_path):
    fgp_expand(W, A)
    path = cache.save(tmp_path)
    doc = json.loads(path.read_text())
    doc["payload"] = doc["payload"].replace("1", "2", 1)
    path.write_text(json.dumps(doc))
    clear_caches()
    assert cache.load(tmp_path) == 0
    assert fgp_expand(W, A).coeffs == {(0, 1, 0, 2, 3): 1, (0, 0, 0, 3, 3): -1, (0, 1, 0, 1, 4): -1}


def test_garbage_file_is_ignored(tmp_path):
    (tmp_path / cache.FILENAME).write_text("not json at all")
    assert cache.load(tmp_path) == 0


def test_cli_uses_env_directory(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QFLAG_CACHE_DIR", str(tmp_path))
    assert cli.main(["schub", "--n", "7", "--a", "2,4", "--w", "1536247"]) == 0
    assert (tmp_path / cache.FILENAME).exists()
    capsys.readouterr()


def test_internal_error_exit_code(monkeypatch, capsys):
    monkeypatch.delenv("QFLAG_CACHE_DIR", raising=False)

    def broken(*args):
        raise InternalError("forced")

    monkeypatch.setattr(cli, "quantum_product", broken)
    assert cli.main(["prod", "--n", "3", "--u", "213", "--v", "132"]) == 3
    assert "internal check failed" in capsys.readouterr().err
