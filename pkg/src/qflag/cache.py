"""
Optional on-disk persistence of the e-expansion memo table.

When ``QFLAG_CACHE_DIR`` is set, :func:`load` merges a previously saved
table into memory and :func:`save` writes the current one back.  The file
carries a format version and a SHA-256 of its payload; anything that does
not verify is ignored and the entries are simply recomputed.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from .classical import fgp_cache

log = logging.getLogger(__name__)

FORMAT = "qflag-fgp/1"
FILENAME = "fgp-cache.json"


def cache_path(directory: str | os.PathLike | None = None) -> Path | None:
    directory = directory if directory is not None else os.environ.get("QFLAG_CACHE_DIR")
    if not directory:
        return None
    return Path(directory) / FILENAME


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _encode(table: dict) -> str:
    rows = []
    for (w, a, n), coeffs in sorted(table.items()):
        rows.append([list(w), list(a), n, [[list(k), c] for k, c in sorted(coeffs.items())]])
    return json.dumps(rows, separators=(",", ":"))


def save(directory: str | os.PathLike | None = None) -> Path | None:
    """Write the memo table; returns the path, or None when persistence is off."""
    path = cache_path(directory)
    if path is None:
        return None
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = _encode(fgp_cache())
    doc = json.dumps({"format": FORMAT, "sha256": _digest(payload), "payload": payload})
    # write then rename so a crash never leaves a half-written file behind
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".fgp-", suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(doc)
    os.replace(tmp, path)
    return path


def load(directory: str | os.PathLike | None = None) -> int:
    """Merge a saved table into memory; returns the number of entries added."""
    path = cache_path(directory)
    if path is None or not path.exists():
        return 0
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        payload = doc["payload"]
        if doc.get("format") != FORMAT or doc.get("sha256") != _digest(payload):
            raise ValueError("format or checksum mismatch")
        rows = json.loads(payload)
        entries = {}
        for w, a, n, coeffs in rows:
            entries[(tuple(w), tuple(a), int(n))] = {tuple(k): int(c) for k, c in coeffs}
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring unreadable cache file %s: %s", path, exc)
        return 0
    table = fgp_cache()
    added = 0
    for key, val in entries.items():
        if key not in table:
            table[key] = val
            added += 1
    return added
