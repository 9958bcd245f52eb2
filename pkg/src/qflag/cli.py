"""
Command-line front end.

Permutations are given in one-line notation: ``3715246`` when n <= 9,
otherwise comma separated (``1,2,10,...``).  Dimension and degree vectors
are comma separated.  Exit status is 0 on success, 2 when the input does not
validate and 3 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import cache
from .classical import fgp_expand, schubert_poly
from .errors import InternalError, QFlagError
from .oracle import classical_product_oracle
from .perm import DimSeq, Permutation
from .presentation import (
    RelationsReport, evaluate_presentation, quantum_E, quantum_giambelli, relations_check,
)
from .quantum import QuantumElement, SpecialClass, gw_explain, quantum_pieri, quantum_product

SCHEMA = "qflag/1"

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise QFlagError(f"expected a comma separated list of integers, got {text!r}") from None


def _dims(args) -> DimSeq:
    if args.a is None:
        return DimSeq.full(args.n)
    return DimSeq(args.n, _ints(args.a))


def _perm(text: str, a: DimSeq) -> Permutation:
    return a.check(Permutation.parse(text, a.n))


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": args.command}
        doc.update(payload)
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


# -- commands ------------------------------------------------------------------

def cmd_prod(args) -> int:
    a = _dims(args)
    u, v = _perm(args.u, a), _perm(args.v, a)
    result = quantum_product(u, v, a)
    lines = [str(result)]
    payload = result.to_json()
    if args.verify:
        classical = classical_product_oracle(u, v, a)
        if classical != result.classical_part():
            raise InternalError(f"q=0 part disagrees with the oracle: {classical}")
        lines.append("verify: q=0 part matches the divided-difference oracle")
        payload["verified"] = True
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_pieri(args) -> int:
    a = _dims(args)
    u = _perm(args.u, a)
    alpha = SpecialClass(args.r, args.j)
    alpha.perm(a)
    result = quantum_pieri(alpha, QuantumElement.basis(u, a))
    _emit(args, str(result), result.to_json())
    return EXIT_OK


def cmd_gw(args) -> int:
    a = _dims(args)
    u, v, w = (_perm(t, a) for t in (args.u, args.v, args.w))
    d = _ints(args.d)
    value, route = gw_explain(u, v, w, d, a, method=args.method)
    if args.verify and route == "special":
        slow, _ = gw_explain(u, v, w, d, a, method="product")
        if slow != value:
            raise InternalError(f"special-class route gave {value}, product route gave {slow}")
    text = str(value)
    if args.explain:
        text += f"\nroute: {route}"
    _emit(args, text, {"n": a.n, "a": list(a.a), "d": list(d), "value": value, "route": route})
    return EXIT_OK


def cmd_qschub(args) -> int:
    a = _dims(args)
    w = _perm(args.w, a)
    qg = quantum_giambelli(w, a)
    lines = [qg.render()]
    payload = qg.to_json()
    if args.expand:
        poly = qg.to_poly()
        lines.append(str(poly))
        payload["polynomial"] = poly.to_json()
    if args.verify:
        got = qg.evaluate()
        if got != QuantumElement.basis(w, a):
            raise InternalError(f"quantum Giambelli data of {w} evaluates to {got}")
        lines.append(f"verify: evaluates to s[{w}]")
        payload["verified"] = True
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_schub(args) -> int:
    w = Permutation.parse(args.w, args.n)
    poly = schubert_poly(w)
    lines = [str(poly)]
    payload: dict = {"n": args.n, "perm": list(w), "polynomial": poly.to_json()}
    if args.a is not None:
        a = DimSeq(args.n, _ints(args.a))
        exp = fgp_expand(a.check(w), a)
        lines.append(exp.render())
        payload["expansion"] = exp.to_json()
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _relation_residual(job: tuple[int, tuple[int, ...], int]) -> tuple[int, dict]:
    n, dims, i = job
    a = DimSeq(n, dims)
    return i, evaluate_presentation(quantum_E(i, a.k + 1, a), a).to_json()


def cmd_relations(args) -> int:
    a = _dims(args)
    if args.jobs > 1:
        report = RelationsReport(a)
        jobs = [(a.n, a.a, i) for i in range(1, a.n + 1)]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for i, data in pool.map(_relation_residual, jobs):
                report.residuals[i] = QuantumElement.from_json(data)
        report.specials.update(relations_check(a, check_specials=True).specials)
    else:
        report = relations_check(a)
    _emit(args, report.render(), report.to_json())
    return EXIT_OK if report.ok else EXIT_INTERNAL


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qflag",
        description="Quantum Schubert calculus on partial flag varieties Fl(a; C^n).",
        epilog="Permutations: one-line digits when n <= 9 (3715246), else comma separated.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="ambient dimension")
    common.add_argument("--a", help="dimension vector a_1<...<a_k, comma separated (default: full flags)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes where supported")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("prod", parents=[common], help="quantum product sigma_u * sigma_v")
    s.add_argument("--u", required=True)
    s.add_argument("--v", required=True)
    s.add_argument("--verify", action="store_true", help="check the q=0 part against the oracle")
    s.set_defaults(func=cmd_prod)

    s = sub.add_parser("pieri", parents=[common], help="multiply sigma_u by the special class s_r...s_{a_j}")
    s.add_argument("--u", required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.set_defaults(func=cmd_pieri)

    s = sub.add_parser("gw", parents=[common], help="three-point Gromov-Witten invariant")
    s.add_argument("--u", required=True)
    s.add_argument("--v", required=True)
    s.add_argument("--w", required=True)
    s.add_argument("--d", required=True, help="multidegree, comma separated")
    s.add_argument("--method", choices=("auto", "special", "product"), default="auto")
    s.add_argument("--explain", action="store_true", help="report which route computed the value")
    s.add_argument("--verify", action="store_true", help="recompute by the product route")
    s.set_defaults(func=cmd_gw)

    s = sub.add_parser("qschub", parents=[common], help="quantum Giambelli formula of sigma_w")
    s.add_argument("--w", required=True)
    s.add_argument("--expand", action="store_true", help="also print the polynomial in y and q")
    s.add_argument("--verify", action="store_true", help="evaluate in the quantum ring")
    s.set_defaults(func=cmd_qschub)

    s = sub.add_parser("schub", parents=[common], help="Schubert polynomial (and e-expansion with --a)")
    s.add_argument("--w", required=True)
    s.set_defaults(func=cmd_schub)

    s = sub.add_parser("relations", parents=[common], help="check the presentation relations")
    s.set_defaults(func=cmd_relations)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache.load()
    try:
        code = args.func(args)
    except QFlagError as exc:
        print(f"qflag: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"qflag: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    try:
        cache.save()
    except OSError as exc:
        print(f"qflag: could not write cache: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
