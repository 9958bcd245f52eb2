"""
Brute-force oracles for the classical layer.

Everything here goes through divided differences only: a polynomial is
expanded in the Schubert basis by ``c_w = d_w(p)``, using that ``d_w``
sends the Schubert polynomial of ``v`` (same length) to ``[v == w]``.
Nothing in this module calls the Pieri code.
"""

from __future__ import annotations

from .errors import InternalError, QFlagError
from .perm import DimSeq, Permutation
from .poly import Poly, divided_difference
from .classical import schubert_poly

__all__ = ["reduced_word", "apply_dw", "schubert_coefficients", "classical_product_oracle"]


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word ``[i_1, ..., i_l]`` with ``w = s_{i_1} ... s_{i_l}``, built from right descents."""
    t = list(w)
    rev = []
    while True:
        for i in range(1, len(t)):
            if t[i - 1] > t[i]:
                t[i - 1], t[i] = t[i], t[i - 1]
                rev.append(i)
                break
        else:
            break
    return rev[::-1]


def apply_dw(w: Permutation, p: Poly, word: list[int] | None = None) -> Poly:
    """``d_{i_1} ... d_{i_l}(p)``; the rightmost operator is applied first."""
    if word is None:
        word = reduced_word(w)
    for i in reversed(word):
        p = divided_difference(i, p)
        if not p:
            break
    return p


def schubert_coefficients(p: Poly, n: int, within: DimSeq | None = None) -> dict[Permutation, int]:
    """
    Coefficients ``c_w`` (``w`` in S_n) of ``p = sum c_w S_w``.

    The search walks down from ``p``: ``q_v = d_v(p)`` for growing ``v``,
    extended on the left by ``s_i`` whenever that raises the length.  Only
    ``i < n`` is used, so exactly the permutations of S_n are reached; the
    coefficient of any ``w`` is determined by ``d_w`` alone, so nothing is
    lost by not embedding further.

    With ``within=a`` only ``w`` in S_n(a) are reported.  The walk then stays
    inside S_n(a): if ``w = x v`` with lengths adding, the right descents of
    ``v`` are among those of ``w``.
    """
    if p.is_zero():
        return {}
    if not p.is_homogeneous():
        raise QFlagError("schubert_coefficients needs a homogeneous polynomial")
    if any(v[0] != "x" for v in p.variables()):
        raise QFlagError("schubert_coefficients works on x-variables only")
    D = p.degree()
    allowed = set(within.a) if within is not None else set()
    base = D + 1
    packed = _pack(p, n, base)
    level: dict[tuple[int, ...], dict[int, int]] = {tuple(range(1, n + 1)): packed}
    for _ in range(D):
        nxt: dict[tuple[int, ...], dict[int, int]] = {}
        seen: set[tuple[int, ...]] = set()
        for v, q in level.items():
            pos = {val: idx for idx, val in enumerate(v)}
            for i in range(1, n):
                # left multiplication by s_i swaps the values i, i+1
                if pos[i] > pos[i + 1]:
                    continue
                # only an adjacent pair i, i+1 can create a new descent
                if within is not None and pos[i + 1] == pos[i] + 1 and pos[i] + 1 not in allowed:
                    continue
                t = list(v)
                t[pos[i]], t[pos[i + 1]] = i + 1, i
                key = tuple(t)
                if key in seen:
                    continue
                seen.add(key)
                r = _ddiff_packed(i, q, base)
                if r:
                    nxt[key] = r
        level = nxt
    out = {}
    for v, q in level.items():
        if set(q) - {0}:
            raise InternalError(f"d_w(p) for {v} is not a constant")
        c = q.get(0, 0)
        if c:
            out[Permutation._trusted(v)] = c
    return out


def _pack(p: Poly, n: int, base: int) -> dict[int, int]:
    # x_t^e contributes e * base^(t-1); base > degree so digits never carry
    out = {}
    for m, c in p.terms.items():
        key = 0
        for (_, t), e in m:
            if t >= n + 1:
                raise QFlagError(f"variable x{t} is outside x1..x{n}")
            key += e * base ** (t - 1)
        out[key] = c
    return out


def _ddiff_packed(i: int, terms: dict[int, int], base: int) -> dict[int, int]:
    """``divided_difference`` on base-packed exponent vectors."""
    wi = base ** (i - 1)
    wj = wi * base
    step = wi - wj
    out: dict[int, int] = {}
    get = out.get
    for m, c in terms.items():
        A = (m // wi) % base
        B = (m // wj) % base
        if A == B:
            continue
        if A > B:
            sign, lo, gap = c, B, A - B
        else:
            sign, lo, gap = -c, A, B - A
        # first term x_i^(lo+gap-1) x_{i+1}^lo, then shift one power from x_i to x_{i+1}
        key = m - A * wi - B * wj + (lo + gap - 1) * wi + lo * wj
        for _ in range(gap):
            val = get(key, 0) + sign
            if val:
                out[key] = val
            else:
                del out[key]
            key -= step
    return out


def classical_product_oracle(u: Permutation, v: Permutation, a: DimSeq) -> dict[Permutation, int]:
    """Structure constants of ``Omega_u * Omega_v`` in H^*(Fl(a; C^n)), by polynomial multiplication."""
    a.check(u)
    a.check(v)
    coeffs = schubert_coefficients(schubert_poly(u) * schubert_poly(v), a.n, within=a)
    for w, c in coeffs.items():
        if not a.contains(w):
            raise InternalError(f"product has term {w} outside S_n(a)")
    return coeffs
