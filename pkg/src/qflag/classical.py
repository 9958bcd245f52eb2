"""
Classical Schubert calculus on partial flag varieties.

``pieri_expand`` enumerates the chains of length-increasing transpositions
that describe multiplication by a special class ``s_r ... s_m``.
``fgp_expand`` writes a Schubert polynomial for ``w`` in S_n(a) as an
integer combination of products of elementary symmetric polynomials
``e_i(x_1..x_{a_p})``, by peeling off one special factor at a time.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping

from .errors import IndexingError, InternalError, ParameterError
from .perm import DimSeq, Permutation
from .poly import Poly, divided_difference, elementary

__all__ = [
    "pieri_expand", "schubert_poly", "EExpansion", "fgp_expand",
    "evaluate_expansion", "fgp_cache", "clear_caches",
]


def _covers(w: tuple[int, ...], b: int, c: int) -> bool:
    """Does swapping positions b < c (1-indexed) raise the length by exactly one?"""
    lo, hi = w[b - 1], w[c - 1]
    if lo > hi:
        return False
    for t in range(b, c - 1):
        if lo < w[t] < hi:
            return False
    return True


@lru_cache(maxsize=None)
def _pieri(u: tuple[int, ...], ell: int, m: int) -> frozenset[Permutation]:
    n = len(u)
    results = set()
    start = (u, frozenset())
    seen = {start}
    stack = [start]
    while stack:
        w, used = stack.pop()
        if len(used) == ell:
            results.add(Permutation._trusted(w))
            continue
        for b in range(1, m + 1):
            if b in used:
                continue
            for c in range(m + 1, n + 1):
                if _covers(w, b, c):
                    t = list(w)
                    t[b - 1], t[c - 1] = t[c - 1], t[b - 1]
                    state = (tuple(t), used | {b})
                    if state not in seen:
                        seen.add(state)
                        stack.append(state)
    return frozenset(results)


def pieri_expand(u: Permutation, r: int, m: int) -> frozenset[Permutation]:
    """
    All ``w`` with ``u --alpha--> w`` for ``alpha = s_r ... s_m``.

    These are the permutations reachable from ``u`` by ``m - r + 1``
    right multiplications by transpositions ``t_bc`` with ``b <= m < c``,
    each raising the length by one, and with all ``b`` distinct.
    """
    n = len(u)
    if not 1 <= r <= m <= n - 1:
        raise ParameterError(f"need 1 <= r <= m <= n-1, got r={r}, m={m}, n={n}")
    return _pieri(tuple(u), m - r + 1, m)


def _trim(w: tuple[int, ...]) -> tuple[int, ...]:
    n = len(w)
    while n > 1 and w[n - 1] == n:
        n -= 1
    return w[:n]


@lru_cache(maxsize=None)
def _schubert(t: tuple[int, ...]) -> Poly:
    n = len(t)
    if all(t[i] == n - i for i in range(n)):
        return Poly.monomial({("x", i): n - i for i in range(1, n)})
    for i in range(1, n):
        if t[i - 1] < t[i]:
            s = list(t)
            s[i - 1], s[i] = s[i], s[i - 1]
            return divided_difference(i, _schubert(_trim(tuple(s))))
    raise InternalError("unreachable: a non-longest permutation has an ascent")


def schubert_poly(w: Permutation) -> Poly:
    """
    The Schubert polynomial of ``w``, in ``x_1..x_{n-1}``.

    Starts from ``x_1^{n-1} ... x_{n-1}`` for the longest element and applies
    divided differences downwards.  Trailing fixed points are dropped first,
    which is harmless because Schubert polynomials are stable.
    """
    return _schubert(_trim(tuple(w)))


class EExpansion:
    """
    Integer combination of products ``prod_p prod_r e_{i_r}(x_1..x_{a_p})``.

    Keys are index sequences ``(i_{a_1}, ..., i_{n-1})`` with each block
    ``i_{a_p} .. i_{a_{p+1}-1}`` sorted ascending.
    """

    __slots__ = ("dims", "_coeffs")

    def __init__(self, dims: DimSeq, coeffs: Mapping[tuple[int, ...], int] | None = None):
        self.dims = dims
        clean = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != self.width:
                raise ParameterError(f"index sequence {key} should have length {self.width}")
            for p, (lo, hi) in enumerate(self.blocks, 1):
                block = key[lo:hi]
                if list(block) != sorted(block) or any(not 0 <= i <= dims[p] for i in block):
                    raise ParameterError(f"index sequence {key} is not canonical")
            if c:
                clean[key] = clean.get(key, 0) + c
        self._coeffs = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, dims: DimSeq, coeffs: dict) -> "EExpansion":
        e = object.__new__(cls)
        e.dims = dims
        e._coeffs = coeffs
        return e

    @property
    def width(self) -> int:
        return self.dims.n - self.dims[1]

    @property
    def blocks(self) -> list[tuple[int, int]]:
        """Slices of the index tuple belonging to each block p = 1..k."""
        a = self.dims
        off = a[1]
        return [(a[p] - off, a[p + 1] - off) for p in range(1, a.k + 1)]

    @property
    def coeffs(self) -> dict[tuple[int, ...], int]:
        return dict(self._coeffs)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._coeffs.items(), key=lambda t: tuple(-i for i in t[0]))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EExpansion):
            return NotImplemented
        return self.dims == other.dims and self._coeffs == other._coeffs

    def factors(self, key: tuple[int, ...]) -> list[tuple[int, int]]:
        """Nonzero factors of one product as ``(i, p)``: e_i in x_1..x_{a_p}."""
        out = []
        for p, (lo, hi) in enumerate(self.blocks, 1):
            out.extend((i, p) for i in key[lo:hi] if i)
        return out

    def render(self, symbol: str = "e") -> str:
        if not self._coeffs:
            return "0"
        a = self.dims
        parts = []
        for key, c in self.items():
            counts: dict[tuple[int, int], int] = {}
            for i, p in self.factors(key):
                counts[(p, i)] = counts.get((p, i), 0) + 1
            mono = " ".join(
                f"{symbol}[{a[p]}]_{i}" + (f"^{e}" if e > 1 else "")
                for (p, i), e in sorted(counts.items())
            )
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag} {mono}" if mono else str(mag))
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"EExpansion({self.render()!r})"

    def to_json(self) -> dict:
        return {
            "n": self.dims.n,
            "a": list(self.dims.a),
            "terms": [{"index": list(k), "coeff": c} for k, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "EExpansion":
        dims = DimSeq(int(data["n"]), tuple(data["a"]))
        return cls(dims, {tuple(t["index"]): int(t["coeff"]) for t in data["terms"]})


# -- the recursive expansion --------------------------------------------------

_FGP_CACHE: dict[tuple, dict[tuple[int, ...], int]] = {}


def fgp_cache() -> dict:
    """The memo table of e-product expansions, keyed by ``(w, a, n)``."""
    return _FGP_CACHE


def clear_caches() -> None:
    _FGP_CACHE.clear()
    _pieri.cache_clear()
    _schubert.cache_clear()


def _min_support(w: tuple[int, ...]) -> int:
    return len(_trim(w)) if any(v != i for i, v in enumerate(w, 1)) else 1


def _measure(w: tuple[int, ...], a: DimSeq) -> tuple[int, int]:
    r = _min_support(w)
    return (r, w[a[a.block_of(r - 1)]])


def _times_factor(coeffs: dict, dims: DimSeq, i: int, p: int) -> dict:
    off = dims[1]
    lo, hi = dims[p] - off, dims[p + 1] - off
    out = {}
    for key, c in coeffs.items():
        block = list(key[lo:hi])
        if block[0] != 0:
            raise InternalError(f"no free slot for e_{i} in block {p} of {key}")
        block[0] = i
        block.sort()
        out[key[:lo] + tuple(block) + key[hi:]] = c
    return out


def _fgp(w: tuple[int, ...], a: DimSeq) -> dict:
    key = (w, a.a, a.n)
    hit = _FGP_CACHE.get(key)
    if hit is not None:
        return hit
    n = a.n
    if all(v == i for i, v in enumerate(w, 1)):
        res = {(0,) * (n - a[1]): 1}
    else:
        p = max(q for q in range(1, a.k + 1) if w[a[q]] != a[q] + 1)
        ap = a[p]
        c = w[ap]
        if c >= ap + 1:
            raise InternalError(f"{w} is not in S_n(a)")
        u = tuple(x if x < c else x - 1 for x in w[:ap]) + tuple(x - 1 for x in w[ap + 1:]) + (n,)
        if any(x < c for x in w[ap + 1:]):
            raise InternalError(f"unexpected small value after position {ap + 1} in {w}")
        mw = _measure(w, a)
        if _min_support(u) >= mw[0]:
            raise InternalError(f"recursion on {u} does not shrink the support of {w}")
        terms = pieri_expand(Permutation._trusted(u), c, ap)
        if w not in terms:
            raise InternalError(f"{u} does not reach {w} under s_{c}...s_{ap}")
        res = dict(_times_factor(_fgp(u, a), a, ap + 1 - c, p))
        for v in terms:
            if v == w:
                continue
            v = tuple(v)
            if not (_measure(v, a) < mw):
                raise InternalError(f"termination measure did not drop from {w} to {v}")
            for k2, c2 in _fgp(v, a).items():
                s = res.get(k2, 0) - c2
                if s:
                    res[k2] = s
                else:
                    del res[k2]
    _FGP_CACHE[key] = res
    return res


def fgp_expand(w: Permutation, a: DimSeq) -> EExpansion:
    """Write the Schubert polynomial of ``w`` as an integer combination of e-products."""
    a.check(w)
    return EExpansion._raw(a, dict(_fgp(tuple(w), a)))


def iter_expansion_factors(exp: EExpansion) -> Iterator[tuple[list[tuple[int, int]], int]]:
    for key, c in exp.items():
        yield exp.factors(key), c


def evaluate_expansion(exp: EExpansion) -> Poly:
    """Multiply out an e-product expansion into a polynomial in the x variables."""
    a = exp.dims
    cache: dict[tuple[int, int], Poly] = {}
    total = Poly.constant(0)
    for key, c in exp.items():
        term = Poly.constant(c)
        for i, p in exp.factors(key):
            if (i, p) not in cache:
                cache[(i, p)] = elementary(i, a[p])
            term = term * cache[(i, p)]
        total = total + term
    return total
