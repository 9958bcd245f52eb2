"""
The small quantum cohomology ring of Fl(a; C^n).

Elements are Z[q_1..q_k]-combinations of Schubert classes ``sigma_w``,
``w`` in S_n(a).  Multiplication by a special class ``s_r ... s_{a_j}``
follows the quantum Pieri rule: for each Pieri sequence ``d`` with maximum
at ``j`` whose shift permutation ``gamma_d`` lowers the length of ``u``
by exactly its own length, run the classical Pieri rule for
``s_r ... s_{b_j}`` on ``u * gamma_d`` in Fl(b), ``b = a - d``, and map the
results back.  General products expand one factor into special classes
(see :func:`qflag.classical.fgp_expand`) and apply the Pieri rule
repeatedly.

>>> from qflag.perm import DimSeq, Permutation
>>> a = DimSeq(7, (2, 4))
>>> x = QuantumElement.basis(Permutation.parse("3715246"), a)
>>> print(quantum_pieri(SpecialClass(2, 2), x))
s[4726135] + q1*q2*s[1425367] + q1*q2*s[1326457]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .classical import fgp_expand, pieri_expand
from .errors import InternalError, ParameterError, SizeError
from .perm import (
    DimSeq, Permutation, as_cycle, compose, dual, length, longest_parabolic, special_perm,
)
from .poly import Poly

__all__ = [
    "is_pieri_sequence", "pieri_inequality", "pieri_sequences", "gamma_d",
    "gamma_from_intervals", "bar_map", "length_condition", "SpecialClass",
    "QuantumElement", "quantum_pieri", "quantum_product", "gw_invariant",
    "gw_explain", "gw_special", "q_degree", "clear_caches",
]

MultiDegree = tuple


# -- Pieri sequences ----------------------------------------------------------

def is_pieri_sequence(d: Sequence[int], j: int) -> bool:
    """Unimodal with maximum at ``j``, unit steps, zero at both (virtual) ends."""
    d = tuple(d)
    k = len(d)
    if not 1 <= j <= k or any(x < 0 for x in d):
        return False
    ext = (0,) + d + (0,)
    if any(abs(ext[i] - ext[i + 1]) > 1 for i in range(k + 1)):
        return False
    return all(d[i] <= d[i + 1] for i in range(j - 1)) and all(d[i] >= d[i + 1] for i in range(j - 1, k - 1))


def pieri_inequality(d: Sequence[int], j: int) -> int:
    """``d_j + sum d_i d_{i+1} - sum d_i^2``; zero on Pieri sequences, negative otherwise."""
    d = tuple(d)
    if not 1 <= j <= len(d):
        raise ParameterError(f"position {j} outside 1..{len(d)}")
    return d[j - 1] + sum(x * y for x, y in zip(d, d[1:])) - sum(x * x for x in d)


@lru_cache(maxsize=None)
def pieri_sequences(k: int, j: int, top: int) -> tuple[MultiDegree, ...]:
    """All Pieri sequences of length ``k`` with maximum at ``j`` and ``d_j <= top``."""
    if not 1 <= j <= k:
        raise ParameterError(f"position {j} outside 1..{k}")
    out = [(0,) * k]
    for m in range(1, top + 1):
        # walking away from j each entry either repeats or drops by one
        for left in itertools.product((0, 1), repeat=j - 1):
            for right in itertools.product((0, 1), repeat=k - j):
                d = [0] * k
                d[j - 1] = m
                for t in range(j - 2, -1, -1):
                    d[t] = d[t + 1] - left[t]
                for t in range(j, k):
                    d[t] = d[t - 1] - right[t - j]
                if is_pieri_sequence(d, j):
                    out.append(tuple(d))
    return tuple(out)


def q_degree(d: Sequence[int], a: DimSeq) -> int:
    """Degree of ``q^d``: each ``q_i`` has degree ``a_{i+1} - a_{i-1}``."""
    return sum(x * (a[i + 1] - a[i - 1]) for i, x in enumerate(d, 1))


def _check_degree(d: Sequence[int], a: DimSeq) -> MultiDegree:
    d = tuple(int(x) for x in d)
    if len(d) != a.k:
        raise ParameterError(f"degree {d} should have {a.k} entries")
    if any(x < 0 for x in d):
        raise ParameterError(f"degree {d} has negative entries")
    return d


def _top_position(d: MultiDegree) -> int:
    m = max(d)
    return d.index(m) + 1


def _levels(d: MultiDegree) -> list[tuple[int, int]]:
    """``(h_p, l_p)`` for p = 1..max(d): first and last position where d equals p."""
    out = []
    for p in range(1, max(d) + 1):
        where = [i for i, x in enumerate(d, 1) if x == p]
        out.append((where[0], where[-1]))
    return out


@lru_cache(maxsize=None)
def _gamma(d: MultiDegree, a: DimSeq) -> Permutation:
    n, k = a.n, a.k
    if not any(d):
        return Permutation.identity(n)
    b = (0,) + tuple(a[i] - d[i - 1] for i in range(1, k + 1)) + (n,)
    lv = _levels(d)
    m = len(lv)
    g = list(range(n + 1))  # g[i] = gamma(i); index 0 unused
    for p in range(1, m + 1):
        h, l = lv[p - 1]
        g[b[l + 1]] = a[h]
        if p < m:
            h2, l2 = lv[p]
            ranges = [range(b[h] + 1, b[h2] + 1), range(b[l2 + 1] + 1, b[l + 1])]
        else:
            ranges = [range(b[h] + 1, b[l + 1])]
        for rg in ranges:
            for i in rg:
                g[i] = i + p
    w = g[1:]
    if sorted(w) != list(range(1, n + 1)):
        raise InternalError(f"gamma for d={d} on {a} is not a permutation: {w}")
    return Permutation._trusted(w)


def gamma_d(d: Sequence[int], a: DimSeq) -> Permutation:
    """
    The block-shift permutation of a Pieri sequence.

    Built from its values: with ``b = a - d``, ``h_p``/``l_p`` the first and
    last positions where ``d`` equals ``p``, it sends ``b_{l_p+1}`` to
    ``a_{h_p}``, adds ``p`` on ``(b_{h_p}, b_{h_{p+1}}]`` and on
    ``(b_{l_{p+1}+1}, b_{l_p+1})`` (the two ranges merge for the top level),
    and fixes everything else.  Its length is ``sum d_i (a_{i+1} - a_i)``.
    """
    d = _check_degree(d, a)
    if any(d) and not is_pieri_sequence(d, _top_position(d)):
        raise ParameterError(f"{d} is not a Pieri sequence")
    g = _gamma(d, a)
    expected = sum(x * (a[i + 1] - a[i]) for i, x in enumerate(d, 1))
    if length(g) != expected:
        raise InternalError(f"gamma_{d} has length {length(g)}, expected {expected}")
    return g


def gamma_from_intervals(d: Sequence[int], a: DimSeq) -> Permutation:
    """
    ``gamma_d`` assembled from the interval swaps ``tau_1, ..., tau_k``.

    ``tau_i`` moves ``(a_i - d_i, a_i]`` up by ``a_{i+1} - a_i`` and
    ``(a_i, a_{i+1}]`` down by ``d_i``.  Under ``(u v)(i) = u(v(i))`` the
    shift permutation equals the inverse of ``tau_k o ... o tau_1``.
    """
    d = _check_degree(d, a)
    f = list(range(1, a.n + 1))
    for i in range(1, a.k + 1):
        lo, mid, hi = a[i] - d[i - 1], a[i], a[i + 1]

        def tau(p: int) -> int:
            if lo < p <= mid:
                return p + hi - mid
            if mid < p <= hi:
                return p - d[i - 1]
            return p

        f = [tau(x) for x in f]
    return Permutation(f).inverse()


def bar_map(w: Permutation, a: DimSeq, b: Sequence[int] | DimSeq) -> Permutation:
    """
    Project ``w`` in S_n(a) to S_n(b) for ``b <= a`` entrywise.

    Stage ``i`` sorts the entries in positions ``b_i + 1 .. a_{i+1}``.
    """
    bt = tuple(b.a) if isinstance(b, DimSeq) else tuple(b)
    if len(bt) != a.k:
        raise ParameterError(f"{bt} should have {a.k} entries")
    DimSeq(a.n, bt, strict=False)
    if any(x > y for x, y in zip(bt, a.a)):
        raise ParameterError(f"{bt} is not below {a.a}")
    a.check(w)
    return Permutation._trusted(_sort_blocks(w, a, bt))


def length_condition(u: Permutation, d: Sequence[int], a: DimSeq) -> bool:
    """
    Whether ``l(u gamma_d) = l(u) - l(gamma_d)``.

    Tested by windows: ``u(a_{h_p}) > u(i)`` for ``a_{h_p} < i <= a_{l_p+1}``.
    """
    d = _check_degree(d, a)
    if not any(d):
        return True
    for h, l in _levels(d):
        top = u[a[h] - 1]
        if any(u[i - 1] > top for i in range(a[h] + 1, a[l + 1] + 1)):
            return False
    return True


# -- special classes and quantum elements ----------------------------------------

@dataclass(frozen=True)
class SpecialClass:
    """The class of ``s_r s_{r+1} ... s_{a_j}``."""

    r: int
    j: int

    def perm(self, a: DimSeq) -> Permutation:
        return special_perm(self.r, self.j, a)

    @classmethod
    def alpha(cls, i: int, j: int, a: DimSeq) -> "SpecialClass":
        """``alpha_{i,j}``, whose Schubert polynomial is e_i(x_1..x_{a_j})."""
        if not 1 <= i <= a[j]:
            raise ParameterError(f"alpha_{{{i},{j}}} needs 1 <= i <= {a[j]}")
        return cls(a[j] - i + 1, j)

    @classmethod
    def from_perm(cls, w: Permutation, a: DimSeq) -> "SpecialClass | None":
        rm = as_cycle(w)
        if rm is None or rm[1] not in a.a:
            return None
        return cls(rm[0], a.a.index(rm[1]) + 1)


def _fmt_coeff_q(c: int, d: MultiDegree) -> tuple[int, str]:
    qs = "*".join(f"q{i}" if e == 1 else f"q{i}^{e}" for i, e in enumerate(d, 1) if e)
    mag = abs(c)
    if qs:
        body = qs if mag == 1 else f"{mag}*{qs}"
        return (1 if c > 0 else -1), body + "*"
    return (1 if c > 0 else -1), ("" if mag == 1 else f"{mag}*")


class QuantumElement:
    """
    ``sum c * q^d * sigma_w``, stored as ``{(w, d): c}`` with nonzero ints.

    Treat instances as immutable.
    """

    __slots__ = ("dims", "_c")

    def __init__(self, dims: DimSeq, coeffs: Mapping[tuple[Permutation, MultiDegree], int] | None = None):
        self.dims = dims
        clean: dict = {}
        for (w, d), c in (coeffs or {}).items():
            w = dims.check(Permutation(w))
            d = _check_degree(d, dims)
            if c:
                clean[(w, d)] = clean.get((w, d), 0) + c
        self._c = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, dims: DimSeq, coeffs: dict) -> "QuantumElement":
        x = object.__new__(cls)
        x.dims = dims
        x._c = coeffs
        return x

    @classmethod
    def basis(cls, w: Permutation, a: DimSeq) -> "QuantumElement":
        a.check(w)
        return cls._raw(a, {(w, (0,) * a.k): 1})

    @classmethod
    def zero(cls, a: DimSeq) -> "QuantumElement":
        return cls._raw(a, {})

    @classmethod
    def one(cls, a: DimSeq) -> "QuantumElement":
        return cls.basis(Permutation.identity(a.n), a)

    @classmethod
    def from_terms(cls, a: DimSeq, terms: Mapping[Permutation, Poly]) -> "QuantumElement":
        """Build from ``{w: polynomial in q}``."""
        out = {}
        for w, poly in terms.items():
            for m, c in poly.terms.items():
                d = [0] * a.k
                for v, e in m:
                    if v[0] != "q" or not 1 <= v[1] <= a.k:
                        raise ParameterError(f"coefficient of {w} is not a polynomial in q1..q{a.k}")
                    d[v[1] - 1] = e
                out[(w, tuple(d))] = c
        return cls(a, out)

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict[tuple[Permutation, MultiDegree], int]:
        return dict(self._c)

    @property
    def terms(self) -> dict[Permutation, Poly]:
        """``{w: coefficient polynomial in q}``."""
        out: dict[Permutation, dict] = {}
        for (w, d), c in self._c.items():
            m = tuple((("q", i), e) for i, e in enumerate(d, 1) if e)
            out.setdefault(w, {})[m] = c
        return {w: Poly(t) for w, t in out.items()}

    def coefficient(self, w: Permutation, d: Sequence[int]) -> int:
        return self._c.get((tuple(w), tuple(d)), 0)

    def items(self) -> list[tuple[tuple[Permutation, MultiDegree], int]]:
        """Terms sorted by q-degree, then q exponents, then permutation (descending)."""
        return sorted(
            self._c.items(),
            key=lambda t: (sum(t[0][1]), tuple(-e for e in t[0][1]), tuple(-x for x in t[0][0])),
        )

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def classical_part(self) -> dict[Permutation, int]:
        """The ``q = 0`` specialization."""
        return {w: c for (w, d), c in self._c.items() if not any(d)}

    def degrees(self) -> set[int]:
        """Set of ``l(w) + deg q^d`` over all terms."""
        return {length(w) + q_degree(d, self.dims) for (w, d) in self._c}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumElement):
            return NotImplemented
        return self.dims == other.dims and self._c == other._c

    def __hash__(self):
        return hash((self.dims, frozenset(self._c.items())))

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other: "QuantumElement") -> None:
        if self.dims != other.dims:
            raise SizeError(f"elements live on {self.dims} and {other.dims}")

    def __add__(self, other: "QuantumElement") -> "QuantumElement":
        if not isinstance(other, QuantumElement):
            return NotImplemented
        self._same(other)
        out = dict(self._c)
        _accumulate(out, other._c, 1)
        return QuantumElement._raw(self.dims, out)

    def __neg__(self) -> "QuantumElement":
        return QuantumElement._raw(self.dims, {k: -c for k, c in self._c.items()})

    def __sub__(self, other: "QuantumElement") -> "QuantumElement":
        if not isinstance(other, QuantumElement):
            return NotImplemented
        self._same(other)
        out = dict(self._c)
        _accumulate(out, other._c, -1)
        return QuantumElement._raw(self.dims, out)

    def scale(self, c: int) -> "QuantumElement":
        if not c:
            return QuantumElement.zero(self.dims)
        return QuantumElement._raw(self.dims, {k: c * v for k, v in self._c.items()})

    def times_q(self, d: Sequence[int]) -> "QuantumElement":
        """Multiply by ``q^d``."""
        d = _check_degree(d, self.dims)
        return QuantumElement._raw(
            self.dims,
            {(w, tuple(x + y for x, y in zip(e, d))): c for (w, e), c in self._c.items()},
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, QuantumElement):
            return NotImplemented
        self._same(other)
        a = self.dims
        out: dict = {}
        for (u, d1), c1 in self._c.items():
            for (v, d2), c2 in other._c.items():
                # expanding the shorter class keeps the Pieri chains short
                prod = _product(u, v, a) if length(u) <= length(v) else _product(v, u, a)
                shift = tuple(x + y for x, y in zip(d1, d2))
                for (w, d), c in prod._c.items():
                    key = (w, tuple(x + y for x, y in zip(d, shift)))
                    s = out.get(key, 0) + c1 * c2 * c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return QuantumElement._raw(a, out)

    __rmul__ = __mul__

    # -- text and JSON ------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for (w, d), c in self.items():
            sign, prefix = _fmt_coeff_q(c, d)
            body = f"{prefix}s[{w.to_str()}]"
            if not parts:
                parts.append(body if sign > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if sign > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QuantumElement({self.dims}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "n": self.dims.n,
            "a": list(self.dims.a),
            "terms": [{"perm": list(w), "q": list(d), "coeff": c} for (w, d), c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QuantumElement":
        a = DimSeq(int(data["n"]), tuple(data["a"]))
        coeffs: dict = {}
        for t in data["terms"]:
            key = (Permutation(t["perm"]), tuple(int(x) for x in t["q"]))
            coeffs[key] = coeffs.get(key, 0) + int(t["coeff"])
        return cls(a, coeffs)


def _accumulate(out: dict, src: Mapping, sign: int) -> None:
    for k, c in src.items():
        s = out.get(k, 0) + sign * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)


# -- the quantum Pieri rule ---------------------------------------------------------

@lru_cache(maxsize=None)
def _pieri_basis(u: Permutation, r: int, j: int, a: DimSeq) -> tuple[tuple[Permutation, MultiDegree], ...]:
    n = a.n
    wa = a.longest
    top = a[j] - r + 1
    out = []
    for d in pieri_sequences(a.k, j, top):
        if not length_condition(u, d, a):
            continue
        g = _gamma(d, a)
        lg = sum(x * (a[i + 1] - a[i]) for i, x in enumerate(d, 1))
        b = tuple(a[i] - d[i - 1] for i in range(1, a.k + 1))
        ubar = compose(u, g)
        if any(d):
            if ubar != bar_map(u, a, b) or length(ubar) != length(u) - lg:
                raise InternalError(f"window test and projection disagree for u={u}, d={d}")
        bj = b[j - 1]
        if bj < r - 1:
            continue
        tops = {ubar} if bj == r - 1 else pieri_expand(ubar, r, bj)
        wb = longest_parabolic(DimSeq(n, b, strict=False))
        ginv = g.inverse()
        for vt in tops:
            x = compose(vt, wb)
            y = compose(x, ginv)
            if length(y) != length(x) - lg:
                continue
            w = compose(y, wa)
            if not a.contains(w):
                continue
            # the same condition read off w: l(w w_a gamma_d) = l(w w_a) + l(gamma_d)
            ww = compose(w, wa)
            if length(compose(ww, g)) != length(ww) + lg:
                raise InternalError(f"length conditions disagree for w={w}, d={d}")
            out.append((w, d))
    return tuple(out)


def quantum_pieri(alpha: SpecialClass, x: QuantumElement) -> QuantumElement:
    """``sigma_alpha * x`` for a special class ``alpha = s_r ... s_{a_j}``."""
    a = x.dims
    special_perm(alpha.r, alpha.j, a)
    out: dict = {}
    for (u, e), c in x._c.items():
        for w, d in _pieri_basis(u, alpha.r, alpha.j, a):
            key = (w, tuple(s + t for s, t in zip(e, d)))
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
    return QuantumElement._raw(a, out)


@lru_cache(maxsize=None)
def _product(u: Permutation, v: Permutation, a: DimSeq) -> QuantumElement:
    exp = fgp_expand(u, a)
    start = QuantumElement.basis(v, a)
    prefix_cache: dict[tuple, QuantumElement] = {(): start}
    out: dict = {}
    for key, c in exp.items():
        factors = exp.factors(key)  # ascending block index
        x = start
        for t in range(1, len(factors) + 1):
            pre = tuple(factors[:t])
            hit = prefix_cache.get(pre)
            if hit is None:
                i, p = factors[t - 1]
                hit = quantum_pieri(SpecialClass(a[p] - i + 1, p), x)
                prefix_cache[pre] = hit
            x = hit
        _accumulate(out, x._c, c)
    return QuantumElement._raw(a, out)


def quantum_product(u: Permutation, v: Permutation, a: DimSeq) -> QuantumElement:
    """
    ``sigma_u * sigma_v``.

    ``u`` is written as an integer combination of products of special classes
    (the same coefficients as its e-product expansion) and those products act
    on ``sigma_v`` through the quantum Pieri rule.
    """
    a.check(u)
    a.check(v)
    return _product(Permutation(u), Permutation(v), a)


# -- Gromov-Witten invariants ---------------------------------------------------------

def _sort_blocks(w: tuple, a: DimSeq, b: tuple) -> tuple:
    t = list(w)
    for i in range(1, a.k + 1):
        lo, hi = b[i - 1], a[i + 1]
        t[lo:hi] = sorted(t[lo:hi])
    return tuple(t)


@lru_cache(maxsize=None)
def _projected_side(u: Permutation, r: int, j: int, d: MultiDegree, a: DimSeq):
    """For fixed ``u``, ``alpha`` and ``d``: the length ``w-bar`` must have and the accepted duals."""
    bdims = DimSeq(a.n, tuple(a[i] - d[i - 1] for i in range(1, a.k + 1)), strict=False)
    ub = Permutation._trusted(_sort_blocks(u, a, bdims.a))
    alb = Permutation._trusted(_sort_blocks(special_perm(r, j, a), a, bdims.a))
    need = bdims.dim - length(ub) - length(alb)
    if alb.is_identity():
        return need, frozenset((ub,))
    rm = as_cycle(alb)
    if rm is None:
        raise InternalError(f"projection {alb} of a special class is not special")
    return need, pieri_expand(ub, *rm)


@lru_cache(maxsize=1 << 18)
def _projected_dual(w: Permutation, d: MultiDegree, a: DimSeq) -> tuple[int, Permutation]:
    bdims = DimSeq(a.n, tuple(a[i] - d[i - 1] for i in range(1, a.k + 1)), strict=False)
    wb = Permutation._trusted(_sort_blocks(w, a, bdims.a))
    return length(wb), compose(compose(Permutation.longest(a.n), wb), bdims.longest)


def gw_special(u: Permutation, w: Permutation, alpha: SpecialClass, d: Sequence[int], a: DimSeq) -> int:
    """
    Three-point invariant with one special class, by projecting to Fl(b), ``b = a - d``.

    Zero unless ``d`` is a Pieri sequence with maximum at ``alpha.j``; then it
    is the classical triple intersection of the projected classes on Fl(b),
    which is 0 or 1 and is read off one classical Pieri expansion.
    """
    d = _check_degree(d, a)
    al = alpha.perm(a)
    a.check(u)
    a.check(w)
    if length(u) + length(w) + length(al) != a.dim + q_degree(d, a):
        return 0
    if not is_pieri_sequence(d, alpha.j):
        return 0
    need, accepted = _projected_side(Permutation(u), alpha.r, alpha.j, d, a)
    lw, target = _projected_dual(Permutation(w), d, a)
    return int(lw == need and target in accepted)


def gw_explain(
    u: Permutation, v: Permutation, w: Permutation, d: Sequence[int], a: DimSeq, method: str = "auto"
) -> tuple[int, str]:
    """Like :func:`gw_invariant` but also names the route taken."""
    if method not in ("auto", "special", "product"):
        raise ParameterError(f"unknown method {method!r}")
    for x in (u, v, w):
        a.check(x)
    d = _check_degree(d, a)
    special = None
    if method in ("auto", "special"):
        triple = [u, v, w]
        for idx, x in enumerate(triple):
            sc = SpecialClass.from_perm(x, a)
            if sc is not None:
                special = (sc, triple[:idx] + triple[idx + 1:])
                break
        if special is None and method == "special":
            raise ParameterError("no argument is a special class")
    if length(u) + length(v) + length(w) != a.dim + q_degree(d, a):
        return 0, "degree"
    if special is not None:
        sc, rest = special
        return gw_special(rest[0], rest[1], sc, d, a), "special"
    s1, s2, s3 = sorted((u, v, w), key=lambda p: (length(p), tuple(p)))
    prod = quantum_product(s1, s2, a)
    return prod.coefficient(dual(s3, a), d), "product"


def gw_invariant(
    u: Permutation, v: Permutation, w: Permutation, d: Sequence[int], a: DimSeq, method: str = "auto"
) -> int:
    """
    ``<Omega_u, Omega_v, Omega_w>_d`` on Fl(a; C^n).

    ``method="product"`` extracts the coefficient of ``q^d sigma_{w_0 w w_a}``
    from ``sigma_u * sigma_v`` (after permuting roles so the shortest class is
    expanded); ``"special"`` requires a special argument; ``"auto"`` prefers
    the special-class route when available.
    """
    return gw_explain(u, v, w, d, a, method)[0]


def clear_caches() -> None:
    _pieri_basis.cache_clear()
    _projected_side.cache_clear()
    _projected_dual.cache_clear()
    _product.cache_clear()
    _gamma.cache_clear()
