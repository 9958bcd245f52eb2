"""
Sparse multivariate polynomials with exact integer coefficients.

A variable is a tuple naming its family and indices: ``("x", i)`` for x_i,
``("y", p, i)`` for y^p_i and ``("q", i)`` for q_i.  A monomial is a sorted
tuple of ``(variable, exponent)`` pairs with positive exponents, so the
exponent vector is stored sparsely.  Coefficients are Python ints.

>>> x1, x2 = X(1), X(2)
>>> print((x1 + x2) * (x1 - x2))
x1^2 - x2^2
>>> print(divided_difference(1, x1**2 * x2))
x1 x2
"""

from __future__ import annotations

import re
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import ParameterError, QFlagError, UnassignedVariable, VarSetMismatch

__all__ = [
    "Var", "Monomial", "VarSet", "Poly", "X", "Y", "Q",
    "var_name", "parse_var", "elementary", "complete",
    "divided_difference", "substitute",
]

Var = tuple
Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by variable

_FAMILIES = ("q", "x", "y")


def var_name(v: Var) -> str:
    if v[0] == "y":
        return f"y{v[1]}_{v[2]}"
    return f"{v[0]}{v[1]}"


_VAR_RE = re.compile(r"^(?:([xq])(\d+)|y(\d+)_(\d+))$")


def parse_var(name: str) -> Var:
    m = _VAR_RE.match(name)
    if not m:
        raise QFlagError(f"unknown variable name {name!r}")
    if m.group(1):
        return (m.group(1), int(m.group(2)))
    return ("y", int(m.group(3)), int(m.group(4)))


class VarSet(frozenset):
    """A declared set of variables; polynomials built over it may only use these."""

    @classmethod
    def x_vars(cls, n: int) -> "VarSet":
        return cls(("x", i) for i in range(1, n + 1))

    @classmethod
    def q_vars(cls, k: int) -> "VarSet":
        return cls(("q", i) for i in range(1, k + 1))

    @classmethod
    def presentation(cls, bounds: tuple[int, ...]) -> "VarSet":
        """y^p_i and q_j variables for the flag variety with ``bounds = (0, a_1, .., a_k, n)``."""
        k = len(bounds) - 2
        ys = [("y", p, i) for p in range(1, k + 2) for i in range(1, bounds[p] - bounds[p - 1] + 1)]
        return cls(ys + [("q", j) for j in range(1, k + 1)])


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_key(m: Monomial):
    # graded, then lexicographic with earlier variables to higher powers first
    return (-sum(e for _, e in m), tuple((v, -e) for v, e in m))


Scalar = int
PolyLike = Union["Poly", int]


class Poly:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero ints."""

    __slots__ = ("_terms", "varset", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, varset: VarSet | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = clean.get(m, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        if varset is not None:
            for m in clean:
                for v, _ in m:
                    if v not in varset:
                        raise VarSetMismatch(f"variable {var_name(v)} is not declared")
        self._terms = clean
        self.varset = varset
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, varset: VarSet | None = None) -> "Poly":
        # terms must already be free of zeros
        p = object.__new__(cls)
        p._terms = terms
        p.varset = varset
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int, varset: VarSet | None = None) -> "Poly":
        return cls._raw({(): c} if c else {}, varset)

    @classmethod
    def var(cls, v: Var, varset: VarSet | None = None) -> "Poly":
        return cls({((v, 1),): 1}, varset)

    @classmethod
    def monomial(cls, exps: Mapping[Var, int], coeff: int = 1) -> "Poly":
        m = tuple(sorted((v, e) for v, e in exps.items() if e))
        return cls({m: coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or list(self._terms) == [()]

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e for _, e in m) for m in self._terms)

    def is_homogeneous(self, weights: Callable[[Var], int] | None = None) -> bool:
        if weights is None:
            degs = {sum(e for _, e in m) for m in self._terms}
        else:
            degs = {sum(weights(v) * e for v, e in m) for m in self._terms}
        return len(degs) <= 1

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: PolyLike) -> "Poly":
        if isinstance(other, Poly):
            if self.varset is not None and other.varset is not None and self.varset != other.varset:
                raise VarSetMismatch("polynomials are declared over different variable sets")
            return other
        if isinstance(other, int):
            return Poly.constant(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def _vs(self, other: "Poly") -> VarSet | None:
        return self.varset if self.varset is not None else other.varset

    def __add__(self, other: PolyLike) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out, self._vs(other))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()}, self.varset)

    def __sub__(self, other: PolyLike) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "Poly":
        return (-self) + other

    def scale(self, c: int) -> "Poly":
        if not c:
            return Poly._raw({}, self.varset)
        return Poly._raw({m: c * v for m, v in self._terms.items()}, self.varset)

    def __mul__(self, other: PolyLike) -> "Poly":
        if isinstance(other, int):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out, self._vs(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ParameterError("only non-negative integer powers")
        result = Poly.constant(1, self.varset)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- variable manipulation ---------------------------------------------

    def swap(self, v1: Var, v2: Var) -> "Poly":
        """Exchange two variables."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            e1, e2 = d.pop(v1, 0), d.pop(v2, 0)
            if e2:
                d[v1] = e2
            if e1:
                d[v2] = e1
            out[tuple(sorted(d.items()))] = c
        return Poly._raw(out, self.varset)

    def coefficient(self, exps: Mapping[Var, int]) -> int:
        m = tuple(sorted((v, e) for v, e in exps.items() if e))
        return self._terms.get(m, 0)

    # -- text and JSON ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = " ".join(var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c, "monomial": {var_name(v): e for v, e in m}}
            for m, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "Poly":
        terms: dict = {}
        for entry in data:
            m = tuple(sorted((parse_var(k), int(e)) for k, e in entry["monomial"].items() if int(e)))
            terms[m] = terms.get(m, 0) + int(entry["coeff"])
        return cls(terms)


def X(i: int) -> Poly:
    return Poly.var(("x", i))


def Y(p: int, i: int) -> Poly:
    return Poly.var(("y", p, i))


def Q(i: int) -> Poly:
    return Poly.var(("q", i))


def elementary(i: int, variables: int | Iterable[Var]) -> Poly:
    """e_i of the given variables; an int ``m`` means x_1..x_m."""
    if i < 0:
        raise ParameterError("degree must be non-negative")
    vs = [("x", t) for t in range(1, variables + 1)] if isinstance(variables, int) else sorted(variables)
    if i == 0:
        return Poly.constant(1)
    return Poly._raw({tuple((v, 1) for v in c): 1 for c in combinations(vs, i)})


def complete(i: int, variables: int | Iterable[Var]) -> Poly:
    """h_i of the given variables; an int ``m`` means x_1..x_m."""
    if i < 0:
        raise ParameterError("degree must be non-negative")
    vs = [("x", t) for t in range(1, variables + 1)] if isinstance(variables, int) else sorted(variables)
    if i == 0:
        return Poly.constant(1)
    out = {}
    for c in combinations_with_replacement(vs, i):
        d: dict = {}
        for v in c:
            d[v] = d.get(v, 0) + 1
        out[tuple(sorted(d.items()))] = 1
    return Poly._raw(out)


def divided_difference(i: int, p: Poly) -> Poly:
    """
    ``(p - s_i p) / (x_i - x_{i+1})``.

    Works term by term: with ``A``, ``B`` the exponents of x_i, x_{i+1},
    ``(x_i^A x_{i+1}^B - x_i^B x_{i+1}^A) / (x_i - x_{i+1})`` is
    ``sign * (x_i x_{i+1})^min * h_{|A-B|-1}(x_i, x_{i+1})``.
    """
    if i < 1:
        raise ParameterError(f"no divided difference at position {i}")
    vi, vj = ("x", i), ("x", i + 1)
    out: dict = {}
    get = out.get
    for m, c in p._terms.items():
        # x_i and x_{i+1} are adjacent in the variable order, so the monomial
        # splits as head + (x_i, x_{i+1} part) + tail without re-sorting
        lo_idx = 0
        L = len(m)
        while lo_idx < L and m[lo_idx][0] < vi:
            lo_idx += 1
        hi_idx = lo_idx
        A = B = 0
        if hi_idx < L and m[hi_idx][0] == vi:
            A = m[hi_idx][1]
            hi_idx += 1
        if hi_idx < L and m[hi_idx][0] == vj:
            B = m[hi_idx][1]
            hi_idx += 1
        if A == B:
            continue
        head, tail = m[:lo_idx], m[hi_idx:]
        if A > B:
            sign, lo, gap = c, B, A - B
        else:
            sign, lo, gap = -c, A, B - A
        for t in range(gap):
            ea, eb = lo + gap - 1 - t, lo + t
            if ea and eb:
                key = head + ((vi, ea), (vj, eb)) + tail
            elif ea:
                key = head + ((vi, ea),) + tail
            elif eb:
                key = head + ((vj, eb),) + tail
            else:
                key = head + tail
            v = get(key, 0) + sign
            if v:
                out[key] = v
            else:
                del out[key]
    return Poly._raw(out, p.varset)


def substitute(p: Poly, assignment: Mapping[Var, PolyLike], strict: bool = True) -> Poly:
    """
    Replace variables by polynomials (or ints).

    With ``strict`` every variable of ``p`` must be assigned; otherwise
    unassigned variables are kept as they are.
    """
    result = Poly.constant(0)
    powers: dict = {}

    def power(v: Var, e: int) -> Poly:
        key = (v, e)
        if key not in powers:
            val = assignment[v]
            val = val if isinstance(val, Poly) else Poly.constant(val)
            powers[key] = val ** e
        return powers[key]

    for m, c in p._terms.items():
        term = Poly.constant(c)
        for v, e in m:
            if v in assignment:
                term = term * power(v, e)
            elif strict:
                raise UnassignedVariable(f"no value for {var_name(v)}")
            else:
                term = term * Poly._raw({((v, e),): 1})
            if not term:
                break
        result = result + term
    return result
