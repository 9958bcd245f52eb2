"""
The presentation of the quantum ring by quantum elementary polynomials.

``quantum_E(i, j, a)`` is the polynomial ``E^j_i`` in the variables
``y^p_r`` (Chern roots of the successive quotient bundles, p = 1..k+1,
r = 1..a_p - a_{p-1}) and ``q_1..q_k``.  Under ``y^j_m -> phi_chern(m, j)``
the ``E^j_i`` with ``j <= k`` become the special classes
``sigma_{alpha_{i,j}}`` while ``E^{k+1}_1..E^{k+1}_n`` become zero;
:func:`relations_check` verifies the latter by direct computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .classical import EExpansion, fgp_expand
from .errors import InternalError, ParameterError
from .perm import DimSeq, Permutation, alpha_perm, beta_perm, compose, length
from .poly import Poly, Q, Y
from .quantum import QuantumElement, SpecialClass, quantum_pieri

__all__ = [
    "quantum_E", "phi_chern", "QuantumGiambelli", "quantum_giambelli",
    "evaluate_presentation", "RelationsReport", "relations_check", "clear_caches",
]


@lru_cache(maxsize=None)
def _E(i: int, j: int, a: DimSeq) -> Poly:
    if i == 0 and j == 0:
        return Poly.constant(1)
    if j < 0 or i < 0 or j > a.k + 1 or i > a[j]:
        return Poly.constant(0)
    width = a[j] - a[j - 1]
    out = _E(i, j - 1, a)
    for r in range(1, width + 1):
        out = out + Y(j, r) * _E(i - r, j - 1, a)
    if j >= 2:
        lower = _E(i - a[j] + a[j - 2], j - 2, a)
        if not lower.is_zero():
            sign = -1 if width % 2 == 0 else 1
            out = out + (Q(j - 1) * lower).scale(sign)
    return out


def quantum_E(i: int, j: int, a: DimSeq) -> Poly:
    """
    ``E^j_i`` for ``0 <= j <= k + 1``; zero outside ``0 <= i <= a_j``.

    >>> a = DimSeq(7, (2, 4))
    >>> print(quantum_E(2, 1, a))
    y1_2
    """
    return _E(i, j, a)


def phi_chern(i: int, j: int, a: DimSeq) -> QuantumElement:
    """
    Image of the Chern class ``c_i`` of the ``j``-th quotient bundle.

    ``sum_p (-1)^p sigma_{beta_{p,j-1} alpha_{i-p,j}}`` with the conventions
    ``beta_{p,0} = 0`` and ``alpha_{i,k+1} = 0`` for positive indices.
    """
    if not 1 <= j <= a.k + 1:
        raise ParameterError(f"block index {j} not in 1..{a.k + 1}")
    if not 1 <= i <= a[j] - a[j - 1]:
        raise ParameterError(f"Chern degree {i} not in 1..{a[j] - a[j - 1]}")
    out: dict = {}
    zero = (0,) * a.k
    for p in range(i + 1):
        if p > 0 and j == 1:
            continue
        if i - p > 0 and j == a.k + 1:
            continue
        if a[j - 1] + p > a.n or i - p > a[j]:
            continue
        w = compose(beta_perm(p, j - 1, a), alpha_perm(i - p, j, a))
        if length(w) != i or not a.contains(w):
            raise InternalError(f"beta_{p},{j - 1} alpha_{i - p},{j} is not a class of degree {i}")
        out[(w, zero)] = out.get((w, zero), 0) + (-1) ** p
    return QuantumElement._raw(a, {key: c for key, c in out.items() if c})


def evaluate_presentation(p: Poly, a: DimSeq) -> QuantumElement:
    """Image of a polynomial in the ``y`` and ``q`` variables in the quantum ring."""
    images: dict[tuple, QuantumElement] = {}
    for v in p.variables():
        if v[0] == "y":
            images[v] = phi_chern(v[2], v[1], a)
        elif v[0] != "q" or not 1 <= v[1] <= a.k:
            raise ParameterError(f"variable {v} does not belong to the presentation")
    one = QuantumElement.one(a)
    # products of y-prefixes are shared between monomials
    prefix: dict[tuple, QuantumElement] = {(): one}
    total = QuantumElement.zero(a)
    for m, c in p.items():
        ys = tuple(ve for ve in m if ve[0][0] == "y")
        d = [0] * a.k
        for v, e in m:
            if v[0] == "q":
                d[v[1] - 1] = e
        flat = tuple(v for v, e in ys for _ in range(e))
        x = one
        for t in range(1, len(flat) + 1):
            key = flat[:t]
            hit = prefix.get(key)
            if hit is None:
                hit = x * images[flat[t - 1]]
                prefix[key] = hit
            x = hit
        total = total + x.times_q(d).scale(c)
    return total


@dataclass(frozen=True)
class QuantumGiambelli:
    """
    A quantum Schubert class written in the ``E^j_i``.

    The coefficients are those of the classical e-product expansion; the
    factor ``e_i(x_1..x_{a_p})`` is read as ``E^p_i``.
    """

    expansion: EExpansion

    @property
    def dims(self) -> DimSeq:
        return self.expansion.dims

    def render(self) -> str:
        return self.expansion.render("E")

    __str__ = render

    def to_poly(self) -> Poly:
        """Multiply out into a polynomial in the ``y`` and ``q`` variables."""
        a = self.dims
        total = Poly.constant(0)
        for key, c in self.expansion.items():
            term = Poly.constant(c)
            for i, p in self.expansion.factors(key):
                term = term * quantum_E(i, p, a)
            total = total + term
        return total

    def evaluate(self) -> QuantumElement:
        """Each ``E^p_i`` acts as ``sigma_{alpha_{i,p}}`` through the quantum Pieri rule."""
        a = self.dims
        start = QuantumElement.one(a)
        total = QuantumElement.zero(a)
        for key, c in self.expansion.items():
            x = start
            for i, p in self.expansion.factors(key):
                x = quantum_pieri(SpecialClass.alpha(i, p, a), x)
            total = total + x.scale(c)
        return total

    def to_json(self) -> dict:
        data = self.expansion.to_json()
        data["symbol"] = "E"
        return data


def quantum_giambelli(w: Permutation, a: DimSeq) -> QuantumGiambelli:
    """The quantum Giambelli data of ``sigma_w``; shares the e-expansion memo."""
    return QuantumGiambelli(fgp_expand(w, a))


@dataclass
class RelationsReport:
    """Residuals of the presentation relations ``E^{k+1}_i`` in the quantum ring."""

    dims: DimSeq
    residuals: dict[int, QuantumElement] = field(default_factory=dict)
    specials: dict[tuple[int, int], bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values()) and all(self.specials.values())

    def render(self) -> str:
        k = self.dims.k
        lines = []
        for i, r in sorted(self.residuals.items()):
            lines.append(f"E[{self.dims.n}]_{i} -> {r}")
        bad = [key for key, good in sorted(self.specials.items()) if not good]
        for i, j in bad:
            lines.append(f"E[{self.dims[j]}]_{i} does not map to its special class")
        if self.ok:
            lines.append("all relations vanish")
        else:
            lines.append(f"relations fail on {self.dims} (k={k})")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.dims.n,
            "a": list(self.dims.a),
            "ok": self.ok,
            "residuals": {str(i): r.to_json()["terms"] for i, r in sorted(self.residuals.items())},
        }


def relations_check(a: DimSeq, check_specials: bool = True) -> RelationsReport:
    """
    Evaluate ``E^{k+1}_1 .. E^{k+1}_n`` in the quantum ring.

    With ``check_specials`` also confirm that ``E^j_i`` (``j <= k``) evaluates
    to ``sigma_{alpha_{i,j}}``.
    """
    report = RelationsReport(a)
    for i in range(1, a.n + 1):
        report.residuals[i] = evaluate_presentation(quantum_E(i, a.k + 1, a), a)
    if check_specials:
        for j in range(1, a.k + 1):
            for i in range(1, a[j] + 1):
                got = evaluate_presentation(quantum_E(i, j, a), a)
                report.specials[(i, j)] = got == QuantumElement.basis(alpha_perm(i, j, a), a)
    return report


def clear_caches() -> None:
    _E.cache_clear()
