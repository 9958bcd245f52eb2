import json

import pytest
from hypothesis import given, strategies as st

from qflag.errors import UnassignedVariable, VarSetMismatch
from qflag.poly import (
    Poly, Q, VarSet, X, Y, complete, divided_difference, elementary, parse_var, substitute,
    var_name,
)


def x_polys(nvars=4, max_terms=5, max_exp=3):
    mono = st.tuples(*[st.integers(0, max_exp) for _ in range(nvars)])
    terms = st.dictionaries(mono, st.integers(-5, 5), max_size=max_terms)

    def build(d):
        return Poly({
            tuple((("x", i + 1), e) for i, e in enumerate(m) if e): c for m, c in d.items()
        })

    return terms.map(build)


def swap(p, i):
    return p.swap(("x", i), ("x", i + 1))


# -- arithmetic -----------------------------------------------------------------

def test_examples():
    x1, x2 = X(1), X(2)
    assert (x1 + x2) * (x1 - x2) == x1**2 - x2**2
    assert elementary(1, 2) * elementary(2, 2) == x1**2 * x2 + x1 * x2**2
    p = x1 * x2 - 3
    assert p * 1 == p and 1 * p == p
    assert (p - p).is_zero()


def test_elementary_and_complete():
    assert elementary(0, 4) == Poly.constant(1)
    assert elementary(2, 3) == X(1) * X(2) + X(1) * X(3) + X(2) * X(3)
    assert elementary(4, 3).is_zero()
    assert complete(2, 2) == X(1) ** 2 + X(1) * X(2) + X(2) ** 2
    # sum (-1)^i e_i h_{m-i} = 0 for m > 0
    for m in range(1, 5):
        tot = Poly.constant(0)
        for i in range(m + 1):
            tot = tot + (elementary(i, 3) * complete(m - i, 3)).scale((-1) ** i)
        assert tot.is_zero()


@given(x_polys(), x_polys(), x_polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_varset_mismatch():
    vs = VarSet.x_vars(2)
    p = Poly.var(("x", 1), vs)
    with pytest.raises(VarSetMismatch):
        Poly({((("x", 3), 1),): 1}, vs)
    with pytest.raises(VarSetMismatch):
        p + Poly.var(("q", 1), VarSet.q_vars(1))


def test_presentation_varset():
    vs = VarSet.presentation((0, 2, 4, 7))
    assert ("y", 3, 3) in vs and ("y", 3, 4) not in vs
    assert ("q", 2) in vs and ("q", 3) not in vs


# -- rendering and JSON -------------------------------------------------------------

def test_text_form():
    assert str(X(1) ** 2 * X(2) - 2 * X(1) * X(3)) == "x1^2 x2 - 2 x1 x3"
    assert str(Poly.constant(0)) == "0"
    assert str(-X(1) + 1) == "-x1 + 1"
    assert str(Y(3, 1) * Q(1)) == "q1 y3_1"


def test_var_names_round_trip():
    for v in [("x", 3), ("q", 12), ("y", 2, 5)]:
        assert parse_var(var_name(v)) == v


@given(x_polys())
def test_json_round_trip(p):
    data = json.loads(json.dumps(p.to_json()))
    assert Poly.from_json(data) == p


def test_json_shape():
    assert (X(1) ** 2 * Q(2)).to_json() == [{"coeff": 1, "monomial": {"q2": 1, "x1": 2}}]


# -- divided differences -------------------------------------------------------------

def test_divided_difference_examples():
    assert divided_difference(1, X(1)) == Poly.constant(1)
    assert divided_difference(1, X(1) ** 2 * X(2)) == X(1) * X(2)
    assert divided_difference(1, X(1) * X(2) + X(3)).is_zero()


@given(x_polys(), st.integers(1, 3))
def test_divided_difference_definition(p, i):
    # (x_i - x_{i+1}) d_i(p) = p - s_i p
    dp = divided_difference(i, p)
    assert (X(i) - X(i + 1)) * dp == p - swap(p, i)


@given(x_polys(), st.integers(1, 3))
def test_divided_difference_squares_to_zero(p, i):
    assert divided_difference(i, divided_difference(i, p)).is_zero()


@given(x_polys(nvars=5))
def test_braid_relations(p):
    d = divided_difference
    for i in (1, 2, 3):
        assert d(i, d(i + 1, d(i, p))) == d(i + 1, d(i, d(i + 1, p)))
    assert d(1, d(3, p)) == d(3, d(1, p))
    assert d(1, d(4, p)) == d(4, d(1, p))


@given(x_polys(), x_polys(), st.integers(1, 3))
def test_leibniz_rule(p, q, i):
    # d_i(pq) = d_i(p) q + s_i(p) d_i(q)
    d = divided_difference
    assert d(i, p * q) == d(i, p) * q + swap(p, i) * d(i, q)


# -- substitution ----------------------------------------------------------------------

def test_substitute_examples():
    p = X(1) * X(2) + 3 * X(2)
    ident = {("x", 1): X(1), ("x", 2): X(2)}
    assert substitute(p, ident) == p
    assert substitute(Q(1) * Q(2), {("q", 1): 0, ("q", 2): 0}).is_zero()
    assert substitute(elementary(2, 2), {("x", 1): 1, ("x", 2): 2}) == Poly.constant(2)
    with pytest.raises(UnassignedVariable):
        substitute(p, {("x", 1): 1})
    assert substitute(p, {("x", 1): 2}, strict=False) == 5 * X(2)


def test_homogeneity_with_weights():
    p = Y(1, 1) * Y(2, 1) + Q(1)
    assert not p.is_homogeneous()
    assert p.is_homogeneous(lambda v: 2 if v[0] == "q" else 1)
