"""
Acceptance criteria 1-8.

Each test clears every memo table, runs one criterion under its time limit
and prints a single ``criterion N ...: PASS|FAIL`` line to the terminal.
"""

import itertools
import random
import time
from contextlib import contextmanager

import qflag
from qflag.classical import fgp_expand, pieri_expand
from qflag.oracle import classical_product_oracle
from qflag.perm import DimSeq, Permutation, all_dimseqs, compose, dual, length, special_perm
from qflag.poly import Q, Y
from qflag.presentation import quantum_E, quantum_giambelli, relations_check
from qflag.quantum import (
    QuantumElement, SpecialClass, _projected_dual, _projected_side, bar_map, gamma_d,
    gw_invariant, is_pieri_sequence, length_condition, pieri_inequality, pieri_sequences,
    q_degree, quantum_pieri, quantum_product,
)

P = Permutation.parse
A = DimSeq(7, (2, 4))


@contextmanager
def criterion(capsys, number, title, limit):
    qflag.clear_caches()
    start = time.perf_counter()
    passed = False
    try:
        yield
        passed = True
    finally:
        elapsed = time.perf_counter() - start
        in_time = elapsed < limit
        verdict = "PASS" if passed and in_time else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {number} ({title}): {verdict} in {elapsed:.2f}s, limit {limit}s")
    assert in_time, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


def elem(*terms):
    return QuantumElement(A, {(P(w), d): c for w, d, c in terms})


def test_criterion_1_e_expansion(capsys):
    with criterion(capsys, 1, "e-product expansion of 1536247", 1):
        exp = fgp_expand(P("1536247"), A)
        assert exp.coeffs == {(0, 1, 0, 2, 3): 1, (0, 0, 0, 3, 3): -1, (0, 1, 0, 1, 4): -1}


def test_criterion_2_quantum_pieri_example(capsys):
    with criterion(capsys, 2, "quantum Pieri on 3715246", 1):
        u = P("3715246")
        got = quantum_pieri(SpecialClass(2, 2), QuantumElement.basis(u, A))
        assert got == elem(("4726135", (0, 0), 1), ("1425367", (1, 1), 1), ("1326457", (1, 1), 1))
        # the degree (1,1) contribution: u gamma_d, then s2 s3 on Fl(1,3)
        assert length_condition(u, (1, 1), A)
        ubar = compose(u, gamma_d((1, 1), A))
        assert ubar == P("3152467") == bar_map(u, A, (1, 3))
        assert pieri_expand(ubar, 2, 3) == {P("4251367"), P("3261457"), P("4162357")}


def test_criterion_3_quantum_elementary(capsys):
    with criterion(capsys, 3, "quantum elementary polynomial E^3_5", 1):
        expected = (
            Y(3, 1) * (Y(2, 2) * Y(1, 2) - Q(1))
            + Y(3, 2) * (Y(2, 1) * Y(1, 2) + Y(2, 2) * Y(1, 1))
            + Y(3, 3) * (Y(1, 2) + Y(2, 1) * Y(1, 1) + Y(2, 2))
            + Q(2)
        )
        assert quantum_E(5, 3, A) == expected


def test_criterion_4_product_chain(capsys):
    with criterion(capsys, 4, "six-step product chain and GW invariant", 5):
        chain = [
            elem(("3417256", (0, 0), 1)),
            elem(("4512367", (0, 1), 1)),
            elem(("5623147", (0, 1), 1)),
            elem(("6734125", (0, 1), 1)),
            elem(("3746125", (1, 1), 1), ("1734256", (1, 2), 1)),
            elem(("3467125", (2, 1), 1), ("1436257", (2, 2), 1), ("1347256", (2, 2), 1),
                 ("1234567", (2, 3), 1)),
        ]
        assert fgp_expand(P("6745123"), A).coeffs == {(2, 2, 4, 4, 4): 1}
        factors = [SpecialClass.alpha(4, 2, A)] * 3 + [SpecialClass.alpha(2, 1, A)] * 2
        x = chain[0]
        for f, expected in zip(factors, chain[1:]):
            x = quantum_pieri(f, x)
            assert x == expected
        assert quantum_product(P("6745123"), P("3417256"), A) == chain[-1]
        assert gw_invariant(P("6745123"), P("6745123"), P("3417256"), (2, 3), A) == 1


def test_criterion_5_relations(capsys):
    with criterion(capsys, 5, "presentation relations vanish", 60):
        for n, a in [(2, (1,)), (3, (1, 2)), (4, (2,)), (4, (1, 3)), (4, (1, 2, 3)), (7, (2, 4))]:
            report = relations_check(DimSeq(n, a))
            assert report.ok, report.render()


def test_criterion_6_oracle_equivalence(capsys):
    with criterion(capsys, 6, "q=0 products equal the divided-difference oracle", 120):
        for n in range(2, 5):
            for a in all_dimseqs(n):
                els = list(a.elements())
                for u in els:
                    for v in els:
                        assert quantum_product(u, v, a).classical_part() == classical_product_oracle(u, v, a)
        rng = random.Random(7)
        els = list(A.elements())
        for _ in range(200):
            u, v = rng.choice(els), rng.choice(els)
            assert quantum_product(u, v, A).classical_part() == classical_product_oracle(u, v, A)


def _check_graded(x, degree):
    assert x.degrees() <= {degree}


def _associativity(rng, a, trials):
    els = list(a.elements())
    for _ in range(trials):
        u, v, w = (rng.choice(els) for _ in range(3))
        U, V, W = (QuantumElement.basis(t, a) for t in (u, v, w))
        uv, vw = U * V, V * W
        left, right = uv * W, U * vw
        _check_graded(uv, length(u) + length(v))
        _check_graded(vw, length(v) + length(w))
        _check_graded(left, length(u) + length(v) + length(w))
        assert left == right


def _special_route_exhaustive(nmax):
    """
    Special-class GW invariants against coefficients of quantum Pieri products.

    For every variety with n <= nmax, special class, u and Pieri sequence d,
    the set of w with value 1 on the special route is collected through an
    index of projected duals (the same test the route performs per triple),
    then compared with the nonzero coefficients of sigma_alpha * sigma_u.
    Each positive is also confirmed through the public gw_invariant.
    """
    for n in range(2, nmax + 1):
        for a in all_dimseqs(n):
            els = list(a.elements())
            duals = {w: dual(w, a) for w in els}
            lengths = {w: length(w) for w in els}
            for j in range(1, a.k + 1):
                seqs = pieri_sequences(a.k, j, a[j])
                index = {}
                for d in seqs:
                    inv: dict = {}
                    for w in els:
                        lw, target = _projected_dual(w, d, a)
                        inv.setdefault(target, []).append((w, lw))
                    index[d] = inv
                for r in range(1, a[j] + 1):
                    al = special_perm(r, j, a)
                    sc = SpecialClass(r, j)
                    for u in els:
                        prod = quantum_pieri(sc, QuantumElement.basis(u, a))
                        assert all(c == 1 for c in prod.coeffs.values())
                        expected = {(duals[w], d) for (w, d) in prod.coeffs}
                        got = set()
                        for d in seqs:
                            need, accepted = _projected_side(u, r, j, d, a)
                            want = a.dim + q_degree(d, a) - lengths[u] - length(al)
                            for target in accepted:
                                for w, lw in index[d].get(target, ()):
                                    if lw == need and lengths[w] == want:
                                        got.add((w, d))
                        assert got == expected, (a, r, j, u)
                        for w, d in got:
                            assert gw_invariant(al, u, w, d, a, method="special") == 1


def test_criterion_7_property_suites(capsys):
    with criterion(capsys, 7, "associativity, grading, structural properties, special-class route", 600):
        rng = random.Random(11)
        for n, a in [(4, (1, 2, 3)), (5, (2,)), (7, (2, 4))]:
            _associativity(rng, DimSeq(n, a), 100)

        # Pieri-sequence inequality, exhaustive for k <= 4 and entries <= 4
        for k in range(1, 5):
            for d in itertools.product(range(5), repeat=k):
                for j in range(1, k + 1):
                    val = pieri_inequality(d, j)
                    assert (val >= 0) == is_pieri_sequence(d, j)
                    assert val <= 0

        # length condition versus the projection, exhaustive for n <= 6
        for n in range(2, 7):
            for a in all_dimseqs(n):
                for d in {d for j in range(1, a.k + 1) for d in pieri_sequences(a.k, j, a[j])}:
                    g = gamma_d(d, a)
                    b = tuple(x - y for x, y in zip(a.a, d))
                    for u in a.elements():
                        assert length_condition(u, d, a) == (compose(u, g) == bar_map(u, a, b))

        # interval bound on 500 random Pieri expansions
        for _ in range(500):
            n = rng.randint(3, 8)
            m = rng.randint(1, n - 2)
            head = rng.sample(range(1, n + 1), m)
            u = Permutation(head + sorted(set(range(1, n + 1)) - set(head)))
            r = rng.randint(1, m)
            for w in pieri_expand(u, r, m):
                for j in range(m + 2, n + 1):
                    assert u(j - 1) < w(j) <= u(j)

        _special_route_exhaustive(6)


def test_criterion_8_quantum_giambelli(capsys):
    with criterion(capsys, 8, "quantum Giambelli evaluates to sigma_w", 60):
        for n in range(2, 6):
            for a in all_dimseqs(n):
                for w in a.elements():
                    got = quantum_giambelli(w, a).evaluate()
                    assert got == QuantumElement.basis(w, a)
