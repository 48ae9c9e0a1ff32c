"""Relation matrices, Vandermonde minors, straightening and its oracle."""

import itertools
import random
from fractions import Fraction

import pytest

from _oracles import naive_det
from fiblat import (
    FibMonomial,
    FockBasisState,
    FockVector,
    QuadScalar,
    VertexMode,
    annihilation_threshold,
    apply_mode,
    apply_monomial,
    enumerate_basis,
    enumerate_fib_monomials,
    expand_in_fib_basis,
    independence_and_span_check,
    relation_matrix,
    rising_factorial,
    solve_near_pairs,
    straighten_monomial,
    vandermonde_det,
)
from fiblat.linalg import AmbiguousSolve, InconsistentSolve, solve_exact
from fiblat.straighten import (
    DIAGONAL,
    OFFDIAGONAL,
    classify_pair,
    evaluate_fib_polynomial,
    pair_for_column,
)


def test_rising_factorial_values():
    assert rising_factorial(3, 2) == 12
    assert rising_factorial(-1, 3) == 0  # the factor (x + 1) vanishes
    assert rising_factorial(7, 1) == 7
    assert rising_factorial(Fraction(1, 2), 0) == 1
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)


def test_relation_matrix_even_first_row():
    row = relation_matrix(2, DIAGONAL, 5, 6)[0]
    assert row == [Fraction(1, 2)] + [1] * 5
    assert relation_matrix(2, OFFDIAGONAL, -3, 4)[0] == [1, 1, 1, 1]


def test_relation_matrix_even_higher_rows():
    n = -1
    mat = relation_matrix(4, DIAGONAL, n, 5)
    N = 2
    for k in range(1, 5):
        expected = rising_factorial(N + n + k, 2) + rising_factorial(N + n - k, 2)
        assert mat[1][k] == expected
    assert mat[1][0] == rising_factorial(N + n, 2)


def test_relation_matrix_odd_row_is_2k():
    # single row (H_1(n+k) - H_1(n-k))_k = (2k)_k for every center n
    for n in (-4, 0, 3):
        assert relation_matrix(3, DIAGONAL, n, 5) == [[2, 4, 6, 8, 10]]


def test_vandermonde_examples():
    assert vandermonde_det("even", [0, 1]) == 1
    assert vandermonde_det("odd", [1, 2]) == 6
    assert vandermonde_det("even", [0, 1, 2]) == 12
    matrix = [[Fraction(x) ** p for p in (0, 2, 4)] for x in (0, 1, 2)]
    assert naive_det(matrix) == 12


def test_vandermonde_against_cofactor_oracle():
    rng = random.Random(7)
    for kind in ("even", "odd"):
        for size in (1, 2, 3, 4):
            pts = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(size)]
            powers = [2 * t for t in range(size)] if kind == "even" else [
                2 * t + 1 for t in range(size)
            ]
            matrix = [[x**p for p in powers] for x in pts]
            assert vandermonde_det(kind, pts) == naive_det(matrix)


def test_vandermonde_nonzero_at_standard_points():
    for size in range(1, 6):
        for offset in (Fraction(0), Fraction(1), Fraction(1, 2)):
            pts = [i + offset for i in range(size)]
            if 0 in pts:
                # the odd-kind matrix has a zero column at x = 0
                assert vandermonde_det("even", pts) != 0 or size == 0
            else:
                assert vandermonde_det("even", pts) != 0
                assert vandermonde_det("odd", pts) != 0


def test_solve_near_pairs_even_diagonal():
    # e_n e_n = -2 (e_{n-1}e_{n+1} + e_{n-2}e_{n+2} + ...)
    rw = solve_near_pairs(2, DIAGONAL, -2, 4)
    assert rw.expansions[0] == tuple(
        (((-2 - t, -2 + t), Fraction(-2)) for t in range(1, 5))
    )


def test_solve_near_pairs_odd_diagonal():
    # theta_{n-1} theta_{n+1} = -sum_{k>=2} k theta_{n-k} theta_{n+k}
    rw = solve_near_pairs(3, DIAGONAL, 0, 3)
    assert rw.expansions[0] == tuple(
        (((-k, k), Fraction(-k)) for k in range(2, 5))
    )


def test_near_pair_rewrite_sound_in_fock():
    # both sides applied to basis vectors agree exactly; the truncation at 8
    # far columns covers every term that can act on these small states
    rng = random.Random(3)
    for D in (2, 3, 4, 5):
        for family in (DIAGONAL, OFFDIAGONAL):
            for _ in range(6):
                n = rng.randint(-4, 1)
                rw = solve_near_pairs(D, family, n, 8)
                col = rng.randrange(len(rw.expansions))
                a, b = pair_for_column(D, family, n, col)
                j = rng.choice([-1, 0])
                for parts in [(), (1,)]:
                    v = FockVector(D, {FockBasisState(j, parts): QuadScalar(1, 0, D)})
                    lhs = apply_mode(
                        VertexMode(1, a, D), apply_mode(VertexMode(1, b, D), v)
                    )
                    rhs = FockVector.zero(D)
                    for (a2, b2), c in rw.expansions[col]:
                        rhs = rhs + apply_mode(
                            VertexMode(1, a2, D), apply_mode(VertexMode(1, b2, D), v)
                        ).scale(QuadScalar(c, 0, D))
                    assert lhs == rhs, (D, family, n, col, j, parts)


def test_classify_pair():
    assert classify_pair(2, -2, -2) == (DIAGONAL, -2, 0)
    assert classify_pair(2, -3, -2) == (OFFDIAGONAL, -3, 0)
    assert classify_pair(2, -3, -1) is None  # gap 2 > 2N - 1 = 1: already far
    assert classify_pair(3, -2, 0) == (DIAGONAL, -1, 0)
    assert classify_pair(3, -1, 0) == (OFFDIAGONAL, -1, 0)
    assert classify_pair(5, -4, 0) == (DIAGONAL, -2, 1)


def test_straighten_worked_cases():
    poly = straighten_monomial(2, 0, [-2, -2])
    assert len(poly.terms) == 1
    mono, coeff = next(iter(poly.terms.items()))
    assert mono.indices == (-3, -1) and coeff == -2
    assert straighten_monomial(2, 0, [-1, -2]).is_zero()
    fixed = straighten_monomial(2, 0, [-3, -1])
    assert list(fixed.terms) == [FibMonomial((-3, -1), 1)]
    assert fixed.terms[FibMonomial((-3, -1), 1)] == 1


def test_straighten_is_identity_on_fibonacci_monomials():
    # the gap parameter is D - 1 for both parities: 2N - 1 and 2N
    for D, j in [(2, 0), (3, 0), (4, -1)]:
        T = annihilation_threshold(D, j)
        l = D - 1
        for m, dq in [(1, -T), (2, -2 * T + l + 1), (2, -2 * T + l + 3)]:
            for mono in enumerate_fib_monomials(l, T, D % 2 == 1, m, dq):
                out = straighten_monomial(D, j, list(mono.indices))
                assert list(out.terms) == [mono]
                assert out.terms[mono] == 1


def test_straighten_agrees_with_fock_and_oracle():
    rng = random.Random(2718)
    for D in (2, 3, 4):
        even = D % 2 == 0
        for j in (-1, 0, 1):
            T = annihilation_threshold(D, j)
            rng_pool = range(T - 4, T + 2)
            combos = (
                itertools.combinations_with_replacement(rng_pool, 2)
                if even
                else itertools.combinations(rng_pool, 2)
            )
            for mono in combos:
                poly = straighten_monomial(D, j, list(mono))
                direct = apply_monomial(D, j, sorted(mono))
                assert evaluate_fib_polynomial(poly, D, j) == direct
                if not direct.is_zero():
                    m, d = direct.homogeneous_bidegree()
                    assert expand_in_fib_basis(D, j, direct, m, d) == poly


def test_straighten_output_respects_gap():
    for D in (2, 3, 4, 5):
        even = D % 2 == 0
        T = annihilation_threshold(D, 0)
        pool = range(T - 4, T + 1)
        combos = (
            itertools.combinations_with_replacement(pool, 3)
            if even
            else itertools.combinations(pool, 3)
        )
        for mono in itertools.islice(combos, 25):
            out = straighten_monomial(D, 0, list(mono))
            assert out.is_fibonacci()
            for fm in out.terms:
                assert fm.l == D - 1
                assert all(
                    b - a > fm.l for a, b in zip(fm.indices, fm.indices[1:])
                )


def test_expand_trivial_targets():
    hw = FockVector.highest_weight(2, 0)
    poly = expand_in_fib_basis(2, 0, hw, 0, 0)
    assert list(poly.terms) == [FibMonomial((), 1)]
    assert expand_in_fib_basis(2, 0, FockVector.zero(2), 2, 4).is_zero()


def test_expand_rejects_vector_outside_subspace():
    # the (1,3) component of W_0 is 1-dimensional inside a 2-dimensional
    # Fock component, so some basis state must fall outside the span
    failures = 0
    for state in enumerate_basis(2, 1, 3):
        v = FockVector(2, {state: QuadScalar(1, 0, 2)})
        try:
            expand_in_fib_basis(2, 0, v, 1, 3)
        except InconsistentSolve:
            failures += 1
    assert failures >= 1


def test_solver_error_paths():
    one = Fraction(1)
    with pytest.raises(AmbiguousSolve):
        solve_exact([[one, one]], [one])
    with pytest.raises(InconsistentSolve):
        solve_exact([[one], [one]], [one, one + one])


def test_straighten_cutoff_error():
    from fiblat import CutoffExceeded

    with pytest.raises(CutoffExceeded):
        straighten_monomial(2, 0, [-5], degree_cutoff=3)
    straighten_monomial(2, 0, [-3], degree_cutoff=3)  # fits exactly


def test_independence_and_span_examples():
    r = independence_and_span_check(2, 0, 2, 6)
    assert r["status"] == "pass" and r["rank"] == 2 == r["n_monomials"]
    r0 = independence_and_span_check(2, 0, 0, 0)
    assert r0["status"] == "pass" and r0["rank"] == 1
    r3 = independence_and_span_check(3, 0, 2, 1)
    assert r3["status"] == "pass" and r3["char_coeff"] == 0
