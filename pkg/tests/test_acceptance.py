"""Acceptance suite: the headline identities at desk scale, exact arithmetic.

Each test prints one PASS line (visible under pytest -s / -v with -rP or
when run as a script via ``pytest tests/test_acceptance.py -v``).
"""

import itertools
from fractions import Fraction

from fiblat import (
    BiSeries,
    FockVector,
    VertexMode,
    annihilation_threshold,
    apply_mode,
    apply_monomial,
    char_basic_subspace,
    char_lattice,
    dual_dim,
    expand_in_fib_basis,
    fib_character,
    fib_type_for,
    heisenberg_vertex_commutator_check,
    independence_and_span_check,
    relation_matrix,
    sl2_bracket_check,
    straighten_monomial,
    vandermonde_det,
    verify_annihilator,
    verify_relations,
)
from fiblat.linalg import det_rational
from fiblat.straighten import DIAGONAL, OFFDIAGONAL, evaluate_fib_polynomial


def test_c01_character_identity_even():
    """Even-lattice basis counting: configurations reproduce the character."""
    window, cutoff = (-3, 3), 12
    for D in (2, 4, 6):
        enumerated = fib_character(fib_type_for(D), D, window, cutoff)
        closed_form = char_lattice(D, window, cutoff)
        assert enumerated.agrees_with(closed_form), D
        assert enumerated == closed_form  # identical windows: full equality
    print("ACCEPTANCE 1 PASS: even character identity, D in {2,4,6}, |m|<=3, d<=12")


def test_c02_character_identity_odd():
    window, cutoff = (-3, 3), 12
    for D in (3, 5):
        enumerated = fib_character(fib_type_for(D), D, window, cutoff)
        closed_form = char_lattice(D, window, cutoff)
        assert enumerated == closed_form, D
    print("ACCEPTANCE 2 PASS: odd character identity, D in {3,5}, |m|<=3, d<=12")


def test_c03_defining_relations():
    checked = 0
    for D in (2, 4, 3, 5):
        report = verify_relations(D, [-1, 0, 1], 8)
        assert report.passed, [e for e in report.entries if e["status"] != "pass"]
        checked += len(report.entries)
    assert checked > 0
    print(f"ACCEPTANCE 3 PASS: defining relations exactly zero ({checked} relation modes)")


def test_c04_annihilation_thresholds():
    checked = 0
    for D in (2, 3, 4, 5):
        for j in range(-3, 4):
            hw = FockVector.highest_weight(D, j)
            threshold = annihilation_threshold(D, j)
            for n in range(threshold - 3, threshold + 4):
                image = apply_mode(VertexMode(1, n, D), hw)
                assert image.is_zero() == (n > threshold), (D, j, n)
                checked += 1
    print(f"ACCEPTANCE 4 PASS: annihilation thresholds sharp in both directions ({checked} modes)")


def test_c05_straightening_soundness():
    checked = 0
    for D in (2, 3, 4):
        even = D % 2 == 0
        for j in (-1, 0, 1):
            top = annihilation_threshold(D, j)
            pool = range(top - 6, top + 7)
            monomials = []
            for length in (1, 2, 3):
                if even:
                    monomials.extend(itertools.combinations_with_replacement(pool, length))
                else:
                    monomials.extend(itertools.combinations(pool, length))
            for monomial in monomials:
                normal_form = straighten_monomial(D, j, list(monomial))
                assert normal_form.is_fibonacci()
                direct = apply_monomial(D, j, sorted(monomial))
                assert evaluate_fib_polynomial(normal_form, D, j) == direct
                if not direct.is_zero():
                    m, d = direct.homogeneous_bidegree()
                    assert expand_in_fib_basis(D, j, direct, m, d) == normal_form
                checked += 1
    print(f"ACCEPTANCE 5 PASS: straightening sound against the Fock model ({checked} monomials)")


def test_c06_independence_and_spanning():
    checked = 0
    for D in (2, 3, 4):
        for j in (-1, 0):
            for m in range(j, 4):
                for d in range(11):
                    entry = independence_and_span_check(D, j, m, d)
                    assert entry["status"] == "pass", entry
                    checked += 1
    print(f"ACCEPTANCE 6 PASS: rank = monomial count = character coefficient ({checked} bidegrees)")


def test_c07_relation_minor_nondegeneracy():
    checked = 0
    for N in (1, 2, 3, 4):
        for D in (2 * N, 2 * N + 1):
            for family in (DIAGONAL, OFFDIAGONAL):
                for center in range(-6, 7):
                    block = [row[:N] for row in relation_matrix(D, family, center, N)]
                    assert det_rational(block) != 0, (D, family, center)
                    checked += 1
    for size in range(1, 6):
        for offset in (Fraction(0), Fraction(1), Fraction(1, 2)):
            points = [i + offset for i in range(size)]
            assert vandermonde_det("even", points) != 0
            if 0 not in points:
                assert vandermonde_det("odd", points) != 0
    print(f"ACCEPTANCE 7 PASS: leading principal minors nonzero ({checked} minors, N<=4, |n|<=6)")


def test_c08_affine_sl2_bracket():
    report = sl2_bracket_check(6)
    assert report.passed, report.failures()[:3]
    print(f"ACCEPTANCE 8 PASS: affine sl2 bracket at D=2, cutoff 6 ({len(report.entries)} identities)")


def test_c09_dual_realization():
    checked = 0
    for D in (2, 3):
        for m in range(0, 4):
            entries = verify_annihilator(D, m, (0, 8))
            assert all(e["annihilator_ok"] for e in entries), (D, m, entries)
            checked += len(entries)
        coeffs = {}
        for m in range(0, 4):
            for d in range(9):
                v = dual_dim(D, m, d)
                if v:
                    coeffs[(m, d)] = v
        dual_series = BiSeries(coeffs, (0, 3), 8)
        assert dual_series.agrees_with(char_basic_subspace(D, 0, (0, 3), 8))
    print(f"ACCEPTANCE 9 PASS: dual forms annihilate the ideal, dimensions match ({checked} cells)")


def test_c10_heisenberg_vertex_commutator():
    for D in (2, 3, 4):
        report = heisenberg_vertex_commutator_check(
            D, 6, osc_bound=4, mode_bound=3, charges=(-2, -1, 0, 1, 2)
        )
        assert report.passed, (D, report.failures()[:3])
    print("ACCEPTANCE 10 PASS: [a_i, x_j] = sigma*sqrt(D)*x_{i+j}, |i|<=4, D in {2,3,4}")
