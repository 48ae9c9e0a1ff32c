"""Residue pairing, annihilator ideals, dual graded dimensions."""

from fractions import Fraction

import pytest

from _oracles import partitions_at_most_parts
from fiblat import (
    BiSeries,
    ChargeMismatch,
    DualForm,
    base_exponent,
    char_basic_subspace,
    dual_dim,
    enumerate_fib_monomials,
    free_monomials,
    ideal_elements,
    ideal_generators,
    pair,
    verify_annihilator,
)
from fiblat.dual import (
    discriminant_power,
    form_basis,
    monomial_symmetric,
    pair_with_integrand,
    poly_mul,
    poly_one,
)
from fiblat.linalg import exact_rank
from fiblat.modes import annihilation_threshold


def test_dual_dim_values():
    assert dual_dim(2, 2, 4) == 1  # leading z^2 q^4 coefficient
    assert dual_dim(2, 2, 6) == 2  # partitions of 2 into at most 2 parts
    assert dual_dim(2, 0, 0) == 1 and dual_dim(5, 0, 0) == 1
    for D, m in [(2, 2), (3, 2), (2, 3)]:
        for d in range(10):
            excess = d - base_exponent(D, m)
            expected = partitions_at_most_parts(excess, m) if excess >= 0 else 0
            assert dual_dim(D, m, d) == expected


def test_pairing_worked_example():
    # <(z1-z2)^2, 2 e_{-1}e_{-3} + e_{-2}e_{-2}> = 2*(1+1) + (-2-2) = 0
    form = DualForm(2, 2, poly_one(2))
    element = [((-3, -1), Fraction(2)), ((-2, -2), Fraction(1))]
    assert pair(form, element) == 0
    # and the two pieces separately, straight off the expansion of (z1-z2)^2
    assert pair(form, (-3, -1)) == 2
    assert pair(form, (-2, -2)) == -4


def test_pairing_single_variable():
    form = DualForm(2, 1, poly_one(1))
    assert pair(form, (-1,)) == 1
    assert pair(form, (-2,)) == 0  # degree mismatch: grading kills it


def test_pairing_charge_mismatch():
    form = DualForm(2, 2, poly_one(2))
    with pytest.raises(ChargeMismatch):
        pair(form, (-1,))


def test_pairing_symmetry_even_antisymmetry_odd():
    f = monomial_symmetric((2,), 2)
    even_form = DualForm(2, 2, f)
    assert pair(even_form, (-3, -1)) == pair(even_form, tuple(reversed((-3, -1))))
    odd_form = DualForm(3, 2, f)
    a = pair_with_integrand(odd_form.integrand(), (-3, 0), 3)
    b = pair_with_integrand(odd_form.integrand(), (0, -3), 3)
    assert a == -b


def test_dual_form_requires_symmetric_polynomial():
    with pytest.raises(ValueError):
        DualForm(2, 2, {(1, 0): Fraction(1)})


def test_ideal_generators_even():
    gens = {g.label: dict(g.terms) for g in ideal_generators(2, 2, (0, 4))}
    assert gens["e+.e+^(0)@-4"] == {(-3, -1): 2, (-2, -2): 1}
    assert gens["e+.e+^(0)@-2"] == {(-1, -1): 1}
    assert "e+.e+^(0)@-1" not in gens  # no admissible pair sums to -1
    assert "e+.e+^(0)@0" not in gens


def test_ideal_generators_odd_zero_at_origin():
    gens = [g for g in ideal_generators(3, 2, (0, 0))]
    assert gens == []  # theta_0 theta_0 dies by antisymmetry


def test_ideal_generators_require_charge_two():
    with pytest.raises(ValueError):
        ideal_generators(2, 3, (0, 4))


def test_annihilator_even():
    entries = verify_annihilator(2, 2, (0, 8))
    assert all(e["annihilator_ok"] for e in entries)
    by_deg = {e["degree"]: e for e in entries}
    assert by_deg[4]["n_forms"] == 1 and by_deg[6]["rank"] == 2
    # report entries carry the documented keys
    assert set(entries[0]) == {"D", "m", "degree", "n_forms", "rank", "annihilator_ok"}


def test_annihilator_odd():
    entries = verify_annihilator(3, 2, (0, 6))
    assert all(e["annihilator_ok"] for e in entries)


def test_annihilator_charge_three():
    entries = verify_annihilator(2, 3, (9, 12)) + verify_annihilator(3, 3, (9, 11))
    assert all(e["annihilator_ok"] for e in entries)


def test_negative_control_lower_exponent_pairs_nonzero():
    # dropping the prefactor exponent by 2 (keeping parity) must produce a
    # nonzero pairing against some ideal element: the annihilation property
    # really rides on divisibility by the full (z_i - z_j)^D power
    from fiblat.dual import partitions_at_most

    D, m = 2, 2
    weak = discriminant_power(m, D - 2)
    found = False
    for d in range(2, 8):
        for element in ideal_elements(D, m, d):
            for lam_deg in range(d + 1):
                for lam in partitions_at_most(lam_deg, m):
                    h = poly_mul(monomial_symmetric(lam, m), weak)
                    total = sum(
                        (c * pair_with_integrand(h, idx, D) for idx, c in element.terms),
                        Fraction(0),
                    )
                    if total != 0:
                        found = True
    assert found


def test_negative_control_wrong_parity_collapses_rank():
    # exponent D-1 flips the symmetry of the integrand, so the symmetrized
    # pairing vanishes identically: every rank drops to zero
    D, m, d = 2, 2, 6
    weak = discriminant_power(m, D - 1)
    monos = free_monomials(D, m, d)
    rows = []
    for lam in [(2,), (1, 1)]:
        h = poly_mul(monomial_symmetric(lam, m), weak)
        rows.append([pair_with_integrand(h, mono, D) for mono in monos])
    assert exact_rank(rows) == 0
    assert dual_dim(D, m, d) == 2


def test_dual_series_matches_basic_character():
    for D in (2, 3):
        cutoff = 8
        coeffs = {}
        for m in range(0, 4):
            for d in range(cutoff + 1):
                v = dual_dim(D, m, d)
                if v:
                    coeffs[(m, d)] = v
        series = BiSeries(coeffs, (0, 3), cutoff)
        assert series.agrees_with(char_basic_subspace(D, 0, (0, 3), cutoff))


def test_pairing_nondegenerate_on_fibonacci_monomials():
    # square pairing matrix of forms against Fibonacci monomials: full rank
    for D, m, d in [(2, 2, 6), (2, 2, 8), (3, 2, 5), (3, 3, 10)]:
        forms = form_basis(D, m, d)
        monos = [
            mo.indices
            for mo in enumerate_fib_monomials(
                D - 1, annihilation_threshold(D, 0), D % 2 == 1, m, d
            )
        ]
        assert len(forms) == len(monos) == dual_dim(D, m, d)
        if not forms:
            continue
        matrix = [[pair(f, mono) for mono in monos] for f in forms]
        assert exact_rank(matrix) == len(forms)
