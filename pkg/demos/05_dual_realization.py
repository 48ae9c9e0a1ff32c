"""Functional realization of the restricted dual of W_0.

Charge-m dual functionals are symmetric polynomials carried by the
prefactor prod_{i<j}(z_i - z_j)^D; they pair with mode monomials by
residue extraction.  Every functional annihilates the relation ideal,
and the graded dimensions reassemble the character of W_0.
"""

from fractions import Fraction

from fiblat import (
    BiSeries,
    DualForm,
    char_basic_subspace,
    dual_dim,
    ideal_generators,
    pair,
    verify_annihilator,
)
from fiblat.dual import poly_one

print("the quadratic ideal generators at D=2, degrees up to 6:")
for g in ideal_generators(2, 2, (0, 6)):
    terms = " + ".join(f"({c})*e[{a}]e[{b}]" for (a, b), c in g.terms)
    print(f"  degree {g.degree}: {terms}")

print("\npairing the simplest 2-variable form against a generator:")
form = DualForm(2, 2, poly_one(2))  # f = 1 carried by (z1 - z2)^2
element = [((-3, -1), Fraction(2)), ((-2, -2), Fraction(1))]
print("  <(z1-z2)^2, 2 e[-1]e[-3] + e[-2]e[-2]> =", pair(form, element))

print("\nannihilator verification, D = 2 and 3, charge 2, degrees 0..8:")
for D in (2, 3):
    entries = verify_annihilator(D, 2, (0, 8))
    ok = all(e["annihilator_ok"] for e in entries)
    print(f"  D={D}: {'PASS' if ok else 'FAIL'} over {len(entries)} degrees")
    print("   sample entry:", entries[-1])

print("\ndual graded dimensions reassemble ch W_0 (D=2, charges 0..3, cutoff 8):")
coeffs = {}
for m in range(4):
    for d in range(9):
        v = dual_dim(2, m, d)
        if v:
            coeffs[(m, d)] = v
dual_series = BiSeries(coeffs, (0, 3), 8)
print("  match:", dual_series.agrees_with(char_basic_subspace(2, 0, (0, 3), 8)))
