"""Vertex operator modes acting on the Fock model.

The mode x_n of the vertex operator attached to sigma*sqrt(D) shifts the
charge by sigma and the weight by -n, all with exact Q(sqrt(D))
coefficients.  Highest weight vectors are annihilated sharply above a
threshold index; the quadratic defining relations annihilate everything;
at D = 2 the modes close into the affine sl2 bracket at level 1.
"""

from fiblat import (
    FockVector,
    VertexMode,
    annihilation_threshold,
    apply_mode,
    evaluate_semiinfinite,
    heisenberg_vertex_commutator_check,
    sl2_bracket_check,
    vacuum_config,
    verify_relations,
)

vac = FockVector.highest_weight(2, 0)
print("mode actions on the vacuum, D = 2:")
for n in (0, -1, -2, -3):
    print(f"  e[{n}]|0> =", apply_mode(VertexMode(1, n, 2), vac))

print("\nannihilation thresholds (largest non-killing index):")
for D in (2, 3):
    print(f"  D={D}:", {j: annihilation_threshold(D, j) for j in range(-2, 3)})

print("\ndefining relations, exact zero on the truncated basis:")
for D in (2, 3, 4, 5):
    rep = verify_relations(D, [-1, 0, 1], 6)
    print(f"  D={D}: {'PASS' if rep.passed else 'FAIL'} over {len(rep.entries)} relation modes")

print("\naffine sl2 bracket at D=2 (h_n = sqrt(2) a_n, K = 1):")
rep = sl2_bracket_check(4, index_bound=2, charges=(-1, 0, 1))
print(f"  {'PASS' if rep.passed else 'FAIL'} over {len(rep.entries)} bracket identities")

print("\nHeisenberg-vertex commutators [a_i, x_j] = sigma*sqrt(D)*x_{i+j}:")
for D in (2, 3):
    rep = heisenberg_vertex_commutator_check(D, 4, osc_bound=2, mode_bound=2)
    print(f"  D={D}: {'PASS' if rep.passed else 'FAIL'} ({len(rep.entries)} pairs)")

print("\nsemi-infinite monomial of the ground configuration evaluates to |0>:")
print("  ", evaluate_semiinfinite(vacuum_config(2, 0), 2))
