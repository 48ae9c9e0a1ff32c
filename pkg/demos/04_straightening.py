"""Straightening monomials into the Fibonacci normal form.

Pairs of modes with index gap <= 2N-1 (D = 2N) or <= 2N (D = 2N+1) are
"near"; the relation systems, with rows built from rising factorials
H_k(x) = x(x+1)...(x+k-1), have an invertible leading N x N minor, so
every near pair rewrites into far pairs.  Iterating yields a canonical
Fibonacci polynomial; its image on the highest weight vector matches the
direct Fock computation exactly, and the monomial images at each
bidegree form a basis of the corresponding graded component.
"""

from fiblat import (
    apply_monomial,
    expand_in_fib_basis,
    independence_and_span_check,
    relation_matrix,
    solve_near_pairs,
    straighten_monomial,
    vandermonde_det,
)
from fiblat.straighten import DIAGONAL, evaluate_fib_polynomial

print("relation matrix, D=2 diagonal family (any center): one row")
print("  ", relation_matrix(2, DIAGONAL, 0, 6)[0])

print("\nnear-pair rewrite at D=2: e_n e_n in far pairs")
rw = solve_near_pairs(2, DIAGONAL, -2, 4)
print("  e[-2]e[-2] =", " + ".join(f"({c})*e[{a}]e[{b}]" for (a, b), c in rw.expansions[0]))

print("\nVandermonde certificates (even kind at 0..4, odd kind at 1..5):")
print("  even:", vandermonde_det("even", [0, 1, 2, 3, 4]))
print("  odd: ", vandermonde_det("odd", [1, 2, 3, 4, 5]))

print("\nstraightening on |0>, D = 2:")
for mono in ([-2, -2], [-1, -2], [-3, -1], [-3, -3], [-4, -2, -2]):
    poly = straighten_monomial(2, 0, mono)
    direct = apply_monomial(2, 0, sorted(mono))
    ok = evaluate_fib_polynomial(poly, 2, 0) == direct
    print(f"  e{mono} -> {poly!r}   (Fock check: {'OK' if ok else 'MISMATCH'})")

print("\nstraightening on |0>, D = 3 (anticommuting modes):")
for mono in ([-2, 0], [-1, 0], [-3, 0]):
    poly = straighten_monomial(3, 0, mono)
    print(f"  theta{mono} -> {poly!r}")

print("\noracle expansion of a Fock vector over the monomial images:")
target = apply_monomial(2, 0, [-2, -2])
print("  e[-2]e[-2]|0> =", target)
print("  coordinates:", repr(expand_in_fib_basis(2, 0, target, 2, 4)))

print("\nindependence and spanning at sample bidegrees:")
for D, j, m, d in [(2, 0, 2, 6), (3, 0, 2, 3), (4, -1, 1, 2)]:
    entry = independence_and_span_check(D, j, m, d)
    print(
        f"  D={D} j={j} (m,d)=({m},{d}): rank {entry['rank']} of {entry['n_monomials']} "
        f"monomials vs character {entry['char_coeff']}: {entry['status']}"
    )
