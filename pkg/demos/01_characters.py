"""Characters of the lattice algebra and its basic subspaces.

The bigraded character of V on sqrt(D)*Z collects z^charge q^weight over
a Fock basis.  In closed form it is sum_m z^m q^base(m) / (q)_inf with
base(m) = N m^2 (D = 2N) or D m(m-1)/2 (D = 2N+1).  The basic subspace
W_j replaces 1/(q)_inf by 1/(q)_{m-j}; as j walks down, W_j fills up the
whole algebra.
"""

from fiblat import char_basic_subspace, char_lattice, qpochhammer_inverse

print("partition numbers from 1/(q)_inf:")
series = qpochhammer_inverse(None, 10)
print("  ", [series.coefficient(0, d) for d in range(11)])

print("\npartitions into parts <= 2 from 1/(q)_2:")
series = qpochhammer_inverse(2, 10)
print("  ", [series.coefficient(0, d) for d in range(11)])

for D in (2, 3):
    print(f"\ncharacter table of V on sqrt({D})Z, charges -2..2, degrees 0..8:")
    ch = char_lattice(D, (-2, 2), 8)
    for m in range(-2, 3):
        print(f"  m={m:+d}: ", [ch.coefficient(m, d) for d in range(9)])

print("\nbasic subspace characters at D=2 sink into the full character:")
full = char_lattice(2, (-2, 2), 8)
for j in (1, 0, -1, -2, -8):
    ch = char_basic_subspace(2, j, (-2, 2), 8)
    status = "== ch V" if ch.agrees_with(full) else "strictly below"
    print(f"  ch W_{j:+d}: charge-0 row {[ch.coefficient(0, d) for d in range(9)]}  {status}")

print("\nJSON serialization of a small character:")
print("  ", char_lattice(2, (-1, 1), 3).to_json())
