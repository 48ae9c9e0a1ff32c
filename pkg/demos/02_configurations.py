"""Infinite Fibonacci configurations and the tau map.

A configuration of type (theta, l) is a 0/1 string on the integers with
at most one 1 per window of l+1 positions, zeros far right, and the
periodic pattern (1 at positions = theta mod l+1) far left.  tau lists
the negated 1-positions top-down; it is the exponent sequence of a
semi-infinite monomial.  Counting configurations by (charge, degree)
reproduces the closed-form character, which is the combinatorial heart
of the basis theorem.
"""

from fiblat import (
    FibType,
    char_lattice,
    charge_and_degree,
    config_to_monomial,
    enumerate_configs,
    fib_character,
    fib_type_for,
    tau_prefix,
    vacuum_config,
    validate_config,
)

t = FibType(1, 1)  # the type attached to D = 2
print("ground configuration of type (1,1): 1s at -1, -3, -5, ...")
g = vacuum_config(2, 0)
print("  tau prefix:", tau_prefix(g, 5))
print("  (charge, degree):", charge_and_degree(g, 2))

print("\na deviated configuration: 1s at {2} over the tail {-3, -5, ...}")
cfg = validate_config([2, -3], (-4, 3), t)
print("  canonical form:", cfg)
print("  tau prefix:", tau_prefix(cfg, 5))
print("  (charge, degree):", charge_and_degree(cfg, 2))
head, j = config_to_monomial(cfg, 2)
print(f"  head monomial {head} over the charge-{j} vacuum")

print("\nall D=2 configurations of charge 0, degree 4:")
for c in enumerate_configs(t, 2, 0, 4):
    print("  tau:", tau_prefix(c, 6))

print("\nconfiguration counts reproduce the character (D=3, window -2..2, cutoff 8):")
fib = fib_character(fib_type_for(3), 3, (-2, 2), 8)
closed = char_lattice(3, (-2, 2), 8)
print("  enumeration == closed form:", fib == closed)
