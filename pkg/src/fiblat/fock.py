"""Truncated Fock modules over the Heisenberg algebra, with exact coefficients.

Oscillators a_n obey [a_n, a_m] = n*delta_{n+m,0} (standard normalization).
The charge-j highest weight vector |j*sqrt(D)> has a_0 eigenvalue j*sqrt(D);
a basis state is a partition k_1 >= k_2 >= ... applied as
a_{-k_1} a_{-k_2} ... |j*sqrt(D)>.

Weights come from the conformal family omega_lambda = a_{-1}^2/2 + lambda*a_{-2}:
the highest vector has weight mu^2/2 - lambda*mu.  With lambda = 0 (even D)
or sqrt(D)/2 (odd D) every lattice charge gets an integer weight,
base(j) = N*j^2 or D*j*(j-1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import QuadScalar, sqrt_of
from .series import base_exponent, check_lattice


class NonIntegralWeight(ValueError):
    """The standard grading produced a non-integer weight."""


@dataclass(frozen=True)
class FockBasisState:
    charge: int
    partition: tuple  # weakly decreasing positive integers

    def __post_init__(self):
        parts = tuple(sorted(self.partition, reverse=True))
        if any(k < 1 for k in parts):
            raise ValueError("partition parts must be positive")
        object.__setattr__(self, "partition", parts)

    @property
    def oscillator_degree(self) -> int:
        return sum(self.partition)

    def to_json_dict(self) -> dict:
        return {"charge": self.charge, "partition": list(self.partition)}


def standard_lambda(D: int) -> QuadScalar:
    """Conformal parameter of the grading used for the D-lattice: 0 or sqrt(D)/2."""
    check_lattice(D)
    if D % 2 == 0:
        return QuadScalar(0, 0, D)
    return QuadScalar(0, Fraction(1, 2), D)


def weight(state: FockBasisState, D: int, lam: QuadScalar | Fraction | int) -> QuadScalar:
    """L_0 eigenvalue mu^2/2 - lambda*mu + sum(partition), mu = charge*sqrt(D).

    Exact for any lambda; irrational lambda or charge may give an irrational
    weight, returned as a QuadScalar.
    """
    check_lattice(D)
    if not isinstance(lam, QuadScalar):
        lam = QuadScalar(lam, 0, D)
    mu = sqrt_of(D) * state.charge
    return mu * mu * Fraction(1, 2) - lam * mu + state.oscillator_degree


def standard_weight(state: FockBasisState, D: int) -> int:
    """Integer weight in the standard grading: base(charge) + sum(partition)."""
    w = weight(state, D, standard_lambda(D))
    if not w.is_rational() or w.rat_part.denominator != 1:
        raise NonIntegralWeight(f"weight {w} of {state} is not an integer")
    value = int(w.rat_part)
    assert value == base_exponent(D, state.charge) + state.oscillator_degree
    return value


class FockVector:
    """Finite linear combination of Fock basis states over one lattice."""

    __slots__ = ("D", "coeffs")

    def __init__(self, D: int, coeffs: dict | None = None):
        check_lattice(D)
        clean = {}
        for state, c in (coeffs or {}).items():
            if not isinstance(c, QuadScalar):
                c = QuadScalar(c, 0, D)
            if c:
                clean[state] = c
        self.D = D
        self.coeffs = clean

    @classmethod
    def highest_weight(cls, D: int, j: int) -> "FockVector":
        return cls(D, {FockBasisState(j, ()): QuadScalar(1, 0, D)})

    @classmethod
    def zero(cls, D: int) -> "FockVector":
        return cls(D, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.D != other.D:
            raise ValueError("cannot add vectors over different lattices")
        out = dict(self.coeffs)
        for state, c in other.coeffs.items():
            out[state] = out.get(state, QuadScalar(0, 0, self.D)) + c
        return FockVector(self.D, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(QuadScalar(-1, 0, self.D))

    def scale(self, factor) -> "FockVector":
        if not isinstance(factor, QuadScalar):
            factor = QuadScalar(factor, 0, self.D)
        return FockVector(self.D, {s: c * factor for s, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.D == other.D and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.D, tuple(sorted(
            ((s.charge, s.partition), c) for s, c in self.coeffs.items()))))

    def charges(self) -> set[int]:
        return {s.charge for s in self.coeffs}

    def max_weight(self) -> int | None:
        if not self.coeffs:
            return None
        return max(standard_weight(s, self.D) for s in self.coeffs)

    def homogeneous_bidegree(self) -> tuple[int, int]:
        """(charge, weight) when the vector is homogeneous; raises otherwise."""
        grades = {(s.charge, standard_weight(s, self.D)) for s in self.coeffs}
        if len(grades) != 1:
            raise ValueError(f"vector is not homogeneous: grades {sorted(grades)}")
        return grades.pop()

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for s in sorted(self.coeffs, key=lambda t: (t.charge, t.partition)):
            bits.append(f"({self.coeffs[s]})*|{s.charge};{list(s.partition)}>")
        return " + ".join(bits)

    def to_json(self) -> list:
        out = []
        for s in sorted(self.coeffs, key=lambda t: (t.charge, t.partition)):
            out.append(
                {"charge": s.charge, "partition": list(s.partition),
                 "coeff": self.coeffs[s].to_json()}
            )
        return out


def heisenberg_apply(n: int, v: FockVector) -> FockVector:
    """Apply the oscillator a_n.

    a_{-k} (k>0) prepends a part k; a_k removes one part k with multiplicity
    weight k*(number of parts k); a_0 multiplies by charge*sqrt(D).
    """
    D = v.D
    out: dict = {}

    def add(state, c):
        if state in out:
            out[state] = out[state] + c
        else:
            out[state] = c

    for state, c in v.coeffs.items():
        if n == 0:
            add(state, c * sqrt_of(D) * state.charge)
        elif n < 0:
            add(FockBasisState(state.charge, state.partition + (-n,)), c)
        else:
            mult = state.partition.count(n)
            if mult:
                parts = list(state.partition)
                parts.remove(n)
                add(FockBasisState(state.charge, tuple(parts)), c * (n * mult))
    return FockVector(D, out)


def _partitions(n: int):
    """All partitions of n as weakly decreasing tuples."""

    def rec(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for k in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - k, k):
                yield (k,) + rest

    yield from rec(n, n)


def enumerate_basis(D: int, j: int, d: int) -> list[FockBasisState]:
    """All charge-j basis states of weight d; empty when d < base(j)."""
    excess = d - base_exponent(D, j)
    if excess < 0:
        return []
    return [FockBasisState(j, parts) for parts in _partitions(excess)]
