"""Truncated bigraded series and the closed-form character formulas.

A BiSeries stores integer coefficients c(m, d) on a finite window
[charge_lo, charge_hi] x [0, degree_cutoff].  Inside the window an absent
key means 0; outside the window the coefficient is *unknown*, not zero,
so comparisons are only made on window intersections.

The character of the full lattice algebra on sqrt(D)*Z is

    sum_m z^m q^(base(m)) / (q)_inf,

where base(m) = N*m^2 for D = 2N and base(m) = D*m*(m-1)/2 for D = 2N+1
(the two standard conformal normalizations make all degrees integers).
The character of the basic subspace W_j replaces 1/(q)_inf by 1/(q)_(m-j).
"""

from __future__ import annotations

import json

INFINITY = None  # sentinel accepted by qpochhammer_inverse


def check_lattice(D: int) -> int:
    """Validate D >= 2 and return N with D = 2N or D = 2N + 1."""
    if not isinstance(D, int) or D < 2:
        raise ValueError(f"lattice parameter D must be an integer >= 2, got {D}")
    return D // 2


def base_exponent(D: int, m: int) -> int:
    """Minimal degree in the charge-m sector: N*m^2 (even D) or D*m*(m-1)/2 (odd)."""
    N = check_lattice(D)
    if D % 2 == 0:
        return N * m * m
    return D * (m * (m - 1) // 2)


def bounded_partition_count(n: int, max_part) -> int:
    """Number of partitions of n into parts <= max_part (None = unbounded).

    By conjugation this also counts partitions of n into at most max_part
    parts.  Computed by the standard one-dimensional DP.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    if max_part is not None and max_part <= 0:
        return 0
    table = [1] + [0] * n
    top = n if max_part is None else min(max_part, n)
    for part in range(1, top + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


class BiSeries:
    """Finitely windowed series sum c(m,d) z^m q^d with integer coefficients."""

    __slots__ = ("coefficients", "charge_window", "degree_cutoff")

    def __init__(self, coefficients: dict, charge_window: tuple, degree_cutoff: int):
        lo, hi = charge_window
        if lo > hi:
            raise ValueError(f"empty charge window {charge_window}")
        if degree_cutoff < 0:
            raise ValueError("degree cutoff must be non-negative")
        clean = {}
        for (m, d), v in coefficients.items():
            if not (lo <= m <= hi and 0 <= d <= degree_cutoff):
                raise ValueError(f"coefficient key ({m},{d}) outside window")
            if v:
                clean[(m, d)] = int(v)
        self.coefficients = clean
        self.charge_window = (lo, hi)
        self.degree_cutoff = degree_cutoff

    def coefficient(self, m: int, d: int) -> int:
        lo, hi = self.charge_window
        if not (lo <= m <= hi and 0 <= d <= self.degree_cutoff):
            raise KeyError(
                f"({m},{d}) outside known window {self.charge_window} x [0,{self.degree_cutoff}]"
            )
        return self.coefficients.get((m, d), 0)

    def _intersection(self, other: "BiSeries"):
        lo = max(self.charge_window[0], other.charge_window[0])
        hi = min(self.charge_window[1], other.charge_window[1])
        cut = min(self.degree_cutoff, other.degree_cutoff)
        if lo > hi:
            raise ValueError("series windows do not intersect")
        return lo, hi, cut

    def agrees_with(self, other: "BiSeries") -> bool:
        """Coefficientwise equality on the intersection of the windows."""
        lo, hi, cut = self._intersection(other)
        for m in range(lo, hi + 1):
            for d in range(cut + 1):
                if self.coefficient(m, d) != other.coefficient(m, d):
                    return False
        return True

    def dominates(self, other: "BiSeries") -> bool:
        """self >= other coefficientwise on the intersection."""
        lo, hi, cut = self._intersection(other)
        return all(
            self.coefficient(m, d) >= other.coefficient(m, d)
            for m in range(lo, hi + 1)
            for d in range(cut + 1)
        )

    def __add__(self, other: "BiSeries") -> "BiSeries":
        lo, hi, cut = self._intersection(other)
        coeffs = {}
        for m in range(lo, hi + 1):
            for d in range(cut + 1):
                v = self.coefficient(m, d) + other.coefficient(m, d)
                if v:
                    coeffs[(m, d)] = v
        return BiSeries(coeffs, (lo, hi), cut)

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.charge_window == other.charge_window
            and self.degree_cutoff == other.degree_cutoff
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash(
            (self.charge_window, self.degree_cutoff, tuple(sorted(self.coefficients.items())))
        )

    def __repr__(self):
        return (
            f"BiSeries(window={self.charge_window}, cutoff={self.degree_cutoff}, "
            f"{len(self.coefficients)} nonzero)"
        )

    def to_json_dict(self) -> dict:
        return {
            "charge_window": list(self.charge_window),
            "degree_cutoff": self.degree_cutoff,
            "coeffs": [[m, d, v] for (m, d), v in sorted(self.coefficients.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "BiSeries":
        coeffs = {(m, d): v for m, d, v in data["coeffs"]}
        return cls(coeffs, tuple(data["charge_window"]), data["degree_cutoff"])

    @classmethod
    def from_function(cls, fn, charge_window, degree_cutoff) -> "BiSeries":
        lo, hi = charge_window
        coeffs = {}
        for m in range(lo, hi + 1):
            for d in range(degree_cutoff + 1):
                v = fn(m, d)
                if v:
                    coeffs[(m, d)] = v
        return cls(coeffs, charge_window, degree_cutoff)


def qpochhammer_inverse(m, degree_cutoff: int) -> BiSeries:
    """q-expansion of 1/(q)_m = 1/prod_{i=1..m}(1 - q^i), windowed at charge 0.

    m = None (INFINITY) gives 1/(q)_inf, the partition generating function.
    """
    if degree_cutoff < 0:
        raise ValueError("degree cutoff must be non-negative")
    if m is not None and (not isinstance(m, int) or m < 1):
        raise ValueError(f"m must be a positive integer or None, got {m}")
    coeffs = {
        (0, d): bounded_partition_count(d, m) for d in range(degree_cutoff + 1)
    }
    return BiSeries(coeffs, (0, 0), degree_cutoff)


def char_lattice(D: int, charge_window, degree_cutoff: int) -> BiSeries:
    """Character of the whole lattice algebra: c(m,d) = p(d - base(m))."""
    check_lattice(D)

    def coeff(m, d):
        return bounded_partition_count(d - base_exponent(D, m), None)

    return BiSeries.from_function(coeff, charge_window, degree_cutoff)


def char_basic_subspace(D: int, j: int, charge_window, degree_cutoff: int) -> BiSeries:
    """Character of the basic subspace W_j.

    c(m,d) = number of partitions of d - base(m) into at most m - j parts
    for m >= j, and 0 for m < j.
    """
    check_lattice(D)

    def coeff(m, d):
        if m < j:
            return 0
        return bounded_partition_count(d - base_exponent(D, m), m - j)

    return BiSeries.from_function(coeff, charge_window, degree_cutoff)
