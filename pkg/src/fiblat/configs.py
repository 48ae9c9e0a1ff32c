"""Infinite Fibonacci configurations and their combinatorics.

A configuration of type (theta, l) is a 0/1 assignment on the integers
such that

  1. every window of l+1 consecutive positions holds at most one 1,
  2. only finitely many positions above any point carry a 1,
  3. deep down it is exactly the periodic pattern: position p carries a 1
     iff p = theta mod (l+1).

A configuration is stored canonically as a finite head (explicit 1
positions at or above ``tail_start``) over the periodic tail (everything
below ``tail_start``), with ``tail_start`` maximal so that equality and
hashing are structural.

The map tau lists the negated 1-positions in increasing order, scanning
the 1s from the top down; it is the index sequence of the semi-infinite
monomial attached to the configuration.  The relevant types are
(N, 2N-1) for the lattice sqrt(2N)*Z and (0, 2N) for sqrt(2N+1)*Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .series import BiSeries, base_exponent, check_lattice


class WindowViolation(ValueError):
    """Two 1s within a window of l+1 consecutive positions."""


class TailMismatch(ValueError):
    """The bits at the bottom of the candidate window break the periodic tail."""


class UnboundedSupport(ValueError):
    """The candidate claims 1s outside the declared finite window."""


class TypeMismatch(ValueError):
    """Configuration type incompatible with the requested lattice."""


@dataclass(frozen=True)
class FibType:
    theta: int
    l: int

    def __post_init__(self):
        if self.l <= 0 or not (0 <= self.theta <= self.l):
            raise ValueError(f"need 0 <= theta <= l, l > 0; got {self}")

    @property
    def period(self) -> int:
        return self.l + 1

    def on_pattern(self, p: int) -> bool:
        """Whether the canonical tail carries a 1 at position p."""
        return p % self.period == self.theta % self.period


def fib_type_for(D: int) -> FibType:
    """The configuration type parametrizing the basis of the D-lattice algebra."""
    N = check_lattice(D)
    if D % 2 == 0:
        return FibType(N, 2 * N - 1)
    return FibType(0, 2 * N)


def vacuum_tau(D: int, m: int, i: int) -> int:
    """i-th index (i >= 1) of the semi-infinite monomial for the charge-m vacuum."""
    N = check_lattice(D)
    if D % 2 == 0:
        return (2 * i - 2 * m - 1) * N
    return (i - m) * D


class FibConfig:
    """Canonical head + periodic tail representation of a configuration."""

    __slots__ = ("fib_type", "head_ones", "tail_start")

    def __init__(self, fib_type: FibType, head_ones, tail_start: int):
        ones = sorted(set(head_ones))
        if ones and ones[0] < tail_start:
            raise TailMismatch(
                f"head position {ones[0]} below declared tail_start {tail_start}"
            )
        per = fib_type.period
        # window condition within the head and across the head/tail seam
        last_tail_one = tail_start - 1
        while not fib_type.on_pattern(last_tail_one):
            last_tail_one -= 1
        check = [last_tail_one] + ones
        for a, b in zip(check, check[1:]):
            if b - a <= fib_type.l:
                raise WindowViolation(
                    f"1s at positions {a} and {b} within a window of {per}"
                )
        # canonicalize: push tail_start up while positions continue the pattern
        ts = tail_start
        ones_set = set(ones)
        while True:
            actual = ts in ones_set
            if actual != fib_type.on_pattern(ts):
                break
            if actual:
                ones_set.discard(ts)
            ts += 1
        object.__setattr__(self, "fib_type", fib_type)
        object.__setattr__(self, "head_ones", tuple(sorted(ones_set)))
        object.__setattr__(self, "tail_start", ts)

    def __setattr__(self, name, value):
        raise AttributeError("FibConfig is immutable")

    def __eq__(self, other):
        if not isinstance(other, FibConfig):
            return NotImplemented
        return (
            self.fib_type == other.fib_type
            and self.head_ones == other.head_ones
            and self.tail_start == other.tail_start
        )

    def __hash__(self):
        return hash((self.fib_type, self.head_ones, self.tail_start))

    def __repr__(self):
        return (
            f"FibConfig(type=({self.fib_type.theta},{self.fib_type.l}), "
            f"head_ones={list(self.head_ones)}, tail_start={self.tail_start})"
        )

    def has_one(self, p: int) -> bool:
        if p >= self.tail_start:
            return p in self.head_ones
        return self.fib_type.on_pattern(p)

    def ones_descending(self) -> Iterator[int]:
        """All 1-positions from the top down (infinite iterator)."""
        for p in sorted(self.head_ones, reverse=True):
            yield p
        p = self.tail_start - 1
        while not self.fib_type.on_pattern(p):
            p -= 1
        while True:
            yield p
            p -= self.fib_type.period

    def tau(self) -> Iterator[int]:
        """Increasing sequence of negated 1-positions (infinite iterator)."""
        for p in self.ones_descending():
            yield -p

    def to_json_dict(self) -> dict:
        return {
            "theta": self.fib_type.theta,
            "l": self.fib_type.l,
            "head_ones": list(self.head_ones),
            "tail_start": self.tail_start,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FibConfig":
        return cls(
            FibType(data["theta"], data["l"]), data["head_ones"], data["tail_start"]
        )


def validate_config(ones, window, fib_type: FibType) -> FibConfig:
    """Validate a candidate bit assignment over a finite window.

    ``ones`` lists the positions carrying a 1 inside ``window = (lo, hi)``;
    every other position in the window is 0.  Below lo the configuration is
    declared to follow the canonical periodic tail; above hi it is 0.  The
    window must contain every deviation from that tail pattern.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    ones = sorted(set(ones))
    for p in ones:
        if not (lo <= p <= hi):
            raise UnboundedSupport(f"claimed 1 at {p} outside window [{lo},{hi}]")
    # window condition among the explicit 1s and across the seam with the
    # last tail 1 below the window
    seam = [p for p in range(lo - fib_type.period, lo) if fib_type.on_pattern(p)]
    check = seam + ones
    for a, b in zip(check, check[1:]):
        if b - a <= fib_type.l:
            raise WindowViolation(
                f"1s at positions {a} and {b} within a window of {fib_type.period}"
            )
    # the window bottom must already sit in the periodic regime
    if (lo in ones) != fib_type.on_pattern(lo):
        raise TailMismatch(
            f"bit at window bottom {lo} deviates from the periodic tail"
        )
    # find the lowest deviation inside the window; everything below joins the tail
    ones_set = set(ones)
    ts = lo
    while ts <= hi and (ts in ones_set) == fib_type.on_pattern(ts):
        ts += 1
    if ts > hi:
        # fully periodic window: deviation is the first vacant pattern slot above
        ts = hi + 1
        while not fib_type.on_pattern(ts):
            ts += 1
    return FibConfig(fib_type, [p for p in ones if p >= ts], ts)


def tau_prefix(config: FibConfig, K: int) -> list[int]:
    """First K values of tau: strictly increasing, consecutive gaps > l."""
    if K < 1:
        raise ValueError("K must be >= 1")
    out = []
    for t in config.tau():
        out.append(t)
        if len(out) == K:
            return out
    raise AssertionError("unreachable: tau is infinite")


def _require_type(config: FibConfig, D: int) -> FibType:
    expected = fib_type_for(D)
    if config.fib_type != expected:
        raise TypeMismatch(
            f"configuration type ({config.fib_type.theta},{config.fib_type.l}) "
            f"does not match D={D} (expected ({expected.theta},{expected.l}))"
        )
    return expected


def charge_and_degree(config: FibConfig, D: int) -> tuple[int, int]:
    """Charge m and degree d of a configuration.

    m is the unique integer with tau(config)_i = tau(vacuum_m)_i for all
    large i; d = base(m) + sum_i (tau(vacuum_m)_i - tau(config)_i).
    """
    _require_type(config, D)
    head_len = len(config.head_ones)
    taus = tau_prefix(config, head_len + 2)
    # first index guaranteed to sit in the periodic tail
    i0 = head_len + 1
    N = check_lattice(D)
    if D % 2 == 0:
        num = (2 * i0 - 1) * N - taus[i0 - 1]
        if num % (2 * N):
            raise TypeMismatch("tail positions off the lattice pattern")
        m = num // (2 * N)
    else:
        if taus[i0 - 1] % D:
            raise TypeMismatch("tail positions off the lattice pattern")
        m = i0 - taus[i0 - 1] // D
    excess = 0
    for i in range(1, i0 + 1):
        delta = vacuum_tau(D, m, i) - taus[i - 1]
        if i >= i0:
            assert delta == 0
        excess += delta
    return m, base_exponent(D, m) + excess


def vacuum_config(D: int, m: int) -> FibConfig:
    """The fully periodic configuration evaluating to the charge-m vacuum."""
    t = fib_type_for(D)
    top = -vacuum_tau(D, m, 1)
    return FibConfig(t, [top], top)


def _search_configs(D: int, m: int, d: int, top_cap: int) -> list[FibConfig]:
    """All configurations of charge m and degree exactly d, with every
    1-position bounded above by top_cap.

    Depth-first search over 1-positions from the top down.  Writing
    delta_i = tau(vacuum_m)_i - tau_i, the window condition forces delta to
    be weakly decreasing, and syncing with the tail forces it to reach 0,
    so delta_i >= 0 throughout and the search closes once delta hits 0.
    """
    t = fib_type_for(D)
    dprime = d - base_exponent(D, m)
    if dprime < 0:
        return []
    per = t.period
    found: list[FibConfig] = []

    def close(chosen: list[int], sync_pos: int, used: int):
        if used != dprime:
            return
        cfg = FibConfig(t, chosen + [sync_pos], sync_pos)
        found.append(cfg)

    def rec(i: int, prev_pos, used: int, chosen: list[int]):
        vac = vacuum_tau(D, m, i)
        hi = -vac + (dprime - used)
        if prev_pos is not None:
            hi = min(hi, prev_pos - per)
        else:
            hi = min(hi, top_cap)
        lo = -vac
        for p in range(lo, hi + 1):
            delta = vac + p
            if delta == 0:
                close(chosen, p, used)
            else:
                chosen.append(p)
                rec(i + 1, p, used + delta, chosen)
                chosen.pop()

    rec(1, None, 0, [])
    return found


def enumerate_configs(t: FibType, D: int, m: int, d: int) -> list[FibConfig]:
    """All configurations of type t with the given charge and degree.

    The search window is derived from the degree budget; the enumerator
    re-runs with a widened window and asserts that nothing new appears.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if t != fib_type_for(D):
        raise TypeMismatch(f"type ({t.theta},{t.l}) incompatible with D={D}")
    dprime = d - base_exponent(D, m)
    if dprime < 0:
        return []
    top_cap = -vacuum_tau(D, m, 1) + dprime
    found = _search_configs(D, m, d, top_cap)
    widened = _search_configs(D, m, d, top_cap + t.period)
    assert set(found) == set(widened), "search window too narrow"
    for cfg in found:
        assert charge_and_degree(cfg, D) == (m, d)
    return sorted(found, key=lambda c: (c.tail_start, c.head_ones))


def fib_character(t: FibType, D: int, charge_window, degree_cutoff: int) -> BiSeries:
    """Configuration-counting character: c(m,d) = #configs at charge m, degree d."""
    if t != fib_type_for(D):
        raise TypeMismatch(f"type ({t.theta},{t.l}) incompatible with D={D}")
    lo, hi = charge_window
    coeffs = {}
    for m in range(lo, hi + 1):
        for d in range(degree_cutoff + 1):
            n = len(enumerate_configs(t, D, m, d))
            if n:
                coeffs[(m, d)] = n
    return BiSeries(coeffs, charge_window, degree_cutoff)


def config_to_monomial(config: FibConfig, D: int):
    """Split a configuration into (finite head monomial, vacuum charge j).

    The head indices are the finitely many tau values that precede the
    maximal suffix agreeing with tau(vacuum_j) from its start.
    """
    from .monomials import FibMonomial  # local import to avoid a cycle

    t = _require_type(config, D)
    head_len = len(config.head_ones)
    taus = tau_prefix(config, head_len + 1)
    # find the start s of the maximal arithmetic suffix with step l+1
    # among the finitely many head values followed by the periodic tail
    s = head_len  # 0-based index into taus of the suffix start
    while s >= 1 and taus[s] - taus[s - 1] == t.period:
        s -= 1
    first_tail_tau = taus[s]
    N = check_lattice(D)
    if D % 2 == 0:
        j = (N - first_tail_tau) // (2 * N)
    else:
        j = 1 - first_tail_tau // D
    assert vacuum_tau(D, j, 1) == first_tail_tau
    head = FibMonomial(tuple(taus[:s]), t.l, anticommutative=(D % 2 == 1))
    return head, j


def monomial_to_config(head, j: int, D: int) -> FibConfig:
    """Inverse of config_to_monomial: rebuild the configuration."""
    t = fib_type_for(D)
    top_of_tail = -vacuum_tau(D, j, 1)
    ones = [-i for i in head.indices] + [top_of_tail]
    return FibConfig(t, ones, top_of_tail)
