"""Fibonacci-l monomials and polynomials in the mode variables.

A Fibonacci-l monomial is a square-free product x_{j_1} x_{j_2} ... with
strictly increasing indices whose consecutive gaps exceed l.  Monomials
with repeated or closely spaced indices are legal intermediate values of
the straightening pass; the ``is_fibonacci`` predicate tells them apart.

Bigradation: deg_z counts the variables, deg_q = -(sum of indices).

Polynomials are finite maps monomial -> QuadScalar.  In the
anticommutative case monomials are kept with strictly increasing indices
and sign swaps absorbed into coefficients; a repeated index kills a term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import QuadScalar


@dataclass(frozen=True)
class FibMonomial:
    indices: tuple  # weakly increasing; strictly increasing when anticommutative
    l: int
    anticommutative: bool = False

    def __post_init__(self):
        idx = tuple(self.indices)
        if list(idx) != sorted(idx):
            raise ValueError("indices must be sorted ascending")
        if self.anticommutative and any(a == b for a, b in zip(idx, idx[1:])):
            raise ValueError("repeated index in an anticommutative monomial")
        object.__setattr__(self, "indices", idx)

    @property
    def deg_z(self) -> int:
        return len(self.indices)

    @property
    def deg_q(self) -> int:
        return -sum(self.indices)

    def is_fibonacci(self) -> bool:
        """All consecutive index gaps strictly exceed l."""
        return all(b - a > self.l for a, b in zip(self.indices, self.indices[1:]))

    def __str__(self):
        letter = "theta" if self.anticommutative else "e"
        if not self.indices:
            return "1"
        return "".join(f"{letter}[{i}]" for i in self.indices)

    def to_json(self) -> list[int]:
        return list(self.indices)


def sort_with_sign(indices) -> tuple[tuple, int]:
    """Sort indices ascending; return (sorted tuple, parity sign of the sort).

    Returns sign 0 when two indices coincide (anticommutative square).
    """
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


class FibPolynomial:
    """Finite linear combination of mode monomials with QuadScalar coefficients."""

    __slots__ = ("terms", "l", "anticommutative")

    def __init__(self, terms: dict, l: int, anticommutative: bool = False):
        clean = {}
        for mono, coeff in terms.items():
            if mono.l != l or mono.anticommutative != anticommutative:
                raise ValueError("monomial flavor mismatch in polynomial")
            if coeff:
                clean[mono] = coeff
        self.terms = clean
        self.l = l
        self.anticommutative = anticommutative

    @classmethod
    def zero(cls, l: int, anticommutative: bool = False) -> "FibPolynomial":
        return cls({}, l, anticommutative)

    def is_zero(self) -> bool:
        return not self.terms

    def is_fibonacci(self) -> bool:
        return all(m.is_fibonacci() for m in self.terms)

    def __eq__(self, other):
        if not isinstance(other, FibPolynomial):
            return NotImplemented
        return (
            self.l == other.l
            and self.anticommutative == other.anticommutative
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.l, self.anticommutative, tuple(sorted(
            (m.indices, c) for m, c in self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: m.indices):
            parts.append(f"{self.terms[mono]} * {mono}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        out = []
        for mono in sorted(self.terms, key=lambda m: m.indices):
            coeff = self.terms[mono]
            if not isinstance(coeff, QuadScalar):
                coeff = QuadScalar(coeff)
            out.append({"indices": list(mono.indices), "coeff": coeff.to_json()})
        return out


def enumerate_fib_monomials(
    l: int, max_index: int, anticommutative: bool, m: int, d: int
) -> list[FibMonomial]:
    """All Fibonacci-l monomials with deg_z = m, deg_q = d, indices <= max_index.

    Indices are chosen from the top down; since consecutive gaps must
    exceed l, a partial choice bounds the reachable degree and the search
    prunes exactly.  d may be negative: positive indices are legitimate
    variables whenever max_index allows them (deep basic subspaces).
    """
    if m < 0:
        raise ValueError("variable count must be non-negative")
    if m == 0:
        empty = FibMonomial((), l, anticommutative)
        return [empty] if d == 0 else []
    out = []

    def rec(top: int, remaining: int, need: int, chosen: list[int]):
        if remaining == 0:
            if need == 0:
                out.append(FibMonomial(tuple(reversed(chosen)), l, anticommutative))
            return
        # pick the largest remaining index i <= top, descending; the rest sit
        # at indices <= i-(l+1), whose least achievable degree bounds the scan
        i = top
        while True:
            rest = remaining - 1
            min_rest = -(rest * (i - (l + 1))) + (l + 1) * (rest * (rest - 1)) // 2
            if need + i < min_rest:
                break
            chosen.append(i)
            rec(i - (l + 1), rest, need + i, chosen)
            chosen.pop()
            i -= 1

    rec(max_index, m, d, [])
    return sorted(out, key=lambda mo: mo.indices)
