"""Straightening of mode monomials into the Fibonacci normal form.

The quadratic defining relations, organized by total mode index, give for
each center n a linear system relating the pairs x_{n-k} x_{n+k} (or
x_{n-k} x_{n+1+k}).  The leading principal N x N minor of the coefficient
matrix, built from rising factorials H_k(x) = x(x+1)...(x+k-1), is
nondegenerate (its determinant reduces to an even or odd Vandermonde
determinant), so every "near" pair (index gap <= 2N-1 for D = 2N,
<= 2N for D = 2N+1) rewrites into "far" pairs only.

Repeatedly rewriting the topmost violating pair terminates: a rewrite
replaces (a, b) by pairs (a-t, b+t) with t >= 1, strictly increasing the
index spread, while grading keeps the set of monomials alive on a given
highest weight vector finite.  The infinite relation tails are truncated
against the annihilation bound of the exact charge and weight at which
the pair acts, so equality on the chosen highest weight vector is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .fock import FockVector, enumerate_basis, standard_weight
from .linalg import AmbiguousSolve, InconsistentSolve, det_rational, exact_rank, solve_exact
from .modes import CutoffExceeded, annihilation_threshold, apply_monomial
from .monomials import FibMonomial, FibPolynomial, enumerate_fib_monomials, sort_with_sign
from .scalars import QuadScalar
from .series import base_exponent, bounded_partition_count, check_lattice


class SingularMinor(ArithmeticError):
    """A leading principal relation minor degenerated; fatal verification failure."""


class NonTermination(RuntimeError):
    """The rewriting pass exceeded its derived iteration bound."""


DIAGONAL = "diagonal"
OFFDIAGONAL = "offdiagonal"


def rising_factorial(x, k: int) -> Fraction:
    """H_k(x) = x(x+1)...(x+k-1), exact; H_0 = 1."""
    if k < 0:
        raise ValueError("order must be non-negative")
    out = Fraction(1)
    x = Fraction(x)
    for t in range(k):
        out *= x + t
    return out


def relation_matrix(D: int, family: str, n: int, columns: int) -> list:
    """Truncated relation coefficient matrix as displayed: N rows.

    Diagonal family: column k multiplies x_{n-k} x_{n+k} (k from 0 for even
    D, from 1 for odd D, where the diagonal term dies by anticommutativity).
    Off-diagonal family: column k multiplies x_{n-k} x_{n+1+k}, k from 0.
    """
    N = check_lattice(D)
    if family not in (DIAGONAL, OFFDIAGONAL):
        raise ValueError(f"unknown family {family!r}")
    if columns < N:
        raise ValueError(f"need at least N={N} columns")
    rows = []
    if D % 2 == 0:
        if family == DIAGONAL:
            rows.append([Fraction(1, 2)] + [Fraction(1)] * (columns - 1))
            for l in range(1, N):
                row = [rising_factorial(N + n, 2 * l)]
                for k in range(1, columns):
                    row.append(
                        rising_factorial(N + n + k, 2 * l)
                        + rising_factorial(N + n - k, 2 * l)
                    )
                rows.append(row)
        else:
            rows.append([Fraction(1)] * columns)
            for l in range(1, N):
                row = []
                for k in range(columns):
                    row.append(
                        rising_factorial(N + n - k, 2 * l)
                        + rising_factorial(N + n + k + 1, 2 * l)
                    )
                rows.append(row)
    else:
        if family == DIAGONAL:
            for l in range(1, N + 1):
                row = []
                for k in range(1, columns + 1):
                    row.append(
                        rising_factorial(n + k, 2 * l - 1)
                        - rising_factorial(n - k, 2 * l - 1)
                    )
                rows.append(row)
        else:
            for l in range(1, N + 1):
                row = []
                for k in range(columns):
                    row.append(
                        rising_factorial(n + 1 + k, 2 * l - 1)
                        - rising_factorial(n - k, 2 * l - 1)
                    )
                rows.append(row)
    return rows


def pair_for_column(D: int, family: str, n: int, col: int) -> tuple:
    """The index pair multiplied by the given matrix column."""
    if D % 2 == 1 and family == DIAGONAL:
        k = col + 1
        return (n - k, n + k)
    if family == DIAGONAL:
        return (n - col, n + col)
    return (n - col, n + 1 + col)


def vandermonde_det(kind: str, points) -> Fraction:
    """Determinant with rows (x^0, x^2, ...) (even) or (x^1, x^3, ...) (odd)."""
    pts = [Fraction(p) for p in points]
    s = len(pts)
    if kind == "even":
        powers = [2 * t for t in range(s)]
    elif kind == "odd":
        powers = [2 * t + 1 for t in range(s)]
    else:
        raise ValueError(f"kind must be 'even' or 'odd', got {kind!r}")
    matrix = [[x**p for p in powers] for x in pts]
    return det_rational(matrix)


class NearPairRewrite:
    """Exact expansion of every near pair of one family at one center.

    expansions[near_col] is a tuple of ((a, b), Fraction) far-pair terms,
    valid whenever far pairs beyond column N - 1 + tail_truncation act as
    zero (which the caller guarantees through an annihilation bound).
    """

    __slots__ = ("D", "family", "center", "tail_truncation", "expansions")

    def __init__(self, D, family, center, tail_truncation, expansions):
        self.D = D
        self.family = family
        self.center = center
        self.tail_truncation = tail_truncation
        self.expansions = expansions

    def near_pairs(self):
        N = check_lattice(self.D)
        return [pair_for_column(self.D, self.family, self.center, c) for c in range(N)]


@lru_cache(maxsize=None)
def solve_near_pairs(D: int, family: str, n: int, tail_truncation: int) -> NearPairRewrite:
    """Invert the leading principal N x N minor exactly.

    Expresses each near pair as a combination of the far pairs in columns
    N .. N + tail_truncation - 1.  A singular minor would falsify the
    nondegeneracy claim and raises SingularMinor.
    """
    if tail_truncation < 0:
        raise ValueError("tail truncation must be non-negative")
    N = check_lattice(D)
    columns = N + tail_truncation
    matrix = relation_matrix(D, family, n, columns)
    block = [row[:N] for row in matrix]
    if det_rational(block) == 0:
        raise SingularMinor(
            f"leading {N}x{N} minor of {family} family at center {n} is singular"
        )
    expansions = {c: [] for c in range(N)}
    for far in range(N, columns):
        rhs = [-row[far] for row in matrix]
        coeffs = solve_exact(block, rhs)
        far_pair = pair_for_column(D, family, n, far)
        for c in range(N):
            if coeffs[c]:
                expansions[c].append((far_pair, coeffs[c]))
    return NearPairRewrite(
        D, family, n, tail_truncation, {c: tuple(v) for c, v in expansions.items()}
    )


def classify_pair(D: int, a: int, b: int):
    """(family, center, near column) for a near pair a <= b; None if far."""
    N = check_lattice(D)
    gap = b - a
    near_limit = 2 * N - 1 if D % 2 == 0 else 2 * N
    if gap > near_limit:
        return None
    if gap % 2 == 0:
        center = (a + b) // 2
        k = gap // 2
        col = k if D % 2 == 0 else k - 1
        if D % 2 == 1 and k == 0:
            raise ValueError("diagonal pair of an anticommutative field is zero")
        return DIAGONAL, center, col
    center = (a + b - 1) // 2
    return OFFDIAGONAL, center, (gap - 1) // 2


def _alive(D: int, j: int, indices) -> bool:
    """False when the monomial kills |j*sqrt(D)> for pure grading reasons."""
    c = j
    w = base_exponent(D, j)
    for i in reversed(indices):
        w -= i
        c += 1
        if w < base_exponent(D, c):
            return False
    return True


def _iteration_bound(D: int, j: int, indices) -> int:
    """Generous cap from the finite box of grading-alive index multisets."""
    m = len(indices)
    if m == 0:
        return 16
    top = annihilation_threshold(D, j)
    lo = min(sum(indices) - (m - 1) * top, min(indices))
    width = max(top - lo + 1, 1)
    return 64 + 50 * comb(width + m, m)


def straighten_monomial(
    D: int, j: int, monomial, degree_cutoff: int | None = None
) -> FibPolynomial:
    """Rewrite x_{i_1}...x_{i_m} |j*sqrt(D)> into the Fibonacci normal form.

    Returns the unique Fibonacci polynomial P with
    P |j*sqrt(D)> = monomial |j*sqrt(D)> in the Fock model.  Monomials that
    die on the highest weight vector for grading reasons are dropped; the
    relation tails are truncated against the exact weight at which each
    rewritten pair acts.
    """
    N = check_lattice(D)
    even = D % 2 == 0
    l = 2 * N - 1 if even else 2 * N
    anticomm = not even

    def canonical(indices):
        if even:
            return tuple(sorted(indices)), 1
        return sort_with_sign(indices)

    idx, sign = canonical(tuple(monomial))
    terms: dict = {}
    if sign and _alive(D, j, idx):
        terms[idx] = QuadScalar(sign, 0, D)
    done: dict = {}
    steps = 0
    bound = _iteration_bound(D, j, idx)

    def add(store, key, coeff):
        if key in store:
            total = store[key] + coeff
            if total:
                store[key] = total
            else:
                del store[key]
        elif coeff:
            store[key] = coeff

    while terms:
        steps += 1
        if steps > bound:
            raise NonTermination(
                f"straightening exceeded {bound} rewrites; would falsify termination"
            )
        indices, coeff = terms.popitem()
        m = len(indices)
        # topmost violating adjacent pair
        pos = None
        for p in range(m - 2, -1, -1):
            if indices[p + 1] - indices[p] <= l:
                pos = p
                break
        if pos is None:
            add(done, indices, coeff)
            continue
        a, b = indices[pos], indices[pos + 1]
        rest_right = indices[pos + 2 :]
        rest_left = indices[:pos]
        # charge and exact weight at which the pair's upper factor acts
        charge_here = j + len(rest_right)
        weight_here = base_exponent(D, j) - sum(rest_right)
        t_max = weight_here - b - base_exponent(D, charge_here + 1)
        if t_max < 1:
            continue  # every far term acts as zero here
        if not even and a == b:
            continue  # theta^2 = 0
        family, center, col = classify_pair(D, a, b)
        k_near = col if not (family == DIAGONAL and not even) else col + 1
        if family == DIAGONAL and not even:
            k_of_first_far = N + 1
        else:
            k_of_first_far = N
        truncation = t_max - (k_of_first_far - k_near) + 1
        if truncation < 1:
            continue
        rewrite = solve_near_pairs(D, family, center, truncation)
        for (a2, b2), frac in rewrite.expansions[col]:
            if b2 - b > t_max:
                continue
            new_idx, s = canonical(rest_left + (a2, b2) + rest_right)
            if s == 0 or not _alive(D, j, new_idx):
                continue
            add(terms, new_idx, coeff * QuadScalar(frac, 0, D) * s)
    result = FibPolynomial(
        {FibMonomial(k, l, anticomm): v for k, v in done.items()}, l, anticomm
    )
    assert result.is_fibonacci()
    if degree_cutoff is not None:
        for mono in result.terms:
            if base_exponent(D, j) + mono.deg_q > degree_cutoff:
                raise CutoffExceeded("normal form exceeds the requested cutoff")
    return result


def evaluate_fib_polynomial(poly: FibPolynomial, D: int, j: int) -> FockVector:
    """Apply a mode polynomial to |j*sqrt(D)> in the Fock model."""
    sigma = 1
    total = FockVector.zero(D)
    for mono, coeff in poly.terms.items():
        total = total + apply_monomial(D, j, mono.indices, sigma).scale(coeff)
    return total


def expand_in_fib_basis(D: int, j: int, target: FockVector, m: int, d: int) -> FibPolynomial:
    """Exact coordinates of a Fock vector over the Fibonacci monomial images.

    Solves target = sum c_a (monomial_a)|j*sqrt(D)> by exact elimination;
    this is the straightening oracle, built only from direct mode actions.
    Raises InconsistentSolve when the target is outside the span and
    AmbiguousSolve when the images are dependent.
    """
    N = check_lattice(D)
    even = D % 2 == 0
    l = 2 * N - 1 if even else 2 * N
    anticomm = not even
    for state in target.coeffs:
        if state.charge != m or standard_weight(state, D) != d:
            raise ValueError(f"target not homogeneous of bidegree ({m},{d})")
    if m >= j:
        monos = enumerate_fib_monomials(
            l, annihilation_threshold(D, j), anticomm, m - j, d - base_exponent(D, j)
        )
    else:
        monos = []
    if not monos:
        if target.is_zero():
            return FibPolynomial.zero(l, anticomm)
        raise InconsistentSolve("nonzero target with no Fibonacci monomials")
    basis = enumerate_basis(D, m, d)
    if not basis:
        raise AmbiguousSolve("monomials over a zero-dimensional component")
    index = {s: i for i, s in enumerate(basis)}
    zero = QuadScalar(0, 0, D)
    columns = []
    for mono in monos:
        vec = apply_monomial(D, j, mono.indices)
        col = [zero] * len(basis)
        for state, c in vec.coeffs.items():
            col[index[state]] = c
        columns.append(col)
    matrix = [[columns[c][r] for c in range(len(monos))] for r in range(len(basis))]
    rhs = [zero] * len(basis)
    for state, c in target.coeffs.items():
        rhs[index[state]] = c
    coords = solve_exact(matrix, rhs)
    return FibPolynomial(
        {mono: c for mono, c in zip(monos, coords) if c}, l, anticomm
    )


def independence_and_span_check(D: int, j: int, m: int, d: int) -> dict:
    """Rank of the Fibonacci monomial images at one Fock bidegree.

    Passes when rank = number of monomials = basic-subspace character
    coefficient, the computational content of the basis theorem.
    """
    N = check_lattice(D)
    even = D % 2 == 0
    l = 2 * N - 1 if even else 2 * N
    if m >= j:
        monos = enumerate_fib_monomials(
            l, annihilation_threshold(D, j), not even, m - j, d - base_exponent(D, j)
        )
    else:
        monos = []
    basis = enumerate_basis(D, m, d)
    index = {s: i for i, s in enumerate(basis)}
    zero = QuadScalar(0, 0, D)
    rows = []
    for mono in monos:
        vec = apply_monomial(D, j, mono.indices)
        row = [zero] * len(basis)
        for state, c in vec.coeffs.items():
            row[index[state]] = c
        rows.append(row)
    rank = exact_rank(rows) if rows else 0
    char_coeff = (
        bounded_partition_count(d - base_exponent(D, m), m - j) if m >= j else 0
    )
    ok = rank == len(monos) == char_coeff
    return {
        "D": D,
        "j": j,
        "charge": m,
        "degree": d,
        "n_monomials": len(monos),
        "rank": rank,
        "char_coeff": char_coeff,
        "status": "pass" if ok else "fail",
    }
