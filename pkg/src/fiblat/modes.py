"""Mode actions of lattice vertex operators on truncated Fock vectors.

The operator attached to mu = sigma*sqrt(D) is

    e^{mu q} z^{mu a_0} exp(-mu sum_{n<0} a_n z^{-n}/n) exp(-mu sum_{n>0} a_n z^{-n}/n)

with [a_0, q] = 1.  Modes are read off as x_n = [z^{-n-h}] with h the
standard-grading weight of |mu> (h = N for both signs when D = 2N; h = 0
for theta and h = D for theta* when D = 2N+1), so x_n always lowers the
weight by n and shifts the charge by sigma.

Application is exact: the annihilation exponential commuted through the
partition monomial leaves a finite sum, and the creation exponential
contributes one finite layer per needed z-power.  A requested degree
cutoff is enforced as a hard error, never a silent truncation, so every
reported zero is a statement about the full module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .configs import FibConfig, charge_and_degree, config_to_monomial
from .fock import FockBasisState, FockVector, enumerate_basis, heisenberg_apply, standard_weight
from .scalars import QuadScalar, sqrt_of
from .series import base_exponent, check_lattice


class CutoffExceeded(ValueError):
    """A mode image does not fit under the requested degree cutoff."""


def mode_shift(D: int, sigma: int) -> int:
    """Expansion shift h: weight of the generating highest vector."""
    N = check_lattice(D)
    if D % 2 == 0:
        return N
    return 0 if sigma > 0 else D


def annihilation_threshold(D: int, j: int, sigma: int = 1) -> int:
    """Largest n with x_n |j*sqrt(D)> != 0; zero holds exactly for n above it."""
    return -sigma * D * j - mode_shift(D, sigma)


@dataclass(frozen=True)
class VertexMode:
    sigma: int  # +1 or -1: mu = sigma*sqrt(D)
    n: int
    D: int

    def __post_init__(self):
        check_lattice(self.D)
        if self.sigma not in (1, -1):
            raise ValueError("sigma must be +1 or -1")

    @property
    def name(self) -> str:
        if self.D % 2 == 0:
            return "e" if self.sigma > 0 else "f"
        return "theta" if self.sigma > 0 else "theta*"

    def __str__(self):
        return f"{self.name}[{self.n}]"


@lru_cache(maxsize=8192)
def _removals(partition: tuple):
    """All ways to remove parts: (remaining_parts, removed_total,
    removed_count, multiplicity_factor) tuples."""
    sizes = sorted(set(partition))
    mults = [partition.count(k) for k in sizes]
    out = []
    for take in itertools.product(*[range(m + 1) for m in mults]):
        remaining = []
        for k, m, t in zip(sizes, mults, take):
            remaining.extend([k] * (m - t))
        removed_total = sum(k * t for k, t in zip(sizes, take))
        count = sum(take)
        factor = 1
        for m, t in zip(mults, take):
            factor *= factorial(m) // (factorial(t) * factorial(m - t))
        out.append((tuple(sorted(remaining, reverse=True)), removed_total, count, factor))
    return tuple(out)


@lru_cache(maxsize=1024)
def _creation_layers(r: int):
    """Partitions rho of r with the symmetric-function weight 1/z_rho,
    z_rho = prod k^{m_k} m_k!."""
    out = []

    def rec(remaining, max_part, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for k in range(min(remaining, max_part), 0, -1):
            rec(remaining - k, k, acc + [k])

    rec(r, r, [])
    layers = []
    for rho in out:
        z = 1
        for k in set(rho):
            m = rho.count(k)
            z *= k**m * factorial(m)
        layers.append((rho, Fraction(1, z)))
    return tuple(layers)


@lru_cache(maxsize=4096)
def _mu_power(D: int, sigma: int, t: int) -> QuadScalar:
    """(sigma*sqrt(D))^t in closed form."""
    if t % 2 == 0:
        return QuadScalar(D ** (t // 2), 0, D)
    return QuadScalar(0, sigma * D ** (t // 2), D)


@lru_cache(maxsize=262144)
def _state_image(sigma: int, n: int, D: int, state: FockBasisState) -> FockVector:
    """Exact mode image of a single basis state (the cacheable unit)."""
    shift = mode_shift(D, sigma)
    j = state.charge
    munu = sigma * D * j  # integer eigenvalue of mu*a_0 on charge j
    out: dict = {}
    for remaining, removed, count, factor in _removals(state.partition):
        r = removed - n - shift - munu
        if r < 0:
            continue
        sign = -1 if count % 2 else 1
        for rho, zweight in _creation_layers(r):
            coeff = _mu_power(D, sigma, count + len(rho)) * (sign * factor * zweight)
            new_state = FockBasisState(j + sigma, remaining + rho)
            if new_state in out:
                out[new_state] = out[new_state] + coeff
            else:
                out[new_state] = coeff
    return FockVector(D, out)


def apply_mode(mode: VertexMode, v: FockVector, degree_cutoff: int | None = None) -> FockVector:
    """Exact action of one vertex-operator mode on a Fock vector.

    With a degree cutoff, an image component above the cutoff raises
    CutoffExceeded; nothing is silently dropped.
    """
    D = mode.D
    if v.D != D:
        raise ValueError("vector lattice does not match mode lattice")
    acc: dict = {}
    for state, c in v.coeffs.items():
        for target, w in _state_image(mode.sigma, mode.n, D, state).coeffs.items():
            if target in acc:
                acc[target] = acc[target] + w * c
            else:
                acc[target] = w * c
    total = FockVector(D, acc)
    if degree_cutoff is not None:
        for state in total.coeffs:
            w = standard_weight(state, D)
            if w > degree_cutoff:
                raise CutoffExceeded(
                    f"{mode} image reaches weight {w} > cutoff {degree_cutoff}"
                )
    return total


def apply_monomial(
    D: int, j: int, indices, sigma: int = 1, degree_cutoff: int | None = None
) -> FockVector:
    """Apply x_{i_1} x_{i_2} ... x_{i_k} (indices ascending) to |j*sqrt(D)>.

    The rightmost (largest-index) factor acts first.  Exact images are
    cached (vectors are immutable), so repeated monomials are free.
    """
    if degree_cutoff is None:
        return _monomial_image(D, j, tuple(indices), sigma)
    v = FockVector.highest_weight(D, j)
    for n in reversed(list(indices)):
        v = apply_mode(VertexMode(sigma, n, D), v, degree_cutoff)
        if v.is_zero():
            return v
    return v


@lru_cache(maxsize=65536)
def _monomial_image(D: int, j: int, indices: tuple, sigma: int) -> FockVector:
    if not indices:
        return FockVector.highest_weight(D, j)
    v = _monomial_image(D, j, indices[1:], sigma)
    if v.is_zero():
        return v
    return apply_mode(VertexMode(sigma, indices[0], D), v)


@dataclass
class ModeMatrix:
    rows: list  # target basis states, charge j + sigma
    cols: list  # source basis states, charge j
    entries: dict  # (row_index, col_index) -> QuadScalar

    def entry(self, i: int, k: int) -> QuadScalar:
        return self.entries.get((i, k), QuadScalar(0))

    def dense(self):
        return [
            [self.entry(i, k) for k in range(len(self.cols))]
            for i in range(len(self.rows))
        ]


def mode_matrix(mode: VertexMode, D: int, j: int, degree_cutoff: int) -> ModeMatrix:
    """Exact matrix of a mode between graded bases under the cutoff.

    Columns run over charge-j states whose image still fits under the
    cutoff; rows over charge j+sigma states up to the cutoff.
    """
    src_max = min(degree_cutoff, degree_cutoff + mode.n)
    cols = []
    for d in range(base_exponent(D, j), src_max + 1):
        cols.extend(enumerate_basis(D, j, d))
    tgt = j + mode.sigma
    rows = []
    for d in range(base_exponent(D, tgt), degree_cutoff + 1):
        rows.extend(enumerate_basis(D, tgt, d))
    row_index = {s: i for i, s in enumerate(rows)}
    entries = {}
    for k, src in enumerate(cols):
        image = apply_mode(mode, FockVector(D, {src: QuadScalar(1, 0, D)}), degree_cutoff)
        for state, c in image.coeffs.items():
            entries[(row_index[state], k)] = c
    return ModeMatrix(rows, cols, entries)


@dataclass(frozen=True)
class RelationSpec:
    """One mode of a quadratic defining relation: x x^{(k)} at total index M."""

    D: int
    derivative_order: int
    total_index: int

    def __post_init__(self):
        N = check_lattice(self.D)
        k = self.derivative_order
        if self.D % 2 == 0:
            if k % 2 or not (0 <= k <= 2 * N - 2):
                raise ValueError(
                    f"even D={self.D} admits derivative orders 0,2,...,{2*N-2}; got {k}"
                )
        else:
            if k % 2 == 0 or not (1 <= k <= 2 * N - 1):
                raise ValueError(
                    f"odd D={self.D} admits derivative orders 1,3,...,{2*N-1}; got {k}"
                )

    @property
    def label(self) -> str:
        field = "e" if self.D % 2 == 0 else "theta"
        return f"{field}.{field}^({self.derivative_order})"


def _rising(x, k: int) -> Fraction:
    out = Fraction(1)
    for t in range(k):
        out *= x + t
    return out


def relation_apply(
    spec: RelationSpec, v: FockVector, degree_cutoff: int | None = None
) -> FockVector:
    """Apply the total-index-M mode of the relation field to v (expected 0).

    The infinite sum over index pairs collapses: with the larger index
    acting first, pairs beyond the annihilation bound of v act as zero.
    """
    D = spec.D
    if v.D != D:
        raise ValueError("vector lattice does not match relation lattice")
    N = check_lattice(D)
    M = spec.total_index
    k = spec.derivative_order
    even = D % 2 == 0

    def coeff_fn(m_index: int) -> Fraction:
        # weight carried by the differentiated factor at mode m
        return _rising(m_index + N, k) if even else _rising(m_index, k)

    out = FockVector.zero(D)
    if v.is_zero():
        return out
    b_max = max(
        standard_weight(s, D) - base_exponent(D, s.charge + 1) for s in v.coeffs
    )
    b = M - (M // 2)  # smallest b with b >= M - b
    for b_idx in range(b, b_max + 1):
        a_idx = M - b_idx
        if a_idx == b_idx:
            if not even:
                continue  # theta_b^2 = 0
            c = coeff_fn(b_idx)
        else:
            if even:
                c = coeff_fn(a_idx) + coeff_fn(b_idx)
            else:
                # theta_b theta_a = -theta_a theta_b
                c = coeff_fn(a_idx) - coeff_fn(b_idx)
        if not c:
            continue
        first = apply_mode(VertexMode(1, b_idx, D), v, degree_cutoff)
        if first.is_zero():
            continue
        second = apply_mode(VertexMode(1, a_idx, D), first, degree_cutoff)
        if second.is_zero():
            continue
        out = out + second.scale(QuadScalar(c, 0, D))
    if not even:
        out = out.scale(QuadScalar(-1, 0, D))
    return out


@dataclass
class Report:
    entries: list

    @property
    def passed(self) -> bool:
        return all(e["status"] == "pass" for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if e["status"] != "pass"]

    def to_json(self) -> list:
        return list(self.entries)


def derivative_orders(D: int) -> list[int]:
    N = check_lattice(D)
    if D % 2 == 0:
        return list(range(0, 2 * N - 1, 2))
    return list(range(1, 2 * N, 2))


def verify_relations(D: int, charges, degree_cutoff: int) -> Report:
    """Check every defining-relation mode whose image fits under the cutoff.

    Each entry covers one (relation, charge, total index) over all basis
    states of that charge up to the cutoff; pass means exactly zero.
    """
    entries = []
    for k in derivative_orders(D):
        for j in charges:
            states = []
            for d in range(base_exponent(D, j), degree_cutoff + 1):
                states.extend(enumerate_basis(D, j, d))
            if not states:
                continue
            w_max = max(standard_weight(s, D) for s in states)
            m_lo = w_max - degree_cutoff
            m_hi = w_max - base_exponent(D, j + 2)
            for M in range(m_lo, m_hi + 1):
                spec = RelationSpec(D, k, M)
                ok = True
                for s in states:
                    image = relation_apply(
                        spec, FockVector(D, {s: QuadScalar(1, 0, D)})
                    )
                    if not image.is_zero():
                        ok = False
                        break
                entries.append(
                    {
                        "relation": spec.label,
                        "charge": j,
                        "mode_index": M,
                        "status": "pass" if ok else "fail",
                    }
                )
    return Report(entries)


def _bracket(mode_a, mode_b, v: FockVector) -> FockVector:
    """[A, B] v = A(B v) - B(A v) for two mode-like callables."""
    return mode_a(mode_b(v)) - mode_b(mode_a(v))


def sl2_bracket_check(degree_cutoff: int, index_bound: int | None = None, charges=(-2, -1, 0, 1, 2)) -> Report:
    """Verify the level-1 affine sl2 bracket at D=2 on the truncated basis.

    e_n, f_n are the vertex modes, h_n = sqrt(2)*a_n, K = 1.
    """
    D = 2
    root2 = sqrt_of(2)
    if index_bound is None:
        index_bound = max(1, degree_cutoff // 2)
    states = []
    for j in charges:
        for d in range(base_exponent(D, j), degree_cutoff + 1):
            states.extend(enumerate_basis(D, j, d))
    vectors = [FockVector(D, {s: QuadScalar(1, 0, D)}) for s in states]

    def e(n):
        return lambda v: apply_mode(VertexMode(1, n, D), v)

    def f(n):
        return lambda v: apply_mode(VertexMode(-1, n, D), v)

    def h(n):
        return lambda v: heisenberg_apply(n, v).scale(root2)

    entries = []

    def record(label, n, m, ok):
        entries.append(
            {
                "relation": label,
                "charge": "all",
                "mode_index": [n, m],
                "status": "pass" if ok else "fail",
            }
        )

    idx = range(-index_bound, index_bound + 1)
    for n in idx:
        for m in idx:
            ok_ee = all(_bracket(e(n), e(m), v).is_zero() for v in vectors)
            record("[e_n,e_m]=0", n, m, ok_ee)
            ok_ff = all(_bracket(f(n), f(m), v).is_zero() for v in vectors)
            record("[f_n,f_m]=0", n, m, ok_ff)
            ok_ef = True
            for v in vectors:
                rhs = h(n + m)(v)
                if n == -m:
                    rhs = rhs + v.scale(n)
                if _bracket(e(n), f(m), v) != rhs:
                    ok_ef = False
                    break
            record("[e_n,f_m]=h_{n+m}+n*delta*K", n, m, ok_ef)
            ok_he = all(
                _bracket(h(n), e(m), v) == e(n + m)(v).scale(2) for v in vectors
            )
            record("[h_n,e_m]=2e_{n+m}", n, m, ok_he)
            ok_hf = all(
                _bracket(h(n), f(m), v) == f(n + m)(v).scale(-2) for v in vectors
            )
            record("[h_n,f_m]=-2f_{n+m}", n, m, ok_hf)
            ok_hh = True
            for v in vectors:
                rhs = v.scale(2 * n) if n == -m else FockVector.zero(D)
                if _bracket(h(n), h(m), v) != rhs:
                    ok_hh = False
                    break
            record("[h_n,h_m]=2n*delta*K", n, m, ok_hh)
    return Report(entries)


def heisenberg_vertex_commutator_check(
    D: int, degree_cutoff: int, osc_bound: int = 4, mode_bound: int = 4, charges=(-2, -1, 0, 1, 2)
) -> Report:
    """Check [a_i, x_j] = sigma*sqrt(D)*x_{i+j} for both mode signs."""
    root = sqrt_of(D)
    states = []
    for j in charges:
        for d in range(base_exponent(D, j), degree_cutoff + 1):
            states.extend(enumerate_basis(D, j, d))
    vectors = [FockVector(D, {s: QuadScalar(1, 0, D)}) for s in states]
    entries = []
    for sigma in (1, -1):
        for i in range(-osc_bound, osc_bound + 1):
            for n in range(-mode_bound, mode_bound + 1):
                ok = True
                for v in vectors:
                    lhs = heisenberg_apply(i, apply_mode(VertexMode(sigma, n, D), v)) - apply_mode(
                        VertexMode(sigma, n, D), heisenberg_apply(i, v)
                    )
                    rhs = apply_mode(VertexMode(sigma, i + n, D), v).scale(root * sigma)
                    if lhs != rhs:
                        ok = False
                        break
                entries.append(
                    {
                        "relation": f"[a_i,{VertexMode(sigma, 0, D).name}_j]",
                        "charge": "all",
                        "mode_index": [i, n],
                        "status": "pass" if ok else "fail",
                    }
                )
    return Report(entries)


def evaluate_semiinfinite(
    config: FibConfig, D: int, degree_cutoff: int | None = None
) -> FockVector:
    """Evaluate the semi-infinite monomial of a configuration in the Fock model.

    The vacuum tail is peeled off; the finite head acts on the deep highest
    weight vector.  The result is homogeneous of the configuration's
    (charge, degree).
    """
    head, j = config_to_monomial(config, D)
    sigma = 1
    v = apply_monomial(D, j, head.indices, sigma, degree_cutoff)
    m, d = charge_and_degree(config, D)
    if not v.is_zero():
        assert v.homogeneous_bidegree() == (m, d)
    return v
