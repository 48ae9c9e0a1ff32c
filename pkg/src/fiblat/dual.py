"""Functional realization of the restricted dual of the basic subspace W_0.

A charge-m dual form is a symmetric polynomial f(z_1..z_m) carried by the
prefactor prod_{i<j}(z_i - z_j)^D, together with the measure
(z_1...z_m)^{N-1} dz (D = 2N) or dz/(z_1...z_m) (D = 2N+1).  Pairing with
a mode monomial x_{n_1}...x_{n_m} represents each mode x_n by x^n and
extracts a multivariate residue, i.e. the coefficient of
prod z_i^{-n_{sigma(i)} - N} (even) or prod z_i^{-n_{sigma(i)}} (odd) in
f * prod(z_i - z_j)^D, summed over permutations sigma (with sgn(sigma)
in the odd case).

The mode polynomials of charge m form the quotient of a free
(super)commutative algebra on x_i, i <= -N (even) or i <= 0 (odd), by an
ideal generated by the non-annihilating modes of the defining relations;
every dual form must pair to exactly zero with every ideal element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .linalg import exact_rank
from .monomials import sort_with_sign
from .series import base_exponent, check_lattice
from .straighten import rising_factorial


class ChargeMismatch(ValueError):
    """Pairing a form with an element of a different charge."""


# ---------------------------------------------------------------------------
# small exact multivariate polynomials: dict[exponent tuple] -> Fraction

def poly_scale(p: dict, c) -> dict:
    c = Fraction(c)
    return {e: v * c for e, v in p.items() if v * c}


def poly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, v in q.items():
        w = out.get(e, Fraction(0)) + v
        if w:
            out[e] = w
        else:
            out.pop(e, None)
    return out


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, v1 in p.items():
        for e2, v2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            w = out.get(e, Fraction(0)) + v1 * v2
            if w:
                out[e] = w
            else:
                out.pop(e, None)
    return out


def poly_one(m: int) -> dict:
    return {(0,) * m: Fraction(1)}


def discriminant_power(m: int, power: int) -> dict:
    """prod_{i<j} (z_i - z_j)^power in m variables."""
    out = poly_one(m)
    for i in range(m):
        for jj in range(i + 1, m):
            zi = [0] * m
            zi[i] = 1
            zj = [0] * m
            zj[jj] = 1
            factor = {tuple(zi): Fraction(1), tuple(zj): Fraction(-1)}
            for _ in range(power):
                out = poly_mul(out, factor)
    return out


def monomial_symmetric(lam, m: int) -> dict:
    """Monomial symmetric polynomial m_lambda in m variables."""
    lam = tuple(sorted(lam, reverse=True))
    if len(lam) > m:
        raise ValueError("partition has more parts than variables")
    padded = lam + (0,) * (m - len(lam))
    return {e: Fraction(1) for e in set(permutations(padded))}


def is_symmetric(p: dict, m: int) -> bool:
    if m <= 1:
        return True
    for i in range(m - 1):
        swapped = {}
        for e, v in p.items():
            e2 = list(e)
            e2[i], e2[i + 1] = e2[i + 1], e2[i]
            swapped[tuple(e2)] = v
        if swapped != p:
            return False
    return True


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------


def partitions_at_most(n: int, parts: int):
    """Partitions of n into at most ``parts`` parts, as decreasing tuples."""

    def rec(remaining, max_part, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for k in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - k, k, slots - 1):
                yield (k,) + rest

    yield from rec(n, n, parts)


def dual_dim(D: int, m: int, d: int) -> int:
    """Graded dimension of the charge-m dual: partitions of d - base(m)
    into at most m parts, the monomial count of degree-(d - base(m))
    symmetric polynomials in m variables."""
    check_lattice(D)
    if m < 0 or d < 0:
        raise ValueError("charge and degree must be non-negative")
    excess = d - base_exponent(D, m)
    if excess < 0:
        return 0
    return sum(1 for _ in partitions_at_most(excess, m))


@dataclass(frozen=True)
class DualForm:
    """Symmetric polynomial datum of one dual functional of charge m."""

    D: int
    m: int
    f: tuple  # canonical tuple of (exponent tuple, Fraction)

    def __init__(self, D: int, m: int, f: dict):
        check_lattice(D)
        if not is_symmetric(f, m):
            raise ValueError("dual form polynomial must be symmetric")
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "f", tuple(sorted(f.items())))

    @property
    def f_dict(self) -> dict:
        return dict(self.f)

    @property
    def f_degree(self) -> int:
        degs = {sum(e) for e, _ in self.f}
        if len(degs) != 1:
            raise ValueError("form polynomial is not homogeneous")
        return degs.pop()

    @property
    def form_degree(self) -> int:
        """Total degree: deg f + base(m) under either parity's bookkeeping."""
        return self.f_degree + base_exponent(self.D, self.m)

    def integrand(self) -> dict:
        """f * prod_{i<j}(z_i - z_j)^D, the polynomial the residue reads."""
        return poly_mul(self.f_dict, discriminant_power(self.m, self.D))


def pair_with_integrand(h: dict, mode_indices, D: int) -> Fraction:
    """Raw residue pairing of an integrand polynomial with one mode monomial.

    Even D: extracts coefficients of prod z_i^{-n_{sigma(i)} - N};
    odd D: of prod z_i^{-n_{sigma(i)}}, weighted by sgn(sigma).
    """
    N = check_lattice(D)
    offset = N if D % 2 == 0 else 0
    odd = D % 2 == 1
    m = len(mode_indices)
    total = Fraction(0)
    for perm in permutations(range(m)):
        expo = tuple(-mode_indices[perm[i]] - offset for i in range(m))
        v = h.get(expo)
        if v is None:
            continue
        total += (_perm_sign(perm) * v) if odd else v
    return total


def pair(form: DualForm, element) -> Fraction:
    """Bilinear pairing of a dual form with a charge-m mode polynomial.

    ``element`` is either a single index tuple or a list of
    (index tuple, coefficient) terms.
    """
    if isinstance(element, tuple):
        element = [(element, Fraction(1))]
    h = form.integrand()
    total = Fraction(0)
    for indices, coeff in element:
        if len(indices) != form.m:
            raise ChargeMismatch(
                f"form charge {form.m} vs monomial charge {len(indices)}"
            )
        total += Fraction(coeff) * pair_with_integrand(h, tuple(indices), form.D)
    return total


@dataclass(frozen=True)
class IdealElement:
    """Homogeneous element of the relation ideal, as a monomial/coefficient list."""

    D: int
    charge: int
    degree: int
    terms: tuple  # ((indices...), Fraction), indices sorted ascending
    label: str

    def as_pairs(self):
        return [(idx, c) for idx, c in self.terms]


def mode_floor(D: int) -> int:
    """Largest allowed mode index in the charge-0 quotient presentation."""
    N = check_lattice(D)
    return -N if D % 2 == 0 else 0


def ideal_generators(D: int, m: int = 2, degree_window=(0, 8)) -> list[IdealElement]:
    """Quadratic ideal generators: modes of the restricted relation fields.

    For each derivative order k and total index M, the charge-2 expression
    over modes with indices <= -N (even) or <= 0 (odd); finite because both
    indices are bounded above.
    """
    if m != 2:
        raise ValueError("generators are quadratic; build products for m > 2")
    N = check_lattice(D)
    even = D % 2 == 0
    floor = mode_floor(D)
    lo_deg, hi_deg = degree_window
    out = []
    orders = range(0, 2 * N - 1, 2) if even else range(1, 2 * N, 2)
    for k in orders:
        for degree in range(max(lo_deg, 0), hi_deg + 1):
            M = -degree
            terms = []
            for b in range(M - M // 2, floor + 1):  # b = ceil(M/2) .. floor
                a = M - b
                if a == b:
                    if even:
                        c = rising_factorial(a + N, k)
                        if c:
                            terms.append(((a, b), c))
                else:
                    if even:
                        c = rising_factorial(a + N, k) + rising_factorial(b + N, k)
                    else:
                        c = rising_factorial(a, k) - rising_factorial(b, k)
                    if c:
                        terms.append(((a, b), c))
            if terms:
                field = "e+" if even else "theta+"
                out.append(
                    IdealElement(
                        D, 2, degree, tuple(sorted(terms)),
                        f"{field}.{field}^({k})@{M}",
                    )
                )
    return out


def free_monomials(D: int, m: int, d: int) -> list[tuple]:
    """Charge-m degree-d monomials of the free algebra on the allowed modes.

    Even D: multisets of m indices <= -N; odd D: strictly decreasing sets of
    m indices <= 0 (squares vanish).  Index tuples are sorted ascending.
    """
    check_lattice(D)
    floor = mode_floor(D)
    strict = D % 2 == 1
    out = []

    def rec(top, remaining, need, chosen):
        if remaining == 0:
            if need == 0:
                out.append(tuple(reversed(chosen)))
            return
        i = top
        while True:
            rest = remaining - 1
            step = 1 if strict else 0
            # least degree the rest can contribute with indices <= i - step
            best_rest = -(rest * (i - step)) + (step * rest * (rest - 1)) // 2
            if need + i < best_rest:
                break
            chosen.append(i)
            rec(i - step, rest, need + i, chosen)
            chosen.pop()
            i -= 1

    if m == 0:
        return [()] if d == 0 else []
    rec(floor, m, d, [])
    return out


def ideal_elements(D: int, m: int, d: int, generator_window=None) -> list[IdealElement]:
    """Charge-m degree-d ideal slice: generators times free monomials."""
    if m < 2:
        return []
    if generator_window is None:
        generator_window = (0, d)
    gens = ideal_generators(D, 2, generator_window)
    odd = D % 2 == 1
    out = []
    for gen in gens:
        if gen.degree > d:
            continue
        for mult in free_monomials(D, m - 2, d - gen.degree):
            terms: dict = {}
            for idx, c in gen.terms:
                if odd:
                    merged, s = sort_with_sign(idx + mult)
                    if s == 0:
                        continue
                    c = c * s
                else:
                    merged = tuple(sorted(idx + mult))
                terms[merged] = terms.get(merged, Fraction(0)) + c
            terms = {k: v for k, v in terms.items() if v}
            if terms:
                label = gen.label if not mult else f"{gen.label}*x{list(mult)}"
                out.append(IdealElement(D, m, d, tuple(sorted(terms.items())), label))
    return out


def form_basis(D: int, m: int, d: int) -> list[DualForm]:
    """Monomial symmetric basis of the charge-m degree-d dual forms."""
    excess = d - base_exponent(D, m)
    if excess < 0:
        return []
    if m == 0:
        return [DualForm(D, 0, poly_one(0))] if excess == 0 else []
    return [
        DualForm(D, m, monomial_symmetric(lam, m))
        for lam in partitions_at_most(excess, m)
    ]


def verify_annihilator(D: int, m: int, degree_window) -> list[dict]:
    """Annihilator and nondegeneracy check for one charge sector.

    For each degree d in the window: every spanning dual form must pair to
    exactly 0 with every ideal element, and the pairing matrix against the
    free monomials must have rank dual_dim(D, m, d).
    """
    lo, hi = degree_window
    entries = []
    for d in range(lo, hi + 1):
        forms = form_basis(D, m, d)
        ideal = ideal_elements(D, m, d)
        annihilated = True
        for form in forms:
            for element in ideal:
                if pair(form, element.as_pairs()) != 0:
                    annihilated = False
                    break
            if not annihilated:
                break
        monos = free_monomials(D, m, d)
        matrix = [[pair(form, mono) for mono in monos] for form in forms]
        rank = exact_rank(matrix) if matrix else 0
        expected = dual_dim(D, m, d)
        entries.append(
            {
                "D": D,
                "m": m,
                "degree": d,
                "n_forms": len(forms),
                "rank": rank,
                "annihilator_ok": annihilated and rank == expected == len(forms),
            }
        )
    return entries
