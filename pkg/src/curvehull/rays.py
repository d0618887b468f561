"""Extreme rays of cones of polynomials nonnegative on an interval.

A linear system is an (n+1)-dimensional space of univariate polynomials,
normalized so the distinguished base point sits at t = 0 with strictly
decreasing vanishing orders.  Extreme-ray candidates are determinants of
confluent evaluation matrices; supporting faces, exact zero counts, the
nonvanishing sign of full evaluation determinants, and the sampled interval
validation all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import sympy

from .diagonal import evaluation_matrix, normalize_basis_orders, vandermonde_cofactor
from .linalg import det_frac, nullspace_frac, solve_frac
from .multipoly import MultiPoly
from .schur import schur_via_tableaux
from .unipoly import (Interval, UniPoly, _q, count_roots_interior,
                      count_roots_with_multiplicity, is_nonnegative_on,
                      poly_gcd, squarefree_decomposition)


@dataclass(frozen=True)
class LinearSystem:
    """Basis of a polynomial space in local coordinates (base point at 0).

    basis[i] vanishes at 0 to order orders[i], the orders strictly decrease,
    the coefficient of t^{orders[i]} in basis[i] is 1, and orders[-1] = 0
    (no base point).  base_point records the original distinguished point;
    every downstream interval and zero location is in local coordinates.
    """

    basis: tuple
    base_point: Fraction
    orders: tuple

    @property
    def n(self) -> int:
        return len(self.basis) - 1

    @property
    def dim(self) -> int:
        return len(self.basis)

    def member_coefficients(self, f: UniPoly):
        """Coordinates of f in the basis, or None if f is outside the span."""
        deg = max([p.degree for p in self.basis] + [f.degree])
        rows = [[p.coeff(k) for p in self.basis] for k in range(deg + 1)]
        return solve_frac(rows, [f.coeff(k) for k in range(deg + 1)])

    def contains(self, f: UniPoly) -> bool:
        return self.member_coefficients(f) is not None


def profile_and_normalize(basis, xi) -> LinearSystem:
    """Translate the basis so xi becomes 0, triangularize to strictly
    decreasing vanishing orders with unit leading Taylor coefficients, and
    strip the common power of t if xi was a base point."""
    xi = _q(xi)
    shifted = [(p if isinstance(p, UniPoly) else UniPoly(p)).shift(xi) for p in basis]
    normalized, orders = normalize_basis_orders(shifted)
    strip = orders[-1]
    if strip > 0:
        tpow = UniPoly.monomial(strip)
        normalized = tuple(p.exact_divide(tpow) for p in normalized)
        orders = tuple(o - strip for o in orders)
    return LinearSystem(basis=normalized, base_point=xi, orders=orders)


@dataclass(frozen=True)
class ZeroPattern:
    """Prescribed interior zeros xi_1 < ... < xi_r with multiplicities.

    Multiplicities need only be positive here; the even-multiplicity setting
    (the one extreme-ray claims are made for) is exposed via all_even.
    """

    points: tuple
    mults: tuple

    def __post_init__(self):
        points = tuple(_q(x) for x in self.points)
        mults = tuple(int(b) for b in self.mults)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "mults", mults)
        if len(points) != len(mults) or not points:
            raise ValueError("points and multiplicities must pair up")
        if any(b < 1 for b in mults):
            raise ValueError("multiplicities must be positive")
        if any(a >= b for a, b in zip(points, points[1:])):
            raise ValueError("points must be strictly increasing")

    @property
    def total(self) -> int:
        return sum(self.mults)

    @property
    def all_even(self) -> bool:
        return all(b % 2 == 0 for b in self.mults)

    def interior_to(self, s: Interval) -> bool:
        return all(s.strictly_contains(x) for x in self.points)


@dataclass(frozen=True)
class CandidateMatrix:
    """(n+1) x (n+1) matrix whose top row is the basis and whose remaining
    rows are derivative evaluations at the pattern points."""

    top: tuple
    evals: tuple

    def det_poly(self) -> UniPoly:
        """Determinant via cofactor expansion along the symbolic top row."""
        n1 = len(self.top)
        out = UniPoly.zero()
        for j, p in enumerate(self.top):
            minor = [[row[c] for c in range(n1) if c != j] for row in self.evals]
            cof = det_frac(minor) if minor else Fraction(1)
            if cof == 0:
                continue
            out = out + p * ((-1) ** j * cof)
        return out


def _derivative_rows(basis, points, mults):
    rows = []
    for x, b in zip(points, mults):
        derivs = list(basis)
        for k in range(b):
            rows.append(tuple(p(x) for p in derivs))
            derivs = [p.derivative() for p in derivs]
    return rows


def candidate_matrix(system: LinearSystem, pattern: ZeroPattern) -> CandidateMatrix:
    """Symbolic-top evaluation matrix for an extreme-ray candidate; the
    pattern must prescribe n conditions (one fewer than the dimension)."""
    if pattern.total != system.n:
        raise ValueError(
            f"pattern prescribes {pattern.total} conditions, need n = {system.n}")
    rows = _derivative_rows(system.basis, pattern.points, pattern.mults)
    return CandidateMatrix(top=tuple(system.basis), evals=tuple(rows))


def extreme_candidate(system: LinearSystem, pattern: ZeroPattern) -> UniPoly:
    """Determinant of the candidate matrix, sign-normalized.

    The result lies in the span of the basis and vanishes to order >= b_i at
    each pattern point; it is the zero polynomial exactly when the prescribed
    zero conditions cut out a space of dimension > 1 (callers must check).
    The sign is normalized so the value at the base point 0 is positive
    (equivalently, when the candidate vanishes at 0, so the lowest Taylor
    coefficient is positive)."""
    det = candidate_matrix(system, pattern).det_poly()
    if det.is_zero:
        return det
    lowest = det.coeffs[det.ord_at(0)]
    return det if lowest > 0 else -det


def zero_conditions_dim(system: LinearSystem, pattern: ZeroPattern) -> int:
    """Dimension of {f in span : ord_{xi_i}(f) >= b_i for every i}: the
    nullity of the derivative-evaluation condition matrix."""
    rows = _derivative_rows(system.basis, pattern.points, pattern.mults)
    if not rows:
        return system.dim
    return len(nullspace_frac(rows))


def _sympy_irreducible_factors(p: UniPoly):
    """Irreducible monic factors of p over Q (p squarefree in our usage)."""
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** k
               for k, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for fac, mult in factors:
        poly = sympy.Poly(fac, x)
        coeffs = [Fraction(c.p, c.q) for c in poly.all_coeffs()[::-1]]
        out.extend([UniPoly(coeffs).monic()] * mult)
    return out


def interval_supported_divisor(f: UniPoly, s: Interval) -> UniPoly:
    """The conjugate closure of the part of f whose roots lie in s.

    For each squarefree layer of f (multiplicity i), the irreducible factors
    with at least one root in the closed interval are kept and raised to the
    power i.  Over Q, a vanishing-order condition at one root propagates to
    all of its conjugates, so divisibility by this polynomial captures the
    conditions "at least f's zeros in s" exactly on rational spaces.
    """
    _, layers = squarefree_decomposition(f)
    d = UniPoly.one()
    for q, mult in layers:
        for h in _sympy_irreducible_factors(q):
            if count_roots_with_multiplicity(h, s) >= 1:
                d = d * h ** mult
    return d


def supporting_face_basis(system: LinearSystem, f: UniPoly, s: Interval):
    """Basis of the span of the supporting face of f: all members with at
    least f's zeros in s, multiplicities included.

    Computed as {g in span : d | g} with d the conjugate-closed
    interval-supported divisor of f; the kernel of the remainder-mod-d map
    on basis coordinates gives the face span.
    """
    if f.is_zero:
        raise ValueError("supporting face of the zero polynomial is undefined")
    coords = system.member_coefficients(f)
    if coords is None:
        raise ValueError("f is not in the span of the system")
    d = interval_supported_divisor(f, s)
    if d.degree <= 0:
        return list(system.basis)
    remainders = [p % d for p in system.basis]
    rows = [[r.coeff(k) for r in remainders] for k in range(d.degree)]
    basis = []
    for v in nullspace_frac(rows):
        g = UniPoly.zero()
        for c, p in zip(v, system.basis):
            g = g + c * p
        basis.append(g.monic())
    return basis


@dataclass(frozen=True)
class ExtremeReport:
    """verify_extreme outcome: exact nonnegativity, interior zero count with
    multiplicity, supporting-face dimension, and the extremality verdict."""

    nonneg: bool
    zero_count: int
    face_dim: int
    extreme: bool


def verify_extreme(system: LinearSystem, f: UniPoly, s: Interval) -> ExtremeReport:
    """Exact extremality report for a member f of the system on s.

    extreme means nonnegative with one-dimensional supporting face; an
    extreme member must have at least n interior zeros, and on validated
    intervals with positive endpoint values exactly n of them.

    All arithmetic is rational, so face_dim is the dimension of the face
    span inside the space of rational members.  When every zero of f in s is
    rational (in particular for candidates built from rational zero
    patterns) this agrees with the real face dimension; for f with
    irrational zeros whose conjugates leave s, the real face can be larger
    and the verdict speaks about the cone of rational members only.
    """
    if f.is_zero:
        raise ValueError("cannot report on the zero polynomial")
    if system.member_coefficients(f) is None:
        raise ValueError("f is not in the span of the system")
    nonneg = is_nonnegative_on(f, s)
    zero_count = count_roots_interior(f, s)
    face_dim = len(supporting_face_basis(system, f, s))
    return ExtremeReport(
        nonneg=nonneg,
        zero_count=zero_count,
        face_dim=face_dim,
        extreme=nonneg and face_dim == 1,
    )


def chebyshev_det_sign(system: LinearSystem, points, mults, s: Interval) -> int:
    """Exact sign of the full confluent evaluation determinant.

    Rows are the derivative evaluations p_j^(k)(xi_i), k < mult_i, with the
    multiplicities summing to n+1.  On an interval passing validation this
    determinant never vanishes; a zero sign falsifies the validation.
    """
    points = [_q(x) for x in points]
    mults = [int(b) for b in mults]
    if len(points) != len(mults):
        raise ValueError("points and multiplicities must pair up")
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    if any(not s.contains(x) for x in points):
        raise ValueError("points must lie in the interval")
    if any(x == s.lo for x in points):
        raise ValueError("points must differ from the base point")
    if any(b < 1 for b in mults):
        raise ValueError("multiplicities must be positive")
    if sum(mults) != system.dim:
        raise ValueError(f"multiplicities must sum to {system.dim}")
    det = det_frac(_derivative_rows(system.basis, points, mults))
    return (det > 0) - (det < 0)


# -- interval validation -------------------------------------------------------


@dataclass(frozen=True)
class IntervalValidation:
    """Outcome of the interval conditions: the base-point and sign conditions
    are exact; the cofactor-positivity condition is sampled on grids and
    explicitly non-exhaustive."""

    s0_no_base_point: bool
    s2_coordinate_nonneg: bool
    s1_sampled: bool
    s1_patterns: tuple
    samples: int
    exhaustive: bool = False
    note: str = "the derivative condition on the uniformizer holds identically"

    @property
    def all_pass(self) -> bool:
        return self.s0_no_base_point and self.s2_coordinate_nonneg and self.s1_sampled


def _compositions(total: int):
    """All ordered tuples of positive integers summing to total."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _cofactor_term_decomposition(system: LinearSystem):
    """Write the Vandermonde cofactor of the evaluation-matrix determinant as
    sum over Schur monomials alpha of t^alpha (1 + g_alpha) with g_alpha in
    the ideal (t_0, ..., t_n); returns {alpha: g_alpha} (g may be zero)."""
    cof = vandermonde_cofactor(evaluation_matrix(system.basis).det())
    if cof is None:
        raise AssertionError("evaluation determinant not divisible by the Vandermonde")
    sigma = schur_via_tableaux(system.orders)
    h = cof - sigma
    n1 = system.dim
    alphas = sorted(sigma.monomials())
    parts = {alpha: {} for alpha in alphas}
    for mono, c in h.terms.items():
        hit = None
        for alpha in alphas:
            if all(m >= a for m, a in zip(mono, alpha)) and mono != alpha:
                hit = alpha
                break
        if hit is None:
            raise AssertionError(
                "cofactor tail not in the product ideal; basis not normalized?")
        rest = tuple(m - a for m, a in zip(mono, hit))
        parts[hit][rest] = c
    return {alpha: MultiPoly(n1, terms) for alpha, terms in parts.items()}


def validate_interval(system: LinearSystem, s: Interval, samples: int) -> IntervalValidation:
    """Check the interval conditions for extreme-ray claims.

    Exact checks: the basis has no common zero in s, and the coordinate t is
    nonnegative on s.  The sampled check evaluates, for every block pattern,
    the collapsed cofactor factors 1 + g_alpha on a rational grid of
    samples^(r+1) configurations; it certifies only the sampled points.
    """
    if samples < 1:
        raise ValueError("need at least one sample per axis")
    g = system.basis[0]
    for p in system.basis[1:]:
        g = poly_gcd(g, p)
    s0 = g.degree <= 0 or count_roots_with_multiplicity(g, s) == 0
    s2 = s.lo >= 0

    try:
        g_alpha = _cofactor_term_decomposition(system)
    except AssertionError as exc:
        return IntervalValidation(
            s0_no_base_point=s0,
            s2_coordinate_nonneg=s2,
            s1_sampled=False,
            s1_patterns=(),
            samples=samples,
            note=f"cofactor decomposition unavailable: {exc}",
        )
    n1 = system.dim
    if samples == 1:
        axis = [s.lo + (s.hi - s.lo) / 2]
    else:
        axis = [s.lo + (s.hi - s.lo) * Fraction(k, samples - 1) for k in range(samples)]
    pattern_results = []
    all_ok = True
    for sizes in _compositions(n1):
        r1 = len(sizes)
        slot = []
        for nu, b in enumerate(sizes):
            slot.extend([nu] * b)
        collapsed = {alpha: g.merge_variables(slot, r1) for alpha, g in g_alpha.items()}
        ok = True
        if any(not g.is_zero for g in collapsed.values()):
            for point in product(axis, repeat=r1):
                for g in collapsed.values():
                    if g.is_zero:
                        continue
                    if 1 + g.evaluate(point) <= 0:
                        ok = False
                        break
                if not ok:
                    break
        pattern_results.append((sizes, ok))
        all_ok = all_ok and ok
    return IntervalValidation(
        s0_no_base_point=s0,
        s2_coordinate_nonneg=s2,
        s1_sampled=all_ok,
        s1_patterns=tuple(pattern_results),
        samples=samples,
    )
