"""Ground-truth oracles for convex hulls of polynomial curve segments.

Independent of the pencil machinery: support functions are minimized
symbolically (Sturm isolation of critical points with rigorous rational
enclosures), finite-sample hull membership is exact phase-1 simplex
feasibility, and the cross validation plays these oracles against a block
pencil built for the same curve.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .lmi import BlockLMI, lmi_membership
from .unipoly import (Interval, UniPoly, _q, derivative_bound, isolate_roots,
                      refine_isolating_interval, squarefree_part)


@dataclass(frozen=True)
class CurveSegment:
    """Parametrized curve t -> (p_1(t), ..., p_n(t)) on a closed interval."""

    components: tuple
    domain: Interval

    def __post_init__(self):
        comps = tuple(p if isinstance(p, UniPoly) else UniPoly(p) for p in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("curve needs at least one component")
        if all(p.degree <= 0 for p in comps):
            raise ValueError("all components are constant")

    @property
    def n(self) -> int:
        return len(self.components)

    def point_at(self, t):
        t = _q(t)
        return tuple(p(t) for p in self.components)


def moment_curve(n: int, domain: Interval) -> CurveSegment:
    """(t, t^2, ..., t^n) on the given interval."""
    return CurveSegment(tuple(UniPoly.monomial(k) for k in range(1, n + 1)), domain)


@dataclass(frozen=True)
class RationalEnclosure:
    """Rational interval [lo, hi] known to contain an exact real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _q(self.lo))
        object.__setattr__(self, "hi", _q(self.hi))
        if self.lo > self.hi:
            raise ValueError("inverted enclosure")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def intersects(self, other: "RationalEnclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


def sample_curve(curve: CurveSegment, count: int):
    """count equally spaced curve points, endpoints included, exact."""
    if count < 2:
        raise ValueError("need at least two samples")
    a, b = curve.domain.lo, curve.domain.hi
    return [curve.point_at(a + (b - a) * Fraction(k, count - 1)) for k in range(count)]


def support_min_exact(l, curve: CurveSegment, width) -> RationalEnclosure:
    """Enclose min over the segment of the linear functional sum l_i p_i.

    Endpoint values are exact; each interior critical point (a root of the
    derivative, isolated by Sturm bisection) contributes an enclosure refined
    until a derivative bound certifies the requested width.  The minimum of
    intervals is again an interval of at most the individual width.
    """
    l = [_q(c) for c in l]
    width = _q(width)
    if len(l) != curve.n:
        raise ValueError("functional dimension mismatch")
    if width <= 0:
        raise ValueError("width must be positive")
    objective = UniPoly.zero()
    for c, p in zip(l, curve.components):
        objective = objective + c * p
    a, b = curve.domain.lo, curve.domain.hi
    candidates = [(objective(a), objective(a)), (objective(b), objective(b))]
    deriv = objective.derivative()
    if not deriv.is_zero and deriv.degree >= 1:
        for u, v in isolate_roots(squarefree_part(deriv), curve.domain):
            if u == v:
                val = objective(u)
                candidates.append((val, val))
                continue
            while True:
                bound = derivative_bound(objective, u, v) * (v - u)
                if 2 * bound <= width:
                    break
                u, v = refine_isolating_interval(squarefree_part(deriv), u, v, (v - u) / 4)
                if u == v:
                    break
            if u == v:
                val = objective(u)
                candidates.append((val, val))
            else:
                center = objective(u)
                candidates.append((center - bound, center + bound))
    return RationalEnclosure(min(lo for lo, _ in candidates),
                             min(hi for _, hi in candidates))


# -- exact LP membership -------------------------------------------------------


def _phase1_feasible(matrix, rhs) -> bool:
    """Exact phase-1 simplex with Bland's rule for {x >= 0 : matrix x = rhs}."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    tab = []
    for row, b in zip(matrix, rhs):
        row = [_q(x) for x in row] + [_q(b)]
        if row[-1] < 0:
            row = [-x for x in row]
        tab.append(row)
    for i in range(m):  # append artificial identity
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab[i] = tab[i][:-1] + art + [tab[i][-1]]
    total = n + m
    basis = list(range(n, total))
    # reduced-cost row for min(sum of artificials): z_j - c_j = sum_i tab[i][j] - c_j
    obj = [Fraction(0)] * (total + 1)
    for row in tab:
        for j in range(total + 1):
            obj[j] += row[j]
    for j in range(n, total):
        obj[j] -= 1
    while True:
        enter = next((j for j in range(total) if obj[j] > 0), None)  # Bland: lowest index
        if enter is None:
            break
        ratios = [(tab[i][-1] / tab[i][enter], basis[i], i)
                  for i in range(m) if tab[i][enter] > 0]
        if not ratios:
            raise ArithmeticError("phase-1 objective unbounded (impossible)")
        _, _, leave = min(ratios)
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter
    return obj[-1] == 0


def finite_hull_membership(points, x) -> bool:
    """Exact test for x in conv(points): existence of lambda >= 0 with
    sum lambda = 1 and sum lambda_i p_i = x, by phase-1 simplex feasibility."""
    points = [tuple(_q(c) for c in p) for p in points]
    x = tuple(_q(c) for c in x)
    if not points:
        raise ValueError("need at least one point")
    dim = len(points[0])
    if any(len(p) != dim for p in points) or len(x) != dim:
        raise ValueError("dimension mismatch")
    matrix = [[p[d] for p in points] for d in range(dim)]
    matrix.append([Fraction(1)] * len(points))
    rhs = list(x) + [Fraction(1)]
    return _phase1_feasible(matrix, rhs)


# -- LMI-side support values -----------------------------------------------------


def lmi_support_enclosure(lmi: BlockLMI, curve: CurveSegment, l, tol) -> RationalEnclosure:
    """Enclose the minimal value of the functional l over the pencil set.

    Branch and bound over the curve parameter with exact Lipschitz lower
    bounds per cell; incumbents are curve points confirmed members by the
    exact PSD check.  Sound for hulls of curve segments, where linear
    functionals attain their minima on the curve; the cross-validation
    report records this as a one-sided check.
    """
    l = [_q(c) for c in l]
    tol = _q(tol)
    if len(l) != curve.n or lmi.n != curve.n:
        raise ValueError("dimension mismatch")
    objective = UniPoly.zero()
    for c, p in zip(l, curve.components):
        objective = objective + c * p
    a, b = curve.domain.lo, curve.domain.hi

    def confirmed_value(t) -> Fraction:
        point = curve.point_at(t)
        if not lmi_membership(lmi, point):
            raise AssertionError("curve point rejected by the pencil")
        return objective(t)

    incumbent = min(confirmed_value(a), confirmed_value(b))
    cells = [(a, b)]
    while True:
        best_lower = incumbent
        next_cells = []
        for u, v in cells:
            slope = derivative_bound(objective, u, v)
            cell_min = min(objective(u), objective(v))
            lower = cell_min - slope * (v - u) / 2
            if lower >= incumbent:
                continue  # cell cannot beat the incumbent
            mid = (u + v) / 2
            incumbent = min(incumbent, confirmed_value(mid))
            next_cells.extend([(u, mid), (mid, v)])
            best_lower = min(best_lower, lower)
        if incumbent - best_lower <= tol or not next_cells:
            return RationalEnclosure(best_lower, incumbent)
        cells = next_cells


# -- cross validation -------------------------------------------------------------


@dataclass
class CrossValidationReport:
    """Aggregate of probe and support-function comparisons."""

    n: int
    trials: int
    hull_members_checked: int = 0
    lmi_nonmembers_checked: int = 0
    failures: list = field(default_factory=list)
    support_table: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "hull_members_checked": self.hull_members_checked,
            "lmi_nonmembers_checked": self.lmi_nonmembers_checked,
            "failures": list(self.failures),
            "support_table": [
                {
                    "l": [str(c) for c in row["l"]],
                    "curve_enclosure": [str(row["curve_enclosure"].lo),
                                        str(row["curve_enclosure"].hi)],
                    "lmi_enclosure": [str(row["lmi_enclosure"].lo),
                                      str(row["lmi_enclosure"].hi)],
                    "intersects": row["intersects"],
                    "one_sided_lmi_bound": True,
                }
                for row in self.support_table
            ],
            "all_pass": self.all_pass,
        }


def _random_rational(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    """Uniform-ish rational in [lo, hi] with denominator at most 1000."""
    den = rng.randint(1, 1000)
    lo_num = lo * den
    hi_num = hi * den
    num = rng.randint(int(lo_num) , int(hi_num))
    x = Fraction(num, den)
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x


def cross_validate(curve: CurveSegment, lmi: BlockLMI, trials: int,
                   seed: int = 0, sample_count: int = 60,
                   support_functionals: int = 8,
                   support_width=Fraction(1, 10 ** 6)) -> CrossValidationReport:
    """Play the exact hull oracles against a pencil built for the same curve.

    Per probe: a sample-hull member must be a pencil member, and a pencil
    non-member must be outside the sample hull (the sample hull sits inside
    the true hull, which the pencil set must contain).  Per functional: the
    symbolic support enclosure and the branch-and-bound pencil-side
    enclosure must intersect.
    """
    if lmi.n != curve.n:
        raise ValueError("pencil and curve dimensions differ")
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    report = CrossValidationReport(n=curve.n, trials=trials)
    samples = sample_curve(curve, sample_count)
    lo_box = [min(p[d] for p in samples) for d in range(curve.n)]
    hi_box = [max(p[d] for p in samples) for d in range(curve.n)]
    pad = [(h - l) / 4 if h > l else Fraction(1) for l, h in zip(lo_box, hi_box)]
    for trial in range(trials):
        if trial % 2 == 0:
            weights = [Fraction(rng.randint(0, 100)) for _ in range(3)]
            total = sum(weights) or Fraction(1)
            picks = [samples[rng.randrange(len(samples))] for _ in range(3)]
            probe = tuple(
                sum((w * p[d] for w, p in zip(weights, picks)), Fraction(0)) / total
                for d in range(curve.n))
        else:
            probe = tuple(
                _random_rational(rng, l - p, h + p)
                for l, h, p in zip(lo_box, hi_box, pad))
        in_hull = finite_hull_membership(samples, probe)
        in_lmi = lmi_membership(lmi, probe)
        if in_hull:
            report.hull_members_checked += 1
            if not in_lmi:
                report.failures.append(
                    f"sample-hull member rejected by the pencil: {[str(c) for c in probe]}")
        if not in_lmi:
            report.lmi_nonmembers_checked += 1
            if in_hull:
                report.failures.append(
                    f"pencil non-member inside the sample hull: {[str(c) for c in probe]}")
    for _ in range(support_functionals):
        l = [Fraction(rng.randint(-5, 5)) for _ in range(curve.n)]
        if all(c == 0 for c in l):
            l[0] = Fraction(1)
        curve_enc = support_min_exact(l, curve, support_width)
        lmi_enc = lmi_support_enclosure(lmi, curve, l, support_width)
        hit = curve_enc.intersects(lmi_enc)
        if not hit:
            report.failures.append(
                f"support enclosures disjoint for l = {[str(c) for c in l]}")
        report.support_table.append({
            "l": l,
            "curve_enclosure": curve_enc,
            "lmi_enclosure": lmi_enc,
            "intersects": hit,
        })
    return report
