"""Dense univariate polynomials over exact rationals.

Everything in this module is exact: coefficients are `fractions.Fraction`,
root counting runs Sturm chains on squarefree parts, and sign questions on
closed intervals are decided symbolically.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with rational endpoints and lo < hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _q(self.lo))
        object.__setattr__(self, "hi", _q(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"degenerate interval [{self.lo}, {self.hi}]")

    def contains(self, x) -> bool:
        return self.lo <= _q(x) <= self.hi

    def strictly_contains(self, x) -> bool:
        return self.lo < _q(x) < self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


class UniPoly:
    """Univariate polynomial with Fraction coefficients, dense by degree.

    Instances are immutable; all operations return new polynomials. The zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def t(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading_coeff(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x) -> Fraction:
        x = _q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q = [Fraction(0)] * max(len(self.coeffs) - len(o.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlead = o.leading_coeff
        dn = o.degree
        while len(rem) - 1 >= dn and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dn:
                break
            k = len(rem) - 1 - dn
            f = rem[-1] / dlead
            q[k] = f
            for j, c in enumerate(o.coeffs):
                rem[k + j] -= f * c
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_divide(self, other) -> "UniPoly":
        """Exact quotient self/other; raises ValueError if the division leaves a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("not divisible")
        return q

    # -- calculus and rigid motions ----------------------------------------

    def derivative(self, k: int = 1) -> "UniPoly":
        """k-th derivative; derivative(p, 0) = p."""
        if k < 0:
            raise ValueError("negative derivative order")
        p = self
        for _ in range(k):
            p = UniPoly([i * c for i, c in enumerate(p.coeffs)][1:])
        return p

    def shift(self, a) -> "UniPoly":
        """Return q with q(t) = self(t + a)."""
        a = _q(a)
        if a == 0:
            return self
        acc = UniPoly.zero()
        x_plus_a = UniPoly((a, 1))
        for c in reversed(self.coeffs):
            acc = acc * x_plus_a + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lc = self.leading_coeff
        return UniPoly([c / lc for c in self.coeffs])

    def ord_at(self, xi) -> int:
        """Vanishing order at the rational point xi (0 if xi is not a root)."""
        if self.is_zero:
            raise ValueError("vanishing order of the zero polynomial is undefined")
        p = self.shift(xi) if _q(xi) != 0 else self
        for k, c in enumerate(p.coeffs):
            if c != 0:
                return k
        raise AssertionError("unreachable")

    def to_string(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                tk = var if k == 1 else f"{var}^{k}"
                if c == 1:
                    term = tk
                elif c == -1:
                    term = f"-{tk}"
                else:
                    term = f"{c}*{tk}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"UniPoly({self.to_string()})"


# -- gcd and squarefree structure ------------------------------------------


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor (gcd(0, 0) = 0)."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic() if not a.is_zero else a


def squarefree_decomposition(p: UniPoly):
    """Yun decomposition p = unit * prod f_i^i with the f_i monic, squarefree, coprime.

    Returns (unit, [(f_i, i), ...]) sorted by multiplicity; constants yield an
    empty factor list.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    unit = p.leading_coeff
    a = p.monic()
    if a.degree == 0:
        return unit, []
    g = poly_gcd(a, a.derivative())
    if g.degree == 0:
        return unit, [(a, 1)]
    b = a.exact_divide(g)
    d = a.derivative().exact_divide(g) - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        b = b.exact_divide(f)
        d = d.exact_divide(f) - b.derivative()
        if f.degree > 0:
            out.append((f, i))
        i += 1
    return unit, out


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of p."""
    _, factors = squarefree_decomposition(p)
    out = UniPoly.one()
    for f, _ in factors:
        out = out * f
    return out


# -- Sturm machinery ---------------------------------------------------------


def sturm_chain(q: UniPoly):
    """Sturm chain of a squarefree polynomial (positive scalings only)."""
    chain = [q, q.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        rem = -(chain[-2] % chain[-1])
        if rem.is_zero:
            break
        lc = rem.leading_coeff
        if lc < 0:
            lc = -lc
        chain.append(UniPoly([c / lc for c in rem.coeffs]))
    return chain


def _variations(chain, x) -> int:
    vals = [p(x) for p in chain]
    signs = [1 if v > 0 else -1 for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_squarefree_closed(q: UniPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots of squarefree q in the closed interval [lo, hi]."""
    if q.degree <= 0:
        return 0
    count = 0
    if q(lo) == 0:
        count += 1
        q = q.exact_divide(UniPoly((-lo, 1)))
    if q(hi) == 0:
        count += 1
        q = q.exact_divide(UniPoly((-hi, 1)))
    if q.degree <= 0:
        return count
    chain = sturm_chain(q)
    return count + _variations(chain, lo) - _variations(chain, hi)


def count_roots_with_multiplicity(p: UniPoly, s: Interval) -> int:
    """Total multiplicity of the roots of p in the closed interval s, exactly.

    Squarefree layers come from the Yun decomposition; each layer is counted
    with a Sturm chain (endpoint roots deflated first so the chain is applied
    with nonvanishing endpoint values) and weighted by its multiplicity.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    _, factors = squarefree_decomposition(p)
    return sum(mult * _count_squarefree_closed(f, s.lo, s.hi) for f, mult in factors)


def count_roots_interior(p: UniPoly, s: Interval) -> int:
    """Total multiplicity of the roots of p in the open interval (lo, hi)."""
    closed = count_roots_with_multiplicity(p, s)
    return closed - p.ord_at(s.lo) - p.ord_at(s.hi)


def _interior_nonroot(p: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """Some interior rational point where p does not vanish."""
    n = p.degree + 2
    for k in range(1, n + 1):
        x = lo + (hi - lo) * Fraction(k, n + 1)
        if p(x) != 0:
            return x
    raise AssertionError("polynomial with more roots than its degree")


def is_nonnegative_on(p: UniPoly, s: Interval) -> bool:
    """Exact test for p >= 0 on the closed interval s.

    p is nonnegative on [lo, hi] iff it has no odd-multiplicity root strictly
    inside and is positive at one interior non-root point: an interior sign
    change forces an odd-order crossing, and endpoint negativity would create
    one by the intermediate value theorem.
    """
    if p.is_zero:
        return True
    _, factors = squarefree_decomposition(p)
    for f, mult in factors:
        if mult % 2 == 1:
            inside = _count_squarefree_closed(f, s.lo, s.hi)
            if f(s.lo) == 0:
                inside -= 1
            if f(s.hi) == 0:
                inside -= 1
            if inside > 0:
                return False
    return p(_interior_nonroot(p, s.lo, s.hi)) > 0


# -- root isolation ----------------------------------------------------------


class _RationalRoot(Exception):
    def __init__(self, x):
        self.x = x


def _split_point(q: UniPoly, a: Fraction, b: Fraction) -> Fraction:
    """A non-root of q near the middle of (a, b); raises _RationalRoot when the
    candidate closest to the midpoint happens to be an exact root.  Candidates
    fan out from the midpoint, so the split stays balanced (q has at most
    deg(q) roots to step around)."""
    n = 3 * (q.degree + 2)
    mid = n // 2
    for offset in range(n):
        k = mid + (offset + 1) // 2 * (1 if offset % 2 else -1)
        if k <= 0 or k >= n:
            continue
        x = a + (b - a) * Fraction(k, n)
        if q(x) != 0:
            return x
        raise _RationalRoot(x)
    raise AssertionError("no split point found")


def isolate_roots(q: UniPoly, s: Interval):
    """Isolate the distinct real roots of squarefree q in the closed interval s.

    Returns a list of (u, v) pairs, sorted: u == v marks an exact rational
    root; u < v marks an open interval with q(u) != 0, q(v) != 0 containing
    exactly one root.  Rational roots discovered while splitting are deflated
    and the bisection restarts on the quotient.
    """
    if q.is_zero:
        raise ValueError("zero polynomial")
    exact = []
    lo, hi = s.lo, s.hi
    for endpoint in (lo, hi):
        if not q.is_zero and q.degree > 0 and q(endpoint) == 0:
            exact.append(endpoint)
            q = q.exact_divide(UniPoly((-endpoint, 1)))
    while True:
        if q.degree <= 0:
            intervals = []
            break
        chain = sturm_chain(q)
        try:
            intervals = _bisect(q, chain, lo, hi, _variations(chain, lo), _variations(chain, hi))
            break
        except _RationalRoot as root:
            exact.append(root.x)
            q = q.exact_divide(UniPoly((-root.x, 1)))
    out = [(x, x) for x in exact] + intervals
    out.sort(key=lambda uv: uv[0])
    return out


def _bisect(q, chain, a, b, va, vb):
    count = va - vb
    if count == 0:
        return []
    if count == 1:
        return [(a, b)]
    m = _split_point(q, a, b)
    vm = _variations(chain, m)
    return _bisect(q, chain, a, m, va, vm) + _bisect(q, chain, m, b, vm, vb)


def refine_isolating_interval(q: UniPoly, u: Fraction, v: Fraction, max_width: Fraction):
    """Shrink an isolating interval of squarefree q below max_width.

    Returns (u, v) with v - u <= max_width, or (x, x) when the root is hit
    exactly.  The input must contain exactly one root, with q(u), q(v) != 0.
    """
    chain = sturm_chain(q)
    while v - u > max_width:
        try:
            m = _split_point(q, u, v)
        except _RationalRoot as root:
            return root.x, root.x
        if _variations(chain, u) - _variations(chain, m) == 1:
            v = m
        else:
            u = m
    return u, v


def derivative_bound(p: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """Upper bound for |p'| on [lo, hi].

    Taylor expansion of p' around the interval midpoint (exact, the sum is
    finite): |p'(x)| <= sum_k |p'^(k)(m)| / k! * r^k for |x - m| <= r.  The
    bound shrinks with the interval, which keeps branch-and-bound pruning
    effective near flat minima.
    """
    m = (lo + hi) / 2
    r = (hi - lo) / 2
    d = p.derivative()
    total = Fraction(0)
    fact = 1
    power = Fraction(1)
    k = 0
    while not d.is_zero:
        total += abs(d(m)) / fact * power
        d = d.derivative()
        k += 1
        fact *= k
        power *= r
    return total
