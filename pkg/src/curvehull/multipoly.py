"""Sparse multivariate polynomials over exact rationals.

Terms are stored as a map from exponent tuples to nonzero Fraction
coefficients; the arity is fixed per instance.  Exact division is the lex
leading-term algorithm, which decides divisibility in an integral domain.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .unipoly import UniPoly, _q


class MultiPoly:
    """Multivariate polynomial in variables t_0, ..., t_{arity-1}."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        if arity < 1:
            raise ValueError("arity must be positive")
        object.__setattr__(self, "arity", arity)
        clean = {}
        for exp, c in (terms or {}).items():
            c = _q(c)
            if c == 0:
                continue
            exp = tuple(exp)
            if len(exp) != arity or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for arity {arity}")
            clean[exp] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, c) -> "MultiPoly":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, arity: int, i: int) -> "MultiPoly":
        exp = [0] * arity
        exp[i] = 1
        return cls(arity, {tuple(exp): 1})

    @classmethod
    def monomial(cls, arity: int, exp, c=1) -> "MultiPoly":
        return cls(arity, {tuple(exp): c})

    @classmethod
    def inject(cls, p: UniPoly, arity: int, slot: int) -> "MultiPoly":
        """The univariate p placed on variable t_slot."""
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c:
                exp = [0] * arity
                exp[slot] = k
                terms[tuple(exp)] = c
        return cls(arity, terms)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def monomials(self):
        return self.terms.keys()

    def coeff(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(exp) for exp in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.arity, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.arity, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in o.terms.items():
            acc = terms.get(exp, 0) + c
            if acc:
                terms[exp] = acc
            else:
                terms.pop(exp, None)
        return MultiPoly(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

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
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(e, 0) + c1 * c2
                if acc:
                    out[e] = acc
                else:
                    out.pop(e, None)
        return MultiPoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.arity, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- substitution --------------------------------------------------------

    def evaluate(self, point) -> Fraction:
        point = [_q(x) for x in point]
        if len(point) != self.arity:
            raise ValueError("point dimension mismatch")
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v *= x ** e
            total += v
        return total

    def subs_value(self, i: int, value) -> "MultiPoly":
        """Substitute t_i = value, keeping the arity (variable i becomes inert)."""
        value = _q(value)
        out = {}
        for exp, c in self.terms.items():
            e = list(exp)
            scale = c * value ** e[i]
            e[i] = 0
            key = tuple(e)
            acc = out.get(key, 0) + scale
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return MultiPoly(self.arity, out)

    def set_trailing_to_one(self, keep: int) -> "MultiPoly":
        """Substitute t_keep = ... = t_{arity-1} = 1 and drop those variables."""
        if not 1 <= keep <= self.arity:
            raise ValueError("bad variable count")
        out = {}
        for exp, c in self.terms.items():
            key = exp[:keep]
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return MultiPoly(keep, out)

    def merge_variables(self, target: list, new_arity: int) -> "MultiPoly":
        """Map variable i to variable target[i], adding exponents (the block
        collapse map: exponents of merged variables accumulate)."""
        if len(target) != self.arity:
            raise ValueError("target map must cover every variable")
        out = {}
        for exp, c in self.terms.items():
            e = [0] * new_arity
            for i, k in enumerate(exp):
                e[target[i]] += k
            key = tuple(e)
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return MultiPoly(new_arity, out)

    # -- division ------------------------------------------------------------

    def _leading(self):
        return max(self.terms)  # lex order on exponent tuples

    def exact_divide(self, g: "MultiPoly"):
        """Exact quotient self/g, or None when self is not a multiple of g.

        Lex leading-term division: while the remainder is nonzero its leading
        term must be divisible by the leading term of g, otherwise no exact
        quotient exists.  The quotient is unique (polynomial rings over Q are
        integral domains).  Leading terms come from a lazily pruned max-heap
        so each step costs O(|g| log) instead of a scan of the remainder.
        """
        g = self._coerce(g)
        if g is None or g.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return MultiPoly.zero(self.arity)
        glead = g._leading()
        gc = g.terms[glead]
        gtail = [(ge, gcoef) for ge, gcoef in g.terms.items() if ge != glead]
        rem = dict(self.terms)
        heap = [tuple(-e for e in exp) for exp in rem]
        heapq.heapify(heap)
        quot = {}
        while heap:
            lead = tuple(-e for e in heapq.heappop(heap))
            c = rem.pop(lead, None)
            if c is None:  # stale heap entry
                continue
            exp = tuple(a - b for a, b in zip(lead, glead))
            if any(e < 0 for e in exp):
                return None
            c = c / gc
            quot[exp] = c
            for ge, gcoef in gtail:
                key = tuple(a + b for a, b in zip(exp, ge))
                old = rem.get(key)
                acc = (old if old is not None else 0) - c * gcoef
                if acc:
                    rem[key] = acc
                    if old is None:
                        heapq.heappush(heap, tuple(-e for e in key))
                else:
                    rem.pop(key, None)
        return MultiPoly(self.arity, quot)

    # -- printing --------------------------------------------------------------

    def to_string(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        def fmt(exp, c):
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"{var}{i}")
                elif e > 1:
                    factors.append(f"{var}{i}^{e}")
            if not factors:
                return str(c)
            body = "*".join(factors)
            if c == 1:
                return body
            if c == -1:
                return f"-{body}"
            return f"{c}*{body}"
        keys = sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
        parts = [fmt(e, self.terms[e]) for e in keys]
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.to_string()})"


def exact_divide(f: MultiPoly, g: MultiPoly):
    """Module-level alias of MultiPoly.exact_divide."""
    return f.exact_divide(g)


def poly_det(rows) -> MultiPoly:
    """Determinant of a square matrix of MultiPoly entries.

    Column-subset dynamic programming: O(2^n n) polynomial multiplications,
    much cheaper than the Leibniz sum for the matrix sizes used here.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    arity = rows[0][0].arity
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    states = {0: MultiPoly.constant(arity, 1)}
    for i in range(n):
        nxt = {}
        for mask, val in states.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = rows[i][j]
                if entry.is_zero:
                    continue
                sign = -1 if (i + (mask & (bit - 1)).bit_count()) % 2 else 1
                contrib = entry * val
                if sign < 0:
                    contrib = -contrib
                key = mask | bit
                if key in nxt:
                    nxt[key] = nxt[key] + contrib
                else:
                    nxt[key] = contrib
        states = nxt
        if not states:
            return MultiPoly.zero(arity)
    full = (1 << n) - 1
    return states.get(full, MultiPoly.zero(arity))
