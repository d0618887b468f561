import random
from fractions import Fraction as F
from itertools import permutations

import pytest

from curvehull.multipoly import MultiPoly, exact_divide, poly_det
from curvehull.unipoly import UniPoly


def var(i, arity=3):
    return MultiPoly.variable(arity, i)


def rand_mpoly(rng, arity=3, nterms=4, max_exp=3):
    terms = {}
    for _ in range(nterms):
        exp = tuple(rng.randint(0, max_exp) for _ in range(arity))
        terms[exp] = F(rng.randint(-6, 6), rng.randint(1, 4))
    return MultiPoly(arity, terms)


def leibniz_det(rows):
    """Independent determinant oracle: the full permutation sum."""
    n = len(rows)
    arity = rows[0][0].arity
    total = MultiPoly.zero(arity)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):  # parity by counting inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = MultiPoly.constant(arity, sign)
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


class TestExactDivide:
    def test_difference_of_squares(self):
        x0, x1 = var(0, 2), var(1, 2)
        assert (x0 * x0 - x1 * x1).exact_divide(x0 - x1) == x0 + x1

    def test_indivisible(self):
        x0, x1 = var(0, 2), var(1, 2)
        assert (x0 * x1).exact_divide(x0 - x1) is None

    def test_quotient_via_remultiplication(self):
        x0, x1, x2 = var(0), var(1), var(2)
        f = (x0 - x1) ** 2 * (x0 + x2)
        q = f.exact_divide(x0 - x1)
        assert q is not None
        assert q * (x0 - x1) == f
        assert q == (x0 - x1) * (x0 + x2)

    def test_zero_dividend(self):
        x0 = var(0, 2)
        assert MultiPoly.zero(2).exact_divide(x0) == MultiPoly.zero(2)

    def test_zero_divisor_rejected(self):
        with pytest.raises(ZeroDivisionError):
            var(0, 2).exact_divide(MultiPoly.zero(2))

    def test_roundtrip_random(self):
        rng = random.Random(23)
        for _ in range(30):
            f = rand_mpoly(rng)
            g = rand_mpoly(rng, nterms=2)
            if g.is_zero:
                continue
            prod = f * g
            q = exact_divide(prod, g)
            assert q is not None and q * g == prod and q == f

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            var(0, 2).exact_divide(var(0, 3))


class TestSubstitution:
    def test_inject_matches_evaluation(self):
        p = UniPoly((1, 0, 2))  # 1 + 2t^2
        m = MultiPoly.inject(p, 3, 1)
        assert m.evaluate((5, F(1, 2), 7)) == p(F(1, 2))

    def test_subs_value(self):
        x0, x1 = var(0, 2), var(1, 2)
        p = x0 * x0 * x1 + x1
        q = p.subs_value(0, F(1, 2))
        assert q == MultiPoly(2, {(0, 1): F(5, 4)})

    def test_set_trailing_to_one(self):
        x0, x1, x2 = var(0), var(1), var(2)
        p = x0 * x2 + x1 * x2 * x2 + x0
        q = p.set_trailing_to_one(2)
        assert q == MultiPoly(2, {(1, 0): 2, (0, 1): 1})

    def test_merge_variables(self):
        p = MultiPoly(3, {(1, 2, 1): 3, (0, 1, 0): 1})
        q = p.merge_variables([0, 1, 1], 2)
        assert q == MultiPoly(2, {(1, 3): 3, (0, 1): 1})


class TestDeterminant:
    def test_matches_leibniz_oracle(self):
        rng = random.Random(17)
        for _ in range(10):
            rows = [[rand_mpoly(rng, nterms=2, max_exp=2) for _ in range(3)]
                    for _ in range(3)]
            assert poly_det(rows) == leibniz_det(rows)

    def test_vandermonde(self):
        rows = [[MultiPoly.inject(UniPoly.monomial(k), 3, i) for k in (2, 1, 0)]
                for i in range(3)]
        x0, x1, x2 = var(0), var(1), var(2)
        assert poly_det(rows) == (x0 - x1) * (x0 - x2) * (x1 - x2)

    def test_singular(self):
        x0 = var(0, 2)
        rows = [[x0, x0], [x0, x0]]
        assert poly_det(rows).is_zero
