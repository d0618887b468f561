from fractions import Fraction as F
from itertools import combinations

import pytest

from curvehull.multipoly import MultiPoly
from curvehull.schur import (DecreasingSeq, Tableau, admissible_fillings,
                             count_fillings, proper_dominance_check,
                             schur_via_bialternant, schur_via_tableaux,
                             subsequence_divisibility_check, vandermonde_poly)


def decreasing_sequences(max_len, max_entry):
    for length in range(1, max_len + 1):
        for combo in combinations(range(max_entry + 1), length):
            yield tuple(sorted(combo, reverse=True))


class TestDecreasingSeq:
    def test_validation(self):
        DecreasingSeq((3, 1, 0))
        with pytest.raises(ValueError):
            DecreasingSeq((1, 1, 0))
        with pytest.raises(ValueError):
            DecreasingSeq((0, 1))
        with pytest.raises(ValueError):
            DecreasingSeq(())

    def test_shape(self):
        assert DecreasingSeq((5, 4, 3, 2, 0)).shape() == (1, 1, 1, 1, 0)
        assert DecreasingSeq((2, 1, 0)).shape() == (0, 0, 0)


class TestTableau:
    def test_admissibility_enforced(self):
        Tableau(((0, 0), (1,)))
        with pytest.raises(ValueError):
            Tableau(((1, 0),))  # row decreases
        with pytest.raises(ValueError):
            Tableau(((0,), (0,)))  # column not strict

    def test_weight(self):
        assert Tableau(((0, 1), (1,))).weight(3) == (1, 2, 0)

    def test_enumeration_of_single_column(self):
        # shape of (5,4,3,2,0) is one column of height 4: choose 4 of 5 entries
        fillings = list(admissible_fillings((5, 4, 3, 2, 0)))
        assert len(fillings) == 5
        columns = sorted(tuple(r[0] for r in f.rows if r) for f in fillings)
        from itertools import combinations as combos
        assert columns == sorted(combos(range(5), 4))


class TestConstructions:
    def test_staircase_is_one(self):
        for m in ((0,), (1, 0), (2, 1, 0), (4, 3, 2, 1, 0)):
            assert schur_via_tableaux(m) == MultiPoly.constant(len(m), 1)
            assert schur_via_bialternant(m) == MultiPoly.constant(len(m), 1)

    def test_elementary_symmetric_case(self):
        # sigma_(5,4,3,2,0) is the fourth elementary symmetric polynomial in 5 vars
        expected = MultiPoly(5, {
            (1, 1, 1, 1, 0): 1, (1, 1, 1, 0, 1): 1, (1, 1, 0, 1, 1): 1,
            (1, 0, 1, 1, 1): 1, (0, 1, 1, 1, 1): 1})
        assert schur_via_tableaux((5, 4, 3, 2, 0)) == expected
        assert schur_via_bialternant((5, 4, 3, 2, 0)) == expected

    def test_two_variable_case(self):
        # oracle for (2,0): (x0^2 - x1^2)/(x0 - x1) = x0 + x1
        x0, x1 = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
        oracle = (x0 * x0 - x1 * x1).exact_divide(x0 - x1)
        assert schur_via_tableaux((2, 0)) == oracle == x0 + x1

    def test_first_power_sum_case(self):
        x = [MultiPoly.variable(3, i) for i in range(3)]
        assert schur_via_bialternant((3, 1, 0)) == x[0] + x[1] + x[2]

    def test_constructions_agree_exhaustively(self):
        for m in decreasing_sequences(4, 6):
            assert schur_via_tableaux(m) == schur_via_bialternant(m), m

    def test_rejects_non_decreasing(self):
        with pytest.raises(ValueError):
            schur_via_tableaux((1, 1))
        with pytest.raises(ValueError):
            schur_via_bialternant((0, 1))

    def test_coefficients_positive_integers(self):
        for m in ((4, 2, 0), (5, 3, 1), (6, 2, 1, 0)):
            for c in schur_via_tableaux(m).terms.values():
                assert c.denominator == 1 and c > 0


class TestSymmetry:
    def test_invariant_under_transpositions(self):
        for m in ((3, 1, 0), (4, 2, 1), (5, 3, 2, 0)):
            sigma = schur_via_tableaux(m)
            n = len(m)
            for i in range(n):
                for j in range(i + 1, n):
                    perm = list(range(n))
                    perm[i], perm[j] = perm[j], perm[i]
                    assert sigma.merge_variables(perm, n) == sigma

    def test_specialization_counts_fillings(self):
        for m in decreasing_sequences(3, 5):
            sigma = schur_via_tableaux(m)
            assert sigma.evaluate((1,) * len(m)) == count_fillings(m)


class TestVandermonde:
    def test_alternant_identity(self):
        # sigma_m * vandermonde == alternant determinant, re-multiplied
        for m in ((3, 1, 0), (4, 2, 0)):
            n = len(m)
            prod = schur_via_tableaux(m) * vandermonde_poly(n)
            from curvehull.multipoly import poly_det
            rows = [[MultiPoly.monomial(n, tuple(mj if k == i else 0 for k in range(n)))
                     for mj in m] for i in range(n)]
            assert prod == poly_det(rows)


def check_witness(report, proper):
    for beta, alpha in report.witness.items():
        assert all(a <= b for a, b in zip(alpha, beta))
        if proper:
            assert alpha != beta


class TestDominance:
    def test_trivial_base(self):
        r = proper_dominance_check((2, 1, 0), (3, 1, 0))
        assert r.ok and set(r.witness.values()) == {(0, 0, 0)}

    def test_one_step(self):
        r = proper_dominance_check((3, 1, 0), (4, 1, 0))
        assert r.ok
        check_witness(r, proper=True)
        assert set(r.witness) == set(schur_via_tableaux((4, 1, 0)).monomials())

    def test_elementary_step(self):
        r = proper_dominance_check((5, 4, 3, 2, 0), (5, 4, 3, 2, 1))
        assert r.ok
        check_witness(r, proper=True)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            proper_dominance_check((3, 1, 0), (3, 1, 0))
        with pytest.raises(ValueError):
            proper_dominance_check((3, 1, 0), (2, 1, 0))
        with pytest.raises(ValueError):
            proper_dominance_check((3, 1, 0), (4, 1))

    def test_exhaustive_small(self):
        seqs = list(decreasing_sequences(3, 5))
        for a in seqs:
            for b in seqs:
                if len(a) == len(b) and a != b and all(x <= y for x, y in zip(a, b)):
                    r = proper_dominance_check(a, b)
                    assert r.ok, (a, b, r.failures)
                    check_witness(r, proper=True)


class TestSubsequence:
    def test_identity_subsequence(self):
        r = subsequence_divisibility_check((2, 1, 0), (0, 1, 2))
        assert r.ok

    def test_drop_last(self):
        r = subsequence_divisibility_check((5, 4, 3, 2, 0), (0, 1, 2, 3))
        assert r.ok
        check_witness(r, proper=False)

    def test_skip_middle(self):
        r = subsequence_divisibility_check((3, 1, 0), (0, 2))
        assert r.ok
        check_witness(r, proper=False)

    def test_bad_indices(self):
        with pytest.raises(ValueError):
            subsequence_divisibility_check((3, 1, 0), (2, 0))
        with pytest.raises(ValueError):
            subsequence_divisibility_check((3, 1, 0), (0, 5))
        with pytest.raises(ValueError):
            subsequence_divisibility_check((3, 1, 0), ())

    def test_exhaustive_small(self):
        for a in decreasing_sequences(3, 5):
            for r in range(1, len(a) + 1):
                for idx in combinations(range(len(a)), r):
                    rep = subsequence_divisibility_check(a, idx)
                    assert rep.ok, (a, idx, rep.failures)
                    check_witness(rep, proper=False)
