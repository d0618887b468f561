import json
import random
from fractions import Fraction as F
from pathlib import Path

import pytest

from curvehull.linalg import SymMatrix
from curvehull.lmi import (Block, BlockLMI, emit_sdpa, hankel_lmi,
                           interval_moment_lmi, lmi_from_json, lmi_membership,
                           lmi_to_json, sosx_certificate)
from curvehull.rays import ZeroPattern
from curvehull.unipoly import Interval, UniPoly

t = UniPoly.t()
UNIT = Interval(0, 1)
GOLDEN = Path(__file__).parent / "golden"


def moment_vector(x, n):
    return tuple(x ** k for k in range(1, n + 1))


class TestHankel:
    def test_n2_entries(self):
        blk = hankel_lmi(2).blocks[0]
        assert blk.size == 2
        assert blk.a0 == SymMatrix([[1, 0], [0, 0]])
        assert blk.coeff[0] == SymMatrix([[0, 1], [1, 0]])
        assert blk.coeff[1] == SymMatrix([[0, 0], [0, 1]])

    def test_n4_entries(self):
        blk = hankel_lmi(4).blocks[0]
        assert blk.size == 3
        assert blk.a0 == SymMatrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
        expected = {
            1: [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
            2: [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
            3: [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
            4: [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        }
        for i, rows in expected.items():
            assert blk.coeff[i - 1] == SymMatrix(rows)

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            hankel_lmi(3)


class TestIntervalMoment:
    def test_n1_is_the_interval(self):
        pencil = interval_moment_lmi(1, UNIT)
        assert [b.size for b in pencil.blocks] == [1, 1]
        # blocks [x_1] and [1 - x_1]
        assert pencil.blocks[0].a0 == SymMatrix([[0]])
        assert pencil.blocks[0].coeff[0] == SymMatrix([[1]])
        assert pencil.blocks[1].a0 == SymMatrix([[1]])
        assert pencil.blocks[1].coeff[0] == SymMatrix([[-1]])

    def test_n2_blocks(self):
        pencil = interval_moment_lmi(2, UNIT)
        assert [b.size for b in pencil.blocks] == [2, 1]
        loc = pencil.blocks[1]
        # localized block of t(1-t): x_1 - x_2
        assert loc.a0 == SymMatrix([[0]])
        assert loc.coeff[0] == SymMatrix([[1]])
        assert loc.coeff[1] == SymMatrix([[-1]])

    def test_n3_blocks(self):
        pencil = interval_moment_lmi(3, UNIT)
        assert [b.size for b in pencil.blocks] == [2, 2]
        first, second = pencil.blocks
        # [[x1, x2], [x2, x3]]
        assert first.a0 == SymMatrix.zeros(2)
        assert first.coeff[0] == SymMatrix([[1, 0], [0, 0]])
        assert first.coeff[1] == SymMatrix([[0, 1], [1, 0]])
        assert first.coeff[2] == SymMatrix([[0, 0], [0, 1]])
        # [[1 - x1, x1 - x2], [x1 - x2, x2 - x3]]
        assert second.a0 == SymMatrix([[1, 0], [0, 0]])
        assert second.coeff[0] == SymMatrix([[-1, 1], [1, 0]])
        assert second.coeff[1] == SymMatrix([[0, -1], [-1, 1]])
        assert second.coeff[2] == SymMatrix([[0, 0], [0, -1]])

    def test_block_bound(self):
        for n in range(1, 11):
            pencil = interval_moment_lmi(n, UNIT)
            assert pencil.max_block_size == 1 + n // 2

    def test_general_interval(self):
        pencil = interval_moment_lmi(2, Interval(-1, 2))
        for k in range(13):
            x = F(-1) + F(3, 12) * k
            assert lmi_membership(pencil, moment_vector(x, 2))
        assert not lmi_membership(pencil, moment_vector(F(3), 2))


class TestMembership:
    def test_curve_point_on_hankel(self):
        assert lmi_membership(hankel_lmi(4), (1, 1, 1, 1))

    def test_negative_top_moment(self):
        assert not lmi_membership(hankel_lmi(4), (0, 0, 0, -1))

    def test_curve_point_on_interval_pencil(self):
        assert lmi_membership(interval_moment_lmi(2, UNIT), (F(1, 2), F(1, 4)))

    def test_dimension_checked(self):
        with pytest.raises(ValueError):
            lmi_membership(hankel_lmi(2), (1, 1, 1))

    def test_curve_containment_grid(self):
        # 101-point grid, every n up to 6
        for n in range(1, 7):
            pencil = interval_moment_lmi(n, UNIT)
            for k in range(101):
                x = F(k, 100)
                assert lmi_membership(pencil, moment_vector(x, n)), (n, x)

    def test_convex_combinations(self):
        rng = random.Random(83)
        for n in (2, 3, 4):
            pencil = interval_moment_lmi(n, UNIT)
            for _ in range(10):
                a, b = F(rng.randint(0, 100), 100), F(rng.randint(0, 100), 100)
                w = F(rng.randint(0, 10), 10)
                pa, pb = moment_vector(a, n), moment_vector(b, n)
                mix = tuple(w * x + (1 - w) * y for x, y in zip(pa, pb))
                assert lmi_membership(pencil, mix)

    def test_outward_separation(self):
        eps = F(1, 100)
        for n in (2, 4, 6):
            pencil = interval_moment_lmi(n, UNIT)
            for k in range(1, 10):
                x = F(k, 10)
                probe = list(moment_vector(x, n))
                probe[-1] -= eps
                assert not lmi_membership(pencil, tuple(probe)), (n, x)


class TestCertificates:
    def test_simple_square(self):
        f = (t - F(1, 2)) ** 2
        cert = sosx_certificate(f, ZeroPattern((F(1, 2),), (2,)), 1)
        assert cert.square_root == t - F(1, 2)
        assert cert.declared_rank == 2

    def test_scaled_quartic(self):
        f = 4 * ((t - F(1, 3)) * (t - F(2, 3))) ** 2
        cert = sosx_certificate(f, ZeroPattern((F(1, 3), F(2, 3)), (2, 2)), 4)
        assert cert.scale == 4
        assert cert.square_root == (t - F(1, 3)) * (t - F(2, 3))
        assert cert.declared_rank == 3
        assert cert.scale * cert.square_root ** 2 == f

    def test_odd_multiplicity_rejected(self):
        f = (t - F(1, 2)) ** 3 * (t - F(1, 4))
        with pytest.raises(ValueError):
            sosx_certificate(f, ZeroPattern((F(1, 4), F(1, 2)), (1, 3)), 1)

    def test_wrong_reconstruction_rejected(self):
        with pytest.raises(ValueError):
            sosx_certificate((t - F(1, 2)) ** 2, ZeroPattern((F(1, 3),), (2,)), 1)

    def test_nonpositive_scale_rejected(self):
        with pytest.raises(ValueError):
            sosx_certificate((t - F(1, 2)) ** 2, ZeroPattern((F(1, 2),), (2,)), 0)


class TestSdpa:
    @pytest.mark.parametrize("name,build,objective", [
        ("hankel2.dat-s", lambda: hankel_lmi(2), (0, 0)),
        ("hankel4.dat-s", lambda: hankel_lmi(4), (0, 0, 0, 0)),
        ("interval_moment3.dat-s", lambda: interval_moment_lmi(3, UNIT), (0, 0, 0)),
    ])
    def test_golden_files(self, name, build, objective):
        assert emit_sdpa(build(), objective) == (GOLDEN / name).read_text()

    def test_objective_emitted(self):
        text = emit_sdpa(hankel_lmi(2), (0, 1))
        assert text.splitlines()[6] == "0 1"

    def test_objective_length_checked(self):
        with pytest.raises(ValueError):
            emit_sdpa(hankel_lmi(2), (0,))

    def test_lossy_flag(self):
        block = Block(1, SymMatrix([[F(1, 3)]]), (SymMatrix([[1]]),))
        text = emit_sdpa(BlockLMI(1, (block,)), (0,))
        assert "inexact" in text.splitlines()[2]
        assert "0.333333333333333333333333333333" in text

    def test_terminating_decimals_exact(self):
        block = Block(1, SymMatrix([[F(-3, 8)]]), (SymMatrix([[F(1, 2)]]),))
        text = emit_sdpa(BlockLMI(1, (block,)), (F(1, 4),))
        lines = text.splitlines()
        assert lines[2] == "* entries: exact"
        assert lines[6] == "0.25"
        assert "0 1 1 1 0.375" in lines  # -A = 3/8
        assert "1 1 1 1 0.5" in lines


class TestJson:
    def test_roundtrip(self):
        for pencil in (hankel_lmi(4), interval_moment_lmi(3, UNIT),
                       interval_moment_lmi(2, Interval(F(-1, 3), F(5, 2)))):
            payload = lmi_to_json(pencil)
            text = json.dumps(payload)
            back = lmi_from_json(text)
            assert back == pencil

    def test_schema_shape(self):
        payload = lmi_to_json(hankel_lmi(2))
        assert payload["n"] == 2
        blk = payload["blocks"][0]
        assert blk["size"] == 2
        assert blk["A"] == ["1", "0", "0", "0"]
        assert blk["B"][0] == ["0", "1", "1", "0"]
