"""Block linear matrix inequalities for moment curves on intervals.

Builders for the full Hankel pencil of the even moment curve and the
two-block localized moment pencil of an interval (block sizes at most
1 + floor(n/2)), exact membership via the characteristic-polynomial PSD
test, square certificates for validated extreme candidates, sparse SDPA
emission, and a JSON wire format.  There are no lifted variables: every
representation here is a genuine spectrahedron, so membership is a pure
PSD check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import SymMatrix, psd_check_exact
from .rays import ZeroPattern
from .unipoly import Interval, UniPoly, _q


@dataclass(frozen=True)
class Block:
    """One pencil block A + sum_i x_i B_i of symmetric matrices."""

    size: int
    a0: SymMatrix
    coeff: tuple  # one SymMatrix per ambient variable

    def __post_init__(self):
        if self.a0.dim != self.size or any(b.dim != self.size for b in self.coeff):
            raise ValueError("block matrices must share the block size")

    def evaluate(self, x) -> SymMatrix:
        out = self.a0
        for xi, b in zip(x, self.coeff):
            if xi:
                out = out + b.scale(xi)
        return out


@dataclass(frozen=True)
class BlockLMI:
    """Block-diagonal pencil in ambient variables x_1, ..., x_n."""

    n: int
    blocks: tuple

    def __post_init__(self):
        for blk in self.blocks:
            if len(blk.coeff) != self.n:
                raise ValueError("every block needs one coefficient matrix per variable")

    @property
    def max_block_size(self) -> int:
        return max(blk.size for blk in self.blocks)


def _hankel_block(n: int, size: int, weight: UniPoly) -> Block:
    """Localized Hankel block: entry (i, j) = sum_d w_d x_{i+j+d}, x_0 = 1."""
    a0 = [[Fraction(0)] * size for _ in range(size)]
    coeff = [[[Fraction(0)] * size for _ in range(size)] for _ in range(n)]
    for i in range(size):
        for j in range(size):
            for d, wd in enumerate(weight.coeffs):
                if wd == 0:
                    continue
                k = i + j + d
                if k == 0:
                    a0[i][j] += wd
                elif k <= n:
                    coeff[k - 1][i][j] += wd
                else:
                    raise ValueError(f"moment index {k} exceeds ambient dimension {n}")
    return Block(size=size, a0=SymMatrix(a0),
                 coeff=tuple(SymMatrix(m) for m in coeff))


def hankel_lmi(n: int) -> BlockLMI:
    """The (k+1) x (k+1) Hankel pencil of the even moment curve, n = 2k:
    entry (i, j) = x_{i+j} with x_0 = 1.  This is the minimal-size
    spectrahedral description of the closed convex hull of
    {(t, t^2, ..., t^n) : t real}."""
    if n < 2 or n % 2 != 0:
        raise ValueError("the full Hankel pencil needs even n >= 2")
    k = n // 2
    return BlockLMI(n=n, blocks=(_hankel_block(n, k + 1, UniPoly.one()),))


def interval_moment_lmi(n: int, s: Interval) -> BlockLMI:
    """Two-block moment pencil for the curve (t, ..., t^n), t in [a, b].

    Even n = 2k: the full Hankel of (1, x_1, ..., x_n) (size k+1) and the
    localized Hankel of the weight (b - t)(t - a) (size k).  Odd n = 2k+1:
    the localized Hankels of (t - a) and (b - t) (each size k+1).  Every
    block has size at most 1 + floor(n/2).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    a, b = s.lo, s.hi
    t = UniPoly.t()
    if n % 2 == 0:
        k = n // 2
        blocks = [
            _hankel_block(n, k + 1, UniPoly.one()),
        ]
        if k >= 1:
            blocks.append(_hankel_block(n, k, (b - t) * (t - a)))
    else:
        k = (n - 1) // 2
        blocks = [
            _hankel_block(n, k + 1, t - a),
            _hankel_block(n, k + 1, b - t),
        ]
    return BlockLMI(n=n, blocks=tuple(blocks))


def lmi_membership(lmi: BlockLMI, x) -> bool:
    """Exact membership: every block pencil evaluated at x is PSD."""
    x = [_q(v) for v in x]
    if len(x) != lmi.n:
        raise ValueError(f"point has dimension {len(x)}, pencil has {lmi.n}")
    return all(psd_check_exact(blk.evaluate(x)) for blk in lmi.blocks)


# -- square certificates -------------------------------------------------------


@dataclass(frozen=True)
class SosxCertificate:
    """f = scale * square_root^2 with scale > 0; declared_rank counts the
    coefficients of square_root (1 + n/2 for an n-zero candidate)."""

    scale: Fraction
    square_root: UniPoly
    declared_rank: int


def sosx_certificate(f: UniPoly, pattern: ZeroPattern, c) -> SosxCertificate:
    """Certificate that a validated extreme candidate is a scaled square.

    Requires every pattern multiplicity even; reconstructs
    g = prod (t - xi_j)^{b_j/2} and checks f = c * g^2 exactly, raising if
    the reconstruction fails (a caller error: f was not of the stated form).
    """
    c = _q(c)
    if c <= 0:
        raise ValueError("scale must be positive")
    if not pattern.all_even:
        raise ValueError("pattern multiplicities must all be even")
    g = UniPoly.one()
    for x, b in zip(pattern.points, pattern.mults):
        g = g * UniPoly((-x, 1)) ** (b // 2)
    if f - c * g * g != UniPoly.zero():
        raise ValueError("reconstruction failed: f != c * g^2 for this pattern")
    return SosxCertificate(scale=c, square_root=g, declared_rank=1 + g.degree)


# -- SDPA sparse emission -------------------------------------------------------


def _terminating_decimal(q: Fraction):
    """Exact decimal string for q when the denominator is 2^a 5^b, else None."""
    den = q.denominator
    a = 0
    while den % 2 == 0:
        den //= 2
        a += 1
    b = 0
    while den % 5 == 0:
        den //= 5
        b += 1
    if den != 1:
        return None
    e = max(a, b)
    if e == 0:
        return str(q.numerator)
    scaled = abs(q.numerator) * 10 ** e // q.denominator
    digits = str(scaled).rjust(e + 1, "0")
    head, tail = digits[:-e], digits[-e:].rstrip("0")
    sign = "-" if q.numerator < 0 else ""
    return f"{sign}{head}.{tail}" if tail else f"{sign}{head}"


def _sig_digits(q: Fraction, digits: int = 30) -> str:
    """Rounded decimal with the given number of significant digits."""
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    q = abs(q)
    exp = 0
    while q >= 10:
        q /= 10
        exp += 1
    while q < 1:
        q *= 10
        exp -= 1
    scaled = q * 10 ** (digits - 1)
    mantissa = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator % scaled.denominator) >= scaled.denominator:
        mantissa += 1
    m = str(mantissa)
    if len(m) > digits:  # rounding carried over
        m = m[:digits]
        exp += 1
    point = exp + 1
    if 0 < point <= digits:
        out = m[:point] + "." + m[point:]
    elif -6 < point <= 0:
        out = "0." + "0" * (-point) + m
    else:
        out = m[0] + "." + m[1:] + f"e{exp}"
    if "." in out and "e" not in out:
        out = out.rstrip("0").rstrip(".")
    return sign + out


def emit_sdpa(lmi: BlockLMI, objective) -> str:
    """Serialize to the sparse SDPA text format.

    The emitted problem follows SDPA's sign convention F_0 = -A_nu,
    F_i = B_{nu i}, so sum_i x_i F_i - F_0 >= 0 is exactly the pencil
    A_nu + sum_i x_i B_{nu i} >= 0.  Entries with a terminating decimal
    expansion are written exactly; anything else is rounded to 30
    significant digits and flagged in the header.
    """
    objective = [_q(c) for c in objective]
    if len(objective) != lmi.n:
        raise ValueError(f"objective has length {len(objective)}, need {lmi.n}")
    entries = []
    lossy = False

    def fmt(q: Fraction) -> str:
        nonlocal lossy
        exact = _terminating_decimal(q)
        if exact is not None:
            return exact
        lossy = True
        return _sig_digits(q)

    for matno in range(lmi.n + 1):
        for blkno, blk in enumerate(lmi.blocks, start=1):
            mat = blk.a0.scale(-1) if matno == 0 else blk.coeff[matno - 1]
            for i in range(blk.size):
                for j in range(i, blk.size):
                    v = mat.rows[i][j]
                    if v != 0:
                        entries.append(f"{matno} {blkno} {i + 1} {j + 1} {fmt(v)}")
    lines = [
        "* SDPA sparse format",
        "* pencil per block: A + x_1 B_1 + ... + x_n B_n >= 0; emitted as F0 = -A, F_i = B_i",
        "* entries: inexact (rounded to 30 significant digits)" if lossy else "* entries: exact",
        str(lmi.n),
        str(len(lmi.blocks)),
        " ".join(str(blk.size) for blk in lmi.blocks),
        " ".join(fmt(c) for c in objective),
    ]
    lines.extend(entries)
    return "\n".join(lines) + "\n"


# -- JSON wire format -----------------------------------------------------------


def _matrix_to_strings(m: SymMatrix):
    return [str(x) for row in m.rows for x in row]


def _matrix_from_strings(vals, size: int) -> SymMatrix:
    if len(vals) != size * size:
        raise ValueError("matrix payload has the wrong length")
    rows = [[Fraction(v) for v in vals[i * size:(i + 1) * size]] for i in range(size)]
    return SymMatrix(rows)


def lmi_to_json(lmi: BlockLMI) -> dict:
    """Schema: {n, blocks: [{size, A: row-major 'p/q' strings, B: [per-variable
    dense matrices]}]}; exact round trip."""
    return {
        "n": lmi.n,
        "blocks": [
            {
                "size": blk.size,
                "A": _matrix_to_strings(blk.a0),
                "B": [_matrix_to_strings(b) for b in blk.coeff],
            }
            for blk in lmi.blocks
        ],
    }


def lmi_from_json(data) -> BlockLMI:
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    blocks = []
    for payload in data["blocks"]:
        size = int(payload["size"])
        a0 = _matrix_from_strings(payload["A"], size)
        coeff = tuple(_matrix_from_strings(b, size) for b in payload["B"])
        if len(coeff) != n:
            raise ValueError("wrong number of coefficient matrices")
        blocks.append(Block(size=size, a0=a0, coeff=coeff))
    return BlockLMI(n=n, blocks=tuple(blocks))
