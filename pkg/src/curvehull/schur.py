"""Schur polynomials of strictly decreasing exponent sequences.

Two independent constructions are provided: exhaustive enumeration of
admissible Young-diagram fillings, and the bialternant quotient
det((x_i^{m_j})) / prod_{i<j}(x_i - x_j).  They must agree term for term;
the divisibility comparisons between the monomial sets of two such
polynomials (with witnesses) live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multipoly import MultiPoly, poly_det


@dataclass(frozen=True)
class DecreasingSeq:
    """Strictly decreasing sequence of nonnegative integers (m_0, ..., m_n)."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("empty sequence")
        if any(e < 0 for e in entries):
            raise ValueError("entries must be nonnegative")
        if any(a <= b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"sequence {entries} is not strictly decreasing")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def nvars(self) -> int:
        return len(self.entries)

    def shape(self) -> tuple:
        """Row lengths of the associated Young diagram: m_i - (n - i)."""
        n = len(self.entries) - 1
        return tuple(m - (n - i) for i, m in enumerate(self.entries))


def _seq(m) -> DecreasingSeq:
    return m if isinstance(m, DecreasingSeq) else DecreasingSeq(tuple(m))


@dataclass(frozen=True)
class Tableau:
    """An admissible filling: rows weakly increase, columns strictly increase."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError("row not weakly increasing")
        for i in range(1, len(rows)):
            for j in range(len(rows[i])):
                if j < len(rows[i - 1]) and rows[i][j] <= rows[i - 1][j]:
                    raise ValueError("column not strictly increasing")

    def weight(self, nvars: int) -> tuple:
        counts = [0] * nvars
        for r in self.rows:
            for v in r:
                counts[v] += 1
        return tuple(counts)


def admissible_fillings(m):
    """Yield every admissible filling of the diagram of m, entries in {0..n}.

    Depth-first, column by column (top to bottom within a column); pruning is
    by column strictness against the cell above and row monotonicity against
    the cell to the left.
    """
    m = _seq(m)
    shape = m.shape()
    nrows = len(shape)
    n = nrows - 1
    cells = []
    width = max(shape) if shape else 0
    for col in range(width):
        for row in range(nrows):
            if shape[row] > col:
                cells.append((row, col))
    grid = [[None] * shape[i] for i in range(nrows)]

    def fill(idx):
        if idx == len(cells):
            yield Tableau(tuple(tuple(r) for r in grid))
            return
        row, col = cells[idx]
        low = row  # column-strict from the top forces entry >= row index
        if col > 0:
            low = max(low, grid[row][col - 1])
        if row > 0:
            low = max(low, grid[row - 1][col] + 1)
        for v in range(low, n + 1):
            grid[row][col] = v
            yield from fill(idx + 1)
        grid[row][col] = None

    yield from fill(0)


_TABLEAUX_CACHE: dict = {}


def schur_via_tableaux(m) -> MultiPoly:
    """sigma_m(x_0, ..., x_n) as the generating sum over admissible fillings."""
    m = _seq(m)
    key = m.entries
    cached = _TABLEAUX_CACHE.get(key)
    if cached is not None:
        return cached
    nvars = m.nvars
    terms: dict = {}
    for tab in admissible_fillings(m):
        w = tab.weight(nvars)
        terms[w] = terms.get(w, 0) + 1
    result = MultiPoly(nvars, terms)
    _TABLEAUX_CACHE[key] = result
    return result


def vandermonde_poly(arity: int) -> MultiPoly:
    """prod_{0 <= i < j < arity} (x_i - x_j)."""
    out = MultiPoly.constant(arity, 1)
    for i in range(arity):
        for j in range(i + 1, arity):
            out = out * (MultiPoly.variable(arity, i) - MultiPoly.variable(arity, j))
    return out


def schur_via_bialternant(m) -> MultiPoly:
    """sigma_m via the alternant determinant divided by the Vandermonde.

    The division is performed binomial by binomial and is always exact; the
    result agrees with the tableau construction.
    """
    m = _seq(m)
    nvars = m.nvars
    rows = [[MultiPoly.monomial(nvars, tuple(mj if k == i else 0 for k in range(nvars)))
             for mj in m.entries] for i in range(nvars)]
    det = poly_det(rows)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            binom = MultiPoly.variable(nvars, i) - MultiPoly.variable(nvars, j)
            det = det.exact_divide(binom)
            if det is None:
                raise AssertionError("alternant not divisible by the Vandermonde")
    return det


def count_fillings(m) -> int:
    """Number of admissible fillings (= sigma_m(1, ..., 1))."""
    return sum(1 for _ in admissible_fillings(_seq(m)))


# -- monomial divisibility comparisons ----------------------------------------


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of a monomial-set divisibility scan.

    witness maps each checked monomial (exponent tuple) to a dividing
    monomial; failures lists the monomials with no divisor.
    """

    ok: bool
    witness: dict
    failures: tuple


def _divides(alpha, beta) -> bool:
    return all(a <= b for a, b in zip(alpha, beta))


def _scan(targets, generators, proper: bool) -> DivisibilityReport:
    witness = {}
    failures = []
    gens = sorted(generators)
    for beta in sorted(targets):
        hit = None
        for alpha in gens:
            if _divides(alpha, beta) and not (proper and alpha == beta):
                hit = alpha
                break
        if hit is None:
            failures.append(beta)
        else:
            witness[beta] = hit
    return DivisibilityReport(ok=not failures, witness=witness, failures=tuple(failures))


def proper_dominance_check(a, b) -> DivisibilityReport:
    """Check that every monomial of sigma_b is properly divisible by some
    monomial of sigma_a, for componentwise b >= a with a != b."""
    a, b = _seq(a), _seq(b)
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    if any(bi < ai for ai, bi in zip(a.entries, b.entries)):
        raise ValueError("need b >= a componentwise")
    if a.entries == b.entries:
        raise ValueError("need a != b")
    return _scan(schur_via_tableaux(b).monomials(),
                 schur_via_tableaux(a).monomials(), proper=True)


def subsequence_divisibility_check(a, indices) -> DivisibilityReport:
    """Check that every monomial of sigma_b(x_0..x_r), b the subsequence of a
    at the given positions, is divisible by a monomial of
    sigma_a(x_0..x_r, 1, ..., 1)."""
    a = _seq(a)
    indices = tuple(int(i) for i in indices)
    if not indices:
        raise ValueError("empty index sequence")
    if any(i < 0 or i >= len(a) for i in indices):
        raise ValueError("index out of range")
    if any(i >= j for i, j in zip(indices, indices[1:])):
        raise ValueError("indices must be strictly increasing")
    b = DecreasingSeq(tuple(a[i] for i in indices))
    r = len(b) - 1
    substituted = schur_via_tableaux(a).set_trailing_to_one(r + 1)
    return _scan(schur_via_tableaux(b).monomials(),
                 substituted.monomials(), proper=False)
