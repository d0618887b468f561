"""Determinant factorizations over the slot-tensor polynomial ring.

For a rational coordinate ring the (n+1)-fold tensor product is just the
polynomial ring Q[t_0, ..., t_n], and the vanishing ideal of every pairwise
diagonal t_i = t_j is principal.  This module builds the evaluation matrix
of a basis across slots, extracts Vandermonde cofactors, tests membership in
the monomial ideal spanned by Schur monomials, checks the Taylor congruence,
and runs the Taylor process that replaces grouped evaluation rows with
derivative rows while pulling powers of (t_i - t_j) out of the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .multipoly import MultiPoly, poly_det
from .schur import DivisibilityReport, _scan, _seq, schur_via_tableaux
from .unipoly import UniPoly


class DivisibilityError(ArithmeticError):
    """Raised when a division guaranteed by the factorization theory fails;
    this always signals an implementation bug or an unnormalized basis."""


@dataclass(frozen=True)
class BlockPartition:
    """Sizes (b_0, ..., b_r) of consecutive row blocks covering {0, ..., n}."""

    sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(b) for b in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes or any(b < 1 for b in sizes):
            raise ValueError("block sizes must be positive")

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def nblocks(self) -> int:
        return len(self.sizes)

    def blocks(self):
        """The blocks as ranges of row indices."""
        out = []
        start = 0
        for b in self.sizes:
            out.append(range(start, start + b))
            start += b
        return out

    def slot_of_row(self):
        """Row index -> block index."""
        out = []
        for nu, b in enumerate(self.sizes):
            out.extend([nu] * b)
        return out


def _partition(b) -> BlockPartition:
    return b if isinstance(b, BlockPartition) else BlockPartition(tuple(b))


@dataclass(frozen=True)
class RowLabel:
    """Provenance of a matrix row: tensor slot, derivative order, and the
    scalar relating the raw derivative row to the reference normalization
    (-1)^order / order!."""

    slot: int
    order: int
    reference_scale: Fraction


@dataclass(frozen=True)
class TensorMatrix:
    """Square matrix of MultiPoly entries with row provenance.

    Freshly built evaluation matrices keep the source basis so the Taylor
    process can re-derive rows; matrices produced by the Taylor process drop
    it (entries are already in collapsed arity).
    """

    entries: tuple
    arity: int
    labels: tuple
    basis: tuple = None

    @property
    def size(self) -> int:
        return len(self.entries)

    def det(self) -> MultiPoly:
        return poly_det([list(r) for r in self.entries])

    def reference_scale(self) -> Fraction:
        """Product of the per-row scales: reference determinant = this scale
        times the raw determinant."""
        out = Fraction(1)
        for lab in self.labels:
            out *= lab.reference_scale
        return out


def evaluation_matrix(basis) -> TensorMatrix:
    """Matrix with entry (i, j) = p_j(t_i) over Q[t_0, ..., t_n]."""
    basis = tuple(basis)
    n1 = len(basis)
    rows = tuple(
        tuple(MultiPoly.inject(p, n1, i) for p in basis) for i in range(n1)
    )
    labels = tuple(RowLabel(i, 0, Fraction(1)) for i in range(n1))
    return TensorMatrix(entries=rows, arity=n1, labels=labels, basis=basis)


def vandermonde_cofactor(f: MultiPoly):
    """Exact quotient of f by prod_{i<j} (t_i - t_j), or None if f is not a
    multiple of the full diagonal product."""
    out = f
    n1 = f.arity
    for i in range(n1):
        for j in range(i + 1, n1):
            binom = MultiPoly.variable(n1, i) - MultiPoly.variable(n1, j)
            out = out.exact_divide(binom)
            if out is None:
                return None
    return out


@dataclass(frozen=True)
class SchurMonomialIdeal:
    """Monomial ideal generated by the monomials of a Schur polynomial,
    optionally collapsed through a block product map."""

    arity: int
    generators: tuple

    @classmethod
    def from_sequence(cls, m) -> "SchurMonomialIdeal":
        m = _seq(m)
        gens = tuple(sorted(schur_via_tableaux(m).monomials()))
        return cls(arity=m.nvars, generators=gens)

    @classmethod
    def collapsed(cls, m, partition) -> "SchurMonomialIdeal":
        """Generators pushed through the block collapse: exponents of the
        variables inside each block are added."""
        m = _seq(m)
        partition = _partition(partition)
        if partition.total != m.nvars:
            raise ValueError("block sizes must sum to the number of variables")
        slot = partition.slot_of_row()
        r1 = partition.nblocks
        gens = set()
        for alpha in schur_via_tableaux(m).monomials():
            e = [0] * r1
            for i, a in enumerate(alpha):
                e[slot[i]] += a
            gens.add(tuple(e))
        return cls(arity=r1, generators=tuple(sorted(gens)))

    def contains(self, g: MultiPoly) -> DivisibilityReport:
        """Membership test: in a monomial ideal, g is a member iff every one
        of its monomials is divisible by some generator."""
        if g.arity != self.arity:
            raise ValueError("arity mismatch")
        return _scan(g.monomials(), self.generators, proper=False)


def in_schur_ideal(g: MultiPoly, ideal: SchurMonomialIdeal) -> DivisibilityReport:
    return ideal.contains(g)


def taylor_remainder_check(f: UniPoly, r: int) -> bool:
    """Verify that f(x) - f(y) - sum_{v=1}^{r} f^(v)(y)/v! (x-y)^v is an exact
    multiple of (x-y)^{r+1}; true for every polynomial, so a False return
    flags broken arithmetic."""
    if r < 1:
        raise ValueError("need r >= 1")
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    fx = MultiPoly.inject(f, 2, 0)
    rem = fx - MultiPoly.inject(f, 2, 1)
    delta = x - y
    for v in range(1, r + 1):
        coef = MultiPoly.inject(f.derivative(v), 2, 1) * Fraction(1, factorial(v))
        rem = rem - coef * delta ** v
    return rem.exact_divide(delta ** (r + 1)) is not None


def normalize_basis_orders(basis):
    """Triangularize a basis to strictly decreasing vanishing orders at 0.

    Gaussian elimination on coefficient rows: while two elements share a
    vanishing order, subtract a multiple of one from the other to raise it.
    The result is sorted by decreasing order with the coefficient of t^{m_i}
    scaled to 1; the span is unchanged.  Raises on linearly dependent input.
    """
    work = [p if isinstance(p, UniPoly) else UniPoly(p) for p in basis]
    if any(p.is_zero for p in work):
        raise ValueError("linearly dependent basis (zero element)")
    while True:
        orders = [p.ord_at(0) for p in work]
        seen = {}
        clash = None
        for idx, o in enumerate(orders):
            if o in seen:
                clash = (seen[o], idx)
                break
            seen[o] = idx
        if clash is None:
            break
        i, j = clash
        o = orders[i]
        c = work[j].coeff(o) / work[i].coeff(o)
        candidate = work[j] - c * work[i]
        if candidate.is_zero:
            raise ValueError("linearly dependent basis")
        work[j] = candidate
    work.sort(key=lambda p: -p.ord_at(0))
    normalized = []
    orders = []
    for p in work:
        o = p.ord_at(0)
        orders.append(o)
        normalized.append(p * (1 / p.coeff(o)))
    return tuple(normalized), tuple(orders)


def taylor_process(matrix: TensorMatrix, partition) -> TensorMatrix:
    """Replace each block of evaluation rows by raw derivative rows at the
    block's anchor slot, re-expressed with one variable per block.

    Block nu anchored at slot nu contributes the rows (p_j^(k)(t_nu))_j for
    k = 0, ..., b_nu - 1.  Raw derivatives carry no (-1)^k/k! factors; the
    scalar relating each row to the reference normalization is recorded in
    its label, so the determinant is tracked up to an explicit constant.
    """
    partition = _partition(partition)
    if matrix.basis is None:
        raise ValueError("Taylor process needs a freshly built evaluation matrix")
    if partition.total != matrix.size:
        raise ValueError("block sizes must sum to the matrix size")
    basis = matrix.basis
    r1 = partition.nblocks
    rows = []
    labels = []
    for nu, b in enumerate(partition.sizes):
        for k in range(b):
            rows.append(tuple(MultiPoly.inject(p.derivative(k), r1, nu) for p in basis))
            labels.append(RowLabel(nu, k, Fraction((-1) ** k, factorial(k))))
    return TensorMatrix(entries=tuple(rows), arity=r1, labels=tuple(labels), basis=None)


@dataclass(frozen=True)
class TaylorFactorization:
    """Result of factoring a Taylor-process determinant."""

    det: MultiPoly
    cofactor: MultiPoly
    ideal: SchurMonomialIdeal
    membership: DivisibilityReport
    checked: bool
    reference_scale: Fraction


def factor_taylor_determinant(basis, partition) -> TaylorFactorization:
    """Factor det of the Taylor-process matrix as
    cofactor * prod_{i<j} (t_i - t_j)^{b_i b_j} and test the cofactor against
    the collapsed Schur monomial ideal of the basis orders.

    The basis is triangularized to strictly decreasing orders with unit
    leading Taylor coefficients first (a change of basis only rescales the
    determinant).  A failed division raises DivisibilityError: the theory
    guarantees exactness, so failure means a bug.
    """
    partition = _partition(partition)
    basis, orders = normalize_basis_orders(basis)
    if partition.total != len(basis):
        raise ValueError("block sizes must sum to the basis size")
    matrix = taylor_process(evaluation_matrix(basis), partition)
    det = matrix.det()
    cof = det
    r1 = partition.nblocks
    for i in range(r1):
        for j in range(i + 1, r1):
            power = partition.sizes[i] * partition.sizes[j]
            binom = MultiPoly.variable(r1, i) - MultiPoly.variable(r1, j)
            for _ in range(power):
                cof = cof.exact_divide(binom)
                if cof is None:
                    raise DivisibilityError(
                        f"det not divisible by (t{i}-t{j})^{power}")
    ideal = SchurMonomialIdeal.collapsed(orders, partition)
    membership = ideal.contains(cof)
    return TaylorFactorization(
        det=det,
        cofactor=cof,
        ideal=ideal,
        membership=membership,
        checked=membership.ok,
        reference_scale=matrix.reference_scale(),
    )
