"""Dense exact linear algebra: matrices, row reduction, kernels, subspaces.

Everything is immutable (tuples all the way down) and exact. Subspaces are
stored as reduced-row-echelon bases, so two equal subspaces have literally
identical representations and equality is a plain comparison. Dimensions are
desk-scale; elimination is the straightforward textbook algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, FieldMismatch, NonSquareError
from .fields import Field, Scalar

Vector = tuple  # tuple of scalars over one field


def vec_is_zero(v: Sequence[Scalar]) -> bool:
    return all(x == 0 for x in v)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix over one exact field."""

    field: Field
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    @staticmethod
    def from_rows(field: Field, rows: Iterable[Iterable]) -> "Matrix":
        norm = tuple(tuple(field.normalize(x) for x in row) for row in rows)
        nrows = len(norm)
        ncols = len(norm[0]) if norm else 0
        if any(len(row) != ncols for row in norm):
            raise DimensionMismatch("ragged rows")
        return Matrix(field, nrows, ncols, norm)

    @staticmethod
    def zero(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, n, n,
                      tuple(tuple(o if i == j else z for j in range(n))
                            for i in range(n)))

    @staticmethod
    def from_columns(field: Field, columns: Sequence[Sequence]) -> "Matrix":
        cols = [tuple(field.normalize(x) for x in c) for c in columns]
        nrows = len(cols[0]) if cols else 0
        if any(len(c) != nrows for c in cols):
            raise DimensionMismatch("ragged columns")
        return Matrix(field, nrows, len(cols),
                      tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      tuple(self.column(j) for j in range(self.cols)))

    def _check_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"fields differ: {self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols,
                      tuple(tuple(add(a, b) for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols,
                      tuple(tuple(neg(a) for a in row) for row in self.entries))

    def scale(self, c) -> "Matrix":
        c = self.field.normalize(c)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols,
                      tuple(tuple(mul(c, a) for a in row) for row in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        add, mul, zero = self.field.add, self.field.mul, self.field.zero()
        ot = other.entries
        out = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a == 0:
                    continue
                orow = ot[k]
                for j, b in enumerate(orow):
                    if b != 0:
                        acc[j] = add(acc[j], mul(a, b))
            out.append(tuple(acc))
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise NonSquareError("powers need a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match columns")
        add, mul, zero = self.field.add, self.field.mul, self.field.zero()
        out = []
        for row in self.entries:
            s = zero
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    s = add(s, mul(a, x))
            out.append(s)
        return tuple(out)

    def stack(self, other: "Matrix") -> "Matrix":
        """Vertical concatenation."""
        self._check_field(other)
        if self.cols != other.cols:
            raise DimensionMismatch("stack needs equal column counts")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    def augment(self, other: "Matrix") -> "Matrix":
        """Horizontal concatenation."""
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch("augment needs equal row counts")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      tuple(r1 + r2 for r1, r2 in zip(self.entries, other.entries)))

    def to_str_rows(self) -> list:
        ts = self.field.to_str
        return [[ts(x) for x in row] for row in self.entries]

    def __str__(self) -> str:
        ts = self.field.to_str
        return "\n".join("[" + " ".join(ts(x) for x in row) + "]"
                         for row in self.entries)


class RrefResult(NamedTuple):
    matrix: Matrix
    rank: int
    pivots: tuple


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form, with rank and pivot columns."""
    field = m.field
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        if rows[r][c] != field.one():
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    reduced = Matrix(field, nrows, ncols, tuple(tuple(row) for row in rows))
    return RrefResult(reduced, len(pivots), tuple(pivots))


def kernel_basis(m: Matrix) -> "Subspace":
    """The right kernel {v : m v = 0} as a canonical subspace."""
    field = m.field
    red, rank, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [field.zero()] * m.cols
        v[f] = field.one()
        for r, c in enumerate(pivots):
            v[c] = field.neg(red.entries[r][f])
        basis.append(tuple(v))
    return Subspace.span(field, m.cols, basis)


class Nilpotency(NamedTuple):
    verdict: bool
    index: int | None


def is_nilpotent_matrix(m: Matrix) -> Nilpotency:
    """Decide m^d = 0 by sequential exact powering; index is minimal.

    The zero matrix has index 1, and the 0x0 matrix counts as nilpotent
    with index 1.
    """
    if not m.is_square():
        raise NonSquareError(f"nilpotency needs a square matrix, got {m.rows}x{m.cols}")
    d = m.rows
    if d == 0:
        return Nilpotency(True, 1)
    power = m
    for k in range(1, d + 1):
        if power.is_zero():
            return Nilpotency(True, k)
        if k < d:
            power = power @ m
    return Nilpotency(False, None)


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse, or None when singular."""
    if not m.is_square():
        raise NonSquareError("inverse needs a square matrix")
    n = m.rows
    red, _, pivots = rref(m.augment(Matrix.identity(m.field, n)))
    if pivots[:n] != tuple(range(n)):
        return None
    return Matrix(m.field, n, n, tuple(row[n:] for row in red.entries))


def matrix_rank(m: Matrix) -> int:
    return rref(m).rank


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^n held as a canonical reduced-echelon row basis.

    Identical subspaces have identical ``basis`` tuples, so ``==`` is both
    mathematical and structural equality.
    """

    field: Field
    ambient_dim: int
    basis: tuple  # tuple of row vectors, RREF, no zero rows

    @staticmethod
    def span(field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(field.normalize(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector length differs from ambient dimension")
        if not vecs:
            return Subspace(field, ambient_dim, ())
        red, rank, _ = rref(Matrix(field, len(vecs), ambient_dim, tuple(vecs)))
        return Subspace(field, ambient_dim, red.entries[:rank])

    @staticmethod
    def zero(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(field, ambient_dim, ())

    @staticmethod
    def full(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(field, ambient_dim,
                        Matrix.identity(field, ambient_dim).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces of different ambient dimension")

    def contains(self, v: Sequence[Scalar]) -> bool:
        """Membership by reduction against the echelon basis."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        field = self.field
        work = [field.normalize(x) for x in v]
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if x != 0)
            if work[lead] != 0:
                f = work[lead]
                work = [field.sub(x, field.mul(f, y)) for x, y in zip(work, row)]
        return all(x == 0 for x in work)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient_dim,
                             list(self.basis) + list(other.basis))

    def image_under(self, m: Matrix) -> "Subspace":
        """Span of m applied to each basis vector."""
        if m.cols != self.ambient_dim:
            raise DimensionMismatch("matrix columns differ from ambient dimension")
        if m.field != self.field:
            raise FieldMismatch("matrix over a different field")
        return Subspace.span(self.field, m.rows,
                             [m.apply(v) for v in self.basis])

    def quotient_data(self) -> tuple:
        """Projection onto F^n / S plus a lifted basis of the quotient.

        Returns ``(q, lifts)`` with ``q`` an (n-s) x n matrix whose kernel is
        exactly this subspace, and ``lifts`` a list of n-s ambient vectors
        with ``q.apply(lifts[i])`` the i-th standard quotient coordinate.
        """
        field, n = self.field, self.ambient_dim
        pivots = {next(j for j, x in enumerate(row) if x != 0)
                  for row in self.basis}
        free = [j for j in range(n) if j not in pivots]
        columns = [tuple(row) for row in self.basis]
        lifts = []
        for j in free:
            e = [field.zero()] * n
            e[j] = field.one()
            lifts.append(tuple(e))
        columns += lifts
        b = Matrix.from_columns(field, columns)
        b_inv = invert(b)
        assert b_inv is not None  # basis plus complement is always invertible
        q = Matrix(field, len(free), n, b_inv.entries[self.dim:])
        return q, lifts

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.is_full():
            return other
        if other.is_full():
            return self
        q1, _ = self.quotient_data()
        q2, _ = other.quotient_data()
        return kernel_basis(q1.stack(q2))

    def preimage_under(self, m: Matrix) -> "Subspace":
        """{v : m v in S}, for m mapping into this subspace's ambient space."""
        if m.rows != self.ambient_dim:
            raise DimensionMismatch("matrix rows differ from ambient dimension")
        if self.is_full():
            return Subspace.full(self.field, m.cols)
        q, _ = self.quotient_data()
        return kernel_basis(q @ m)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient_dim, self.basis)

    def to_str_rows(self) -> list:
        ts = self.field.to_str
        return [[ts(x) for x in row] for row in self.basis]
