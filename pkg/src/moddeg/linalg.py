"""Dense exact matrices and canonical subspaces.

Everything here is immutable and pure.  Subspaces are kept in a canonical
reduced column echelon basis so that two subspaces are equal if and only
if their basis matrices are structurally equal; submodule chains elsewhere
in the library terminate by exactly this equality test.

Pivoting is deterministic (leftmost pivot, first nonzero row), so all
derived bases are reproducible bit for bit across runs.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotContained


class Matrix:
    """An immutable rows x cols matrix with entries in a fixed field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows: int, cols: int, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(row) for row in data)
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise DimensionMismatch("matrix data does not match declared shape")

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [[field.coerce(v) for v in row] for row in rows]
        if rows:
            cols = len(rows[0])
        elif cols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        return cls(field, len(rows), cols, rows)

    @classmethod
    def from_columns(cls, field, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        if columns:
            rows = len(columns[0])
        elif rows is None:
            raise DimensionMismatch("empty matrix needs an explicit row count")
        data = [[field.coerce(col[i]) for col in columns] for i in range(rows)]
        return cls(field, rows, len(columns), data)

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def column_vector(cls, field, entries: Sequence) -> "Matrix":
        return cls.from_rows(field, [[v] for v in entries], cols=1)

    @classmethod
    def unit_vector(cls, field, n: int, i: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, 1, [[o if j == i else z] for j in range(n)])

    def _check_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols,
                      [[add(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols,
                      [[neg(a) for a in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        bt = list(zip(*other.data)) if other.data else [()] * other.cols
        out = []
        for row in self.data:
            out_row = []
            for col in bt:
                acc = zero
                for a, b in zip(row, col):
                    acc = add(acc, mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        if self.rows == 0 or other.cols == 0:
            return Matrix.zeros(f, self.rows, other.cols)
        return Matrix(f, self.rows, other.cols, out)

    def scale(self, scalar) -> "Matrix":
        scalar = self.field.coerce(scalar)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols,
                      [[mul(scalar, a) for a in row] for row in self.data])

    def transpose(self) -> "Matrix":
        if self.rows == 0 or self.cols == 0:
            return Matrix.zeros(self.field, self.cols, self.rows)
        return Matrix(self.field, self.cols, self.rows, list(zip(*self.data)))

    # -- structure ----------------------------------------------------

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def column_matrix(self, j: int) -> "Matrix":
        return Matrix(self.field, self.rows, 1, [[row[j]] for row in self.data])

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, row_range, col_range) -> "Matrix":
        rows = [[self.data[i][j] for j in col_range] for i in row_range]
        return Matrix(self.field, len(list(row_range)), len(list(col_range)), rows)

    def is_zero(self) -> bool:
        z = self.field.is_zero
        return all(z(a) for row in self.data for a in row)

    def is_upper_triangular(self) -> bool:
        z = self.field.is_zero
        return all(z(self.data[i][j]) for i in range(self.rows) for j in range(min(i, self.cols)))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(a) for a in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols} over {self.field}: [{body}])"

    def rank(self) -> int:
        return rref(self)[1]


def hstack(*mats: Matrix) -> Matrix:
    mats = [m for m in mats]
    rows = mats[0].rows
    field = mats[0].field
    for m in mats:
        if m.rows != rows:
            raise DimensionMismatch("hstack row mismatch")
    data = [sum((list(m.data[i]) for m in mats), []) for i in range(rows)]
    return Matrix(field, rows, sum(m.cols for m in mats), data)


def vstack(*mats: Matrix) -> Matrix:
    cols = mats[0].cols
    field = mats[0].field
    for m in mats:
        if m.cols != cols:
            raise DimensionMismatch("vstack column mismatch")
    data = [row for m in mats for row in m.data]
    return Matrix(field, sum(m.rows for m in mats), cols, data)


def block_diag(*mats: Matrix) -> Matrix:
    field = mats[0].field
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = [[field.zero] * cols for _ in range(rows)]
    r = c = 0
    for m in mats:
        for i, row in enumerate(m.data):
            out[r + i][c:c + m.cols] = row
        r += m.rows
        c += m.cols
    return Matrix(field, rows, cols, out)


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form of ``m``.

    Returns ``(echelon, rank, pivot_columns)``.  Deterministic: pivots are
    chosen leftmost first, within a column the first nonzero row wins.
    """
    field = m.field
    a = [list(row) for row in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pr = next((i for i in range(r, m.rows) if not field.is_zero(a[i][c])), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        inv = field.inv(a[r][c])
        if not field.is_one(a[r][c]):
            a[r] = [field.mul(inv, v) for v in a[r]]
        for i in range(m.rows):
            if i != r and not field.is_zero(a[i][c]):
                factor = a[i][c]
                a[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(field, m.rows, m.cols, a), r, tuple(pivots)


def solve_right(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """A particular solution X of ``a @ X = b``, or None if inconsistent.

    Deterministic: free variables are set to zero.
    """
    a._check_same_field(b)
    if a.rows != b.rows:
        raise DimensionMismatch("solve_right row mismatch")
    aug = hstack(a, b)
    ech, _, pivots = rref(aug)
    if any(p >= a.cols for p in pivots):
        return None
    field = a.field
    out = [[field.zero] * b.cols for _ in range(a.cols)]
    for r, p in enumerate(pivots):
        out[p] = list(ech.data[r][a.cols:])
    return Matrix(field, a.cols, b.cols, out)


def inverse(a: Matrix) -> Optional[Matrix]:
    if a.rows != a.cols:
        raise DimensionMismatch("only square matrices have inverses")
    x = solve_right(a, Matrix.identity(a.field, a.rows))
    if x is None:
        return None
    return x


class EchelonTracker:
    """Incremental row-reduction used by greedy basis extension loops."""

    def __init__(self, field, dim: int):
        self.field = field
        self.dim = dim
        self.rows: dict[int, list] = {}

    def _reduce(self, vec: list) -> list:
        f = self.field
        for p in sorted(self.rows):
            if not f.is_zero(vec[p]):
                factor = vec[p]
                row = self.rows[p]
                vec = [f.sub(x, f.mul(factor, y)) for x, y in zip(vec, row)]
        return vec

    def add(self, entries: Iterable) -> bool:
        """Insert a vector; True if it enlarged the span."""
        f = self.field
        vec = self._reduce([f.coerce(v) for v in entries])
        p = next((i for i, v in enumerate(vec) if not f.is_zero(v)), None)
        if p is None:
            return False
        inv = f.inv(vec[p])
        vec = [f.mul(inv, v) for v in vec]
        for q, row in self.rows.items():
            if not f.is_zero(row[p]):
                factor = row[p]
                self.rows[q] = [f.sub(x, f.mul(factor, y)) for x, y in zip(row, vec)]
        self.rows[p] = vec
        return True

    def contains(self, entries: Iterable) -> bool:
        f = self.field
        vec = self._reduce([f.coerce(v) for v in entries])
        return all(f.is_zero(v) for v in vec)

    @property
    def rank(self) -> int:
        return len(self.rows)


class Subspace:
    """A subspace of k^n held by a canonical reduced-column-echelon basis.

    Two subspaces are equal iff their basis matrices are identical, so
    structural equality is set equality.
    """

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim: int, basis: Matrix):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_columns(cls, mat: Matrix) -> "Subspace":
        ech, rank, _ = rref(mat.transpose())
        rows = ech.data[:rank]
        basis = Matrix.from_rows(mat.field, rows, cols=mat.rows).transpose()
        return cls(mat.field, mat.rows, basis)

    @classmethod
    def zero(cls, field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.zeros(field, ambient_dim, 0))

    @classmethod
    def full(cls, field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim} over {self.field})"

    def contains_vector(self, vec: Matrix) -> bool:
        if vec.rows != self.ambient_dim:
            raise DimensionMismatch("vector does not live in the ambient space")
        return hstack(self.basis, vec).rank() == self.dim

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        if other.dim == 0:
            return True
        return hstack(self.basis, other.basis).rank() == self.dim

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.from_columns(hstack(self.basis, other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = hstack(self.basis, other.basis)
        ker = kernel(stacked)
        top = ker.basis.submatrix(range(self.dim), range(ker.basis.cols))
        return Subspace.from_columns(self.basis @ top)

    def left_annihilator(self) -> Matrix:
        """Rows spanning { r : r . basis = 0 }; empty for the full space."""
        ker = kernel(self.basis.transpose())
        return ker.basis.transpose()

    def complement_basis(self, within: Optional["Subspace"] = None) -> Matrix:
        """Columns extending a basis of self to a basis of ``within``.

        Greedy and deterministic: ambient unit vectors are tried first,
        then the echelon basis of ``within``.
        """
        if within is None:
            within = Subspace.full(self.field, self.ambient_dim)
        if not within.contains(self):
            raise NotContained("subspace is not contained in the given space")
        tracker = EchelonTracker(self.field, self.ambient_dim)
        for j in range(self.dim):
            tracker.add(self.basis.column(j))
        need = within.dim - self.dim
        chosen = []
        if need > 0:
            within_ann = within.left_annihilator()
            candidates = []
            for i in range(self.ambient_dim):
                unit = Matrix.unit_vector(self.field, self.ambient_dim, i)
                if within.is_full() or (within_ann @ unit).is_zero():
                    candidates.append(unit.column(0))
            candidates.extend(within.basis.column(j) for j in range(within.dim))
            for cand in candidates:
                if tracker.add(cand):
                    chosen.append(cand)
                    if len(chosen) == need:
                        break
        return Matrix.from_columns(self.field, chosen, rows=self.ambient_dim)


def kernel(m: Matrix) -> Subspace:
    """The solution space of m . v = 0 inside k^cols."""
    ech, rank, pivots = rref(m)
    field = m.field
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    cols = []
    for j in free:
        v = [field.zero] * m.cols
        v[j] = field.one
        for r, p in enumerate(pivots):
            v[p] = field.neg(ech.data[r][j])
        cols.append(v)
    basis = Matrix.from_columns(field, cols, rows=m.cols)
    return Subspace.from_columns(basis)


def image(m: Matrix) -> Subspace:
    return Subspace.from_columns(m)


def preimage(m: Matrix, s: Subspace) -> Subspace:
    """{ v : m . v lies in s }."""
    if s.ambient_dim != m.rows:
        raise DimensionMismatch("subspace does not live in the codomain")
    ann = s.left_annihilator()
    if ann.rows == 0:
        return Subspace.full(m.field, m.cols)
    return kernel(ann @ m)
