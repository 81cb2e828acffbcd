"""Exact dense linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator), so every result here is bit-exact and independent of
evaluation order.  Matrices are small (nothing in this package exceeds
a few hundred rows), so dense row-major storage is fine.
"""

from fractions import Fraction

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = [tuple(_frac(x) for x in row) for row in data]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
        self.data = tuple(rows)

    @staticmethod
    def zeros(r, c):
        return Matrix([[_ZERO] * c for _ in range(r)])

    @staticmethod
    def identity(nn):
        return Matrix([[_ONE if i == j else _ZERO for j in range(nn)] for i in range(nn)])

    @staticmethod
    def from_rows(rows):
        return Matrix(rows)

    @staticmethod
    def column(vec):
        return Matrix([[x] for x in vec])

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def tolists(self):
        return [list(r) for r in self.data]

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other):
        self._conform(other, same=True)
        return Matrix(
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other):
        self._conform(other, same=True)
        return Matrix(
            [
                [self.data[i][j] - other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self):
        return Matrix([[-x for x in row] for row in self.data])

    def scale(self, c):
        c = _frac(c)
        return Matrix([[c * x for x in row] for row in self.data])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        self._conform(other)
        bt = list(zip(*other.data))
        return Matrix(
            [
                [_dot(row, col) for col in bt]
                for row in self.data
            ]
        )

    __matmul__ = __mul__

    def __rmul__(self, c):
        return self.scale(c)

    def _conform(self, other, same=False):
        if same:
            if self.rows != other.rows or self.cols != other.cols:
                raise ValueError(f"shape mismatch {self.shape()} vs {other.shape()}")
        elif self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape()} by {other.shape()}")

    def shape(self):
        return (self.rows, self.cols)

    def transpose(self):
        return Matrix(list(zip(*self.data))) if self.rows else Matrix.zeros(self.cols, 0)

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), _ZERO)

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def apply(self, vec):
        """Matrix-vector product on a plain list of Fractions."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [_dot(row, vec) for row in self.data]

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.data]})"


def _dot(u, v):
    s = _ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def rref_rows(rows):
    """Reduced row echelon form of a list-of-lists (in place copy).

    Returns (rows, rank, pivot_cols).  Pivot is the first nonzero entry
    in each column sweep; exact division keeps everything deterministic.
    """
    m = [list(map(_frac, row)) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                mi, mr = m[i], m[r]
                for j in range(c, ncols):
                    if mr[j]:
                        mi[j] -= f * mr[j]
        pivots.append(c)
        r += 1
    return m, r, pivots


def rref(mat):
    """RREF of a Matrix; returns (Matrix, rank)."""
    m, rank, _ = rref_rows(mat.tolists())
    return Matrix(m), rank


class Subspace:
    """Subspace of F^n held as a canonical RREF row basis.

    Two subspaces of the same ambient space are equal iff their bases
    are identical matrices.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, rows=()):
        self.ambient_dim = ambient_dim
        rows = [r for r in rows]
        if rows:
            m, rank, _ = rref_rows(rows)
            rows = m[:rank]
        self.basis = Matrix(rows) if rows else Matrix.zeros(0, ambient_dim)

    @property
    def dim(self):
        return self.basis.rows

    def vectors(self):
        return [list(r) for r in self.basis.data]

    def contains(self, vec):
        return coords_in_rows(self.vectors(), vec) is not None

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def sum(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient mismatch")
        return Subspace(self.ambient_dim, self.vectors() + other.vectors())

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel(mat):
    """RREF basis of the right kernel {v : mat @ v = 0} as a Subspace."""
    m, rank, pivots = rref_rows(mat.tolists())
    ncols = mat.cols
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for fc in free:
        v = [_ZERO] * ncols
        v[fc] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        vecs.append(v)
    return Subspace(ncols, vecs)


def solve_span(vectors, target):
    """Exact coefficients expressing target in span(vectors), or None.

    ``vectors`` and ``target`` may be Matrices (flattened row-major) or
    plain lists.  Free coordinates of an underdetermined fit are set to
    zero, so the answer is deterministic.
    """
    cols = [_flatten(v) for v in vectors]
    t = _flatten(target)
    if not cols:
        return [] if all(x == 0 for x in t) else None
    nl = len(t)
    if any(len(c) != nl for c in cols):
        raise ValueError("conformability violation")
    aug = [[cols[j][i] for j in range(len(cols))] + [t[i]] for i in range(nl)]
    m, rank, pivots = rref_rows(aug)
    ncols = len(cols)
    if ncols in pivots:  # pivot in the augmented column: inconsistent
        return None
    sol = [_ZERO] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = m[r][ncols]
    return sol


def coords_in_rows(rows, vec):
    """Coefficients of vec as a combination of the given row vectors, or None."""
    return solve_span([list(r) for r in rows], list(vec))


def invert(mat):
    """Exact inverse of a square Matrix."""
    if mat.rows != mat.cols:
        raise ValueError("inverse of non-square matrix")
    nn = mat.rows
    aug = [list(mat.data[i]) + [_ONE if j == i else _ZERO for j in range(nn)] for i in range(nn)]
    m, rank, _ = rref_rows(aug)
    if rank < nn:
        raise ValueError("matrix is singular")
    return Matrix([row[nn:] for row in m])


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(u, c):
    c = _frac(c)
    return [c * a for a in u]


def vec_is_zero(u):
    return all(a == 0 for a in u)


def zero_vec(k):
    return [_ZERO] * k


def _flatten(v):
    if isinstance(v, Matrix):
        return [x for row in v.data for x in row]
    if v and isinstance(v[0], (list, tuple)):
        return [_frac(x) for row in v for x in row]
    return [_frac(x) for x in v]


class IncrementalSpan:
    """Row span with incremental RREF insertion; used for basis sifting."""

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self.rows = []  # kept in echelon form
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        v = [_frac(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vec):
        """Insert vec; returns True if it enlarged the span."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        pv = v[p]
        v = [x / pv for x in v]
        for i, row in enumerate(self.rows):
            if row[p] != 0:
                f = row[p]
                self.rows[i] = [a - f * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    def contains(self, vec):
        return all(x == 0 for x in self.reduce(vec))

    def subspace(self):
        return Subspace(self.ambient_dim, self.rows)
