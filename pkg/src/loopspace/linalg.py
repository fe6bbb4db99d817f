"""Dense exact matrices over a field or a polynomial ring.

Conventions fixed for the whole repository: columns are images of domain
basis vectors, composition g.f is the product G*F, and 0xm / mx0 matrices
are legal (maps to/from the zero space).  Row reduction uses the leftmost
pivot column and the first nonzero row, so every basis this module returns
is deterministic.
"""

from .errors import MixedContext, ShapeMismatch


class Matrix:
    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring, rows, cols, data):
        if rows < 0 or cols < 0:
            raise ShapeMismatch("negative matrix dimensions")
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeMismatch(f"data does not fill a {rows}x{cols} matrix")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(r) for r in data)

    @classmethod
    def from_rows(cls, ring, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        return cls(ring, rows, cols, rows_list)

    @classmethod
    def from_cols(cls, ring, cols_list, rows=None):
        if cols_list:
            rows = len(cols_list[0])
        elif rows is None:
            raise ShapeMismatch("from_cols with no columns needs an explicit row count")
        data = [[col[i] for col in cols_list] for i in range(rows)]
        return cls(ring, rows, len(cols_list), data)

    @classmethod
    def zeros(cls, ring, rows, cols):
        z = ring.zero()
        return cls(ring, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero(), ring.one()
        return cls(ring, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise MixedContext(f"matrices over {self.ring!r} and {other.ring!r}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return False
        if self.ring != other.ring or self.rows != other.rows or self.cols != other.cols:
            return False
        eq = self.ring.eq
        return all(
            eq(self.data[i][j], other.data[i][j])
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        if self.rows * self.cols == 0:
            return f"Matrix({self.rows}x{self.cols})"
        fmt = self.ring.format
        body = "; ".join(" ".join(fmt(e) for e in row) for row in self.data)
        return f"Matrix[{body}]"

    def entry(self, i, j):
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def is_zero(self):
        z = self.ring.is_zero
        return all(z(e) for row in self.data for e in row)

    def transpose(self):
        return Matrix(
            self.ring,
            self.cols,
            self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def __add__(self, other):
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition shape mismatch")
        add = self.ring.add
        return Matrix(
            self.ring,
            self.rows,
            self.cols,
            [
                [add(self.data[i][j], other.data[i][j]) for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other):
        return self + other.neg()

    def neg(self):
        neg = self.ring.neg
        return Matrix(
            self.ring, self.rows, self.cols, [[neg(e) for e in row] for row in self.data]
        )

    def scale(self, c):
        mul = self.ring.mul
        return Matrix(
            self.ring, self.rows, self.cols, [[mul(c, e) for e in row] for row in self.data]
        )

    def __mul__(self, other):
        self._check_ring(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        ring = self.ring
        add, mul, zero = ring.add, ring.mul, ring.zero
        out = []
        for i in range(self.rows):
            srow = self.data[i]
            orow = []
            for j in range(other.cols):
                acc = zero()
                for k in range(self.cols):
                    acc = add(acc, mul(srow[k], other.data[k][j]))
                orow.append(acc)
            out.append(orow)
        return Matrix(ring, self.rows, other.cols, out)

    def map_entries(self, fn, new_ring=None):
        ring = new_ring if new_ring is not None else self.ring
        return Matrix(
            ring, self.rows, self.cols, [[fn(e) for e in row] for row in self.data]
        )

    def hstack(self, other):
        self._check_ring(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return Matrix(
            self.ring,
            self.rows,
            self.cols + other.cols,
            [list(a) + list(b) for a, b in zip(self.data, other.data)],
        )

    def vstack(self, other):
        self._check_ring(other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack column mismatch")
        return Matrix(
            self.ring,
            self.rows + other.rows,
            self.cols,
            [list(r) for r in self.data] + [list(r) for r in other.data],
        )

    def submatrix(self, row_idx, col_idx):
        return Matrix(
            self.ring,
            len(row_idx),
            len(col_idx),
            [[self.data[i][j] for j in col_idx] for i in row_idx],
        )


def block_diag(ring, blocks):
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    z = ring.zero()
    out = [[z] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b.data[i][j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(ring, rows, cols, out)


def block_matrix(ring, grid, row_sizes, col_sizes):
    """Assemble a matrix from a grid of blocks; ``None`` means a zero block."""
    rows, cols = sum(row_sizes), sum(col_sizes)
    z = ring.zero()
    out = [[z] * cols for _ in range(rows)]
    r0 = 0
    for bi, rsize in enumerate(row_sizes):
        c0 = 0
        for bj, csize in enumerate(col_sizes):
            blk = grid[bi][bj]
            if blk is not None:
                if blk.rows != rsize or blk.cols != csize:
                    raise ShapeMismatch("block size mismatch")
                for i in range(rsize):
                    for j in range(csize):
                        out[r0 + i][c0 + j] = blk.data[i][j]
            c0 += csize
        r0 += rsize
    return Matrix(ring, rows, cols, out)


def _rref_in_place(fld, work, ncols):
    """Reduced row echelon form; returns the pivot column list."""
    pivots = []
    prow = 0
    nrows = len(work)
    for col in range(ncols):
        found = None
        for i in range(prow, nrows):
            if not fld.is_zero(work[i][col]):
                found = i
                break
        if found is None:
            continue
        if found != prow:
            work[prow], work[found] = work[found], work[prow]
        inv = fld.inv(work[prow][col])
        work[prow] = [fld.mul(inv, e) for e in work[prow]]
        for i in range(nrows):
            if i != prow and not fld.is_zero(work[i][col]):
                factor = work[i][col]
                work[i] = [
                    fld.sub(a, fld.mul(factor, b)) for a, b in zip(work[i], work[prow])
                ]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return pivots


def rref(m):
    """(rref matrix, pivot column indices) over a field."""
    assert m.ring.is_field, "rref needs field entries"
    work = [list(r) for r in m.data]
    pivots = _rref_in_place(m.ring, work, m.cols)
    return Matrix(m.ring, m.rows, m.cols, work), pivots


def rref_and_kernel(m):
    """(rank, kernel basis as columns, image basis as columns).

    Kernel vectors carry a 1 at their free coordinate; image basis columns
    are the original pivot columns of ``m``.
    """
    fld = m.ring
    reduced, pivots = rref(m)
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    kernel_cols = []
    for f in free:
        v = [fld.zero()] * m.cols
        v[f] = fld.one()
        for r, p in enumerate(pivots):
            v[p] = fld.neg(reduced.data[r][f])
        kernel_cols.append(v)
    kernel = Matrix.from_cols(fld, kernel_cols, rows=m.cols)
    image = Matrix.from_cols(fld, [m.col(p) for p in pivots], rows=m.rows)
    return rank, kernel, image


def solve_linear(a, b):
    """Solve a*x = b over a field.

    ``b`` is a column Matrix; returns (particular solution or None, kernel
    basis of ``a``).  The particular solution puts zeros at free columns.
    """
    fld = a.ring
    if b.rows != a.rows or b.cols != 1:
        raise ShapeMismatch(f"rhs must be a {a.rows}x1 column")
    aug = a.hstack(b)
    reduced, pivots = rref(aug)
    if a.cols in pivots:
        _, kernel, _ = rref_and_kernel(a)
        return None, kernel
    x = [fld.zero()] * a.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.data[r][a.cols]
    _, kernel, _ = rref_and_kernel(a)
    return Matrix.from_cols(fld, [x], rows=a.cols), kernel


def rank(m):
    _, pivots = rref(m)
    return len(pivots)


def inverse(m):
    """Inverse of a square field matrix, or None if singular."""
    if m.rows != m.cols:
        return None
    aug = m.hstack(Matrix.identity(m.ring, m.rows))
    reduced, pivots = rref(aug)
    if pivots != list(range(m.rows)):
        return None
    return reduced.submatrix(range(m.rows), range(m.rows, 2 * m.rows))


def det(m):
    """Determinant by Laplace expansion; generic over any commutative ring.

    Exponential in size: intended for the small certification matrices in
    tests (<= 8x8).
    """
    if m.rows != m.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    ring = m.ring
    n = m.rows
    if n == 0:
        return ring.one()
    memo = {}

    def go(cols, row):
        if not cols:
            return ring.one()
        key = cols
        if key in memo:
            return memo[key]
        acc = ring.zero()
        for idx, j in enumerate(cols):
            e = m.data[row][j]
            if not ring.is_zero(e):
                sub = go(cols[:idx] + cols[idx + 1:], row + 1)
                term = ring.mul(e, sub)
                if idx % 2 == 1:
                    term = ring.neg(term)
                acc = ring.add(acc, term)
        memo[key] = acc
        return acc

    return go(tuple(range(n)), 0)


def intertwiner_basis(field, pairs, dim_src, dim_dst):
    """Basis of {C : C*A_i = B_i*C} for (A_i, B_i) pairs of square matrices.

    A_i act on the source space (dim_src), B_i on the destination (dim_dst);
    C is dim_dst x dim_src.  Returned in the deterministic order induced by
    row-major unknowns and ascending free columns.
    """
    nunk = dim_dst * dim_src
    rows = []
    for a, b in pairs:
        assert a.rows == a.cols == dim_src and b.rows == b.cols == dim_dst
        # equation (r, s): sum_k C[r][k] A[k][s] - sum_k B[r][k] C[k][s] = 0
        for r in range(dim_dst):
            for s in range(dim_src):
                coeff = [field.zero()] * nunk
                for k in range(dim_src):
                    coeff[r * dim_src + k] = field.add(
                        coeff[r * dim_src + k], a.data[k][s]
                    )
                for k in range(dim_dst):
                    coeff[k * dim_src + s] = field.sub(
                        coeff[k * dim_src + s], b.data[r][k]
                    )
                rows.append(coeff)
    system = Matrix(field, len(rows), nunk, rows) if rows else Matrix.zeros(field, 0, nunk)
    _, kernel, _ = rref_and_kernel(system)
    basis = []
    for j in range(kernel.cols):
        v = kernel.col(j)
        mat = [[v[r * dim_src + s] for s in range(dim_src)] for r in range(dim_dst)]
        basis.append(Matrix(field, dim_dst, dim_src, mat))
    return basis
