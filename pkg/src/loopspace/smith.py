"""Smith normal form over k[T] and the invariant-factor classification.

The diagonalization certifies itself: u*m*v = d with u, v invertible over
k[T] (their determinants are tracked through the elementary operations and
returned as nonzero scalars).  Diagonal entries are monic and form a
divisibility chain d1 | d2 | ...
"""

from .errors import MixedContext, NotUnivariate, SizeLimit
from .linalg import Matrix
from .poly import MonomialOrder, divmod_univariate

MAX_DIM = 64
MAX_DEGREE = 64

_ORDER = MonomialOrder()


class SNFResult:
    """u*m*v = d, with the inverses of u and v and their determinants."""

    __slots__ = ("u", "d", "v", "u_inv", "v_inv", "det_u", "det_v")

    def __init__(self, u, d, v, u_inv, v_inv, det_u, det_v):
        self.u = u
        self.d = d
        self.v = v
        self.u_inv = u_inv
        self.v_inv = v_inv
        self.det_u = det_u
        self.det_v = det_v

    def diagonal(self):
        return [self.d.entry(i, i) for i in range(min(self.d.rows, self.d.cols))]


class InvariantFactorForm:
    """free_rank plus the chain of monic non-unit invariant factors."""

    __slots__ = ("free_rank", "factors")

    def __init__(self, free_rank, factors):
        self.free_rank = free_rank
        self.factors = tuple(factors)

    def __eq__(self, other):
        return (
            isinstance(other, InvariantFactorForm)
            and self.free_rank == other.free_rank
            and self.factors == other.factors
        )

    def __repr__(self):
        from .poly import poly_to_string

        fs = ", ".join(poly_to_string(f) for f in self.factors)
        return f"InvariantFactorForm(free={self.free_rank}, [{fs}])"


def _require_univariate(m):
    ring = m.ring
    if getattr(ring, "is_field", False) or ring.nvars != 1:
        raise NotUnivariate("Smith normal form needs entries in k[T]")
    if m.rows > MAX_DIM or m.cols > MAX_DIM:
        raise SizeLimit(f"matrix larger than {MAX_DIM}x{MAX_DIM}")
    for row in m.data:
        for e in row:
            if e.total_degree() > MAX_DEGREE:
                raise SizeLimit(f"entry degree exceeds {MAX_DEGREE}")
    return ring


def smith_normal_form(m):
    ring = _require_univariate(m)
    fld = ring.field
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.data]
    u = [[ring.one() if i == j else ring.zero() for j in range(rows)] for i in range(rows)]
    ui = [list(r) for r in u]
    v = [[ring.one() if i == j else ring.zero() for j in range(cols)] for i in range(cols)]
    vi = [list(r) for r in v]
    det_u = fld.one()
    det_v = fld.one()

    def swap_rows(i, k):
        nonlocal det_u
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]
        for r in ui:
            r[i], r[k] = r[k], r[i]
        det_u = fld.neg(det_u)

    def swap_cols(j, k):
        nonlocal det_v
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]
        vi[j], vi[k] = vi[k], vi[j]
        det_v = fld.neg(det_v)

    def row_sub(i, k, q):
        # row_i -= q * row_k
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]
        for r in ui:
            r[k] = r[k] + q * r[i]

    def col_sub(j, k, q):
        # col_j -= q * col_k
        for r in a:
            r[j] = r[j] - q * r[k]
        for r in v:
            r[j] = r[j] - q * r[k]
        vi[k] = [x + q * y for x, y in zip(vi[k], vi[j])]

    def scale_row(i, c):
        nonlocal det_u
        cp = ring.constant(c)
        cinv = ring.constant(fld.inv(c))
        a[i] = [cp * x for x in a[i]]
        u[i] = [cp * x for x in u[i]]
        for r in ui:
            r[i] = cinv * r[i]
        det_u = fld.mul(det_u, c)

    def find_pivot(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                e = a[i][j]
                if not e.is_zero():
                    key = (e.degree(), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        return None if best is None else (best[1], best[2])

    t = min(rows, cols)
    for k in range(t):
        while True:
            pos = find_pivot(k)
            if pos is None:
                break
            pi, pj = pos
            if pi != k:
                swap_rows(k, pi)
            if pj != k:
                swap_cols(k, pj)
            pivot = a[k][k]
            dirty = False
            for i in range(rows):
                if i != k and not a[i][k].is_zero():
                    q, r = divmod_univariate(a[i][k], pivot)
                    if not q.is_zero():
                        row_sub(i, k, q)
                    if not r.is_zero():
                        dirty = True
            for j in range(cols):
                if j != k and not a[k][j].is_zero():
                    q, r = divmod_univariate(a[k][j], pivot)
                    if not q.is_zero():
                        col_sub(j, k, q)
                    if not r.is_zero():
                        dirty = True
            if dirty:
                continue
            # row k and column k are now clear; force the divisibility chain
            offender = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if not a[i][j].is_zero():
                        _, r = divmod_univariate(a[i][j], pivot)
                        if not r.is_zero():
                            offender = i
                            break
                if offender is not None:
                    break
            if offender is None:
                break
            # fold the offending row into row k and keep reducing
            a[k] = [x + y for x, y in zip(a[k], a[offender])]
            u[k] = [x + y for x, y in zip(u[k], u[offender])]
            minus_one = ring.constant(fld.neg(fld.one()))
            for r in ui:
                r[offender] = r[offender] + minus_one * r[k]
        if find_pivot(k) is None:
            break

    for k in range(t):
        e = a[k][k]
        if not e.is_zero():
            lc = e.leading_coefficient_univariate()
            if not fld.eq(lc, fld.one()):
                scale_row(k, fld.inv(lc))

    return SNFResult(
        Matrix(ring, rows, rows, u),
        Matrix(ring, rows, cols, a),
        Matrix(ring, cols, cols, v),
        Matrix(ring, rows, rows, ui),
        Matrix(ring, cols, cols, vi),
        det_u,
        det_v,
    )


def invariant_factors(presentation):
    """Invariant-factor form of a finitely presented k[T]-module.

    ``presentation`` provides ``gens`` (free rank of the cover) and ``rels``
    (a gens-row matrix whose columns are the relations).
    """
    rels = presentation.rels
    if presentation.nvars != 1:
        raise NotUnivariate("invariant factors need a univariate presentation")
    snf = smith_normal_form(rels)
    nonzero = [e for e in snf.diagonal() if not e.is_zero()]
    factors = [e for e in nonzero if e.degree() > 0]
    return InvariantFactorForm(presentation.gens - len(nonzero), factors)


def is_isomorphic_univariate(p, q):
    if p.nvars != 1 or q.nvars != 1:
        raise NotUnivariate("isomorphism test is univariate-only")
    if p.field != q.field:
        raise MixedContext("presentations over different fields")
    return invariant_factors(p) == invariant_factors(q)
