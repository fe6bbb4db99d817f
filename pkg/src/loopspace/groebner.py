"""Buchberger's algorithm for ideals and for submodules of free modules,
normal forms, syzygies, lifts through generating sets, and free resolutions
over k[T1..Tn].

Module elements are handled in one representation: a :class:`VecPoly` maps
(position, exponent vector) terms to scalars.  The module order is the
position-over-term extension of the ambient monomial order (positions with
smaller index dominate), which doubles as an elimination order on
positions; syzygies and lifts exploit that.
"""

from .errors import MixedContext, SizeLimit
from .linalg import Matrix
from .poly import (
    MonomialOrder,
    Poly,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

RESOLUTION_RANK_CAP = 256


class VecPoly:
    """Element of the free module R^rank, R = k[T1..Tn]."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring, rank, terms, _trusted=False):
        self.ring = ring
        self.rank = rank
        if _trusted:
            self.terms = terms
            return
        fld = ring.field
        clean = {}
        for (pos, exp), c in terms.items():
            assert 0 <= pos < rank, f"position {pos} outside rank {rank}"
            if not fld.is_zero(c):
                clean[(pos, tuple(exp))] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, rank, {}, _trusted=True)

    @classmethod
    def unit(cls, ring, rank, pos):
        zero_exp = (0,) * ring.nvars
        return cls(ring, rank, {(pos, zero_exp): ring.field.one()}, _trusted=True)

    @classmethod
    def from_polys(cls, polys, ring=None):
        if ring is None:
            ring = polys[0].ring
        terms = {}
        for pos, p in enumerate(polys):
            if p.ring != ring:
                raise MixedContext("vector components over different rings")
            for exp, c in p.terms.items():
                terms[(pos, exp)] = c
        return cls(ring, len(polys), terms, _trusted=True)

    def to_polys(self):
        per_pos = [{} for _ in range(self.rank)]
        for (pos, exp), c in self.terms.items():
            per_pos[pos][exp] = c
        return [Poly(self.ring, t, _trusted=True) for t in per_pos]

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, VecPoly)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __repr__(self):
        from .poly import poly_to_string

        parts = " | ".join(poly_to_string(p) for p in self.to_polys())
        return f"VecPoly[{parts}]"

    def add(self, other):
        fld = self.ring.field
        res = dict(self.terms)
        for t, c in other.terms.items():
            if t in res:
                s = fld.add(res[t], c)
                if fld.is_zero(s):
                    del res[t]
                else:
                    res[t] = s
            else:
                res[t] = c
        return VecPoly(self.ring, self.rank, res, _trusted=True)

    def sub(self, other):
        return self.add(other.scale(self.ring.field.neg(self.ring.field.one())))

    def scale(self, c):
        fld = self.ring.field
        if fld.is_zero(c):
            return VecPoly.zero(self.ring, self.rank)
        return VecPoly(
            self.ring,
            self.rank,
            {t: fld.mul(c, v) for t, v in self.terms.items()},
            _trusted=True,
        )

    def mul_monomial(self, exp, coeff=None):
        fld = self.ring.field
        c = fld.one() if coeff is None else coeff
        if fld.is_zero(c):
            return VecPoly.zero(self.ring, self.rank)
        exp = tuple(exp)
        return VecPoly(
            self.ring,
            self.rank,
            {(pos, mono_mul(e, exp)): fld.mul(c, v) for (pos, e), v in self.terms.items()},
            _trusted=True,
        )

    def leading(self, order):
        assert self.terms, "leading term of the zero vector"
        key = _term_key(order)
        t = max(self.terms, key=key)
        return t, self.terms[t]


def _term_key(order):
    okey = order.key

    def key(term):
        pos, exp = term
        return (-pos, okey(exp))

    return key


def normal_form_vec(f, gens, order):
    """Full multivariate division of ``f`` by ``gens`` (fixed order)."""
    fld = f.ring.field
    key = _term_key(order)
    lead = []
    for g in gens:
        if not g.is_zero():
            (pos, exp), c = g.leading(order)
            lead.append((pos, exp, c, g))
    p = dict(f.terms)
    rem = {}
    while p:
        t = max(p, key=key)
        tpos, texp = t
        hit = None
        for gpos, gexp, gc, g in lead:
            if gpos == tpos and mono_divides(gexp, texp):
                hit = (gexp, gc, g)
                break
        if hit is None:
            rem[t] = p.pop(t)
            continue
        gexp, gc, g = hit
        factor = fld.div(p[t], gc)
        shift = mono_div(texp, gexp)
        for (qpos, qexp), qc in g.terms.items():
            tt = (qpos, mono_mul(qexp, shift))
            if tt in p:
                val = fld.sub(p[tt], fld.mul(factor, qc))
                if fld.is_zero(val):
                    del p[tt]
                else:
                    p[tt] = val
            else:
                p[tt] = fld.neg(fld.mul(factor, qc))
    return VecPoly(f.ring, f.rank, rem, _trusted=True)


def _s_vector(f, g, order):
    (pos, ef), cf = f.leading(order)
    (_, eg), cg = g.leading(order)
    fld = f.ring.field
    l = mono_lcm(ef, eg)
    a = f.mul_monomial(mono_div(l, ef), fld.inv(cf))
    b = g.mul_monomial(mono_div(l, eg), fld.inv(cg))
    return a.sub(b)


def buchberger_vec(gens, ring, rank, order):
    """Reduced Groebner basis (monic, inter-reduced, sorted by descending
    leading term) of the submodule of R^rank generated by ``gens``.

    Selection is the normal strategy: among pending pairs, smallest leading
    term lcm under the order.  Buchberger's coprime criterion is applied in
    the ideal case only; the product criterion is not sound for modules.
    """
    fld = ring.field
    key = _term_key(order)
    basis = []
    for g in gens:
        if not g.is_zero():
            _, c = g.leading(order)
            basis.append(g.scale(fld.inv(c)))

    lts = [g.leading(order)[0] for g in basis]
    pairs = set()

    def add_pairs(new):
        npos, _ = lts[new]
        for i in range(new):
            if lts[i][0] == npos:
                pairs.add((i, new))

    for idx in range(len(basis)):
        add_pairs(idx)

    def pair_key(ij):
        i, j = ij
        l = mono_lcm(lts[i][1], lts[j][1])
        return (order.key(l), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        ei, ej = lts[i][1], lts[j][1]
        if rank == 1 and mono_lcm(ei, ej) == mono_mul(ei, ej):
            continue
        s = _s_vector(basis[i], basis[j], order)
        h = normal_form_vec(s, basis, order)
        if not h.is_zero():
            _, c = h.leading(order)
            basis.append(h.scale(fld.inv(c)))
            lts.append(basis[-1].leading(order)[0])
            add_pairs(len(basis) - 1)

    # minimalize: drop elements whose leading term another one divides
    keep = []
    for i, g in enumerate(basis):
        pos, e = lts[i]
        redundant = False
        for j in range(len(basis)):
            if j == i:
                continue
            p2, e2 = lts[j]
            if p2 == pos and mono_divides(e2, e) and (e2 != e or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)

    # tail-reduce until stable; leading terms are pairwise non-divisible
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1:]
            r = normal_form_vec(keep[i], others, order)
            if r != keep[i]:
                assert not r.is_zero()
                _, c = r.leading(order)
                keep[i] = r.scale(fld.inv(c))
                changed = True

    keep.sort(key=lambda g: key(g.leading(order)[0]), reverse=True)
    return keep


class GroebnerBasis:
    __slots__ = ("ring", "rank", "order", "elements")

    def __init__(self, ring, rank, order, elements):
        self.ring = ring
        self.rank = rank
        self.order = order
        self.elements = tuple(elements)

    def __repr__(self):
        return f"GroebnerBasis(rank={self.rank}, {len(self.elements)} elements)"

    def normal_form(self, f):
        v = f if isinstance(f, VecPoly) else self._coerce(f)
        r = normal_form_vec(v, self.elements, self.order)
        if isinstance(f, Poly):
            return r.to_polys()[0]
        if isinstance(f, (list, tuple)):
            return r.to_polys()
        return r

    def _coerce(self, f):
        if isinstance(f, Poly):
            if self.rank != 1:
                raise MixedContext("scalar polynomial against a module basis")
            return VecPoly.from_polys([f])
        return VecPoly.from_polys(list(f), ring=self.ring)

    def contains(self, f):
        v = f if isinstance(f, VecPoly) else self._coerce(f)
        return normal_form_vec(v, self.elements, self.order).is_zero()

    def leading_terms(self):
        return [g.leading(self.order)[0] for g in self.elements]

    def polys(self):
        assert self.rank == 1
        return [g.to_polys()[0] for g in self.elements]


def buchberger(gens, order=None):
    """Reduced Groebner basis of an ideal (list of Poly) or submodule
    (list of equal-length Poly lists / VecPolys)."""
    if order is None:
        order = MonomialOrder()
    if not gens:
        raise MixedContext("buchberger needs at least one generator (may be zero)")
    first = gens[0]
    if isinstance(first, Poly):
        ring = first.ring
        vecs = []
        for g in gens:
            if not isinstance(g, Poly) or g.ring != ring:
                raise MixedContext("generators over different rings")
            vecs.append(VecPoly.from_polys([g], ring=ring))
        rank = 1
    elif isinstance(first, VecPoly):
        ring, rank = first.ring, first.rank
        for g in gens:
            if g.ring != ring or g.rank != rank:
                raise MixedContext("vector generators with mixed context")
        vecs = list(gens)
    else:
        rank = len(first)
        ring = first[0].ring
        vecs = []
        for g in gens:
            if len(g) != rank:
                raise MixedContext("vector generators of different ranks")
            vecs.append(VecPoly.from_polys(list(g), ring=ring))
    return GroebnerBasis(ring, rank, order, buchberger_vec(vecs, ring, rank, order))


def normal_form(f, gb):
    return gb.normal_form(f)


def columns_as_vectors(m):
    """Columns of a polynomial matrix as elements of R^rows."""
    ring = m.ring
    out = []
    for j in range(m.cols):
        terms = {}
        for i in range(m.rows):
            for exp, c in m.data[i][j].terms.items():
                terms[(i, exp)] = c
        out.append(VecPoly(ring, m.rows, terms, _trusted=True))
    return out


def vectors_as_matrix(ring, rank, vecs):
    cols = [v.to_polys() for v in vecs]
    return Matrix.from_cols(ring, cols, rows=rank)


def column_groebner_basis(m, order=None):
    """Reduced Groebner basis of the column span of ``m`` inside R^rows."""
    if order is None:
        order = MonomialOrder()
    vecs = columns_as_vectors(m)
    return GroebnerBasis(
        m.ring, m.rows, order, buchberger_vec(vecs, m.ring, m.rows, order)
    )


def _augmented_basis(m, order):
    """GB of {(column_j, e_j)} in R^(rows+cols); POT makes the original
    block an elimination block."""
    ring = m.ring
    t, s = m.rows, m.cols
    zero_exp = (0,) * ring.nvars
    one = ring.field.one()
    aug = []
    for j in range(s):
        terms = {(t + j, zero_exp): one}
        for i in range(t):
            for exp, c in m.data[i][j].terms.items():
                terms[(i, exp)] = c
        aug.append(VecPoly(ring, t + s, terms, _trusted=True))
    return buchberger_vec(aug, ring, t + s, order)


def syzygies(m, order=None):
    """Generators of {v in R^cols : m*v = 0}, as the columns of a matrix."""
    if order is None:
        order = MonomialOrder()
    ring = m.ring
    t, s = m.rows, m.cols
    basis = _augmented_basis(m, order)
    syz = []
    for g in basis:
        if all(pos >= t for pos, _ in g.terms):
            terms = {(pos - t, e): c for (pos, e), c in g.terms.items()}
            syz.append(VecPoly(ring, s, terms, _trusted=True))
    return vectors_as_matrix(ring, s, syz)


def lift_columns(target, gens, order=None):
    """Solve gens*X = target column by column; None when some column of
    ``target`` is outside the column span of ``gens``."""
    if order is None:
        order = MonomialOrder()
    if target.ring != gens.ring or target.rows != gens.rows:
        raise MixedContext("lift with mismatched ambient module")
    ring = gens.ring
    t, s = gens.rows, gens.cols
    basis = _augmented_basis(gens, order)
    fld = ring.field
    x_cols = []
    for j in range(target.cols):
        terms = {}
        for i in range(t):
            for exp, c in target.data[i][j].terms.items():
                terms[(i, exp)] = c
        f = VecPoly(ring, t + s, terms, _trusted=True)
        rem = normal_form_vec(f, basis, order)
        if any(pos < t for pos, _ in rem.terms):
            return None
        # (f | 0) - rem lies in the span of the augmented generators, so the
        # negated tracking block is a preimage of the target column.
        neg = {(pos - t, e): fld.neg(c) for (pos, e), c in rem.terms.items()}
        x_cols.append(VecPoly(ring, s, neg, _trusted=True))
    return vectors_as_matrix(ring, s, x_cols)


def free_resolution(rels, max_length, rank_cap=RESOLUTION_RANK_CAP, reduce_first=True,
                    order=None):
    """Free resolution of coker(rels) by iterated syzygies.

    Returns the list of maps [d1, d2, ...] with d1 spanning the same column
    module as ``rels`` (its reduced Groebner basis when ``reduce_first``).
    Stops early when a syzygy module is zero; raises SizeLimit when a step
    needs more than ``rank_cap`` columns.
    """
    assert max_length >= 1
    if order is None:
        order = MonomialOrder()
    if reduce_first:
        gb = column_groebner_basis(rels, order)
        d1 = vectors_as_matrix(rels.ring, rels.rows, list(gb.elements))
    else:
        d1 = rels
    if d1.cols == 0 or d1.is_zero():
        return []
    maps = [d1]
    while len(maps) < max_length:
        s = syzygies(maps[-1], order)
        if s.cols == 0:
            break
        if s.cols > rank_cap:
            raise SizeLimit(f"resolution step needs {s.cols} > {rank_cap} columns")
        maps.append(s)
    return maps
