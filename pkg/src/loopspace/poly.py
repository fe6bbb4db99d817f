"""Multivariate polynomials with exact coefficients and monomial orders.

Exponent vectors are plain int tuples of length ``nvars`` with the fixed
variable priority T1 > T2 > ... > Tn.  A polynomial is a mapping from
exponent vectors to nonzero scalars; zero coefficients are never stored, so
equality is order-independent dict equality.
"""

import re

from .errors import DivisionByZeroPoly, MixedContext, NotUnivariate, SchemaError
from .scalars import Field

LEX = "lex"
DEGREVLEX = "degrevlex"


class MonomialOrder:
    """A total, multiplicative, well-founded order on exponent vectors.

    ``key`` returns a tuple that sorts ascending in the order, so
    ``max(exps, key=order.key)`` picks the leading monomial.
    """

    __slots__ = ("kind",)

    def __init__(self, kind=DEGREVLEX):
        if kind not in (LEX, DEGREVLEX):
            raise SchemaError(f"unknown monomial order {kind!r}")
        self.kind = kind

    def key(self, exp):
        if self.kind == LEX:
            return exp
        # degrevlex: higher total degree wins; ties broken by the *last*
        # nonzero entry of the difference being negative.
        return (sum(exp),) + tuple(-e for e in reversed(exp))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(("MonomialOrder", self.kind))

    def __repr__(self):
        return f"MonomialOrder({self.kind})"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(d, m):
    return all(x <= y for x, y in zip(d, m))


def mono_div(m, d):
    return tuple(x - y for x, y in zip(m, d))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(m):
    return sum(m)


def _default_names(nvars):
    if nvars == 1:
        return ("T",)
    return tuple(f"T{i + 1}" for i in range(nvars))


class PolyRing:
    """Descriptor of k[T1..Tn]: the field, the variable count and names.

    Variable names are cosmetic (parsing/printing); two rings are equal when
    field and nvars agree.
    """

    __slots__ = ("field", "nvars", "var_names")
    is_field = False

    def __init__(self, field, nvars, var_names=None):
        if nvars < 0:
            raise SchemaError("nvars must be non-negative")
        self.field = field
        self.nvars = nvars
        names = tuple(var_names) if var_names is not None else _default_names(nvars)
        if len(names) != nvars or len(set(names)) != nvars:
            raise SchemaError(f"need {nvars} distinct variable names, got {names!r}")
        self.var_names = names

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.nvars == other.nvars
        )

    def __hash__(self):
        return hash(("PolyRing", self.field, self.nvars))

    def __repr__(self):
        return f"PolyRing({self.field!r}, vars={','.join(self.var_names)})"

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.constant(self.field.one())

    def constant(self, c):
        if self.field.is_zero(c):
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def from_int(self, n):
        return self.constant(self.field.from_int(n))

    def variable(self, j):
        exp = tuple(1 if i == j else 0 for i in range(self.nvars))
        return Poly(self, {exp: self.field.one()})

    def monomial(self, exp, coeff=None):
        c = self.field.one() if coeff is None else coeff
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {tuple(exp): c})

    # ring-element protocol used by Matrix
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return a == b

    def format(self, a):
        return poly_to_string(a)


class Poly:
    """Element of k[T1..Tn]; immutable once built."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _trusted=False):
        self.ring = ring
        if _trusted:
            self.terms = terms
            return
        clean = {}
        fld = ring.field
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != ring.nvars or any(e < 0 for e in exp):
                raise SchemaError(f"bad exponent vector {exp!r} for {ring!r}")
            if not fld.is_zero(c):
                clean[exp] = c
        self.terms = clean

    def _check_same_ring(self, other):
        if self.ring != other.ring:
            raise MixedContext(f"polynomials over {self.ring!r} and {other.ring!r}")

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mono_degree(e) == 0 for e in self.terms)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero())

    def __eq__(self, other):
        return (
            isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_same_ring(other)
        fld = self.ring.field
        res = dict(self.terms)
        for exp, c in other.terms.items():
            s = fld.add(res.get(exp, 0), c) if exp in res else c
            if exp in res and fld.is_zero(s):
                del res[exp]
            else:
                res[exp] = s
        return Poly(self.ring, res, _trusted=True)

    def __neg__(self):
        fld = self.ring.field
        return Poly(self.ring, {e: fld.neg(c) for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_same_ring(other)
        fld = self.ring.field
        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                s = fld.add(res.get(e, 0), fld.mul(c1, c2)) if e in res else fld.mul(c1, c2)
                if e in res and fld.is_zero(s):
                    del res[e]
                else:
                    res[e] = s
        return Poly(self.ring, res, _trusted=True)

    def scale(self, c):
        fld = self.ring.field
        if fld.is_zero(c):
            return self.ring.zero()
        return Poly(self.ring, {e: fld.mul(c, v) for e, v in self.terms.items()}, _trusted=True)

    def mul_monomial(self, exp, coeff=None):
        fld = self.ring.field
        c = fld.one() if coeff is None else coeff
        if fld.is_zero(c):
            return self.ring.zero()
        exp = tuple(exp)
        return Poly(
            self.ring,
            {mono_mul(e, exp): fld.mul(c, v) for e, v in self.terms.items()},
            _trusted=True,
        )

    def __pow__(self, n):
        if n < 0:
            raise SchemaError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def total_degree(self):
        """Max total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(e) for e in self.terms)

    def degree(self):
        """Degree of a univariate polynomial (-1 for zero)."""
        if self.ring.nvars != 1:
            raise NotUnivariate("degree() needs a univariate polynomial")
        if not self.terms:
            return -1
        return max(e[0] for e in self.terms)

    def leading(self, order):
        """(exponent, coefficient) of the leading term under ``order``."""
        assert self.terms, "leading term of zero polynomial"
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def leading_coefficient_univariate(self):
        d = self.degree()
        assert d >= 0
        return self.terms[(d,)]

    def monic(self, order):
        if self.is_zero():
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    def sorted_terms(self, order):
        """Terms in descending order: the canonical presentation order."""
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def __repr__(self):
        return f"Poly({poly_to_string(self)})"


def divmod_univariate(a, b):
    """Exact division with remainder in k[T]: a = q*b + r, deg r < deg b."""
    a._check_same_ring(b)
    if a.ring.nvars != 1:
        raise NotUnivariate("divmod needs univariate polynomials")
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    ring, fld = a.ring, a.ring.field
    db = b.degree()
    lb = b.leading_coefficient_univariate()
    q = ring.zero()
    r = a
    while not r.is_zero() and r.degree() >= db:
        shift = r.degree() - db
        c = fld.div(r.leading_coefficient_univariate(), lb)
        t = ring.monomial((shift,), c)
        q = q + t
        r = r - t * b
    return q, r


def reduce_step(f, g, order):
    """One normal-form step: cancel f's order-largest term divisible by lt(g).

    Returns f unchanged when no term of f is divisible by the leading term
    of g.
    """
    f._check_same_ring(g)
    if g.is_zero():
        raise DivisionByZeroPoly("reduction by the zero polynomial")
    ge, gc = g.leading(order)
    candidates = [e for e in f.terms if mono_divides(ge, e)]
    if not candidates:
        return f
    e = max(candidates, key=order.key)
    c = f.ring.field.div(f.terms[e], gc)
    return f - g.mul_monomial(mono_div(e, ge), c)


def gcd_univariate(a, b):
    """Monic gcd in k[T] (zero if both inputs are zero)."""
    order = MonomialOrder(LEX)
    while not b.is_zero():
        _, r = divmod_univariate(a, b)
        a, b = b, r
    return a if a.is_zero() else a.monic(order)


# ---------------------------------------------------------------------------
# canonical strings

def poly_to_string(p, order=None):
    if order is None:
        order = MonomialOrder(DEGREVLEX)
    if p.is_zero():
        return "0"
    names = p.ring.var_names
    fld = p.ring.field
    parts = []
    for exp, c in p.sorted_terms(order):
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        cs = fld.format(c)
        if mono and cs == "1":
            body = mono
        elif mono and cs == "-1":
            body = f"-{mono}"
        elif mono:
            body = f"{cs}*{mono}"
        else:
            body = cs
        parts.append(body)
    out = parts[0]
    for body in parts[1:]:
        out += body if body.startswith("-") else "+" + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SchemaError(f"bad polynomial syntax near {text[pos:pos + 10]!r}")
        if m.group(1) is not None:
            out.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
        pos = m.end()
    return out


def parse_poly(ring, text):
    """Parse a canonical polynomial string: signed terms of coeff*monomial.

    Accepts ``"T^2+100*T"``, ``"x*y-1"``, ``"-1/2*T+3"`` and the like.
    """
    if isinstance(text, int):
        return ring.from_int(text)
    tokens = _tokenize(text)
    if not tokens:
        raise SchemaError("empty polynomial string")
    var_index = {name: j for j, name in enumerate(ring.var_names)}
    fld = ring.field
    result = ring.zero()
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise SchemaError(f"dangling sign in {text!r}")
        coeff = fld.one()
        exp = [0] * ring.nvars
        while True:
            if i >= n:
                raise SchemaError(f"dangling '*' in {text!r}")
            kind, val = tokens[i]
            if kind == "int":
                c = fld.from_int(val)
                i += 1
                if i < n and tokens[i] == ("op", "/"):
                    i += 1
                    if i >= n or tokens[i][0] != "int":
                        raise SchemaError(f"bad rational in {text!r}")
                    c = fld.div(c, fld.from_int(tokens[i][1]))
                    i += 1
                coeff = fld.mul(coeff, c)
            elif kind == "name":
                if val not in var_index:
                    raise SchemaError(f"unknown variable {val!r} (have {ring.var_names})")
                j = var_index[val]
                i += 1
                power = 1
                if i < n and tokens[i] == ("op", "^"):
                    i += 1
                    if i >= n or tokens[i][0] != "int":
                        raise SchemaError(f"bad exponent in {text!r}")
                    power = tokens[i][1]
                    i += 1
                exp[j] += power
            else:
                raise SchemaError(f"unexpected {val!r} in {text!r}")
            if i < n and tokens[i] == ("op", "*"):
                i += 1
                continue
            break
        if i < n and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise SchemaError(f"missing '*' or sign before {tokens[i][1]!r} in {text!r}")
        if sign < 0:
            coeff = fld.neg(coeff)
        result = result + ring.monomial(tuple(exp), coeff)
    return result
