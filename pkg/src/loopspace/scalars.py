"""Exact scalar arithmetic over the rationals and over prime fields.

Scalars are plain values: ``fractions.Fraction`` over Q, ints in ``[0, p)``
over F_p.  A :class:`Field` object supplies the operations, so matrices and
polynomials stay representation-agnostic.  No floating point anywhere.
"""

from fractions import Fraction

from .errors import SchemaError


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (``p is None``) or the prime field F_p.

    Rationals are kept in lowest terms with positive denominator (Fraction
    does this on construction), so equality of scalars is plain ``==``.
    """

    __slots__ = ("p",)
    is_field = True

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise SchemaError(f"field characteristic must be prime, got {p!r}")
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(None)

    @classmethod
    def prime(cls, p):
        return cls(p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(F{self.p})"

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def from_int(self, n):
        return Fraction(n) if self.p is None else n % self.p

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def add(self, a, b):
        if self.p is None:
            return a + b
        return (a + b) % self.p

    def sub(self, a, b):
        if self.p is None:
            return a - b
        return (a - b) % self.p

    def neg(self, a):
        if self.p is None:
            return -a
        return (-a) % self.p

    def mul(self, a, b):
        if self.p is None:
            return a * b
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        if self.p is None:
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, s):
        """Parse ``"a/b"`` / ``"a"`` strings (ints also accepted as-is)."""
        if isinstance(s, int):
            return self.from_int(s)
        if not isinstance(s, str):
            raise SchemaError(f"scalar must be an int or string, got {s!r}")
        text = s.strip()
        try:
            if "/" in text:
                if self.p is not None:
                    num, den = text.split("/")
                    return self.div(self.from_int(int(num)), self.from_int(int(den)))
                return Fraction(text)
            return self.from_int(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad scalar {s!r}: {exc}") from exc

    def format(self, a):
        return str(a)
