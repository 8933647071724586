"""Exact coefficient fields: the rationals and odd prime fields GF(p).

Every coefficient in this package is a :class:`Scalar` attached to a
:class:`Field`.  Arithmetic is exact; there is no floating point and no
tolerance anywhere.  Rationals are stored as reduced ``fractions.Fraction``
values (arbitrary-precision), prime-field elements as canonical residues in
``[0, p)``, so structural equality coincides with field equality.

Characteristic 2 is rejected outright; characteristic 3 is legal but special
(several product constants vanish), and callers branch on
``field.characteristic == 3``.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Invalid field specification (characteristic 2 or composite modulus)."""


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rational field (``p is None``) or GF(p) for an odd prime p.

    Instances are interned, so fields compare (and ``is``-compare) by their
    modulus.  Use :meth:`parse` for the CLI spelling ``q`` / ``gf:p``.
    """

    __slots__ = ("p", "zero", "one")
    _interned: dict[int | None, "Field"] = {}

    def __new__(cls, p: int | None = None):
        cached = cls._interned.get(p)
        if cached is not None:
            return cached
        if p is not None:
            if p == 2:
                raise FieldError("characteristic 2 is not supported")
            if not _is_prime(p):
                raise FieldError(f"modulus {p} is not prime")
        self = object.__new__(cls)
        self.p = p
        self.zero = Scalar(self, 0 if p else Fraction(0))
        self.one = Scalar(self, 1 if p else Fraction(1))
        cls._interned[p] = self
        return self

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, spec: str) -> "Field":
        """Parse a field selector: ``q`` for rationals, ``gf:p`` for GF(p)."""
        spec = spec.strip().lower()
        if spec == "q":
            return cls(None)
        if spec.startswith("gf:"):
            try:
                p = int(spec[3:])
            except ValueError:
                raise FieldError(f"bad prime in field spec {spec!r}") from None
            return cls(p)
        raise FieldError(f"unknown field spec {spec!r} (expected 'q' or 'gf:p')")

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, num, den: int = 1) -> "Scalar":
        """Embed num/den into the field via the canonical ring map."""
        if isinstance(num, Fraction):
            if den != 1:
                raise ValueError("pass either a Fraction or a num/den pair")
            num, den = num.numerator, num.denominator
        if self.p is None:
            return Scalar(self, Fraction(num, den))
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} is 0 in GF({self.p})")
        return Scalar(self, num * pow(den, -1, self.p) % self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __str__(self):
        return "q" if self.p is None else f"gf:{self.p}"

    def __repr__(self):
        return "Field(rationals)" if self.p is None else f"Field(GF({self.p}))"


class Scalar:
    """Immutable exact field element.

    Supports ``+ - * /`` with scalars of the same field (plain ints are
    embedded automatically).  Equality is structural and only holds between
    scalars of one field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(
                    f"mixed fields: {self.field} and {other.field}"
                )
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        v = self.value + o.value
        p = self.field.p
        return Scalar(self.field, v % p if p else v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        v = self.value - o.value
        p = self.field.p
        return Scalar(self.field, v % p if p else v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        v = self.value * o.value
        p = self.field.p
        return Scalar(self.field, v % p if p else v)

    __rmul__ = __mul__

    def __neg__(self):
        p = self.field.p
        return Scalar(self.field, -self.value % p if p else -self.value)

    def inverse(self) -> "Scalar":
        if not self.value:
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        p = self.field.p
        if p is None:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        if self.field.p is None:
            return f"Scalar({self.value})"
        return f"Scalar({self.value} mod {self.field.p})"
