"""Exact coefficient arithmetic over the rationals or a prime field.

Every other module works with :class:`Scalar` values produced by a
:class:`FieldSpec`.  Scalars are immutable, always kept in canonical
form (reduced fraction with positive denominator, or residue in
``[0, p)``), and refuse to mix with scalars of a different field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

__all__ = [
    "SolvpolyError",
    "DivisionByZero",
    "MixedFields",
    "BadScalarLiteral",
    "FieldSpec",
    "Scalar",
    "field_arithmetic",
]


class SolvpolyError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(SolvpolyError):
    """Division by the zero scalar."""


class MixedFields(SolvpolyError):
    """Arithmetic attempted between scalars of different fields."""


class BadScalarLiteral(SolvpolyError):
    """A scalar literal does not match the accepted grammar."""


_INT_RE = re.compile(r"-?[0-9]+\Z")
_RAT_RE = re.compile(r"(-?[0-9]+)/([1-9][0-9]*)\Z")


def _is_prime(p: int) -> bool:
    """Trial division up to the square root."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class FieldSpec:
    """The ground field: rationals (characteristic 0) or GF(p).

    The prime is verified by trial division at construction time and
    must fit in a signed 32-bit word.
    """

    __slots__ = ("kind", "characteristic")

    def __init__(self, kind: str = "Rationals", characteristic: int = 0):
        if kind not in ("Rationals", "PrimeField"):
            raise ValueError("kind must be 'Rationals' or 'PrimeField'")
        if kind == "Rationals":
            if characteristic != 0:
                raise ValueError("rationals have characteristic 0")
        else:
            if characteristic >= 2 ** 31:
                raise ValueError("prime characteristic must be < 2^31")
            if not _is_prime(characteristic):
                raise ValueError(
                    "characteristic %r is not prime" % (characteristic,)
                )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "characteristic", characteristic)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.kind, self.characteristic))

    def __repr__(self):
        if self.kind == "Rationals":
            return "FieldSpec(Rationals)"
        return "FieldSpec(PrimeField, p=%d)" % self.characteristic

    # -- scalar construction -------------------------------------------------

    def scalar(self, numerator: Union[int, Fraction], denominator: int = 1) -> "Scalar":
        """Build the scalar numerator/denominator in this field."""
        if denominator == 0:
            raise DivisionByZero("zero denominator")
        if self.kind == "Rationals":
            return Scalar(self, Fraction(numerator, denominator))
        p = self.characteristic
        den = int(denominator) % p
        if den == 0:
            raise DivisionByZero("denominator vanishes mod %d" % p)
        num = int(numerator) % p
        return Scalar(self, num * pow(den, -1, p) % p)

    def from_literal(self, text: str) -> "Scalar":
        """Parse an integer or fraction literal.

        Accepted forms: ``-?[0-9]+`` and ``-?[0-9]+/[1-9][0-9]*``.
        """
        text = text.strip()
        if _INT_RE.match(text):
            return self.scalar(int(text))
        m = _RAT_RE.match(text)
        if m:
            return self.scalar(int(m.group(1)), int(m.group(2)))
        raise BadScalarLiteral("bad scalar literal: %r" % (text,))

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)


class Scalar:
    """An immutable element of a fixed :class:`FieldSpec`.

    The payload is a ``fractions.Fraction`` (rationals) or a canonical
    residue ``int`` in ``[0, p)`` (prime field).
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self):
        return self.value != 0

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise MixedFields("expected a Scalar, got %r" % (other,))
        if other.field != self.field:
            raise MixedFields(
                "cannot combine %r with %r" % (self.field, other.field)
            )

    def __add__(self, other):
        self._check(other)
        if self.field.kind == "Rationals":
            return Scalar(self.field, self.value + other.value)
        return Scalar(self.field, (self.value + other.value) % self.field.characteristic)

    def __sub__(self, other):
        self._check(other)
        if self.field.kind == "Rationals":
            return Scalar(self.field, self.value - other.value)
        return Scalar(self.field, (self.value - other.value) % self.field.characteristic)

    def __mul__(self, other):
        self._check(other)
        if self.field.kind == "Rationals":
            return Scalar(self.field, self.value * other.value)
        return Scalar(self.field, (self.value * other.value) % self.field.characteristic)

    def __truediv__(self, other):
        self._check(other)
        if other.value == 0:
            raise DivisionByZero("division by zero scalar")
        if self.field.kind == "Rationals":
            return Scalar(self.field, self.value / other.value)
        p = self.field.characteristic
        return Scalar(self.field, self.value * pow(other.value, -1, p) % p)

    def __neg__(self):
        if self.field.kind == "Rationals":
            return Scalar(self.field, -self.value)
        return Scalar(self.field, (-self.value) % self.field.characteristic)

    def inverse(self) -> "Scalar":
        if self.value == 0:
            raise DivisionByZero("zero scalar has no inverse")
        return self.field.one / self

    # -- comparison / hashing ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    # -- display ---------------------------------------------------------------

    def __str__(self):
        v = self.value
        if isinstance(v, Fraction) and v.denominator != 1:
            return "%d/%d" % (v.numerator, v.denominator)
        return str(int(v))

    def __repr__(self):
        return "Scalar(%s)" % (self,)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arithmetic(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Combine two scalars of the same field with Add/Sub/Mul/Div."""
    key = op.lower()
    if key not in _OPS:
        raise ValueError("unknown operation %r" % (op,))
    return _OPS[key](a, b)
