"""Exact scalar arithmetic over the rationals and prime fields.

Scalars are plain Python values: ``fractions.Fraction`` over the rationals
(automatically reduced, positive denominator) and ``int`` residues in
``[0, p)`` over a prime field. A field object bundles the arithmetic so that
matrix and algebra code never branches on the field kind. Every operation is
exact; nothing here ever rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatch, FormatError

Scalar = Union[Fraction, int]

_LITERAL = re.compile(r"[+-]?\d+(/[+-]?\d+)?\Z")


def _fraction_from_literal(text: str) -> Fraction:
    """Integers and num/den strings only; decimal notation is rejected."""
    text = text.strip()
    if not _LITERAL.match(text):
        raise FormatError(f"bad scalar literal {text!r} (want int or num/den)")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise FormatError(f"zero denominator in {text!r}") from exc


def is_prime(p: int) -> bool:
    """Trial-division primality test; fields here are desk-scale."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers; elements are ``Fraction``."""

    characteristic: int = 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def normalize(self, value) -> Fraction:
        """Coerce an int or Fraction into a field element."""
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise FormatError(f"not a rational scalar: {value!r}")
        return Fraction(value)

    def parse(self, text) -> Fraction:
        """Parse an int, or a string like ``"3"`` or ``"-2/5"``."""
        if isinstance(text, bool):
            raise FormatError(f"not a scalar: {text!r}")
        if isinstance(text, int):
            return Fraction(text)
        if isinstance(text, str):
            return _fraction_from_literal(text)
        raise FormatError(f"bad rational literal {text!r}")

    def to_str(self, a: Fraction) -> str:
        return str(a)

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """Integers modulo a prime ``p``; elements are ints in ``[0, p)``."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FormatError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1 % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> int:
        return n % self.p

    def normalize(self, value) -> int:
        if isinstance(value, bool):
            raise FormatError(f"not a scalar: {value!r}")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return self.div(self.from_int(value.numerator),
                            self.from_int(value.denominator))
        raise FormatError(f"not a residue: {value!r}")

    def parse(self, text) -> int:
        """Parse an int or a ``"num"`` / ``"num/den"`` string into a residue."""
        if isinstance(text, bool):
            raise FormatError(f"not a scalar: {text!r}")
        if isinstance(text, int):
            return text % self.p
        if isinstance(text, str):
            frac = _fraction_from_literal(text)
            if frac.denominator % self.p == 0:
                raise FormatError(
                    f"{text!r} has no meaning mod {self.p} (denominator divisible by p)")
            return self.normalize(frac)
        raise FormatError(f"bad scalar literal {text!r}")

    def to_str(self, a: int) -> str:
        return str(a % self.p)

    def __str__(self) -> str:
        return f"F{self.p}"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def GF(p: int) -> PrimeField:
    """Prime field of order ``p``."""
    return PrimeField(p)


def check_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatch(f"fields differ: {a} vs {b}")
