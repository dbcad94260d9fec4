"""
Exact arithmetic over the two integral domains number walls live in: the
arbitrary precision integers and the prime fields Z/pZ.

Wall entries are stored as plain Python integers, canonical for their
domain, with the :class:`Domain` acting as the tag. :class:`DomainValue`
pairs the two for callers that want self-describing values.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from sympy import isprime

from .exceptions import (DivisionByZero, DomainMismatch, InexactDivision,
                         InvalidModulus, WrongDomain, ZeroInverse)

# fraction field elements: Fraction over Z, canonical int over Z/pZ
Quotient = Union[int, Fraction]

INVERSE_TABLE_LIMIT = 256


class DomainKind(str, Enum):
    INTEGERS = 'Z'
    PRIME_FIELD = 'p'


class Domain:

    """
    Either the integers or the prime field of ``p`` elements
    """

    def __init__(self, p: Optional[int] = None):
        if p is not None:
            if not isinstance(p, int) or p < 2 or not isprime(p):
                raise InvalidModulus(p)
            if p < INVERSE_TABLE_LIMIT:
                self._inverses = [0] + [pow(a, -1, p) for a in range(1, p)]
            else:
                self._inverses = None
        self.p = p

    @classmethod
    def integers(cls) -> 'Domain':
        return cls()

    @classmethod
    def prime_field(cls, p: int) -> 'Domain':
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> 'Domain':
        """
        Reads ``Z`` (any case) as the integers and a decimal number as the
        prime field of that size
        """
        text = str(text).strip()
        if text.upper() == 'Z':
            return cls.integers()
        try:
            modulus = int(text)
        except ValueError:
            raise InvalidModulus(text)
        return cls.prime_field(modulus)

    @property
    def kind(self) -> DomainKind:
        return DomainKind.INTEGERS if self.p is None else DomainKind.PRIME_FIELD

    @property
    def is_field(self) -> bool:
        return self.p is not None

    def __eq__(self, other):
        return isinstance(other, Domain) and self.p == other.p

    def __hash__(self):
        return hash(('Domain', self.p))

    def __str__(self):
        return 'Z' if self.p is None else str(self.p)

    def __repr__(self):
        return 'Domain({})'.format(str(self))

    def reduce(self, value: int) -> int:
        """Canonical representative of ``value``"""
        if self.p is None:
            return int(value)
        return int(value) % self.p

    def inverse(self, value: int) -> int:
        if self.p is None:
            raise WrongDomain('The integers have no multiplicative inverses')
        value %= self.p
        if value == 0:
            raise ZeroInverse()
        if self._inverses is not None:
            return self._inverses[value]
        return pow(value, -1, self.p)

    def divide(self, dividend: int, divisor: int) -> int:
        """
        Exact quotient. Over the integers a remainder raises
        :class:`InexactDivision`.
        """
        if self.p is None:
            if divisor == 0:
                raise DivisionByZero()
            quotient, remainder = divmod(dividend, divisor)
            if remainder:
                raise InexactDivision(dividend, divisor)
            return quotient
        divisor %= self.p
        if divisor == 0:
            raise DivisionByZero()
        if self._inverses is not None:
            return dividend * self._inverses[divisor] % self.p
        return dividend * pow(divisor, -1, self.p) % self.p

    def quotient(self, numerator: Quotient, denominator: Quotient) -> Quotient:
        """
        ``numerator / denominator`` in the fraction field: a :class:`Fraction`
        over the integers, a canonical residue over a prime field
        """
        if self.p is None:
            if denominator == 0:
                raise DivisionByZero()
            return Fraction(numerator, denominator)
        return self.divide(numerator, denominator)

    def from_quotient(self, value: Quotient) -> int:
        """
        Brings a fraction field element back into the domain, which must be
        possible for any value that is a genuine wall entry
        """
        if self.p is not None:
            return value % self.p
        value = Fraction(value)
        if value.denominator != 1:
            raise InexactDivision(value.numerator, value.denominator)
        return value.numerator

    def value(self, value: int) -> 'DomainValue':
        return DomainValue(self, value)


@dataclass(frozen=True)
class DomainValue:

    """
    An exact element of a :class:`Domain`. Prime field values are always
    kept in the canonical range ``0 <= value < p``.
    """

    domain: Domain
    value: int

    def __post_init__(self):
        object.__setattr__(self, 'value', self.domain.reduce(self.value))

    def _check(self, other: 'DomainValue') -> None:
        if not isinstance(other, DomainValue):
            raise TypeError('Expected a DomainValue, got {!r}'.format(other))
        if other.domain != self.domain:
            raise DomainMismatch(self.domain, other.domain)

    def __add__(self, other: 'DomainValue') -> 'DomainValue':
        self._check(other)
        return DomainValue(self.domain, self.value + other.value)

    def __sub__(self, other: 'DomainValue') -> 'DomainValue':
        self._check(other)
        return DomainValue(self.domain, self.value - other.value)

    def __mul__(self, other: 'DomainValue') -> 'DomainValue':
        self._check(other)
        return DomainValue(self.domain, self.value * other.value)

    def __neg__(self) -> 'DomainValue':
        return DomainValue(self.domain, -self.value)

    def __truediv__(self, other: 'DomainValue') -> 'DomainValue':
        return exact_divide(self, other)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def field_inverse(a: DomainValue) -> DomainValue:
    """
    Multiplicative inverse of a nonzero prime field element
    """
    return DomainValue(a.domain, a.domain.inverse(a.value))


def exact_divide(a: DomainValue, b: DomainValue) -> DomainValue:
    """
    ``q`` with ``q * b == a`` exactly
    """
    a._check(b)
    return DomainValue(a.domain, a.domain.divide(a.value, b.value))
