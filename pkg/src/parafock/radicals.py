"""Exact arithmetic on finite rational combinations of square roots.

A value is stored as a map ``{d: q_d}`` representing ``sum(q_d * sqrt(d))``
where every key ``d`` is a squarefree positive integer (``1`` carries the
rational part) and every coefficient is a nonzero ``Fraction``.  The map is
canonical, so equality of values is equality of maps and no floating-point
tolerance is ever involved.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import DomainError

Rational = Union[int, Fraction]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n = s*s*d`` with ``d`` squarefree; return ``(s, d)``.

    Trial division over a small prime table with a deterministic odd-divisor
    fallback; radicands arising from coupling coefficients stay modest.
    """
    if n < 1:
        raise DomainError(f"need a positive integer, got {n}")
    s = 1
    d = 1
    for q in _SMALL_PRIMES:
        if q * q > n:
            break
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        s *= q ** (e >> 1)
        if e & 1:
            d *= q
    q = _SMALL_PRIMES[-1] + 2
    while q * q <= n:
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        s *= q ** (e >> 1)
        if e & 1:
            d *= q
        q += 2
    return s, d * n


class RadicalNumber:
    """Immutable element of the ring Q[sqrt(d) : d squarefree].

    All operations are pure and return canonical values; instances are safe
    to share between threads and to use as dict keys.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, Fraction] | None = None):
        # terms is trusted to be canonical; use the constructors below.
        self._terms = {} if terms is None else terms
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "RadicalNumber":
        return RadicalNumber()

    @staticmethod
    def one() -> "RadicalNumber":
        return RadicalNumber({1: Fraction(1)})

    @staticmethod
    def from_rational(q: Rational) -> "RadicalNumber":
        q = Fraction(q)
        return RadicalNumber({1: q} if q else {})

    @staticmethod
    def from_sqrt_rational(q: Rational, sign: int = 1) -> "RadicalNumber":
        """Return ``sign * sqrt(q)`` for rational ``q >= 0`` in canonical form."""
        if sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {sign}")
        q = Fraction(q)
        if q < 0:
            raise DomainError(f"cannot take a real square root of {q}")
        if q == 0:
            return RadicalNumber()
        # sqrt(a/b) = sqrt(a*b)/b, then extract the square part of a*b.
        s, d = squarefree_decompose(q.numerator * q.denominator)
        return RadicalNumber({d: Fraction(sign * s, q.denominator)})

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "RadicalNumber | None":
        if isinstance(other, RadicalNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalNumber.from_rational(other)
        return None

    def __add__(self, other) -> "RadicalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for d, q in o._terms.items():
            new = terms.get(d, Fraction(0)) + q
            if new:
                terms[d] = new
            else:
                terms.pop(d, None)
        return RadicalNumber(terms)

    __radd__ = __add__

    def __neg__(self) -> "RadicalNumber":
        return RadicalNumber({d: -q for d, q in self._terms.items()})

    def __sub__(self, other) -> "RadicalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RadicalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RadicalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for d1, q1 in self._terms.items():
            for d2, q2 in o._terms.items():
                # sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd;
                # the reduced radicand is squarefree since d1, d2 are.
                g = _gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                q = q1 * q2 * g
                new = terms.get(d, Fraction(0)) + q
                if new:
                    terms[d] = new
                else:
                    terms.pop(d, None)
        return RadicalNumber(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RadicalNumber":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a radical by zero")
            inv = Fraction(1, 1) / Fraction(other)
            return RadicalNumber({d: q * inv for d, q in self._terms.items()})
        return NotImplemented

    # -- predicates and conversions -------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_rational(self) -> bool:
        return set(self._terms) <= {1}

    def as_fraction(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if not self.is_rational():
            raise DomainError(f"{self!r} is not rational")
        return self._terms[1]

    def __float__(self) -> float:
        # diagnostics only; exact paths never compare floats
        return float(sum(float(q) * d ** 0.5 for d, q in self._terms.items()))

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    # -- serialization ---------------------------------------------------

    def to_json(self) -> list[list[int]]:
        """JSON form: sorted triples ``[d, numerator, denominator]``; zero is ``[]``."""
        return [[d, q.numerator, q.denominator] for d, q in sorted(self._terms.items())]

    @staticmethod
    def from_json(data) -> "RadicalNumber":
        value = RadicalNumber()
        for d, num, den in data:
            value = value + RadicalNumber.from_sqrt_rational(d) * Fraction(num, den)
        return value

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, q in sorted(self._terms.items()):
            if d == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"sqrt({d})")
            elif q == -1:
                parts.append(f"-sqrt({d})")
            else:
                parts.append(f"{q}*sqrt({d})")
        return " + ".join(parts).replace("+ -", "- ")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


ZERO = RadicalNumber.zero()
ONE = RadicalNumber.one()
