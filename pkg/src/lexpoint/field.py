"""Exact coefficient arithmetic over Q and over prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over Q and canonical
``int`` residues in [0, p) over GF(p).  All arithmetic goes through a Field
object so the polynomial layer stays generic.  No floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, NonPrimeModulus, ScalarParseError

Scalar = Union[Fraction, int]

_INT_RE = re.compile(r"^[+-]?\d+$")
_FRAC_RE = re.compile(r"^([+-]?\d+)/([+-]?\d+)$")

# Miller-Rabin with this witness set is deterministic below the bound
# (Sorenson & Webster, 2015).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= _MR_BOUND:
        raise NonPrimeModulus(
            f"modulus {n} exceeds the deterministic primality bound {_MR_BOUND}"
        )
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the two coefficient fields."""

    kind = "?"

    def zero(self) -> Scalar:
        raise NotImplementedError

    def one(self) -> Scalar:
        raise NotImplementedError

    def from_int(self, k: int) -> Scalar:
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def invert(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def pow(self, a: Scalar, e: int) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def render(self, a: Scalar) -> str:
        raise NotImplementedError

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.invert(b))

    def sort_key(self, a: Scalar):
        return a

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.spec_string()

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.spec_string() == other.spec_string()

    def __hash__(self) -> int:
        return hash(self.spec_string())


class Rationals(Field):
    """Arbitrary-precision rationals, stored in lowest terms by Fraction."""

    kind = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 over Q")
        return 1 / a

    def pow(self, a, e):
        return a**e

    def parse(self, text):
        text = text.strip()
        if _INT_RE.match(text):
            return Fraction(int(text))
        m = _FRAC_RE.match(text)
        if m:
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise ScalarParseError(f"zero denominator in {text!r}")
            return Fraction(num, den)
        raise ScalarParseError(f"not a rational scalar: {text!r}")

    def render(self, a):
        return str(a)

    def spec_string(self):
        return "Q"


class PrimeField(Field):
    """GF(p) with canonical least-nonnegative residues."""

    kind = "Fp"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeModulus(f"modulus {p!r} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def from_int(self, k):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def invert(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 over GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p)

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.match(text):
            raise ScalarParseError(f"not a GF({self.p}) scalar: {text!r}")
        return int(text) % self.p

    def render(self, a):
        return str(a % self.p)

    def spec_string(self):
        return f"Fp:{self.p}"


def parse_scalar(text: str, field: Field) -> Scalar:
    return field.parse(text)


def field_from_spec(spec: str) -> Field:
    """Deserialize "Q" or "Fp:<p>" into a Field."""
    spec = spec.strip()
    if spec == "Q":
        return Rationals()
    if spec.startswith("Fp:"):
        body = spec[3:]
        if not _INT_RE.match(body):
            raise ScalarParseError(f"bad field spec: {spec!r}")
        return PrimeField(int(body))
    raise ScalarParseError(f"bad field spec: {spec!r}")
