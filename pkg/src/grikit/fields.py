"""Exact base-field arithmetic: arbitrary-precision rationals and prime fields.

Rational arithmetic is delegated to :class:`fractions.Fraction`, which keeps
exactly the canonical form required here (reduced, positive denominator,
zero as 0/1).  Prime fields are implemented directly; the modulus is checked
for primality once, at field construction.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InvalidInput

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")
_MOD_RE = re.compile(r"^(-?\d+)\s+mod\s+(\d+)$")


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n); desk-scale moduli only."""
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


class RationalField:
    """The field of rational numbers; elements are `Fraction` values."""

    char = 0
    size = None  # not finite

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, n) -> Fraction:
        return Fraction(n)

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
            raise DivisionByZero("0 has no inverse in Q")
        return 1 / a

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        if not _RATIONAL_RE.match(text):
            raise InvalidInput(f"not a rational literal: {text!r}")
        return Fraction(text)

    def format(self, a: Fraction) -> str:
        return str(a)

    def random(self, rng, lo: int = -9, hi: int = 9) -> Fraction:
        return Fraction(rng.randint(lo, hi))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    def to_json(self):
        return {"field": "Q"}


class PrimeFieldElement:
    """Residue in [0, p) of the prime field F_p."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, field: "PrimeField"):
        self.residue = residue % field.p
        self.field = field

    @property
    def modulus(self) -> int:
        return self.field.p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.field.p != self.field.p:
                raise FieldMismatch(
                    f"mixed moduli {self.field.p} and {other.field.p}")
            return other.residue
        if isinstance(other, int):
            return other % self.field.p
        raise FieldMismatch(
            f"cannot combine F_{self.field.p} element with {type(other).__name__}")

    def __add__(self, other):
        return PrimeFieldElement(self.residue + self._coerce(other), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.residue - self._coerce(other), self.field)

    def __rsub__(self, other):
        return PrimeFieldElement(self._coerce(other) - self.residue, self.field)

    def __mul__(self, other):
        return PrimeFieldElement(self.residue * self._coerce(other), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.field)

    def __truediv__(self, other):
        r = self._coerce(other)
        if r == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.field.p}")
        return PrimeFieldElement(self.residue * pow(r, -1, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.field.p == other.field.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.field.p))

    def __repr__(self):
        return f"{self.residue} mod {self.field.p}"


class PrimeField:
    """The prime field F_p; primality of p is verified at construction."""

    char: int

    def __init__(self, p: int):
        if not is_prime(p):
            raise InvalidInput(f"modulus {p} is not prime")
        self.p = p
        self.char = p
        self.size = p

    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self)

    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self)

    def of(self, n: int) -> PrimeFieldElement:
        return PrimeFieldElement(n, self)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a: PrimeFieldElement) -> PrimeFieldElement:
        if a.residue == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(a.residue, -1, self.p), self)

    def is_zero(self, a: PrimeFieldElement) -> bool:
        return a.residue == 0

    def elements(self):
        """All field elements in canonical order 0, 1, ..., p-1."""
        return (PrimeFieldElement(r, self) for r in range(self.p))

    def parse(self, text: str) -> PrimeFieldElement:
        text = text.strip()
        m = _MOD_RE.match(text)
        if m:
            if int(m.group(2)) != self.p:
                raise FieldMismatch(f"literal {text!r} is not in F_{self.p}")
            return self.of(int(m.group(1)))
        if _RATIONAL_RE.match(text):
            if "/" in text:
                num, den = text.split("/")
                return self.of(int(num)) / self.of(int(den))
            return self.of(int(text))
        raise InvalidInput(f"not an F_{self.p} literal: {text!r}")

    def format(self, a: PrimeFieldElement) -> str:
        return f"{a.residue} mod {self.p}"

    def random(self, rng, lo=None, hi=None) -> PrimeFieldElement:
        return PrimeFieldElement(rng.randrange(self.p), self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"

    def to_json(self):
        return {"field": "Fp", "p": self.p}


def field_from_json(config: dict):
    """Decode {"field": "Q"} or {"field": "Fp", "p": 5}."""
    name = config.get("field")
    if name == "Q":
        return RationalField()
    if name == "Fp":
        return PrimeField(int(config["p"]))
    raise InvalidInput(f"unknown field descriptor {config!r}")
