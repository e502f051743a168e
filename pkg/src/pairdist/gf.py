"""Arithmetic in prime fields F_p and discovery of roots of unity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import FieldMismatchError, InvalidFieldError


def is_prime(n: int) -> bool:
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


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimeField:
    """The field of residues modulo an odd prime ``p``."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise InvalidFieldError(f"modulus must be an integer, got {self.p!r}")
        if self.p == 2:
            raise InvalidFieldError("p = 2 is not supported; the modulus must be an odd prime")
        if not is_prime(self.p):
            raise InvalidFieldError(f"{self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.p)]

    def inv_int(self, a: int) -> int:
        """Inverse of a raw residue; used by the hot loops that avoid wrappers."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise InvalidFieldError(f"{self.value} is not a reduced residue mod {self.field.p}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.field.p
        return NotImplemented

    def _new(self, v: int) -> FieldElement:
        return FieldElement(v % self.field.p, self.field)

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._new(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._new(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._new(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._new(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.value, e, self.field.p))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * self._new(v).inverse()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._new(pow(self.value, self.field.p - 2, self.field.p))


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatchError(f"cannot combine elements of {a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def order(a: FieldElement) -> int:
    """Multiplicative order of a nonzero element.

    Only divisors of p - 1 are tried, smallest first.
    """
    if a.value == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    p = a.field.p
    for e in _divisors(p - 1):
        if pow(a.value, e, p) == 1:
            return e
    raise AssertionError("unreachable: Fermat's little theorem")


@lru_cache(maxsize=None)
def _divisors(m: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, m + 1) if m % d == 0)


def primitive_root(field: PrimeField) -> FieldElement:
    """Smallest generator of the multiplicative group of ``field``."""
    p = field.p
    qs = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return FieldElement(g, field)
    raise AssertionError(f"no primitive root found mod {p}")


def root_of_unity(field: PrimeField, l: int) -> FieldElement:
    """Smallest element of exact order ``l``; requires l | p - 1."""
    if l < 1 or (field.p - 1) % l != 0:
        raise InvalidFieldError(f"no primitive {l}-th root of unity in GF({field.p}): {l} does not divide {field.p - 1}")
    for v in range(1, field.p):
        if order(FieldElement(v, field)) == l:
            return FieldElement(v, field)
    raise AssertionError("unreachable: the multiplicative group is cyclic")
