"""Dense polynomials over F_p, factored generators, Hasse derivatives, Lucas weights."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FieldMismatchError, InvalidCodeError
from .gf import FieldElement, PrimeField


def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem (product over base-p digits)."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        c = 1
        for i in range(kd):
            c = c * (nd - i) % p
        for i in range(1, kd + 1):
            c = c * pow(i, p - 2, p) % p
        out = out * c % p
        n //= p
        k //= p
    return out


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Polynomial with coefficients in a prime field, lowest degree first.

    Coefficients are stored as reduced integer residues and are always
    normalized (no trailing zeros); the zero polynomial has ``degree is None``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int | FieldElement] = ()):
        p = field.p
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatchError(f"coefficient from {c.field} in a polynomial over {field}")
                vals.append(c.value)
            else:
                vals.append(int(c) % p)
        self.field = field
        self.coeffs: tuple[int, ...] = _trim(vals)

    @classmethod
    def monomial(cls, field: PrimeField, e: int, c: int = 1) -> Polynomial:
        return cls(field, [0] * e + [c])

    @classmethod
    def from_support(cls, field: PrimeField, terms: dict[int, int]) -> Polynomial:
        if not terms:
            return cls(field)
        v = [0] * (max(terms) + 1)
        for e, c in terms.items():
            v[e] = (v[e] + c) % field.p
        return cls(field, v)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> FieldElement:
        v = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(v, self.field)

    def vector(self, n: int) -> list[int]:
        """Coefficient vector of length ``n`` (the polynomial must have degree < n)."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def _check(self, other: Polynomial):
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine polynomials over {self.field} and {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.field.p
        return Polynomial(self.field, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        self._check(other)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(self.field)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(self.field, [c % p for c in out])

    def __rmul__(self, other) -> Polynomial:
        return self.scale(other)

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial(self.field, [1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: int | FieldElement) -> Polynomial:
        if isinstance(c, FieldElement):
            if c.field != self.field:
                raise FieldMismatchError("scalar from a different field")
            c = c.value
        return Polynomial(self.field, [c * x for x in self.coeffs])

    def __call__(self, a: FieldElement | int) -> FieldElement:
        return evaluate(self, a)

    def __repr__(self):
        return f"Polynomial({self.render()}, GF({self.field.p}))"

    def render(self) -> str:
        """Text form ``c0 + c1*x + c2*x^2 ...`` listing nonzero terms only."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)


@dataclass(frozen=True)
class FactorSpec:
    """A generator in factored form: prod (x - root)^mult over distinct roots."""

    field: PrimeField
    factors: tuple[tuple[FieldElement, int], ...]

    def __post_init__(self):
        seen = set()
        fixed = []
        for root, mult in self.factors:
            if not isinstance(root, FieldElement):
                root = FieldElement(int(root) % self.field.p, self.field)
            elif root.field != self.field:
                raise FieldMismatchError(f"root {root!r} is not in {self.field}")
            if not isinstance(mult, int) or mult < 1:
                raise InvalidCodeError(f"multiplicity must be a positive integer, got {mult!r}")
            if mult > self.field.p - 1:
                raise InvalidCodeError(
                    f"multiplicity {mult} of root {root.value} exceeds p - 1 = {self.field.p - 1}"
                )
            if root.value in seen:
                raise InvalidCodeError(f"root {root.value} listed twice")
            seen.add(root.value)
            fixed.append((root, mult))
        object.__setattr__(self, "factors", tuple(fixed))

    @classmethod
    def of(cls, field: PrimeField, pairs: Sequence[tuple[int, int]]) -> FactorSpec:
        """Build from ``(root, multiplicity)`` integer pairs, dropping zero multiplicities."""
        return cls(field, tuple((FieldElement(r % field.p, field), m) for r, m in pairs if m))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def pairs(self) -> list[tuple[int, int]]:
        return [(r.value, m) for r, m in self.factors]


def expand(spec: FactorSpec) -> Polynomial:
    p = spec.field.p
    out = [1]
    for root, mult in spec.factors:
        a = root.value
        for _ in range(mult):
            # multiply by (x - a)
            nxt = [0] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] += c
                nxt[i] -= a * c
            out = [c % p for c in nxt]
    return Polynomial(spec.field, out)


def evaluate(f: Polynomial, a: FieldElement | int) -> FieldElement:
    """Horner evaluation of ``f`` at ``a``."""
    if isinstance(a, FieldElement):
        if a.field != f.field:
            raise FieldMismatchError(f"cannot evaluate a polynomial over {f.field} at an element of {a.field}")
        a = a.value
    p = f.field.p
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * a + c) % p
    return FieldElement(acc, f.field)


def hasse_derivative(f: Polynomial, j: int) -> Polynomial:
    """D^j f = sum_i C(i, j) f_i x^(i - j), with binomials reduced mod p."""
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    p = f.field.p
    return Polynomial(f.field, [binom_mod(i, j, p) * c for i, c in enumerate(f.coeffs) if i >= j])


def derivative(f: Polynomial, j: int = 1) -> Polynomial:
    """Ordinary j-th formal derivative."""
    p = f.field.p
    out = []
    for i, c in enumerate(f.coeffs):
        if i < j:
            continue
        falling = 1
        for t in range(j):
            falling *= i - t
        out.append(falling * c % p)
    return Polynomial(f.field, out)


def weight_of_x_minus_1_pow(t: int, field: PrimeField) -> int:
    """Number of nonzero coefficients of (x - 1)^t over ``field``.

    By Lucas, C(t, i) is nonzero mod p exactly when every base-p digit of i
    is bounded by the matching digit of t, giving prod (t_d + 1).
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    p = field.p
    out = 1
    while t:
        out *= t % p + 1
        t //= p
    return out


def mul_mod_xn_minus_1(f: Polynomial, g: Polynomial, n: int) -> Polynomial:
    """Cyclic convolution: f * g with exponents reduced modulo n."""
    if n < 1:
        raise ValueError("n must be positive")
    f._check(g)
    p = f.field.p
    out = [0] * n
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                if b:
                    out[(i + j) % n] += a * b
    return Polynomial(f.field, [c % p for c in out])


def reduce_mod_xn_minus_1(f: Polynomial, n: int) -> Polynomial:
    p = f.field.p
    out = [0] * n
    for i, c in enumerate(f.coeffs):
        out[i % n] += c
    return Polynomial(f.field, [c % p for c in out])
