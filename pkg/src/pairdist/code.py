"""Repeated-root cyclic codes <g(x)> in F_p[x]/(x^n - 1) with n = L*p."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Sequence

from .errors import InvalidCodeError
from .gf import FieldElement, PrimeField
from .poly import (
    FactorSpec,
    Polynomial,
    binom_mod,
    evaluate,
    expand,
    hasse_derivative,
    mul_mod_xn_minus_1,
    reduce_mod_xn_minus_1,
)


@dataclass(frozen=True)
class ParityStructure:
    """One row per (root, derivative order j) with j below the root's multiplicity.

    Row (a, j) applied to c is the Hasse derivative D^j c evaluated at a.
    """

    rows: tuple[tuple[FieldElement, int], ...]
    n: int
    p: int
    matrix: tuple[tuple[int, ...], ...] = dc_field(repr=False)
    columns: tuple[tuple[int, ...], ...] = dc_field(repr=False)

    @classmethod
    def build(cls, spec: FactorSpec, n: int) -> ParityStructure:
        p = spec.field.p
        rows = tuple((root, j) for root, mult in spec.factors for j in range(mult))
        matrix = []
        for root, j in rows:
            a = root.value
            matrix.append(tuple(binom_mod(i, j, p) * pow(a, i - j, p) % p if i >= j else 0 for i in range(n)))
        columns = tuple(zip(*matrix)) if matrix else tuple(() for _ in range(n))
        return cls(rows, n, p, tuple(matrix), columns)

    def __len__(self):
        return len(self.rows)

    def syndrome(self, vec: Sequence[int]) -> list[int]:
        p = self.p
        return [sum(h * v for h, v in zip(row, vec)) % p for row in self.matrix]


@dataclass(frozen=True)
class CyclicCode:
    field: PrimeField
    n: int
    L: int
    spec: FactorSpec
    g: Polynomial
    k: int
    parity: ParityStructure = dc_field(repr=False)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def word(self, vec: Sequence[int]) -> Polynomial:
        return Polynomial(self.field, vec)

    def contains(self, c: Polynomial) -> bool:
        return contains(self, c)

    def describe(self) -> str:
        fs = ", ".join(f"(x - {r.value})^{m}" for r, m in self.spec.factors)
        return f"C = <{fs}> over GF({self.p}), n={self.n}, k={self.k}"


def build_code(field: PrimeField, n: int, spec: FactorSpec) -> CyclicCode:
    """Validate and construct the code generated by ``expand(spec)`` at length ``n``."""
    p = field.p
    if spec.field != field:
        raise InvalidCodeError(f"factor spec is over {spec.field}, code requested over {field}")
    if n < p or n % p != 0:
        raise InvalidCodeError(f"length {n} is not of the form L*p with p = {p}")
    L = n // p
    if gcd(L, p) != 1:
        raise InvalidCodeError(f"length {n} = {L}*{p} has p | L; only lengths L*p with gcd(L, p) = 1 are supported")
    if not spec.factors:
        raise InvalidCodeError("empty generator: the full ambient ring is degenerate")
    for root, mult in spec.factors:
        if root.value == 0 or pow(root.value, L, p) != 1:
            raise InvalidCodeError(
                f"root {root.value} is not an {L}-th root of unity mod {p}, so (x - {root.value}) does not divide x^{n} - 1"
            )
        if mult > p - 1:
            raise InvalidCodeError(f"multiplicity {mult} >= p = {p}")
    g = expand(spec)
    if g.degree >= n:
        raise InvalidCodeError(f"deg g = {g.degree} >= n = {n}: the code is zero")
    parity = ParityStructure.build(spec, n)
    return CyclicCode(field, n, L, spec, g, n - g.degree, parity)


def contains(code: CyclicCode, c: Polynomial) -> bool:
    if c.field != code.field:
        return False
    if c.degree is not None and c.degree >= code.n:
        c = reduce_mod_xn_minus_1(c, code.n)
    for root, j in code.parity.rows:
        if evaluate(hasse_derivative(c, j), root).value:
            return False
    return True


def contains_vector(code: CyclicCode, vec: Sequence[int]) -> bool:
    if len(vec) != code.n:
        raise ValueError(f"vector of length {len(vec)} for a code of length {code.n}")
    return not any(code.parity.syndrome(vec))


def encode(code: CyclicCode, m: Polynomial) -> Polynomial:
    if m.degree is not None and m.degree >= code.k:
        raise InvalidCodeError(f"message degree {m.degree} must be below k = {code.k}")
    return mul_mod_xn_minus_1(m, code.g, code.n)


def shift(code: CyclicCode, c: Polynomial, s: int) -> Polynomial:
    """x^s * c(x) mod x^n - 1."""
    n = code.n
    s %= n
    out = [0] * n
    for i, v in enumerate(c.coeffs):
        out[(i + s) % n] = (out[(i + s) % n] + v) % code.p
    return Polynomial(code.field, out)
