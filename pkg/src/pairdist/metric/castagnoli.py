"""Minimum Hamming distance of a repeated-root cyclic code of length L*p.

d_H = min over t of P_t * d_H(reduced code at t), where P_t is the weight of
(x - 1)^t and the reduced code is the simple-root length-L code whose zeros
are the roots of multiplicity greater than t. For n = L*p the index t runs
over 0..p-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..code import CyclicCode
from ..gf import PrimeField
from ..poly import Polynomial, weight_of_x_minus_1_pow
from .kernel import IncrementalKernel, full_support_vectors


@dataclass(frozen=True)
class CastagnoliTerm:
    t: int
    P_t: int
    roots: tuple[int, ...]
    reduced_generator: Polynomial
    dH_reduced: int | None  # None: the reduced code is zero (infinite distance)

    @property
    def product(self) -> int | None:
        return None if self.dH_reduced is None else self.P_t * self.dH_reduced

    @property
    def infinite(self) -> bool:
        return self.dH_reduced is None


@dataclass(frozen=True)
class CastagnoliDecomposition:
    terms: tuple[CastagnoliTerm, ...]
    dH: int

    def table(self) -> list[dict]:
        return [
            {
                "t": tm.t,
                "P_t": tm.P_t,
                "roots": list(tm.roots),
                "reduced_generator": list(tm.reduced_generator.coeffs),
                "dH_reduced": "inf" if tm.infinite else tm.dH_reduced,
                "product": "inf" if tm.infinite else tm.product,
            }
            for tm in self.terms
        ]


def simple_root_distance(field: PrimeField, L: int, roots: tuple[int, ...]) -> int | None:
    """Minimum weight of the length-L code {c : c(a) = 0 for a in roots}.

    Returns None when the code is zero, i.e. the roots are all L-th roots of
    unity. Position 0 is forced into the support since the code is cyclic.
    """
    p = field.p
    if not roots:
        return 1
    if len(roots) >= L:
        return None
    cols = [tuple(pow(a, i, p) for a in roots) for i in range(L)]
    for w in range(1, L + 1):
        for rest in itertools.combinations(range(1, L), w - 1):
            ker = IncrementalKernel(p)
            for i in (0,) + rest:
                ker.add(cols[i])
            if ker.kernel and next(full_support_vectors(ker.kernel, w, p), None) is not None:
                return w
    raise AssertionError(f"length-{L} code with {len(roots)} zeros has no nonzero word")


def _reduced_generator(field: PrimeField, L: int, roots: tuple[int, ...]) -> Polynomial:
    if len(roots) >= L:
        return Polynomial(field, [-1] + [0] * (L - 1) + [1])
    g = Polynomial(field, [1])
    for a in roots:
        g = g * Polynomial(field, [-a, 1])
    return g


def castagnoli_dH(code: CyclicCode) -> CastagnoliDecomposition:
    field, L, p = code.field, code.L, code.p
    cache: dict[tuple[int, ...], int | None] = {}
    terms = []
    for t in range(p):
        roots = tuple(sorted(r.value for r, m in code.spec.factors if m > t))
        if roots not in cache:
            cache[roots] = simple_root_distance(field, L, roots)
        terms.append(
            CastagnoliTerm(t, weight_of_x_minus_1_pow(t, field), roots, _reduced_generator(field, L, roots), cache[roots])
        )
    finite = [tm.product for tm in terms if not tm.infinite]
    return CastagnoliDecomposition(tuple(terms), min(finite))
