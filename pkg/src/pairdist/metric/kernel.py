"""Incremental column echelon form over F_p.

Columns are appended one at a time; each column that is dependent on the
previous ones yields a kernel vector immediately. State can be rolled back to
an earlier mark, which lets a depth-first support enumeration share the
elimination work of common prefixes.
"""

from __future__ import annotations

import itertools

from ..errors import SearchBudgetExceeded


class IncrementalKernel:
    __slots__ = ("p", "inv", "piv", "vecs", "combos", "kernel", "size")

    def __init__(self, p: int):
        self.p = p
        self.inv = [0] + [pow(i, p - 2, p) for i in range(1, p)]
        self.piv: list[int] = []
        self.vecs: list[list[int]] = []
        self.combos: list[dict[int, int]] = []
        self.kernel: list[dict[int, int]] = []
        self.size = 0

    def mark(self) -> tuple[int, int, int]:
        return len(self.piv), len(self.kernel), self.size

    def rollback(self, m: tuple[int, int, int]):
        b, k, s = m
        del self.piv[b:], self.vecs[b:], self.combos[b:], self.kernel[k:]
        self.size = s

    @property
    def rank(self) -> int:
        return len(self.piv)

    def add(self, col) -> bool:
        """Append a column; return True when it closed a new dependency."""
        p = self.p
        t = self.size
        self.size = t + 1
        u = list(col)
        comb = {t: 1}
        for pv, vec, cmb in zip(self.piv, self.vecs, self.combos):
            c = u[pv]
            if c:
                u = [(a - c * b) % p for a, b in zip(u, vec)]
                for idx, val in cmb.items():
                    comb[idx] = (comb.get(idx, 0) - c * val) % p
        lead = next((i for i, a in enumerate(u) if a), None)
        if lead is None:
            self.kernel.append({i: v for i, v in comb.items() if v})
            return True
        ia = self.inv[u[lead]]
        self.piv.append(lead)
        self.vecs.append([a * ia % p for a in u])
        self.combos.append({i: v * ia % p for i, v in comb.items() if v})
        return False


def full_support_vectors(kernel: list[dict[int, int]], w: int, p: int, limit: int = 200_000):
    """Yield every kernel vector (length w) with all entries nonzero and entry 0 equal to 1.

    ``kernel`` is a basis of the solution space, each vector sparse as
    {index: value}. Raises SearchBudgetExceeded if the enumeration would exceed
    ``limit`` candidates.
    """
    if not kernel:
        return
    covered = set()
    for kv in kernel:
        covered.update(kv)
    if len(covered) < w:
        return
    basis = [[kv.get(i, 0) for i in range(w)] for kv in kernel]
    # one basis vector carries entry 0, the rest are cleared there
    j = next((i for i, b in enumerate(basis) if b[0]), None)
    if j is None:
        return
    inv0 = pow(basis[j][0], p - 2, p)
    lead = [a * inv0 % p for a in basis[j]]
    rest = []
    for i, b in enumerate(basis):
        if i == j:
            continue
        c = b[0]
        rest.append([(x - c * y) % p for x, y in zip(b, lead)] if c else b)
    if p ** len(rest) > limit:
        raise SearchBudgetExceeded(f"kernel of dimension {len(basis)} over GF({p}) is too large to enumerate")
    for lam in itertools.product(range(p), repeat=len(rest)):
        v = lead[:]
        for c, b in zip(lam, rest):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, b)]
        if all(v):
            yield v
