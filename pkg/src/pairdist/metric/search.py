"""Exact minimum symbol-pair distance by run-structured support enumeration.

For a codeword with 0 < w < n nonzeros in m circular runs the pair weight is
w + m. The minimum pair distance d_p lies in [d_H + 1, 2 d_H], so only
support shapes with w + m = s for s below 2 d_H need examining. Each shape is
rotated so that position 0 starts the first run; the parity rows restricted
to the support columns are row-reduced incrementally along a depth-first walk
over run and gap lengths, and a shape is a hit when the restricted kernel
contains a vector with no zero entry.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb

from ..code import CyclicCode, contains_vector
from ..errors import InvariantBreach, SearchBudgetExceeded, UnsupportedCodeError
from ..poly import Polynomial
from .castagnoli import CastagnoliDecomposition, castagnoli_dH
from .kernel import IncrementalKernel, full_support_vectors
from .pair import pair_weight

DEFAULT_MAX_PATTERNS = 50_000_000


@dataclass
class SearchStats:
    patterns: int = 0
    kernels: int = 0
    seconds: float = 0.0

    def merge(self, other: SearchStats):
        self.patterns += other.patterns
        self.kernels += other.kernels


@dataclass(frozen=True)
class DistanceReport:
    dH: int
    dp: int
    dH_witness: Polynomial
    dp_witness: Polynomial
    decomposition: CastagnoliDecomposition
    stats: SearchStats = dc_field(compare=False)


def _normalized_min(vectors, support, n):
    best = None
    for v in vectors:
        word = [0] * n
        for i, c in zip(support, v):
            word[i] = c
        key = tuple(word)
        if best is None or key < best:
            best = key
    return best


def _lowweight_search(code: CyclicCode, w: int, limit: int | None):
    """Normalized codewords of exact weight w with position 0 in the support."""
    n, p = code.n, code.p
    cols = code.parity.columns
    ker = IncrementalKernel(p)
    ker.add(cols[0])
    found = []
    support = [0]

    def rec(start: int, left: int) -> bool:
        if left == 0:
            if ker.kernel:
                for v in full_support_vectors(ker.kernel, w, p):
                    word = [0] * n
                    for i, c in zip(support, v):
                        word[i] = c
                    found.append(tuple(word))
                    if limit is not None and len(found) >= limit:
                        return True
            return False
        for i in range(start, n - left + 1):
            m = ker.mark()
            ker.add(cols[i])
            support.append(i)
            stop = rec(i + 1, left - 1)
            support.pop()
            ker.rollback(m)
            if stop:
                return True
        return False

    rec(1, w - 1)
    return found


def _canonical_rotation(word: tuple[int, ...], p: int) -> tuple[int, ...]:
    n = len(word)
    best = None
    for s in range(n):
        if word[s]:
            rot = word[s:] + word[:s]
            inv = pow(rot[0], p - 2, p)
            rot = tuple(c * inv % p for c in rot)
            if best is None or rot < best:
                best = rot
    return best


def low_weight_codewords(code: CyclicCode, w: int, collect_limit: int | None = None) -> list[Polynomial]:
    """Codewords of exact Hamming weight ``w``, one representative per shift/scalar class.

    Representatives are the lexicographically smallest normalized rotation
    (first coefficient 1); the list is sorted and truncated to
    ``collect_limit`` classes.
    """
    if not 1 <= w <= code.n:
        raise ValueError(f"weight must lie in 1..{code.n}")
    raw = _lowweight_search(code, w, None)
    classes = sorted({_canonical_rotation(c, code.p) for c in raw})
    if collect_limit is not None:
        classes = classes[:collect_limit]
    return [Polynomial(code.field, c) for c in classes]


def first_low_weight_word(code: CyclicCode, w: int) -> tuple[int, ...] | None:
    hits = _lowweight_search(code, w, 1)
    return hits[0] if hits else None


def profile_count(n: int, s: int, wmin: int) -> int:
    """Number of run/gap compositions with w + m = s and position 0 starting a run."""
    total = 0
    for m in range(1, s):
        w = s - m
        if w < max(wmin, m) or n - w < m or w >= n:
            continue
        total += comb(w - 1, m - 1) * comb(n - w - 1, m - 1)
    return total


def _branches(n: int, s: int, wmin: int):
    """Top-level work units (m, first run length, first gap length) for target s."""
    out = []
    for m in range(1, s):
        w = s - m
        if w < max(wmin, m) or n - w < m or w >= n:
            continue
        z = n - w
        if m == 1:
            out.append((1, w, z))
            continue
        for l1 in range(1, w - (m - 1) + 1):
            for g1 in range(1, z - (m - 1) + 1):
                out.append((m, l1, g1))
    return out


def _search_branches(code: CyclicCode, s: int, branches):
    """Scan the given work units; return (best normalized hit or None, stats)."""
    n, p = code.n, code.p
    cols = code.parity.columns
    stats = SearchStats()
    best = None
    ker = IncrementalKernel(p)
    support: list[int] = []

    def leaf():
        nonlocal best
        stats.patterns += 1
        if not ker.kernel:
            return
        stats.kernels += 1
        cand = _normalized_min(full_support_vectors(ker.kernel, len(support), p), support, n)
        if cand is not None and (best is None or cand < best):
            best = cand

    def add_run(pos: int, length: int):
        for i in range(pos, pos + length):
            ker.add(cols[i])
            support.append(i)

    def rec(level: int, m: int, pos: int, w_left: int, z_left: int):
        # runs 1..level-1 and their gaps are placed; pos is the next run start
        if level == m:
            mk = ker.mark()
            ns = len(support)
            add_run(pos, w_left)
            leaf()
            del support[ns:]
            ker.rollback(mk)
            return
        for ln in range(1, w_left - (m - level) + 1):
            mk = ker.mark()
            ns = len(support)
            add_run(pos, ln)
            for g in range(1, z_left - (m - level) + 1):
                rec(level + 1, m, pos + ln + g, w_left - ln, z_left - g)
            del support[ns:]
            ker.rollback(mk)

    for m, l1, g1 in branches:
        w = s - m
        z = n - w
        ker.rollback((0, 0, 0))
        support.clear()
        add_run(0, l1)
        if m == 1:
            leaf()
        else:
            rec(2, m, l1 + g1, w - l1, z - g1)
    return best, stats


def _worker(args):
    code, s, branches = args
    return _search_branches(code, s, branches)


def _search_level(code: CyclicCode, s: int, wmin: int, jobs: int, pool=None):
    branches = _branches(code.n, s, wmin)
    if jobs <= 1 or pool is None or len(branches) < 2:
        return _search_branches(code, s, branches)
    # round-robin chunking keeps the per-worker load similar
    chunks = [branches[i::jobs] for i in range(jobs)]
    best, stats = None, SearchStats()
    for b, st in pool.map(_worker, [(code, s, c) for c in chunks if c]):
        stats.merge(st)
        if b is not None and (best is None or b < best):
            best = b
    return best, stats


def min_pair_distance(
    code: CyclicCode,
    jobs: int = 1,
    max_patterns: int | None = DEFAULT_MAX_PATTERNS,
    max_pair_weight: int | None = None,
) -> DistanceReport:
    """Exact d_H and d_p with witnesses; output is independent of ``jobs``."""
    t0 = time.perf_counter()
    n = code.n
    decomp = castagnoli_dH(code)
    dH = decomp.dH
    if dH >= n:
        raise UnsupportedCodeError(f"d_H = {dH} equals the length n = {n}; the pair-distance bounds do not apply")
    hw = first_low_weight_word(code, dH)
    if hw is None:
        raise InvariantBreach(f"no codeword of weight {dH} although the Castagnoli minimum is {dH}")
    top = min(2 * dH - 1, n - 1)
    if max_patterns is not None:
        need = sum(profile_count(n, s, dH) for s in range(dH + 1, top + 1))
        if need > max_patterns:
            raise SearchBudgetExceeded(f"search needs {need} support patterns, budget is {max_patterns}")
    stats = SearchStats()
    dp, witness = None, None
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for s in range(dH + 1, top + 1):
            if max_pair_weight is not None and s > max_pair_weight:
                raise SearchBudgetExceeded(f"pair weight {s} exceeds the configured maximum {max_pair_weight}")
            best, st = _search_level(code, s, dH, jobs, pool)
            stats.merge(st)
            if best is not None:
                dp, witness = s, best
                break
    finally:
        if pool is not None:
            pool.shutdown()
    if dp is None:
        dp, witness = pair_weight(hw), hw
        if dp != min(2 * dH, n):
            raise InvariantBreach(f"no pair weight below {min(2 * dH, n)} found but the weight-{dH} witness has {dp}")
        if max_pair_weight is not None and dp > max_pair_weight:
            raise SearchBudgetExceeded(f"d_p = {dp} exceeds the configured maximum {max_pair_weight}")
    stats.seconds = time.perf_counter() - t0
    report = DistanceReport(dH, dp, Polynomial(code.field, hw), Polynomial(code.field, witness), decomp, stats)
    _check_report(code, report, witness, hw)
    return report


def _check_report(code: CyclicCode, rep: DistanceReport, pw_word, hw_word):
    if not contains_vector(code, list(pw_word)) or not any(pw_word):
        raise InvariantBreach("pair-distance witness is not a nonzero codeword")
    if not contains_vector(code, list(hw_word)) or not any(hw_word):
        raise InvariantBreach("Hamming witness is not a nonzero codeword")
    if pair_weight(pw_word) != rep.dp:
        raise InvariantBreach("pair-distance witness has the wrong pair weight")
    if sum(1 for c in hw_word if c) != rep.dH:
        raise InvariantBreach("Hamming witness has the wrong weight")
    if not rep.dH + 1 <= rep.dp <= 2 * rep.dH:
        raise InvariantBreach(f"d_p = {rep.dp} violates d_H + 1 <= d_p <= 2 d_H with d_H = {rep.dH}")
