"""Brute-force minimum pair distance, independent of the run-structured search.

Two sweeps are available and the cheaper admissible one is used:

* full codeword sweep: every message m in F_p^k, codeword m(x) g(x), when p^k
  fits the cap;
* support sweep: a set S of positions carries a nonzero codeword iff the
  remainders x^i mod g(x), i in S, are linearly dependent. Pair weight is
  monotone under support inclusion, so d_p is the least pair weight of a
  dependent set. Sets are swept by size (all sets containing position 0),
  with batched elimination in numpy.

Neither path touches the parity-row structure or the search module.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from ..code import CyclicCode
from ..errors import OracleUnavailable

DEFAULT_CAP = 10**8
_CHUNK = 1 << 15


def _generator_coeffs(code: CyclicCode) -> np.ndarray:
    p = code.p
    g = np.array([1], dtype=np.int64)
    for root, mult in code.spec.factors:
        for _ in range(mult):
            g = np.convolve(g, np.array([-root.value, 1], dtype=np.int64)) % p
    return g


def _remainder_columns(g: np.ndarray, n: int, p: int) -> np.ndarray:
    """Matrix whose column i holds x^i mod g(x) (monic g of degree r)."""
    r = len(g) - 1
    cols = np.zeros((r, n), dtype=np.int64)
    cur = np.zeros(r, dtype=np.int64)
    cur[0] = 1
    low = g[:r]
    for i in range(n):
        cols[:, i] = cur
        top = cur[r - 1]
        cur = np.roll(cur, 1)
        cur[0] = 0
        # x^r = -g_low mod g
        cur = (cur - top * low) % p
    return cols


def _pair_weights(ind: np.ndarray) -> np.ndarray:
    return (ind | np.roll(ind, -1, axis=1)).sum(axis=1)


def _rank_deficient(A: np.ndarray, p: int) -> np.ndarray:
    """For a batch A of shape (N, R, W): True where rank < W."""
    N, R, W = A.shape
    if W > R:
        return np.ones(N, dtype=bool)
    A = A.copy()
    inv = np.zeros(p, dtype=np.int64)
    inv[1:] = [pow(i, p - 2, p) for i in range(1, p)]
    rk = np.zeros(N, dtype=np.int64)
    rows = np.arange(R)
    for c in range(W):
        col = A[:, :, c]
        cand = (col != 0) & (rows[None, :] >= rk[:, None])
        has = cand.any(axis=1)
        b = np.nonzero(has)[0]
        if len(b) == 0:
            continue
        piv = cand[b].argmax(axis=1)
        rb = rk[b]
        top = A[b, rb, :].copy()
        A[b, rb, :] = A[b, piv, :]
        A[b, piv, :] = top
        scale = inv[A[b, rb, c]]
        prow = A[b, rb, :] * scale[:, None] % p
        A[b, rb, :] = prow
        f = A[b, :, c].copy()
        f[np.arange(len(b)), rb] = 0
        A[b] = (A[b] - f[:, :, None] * prow[:, None, :]) % p
        rk[b] += 1
    return rk < W


def _full_sweep(code: CyclicCode) -> int:
    n, k, p = code.n, code.k, code.p
    g = _generator_coeffs(code)
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(g)] = g
    best = n
    total = p**k
    weights = p ** np.arange(k, dtype=np.int64)
    for start in range(1, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % p
        words = digits @ G % p
        pw = _pair_weights(words != 0)
        best = min(best, int(pw.min()))
    return best


def _support_sweep(code: CyclicCode, cap: int) -> int:
    n, p = code.n, code.p
    g = _generator_coeffs(code)
    r = len(g) - 1
    cols = _remainder_columns(g, n, p)
    best = n  # any nonzero codeword has pair weight at most n
    examined = 0
    for w in range(1, n):
        if w + 1 >= best:
            break
        count = comb(n - 1, w - 1)
        if examined + count > cap:
            raise OracleUnavailable(f"support sweep needs more than {cap} patterns (at size {w})")
        examined += count
        combos = itertools.combinations(range(1, n), w - 1)
        while True:
            flat = np.fromiter(itertools.chain.from_iterable(itertools.islice(combos, _CHUNK)), dtype=np.int64)
            if flat.size == 0 and w > 1:
                break
            S = flat.reshape(-1, w - 1) if w > 1 else np.zeros((1, 0), dtype=np.int64)
            S = np.hstack([np.zeros((S.shape[0], 1), dtype=np.int64), S])
            ind = np.zeros((S.shape[0], n), dtype=bool)
            ind[np.arange(S.shape[0])[:, None], S] = True
            pw = _pair_weights(ind)
            keep = pw < best
            if keep.any():
                S, pw = S[keep], pw[keep]
                A = cols[:, S].transpose(1, 0, 2)
                dep = _rank_deficient(A, p)
                if dep.any():
                    best = min(best, int(pw[dep].min()))
            if w == 1:
                break
    return best


def oracle_pair_distance(code: CyclicCode, cap: int = DEFAULT_CAP) -> int:
    """Exact d_p by brute force; raises OracleUnavailable when over ``cap``."""
    n, k, p = code.n, code.k, code.p
    r = n - k
    subset_bound = sum(comb(n - 1, w - 1) for w in range(1, min(r + 1, n - 1) + 1))
    full = p**k
    if full <= cap and full <= subset_bound:
        return _full_sweep(code)
    return _support_sweep(code, cap)
