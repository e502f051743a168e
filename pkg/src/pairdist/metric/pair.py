"""Symbol-pair read vectors, pair weight and pair distance, circular run profiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def _raw(x) -> list[int]:
    return [int(v) for v in x]


def pair_read(x: Sequence) -> list[tuple]:
    """Cyclic pair-read vector [(x0, x1), (x1, x2), ..., (x_{n-1}, x0)]."""
    n = len(x)
    if n < 2:
        raise ValueError("pair reads need length at least 2")
    return [(x[i], x[(i + 1) % n]) for i in range(n)]


def pair_weight(x: Sequence) -> int:
    """Number of cyclic positions whose pair (x_i, x_{i+1}) is not (0, 0)."""
    v = _raw(x)
    n = len(v)
    if n < 2:
        raise ValueError("pair weight needs length at least 2")
    return sum(1 for i in range(n) if v[i] or v[(i + 1) % n])


def pair_distance(x: Sequence, y: Sequence) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    a, b = _raw(x), _raw(y)
    n = len(a)
    if n < 2:
        raise ValueError("pair distance needs length at least 2")
    return sum(1 for i in range(n) if (a[i], a[(i + 1) % n]) != (b[i], b[(i + 1) % n]))


def hamming_weight(x: Sequence) -> int:
    return sum(1 for v in x if int(v))


@dataclass(frozen=True)
class RunProfile:
    """Maximal circular runs of the support, listed from the first run start."""

    n: int
    w: int
    runs: int
    run_lengths: tuple[int, ...]
    gap_lengths: tuple[int, ...]

    @property
    def pair_weight(self) -> int:
        if self.w == 0:
            return 0
        if self.w == self.n:
            return self.n
        return self.w + self.runs


def run_profile(x: Sequence) -> RunProfile:
    v = [1 if int(a) else 0 for a in x]
    n = len(v)
    if n < 2:
        raise ValueError("run profile needs length at least 2")
    w = sum(v)
    if w == 0:
        return RunProfile(n, 0, 0, (), ())
    if w == n:
        return RunProfile(n, n, 1, (n,), ())
    # rotate so position 0 starts a run: a nonzero preceded by a zero
    start = next(i for i in range(n) if v[i] and not v[i - 1])
    rot = v[start:] + v[:start]
    runs, gaps = [], []
    i = 0
    while i < n:
        j = i
        while j < n and rot[j]:
            j += 1
        runs.append(j - i)
        k = j
        while k < n and not rot[k]:
            k += 1
        gaps.append(k - j)
        i = k
    return RunProfile(n, w, len(runs), tuple(runs), tuple(gaps))
