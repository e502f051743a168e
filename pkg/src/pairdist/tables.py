"""Published expectations, stored as data so that reports can cite each row.

Triples are exponents of (x - 1), (x - w), (x - w^2) with w a primitive cube
root of unity; ``redundancy`` is n - k.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TableRow:
    table: str
    triple: tuple[int, int, int]
    redundancy: int
    dp: int
    label: str
    source: str

    @property
    def construction_id(self) -> str:
        return f"{self.table}/{self.triple}"

    @property
    def canonical(self) -> tuple[int, int, int]:
        return tuple(sorted(self.triple, reverse=True))


def _rows(table, label, data):
    return tuple(TableRow(table, t, red, dp, label, src) for t, red, dp, src in data)


MDS_3P = _rows(
    "mds3p",
    "MDS",
    [
        ((0, 2, 0), 2, 4, "trivial (r1 = 0)"),
        ((2, 1, 0), 3, 5, "earlier literature"),
        ((2, 1, 1), 4, 6, "earlier literature"),
        ((3, 1, 0), 4, 6, "earlier literature"),
        ((3, 1, 1), 5, 7, "earlier literature"),
        ((3, 2, 1), 6, 8, "earlier literature"),
        ((4, 2, 2), 8, 10, "earlier literature"),
        ((5, 3, 2), 10, 12, "earlier literature"),
        ((2, 2, 0), 4, 6, "new: two-factor dp = 6 family"),
        ((4, 2, 1), 7, 9, "new: claimed MDS (3p, 9)"),
    ],
)

AMDS_3P = _rows(
    "amds3p",
    "AMDS",
    [
        ((4, 3, 2), 9, 10, "earlier literature"),
        ((0, 3, 0), 3, 4, "new: dp 4 to 6 family"),
        ((2, 2, 1), 5, 6, "new: dp 4 to 6 family"),
        ((3, 2, 0), 5, 6, "new: dp 4 to 6 family"),
        ((3, 2, 2), 7, 8, "new: dp 7 to 10 family"),
        ((3, 3, 1), 7, 8, "new: dp 7 to 10 family"),
        ((4, 1, 0), 5, 6, "new: dp 4 to 6 family"),
        ((4, 1, 1), 6, 7, "new: dp 7 to 10 family"),
        ((4, 3, 1), 8, 9, "new: dp 7 to 10 family"),
        ((5, 2, 1), 8, 9, "new: dp 7 to 10 family"),
        ((5, 2, 2), 9, 10, "new: dp 7 to 10 family"),
    ],
)

# Length lp, d_p = 6 rows: exponents of (x - 1), (x + 1), (x - w), w of order l.
LP6_ROWS = ((4, 0, 0), (3, 0, 1), (2, 1, 1), (2, 0, 2))
LP6_SSET = ((0, 1, 3), (0, 2, 2), (0, 3, 1))

# Final worked example over F_7: <(x-1)^6 (x-2)^3 (x-4)^3>, n = 21.
F7_EXAMPLE_A = (0, 0, 1, 0, 0, 0, 0, 0, 0, 6, 6, 3, 3, 3, 4, 4, 4, 5, 1, 1, 1)
F7_EXAMPLE_B = (0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 5, 4, 4, 4, 3, 3, 3, 6, 6)
F7_EXAMPLE_C = (0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 4, 1, 0, 1, 1, 0, 1, 4, 0, 0)
F7_EXAMPLE_DH = 7
F7_EXAMPLE_PW = 13
