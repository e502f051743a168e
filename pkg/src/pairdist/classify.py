"""Singleton-type classification and verification of named constructions.

Every construction checked here is a row: parameters, an expected outcome
with a provenance string, and the computed distances. A row passes iff every
expected value matches exactly.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import gcd

from . import tables
from .code import CyclicCode, build_code, contains_vector
from .errors import InvalidCodeError, InvalidFieldError, InvariantBreach, PairDistError
from .gf import FieldElement, PrimeField, order, primitive_root, root_of_unity
from .metric.castagnoli import castagnoli_dH
from .metric.pair import pair_weight
from .metric.search import DistanceReport, min_pair_distance
from .poly import FactorSpec, Polynomial

MDS, AMDS, NEITHER = "MDS", "AMDS", "neither"


@dataclass(frozen=True)
class ClassVerdict:
    n: int
    k: int
    dp: int
    defect: int
    label: str


def classify(n: int, k: int, dp: int) -> ClassVerdict:
    """Label a code against the pair Singleton bound |C| <= p^(n - dp + 2)."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if not 2 <= dp <= n:
        raise ValueError(f"need 2 <= dp <= n, got dp={dp}")
    defect = (n - k + 2) - dp
    if defect < 0:
        raise InvariantBreach(f"dp={dp} exceeds the Singleton-type bound n-k+2={n - k + 2}")
    label = MDS if defect == 0 else AMDS if defect == 1 else NEITHER
    return ClassVerdict(n, k, dp, defect, label)


@dataclass
class VerificationRow:
    construction_id: str
    p: int
    n: int
    factors: tuple[tuple[int, int], ...]
    expected: dict
    provenance: str
    computed: dict = dc_field(default_factory=dict)
    report: DistanceReport | None = None
    passed: bool = False
    note: str = ""

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        want = ", ".join(f"{k}={v}" for k, v in self.expected.items())
        got = ", ".join(f"{k}={v}" for k, v in self.computed.items())
        tail = f"  [{self.note}]" if self.note else ""
        return f"{status} {self.construction_id}: expected {want or '-'}; got {got or '-'}{tail}"


@dataclass(frozen=True)
class _Task:
    construction_id: str
    p: int
    n: int
    factors: tuple[tuple[int, int], ...]
    expected: dict
    provenance: str
    hamming_only: bool = False


def _matches(expected: dict, computed: dict) -> tuple[bool, list[str]]:
    bad = []
    for key, want in expected.items():
        if key == "label_not":
            if computed.get("label") in want:
                bad.append(f"label {computed.get('label')} is excluded")
        elif computed.get(key) != want:
            bad.append(f"{key}: expected {want}, got {computed.get(key)}")
    return not bad, bad


def _run_task(task: _Task) -> VerificationRow:
    row = VerificationRow(task.construction_id, task.p, task.n, task.factors, dict(task.expected), task.provenance)
    try:
        field = PrimeField(task.p)
        code = build_code(field, task.n, FactorSpec.of(field, task.factors))
        row.computed["k"] = code.k
        row.computed["redundancy"] = code.redundancy
        if task.hamming_only:
            row.computed["dH"] = castagnoli_dH(code).dH
        else:
            rep = min_pair_distance(code)
            row.report = rep
            row.computed["dH"] = rep.dH
            row.computed["dp"] = rep.dp
            row.computed["label"] = classify(code.n, code.k, rep.dp).label
    except PairDistError as exc:
        row.note = f"{type(exc).__name__}: {exc}"
        row.passed = False
        return row
    ok, bad = _matches(task.expected, row.computed)
    row.passed = ok
    if bad:
        row.note = "; ".join(bad)
    return row


def _run_tasks(tasks: list[_Task], jobs: int = 1, sort: bool = True) -> list[VerificationRow]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_task, tasks))
    else:
        rows = [_run_task(t) for t in tasks]
    if sort:
        rows.sort(key=lambda r: r.construction_id)
    return rows


def _cube_roots(field: PrimeField) -> tuple[int, int, int]:
    if (field.p - 1) % 3:
        raise InvalidFieldError(f"3 does not divide p - 1 = {field.p - 1}")
    w = root_of_unity(field, 3).value
    return 1, w, w * w % field.p


def triple_factors(field: PrimeField, triple) -> tuple[tuple[int, int], ...]:
    """Exponents of (x - 1), (x - w), (x - w^2) as (root, mult) pairs."""
    roots = _cube_roots(field)
    return tuple((r, m) for r, m in zip(roots, triple) if m)


def triple_code(p: int, triple) -> CyclicCode:
    field = PrimeField(p)
    return build_code(field, 3 * p, FactorSpec.of(field, triple_factors(field, triple)))


# ------------------------------------------------------ lp, d_p = 6 rows


def table1_tasks(p: int, l: int) -> list[_Task]:
    field = PrimeField(p)
    if l < 3:
        raise InvalidCodeError("l must be at least 3 so that w differs from 1 and -1")
    if (p - 1) % l:
        raise InvalidFieldError(f"l = {l} does not divide p - 1 = {p - 1}")
    w = root_of_unity(field, l).value
    minus1 = p - 1
    n_lp = l * p
    n_pm = l * p if l % 2 == 0 else 2 * l * p  # x + 1 needs an even L
    mds6 = {"dp": 6, "label": MDS}
    tasks = [
        _Task(f"lp6/p={p},l={l}/(4,0,0)", p, p, ((1, 4),), mds6, "d_p = 6 row (4,0,0), n = p"),
        _Task(f"lp6/p={p},l={l}/(3,0,1)", p, n_lp, ((1, 3), (w, 1)), mds6, "d_p = 6 row (3,0,1), n = lp"),
        _Task(
            f"lp6/p={p},l={l}/(2,1,1)",
            p,
            n_pm,
            ((1, 2), (minus1, 1), (w, 1)),
            mds6,
            "d_p = 6 row (2,1,1), n = lp (l even) or 2lp (l odd)",
        ),
        _Task(f"lp6/p={p},l={l}/(2,0,2)", p, n_lp, ((1, 2), (w, 2)), mds6, "d_p = 6 row (2,0,2), n = lp"),
    ]
    sset_ok = l % 2 == 1 or l % 4 == 0
    for r1, r2, r3 in tables.LP6_SSET:
        facs = tuple((r, m) for r, m in ((1, r1), (minus1, r2), (w, r3)) if m)
        cid = f"lp6/p={p},l={l}/S({r1},{r2},{r3})"
        if sset_ok:
            tasks.append(_Task(cid, p, n_pm, facs, mds6, "S-set row, l odd or l = 0 mod 4"))
        else:
            tasks.append(_Task(cid, p, n_pm, facs, {"dH": 2}, "S-set row at l = 2 mod 4: d_H = 2", hamming_only=True))
    return tasks


def verify_table1(p: int, l: int, jobs: int = 1) -> list[VerificationRow]:
    return _run_tasks(table1_tasks(p, l), jobs)


# ------------------------------------------------------------ corollaries


def corollary_task(
    p: int,
    t1: int,
    t2: int,
    r1: int = 0,
    r2: int = 0,
    form: str = "a",
    primitive: int | None = None,
    expected: dict | None = None,
) -> _Task:
    field = PrimeField(p)
    if t1 == t2:
        raise InvalidCodeError("t1 and t2 must differ")
    w0 = field(primitive) if primitive is not None else primitive_root(field)
    if primitive is not None and order(w0) != p - 1:
        raise InvalidFieldError(f"{primitive} is not a primitive element of GF({p})")
    a, b = (w0**t1).value, (w0**t2).value
    m1, m2 = order(field(a)), order(field(b))
    L = m1 * m2 // gcd(m1, m2)
    if form == "a":
        if not 3 <= r1 + r2 <= 4:
            raise InvalidCodeError("need 3 <= r1 + r2 <= 4")
        facs = tuple((r, m) for r, m in ((a, r1), (b, r2)) if m)
        tag = f"Ca({r1},{r2})"
    elif form == "b":
        facs = ((1, 2), (a, 1), (b, 1))
        tag = "Cb"
    else:
        raise ValueError("form must be 'a' or 'b'")
    coprime = gcd(t1 - t2, L) == 1
    if expected is None:
        if not coprime:
            expected = {}
        elif form == "b":
            expected = {"dp": 6, "label": MDS}
        else:
            expected = {"dp": 5 if r1 + r2 == 3 else 6, "label": MDS}
    cid = f"corollary/p={p},t=({t1},{t2}),w0={w0.value}/{tag}"
    prov = "C_a, gcd(t1 - t2, l) = 1" if form == "a" else "C_b = (x-1)^2 (x-a)(x-b)"
    if not coprime and not expected:
        prov = "gcd(t1 - t2, l) > 1: no claim, values reported"
    return _Task(cid, p, L * p, facs, expected, prov)


def verify_corollaries_Ca_Cb(
    p: int, t1: int, t2: int, r1: int = 0, r2: int = 0, form: str = "a", primitive: int | None = None
) -> VerificationRow:
    return _run_task(corollary_task(p, t1, t2, r1, r2, form, primitive))


def corollary_suite_tasks(p: int = 7, t1: int = 2, t2: int = 1) -> list[_Task]:
    tasks = [corollary_task(p, t1, t2, r1, r2) for r1, r2 in ((2, 1), (1, 2), (3, 1), (1, 3), (2, 2))]
    tasks.append(corollary_task(p, t1, t2, form="b"))
    return tasks


def counterexample_tasks() -> list[_Task]:
    """GF(5) with w0 = 3, roots 3^3 = 2 and 3 (both of order 4, n = 20)."""
    want = {"dH": 2, "label_not": (MDS,)}
    return [corollary_task(5, 3, 1, r1, r2, primitive=3, expected=want) for r1, r2 in ((2, 1), (1, 2), (2, 2))]


def verify_corollaries(
    p: int = 7, t1: int = 2, t2: int = 1, jobs: int = 1, counterexample: bool = True
) -> list[VerificationRow]:
    tasks = corollary_suite_tasks(p, t1, t2)
    if counterexample:
        tasks += counterexample_tasks()
    return _run_tasks(tasks, jobs)


# ---------------------------------------------------------------- 3p scan


@dataclass
class ScanResult:
    p: int
    max_deg: int
    rows: list[VerificationRow]
    checks: dict[str, tuple[bool, list[str]]]

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def by_triple(self) -> dict[tuple[int, int, int], VerificationRow]:
        return {_triple_of(r): r for r in self.rows}


def _triple_of(row: VerificationRow) -> tuple[int, int, int]:
    return tuple(int(x) for x in row.construction_id.rsplit("(", 1)[1].rstrip(")").split(","))


def canonical_triples(p: int, max_deg: int, r1_max: int | None = None):
    top = p - 1 if r1_max is None else min(r1_max, p - 1)
    for r1 in range(top + 1):
        for r2 in range(r1 + 1):
            for r3 in range(r2 + 1):
                if 1 <= r1 + r2 + r3 <= max_deg:
                    yield (r1, r2, r3)


def _table_index():
    out = {}
    for row in tables.MDS_3P + tables.AMDS_3P:
        out[row.canonical] = row
    return out


def scan_tasks(p: int, max_deg: int = 10, exhaustive: bool = False, r1_max: int | None = None) -> list[_Task]:
    field = PrimeField(p)
    _cube_roots(field)
    if max_deg > 10:
        raise ValueError("the 3p scan is defined for generator degree at most 10")
    index = _table_index()
    tasks = []
    seen = set()
    for trip in canonical_triples(p, max_deg, r1_max):
        perms = sorted(set(itertools.permutations(trip))) if exhaustive else [trip]
        for t in perms:
            if t in seen:
                continue
            seen.add(t)
            ref = index.get(trip)
            if ref is not None:
                exp = {"redundancy": ref.redundancy, "dp": ref.dp, "label": ref.label}
                prov = f"{ref.table} row {ref.triple}: {ref.source}"
            else:
                exp = {"label_not": (MDS, AMDS)}
                prov = "outside both tables"
            tag = "scan3p" if t == trip else "scan3p-perm"
            tasks.append(_Task(f"{tag}/p={p}/{t}", p, 3 * p, triple_factors(field, t), exp, prov))
    return tasks


def _scan_checks(p: int, rows: list[VerificationRow], max_deg: int) -> dict[str, tuple[bool, list[str]]]:
    got = {}
    for r in rows:
        if r.construction_id.startswith("scan3p/"):
            got[_triple_of(r)] = r

    def check_table(table):
        bad = []
        for ref in table:
            if sum(ref.triple) > max_deg:
                continue
            r = got.get(ref.canonical)
            if r is None:
                bad.append(f"{ref.triple}: not scanned")
                continue
            c = r.computed
            if (c.get("redundancy"), c.get("dp"), c.get("label")) != (ref.redundancy, ref.dp, ref.label):
                bad.append(
                    f"{ref.triple}: expected ({ref.redundancy},{ref.dp}) {ref.label}, "
                    f"got ({c.get('redundancy')},{c.get('dp')}) {c.get('label', r.note)}"
                )
        return not bad, bad

    mds_keys = {row.canonical for row in tables.MDS_3P}
    amds_keys = {row.canonical for row in tables.AMDS_3P}
    extra_mds = [
        f"{t}: MDS dp={r.computed['dp']}"
        for t, r in sorted(got.items())
        if r.computed.get("label") == MDS and r.computed["dp"] <= 12 and t not in mds_keys
    ]
    extra_amds = [
        f"{t}: AMDS dp={r.computed['dp']}"
        for t, r in sorted(got.items())
        if r.computed.get("label") == AMDS and r.computed["dp"] < 12 and t not in amds_keys
    ]
    eleven = [
        f"{t}: {r.computed['label']} dp=11"
        for t, r in sorted(got.items())
        if r.computed.get("dp") == 11 and r.computed.get("label") in (MDS, AMDS)
    ]
    errors = [f"{t}: {r.note}" for t, r in sorted(got.items()) if "dp" not in r.computed]
    checks = {
        "a": check_table(tables.MDS_3P),
        "b": check_table(tables.AMDS_3P),
        "c": (not extra_mds, extra_mds),
        "d": (not extra_amds, extra_amds),
        "e": (not eleven, eleven),
    }
    if errors:
        checks["engine"] = (False, errors)
    perm_bad = []
    for r in rows:
        if r.construction_id.startswith("scan3p-perm/"):
            t = _triple_of(r)
            base = got.get(tuple(sorted(t, reverse=True)))
            if base is None or (r.computed.get("dH"), r.computed.get("dp")) != (
                base.computed.get("dH"),
                base.computed.get("dp"),
            ):
                perm_bad.append(f"{t}: differs from its canonical ordering")
    if any(r.construction_id.startswith("scan3p-perm/") for r in rows):
        checks["permutations"] = (not perm_bad, perm_bad)
    return checks


def scan_3p(
    p: int, max_deg: int = 10, jobs: int = 1, exhaustive: bool = False, r1_max: int | None = None
) -> ScanResult:
    tasks = scan_tasks(p, max_deg, exhaustive, r1_max)
    rows = _run_tasks(tasks, jobs, sort=False)
    rows.sort(key=lambda r: (r.construction_id.split("/")[0], _triple_of(r)))
    return ScanResult(p, max_deg, rows, _scan_checks(p, rows, max_deg))


def verify_tables_3p(p: int, jobs: int = 1) -> list[VerificationRow]:
    """Only the rows of the two 3p tables (max generator degree 10)."""
    field = PrimeField(p)
    tasks = []
    for ref in tables.MDS_3P + tables.AMDS_3P:
        exp = {"redundancy": ref.redundancy, "dp": ref.dp, "label": ref.label}
        tasks.append(
            _Task(f"{ref.table}/p={p}/{ref.triple}", p, 3 * p, triple_factors(field, ref.triple), exp, ref.source)
        )
    return _run_tasks(tasks, jobs)


# ------------------------------------------------------------ invariances


def permutation_reports(p: int, triple) -> dict[tuple[int, int, int], tuple[int, int]]:
    out = {}
    for t in sorted(set(itertools.permutations(triple))):
        rep = min_pair_distance(triple_code(p, t))
        out[t] = (rep.dH, rep.dp)
    return out


def check_permutation_invariance(p: int, triple) -> bool:
    return len(set(permutation_reports(p, triple).values())) == 1


def rotate_roots(spec: FactorSpec, alpha: FieldElement | int) -> FactorSpec:
    """Multiply every root by alpha. For alpha^L = 1 the map c(x) -> c(x / alpha) is a monomial equivalence."""
    field = spec.field
    a = alpha.value if isinstance(alpha, FieldElement) else alpha % field.p
    return FactorSpec.of(field, [(r.value * a % field.p, m) for r, m in spec.factors])


# -------------------------------------------------------------- witnesses


def _poly(field: PrimeField, terms: dict[int, int]) -> Polynomial:
    return Polynomial.from_support(field, terms)


def _witness_row(cid, field, n, facs, word, want_pw, prov, extra=None) -> VerificationRow:
    code = build_code(field, n, FactorSpec.of(field, facs))
    vec = word.vector(n) if isinstance(word, Polynomial) else list(word)
    member = contains_vector(code, vec)
    pw = pair_weight(vec)
    computed = {"member": member, "pair_weight": pw}
    expected = {"member": True, "pair_weight": want_pw}
    if extra:
        expected.update(extra[0])
        computed.update(extra[1])
    ok, bad = _matches(expected, computed)
    return VerificationRow(cid, field.p, n, tuple(facs), expected, prov, computed, None, ok, "; ".join(bad))


def verify_witnesses(p: int) -> list[VerificationRow]:
    field = PrimeField(p)
    _, w, w2 = _cube_roots(field)
    n = 3 * p
    rows = []
    x = Polynomial.monomial
    c1 = (x(field, p) - x(field, 0)) * (x(field, p - 1) - x(field, 0))
    rows.append(
        _witness_row(
            f"witness/p={p}/(x^p-1)(x^(p-1)-1) in (4,1,1)",
            field, n, ((1, 4), (w, 1), (w2, 1)), c1, 7,
            "(x^p - 1)(x^(p-1) - 1) realizes pair weight 7",
        )
    )
    c2 = _poly(field, {0: 1, 1: -1, p: -1, 2 * p + 1: 1})
    for r1 in range(3, p):
        rows.append(
            _witness_row(
                f"witness/p={p}/1-x-x^p+x^(2p+1) in ({r1},1,1)",
                field, n, ((1, r1), (w, 1), (w2, 1)), c2, 7,
                "1 - x - x^p + x^(2p+1), pair weight 7",
            )
        )
    lin = lambda a: Polynomial(field, [-a, 1])  # noqa: E731
    c3 = lin(1) ** p * lin(w) ** p * lin(w2)
    for r1 in range(4, p):
        for r2 in range(2, r1 + 1):
            rows.append(
                _witness_row(
                    f"witness/p={p}/(x-1)^p(x-w)^p(x-w^2) in ({r1},{r2},1)",
                    field, n, ((1, r1), (w, r2), (w2, 1)), c3, 9,
                    "(x-1)^p (x-w)^p (x-w^2), pair weight 9",
                )
            )
    c4 = _poly(field, {0: 1, 2: -1, p + 1: 2, p + 2: 1, 2 * p: -1, 2 * p + 1: -2})
    for r1 in range(4, p):
        rows.append(
            _witness_row(
                f"witness/p={p}/1-x^2+2x^(p+1)+x^(p+2)-x^(2p)-2x^(2p+1) in ({r1},2,2)",
                field, n, ((1, r1), (w, 2), (w2, 2)), c4, 10,
                "1 - x^2 + 2x^(p+1) + x^(p+2) - x^(2p) - 2x^(2p+1), pair weight 10",
            )
        )
    if p == 7:
        rows.extend(_f7_example_rows(field))
    return rows


def _f7_example_rows(field: PrimeField) -> list[VerificationRow]:
    facs = ((1, 6), (2, 3), (4, 3))
    code = build_code(field, 21, FactorSpec.of(field, facs))
    a, b = list(tables.F7_EXAMPLE_A), list(tables.F7_EXAMPLE_B)
    c = [(u + v) % 7 for u, v in zip(a, b)]
    rows = [
        _witness_row("witness/p=7/example a", field, 21, facs, a, pair_weight(a), "vector a lies in the code"),
        _witness_row("witness/p=7/example b", field, 21, facs, b, pair_weight(b), "vector b lies in the code"),
        _witness_row(
            "witness/p=7/example a+b",
            field, 21, facs, c, tables.F7_EXAMPLE_PW,
            "a + b has pair weight 13, so the code is not MDS",
            ({"equals_stated_c": True}, {"equals_stated_c": tuple(c) == tables.F7_EXAMPLE_C}),
        ),
    ]
    dH = castagnoli_dH(code).dH
    want = {"dH": tables.F7_EXAMPLE_DH}
    got = {"dH": dH}
    rows.append(
        VerificationRow(
            "witness/p=7/example d_H", 7, 21, facs, want, "minimum Hamming distance 7", got, None, dH == want["dH"]
        )
    )
    return rows
