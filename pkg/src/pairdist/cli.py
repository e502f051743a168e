"""Command-line front end: ``pairdist analyze | verify | oracle-check | scan``."""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import re
import sys
import time
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from . import __version__, classify as cls
from .code import build_code
from .errors import InvalidCodeError, InvariantBreach, OracleUnavailable, PairDistError
from .gf import PrimeField, order, root_of_unity
from .metric.castagnoli import castagnoli_dH
from .metric.oracle import DEFAULT_CAP, oracle_pair_distance
from .metric.search import min_pair_distance
from .poly import FactorSpec

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET, EXIT_BREACH = 0, 1, 2, 3, 4

FIELDS = ("p", "n", "factors", "k", "d_h", "d_p", "label", "witness_dp", "elapsed_ms", "engine_version")

_ROOT = re.compile(r"^(?:(?P<int>[+-]?\d+)|w(?:\^(?P<exp>\d+))?)$")


@dataclass(frozen=True)
class CodeDescriptor:
    p: int
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def canonical_key(self) -> str:
        body = ",".join(f"{r}:{m}" for r, m in self.factors)
        return f"p={self.p};n={self.n};f={body}"

    def build(self):
        field = PrimeField(self.p)
        return build_code(field, self.n, FactorSpec.of(field, self.factors))


def parse_factors(text: str, field: PrimeField, ell: int | None = None) -> tuple[tuple[int, int], ...]:
    """Parse ``root:mult,...``; a root is an integer, ``w`` or ``w^j`` (w of order ``ell``)."""
    p = field.p
    w = None
    out: dict[int, int] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        root_s, sep, mult_s = item.partition(":")
        m = _ROOT.match(root_s.strip())
        if not sep or m is None or not mult_s.strip().isdigit():
            raise InvalidCodeError(f"malformed factor {item!r}; expected <root>:<mult>")
        if m.group("int") is not None:
            root = int(m.group("int")) % p
        else:
            if ell is None:
                raise InvalidCodeError("factor uses w but --ell was not given")
            if w is None:
                w = root_of_unity(field, ell).value
            root = pow(w, int(m.group("exp") or 1), p)
        if root == 0:
            raise InvalidCodeError(f"root {root_s!r} is zero in GF({p})")
        if root in out:
            raise InvalidCodeError(f"root {root} appears twice")
        out[root] = int(mult_s)
    if not out:
        raise InvalidCodeError("no factors given")
    return tuple(sorted((r, m) for r, m in out.items() if m))


def default_length(field: PrimeField, factors) -> int:
    L = 1
    for r, _ in factors:
        o = order(field(r))
        L = L * o // gcd(L, o)
    return L * field.p


@dataclass(frozen=True)
class ResultRecord:
    p: int
    n: int
    factors: tuple[tuple[int, int], ...]
    k: int
    d_h: int
    d_p: int
    label: str
    witness_dp: tuple[int, ...]
    elapsed_ms: int
    engine_version: str

    @property
    def descriptor(self) -> CodeDescriptor:
        return CodeDescriptor(self.p, self.n, self.factors)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "factors": [list(f) for f in self.factors],
            "k": self.k,
            "d_h": self.d_h,
            "d_p": self.d_p,
            "label": self.label,
            "witness_dp": list(self.witness_dp),
            "elapsed_ms": self.elapsed_ms,
            "engine_version": self.engine_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> ResultRecord:
        return cls(
            d["p"],
            d["n"],
            tuple(tuple(f) for f in d["factors"]),
            d["k"],
            d["d_h"],
            d["d_p"],
            d["label"],
            tuple(d["witness_dp"]),
            d["elapsed_ms"],
            d["engine_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> ResultRecord:
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> list:
        d = self.to_dict()
        return [json.dumps(d[k], separators=(",", ":")) if isinstance(d[k], list) else d[k] for k in FIELDS]

    def text(self) -> str:
        facs = " ".join(f"(x-{r})^{m}" for r, m in self.factors)
        return (
            f"p={self.p} n={self.n} g={facs} k={self.k} d_H={self.d_h} d_p={self.d_p} {self.label}"
            f" ({self.elapsed_ms} ms)"
        )


def compute_record(desc: CodeDescriptor, jobs: int = 1, max_pair_weight: int | None = None) -> ResultRecord:
    t0 = time.perf_counter()
    code = desc.build()
    rep = min_pair_distance(code, jobs=jobs, max_pair_weight=max_pair_weight)
    verdict = cls.classify(code.n, code.k, rep.dp)
    ms = int(round((time.perf_counter() - t0) * 1000))
    return ResultRecord(
        desc.p, desc.n, desc.factors, code.k, rep.dH, rep.dp, verdict.label,
        tuple(rep.dp_witness.vector(code.n)), ms, __version__,
    )


class Cache:
    """Append-only JSON-lines store keyed by canonical key and engine version."""

    def __init__(self, path: str | os.PathLike | None):
        self.path = Path(path) if path else None
        self._lines: dict[tuple[str, str], str] = {}
        if self.path is not None and self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                try:
                    rec = ResultRecord.from_json(line)
                except (ValueError, KeyError, TypeError):
                    continue
                self._lines.setdefault((rec.descriptor.canonical_key, rec.engine_version), line)

    def get(self, desc: CodeDescriptor) -> str | None:
        return self._lines.get((desc.canonical_key, __version__))

    def put(self, rec: ResultRecord) -> str:
        line = rec.to_json()
        key = (rec.descriptor.canonical_key, rec.engine_version)
        if self.path is not None and key not in self._lines:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as fh:
                fh.write(line + "\n")
        self._lines.setdefault(key, line)
        return self._lines[key]


def resolve(desc: CodeDescriptor, cache: Cache, jobs: int, max_pair_weight: int | None) -> ResultRecord:
    hit = cache.get(desc)
    if hit is not None:
        return ResultRecord.from_json(hit)
    return ResultRecord.from_json(cache.put(compute_record(desc, jobs, max_pair_weight)))


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self._header = False

    def record(self, rec: ResultRecord):
        if self.fmt == "json":
            print(rec.to_json(), file=self.out)
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if not self._header:
                w.writerow(FIELDS)
                self._header = True
            w.writerow(rec.csv_row())
            self.out.write(buf.getvalue())
        else:
            print(rec.text(), file=self.out)
        self.out.flush()


def _descriptor(args) -> CodeDescriptor:
    field = PrimeField(args.prime)
    facs = parse_factors(args.factors, field, args.ell)
    n = args.length if args.length is not None else default_length(field, facs)
    return CodeDescriptor(args.prime, n, facs)


# ----------------------------------------------------------------- commands


def cmd_analyze(args) -> int:
    desc = _descriptor(args)
    rec = resolve(desc, Cache(args.cache), args.jobs, args.max_pair_weight)
    Emitter(args.format).record(rec)
    if args.format == "text":
        for term in castagnoli_dH(desc.build()).table():
            print(f"  t={term['t']:<2} P_t={term['P_t']:<3} roots={term['roots']} d_H(reduced)={term['dH_reduced']}")
    return EXIT_OK


def _print_rows(rows, fmt: str):
    if fmt == "json":
        for r in rows:
            print(json.dumps({
                "id": r.construction_id, "p": r.p, "n": r.n, "factors": [list(f) for f in r.factors],
                "expected": _jsonable(r.expected), "computed": _jsonable(r.computed),
                "provenance": r.provenance, "passed": r.passed, "note": r.note,
            }, separators=(",", ":")))
    else:
        for r in rows:
            print(r.summary())


def _jsonable(d: dict) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}


def cmd_verify(args) -> int:
    p = args.prime
    if args.table == "table1":
        if args.ell is None:
            raise InvalidCodeError("verify table1 needs --ell")
        rows = cls.verify_table1(p, args.ell, args.jobs)
        checks = {}
    elif args.table == "tables3p":
        res = cls.scan_3p(p, args.max_deg, args.jobs, exhaustive=args.exhaustive)
        rows, checks = res.rows, res.checks
    elif args.table == "corollaries":
        rows = cls.verify_corollaries(p, args.t1, args.t2, args.jobs)
        checks = {}
    else:
        rows = cls.verify_witnesses(p)
        checks = {}
    _print_rows(rows, args.format)
    for name, (ok, detail) in checks.items():
        print(f"check ({name}): {'PASS' if ok else 'FAIL'}" + (f"  {'; '.join(detail)}" if detail else ""))
    failed = sum(not r.passed for r in rows) + sum(not ok for ok, _ in checks.values())
    print(f"summary: {len(rows)} rows, {sum(r.passed for r in rows)} passed, {failed} failures")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def _family(args) -> list[CodeDescriptor]:
    p = args.prime
    field = PrimeField(p)
    fam = args.family
    if fam == "3p":
        triples = list(cls.canonical_triples(p, args.max_deg))
        return [CodeDescriptor(p, 3 * p, tuple(sorted(cls.triple_factors(field, t)))) for t in triples]
    if args.ell is None:
        raise InvalidCodeError(f"family {fam} needs --ell")
    l = args.ell
    w = root_of_unity(field, l).value
    if fam == "lp":
        n = l * p
        roots = [1, w] + ([p - 1] if l % 2 == 0 and w != p - 1 else [])
    else:
        n = 2 * l * p
        roots = [1, p - 1] + ([w] if w not in (1, p - 1) else [])
    out = []
    for exps in itertools.product(range(p), repeat=len(roots)):
        if 1 <= sum(exps) <= args.max_deg and sum(exps) < n:
            facs = tuple(sorted((r, m) for r, m in zip(roots, exps) if m))
            out.append(CodeDescriptor(p, n, facs))
    return out


def cmd_scan(args) -> int:
    descs = _family(args)
    cache = Cache(args.cache)
    em = Emitter(args.format)
    counts = {cls.MDS: 0, cls.AMDS: 0, cls.NEITHER: 0}
    status = EXIT_OK
    for desc in descs:
        try:
            rec = resolve(desc, cache, args.jobs, args.max_pair_weight)
        except InvariantBreach:
            raise
        except PairDistError as exc:
            print(f"skipped {desc.canonical_key}: {exc}", file=sys.stderr)
            status = max(status, exc.exit_code)
            continue
        counts[rec.label] += 1
        em.record(rec)
    if descs:
        print(f"summary: {len(descs)} codes, MDS={counts[cls.MDS]}, AMDS={counts[cls.AMDS]}", file=sys.stderr)
    return status


def cmd_oracle_check(args) -> int:
    if args.family:
        descs = _family(args)
    else:
        descs = [_descriptor(args)]
    mismatches, unavailable = 0, 0
    for desc in descs:
        code = desc.build()
        try:
            rep = min_pair_distance(code, jobs=args.jobs)
            want = oracle_pair_distance(code, args.cap)
        except OracleUnavailable as exc:
            unavailable += 1
            print(f"UNAVAILABLE {desc.canonical_key}: {exc}")
            continue
        ok = rep.dp == want
        mismatches += not ok
        print(f"{'EQUAL' if ok else 'MISMATCH'} {desc.canonical_key}: engine d_p={rep.dp}, oracle d_p={want}")
    if mismatches:
        return EXIT_VERIFY
    if unavailable:
        print("oracle unavailable for at least one instance", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, required=True)
    common.add_argument("--ell", type=int, default=None, help="order of w in factor expressions and families")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--cache", default=os.environ.get("PAIRDIST_CACHE"), help="JSON-lines result cache")
    common.add_argument("--max-pair-weight", type=int, default=None, help="give up if d_p would exceed this")

    ap = argparse.ArgumentParser(prog="pairdist", description="Exact symbol-pair distances of repeated-root cyclic codes.")
    ap.add_argument("--version", action="version", version=f"pairdist {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="distances and classification of one code")
    a.add_argument("--length", type=int, default=None)
    a.add_argument("--factors", required=True, help='e.g. "1:4,w:2,w^2:1" or "-1:1"')
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="check a published family of constructions")
    v.add_argument("table", choices=("table1", "tables3p", "corollaries", "witnesses"))
    v.add_argument("--max-deg", type=int, default=10)
    v.add_argument("--exhaustive", action="store_true", help="also run every exponent permutation")
    v.add_argument("--t1", type=int, default=2)
    v.add_argument("--t2", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle-check", parents=[common], help="compare the search against brute force")
    o.add_argument("--length", type=int, default=None)
    o.add_argument("--factors", default=None)
    o.add_argument("--family", choices=("3p", "lp", "2lp"), default=None)
    o.add_argument("--max-deg", type=int, default=10)
    o.add_argument("--cap", type=int, default=DEFAULT_CAP)
    o.set_defaults(func=cmd_oracle_check)

    s = sub.add_parser("scan", parents=[common], help="stream records for a family of codes")
    s.add_argument("--family", choices=("3p", "lp", "2lp"), required=True)
    s.add_argument("--max-deg", type=int, default=10)
    s.set_defaults(func=cmd_scan)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "oracle-check" and not args.family and not args.factors:
        ap.error("oracle-check needs --factors or --family")
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except InvariantBreach as exc:
        print(f"internal invariant breached: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except PairDistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
