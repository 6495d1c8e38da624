"""Command-line entry point: analyze, scan, polygon and verify-paper."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Optional

from .analyzer import (
    UNKNOWN,
    YES,
    ConsistencyError,
    InvalidField,
    TrinomialField,
    analyze,
    analyze_prime,
)
from .arith import IntPoly, is_prime
from .finitefield import factor_mod_p, poly_ring, prime_field
from .intfactor import Budget
from .ore import analyze_phi
from .order2 import AugmentedValuation, KeyPoly, omega_eval, order2_polygon, parse_poly
from .polygon import render_polygon

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2

SCHEMA_VERSION = "1"
CSV_COLUMNS = ["a", "b", "m", "p", "divides_iK", "nu_iK", "verdict", "method"]


class UsageError(ValueError):
    """Bad command-line input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# Serializable view of an AnalysisReport
# ---------------------------------------------------------------------------

def _s(v):
    return None if v is None else str(v)


def _i(v):
    return None if v is None else int(v)


@dataclass
class PrimeRecord:
    p: int
    method: str
    splitting: list  # [[e, f], ...]
    unresolved: list  # [[e_unit, f_unit, degree], ...]
    nu_index_alpha: Optional[int]
    divides_iK: str
    nu_iK: Optional[int]
    witness_f: Optional[int]
    theorems: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "p": _s(self.p),
            "method": self.method,
            "splitting": [[_s(e), _s(f)] for e, f in self.splitting],
            "unresolved": [[_s(x) for x in blk] for blk in self.unresolved],
            "nu_index_alpha": _s(self.nu_index_alpha),
            "divides_iK": self.divides_iK,
            "nu_iK": _s(self.nu_iK),
            "witness_f": _s(self.witness_f),
            "theorems": list(self.theorems),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PrimeRecord":
        return cls(
            p=int(d["p"]),
            method=d["method"],
            splitting=[[int(e), int(f)] for e, f in d["splitting"]],
            unresolved=[[int(x) for x in blk] for blk in d.get("unresolved", [])],
            nu_index_alpha=_i(d["nu_index_alpha"]),
            divides_iK=d["divides_iK"],
            nu_iK=_i(d["nu_iK"]),
            witness_f=_i(d["witness_f"]),
            theorems=list(d.get("theorems", [])),
        )


@dataclass
class ReportRecord:
    n: int
    m: int
    a: int
    b: int
    delta_valuations: dict  # p -> nu_p(Delta)
    primes: list  # PrimeRecord
    verdict: str
    reason: str = ""
    unresolved_cofactors: list = field(default_factory=list)

    @classmethod
    def from_report(cls, report) -> "ReportRecord":
        fld = report.field
        primes = []
        for r in report.primes:
            sh = r.analysis.shape
            primes.append(PrimeRecord(
                p=r.p,
                method=r.analysis.method,
                splitting=[[e, f] for e, f in sh.branches],
                unresolved=[[blk.e_unit, blk.f_unit, blk.degree] for blk in sh.unresolved],
                nu_index_alpha=r.analysis.nu_index_alpha,
                divides_iK=r.verdict.divides_iK,
                nu_iK=r.verdict.nu_iK,
                witness_f=r.verdict.witness_f,
                theorems=list(r.theorem_notes),
            ))
        return cls(fld.n, fld.m, fld.a, fld.b, dict(report.delta_valuations), primes,
                   report.monogenity, report.reason, list(report.unresolved_cofactors))

    def to_dict(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "field": {"n": _s(self.n), "m": _s(self.m), "a": _s(self.a), "b": _s(self.b)},
            "delta_valuations": {_s(p): _s(v) for p, v in sorted(self.delta_valuations.items())},
            "primes": [pr.to_dict() for pr in self.primes],
            "verdict": self.verdict,
            "reason": self.reason,
            "unresolved_cofactors": [_s(c) for c in self.unresolved_cofactors],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportRecord":
        if d.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('version')!r}")
        f = d["field"]
        return cls(
            n=int(f["n"]), m=int(f["m"]), a=int(f["a"]), b=int(f["b"]),
            delta_valuations={int(p): int(v) for p, v in d["delta_valuations"].items()},
            primes=[PrimeRecord.from_dict(x) for x in d["primes"]],
            verdict=d["verdict"],
            reason=d.get("reason", ""),
            unresolved_cofactors=[int(c) for c in d.get("unresolved_cofactors", [])],
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportRecord":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _field_from_args(args) -> TrinomialField:
    n = args.n
    m = args.m
    if args.twok is not None:
        if args.twok % 2:
            raise UsageError("--twok must be even")
        m = args.twok
    if m is None:
        raise UsageError("give -m (or --twok)")
    if not 0 < m < n:
        raise UsageError(f"need 0 < m < n, got m={m}, n={n}")
    if args.b == 0:
        raise UsageError("b must be nonzero")
    return TrinomialField(args.a, args.b, m, n)


def summary_lines(record: ReportRecord) -> list[str]:
    divisors = [pr for pr in record.primes if pr.divides_iK == YES]
    if divisors:
        lines = [", ".join(str(pr.p) for pr in divisors) + " | i(K): NOT monogenic"]
        if all(pr.nu_iK is not None for pr in divisors):
            powers = " and ".join(str(pr.p ** pr.nu_iK) for pr in divisors)
            nus = ", ".join(f"ν_{pr.p}={pr.nu_iK}" for pr in divisors)
            lines.append(f"i(K) divisible by {powers}; {nus}; NOT monogenic")
        return lines
    if record.verdict == "MonogenicViaAlpha":
        return ["Z[alpha] is the ring of integers: monogenic"]
    return [f"verdict Unknown: {record.reason}"]


def format_report(record: ReportRecord) -> str:
    F = IntPoly.trinomial(record.n, record.m, record.a, record.b)
    out = [f"F = {F}   (n={record.n}, m={record.m})"]
    for pr in record.primes:
        parts = " ".join(f"(e={e},f={f})" for e, f in pr.splitting)
        parts += "".join(f" [?: e%{u}=0, f%{v}=0, sum ef={d}]" for u, v, d in pr.unresolved)
        nu_alpha = "?" if pr.nu_index_alpha is None else pr.nu_index_alpha
        line = (f"p={pr.p}: nu_p(Delta)={record.delta_valuations[pr.p]}, method={pr.method}, "
                f"nu_p(Z_K:Z[alpha])={nu_alpha}, splitting {parts}")
        if pr.divides_iK == YES:
            line += f"; {pr.p} | i(K)" + (f" with nu={pr.nu_iK}" if pr.nu_iK is not None else "")
        elif pr.divides_iK == UNKNOWN:
            line += f"; {pr.p} | i(K) undecided"
        if pr.theorems:
            line += f"  [{', '.join(pr.theorems)}]"
        out.append(line)
    if record.unresolved_cofactors:
        out.append("unfactored cofactors of Delta: " + ", ".join(map(str, record.unresolved_cofactors)))
    out.append(f"verdict: {record.verdict}" + (f" ({record.reason})" if record.reason else ""))
    out.extend(summary_lines(record))
    return "\n".join(out)


def cmd_analyze(args) -> int:
    fld = _field_from_args(args)
    report = analyze(fld, Budget.named(args.budget))
    record = ReportRecord.from_report(report)
    print(record.to_json() if args.json else format_report(record))
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def parse_range(text: str) -> list[int]:
    """'A:B' (inclusive), 'A' or 'A,B,C'."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}") from exc


def scan_fields(a_values, b_values, m_values, n: int = 12):
    for m in m_values:
        for a in a_values:
            for b in b_values:
                if b != 0:
                    yield (a, b, m, n)


def scan_one(job) -> Optional[dict]:
    """ScanRow for one field, or None when F is reducible or not separable."""
    a, b, m, n, budget = job
    try:
        report = analyze(TrinomialField(a, b, m, n), budget)
    except InvalidField:
        return None
    rec = ReportRecord.from_report(report)
    return {
        "a": a, "b": b, "m": m,
        "primes": [{"p": pr.p, "divides_iK": pr.divides_iK, "nu_iK": pr.nu_iK, "method": pr.method}
                   for pr in rec.primes],
        "verdict": rec.verdict,
        "notes": rec.reason,
    }


def run_scan(fields, budget: Budget, jobs: int = 1) -> list[dict]:
    work = [(a, b, m, n, budget) for a, b, m, n in fields]
    if jobs > 1 and len(work) > 1:
        with Pool(jobs) as pool:
            # imap keeps submission order, so the merge is deterministic
            rows = list(pool.imap(scan_one, work, chunksize=max(1, len(work) // (8 * jobs))))
    else:
        rows = [scan_one(w) for w in work]
    return [r for r in rows if r is not None]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        if not r["primes"]:
            w.writerow([r["a"], r["b"], r["m"], "", "", "", r["verdict"], ""])
        for pr in r["primes"]:
            nu = "" if pr["nu_iK"] is None else pr["nu_iK"]
            w.writerow([r["a"], r["b"], r["m"], pr["p"], pr["divides_iK"], nu, r["verdict"], pr["method"]])
    return buf.getvalue()


def rows_to_jsonl(rows) -> str:
    out = []
    for r in rows:
        d = {
            "a": str(r["a"]), "b": str(r["b"]), "m": str(r["m"]),
            "primes": [{"p": str(pr["p"]), "divides_iK": pr["divides_iK"], "nu_iK": _s(pr["nu_iK"]),
                        "method": pr["method"]} for pr in r["primes"]],
            "verdict": r["verdict"], "notes": r["notes"],
        }
        out.append(json.dumps(d, sort_keys=True) + "\n")
    return "".join(out)


def histogram(rows) -> str:
    counts = Counter(r["verdict"] for r in rows)
    return "\n".join(f"{v}: {counts[v]}" for v in sorted(counts))


def cmd_scan(args) -> int:
    a_values, b_values = parse_range(args.a), parse_range(args.b)
    m_values = parse_range(args.m)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if any(not 0 < m < args.n for m in m_values):
        raise UsageError("every m must satisfy 0 < m < n")
    fields = list(scan_fields(a_values, b_values, m_values, args.n))
    if not fields:
        return EXIT_OK
    rows = run_scan(fields, Budget.named(args.budget), args.jobs)
    text = rows_to_jsonl(rows) if args.format == "json" else rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not args.quiet:
        print(histogram(rows), file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# polygon
# ---------------------------------------------------------------------------

def cmd_polygon(args) -> int:
    if not is_prime(args.p):
        raise UsageError(f"{args.p} is not prime")
    try:
        phi = parse_poly(args.phi)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if phi.degree < 1 or not phi.is_monic():
        raise UsageError("phi must be monic of positive degree")
    fac = factor_mod_p(phi, args.p)
    if len(fac) != 1 or fac[0][1] != 1:
        raise UsageError(f"{phi} is reducible mod {args.p}")
    F = IntPoly.trinomial(args.n, args.m, args.a, args.b)
    mult = 0
    R = poly_ring(prime_field(args.p))
    for g, k in factor_mod_p(F, args.p):
        if tuple(g) == tuple(R.from_ints(phi.coeffs)):
            mult = k
    try:
        rep = analyze_phi(F, phi, args.p, mult)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        d = {
            "F": str(F), "p": str(args.p), "phi": str(phi), "multiplicity": str(mult),
            "vertices": [[str(x), str(y)] for x, y in rep.polygon.vertices],
            "sides": [{"from": [str(c) for c in s.side.start], "to": [str(c) for c in s.side.end],
                       "slope": str(s.side.slope), "degree": str(s.side.degree),
                       "residual": s.residual_str(), "regular": s.squarefree} for s in rep.sides],
            "ind": str(rep.ind),
        }
        print(json.dumps(d, indent=2))
        return EXIT_OK
    print(f"F = {F}, p = {args.p}, phi = {phi} (multiplicity {mult} mod p)")
    print(render_polygon(rep.polygon))
    for s in rep.sides:
        tag = "regular" if s.squarefree else "not regular"
        print(f"residual on {s.side.start}->{s.side.end}: {s.residual_str()} ({tag})")
    print(f"ind_phi = {rep.ind}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-paper
# ---------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    expected: str
    computed: str
    ok: bool


def _fmt_shape(sh) -> str:
    return " ".join(f"({e},{f})" for e, f in sh)


def example_checks(only_p: Optional[int] = None) -> list[Check]:
    from . import fixtures

    out = []
    for ex in fixtures.EXAMPLES:
        if only_p is not None and only_p not in ex.divisors:
            continue
        for m in ex.ms:
            name = f"example a={ex.a} b={ex.b} m={m}"
            try:
                rep = analyze(TrinomialField(ex.a, ex.b, m))
            except (InvalidField, ConsistencyError) as exc:
                out.append(Check(name, ex.verdict, f"error: {exc}", False))
                continue
            ok = rep.monogenity == ex.verdict
            got = {}
            for p, nu in ex.divisors.items():
                pr = rep.prime(p)
                div = pr is not None and pr.verdict.divides_iK == YES
                got[p] = pr.verdict.nu_iK if div else "no"
                ok = ok and div and (nu is None or pr.verdict.nu_iK == nu)
            if ex.iK is not None:
                ok = ok and rep.iK == ex.iK
            exp = f"{ex.verdict} divisors {ex.divisors}" + (f" i(K)={ex.iK}" if ex.iK else "")
            comp = f"{rep.monogenity} divisors {got}" + (f" i(K)={rep.iK}" if ex.iK else "")
            out.append(Check(name, exp, comp, ok))
    return out


def shape_checks(only_p: Optional[int] = None) -> list[Check]:
    from . import fixtures

    out = []
    for fx in fixtures.shape_fixtures(only_p):
        F = IntPoly.trinomial(12, fx.m, fx.a, fx.b)
        pa = analyze_prime(F, fx.p)
        sh = pa.shape
        got = tuple(sh.branches)
        ok = (not sh.unresolved and got == tuple(fx.shape) and got in fx.expected
              and pa.nu_index_alpha == fx.nu_index)
        exp = " | ".join(_fmt_shape(alt) for alt in fx.expected) + f"; ind {fx.nu_index}"
        if not fx.verbatim:
            exp += " (corrected)"
        out.append(Check(f"shape {fx.id} a={fx.a} b={fx.b} m={fx.m}", exp,
                         f"{sh.describe()}; ind {pa.nu_index_alpha}", ok))
    return out


def vertex_checks(only_p: Optional[int] = None) -> list[Check]:
    from . import fixtures

    out = []
    for vx in fixtures.vertex_fixtures(only_p):
        w = AugmentedValuation.at_x(vx.p, vx.h, vx.e)
        key = KeyPoly(parse_poly(vx.key), w, vx.psi)
        verts = order2_polygon(IntPoly.trinomial(12, 1, vx.a, vx.b), key).vertices
        exp = ", ".join(f"({x},{y if y is not None else '>=' + str(vx.w_min)})" for x, y in vx.vertices)
        out.append(Check(f"order2 {vx.id} a={vx.a} b={vx.b}", exp,
                         ", ".join(f"({x},{y})" for x, y in verts), vx.matches(verts)))
    for spot in fixtures.OMEGA_SPOTS:
        if only_p is not None and spot.p != only_p:
            continue
        got = omega_eval(AugmentedValuation.at_x(spot.p, spot.h, spot.e), parse_poly(spot.poly))
        out.append(Check(f"omega p={spot.p} slope {spot.h}/{spot.e} {spot.poly}", str(spot.value),
                         str(got), got == spot.value))
    return out


def all_checks(only_p: Optional[int] = None) -> list[Check]:
    return example_checks(only_p) + shape_checks(only_p) + vertex_checks(only_p)


def _parse_only(text: Optional[str]) -> Optional[int]:
    if text is None:
        return None
    key, _, val = text.partition("=")
    if key.strip() != "p" or not val.strip().isdigit():
        raise UsageError("--only expects p=<prime>")
    return int(val)


def cmd_verify_paper(args) -> int:
    checks = all_checks(_parse_only(args.only))
    bad = [c for c in checks if not c.ok]
    for c in checks:
        if args.verbose or not c.ok:
            print(f"{'ok  ' if c.ok else 'FAIL'} {c.name}\n     expected: {c.expected}\n     computed: {c.computed}")
    print(f"fixtures: {len(checks) - len(bad)} pass / {len(bad)} fail")
    return EXIT_OK if not bad else EXIT_FAIL


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oreforge", description="Index and monogenity analysis of x^n + a x^m + b.")
    sub = ap.add_subparsers(dest="command", required=True)

    def budget_flag(p):
        p.add_argument("--budget", default="default", choices=["none", "light", "default", "thorough"],
                       help="effort spent factoring the discriminant")

    an = sub.add_parser("analyze", help="analyze one field")
    an.add_argument("-a", type=int, required=True)
    an.add_argument("-b", type=int, required=True)
    an.add_argument("-m", type=int)
    an.add_argument("--n", type=int, default=12, help="degree of the trinomial")
    an.add_argument("--twok", type=int, help="even middle exponent 2k (alternative to -m)")
    an.add_argument("--json", action="store_true")
    budget_flag(an)
    an.set_defaults(func=cmd_analyze)

    sc = sub.add_parser("scan", help="sweep a grid of (a, b, m)")
    sc.add_argument("-a", required=True, help="range A:B (inclusive) or list")
    sc.add_argument("-b", required=True, help="range A:B (inclusive) or list")
    sc.add_argument("-m", default="1", help="range or list of middle exponents")
    sc.add_argument("--n", type=int, default=12)
    sc.add_argument("--format", choices=["csv", "json"], default="csv")
    sc.add_argument("--jobs", type=int, default=1)
    sc.add_argument("--out")
    sc.add_argument("--quiet", action="store_true", help="skip the verdict histogram on stderr")
    sc.set_defaults(func=cmd_scan)
    sc.add_argument("--budget", default="light", choices=["none", "light", "default", "thorough"])

    po = sub.add_parser("polygon", help="principal phi-polygon of F at p")
    po.add_argument("-a", type=int, required=True)
    po.add_argument("-b", type=int, required=True)
    po.add_argument("-m", type=int, default=1)
    po.add_argument("--n", type=int, default=12)
    po.add_argument("-p", type=int, required=True)
    po.add_argument("--phi", default="x")
    po.add_argument("--json", action="store_true")
    po.set_defaults(func=cmd_polygon)

    vp_ = sub.add_parser("verify-paper", help="run the reference fixture corpus")
    vp_.add_argument("--only", help="restrict to one prime, e.g. p=3")
    vp_.add_argument("-v", "--verbose", action="store_true")
    vp_.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, InvalidField) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
