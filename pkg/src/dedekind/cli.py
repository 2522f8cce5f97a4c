"""Command-line front end.

Subcommands: eval (one sum), verify (one identity instance), scan (sweep an
identity over a range, CSV/JSON output), admissible (list moduli with their
roots of -1), bench (time the evaluators).  Exit codes: 0 success / all
residuals zero, 1 identity falsified, 2 usage or precondition error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .admissible import enumerate_theorem1_instances, is_admissible
from .core import SumArgs, dedekind_sum_fast, dedekind_sum_naive, kernel_backend
from .identities import (
    CofactorInstance,
    FactKind,
    NoBranchApplies,
    Theorem1Instance,
    ThreeTermWitness,
    cofactor_expansion_sides,
    corollary2_sides,
    du_zhang_sides,
    enumerate_cofactor_instances,
    reciprocity_sides,
    theorem1_sides,
    three_term_sides,
)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2

NAIVE_BENCH_CUTOFF = 10**6


def _fmt(r: Fraction) -> str:
    # always num/den, even for integers: residuals must be unambiguous
    return f"{r.numerator}/{r.denominator}"


@dataclass
class ScanReport:
    """Summary of one identity sweep."""

    identity: str
    instances_checked: int
    failures: list[tuple[tuple, Fraction, Fraction]]
    wall_time: float


# ---------------------------------------------------------------------------
# eval


def cmd_eval(ns: argparse.Namespace) -> int:
    try:
        args = SumArgs(ns.a, ns.b)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    s = dedekind_sum_naive(args) if ns.naive else dedekind_sum_fast(args)
    print(_fmt(12 * s))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

_VERIFY_PARAMS = {
    "reciprocity": ("a", "b"),
    "duzhang": ("a", "b"),
    "theorem1": ("t", "a", "b"),
    "corollary2": ("t", "a", "b"),
    "threeterm": ("a", "b", "c", "d"),
    "eq22": ("a", "b", "t"),
    "fact": ("kind", "a", "b"),
}


def _verify_sides(identity: str, params: list[str]) -> tuple[str, Fraction, Fraction]:
    """(extra-label, lhs, rhs) for one identity instance; raises ValueError."""
    if identity == "fact":
        try:
            kind = FactKind[params[0].upper()]
        except KeyError:
            kinds = ", ".join(k.name.lower() for k in FactKind)
            raise ValueError(f"unknown fact kind {params[0]!r} (one of: {kinds})") from None
        values = [int(p) for p in params[1:]]
        from .identities import classical_fact_sides

        lhs, rhs = classical_fact_sides(kind, *values)
        return "", lhs, rhs
    values = [int(p) for p in params]
    if identity == "reciprocity":
        lhs, rhs = reciprocity_sides(*values)
    elif identity == "duzhang":
        lhs, rhs = du_zhang_sides(*values)
    elif identity == "theorem1":
        lhs, rhs = theorem1_sides(Theorem1Instance.from_triple(*values))
    elif identity == "corollary2":
        branch, lhs, rhs = corollary2_sides(Theorem1Instance.from_triple(*values))
        return f"branch={branch.value} ", lhs, rhs
    elif identity == "threeterm":
        lhs, rhs = three_term_sides(ThreeTermWitness.from_fractions(*values))
    elif identity == "eq22":
        lhs, rhs = cofactor_expansion_sides(CofactorInstance.from_triple(*values))
    else:
        raise ValueError(f"unknown identity: {identity}")
    return "", lhs, rhs


def cmd_verify(ns: argparse.Namespace) -> int:
    names = _VERIFY_PARAMS[ns.identity]
    if len(ns.params) != len(names):
        print(
            f"error: {ns.identity} takes {len(names)} parameters"
            f" ({' '.join(names)}), got {len(ns.params)}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        extra, lhs, rhs = _verify_sides(ns.identity, ns.params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    residual = lhs - rhs
    binding = " ".join(f"{n}={v}" for n, v in zip(names, ns.params))
    print(f"{ns.identity} {binding}: {extra}lhs={_fmt(lhs)} rhs={_fmt(rhs)} residual={_fmt(residual)}")
    return EXIT_OK if residual == 0 else EXIT_FALSIFIED


# ---------------------------------------------------------------------------
# scan

_SCAN_IDENTITIES = ("reciprocity", "duzhang", "theorem1", "corollary2", "eq22")


def _scan_instances(identity: str, t_max: int, b_max: int) -> list:
    if identity == "reciprocity":
        return [
            (a, b)
            for a in range(1, b_max + 1)
            for b in range(1, b_max + 1)
            if math.gcd(a, b) == 1
        ]
    if identity == "duzhang":
        return [
            (a, b)
            for a in range(1, b_max + 1, 2)
            for b in range(1, b_max + 1, 2)
            if math.gcd(a, b) == 1
        ]
    if identity in ("theorem1", "corollary2"):
        return list(enumerate_theorem1_instances(t_max, b_max))
    if identity == "eq22":
        return list(enumerate_cofactor_instances(t_max, b_max, b_max))
    raise ValueError(f"unknown identity: {identity}")


def _scan_row(identity: str, inst) -> tuple | None:
    """(t-or-None, a, b, lhs, rhs), or None when the instance is out of scope."""
    if identity == "reciprocity":
        a, b = inst
        lhs, rhs = reciprocity_sides(a, b)
        return None, a, b, lhs, rhs
    if identity == "duzhang":
        a, b = inst
        lhs, rhs = du_zhang_sides(a, b)
        return None, a, b, lhs, rhs
    if identity == "theorem1":
        lhs, rhs = theorem1_sides(inst)
        return inst.t, inst.a, inst.b, lhs, rhs
    if identity == "corollary2":
        try:
            _, lhs, rhs = corollary2_sides(inst)
        except NoBranchApplies:
            return None  # outside the case split, not a failure
        return inst.t, inst.a, inst.b, lhs, rhs
    if identity == "eq22":
        lhs, rhs = cofactor_expansion_sides(inst)
        return inst.t, inst.a, inst.b, lhs, rhs
    raise ValueError(f"unknown identity: {identity}")


def _scan_chunk(payload: tuple[str, list]) -> list:
    identity, chunk = payload
    return [_scan_row(identity, inst) for inst in chunk]


def _emit_csv(identity: str, rows: list) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["identity", "t", "a", "b", "lhs_num", "lhs_den", "rhs_num", "rhs_den", "residual_zero"]
    )
    for t, a, b, lhs, rhs in rows:
        writer.writerow(
            [
                identity,
                "" if t is None else t,
                a,
                b,
                lhs.numerator,
                lhs.denominator,
                rhs.numerator,
                rhs.denominator,
                "true" if lhs == rhs else "false",
            ]
        )


def _emit_json(identity: str, rows: list) -> None:
    objs = []
    for t, a, b, lhs, rhs in rows:
        obj: dict = {"identity": identity}
        if t is not None:
            obj["t"] = t
        obj.update(
            a=a,
            b=b,
            lhs_num=lhs.numerator,
            lhs_den=lhs.denominator,
            rhs_num=rhs.numerator,
            rhs_den=rhs.denominator,
            residual_zero=lhs == rhs,
        )
        objs.append(obj)
    json.dump(objs, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_scan(ns: argparse.Namespace) -> int:
    if ns.t_max < 1 or ns.b_max < 1 or ns.jobs < 1:
        print("error: --t-max, --b-max and --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    instances = _scan_instances(ns.identity, ns.t_max, ns.b_max)
    if ns.jobs == 1 or len(instances) < 4 * ns.jobs:
        rows = [_scan_row(ns.identity, inst) for inst in instances]
    else:
        # contiguous blocks merged in index order: identical output for any --jobs
        size = -(-len(instances) // ns.jobs)
        payloads = [
            (ns.identity, instances[i : i + size]) for i in range(0, len(instances), size)
        ]
        with ProcessPoolExecutor(max_workers=ns.jobs) as pool:
            rows = [row for part in pool.map(_scan_chunk, payloads) for row in part]
    rows = [row for row in rows if row is not None]
    failures = [(row[:3], row[3], row[4]) for row in rows if row[3] != row[4]]
    report = ScanReport(ns.identity, len(rows), failures, time.perf_counter() - start)

    if ns.format == "csv":
        _emit_csv(ns.identity, rows)
    else:
        _emit_json(ns.identity, rows)
    print(
        f"{report.identity}: {report.instances_checked} instances checked,"
        f" {len(report.failures)} failures, {report.wall_time:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK if not report.failures else EXIT_FALSIFIED


# ---------------------------------------------------------------------------
# admissible


def cmd_admissible(ns: argparse.Namespace) -> int:
    if ns.max < 1:
        print("error: --max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    for t in range(1, ns.max + 1):
        admissible, witness = is_admissible(t)
        if admissible:
            print(f"{t}: {' '.join(str(x) for x in witness.roots)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench


def _fmt_seconds(dt: float) -> str:
    if dt < 1e-3:
        return f"{dt * 1e6:.1f} us"
    if dt < 1.0:
        return f"{dt * 1e3:.2f} ms"
    return f"{dt:.3f} s"


def _time_calls(fn, args_list) -> list[float]:
    times = []
    for args in args_list:
        t0 = time.perf_counter()
        fn(args)
        times.append(time.perf_counter() - t0)
    return times


def cmd_bench(ns: argparse.Namespace) -> int:
    if ns.bits < 2 or ns.samples < 1:
        print("error: --bits must be >= 2 and --samples >= 1", file=sys.stderr)
        return EXIT_USAGE
    rng = random.Random(ns.bits * 1_000_003 + ns.samples)
    pairs = []
    while len(pairs) < ns.samples:
        b = rng.getrandbits(ns.bits) | (1 << (ns.bits - 1))
        a = rng.randrange(1, b)
        if math.gcd(a, b) == 1:
            pairs.append(SumArgs(a, b))
    dedekind_sum_fast(pairs[0])  # warmup
    fast = _time_calls(dedekind_sum_fast, pairs)
    print(f"kernel backend: {kernel_backend()}")
    print(
        f"fast : median {_fmt_seconds(statistics.median(fast))},"
        f" mean {_fmt_seconds(statistics.fmean(fast))} over {len(pairs)} calls"
        f" ({ns.bits}-bit b)"
    )
    small = [p for p in pairs if p.b <= NAIVE_BENCH_CUTOFF]
    if small:
        naive = _time_calls(dedekind_sum_naive, small)
        print(
            f"naive: median {_fmt_seconds(statistics.median(naive))},"
            f" mean {_fmt_seconds(statistics.fmean(naive))} over {len(small)} calls"
            f" (b <= 10^6)"
        )
        ratio = statistics.median(naive) / statistics.median(fast)
        print(f"speedup fast vs naive: {ratio:.1f}x (median)")
    else:
        print("naive: skipped, every sampled b exceeds 10^6")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedekind",
        description="Exact Dedekind sums and mechanical checks of their reciprocity laws.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print S(a, b) = 12 s(a, b) as an exact fraction")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--naive", action="store_true", help="force the O(b) definitional evaluator")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check one identity instance and print both sides")
    p.add_argument("identity", choices=sorted(_VERIFY_PARAMS))
    p.add_argument("params", nargs="*", help="identity parameters, e.g. 'theorem1 5 2 3'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="sweep an identity over a range, one output row per instance")
    p.add_argument("identity", choices=_SCAN_IDENTITIES)
    p.add_argument("--t-max", type=int, default=10, help="largest modulus t (where applicable)")
    p.add_argument("--b-max", type=int, default=50, help="largest b (and a) swept")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output is identical for any value")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("admissible", help="list t <= max admitting x^2 = -1, with all roots")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("bench", help="time the fast evaluator (and naive, when b <= 10^6)")
    p.add_argument("--bits", type=int, default=64, help="bit length of sampled b")
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
