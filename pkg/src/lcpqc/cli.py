"""Command-line front end.

Subcommands:

* ``check``      decide LCP for a pair of codes, with any engine or all;
* ``reproduce``  run the bundled reference cases and report PASS/FAIL;
* ``distance``   exact minimum distance of a generator matrix file;
* ``search``     scan generator pairs for high-d_lcp LCPs, CSV output.

Exit codes: 0 success, 1 input error or failed reproduction, 2 internal
engine disagreement (which would signal an implementation bug).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import sampling
from .bklc import EMPTY_TABLE, load_bklc_table
from .cases import CASE_IDS, CASES, ReproCase, build_case, field_for_order
from .errors import BudgetExceeded, LcpqcError
from .lcp import lcp_dc, lcp_one_generator, lcp_two_generator, lcp_via_constituents
from .matrix import GenMatrix
from .oracle import lcp_oracle
from .poly import Poly
from .qtcode import (
    DEFAULT_BUDGET,
    QtCodeSpec,
    d_lcp,
    generator_matrix,
    min_distance,
    to_standard,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISAGREE = 2


def _parse_spec(field, m, lam, text: str) -> QtCodeSpec:
    polys = [Poly.from_text(field, part) for part in text.split(";")]
    if len(polys) == 2:
        return QtCodeSpec.one_gen(field, m, lam, *polys)
    if len(polys) == 3:
        return QtCodeSpec.standard(field, m, lam, *polys)
    raise LcpqcError(
        f"expected 'g11;g12' or 'g11;g12;g22', got {len(polys)} parts")


def _oracle_report(c_spec, d_spec) -> dict:
    gc = generator_matrix(to_standard(c_spec))
    gd = generator_matrix(to_standard(d_spec))
    v = lcp_oracle(gc, gd)
    return {"verdict": v.verdict, "engine": "oracle", "conditions": {},
            "witness": None, "dims": [v.dim_c, v.dim_d, v.ambient]}


def _applicable_engines(c_spec, d_spec) -> dict:
    engines = {
        "two-gen": lambda: lcp_two_generator(
            to_standard(c_spec), to_standard(d_spec)).to_dict(),
        "constituents": lambda: lcp_via_constituents(
            to_standard(c_spec), to_standard(d_spec)).to_dict(),
        "oracle": lambda: _oracle_report(c_spec, d_spec),
    }
    if not c_spec.is_standard and not d_spec.is_standard:
        engines["one-gen"] = lambda: lcp_one_generator(c_spec, d_spec).to_dict()
        if c_spec.g11.is_one() and d_spec.g11.is_one():
            engines["dc"] = lambda: lcp_dc(
                c_spec.g12, d_spec.g12, c_spec.m, c_spec.lam).to_dict()
    return engines


def cmd_check(args) -> int:
    field = field_for_order(args.q, args.ext_modulus)
    lam = field.parse(args.lam).code
    c_spec = _parse_spec(field, args.m, lam, args.c)
    d_spec = _parse_spec(field, args.m, lam, args.d)
    engines = _applicable_engines(c_spec, d_spec)

    if args.engine == "auto":
        if c_spec.is_standard or d_spec.is_standard:
            chosen = "two-gen"
        else:
            chosen = "dc" if "dc" in engines else "one-gen"
    else:
        chosen = args.engine

    exit_code = EXIT_OK
    if chosen == "all":
        reports = {name: run() for name, run in engines.items()}
        verdicts = {r["verdict"] for r in reports.values()}
        disagreement = len(verdicts) > 1
        doc = {"engines": reports, "disagreement": disagreement,
               "verdict": verdicts.pop() if not disagreement else None}
        if disagreement:
            exit_code = EXIT_DISAGREE
    else:
        if chosen not in engines:
            raise LcpqcError(f"engine {chosen!r} does not apply to these specs")
        doc = engines[chosen]()
    if args.dlcp:
        res = d_lcp(c_spec, d_spec, budget=args.budget)
        doc["dlcp"] = res.to_dict()
    print(json.dumps(doc, indent=2))
    return exit_code


# ---------------------------------------------------------------------------
# reproduce


@dataclass
class CaseResult:
    case: ReproCase
    verdicts: dict
    n: int
    k: int
    dlcp: int

    @property
    def disagreement(self) -> bool:
        return len(set(self.verdicts.values())) > 1

    def failures(self) -> list:
        out = []
        if self.disagreement:
            out.append(f"engine disagreement: {self.verdicts}")
        elif not all(self.verdicts.values()):
            out.append("pair is not an LCP according to all engines")
        for name, got, want in (
            ("n", self.n, self.case.expected_n),
            ("k", self.k, self.case.expected_k),
            ("d_lcp", self.dlcp, self.case.expected_dlcp),
        ):
            if got != want:
                out.append(f"{name}={got} differs from expected {name}={want}")
        return out

    @property
    def passed(self) -> bool:
        return not self.failures()


def run_case(case: ReproCase, budget: int = DEFAULT_BUDGET,
             backend: str | None = None) -> CaseResult:
    field, c_spec, d_spec = build_case(case)
    verdicts = {
        "two-gen": lcp_two_generator(c_spec, d_spec).verdict,
        "constituents": lcp_via_constituents(c_spec, d_spec).verdict,
        "oracle": lcp_oracle(generator_matrix(c_spec),
                             generator_matrix(d_spec)).verdict,
    }
    gc = generator_matrix(c_spec)
    n = gc.cols
    k = gc.rank()
    res = d_lcp(c_spec, d_spec, budget=budget, backend=backend)
    return CaseResult(case, verdicts, n, k, res.value)


def run_reproduction(case_ids, budget: int = DEFAULT_BUDGET,
                     backend: str | None = None) -> list:
    return [run_case(CASES[cid], budget=budget, backend=backend)
            for cid in case_ids]


def cmd_reproduce(args) -> int:
    if args.case:
        if args.case not in CASES:
            raise LcpqcError(
                f"unknown case {args.case!r}; known: {', '.join(CASE_IDS)}")
        ids = [args.case]
    else:
        ids = list(CASE_IDS)
    results = run_reproduction(ids, budget=args.budget)
    any_disagreement = False
    all_passed = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = (f"{status} {r.case.case_id:12s} n={r.n} k={r.k} "
                f"d_lcp={r.dlcp} d_bklc={r.case.d_bklc}")
        if not r.passed:
            line += "  [" + "; ".join(r.failures()) + "]"
            all_passed = False
            any_disagreement |= r.disagreement
        print(line)
    print(f"{sum(r.passed for r in results)}/{len(results)} cases passed")
    if any_disagreement:
        return EXIT_DISAGREE
    return EXIT_OK if all_passed else EXIT_INPUT


# ---------------------------------------------------------------------------
# distance


def cmd_distance(args) -> int:
    field = field_for_order(args.q, args.ext_modulus)
    if args.matrix == "-":
        text = sys.stdin.read()
    else:
        with open(args.matrix) as fh:
            text = fh.read()
    mat = GenMatrix.from_text(field, text)
    try:
        res = min_distance(mat, budget=args.budget, strategy=args.strategy)
    except BudgetExceeded as exc:
        print(json.dumps({"error": "budget-exceeded", "lower": exc.lower,
                          "upper": exc.upper, "work_count": exc.work}))
        return EXIT_INPUT
    doc = res.to_dict()
    doc.update({"n": mat.cols, "k": mat.rows})
    print(json.dumps(doc, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# search


def _worker_count() -> int:
    raw = os.environ.get("LCPQC_THREADS", "").strip()
    if raw and raw != "0":
        return max(1, int(raw))
    return os.cpu_count() or 1


def cmd_search(args) -> int:
    field = field_for_order(args.q, args.ext_modulus)
    lam = field.parse(args.lam).code
    m, n = args.m, 2 * args.m
    target_k = args.target_k
    if not 0 <= target_k <= n:
        raise LcpqcError(f"target k must lie in [0, {n}]")
    table = load_bklc_table(args.bklc_table) if args.bklc_table else EMPTY_TABLE

    def candidate_stream():
        if args.mode == "random":
            rng = random.Random(args.seed)
            produced = draws = 0
            max_draws = max(args.budget * 200, 100_000)
            while produced < args.budget and draws < max_draws:
                draws += 1
                c, d = sampling.random_standard_pair(field, m, lam, rng)
                if c.dimension() != target_k or d.dimension() != n - target_k:
                    continue
                produced += 1
                yield c, d
        else:
            count = 0
            for c in sampling.iter_standard_specs(field, m, lam, dim=target_k):
                for d in sampling.iter_standard_specs(field, m, lam,
                                                      dim=n - target_k):
                    if count >= args.budget:
                        return
                    count += 1
                    yield c, d

    stats = {"examined": 0, "lcp": 0, "undecided": 0}

    def evaluate(pair):
        c, d = pair
        report = lcp_two_generator(c, d)
        if not report.verdict:
            return None
        try:
            res = d_lcp(c, d, budget=args.distance_budget)
        except BudgetExceeded:
            return ("undecided", c, d, None)
        return ("lcp", c, d, res)

    hits = []
    workers = _worker_count()
    stream = candidate_stream()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for outcome in pool.map(evaluate, stream, chunksize=64):
            stats["examined"] += 1
            if outcome is None:
                continue
            kind, c, d, res = outcome
            if kind == "undecided":
                stats["undecided"] += 1
                continue
            stats["lcp"] += 1
            if res.value >= args.min_dlcp:
                hits.append((c, d, res))

    hits.sort(key=lambda h: (-h[2].value, h[0].generators_text(),
                             h[1].generators_text()))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["generators_c", "generators_d", "q", "m", "lambda",
                     "n", "k", "d_lcp", "d_bklc", "optimal"])
    for c, d, res in hits:
        known = table.lookup(field.order, n, res.dim_c)
        optimal = "-" if known is None else ("yes" if res.value >= known else "no")
        writer.writerow([c.generators_text(), d.generators_text(),
                         field.order, m, field.format(lam), n, res.dim_c,
                         res.value, known if known is not None else "-", optimal])
    print(f"search: examined={stats['examined']} lcp={stats['lcp']} "
          f"hits={len(hits)} undecided={stats['undecided']}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcpqc",
        description="Index-2 quasi-cyclic/quasi-twisted codes: LCP checking "
                    "and security parameter computation.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("check", help="decide LCP for a pair of codes")
    pc.add_argument("--q", type=int, required=True, help="field order (prime power)")
    pc.add_argument("--ext-modulus", default=None,
                    help="modulus coefficients over F_p, low degree first")
    pc.add_argument("--m", type=int, required=True)
    pc.add_argument("--lambda", dest="lam", default="1",
                    help="twist constant (element token; default 1)")
    pc.add_argument("--c", required=True, help="'g11;g12' or 'g11;g12;g22'")
    pc.add_argument("--d", required=True, help="'f11;f12' or 'f11;f12;f22'")
    pc.add_argument("--engine", default="auto",
                    choices=["auto", "two-gen", "one-gen", "dc",
                             "constituents", "oracle", "all"])
    pc.add_argument("--dlcp", action="store_true",
                    help="also compute d(C), d(D-dual) and their min")
    pc.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    pc.set_defaults(func=cmd_check)

    pr = sub.add_parser("reproduce", help="run the bundled reference cases")
    group = pr.add_mutually_exclusive_group(required=True)
    group.add_argument("--case", help=f"one of: {', '.join(CASE_IDS)}")
    group.add_argument("--all", action="store_true")
    pr.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    pr.set_defaults(func=cmd_reproduce)

    pd = sub.add_parser("distance", help="minimum distance of a matrix file")
    pd.add_argument("--q", type=int, required=True)
    pd.add_argument("--ext-modulus", default=None)
    pd.add_argument("--matrix", required=True,
                    help="file of rows (space-separated element tokens), or -")
    pd.add_argument("--strategy", default="auto",
                    choices=["auto", "enumeration", "column-search"])
    pd.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    pd.set_defaults(func=cmd_distance)

    ps = sub.add_parser("search", help="scan for LCP pairs with high d_lcp")
    ps.add_argument("--q", type=int, required=True)
    ps.add_argument("--ext-modulus", default=None)
    ps.add_argument("--m", type=int, required=True)
    ps.add_argument("--lambda", dest="lam", default="1")
    ps.add_argument("--target-k", type=int, required=True,
                    help="dimension of C (D gets n - k)")
    ps.add_argument("--min-dlcp", type=int, default=1)
    ps.add_argument("--budget", type=int, default=10_000,
                    help="max candidate pairs to examine")
    ps.add_argument("--distance-budget", type=int, default=DEFAULT_BUDGET)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--mode", default="random", choices=["exhaustive", "random"])
    ps.add_argument("--bklc-table", default=None,
                    help="CSV with header q,n,k,d for d_bklc comparison")
    ps.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LcpqcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
