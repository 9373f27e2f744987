"""Command-line interface: Hurwitz numbers, integral tables, verify suites.

Exit codes: 0 success, 1 bad arguments or unreadable input, 2 a work or
size bound was exceeded, 3 an exact internal cross-check failed.  All
values print as canonical rationals ("num/den", integers bare, zero as
"0"); nothing is ever rounded.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod

from . import cache as cache_store
from . import cutjoin, engines, hodge, series
from .errors import ConsistencyError, InfeasibleError
from .partitions import aut_count, partitions_of
from .report import Check, all_pass, make_check

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_INCONSISTENT = 3

SUITES = ("engines", "genus0", "degll", "hodge-roundtrip", "fp-identity")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # infeasible bounds here, so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_profile(text: str) -> tuple[int, ...]:
    try:
        profile = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"profile must be comma-separated integers, got {text!r}") from None
    if not profile or any(p < 1 for p in profile):
        raise ValueError(f"profile entries must be positive, got {text!r}")
    return profile


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurwitz-hodge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    hur = sub.add_parser("hurwitz", help="compute one connected Hurwitz number")
    hur.add_argument("--genus", type=int, required=True)
    hur.add_argument("--profile", required=True, help="pole orders, e.g. 2,1,1")
    hur.add_argument("--engine", choices=("auto", "brute", "frobenius", "cutjoin"), default="auto")
    hur.add_argument("--format", choices=("value", "record"), default="value")
    hur.add_argument("--cache", help="append-only cache file")
    hur.add_argument("--brute-sheets", type=int, default=engines.DEFAULT_SHEET_BOUND)
    hur.add_argument("--brute-work", type=int, default=engines.DEFAULT_WORK_BOUND)
    hur.add_argument("--kmax", type=int, default=engines.DEFAULT_K_BOUND,
                     help="sheet bound for the character engine")
    hur.add_argument("--rmax", type=int, default=engines.DEFAULT_R_BOUND)
    hur.add_argument("--cutjoin-kmax", type=int, default=cutjoin.DEFAULT_TRUNCATION)
    hur.set_defaults(func=_cmd_hurwitz)

    hdg = sub.add_parser("hodge", help="extract a table of psi/lambda integrals")
    hdg.add_argument("--genus", type=int, required=True)
    hdg.add_argument("--points", type=int, required=True, help="number of marked points n")
    hdg.add_argument("--grid-bound", type=int, default=None)
    hdg.add_argument("--format", choices=("records", "table"), default="records")
    hdg.add_argument("--cache", help="append-only cache file")
    hdg.add_argument("--kmax", type=int, default=engines.DEFAULT_K_BOUND)
    hdg.add_argument("--rmax", type=int, default=engines.DEFAULT_R_BOUND)
    hdg.set_defaults(func=_cmd_hodge)

    ver = sub.add_parser("verify", help="run one verification suite")
    ver.add_argument("suite", choices=SUITES)
    ver.add_argument("--gmax", type=int, default=2, help="genus budget for fp-identity")
    ver.add_argument("--cache", help="cache file (degll also checks its records)")
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (cache_store.CacheError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


# ---------------------------------------------------------------------------
# hurwitz


def _cache_records(path: str) -> list[dict[str, str]]:
    if not os.path.exists(path):
        return []
    return cache_store.read_records(path)


def _compute_hurwitz(args, g: int, profile) -> tuple[Fraction, str]:
    if args.engine == "brute":
        value = engines.brute_force_hurwitz(
            g, profile, sheet_bound=args.brute_sheets, work_bound=args.brute_work
        )
        return value, "brute"
    if args.engine == "frobenius":
        return engines.connected_hurwitz(g, profile, k_bound=args.kmax, r_bound=args.rmax), "frobenius"
    if args.engine == "cutjoin":
        return cutjoin.cut_and_join_hurwitz(g, profile, kmax=args.cutjoin_kmax, r_bound=args.rmax), "cutjoin"
    # auto: character engine, cross-checked against brute force when feasible
    value = engines.connected_hurwitz(g, profile, k_bound=args.kmax, r_bound=args.rmax)
    try:
        check = engines.brute_force_hurwitz(
            g, profile, sheet_bound=args.brute_sheets, work_bound=args.brute_work
        )
    except InfeasibleError:
        check = None
    if check is not None and check != value:
        raise ConsistencyError(
            f"engines disagree on genus {g}, profile {profile}: frobenius={value}, brute={check}"
        )
    return value, "frobenius"


def _cmd_hurwitz(args) -> int:
    profile = _parse_profile(args.profile)
    g = args.genus
    mu_text = ",".join(map(str, sorted(profile, reverse=True)))
    cached = None
    if args.cache:
        for record in _cache_records(args.cache):
            if record["kind"] == "hurwitz" and record.get("g") == str(g) and record.get("mu") == mu_text:
                cached = record
                break
    if cached is not None:
        value = Fraction(cached["value"])
    else:
        value, engine_used = _compute_hurwitz(args, g, profile)
        if args.cache:
            cache_store.append_records(
                args.cache,
                [{"kind": "hurwitz", "g": str(g), "mu": mu_text,
                  "engine": engine_used, "value": str(value)}],
            )
    if args.format == "record":
        print(f"hurwitz genus={g} profile={args.profile} engine={args.engine} value={value}")
    else:
        print(value)
    return EXIT_OK


# ---------------------------------------------------------------------------
# hodge


def _cmd_hodge(args) -> int:
    g, n = args.genus, args.points
    keys = hodge.hodge_keys(g, n)  # validates stability up front
    table = None
    if args.cache:
        index = {
            (rec.get("g"), rec.get("n"), rec.get("b"), rec.get("j")): rec
            for rec in _cache_records(args.cache)
            if rec["kind"] == "hodge"
        }
        hits = [
            index.get((str(g), str(n), ",".join(map(str, b)), str(j))) for j, b in keys
        ]
        if all(hit is not None for hit in hits):
            table = hodge.HodgeTable()
            for (j, b), hit in zip(keys, hits):
                table.set(g, n, b, j, Fraction(hit["value"]))
    if table is None:
        table = hodge.extract_hodge_integrals(
            g, n, grid_bound=args.grid_bound, k_bound=args.kmax, r_bound=args.rmax
        )
        if args.cache:
            cache_store.append_records(
                args.cache,
                [
                    {"kind": "hodge", "g": str(kg), "n": str(kn),
                     "b": ",".join(map(str, kb)), "j": str(kj),
                     "engine": "extraction", "value": str(table.values[(kg, kn, kb, kj)])}
                    for kg, kn, kb, kj in table.sorted_keys()
                ],
            )
    if args.format == "table":
        print("g n b j value")
        for kg, kn, kb, kj in table.sorted_keys():
            print(f"{kg} {kn} {','.join(map(str, kb))} {kj} {table.values[(kg, kn, kb, kj)]}")
    else:
        for line in table.to_lines():
            print(line)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites


def _mu_text(mu) -> str:
    return ",".join(map(str, mu))


def _suite_engines() -> list[Check]:
    """Triple agreement for k <= 5 up to r = 12, character engine vs
    cut-and-join for k = 6 up to genus 2."""
    checks = []
    for k in range(1, 6):
        for mu in partitions_of(k):
            n = len(mu)
            g = 0
            while k + n + 2 * g - 2 <= 12:
                hb = engines.brute_force_hurwitz(g, mu)
                hf = engines.connected_hurwitz(g, mu)
                hc = cutjoin.cut_and_join_hurwitz(g, mu, kmax=6)
                key = f"g={g}/mu={_mu_text(mu)}"
                checks.append(make_check("engines", key + "/brute-vs-frobenius", hb, hf))
                checks.append(make_check("engines", key + "/frobenius-vs-cutjoin", hf, hc))
                g += 1
    for mu in partitions_of(6):
        for g in range(3):
            hf = engines.connected_hurwitz(g, mu)
            hc = cutjoin.cut_and_join_hurwitz(g, mu, kmax=6)
            key = f"g={g}/mu={_mu_text(mu)}"
            checks.append(make_check("engines", key + "/frobenius-vs-cutjoin", hf, hc))
    return checks


def _suite_genus0() -> list[Check]:
    checks = []
    for k in range(1, 9):
        for mu in partitions_of(k):
            closed = engines.genus_zero_closed_form(mu)
            computed = engines.connected_hurwitz(0, mu)
            checks.append(make_check("genus0", f"mu={_mu_text(mu)}", closed, computed))
    return checks


def _degll_check(g: int, mu, h: Fraction) -> Check:
    key = f"g={g}/mu={_mu_text(mu)}"
    try:
        degree = hodge.degree_LL(g, mu, h)
    except ConsistencyError:
        raw = Fraction(h) * aut_count(mu) * prod(mu)
        return Check("degll", key, "nonnegative-integer", str(raw), "fail")
    return Check("degll", key, "nonnegative-integer", str(degree), "pass")


def _suite_degll(cache_path: str | None) -> list[Check]:
    checks = []
    for k in range(1, 7):
        for mu in partitions_of(k):
            for g in range(3):
                checks.append(_degll_check(g, tuple(mu), engines.connected_hurwitz(g, mu)))
    if cache_path:
        for record in _cache_records(cache_path):
            if record["kind"] != "hurwitz":
                continue
            g = int(record["g"])
            mu = tuple(int(x) for x in record["mu"].split(","))
            checks.append(_degll_check(g, mu, Fraction(record["value"])))
    return checks


def _suite_roundtrip() -> list[Check]:
    """Extraction followed by forward evaluation must reproduce the engine
    on every profile with entries <= 4, in and out of the extraction grid;
    plus the sign-convention demonstration."""
    checks = []
    for g in range(3):
        for n in range(1, 4):
            if not hodge.is_stable(g, n):
                continue
            table = hodge.extract_hodge_integrals(g, n, k_bound=15, r_bound=20)
            bound = table.grid_bound[(g, n)]
            for point in combinations_with_replacement(range(1, 5), n):
                expected = engines.connected_hurwitz(g, point, k_bound=15, r_bound=20)
                actual = hodge.hurwitz_from_hodge(g, point, table)
                tag = "in-grid" if max(point) <= bound else "out-of-grid"
                checks.append(
                    make_check("hodge-roundtrip", f"g={g}/mu={_mu_text(point)}/{tag}", expected, actual)
                )
    table11 = hodge.extract_hodge_integrals(1, 1)
    alternating = hodge.hurwitz_from_hodge(1, (1,), table11)
    plus = hodge.hurwitz_from_hodge(1, (1,), table11, lambda_signs="plus")
    checks.append(make_check("hodge-roundtrip", "sign=alternating/h(1;1)", Fraction(0), alternating))
    checks.append(
        Check("hodge-roundtrip", "sign=plus/h(1;1)", "nonzero", str(plus),
              "pass" if plus != 0 else "fail")
    )
    return checks


def _cmd_verify(args) -> int:
    if args.suite == "engines":
        checks = _suite_engines()
    elif args.suite == "genus0":
        checks = _suite_genus0()
    elif args.suite == "degll":
        checks = _suite_degll(args.cache)
    elif args.suite == "hodge-roundtrip":
        checks = _suite_roundtrip()
    else:
        checks = series.verify_faber_pandharipande(args.gmax, tuple(range(1, 6)))
    for check in checks:
        print(check.line())
    return EXIT_OK if all_pass(checks) else EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
