"""Command-line front end.

    cyclomahonian poly --n 3 --m 2
    cyclomahonian verify --suite all --n-max 8 --format json
    cyclomahonian bijection --word 4,5,4,1,2,2,2,5
"""
from __future__ import annotations

import argparse
import os
import sys
from itertools import product
from typing import List, Optional, Sequence

from .bijection import check_properties, pair_to_word, trace, word_to_pair
from .errors import ResourceLimitError
from .identities import (
    DEFAULT_M_SET,
    DEFAULT_N_MAX,
    SUITES,
    VerificationReport,
    all_ok,
    run_matrix,
)
from .permstat import coinv, des, euler_mahonian, inv, maj
from .polyring import (
    DEFAULT_TRUNC,
    render_cyc,
    render_qpoly,
    render_series,
    render_tripoly,
    series_eval_q1,
    series_eval_t1,
    tri_specialize,
)

TRUNC_ENV = "CYCLOMAHONIAN_TRUNC"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError("empty integer list")
    return values


def _default_trunc() -> int:
    raw = os.environ.get(TRUNC_ENV)
    if raw is None:
        return DEFAULT_TRUNC
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{TRUNC_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"{TRUNC_ENV} must be nonnegative")
    return value


def cmd_poly(args) -> tuple[int, List[str]]:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    try:
        f = euler_mahonian(args.n, jobs=args.jobs, allow_n10=args.allow_n10)
    except ResourceLimitError as exc:
        raise UsageError(str(exc)) from None
    if args.m is None:
        for var, flag in (("t", args.t1), ("q", args.q1)):
            if flag:
                f = f.set_one(var)
        return EXIT_OK, [render_tripoly(f)]
    if args.m < 1:
        raise UsageError("--m must be positive")
    s = tri_specialize(f, args.m)
    if args.q1:
        s = series_eval_q1(s)
    if args.t1:
        value = series_eval_t1(s)
        text = render_cyc(value.coeff(0)) if args.q1 else render_qpoly(value)
        return EXIT_OK, [text]
    return EXIT_OK, [render_series(s)]


def _resolve_suites(raw: Sequence[str]) -> List[str]:
    names: List[str] = []
    for chunk in raw:
        names.extend(x.strip() for x in chunk.split(",") if x.strip())
    if not names:
        raise UsageError("verify needs --suite (a suite name or 'all')")
    if "all" in names:
        return list(SUITES)
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; known: {', '.join(SUITES)}")
    return names


def _format_params(params) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(params.items()))


def _table_lines(reports: Sequence[VerificationReport]) -> List[str]:
    lines = []
    for r in reports:
        tag = r.status.upper()
        line = f"{tag:4s}  {r.suite:13s} {_format_params(r.params)}"
        if r.params.get("erratum"):
            line += "  [printed formula]"
        if r.first_mismatch:
            t, q, a, b = r.first_mismatch
            line += f"  first mismatch t^{t} q^{q}: lhs {a} vs rhs {b}"
        lines.append(line)
    errata = [r for r in reports if r.params.get("erratum")]
    for r in errata:
        rest = {k: v for k, v in r.params.items() if k not in ("erratum", "L")}
        twin = next((x for x in reports if x.suite == r.suite and not x.params.get("erratum")
                     and {k: v for k, v in x.params.items() if k not in ("erratum", "L")} == rest),
                    None)
        printed = "matches" if r.passed else "does not match"
        corrected = "no corrected check run" if twin is None else (
            "corrected form matches" if twin.passed else "corrected form does not match")
        lines.append(f"erratum {r.suite} {_format_params(rest)}: printed formula {printed}; "
                     f"{corrected}")
    n_pass = sum(r.passed for r in reports)
    unexpected = sum(not r.ok for r in reports)
    lines.append(f"{len(reports)} reports: {n_pass} pass, {len(reports) - n_pass} fail "
                 f"({len(errata)} printed-formula checks), {unexpected} unexpected")
    return lines


def cmd_verify(args) -> tuple[int, List[str]]:
    suites = _resolve_suites(args.suite)
    m_set = _int_list(args.m_set) if args.m_set else list(DEFAULT_M_SET)
    if any(m < 1 for m in m_set):
        raise UsageError("--m-set entries must be positive")
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    L = args.trunc if args.trunc is not None else _default_trunc()
    if L < 0:
        raise UsageError("--trunc must be nonnegative")
    try:
        reports = run_matrix(suites, args.n_max, m_set, L, jobs=args.jobs)
    except ResourceLimitError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        lines = [r.to_json() for r in reports]
    else:
        lines = _table_lines(reports)
    return (EXIT_OK if all_ok(reports) else EXIT_FAIL), lines


def _row(values) -> str:
    return " ".join(str(x) for x in values)


def _partition_text(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def cmd_bijection(args) -> tuple[int, List[str]]:
    if args.word is not None:
        w = _int_list(args.word) if args.word.strip() else []
        if any(x < 0 for x in w):
            raise UsageError("letters must be nonnegative")
        tr = trace(w)
        s, lam = tr.sigma, tr.lam
        lines = [
            f"w      = {_row(tr.w)}",
            f"wbar   = {_row(tr.wbar)}",
            f"sigma  = {_row(s)}",
            f"z      = {_row(tr.z)}",
            f"mu     = {_row(tr.mu)}",
            f"lambda = {_partition_text(lam)}",
            f"P1 max(w) = des(sigma) + len(lambda): {max(w, default=0)} = {des(s)} + {len(lam)}",
            f"P2 sum(w) = maj(sigma) + sum(lambda): {sum(w)} = {maj(s)} + {sum(lam)}",
            f"P3 coinv(w) = inv(sigma): {coinv(w)} = {inv(s)}",
        ]
        ok = all(check_properties(w)) and pair_to_word(s, lam) == tuple(w)
        return (EXIT_OK if ok else EXIT_FAIL), lines
    if args.exhaustive:
        if args.n is None or args.max_letter is None:
            raise UsageError("--exhaustive needs --n and --max-letter")
        if args.n < 0 or args.max_letter < 0:
            raise UsageError("--n and --max-letter must be nonnegative")
        seen = {}
        failures = 0
        count = 0
        for w in product(range(args.max_letter + 1), repeat=args.n):
            count += 1
            pair = word_to_pair(w)
            good = all(check_properties(w)) and pair_to_word(*pair) == w and pair not in seen
            seen[pair] = w
            failures += not good
        if failures:
            return EXIT_FAIL, [f"{count} words, {failures} failures"]
        return EXIT_OK, [f"{count} words, all pass"]
    raise UsageError("bijection needs --word or --n/--max-letter/--exhaustive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclomahonian",
                                     description="Cyclotomic Euler-Mahonian polynomials.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="print A_n(t,q,p), optionally at p = xi_m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--t1", action="store_true", help="set t = 1")
    p.add_argument("--q1", action="store_true", help="set q = 1")
    p.add_argument("--allow-n10", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append", default=[],
                   help="suite name, comma list, or 'all' (repeatable)")
    v.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    v.add_argument("--m-set", help="comma-separated moduli (default 1..6)")
    v.add_argument("--trunc", type=int, help=f"truncation order (default ${TRUNC_ENV} or 12)")
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.add_argument("--jobs", type=int, default=1)

    b = sub.add_parser("bijection", parents=[common], help="trace or sweep the word bijection")
    b.add_argument("--word", help="comma-separated letters")
    b.add_argument("--n", type=int)
    b.add_argument("--max-letter", type=int)
    b.add_argument("--exhaustive", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    handler = {"poly": cmd_poly, "verify": cmd_verify, "bijection": cmd_bijection}[args.command]
    try:
        code, lines = handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "".join(line + "\n" for line in lines)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
