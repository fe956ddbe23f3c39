"""``nt``: command-line front end.

Exit codes: 0 true or success, 1 false, 2 error. ``--json`` prints one
key-sorted object with ``command``, ``inputs``, ``result``, ``diagnostics``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from giuga import classify as cl
from giuga.arith import format_rational, parse_natural
from giuga.factor import (
    DEFAULT_BUDGET_MS,
    CacheError,
    FactorCache,
    GaveUp,
    cache_load,
    cache_store,
    default_cache,
    factor,
)
from giuga.known import GIUGA_NUMBERS
from giuga.powersum import power_sum_fast, power_sum_naive
from giuga.survey import DEFAULT_SEGMENT, build_lambda_table, count_k_carmichael
from giuga.totients import carmichael_lambda, euler_phi

NAIVE_CLI_LIMIT = 10**7


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    command: str
    inputs: dict[str, Any]
    result: Any
    diagnostics: dict[str, Any] = field(default_factory=dict)
    text: str | None = None

    @property
    def exit_code(self) -> int:
        if isinstance(self.result, bool):
            return 0 if self.result else 1
        return 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "diagnostics": self.diagnostics,
            },
            sort_keys=True,
        )

    def to_text(self) -> str:
        if self.text is not None:
            return self.text
        r = self.result
        head = str(r).lower() if isinstance(r, bool) else (
            " ".join(map(str, r)) if isinstance(r, list) else str(r)
        )
        lines = [head] + [f"{k}: {_plain(v)}" for k, v in sorted(self.diagnostics.items())]
        return "\n".join(lines) + "\n"


def _plain(v: Any) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def natural(text: str) -> int:
    try:
        return parse_natural(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def positive(text: str) -> int:
    v = natural(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def k_list(text: str) -> list[int]:
    return [positive(t) for t in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    with_cache = argparse.ArgumentParser(add_help=False, parents=[common])
    with_cache.add_argument("--cache", metavar="FILE")

    ap = _Parser(prog="nt", description="Giuga and k-Carmichael number tools.")
    ap.add_argument("--json", action="store_true", default=False)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="classify one number")
    kinds = check.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    g = kinds.add_parser("giuga", parents=[with_cache])
    g.add_argument("n", type=natural)
    g.add_argument("--evidence", action="store_true")
    g.add_argument("--bernoulli-limit", type=natural, default=cl.DEFAULT_BERNOULLI_LIMIT)
    c = kinds.add_parser("carmichael", parents=[with_cache])
    c.add_argument("n", type=natural)
    kc = kinds.add_parser("kcarmichael", parents=[with_cache])
    kc.add_argument("n", type=natural)
    kc.add_argument("--k", type=positive, required=True)
    ks = kinds.add_parser("kstrong", parents=[with_cache])
    ks.add_argument("n", type=natural)
    ks.add_argument("--k", type=positive, required=True)
    ks.add_argument("--oracle", action="store_true", help="evaluate the power sum term by term")
    sg = kinds.add_parser("strong-giuga", parents=[with_cache])
    sg.add_argument("n", type=natural)

    km = sub.add_parser("kmin", parents=[with_cache])
    km.add_argument("n", type=natural)
    kst = sub.add_parser("kset", parents=[with_cache])
    kst.add_argument("n", type=natural)
    kst.add_argument("--count", type=positive, required=True)
    fa = sub.add_parser("factor", parents=[with_cache])
    fa.add_argument("n", type=natural)
    fa.add_argument("--budget", type=positive, default=DEFAULT_BUDGET_MS, metavar="MS")
    ps = sub.add_parser("powersum", parents=[with_cache])
    ps.add_argument("n", type=natural)
    ps.add_argument("e", type=natural)
    ps.add_argument("--naive", action="store_true")
    sv = sub.add_parser("survey", parents=[common])
    sv.add_argument("--limit", type=natural, required=True)
    sv.add_argument("--k", type=k_list, required=True, dest="ks")
    sv.add_argument("--include-primes", action="store_true")
    sv.add_argument("--format", choices=("json", "csv"), default="json")
    sv.add_argument("--segment", type=positive, default=DEFAULT_SEGMENT)
    sv.add_argument("--workers", type=positive, default=1)
    tb = sub.add_parser("table")
    tables = tb.add_subparsers(dest="table", required=True, parser_class=_Parser)
    tg = tables.add_parser("giuga", parents=[with_cache])
    tg.add_argument("--format", choices=("json", "csv"), default="json")
    return ap


def _cache(args) -> FactorCache:
    cache = default_cache()
    path = getattr(args, "cache", None)
    if path:
        try:
            cache.update(cache_load(path))
        except FileNotFoundError:
            if args.command != "factor":
                raise
    return cache


def _factor(n: int, cache: FactorCache, budget: float = DEFAULT_BUDGET_MS):
    if n < 2:
        raise UsageError(f"n must be >= 2, got {n}")
    return factor(n, cache, budget)


def _composite(f) -> None:
    if f.is_prime:
        raise UsageError(f"{f.value} is prime; a composite is required")


def _basics(f) -> dict[str, Any]:
    return {
        "factorization": str(f),
        "lambda": carmichael_lambda(f),
        "phi": euler_phi(f),
        "k_min": cl.k_min(f),
        "square_free": f.is_square_free,
        "composite": not f.is_prime,
    }


def cmd_check(args) -> CommandResult:
    cache = _cache(args)
    f = _factor(args.n, cache)
    name = f"check {args.kind}"
    inputs: dict[str, Any] = {"n": args.n}
    diag = _basics(f)
    if args.kind == "giuga":
        verdict = cl.is_giuga(f)
        inputs["bernoulli_limit"] = args.bernoulli_limit
        if args.evidence and not f.is_prime:
            ev = cl.giuga_evidence(f, args.bernoulli_limit)
            diag["evidence"] = {
                k: ("skipped" if v is None else v) for k, v in ev.verdicts().items()
            }
            diag["evidence_agree"] = ev.agree
            if ev.diagnostic:
                diag["evidence_diagnostic"] = ev.diagnostic
    elif args.kind == "carmichael":
        verdict = cl.is_carmichael(f)
    elif args.kind == "kcarmichael":
        inputs["k"] = args.k
        verdict = cl.is_k_carmichael(f, args.k)
    elif args.kind == "kstrong":
        inputs.update(k=args.k, oracle=args.oracle)
        if args.oracle:
            congruence = cl.is_k_strong_giuga_def(args.n, args.k)
            diag["route"] = "definition"
        else:
            congruence = f.is_prime or (cl.is_giuga(f) and cl.is_k_carmichael(f, args.k))
            diag["route"] = "giuga_and_k_carmichael"
        diag["congruence"] = congruence
        # k-strong Giuga numbers are composite by definition
        verdict = congruence and not f.is_prime
    else:  # strong-giuga
        _composite(f)
        verdict = cl.is_strong_giuga(f)
    return CommandResult(name, inputs, verdict, diag)


def cmd_kmin(args) -> CommandResult:
    f = _factor(args.n, _cache(args))
    return CommandResult("kmin", {"n": args.n}, cl.k_min(f), _basics(f))


def cmd_kset(args) -> CommandResult:
    f = _factor(args.n, _cache(args))
    _composite(f)
    diag = _basics(f)
    diag["giuga"] = cl.is_giuga(f)
    return CommandResult("kset", {"n": args.n, "count": args.count}, cl.kset(f, args.count), diag)


def cmd_factor(args) -> CommandResult:
    cache = _cache(args)
    f = _factor(args.n, cache, args.budget)
    if args.cache:
        user = FactorCache()
        try:
            user = cache_load(args.cache)
        except FileNotFoundError:
            pass
        if f.value not in user:
            user.add(f)
            cache_store(user, args.cache)
    result = [[p, e] for p, e in f.factors]
    text = f"{f.value} = {f}\n"
    return CommandResult("factor", {"n": args.n}, result, {"factorization": str(f)}, text)


def cmd_powersum(args) -> CommandResult:
    inputs = {"n": args.n, "e": args.e, "naive": args.naive}
    if args.n < 2:
        raise UsageError("n must be >= 2")
    if args.naive:
        value = power_sum_naive(args.n, args.e, max_n=NAIVE_CLI_LIMIT)
        diag = {"route": "naive"}
    else:
        if args.e < 1:
            raise UsageError("the fast path needs e >= 1")
        f = _factor(args.n, _cache(args))
        value = power_sum_fast(f, args.e)
        diag = {"route": "crt", "factorization": str(f)}
    diag["is_minus_one"] = value == args.n - 1
    return CommandResult("powersum", inputs, value, diag)


def cmd_survey(args) -> CommandResult:
    table = build_lambda_table(args.limit)
    report = count_k_carmichael(
        table, args.ks, args.include_primes, args.segment, args.workers
    )
    data = report.to_json()
    inputs = {
        "limit": args.limit,
        "k": args.ks,
        "include_primes": args.include_primes,
        "segment": args.segment,
    }
    diag = {"ordering_ok": report.ordering_ok, "ratios": data["ratios"]}
    text = report.to_csv() if args.format == "csv" else json.dumps(data, sort_keys=True) + "\n"
    return CommandResult("survey", inputs, data["counts"], diag, text)


def giuga_table(cache: FactorCache) -> list[dict[str, Any]]:
    facs = [factor(g, cache) for g in GIUGA_NUMBERS]
    kmins = [cl.k_min(f) for f in facs]
    rows = []
    for i, (f, k) in enumerate(zip(facs, kmins), 1):
        members = [j for j, fj in enumerate(facs, 1) if cl.is_k_strong_giuga(fj, k)]
        rows.append(
            {
                "i": i,
                "n": f.value,
                "factorization": str(f),
                "lambda": carmichael_lambda(f),
                "phi": euler_phi(f),
                "k": k,
                "members": members,
            }
        )
    return rows


def cmd_table(args) -> CommandResult:
    rows = giuga_table(_cache(args))
    if args.format == "csv":
        lines = ["i,n,factorization,lambda,phi,k,members"]
        for r in rows:
            members = ";".join(map(str, r["members"]))
            lines.append(f"{r['i']},{r['n']},{r['factorization']},{r['lambda']},{r['phi']},{r['k']},{members}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(rows, sort_keys=True) + "\n"
    return CommandResult("table giuga", {}, rows, {}, text)


COMMANDS = {
    "check": cmd_check,
    "kmin": cmd_kmin,
    "kset": cmd_kset,
    "factor": cmd_factor,
    "powersum": cmd_powersum,
    "survey": cmd_survey,
    "table": cmd_table,
}


def run(argv: list[str]) -> tuple[CommandResult, bool]:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args), bool(getattr(args, "json", False))


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        result, as_json = run(argv)
    except (UsageError, CacheError, ValueError, MemoryError, OSError) as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n".replace("\n", " ").rstrip() + "\n")
        return 2
    except GaveUp as exc:
        stderr.write(f"error: GaveUp: {exc}; supply a --cache entry\n")
        return 2
    stdout.write(result.to_json() + "\n" if as_json else result.to_text())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
