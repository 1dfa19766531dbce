"""Command-line surface: polynomial parsing/rendering, subcommands, and
CSV/JSON emission.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
All errors go to stderr as one line of JSON {"error": ..., "detail": ...}.
CSV numeric fields use repr (shortest round-trip, full precision); JSON
objects keep a fixed key order so runs diff cleanly.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from .bhconstant import (
    DEFAULT_TRUNCATION,
    bh_integral,
    empirical_prime_count,
    hardy_littlewood_constant,
    pnk,
)
from .experiments import (
    SamplerConfig,
    distribution,
    richest,
    sample_polynomial,
    scan_max,
    scan_means,
    set_workers,
    verify_burnside,
    verify_chebotarev,
    verify_field_mean,
)
from .finitefield import count_roots_enumeration, nroots_array
from .intpoly import IntPoly
from .irreducibility import is_irreducible
from .permgroup import parse_generators
from .primes import primes_upto


class PolyParseError(ValueError):
    """Syntax error in a polynomial expression, with a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def _skip_ws(s: str, i: int) -> int:
    while i < len(s) and s[i].isspace():
        i += 1
    return i


def _read_int(s: str, i: int) -> tuple[int, int]:
    j = i
    while j < len(s) and s[j].isdigit():
        j += 1
    if j == i:
        raise PolyParseError("expected an integer", i)
    return int(s[i:j]), j


def _read_var(s: str, i: int) -> tuple[int, int]:
    """Parse x[^k] starting at i; returns (exponent, next position)."""
    i += 1  # past 'x'
    i = _skip_ws(s, i)
    if i < len(s) and s[i] == "^":
        i = _skip_ws(s, i + 1)
        e, i = _read_int(s, i)
        return e, i
    return 1, i


def parse_poly(text: str) -> IntPoly:
    """Parse a polynomial expression like "x^2 - 2619*x + 1291", or a
    comma-separated ascending coefficient list like "1291,-2619,1".

    Monomials of equal degree are summed; whitespace is ignored.
    """
    if "," in text:
        try:
            return IntPoly(int(t.strip()) for t in text.split(","))
        except ValueError as exc:
            raise PolyParseError(f"bad coefficient list: {exc}", 0) from None
    s = text
    i = _skip_ws(s, 0)
    if i == len(s):
        raise PolyParseError("empty polynomial", 0)
    coeffs: dict[int, int] = {}
    first = True
    while i < len(s):
        sign = 1
        i = _skip_ws(s, i)
        if i < len(s) and s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i = _skip_ws(s, i + 1)
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms", i)
        first = False
        if i >= len(s):
            raise PolyParseError("dangling sign", i)
        if s[i] == "x":
            exp, i = _read_var(s, i)
            coeff = sign
        elif s[i].isdigit():
            coeff, i = _read_int(s, i)
            coeff *= sign
            exp = 0
            j = _skip_ws(s, i)
            if j < len(s) and s[j] == "*":
                j = _skip_ws(s, j + 1)
                if j >= len(s) or s[j] != "x":
                    raise PolyParseError("expected 'x' after '*'", j)
                exp, i = _read_var(s, j)
            elif j < len(s) and s[j] == "x":
                exp, i = _read_var(s, j)
        else:
            raise PolyParseError(f"unexpected character {s[i]!r}", i)
        coeffs[exp] = coeffs.get(exp, 0) + coeff
        i = _skip_ws(s, i)
    if not coeffs:
        raise PolyParseError("empty polynomial", 0)
    top = max(coeffs)
    return IntPoly([coeffs.get(k, 0) for k in range(top + 1)])


def render_poly(f: IntPoly) -> str:
    """Canonical descending-degree rendering; parse_poly round-trips it."""
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for exp in range(f.degree, -1, -1):
        c = f.coeffs[exp]
        if c == 0:
            continue
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        elif exp == 1:
            body = "x" if mag == 1 else f"{mag}*x"
        else:
            body = f"x^{exp}" if mag == 1 else f"{mag}*x^{exp}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _emit_error(error: str, detail: str = "") -> None:
    sys.stderr.write(json.dumps({"error": error, "detail": detail}) + "\n")


def _print_json(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([repr(v) if isinstance(v, float) else v for v in row])


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_degrees(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",") if t.strip()]


def _constant_payload(polys: list[IntPoly], K: int) -> dict:
    res = hardy_littlewood_constant(polys, K)
    return {
        "polys": [render_poly(f) for f in polys],
        "degree_product": res.D,
        "m": res.m,
        "truncation": res.truncation_K,
        "C": res.C,
        "C_over_D": res.C_over_D,
        "bunyakovsky_failure_prime": res.bunyakovsky_failure,
        "irreducible": [bool(is_irreducible(f)) for f in polys],
    }


def _cmd_constant(args) -> int:
    polys = [parse_poly(t) for t in args.poly]
    _print_json(_constant_payload(polys, args.primes))
    return 0


def _cmd_pnk(args) -> int:
    f = pnk(args.n, args.k)
    _print_json(_constant_payload([f], args.primes))
    return 0


def _cmd_means(args) -> int:
    header = [
        "degree", "samples_kept", "reducible_discarded", "mean_all",
        "bunyakovsky_mean", "bunyakovsky_log_mean", "fail_rate", "primes",
        "coeff_bound", "seed",
    ]
    rows = []
    for degree in _parse_degrees(args.degrees):
        cfg = SamplerConfig(degree, args.coeff_bound, True, args.seed)
        r = scan_means(cfg, args.samples, args.primes)
        rows.append([
            r.degree, r.samples_kept, r.reducible_discarded, r.mean_all,
            r.bunyakovsky_mean, r.bunyakovsky_log_mean, r.bunyakovsky_fail_rate,
            r.truncation_K, r.coeff_bound, r.master_seed,
        ])
    _write_csv(args.out, header, rows)
    _print_json({"written": args.out, "rows": len(rows), "samples": args.samples, "seed": args.seed})
    return 0


def _cmd_distribution(args) -> int:
    cfg = SamplerConfig(args.degree, args.coeff_bound, True, args.seed)
    r = distribution(cfg, args.samples, args.primes, args.bins, args.of)
    if args.hist:
        edges = r.histogram.bin_edges
        _write_csv(
            args.hist, ["bin_left", "bin_right", "count"],
            [[edges[i], edges[i + 1], c] for i, c in enumerate(r.histogram.counts)],
        )
    if args.qq:
        _write_csv(
            args.qq, ["theoretical", "empirical"],
            [[float(t), float(e)] for t, e in zip(r.qq.theoretical, r.qq.empirical)],
        )
    summary = {
        "quantity": "ln(C/D)" if r.quantity == "cd" else "ln(C)",
        "degree": r.degree,
        "samples": r.samples,
        "n_bunyakovsky": r.n_bunyakovsky,
        "reducible_discarded": r.reducible_discarded,
        "truncation": r.truncation_K,
        "coeff_bound": r.coeff_bound,
        "seed": r.master_seed,
        "mean": r.summary.mean,
        "variance": r.summary.variance,
        "skewness": r.summary.skewness,
        "excess_kurtosis": r.summary.excess_kurtosis,
        "min": r.summary.min,
        "max": r.summary.max,
        "qq_correlation": r.qq.correlation,
    }
    if args.summary:
        with open(args.summary, "w") as fh:
            json.dump(summary, fh, indent=2)
            fh.write("\n")
    _print_json(summary)
    return 0


def _cmd_richest(args) -> int:
    cfg = SamplerConfig(args.degree, args.coeff_bound, True, args.seed)
    include = [parse_poly(t) for t in args.include] if args.include else []
    records = richest(cfg, args.samples, args.primes, args.top, include)
    _write_csv(
        args.out,
        ["rank", "C", "C_over_D", "coeffs_ascending", "constant_lpf"],
        [
            [i + 1, r.C, r.C_over_D, ";".join(str(c) for c in r.coeffs),
             r.constant_term_least_prime_factor]
            for i, r in enumerate(records)
        ],
    )
    _print_json({
        "written": args.out, "top": len(records), "samples": args.samples,
        "coeff_bound": args.coeff_bound, "truncation": args.primes, "seed": args.seed,
    })
    return 0


def _cmd_scan_max(args) -> int:
    bounds = [int(t) for t in args.bounds.split(",") if t.strip()]
    pairs = scan_max(args.degree, bounds, args.samples, args.primes, args.seed)
    _write_csv(
        args.out,
        ["coeff_bound", "max_C", "samples", "primes", "seed"],
        [[n, c, args.samples, args.primes, args.seed] for n, c in pairs],
    )
    _print_json({"written": args.out, "rows": len(pairs), "seed": args.seed})
    return 0


def _cmd_count(args) -> int:
    polys = [parse_poly(t) for t in args.poly]
    r = empirical_prime_count(polys, args.x, args.primes)
    ratio = r.count / r.predicted if r.predicted else math.inf
    _print_json({"count": r.count, "predicted": r.predicted, "ratio": ratio})
    return 0


def _cmd_verify_field_mean(args) -> int:
    r = verify_field_mean(args.p, args.degree)
    _print_json({
        "check": "field-mean", "p": r.p, "degree": r.degree,
        "total_roots": r.total_roots, "expected": r.expected, "pass": r.passed,
    })
    return 0 if r.passed else 1


def _cmd_verify_burnside(args) -> int:
    gens = parse_generators(args.gens)
    r = verify_burnside(gens)
    _print_json({
        "check": "burnside", "transitive": r.transitive,
        "average": str(r.average), "average_float": float(r.average),
        "order": r.order, "pass": r.passed,
    })
    return 0 if r.passed else 1


def _cmd_verify_chebotarev(args) -> int:
    f = parse_poly(args.poly)
    r = verify_chebotarev(f, args.x)
    passed = r.deviation <= args.tolerance
    _print_json({
        "check": "chebotarev", "poly": render_poly(f), "x": args.x,
        "average": r.average, "deviation": r.deviation,
        "tolerance": args.tolerance, "pass": passed,
    })
    return 0 if passed else 1


def _cmd_verify_rootcount(args) -> int:
    ps = primes_upto(997).primes.astype(np.int64)
    mismatches = 0
    for index in range(args.trials):
        degree = 2 + index % 7
        cfg = SamplerConfig(degree, 10**4, True, args.seed)
        f = sample_polynomial(cfg, index)
        ns = nroots_array(f, ps)
        for p, n in zip(ps, ns):
            if count_roots_enumeration(f, int(p)) != int(n):
                mismatches += 1
    _print_json({
        "check": "rootcount", "trials": args.trials, "primes_upto": 997,
        "mismatches": mismatches, "pass": mismatches == 0,
    })
    return 0 if mismatches == 0 else 1


def _build_parser() -> _Parser:
    top = _Parser(prog="batemanhorn", description=__doc__)
    top.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                     help="kernel thread count (results never depend on it)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constant", help="truncated C for one or more polynomials")
    p.add_argument("--poly", action="append", required=True)
    p.add_argument("--primes", type=int, default=DEFAULT_TRUNCATION)
    p.set_defaults(func=_cmd_constant)

    p = sub.add_parser("pnk", help="C of 1 + primorial(n) x^k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--primes", type=int, default=DEFAULT_TRUNCATION)
    p.set_defaults(func=_cmd_pnk)

    p = sub.add_parser("means", help="means of C over random polynomials, per degree")
    p.add_argument("--degrees", required=True, help="e.g. 2..8 or 2,3,5")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=1000)
    p.add_argument("--primes", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_means)

    p = sub.add_parser("distribution", help="log-normality diagnostics of C")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--primes", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--coeff-bound", type=int, default=1000)
    p.add_argument("--of", choices=("c", "cd"), default="cd")
    p.add_argument("--hist")
    p.add_argument("--qq")
    p.add_argument("--summary")
    p.set_defaults(func=_cmd_distribution)

    p = sub.add_parser("richest", help="most prime-rich sampled polynomials")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--samples", type=int, default=5000)
    p.add_argument("--coeff-bound", type=int, default=5000)
    p.add_argument("--top", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--primes", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--include", action="append",
                   help="extra candidate polynomial (repeatable)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_richest)

    p = sub.add_parser("scan-max", help="max C per coefficient bound")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bounds", required=True, help="e.g. 100,1000,10000")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--primes", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_scan_max)

    p = sub.add_parser("count", help="actual prime count vs the predicted density")
    p.add_argument("--poly", action="append", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--primes", type=int, default=DEFAULT_TRUNCATION)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="lemma and oracle verification checks")
    vsub = p.add_subparsers(dest="check", required=True)

    v = vsub.add_parser("field-mean")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--degree", type=int, required=True)
    v.set_defaults(func=_cmd_verify_field_mean)

    v = vsub.add_parser("burnside")
    v.add_argument("--gens", required=True, help='e.g. "(0 1), (0 1 2)"')
    v.set_defaults(func=_cmd_verify_burnside)

    v = vsub.add_parser("chebotarev")
    v.add_argument("--poly", required=True)
    v.add_argument("--x", type=int, required=True)
    v.add_argument("--tolerance", type=float, default=0.05)
    v.set_defaults(func=_cmd_verify_chebotarev)

    v = vsub.add_parser("rootcount")
    v.add_argument("--trials", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=_cmd_verify_rootcount)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        _emit_error("usage", str(exc))
        return 2
    try:
        set_workers(args.workers)
        return args.func(args)
    except PolyParseError as exc:
        _emit_error("parse", str(exc))
        return 2
    except (ValueError, OSError) as exc:
        _emit_error("invalid", str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
