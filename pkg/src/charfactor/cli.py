"""Command line frontend: certificates, identity checks, coset audits,
batch sweeps, and a micro benchmark of direct versus factored evaluation.

Exit codes: 0 all checks pass, 1 input error or failed check, 2 instance
too large for exact enumeration, 3 vanishing certificate (a valid answer).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from statistics import mean

from .cyclotomic import Cyclotomic
from .perms import DEFAULT_ENUMERATION_BOUND, EnumerationTooLarge
from .characters import (schur_at_point, coxeter_value, twisted_numerator,
                         twisted_vandermonde_closed, twisted_vandermonde_product)
from .weights import shifted_weight
from .factorize import (DEFAULT_SEED, coset_audit, factorize,
                        random_regular_point, twisted_point,
                        vanishes_numerically, verify_numeric, verify_symbolic)

EXIT_PASS = 0
EXIT_INPUT = 1
EXIT_BOUND = 2
EXIT_VANISHING = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for the
    # enumeration bound here, so remap usage problems to the input code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parse_weight(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight list: {text!r}")


def _resolve_bound(args):
    if args.bound is not None:
        return args.bound
    env = os.environ.get("CHARFACTOR_BOUND")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"CHARFACTOR_BOUND is not an integer: {env!r}")
    return DEFAULT_ENUMERATION_BOUND


def _emit(args, default):
    fmt = args.emit or default
    return fmt


def _write(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_factor(args):
    lam = _parse_weight(args.lam)
    cert = factorize(lam, args.m, args.n, bound=_resolve_bound(args))
    if _emit(args, "json") != "json":
        raise ValueError("factor supports --emit json only")
    _write(args, json.dumps(cert.to_dict(), indent=2))
    return EXIT_PASS if cert.balanced else EXIT_VANISHING


def cmd_verify(args):
    lam = _parse_weight(args.lam)
    bound = _resolve_bound(args)
    fmt = _emit(args, "json")
    if fmt == "csv":
        raise ValueError("verify supports --emit json or poly")
    cert = factorize(lam, args.m, args.n, bound=bound)
    if not cert.balanced:
        ok = vanishes_numerically(lam, args.m, args.n,
                                  samples=args.samples, seed=args.seed)
        if fmt == "poly":
            numerator = twisted_numerator(shifted_weight(lam), args.m, args.n,
                                          bound=bound)
            _write(args, f"numerator: {numerator}\n"
                         f"vanishing: {'pass' if ok else 'fail'}")
        else:
            report = {
                "certificate": cert.to_dict(),
                "checks": [{"check": "vanishing-at-samples",
                            "samples": args.samples, "pass": ok}],
            }
            _write(args, json.dumps(report, indent=2))
        return EXIT_VANISHING if ok else EXIT_INPUT
    sym_ok, scalar = verify_symbolic(cert, bound=bound)
    num_ok = verify_numeric(cert, samples=args.samples, seed=args.seed)
    if fmt == "poly":
        lines = [
            f"numerator: {twisted_numerator(cert.mu, args.m, args.n, bound=bound)}",
            f"scalar: {scalar}" if scalar is not None else "scalar: none",
            f"symbolic: {'pass' if sym_ok else 'fail'}",
            f"numeric: {'pass' if num_ok else 'fail'}",
        ]
        _write(args, "\n".join(lines))
    else:
        report = {
            "certificate": cert.to_dict(),
            "checks": [
                {"check": "symbolic-scalar", "pass": sym_ok,
                 "scalar": str(scalar) if scalar is not None else None},
                {"check": "numeric-samples", "samples": args.samples, "pass": num_ok},
            ],
        }
        _write(args, json.dumps(report, indent=2))
    return EXIT_PASS if sym_ok and num_ok else EXIT_INPUT


def cmd_denom_check(args):
    fmt = _emit(args, "json")
    if fmt == "csv":
        raise ValueError("denom-check supports --emit json or poly")
    direct = twisted_vandermonde_product(args.m, args.n)
    closed = twisted_vandermonde_closed(args.m, args.n)
    match = direct == closed
    if fmt == "poly":
        _write(args, f"direct: {direct}\nclosed: {closed}\nmatch: {match}")
    else:
        _write(args, json.dumps({"m": args.m, "n": args.n, "match": match}, indent=2))
    return EXIT_PASS if match else EXIT_INPUT


def cmd_coset_audit(args):
    lam = _parse_weight(args.lam)
    report = coset_audit(lam, args.m, args.n,
                         outside_sample=args.outside_sample,
                         seed=args.seed, bound=_resolve_bound(args))
    if _emit(args, "json") != "json":
        raise ValueError("coset-audit supports --emit json only")
    _write(args, json.dumps(report.to_dict(), indent=2))
    return EXIT_PASS if report.passed else EXIT_INPUT


def cmd_coxeter(args):
    lam = _parse_weight(args.lam)
    value = coxeter_value(lam)
    payload = {"lambda": list(lam), "order": len(lam),
               "value": int(value.as_fraction())}
    if _emit(args, "json") != "json":
        raise ValueError("coxeter supports --emit json only")
    _write(args, json.dumps(payload, indent=2))
    return EXIT_PASS


def run_benchmark(m, n, lam, samples=3, seed=DEFAULT_SEED,
                  bound=DEFAULT_ENUMERATION_BOUND):
    """Time direct evaluation against factored evaluation on shared points;
    returns (csv rows, all results identical)."""
    cert = factorize(lam, m, n, bound=bound)
    if not cert.balanced:
        raise ValueError("benchmark needs a balanced weight")
    rng = random.Random(seed)
    points = [random_regular_point(rng, m, n) for _ in range(samples)]
    direct_ns = []
    factored_ns = []
    checks = 0
    for t in points:
        coords = twisted_point(t, n)
        start = time.perf_counter_ns()
        direct = schur_at_point(cert.lam, coords)
        direct_ns.append(time.perf_counter_ns() - start)
        powers = [x ** n for x in t]
        start = time.perf_counter_ns()
        factored = Cyclotomic.rational(cert.epsilon)
        for eta in cert.etas:
            factored = factored * schur_at_point(eta, powers)
        factored_ns.append(time.perf_counter_ns() - start)
        if direct == factored:
            checks += 1
    lam_text = " ".join(str(x) for x in lam)
    rows = [
        {"m": m, "n": n, "lambda": lam_text, "method": "direct",
         "wall_ns_mean": int(mean(direct_ns)), "wall_ns_min": min(direct_ns),
         "checks_passed": checks},
        {"m": m, "n": n, "lambda": lam_text, "method": "factored",
         "wall_ns_mean": int(mean(factored_ns)), "wall_ns_min": min(factored_ns),
         "checks_passed": checks},
    ]
    return rows, checks == len(points)


BENCH_FIELDS = ["m", "n", "lambda", "method",
                "wall_ns_mean", "wall_ns_min", "checks_passed"]


def _rows_to_csv(rows, fields):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fields)
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def cmd_bench(args):
    lam = _parse_weight(args.lam)
    bound = _resolve_bound(args)
    cert = factorize(lam, args.m, args.n, bound=bound)
    if not cert.balanced:
        _write(args, json.dumps(cert.to_dict(), indent=2))
        return EXIT_VANISHING
    rows, ok = run_benchmark(args.m, args.n, lam, samples=args.samples,
                             seed=args.seed, bound=bound)
    fmt = _emit(args, "csv")
    if fmt == "json":
        _write(args, json.dumps(rows, indent=2))
    elif fmt == "csv":
        _write(args, _rows_to_csv(rows, BENCH_FIELDS))
    else:
        raise ValueError("bench supports --emit csv or json")
    return EXIT_PASS if ok else EXIT_INPUT


def _sweep_one(packed):
    lam, m, n, samples, seed, bound = packed
    cert = factorize(lam, m, n, bound=bound)
    if cert.balanced:
        ok = verify_numeric(cert, samples=samples, seed=seed)
        return {"lambda": list(lam), "balanced": True,
                "epsilon": cert.epsilon, "check_passed": ok}
    ok = vanishes_numerically(lam, m, n, samples=samples, seed=seed)
    return {"lambda": list(lam), "balanced": False,
            "epsilon": None, "check_passed": ok}


def cmd_sweep(args):
    from .weights import dominant_weights

    bound = _resolve_bound(args)
    lams = sorted(dominant_weights(args.m * args.n, args.low, args.high))
    packed = [(lam, args.m, args.n, args.samples, args.seed, bound)
              for lam in lams]
    if args.jobs > 1 and packed:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_one, packed))
    else:
        rows = [_sweep_one(p) for p in packed]
    summary = {
        "total": len(rows),
        "balanced": sum(r["balanced"] for r in rows),
        "vanishing": sum(not r["balanced"] for r in rows),
        "failed": sum(not r["check_passed"] for r in rows),
    }
    fmt = _emit(args, "json")
    if fmt == "csv":
        fields = ["lambda", "balanced", "epsilon", "check_passed"]
        flat = [dict(r, **{"lambda": " ".join(str(x) for x in r["lambda"])})
                for r in rows]
        _write(args, _rows_to_csv(flat, fields))
    elif fmt == "json":
        _write(args, json.dumps({"summary": summary, "rows": rows}, indent=2))
    else:
        raise ValueError("sweep supports --emit json or csv")
    return EXIT_PASS if summary["failed"] == 0 else EXIT_INPUT


def build_parser():
    parser = _Parser(prog="charfactor",
                     description="Exact factorization of twisted-point "
                                 "character values, with verifiers and a benchmark.")
    common = _Parser(add_help=False)
    common.add_argument("--output", default=None,
                        help="write the report to this path instead of stdout")
    common.add_argument("--emit", choices=["json", "poly", "csv"], default=None,
                        help="output format (per-command default)")
    common.add_argument("--bound", type=int, default=None,
                        help="enumeration bound on m*n (default 9; "
                             "env CHARFACTOR_BOUND)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for sample-point drawing")

    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, weight=True, mn=True, samples=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        if mn:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        if weight:
            p.add_argument("--lambda", dest="lam", required=True,
                           help="comma-separated weakly decreasing integers")
        if samples:
            p.add_argument("--samples", type=int, default=5)
        p.set_defaults(func=func)
        return p

    add("factor", cmd_factor, "emit the factorization certificate")
    add("verify", cmd_verify, "check a certificate symbolically and numerically",
        samples=True)
    add("denom-check", cmd_denom_check,
        "compare the direct and factored twisted Vandermonde", weight=False)
    audit = add("coset-audit", cmd_coset_audit,
                "audit vanishing cosets and column constants")
    audit.add_argument("--outside-sample", type=int, default=None,
                       help="sample this many vanishing cosets instead of all")
    cox = sub.add_parser("coxeter", parents=[common],
                         help="character value at the primitive-root point")
    cox.add_argument("--lambda", dest="lam", required=True)
    cox.set_defaults(func=cmd_coxeter)
    add("bench", cmd_bench, "time direct vs factored evaluation", samples=True)
    sweep = sub.add_parser("sweep", parents=[common],
                           help="factorize and verify every dominant weight in a range")
    sweep.add_argument("--m", type=int, required=True)
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--min", dest="low", type=int, required=True)
    sweep.add_argument("--max", dest="high", type=int, required=True)
    sweep.add_argument("--samples", type=int, default=5)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except EnumerationTooLarge as exc:
        print(f"error: instance too large for exact enumeration ({exc})",
              file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
