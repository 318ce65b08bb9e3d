"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Everything here is exact arithmetic; the stated time
budgets are hard limits.
"""

import math
import time

from charfactor.cyclotomic import zeta
from charfactor.perms import (BlockStructure, column_row_products,
                              is_column_row_product, symmetric_group)
from charfactor.characters import (coxeter_value, schur_at_point,
                                   schur_polynomial, twisted_numerator,
                                   twisted_vandermonde_closed,
                                   twisted_vandermonde_product)
from charfactor.weights import (dominant_weights, is_residue_balanced,
                                shifted_weight)
from charfactor.factorize import factorize, verify_numeric, verify_symbolic
from charfactor.cli import run_benchmark

import random


def report(name, ok, elapsed, budget=None):
    status = "PASS" if ok else "FAIL"
    suffix = f", budget {budget}s" if budget is not None else ""
    line = f"ACCEPTANCE {name}: {status} ({elapsed:.2f}s{suffix})"
    print(line)
    assert ok, line
    if budget is not None:
        assert elapsed < budget, f"{name} over budget: {elapsed:.2f}s >= {budget}s"


def test_criterion_1_denominator_formula():
    start = time.perf_counter()
    ok = True
    for m, n in ((2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3)):
        ok = ok and (twisted_vandermonde_product(m, n)
                     == twisted_vandermonde_closed(m, n))
    report("1 denominator direct == closed", ok,
           time.perf_counter() - start, budget=10)


def test_criterion_2_unbalanced_numerators_vanish():
    start = time.perf_counter()
    ok = True
    checked = 0
    for m, n in ((2, 2), (2, 3)):
        for lam in dominant_weights(m * n, 0, 3):
            shifted = shifted_weight(lam)
            if is_residue_balanced(shifted, m, n):
                continue
            checked += 1
            ok = ok and not twisted_numerator(shifted, m, n)
    assert checked > 0
    report(f"2 vanishing numerators ({checked} weights)", ok,
           time.perf_counter() - start, budget=60)


def test_criterion_3_main_factorization():
    start = time.perf_counter()
    ok = True
    checked = 0
    for m, n in ((2, 2), (3, 2), (2, 3)):
        for lam in dominant_weights(m * n, 0, 3):
            if not is_residue_balanced(shifted_weight(lam), m, n):
                continue
            checked += 1
            cert = factorize(lam, m, n)
            ok = ok and cert.balanced and cert.epsilon in (1, -1)
            sym_ok, scalar = verify_symbolic(cert)
            ok = ok and sym_ok and scalar is not None
            ok = ok and verify_numeric(cert, samples=5)
    # spot values
    ok = ok and factorize((0, 0, 0, 0), 2, 2).epsilon == 1
    spot = factorize((1, 1, 0, 0), 2, 2)
    ok = ok and spot.etas == ((1, 0), (0, 0)) and spot.epsilon == -1
    assert checked > 0
    report(f"3 main factorization ({checked} balanced weights)", ok,
           time.perf_counter() - start, budget=300)


def test_criterion_4_column_row_counts():
    start = time.perf_counter()
    ok = True
    for m, n, expected in ((2, 2, 16), (2, 3, 288), (3, 2, 288)):
        blocks = BlockStructure(m, n)
        members = {p for p in symmetric_group(m * n)
                   if is_column_row_product(p, blocks)}
        ok = ok and len(members) == expected
        ok = ok and expected == math.factorial(m) ** n * math.factorial(n) ** m
        ok = ok and members == column_row_products(blocks)
    report("4 column-row membership and counts", ok,
           time.perf_counter() - start, budget=10)


def test_criterion_5_coset_audit():
    from charfactor.factorize import coset_audit

    start = time.perf_counter()
    ok = True
    balanced = [lam for lam in dominant_weights(4, 0, 3)
                if is_residue_balanced(shifted_weight(lam), 2, 2)]
    assert len(balanced) >= 10
    for lam in balanced[:10]:
        rep = coset_audit(lam, 2, 2)
        ok = ok and rep.passed
        ok = ok and all(rep.constants[perm] == zeta(2, rep.omega_powers[perm])
                        for perm in rep.constants)
    sampled = coset_audit((1, 1, 1, 0, 0, 0), 2, 3, outside_sample=50)
    ok = ok and sampled.passed and sampled.tested_outside == 50
    ok = ok and all(sampled.constants[perm] == zeta(3, sampled.omega_powers[perm])
                    for perm in sampled.constants)
    report("5 coset vanishing and constants", ok,
           time.perf_counter() - start, budget=120)


def test_criterion_6_coxeter_range():
    start = time.perf_counter()
    ok = True
    checked = 0
    for size in range(2, 7):
        for lam in dominant_weights(size, 0, 4):
            checked += 1
            value = coxeter_value(lam)  # raises internally if out of range
            ok = ok and (value == 0 or value == 1 or value == -1)
    report(f"6 Coxeter-point range ({checked} weights)", ok,
           time.perf_counter() - start, budget=60)


def test_criterion_7_schur_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(20240801)
    ok = True
    checked = 0
    for size in range(1, 6):
        for lam in dominant_weights(size, 0, 3):
            poly = schur_polynomial(lam)
            for _ in range(20):
                point = [x for x in rng.sample(range(2, 98), size)]
                checked += 1
                ok = ok and poly.evaluate(point) == schur_at_point(lam, point)
    report(f"7 tableau == alternant-ratio ({checked} evaluations)", ok,
           time.perf_counter() - start, budget=60)


def test_criterion_8_bench_gate():
    start = time.perf_counter()
    ok = True
    lines = []
    for m, n, lam in ((2, 3, (1, 1, 1, 0, 0, 0)), (2, 4, (1,) * 4 + (0,) * 4)):
        rows, agreed = run_benchmark(m, n, lam, samples=3)
        ok = ok and agreed
        for row in rows:
            lines.append(
                f"  {row['m']},{row['n']},{row['lambda']},{row['method']},"
                f"{row['wall_ns_mean']},{row['wall_ns_min']},{row['checks_passed']}")
        direct = next(r for r in rows if r["method"] == "direct")
        factored = next(r for r in rows if r["method"] == "factored")
        speedup = direct["wall_ns_mean"] / max(factored["wall_ns_mean"], 1)
        lines.append(f"  speedup ({m},{n}): {speedup:.1f}x")
    print("bench timing table (m,n,lambda,method,wall_ns_mean,wall_ns_min,checks_passed):")
    for line in lines:
        print(line)
    report("8 bench exactness gate", ok, time.perf_counter() - start)
