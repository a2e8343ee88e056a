"""Acceptance gate: twelve criteria, one pass/fail line each.

The lines are printed as each criterion finishes (visible with ``-s``) and
collected again in the terminal summary of every pytest run.
"""

import itertools
import json
import math
import random
import time

import pytest

from capelli import arith
from capelli.admissible import admissible_spec, is_inadmissible_prime, membership
from capelli.cli import main
from capelli.errors import OracleBudgetExceeded
from capelli.criteria import Status, capelli2_reducible, condition_C, corollary_4_5_reduction, theorem_1_1_check
from capelli.oracle import factor_integers, factor_prime_field, is_irreducible, normalize
from capelli.poly import Polynomial, inflate, poly, resultant
from capelli.rings import GAUSSIAN, INTEGERS, GaussInt, prime_field
from capelli.witness import circulant_det, corollary_4_6_check, cyclotomic, extract_witness, verify_witness

from conftest import ACCEPTANCE, SWEEP_NS

Z = INTEGERS


def record(k, ok, detail):
    ACCEPTANCE[k] = (ok, detail)
    print(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_golden_example(capsys):
    t0 = time.perf_counter()
    F = factor_integers(poly("x^6-x^4-2*x^2-1"))
    factors = [(str(g), e) for g, e in F.factors]
    capsys.readouterr()
    code = main(["check", "--poly", "x^3-x^2-2*x-1", "--n", "2", "--json"])
    status = json.loads(capsys.readouterr().out)["result"]["status"]
    elapsed = time.perf_counter() - t0
    ok = (
        factors == [("x^3-x^2-1", 1), ("x^3+x^2+1", 1)]
        and F.unit == 1
        and code == 0
        and status == "criterion-silent"
        and elapsed < 1.0
    )
    record(1, ok, f"factors={factors} check={status} in {elapsed:.3f}s")


def test_criterion_02_soundness_sweep(corpus, oracle):
    t0 = time.perf_counter()
    claimed = silent = 0
    violations = []
    excluded = []
    for n in SWEEP_NS:
        for f in corpus:
            v = theorem_1_1_check(f, n)
            if v.status is not Status.IRREDUCIBLE_BY_CRITERION:
                silent += 1
                continue
            claimed += 1
            irr = oracle.inflated_irreducible(f, n)
            if irr is None:
                excluded.append((str(f), n))
            elif not irr:
                violations.append((str(f), n))
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 600
    record(
        2,
        ok,
        f"{len(corpus)} polys x {len(SWEEP_NS)} exponents: {claimed} claimed by the criterion, {silent} silent, "
        f"{len(violations)} violations, {len(excluded)} over budget excluded {excluded[:5]}, {elapsed:.1f}s",
    )


def test_criterion_03_capelli_equivalence():
    agree = total = 0
    excluded = 0
    mismatches = []
    for a in range(-50, 51):
        if a == 0:
            continue
        for n in range(2, 13):
            f = Polynomial(Z, [-a] + [0] * (n - 1) + [1])
            try:
                irr = is_irreducible(f, 20_000_000)
            except OracleBudgetExceeded:
                excluded += 1
                continue
            total += 1
            if (capelli2_reducible(a, 1, n) is None) == irr:
                agree += 1
            else:
                mismatches.append((a, n))
    record(3, agree == total and total > 0, f"{agree}/{total} agree, {excluded} over budget excluded, {mismatches[:5]}")


def _brute_inadmissible(R, a, b, p):
    return any(
        R.is_pth_power(R.mul(u, a), p) is not None and R.is_pth_power(R.mul(u, b), p) is not None for u in R.units()
    )


def _sample_int(rng):
    if rng.random() < 0.5:
        return rng.choice([1, -1]) * rng.randint(1, 12) ** rng.randint(1, 7)
    return rng.choice([1, -1]) * rng.randint(1, 10**6)


def _sample_gauss(rng, bound=200):
    r = math.isqrt(bound)
    while True:
        z = GaussInt(rng.randint(-r, r), rng.randint(-r, r))
        if 0 < z.norm() <= bound:
            return z


def _sample_gauss_power(rng, k):
    # u * z^k with norm still at most 200
    z = _sample_gauss(rng, math.floor(200 ** (1 / k) + 1e-9))
    return rng.choice(GAUSSIAN.units()) * z**k


def test_criterion_04_inadmissible_formula_vs_search():
    rng = random.Random(4)
    primes = (2, 3, 5, 7)
    agree = total = 0
    for _ in range(500):
        a, b = _sample_int(rng), _sample_int(rng)
        if rng.random() < 0.3:
            b = a * rng.choice([1, -1]) * rng.randint(1, 4) ** rng.choice(primes)
        for p in primes:
            total += 1
            agree += is_inadmissible_prime(a, b, p) == _brute_inadmissible(Z, a, b, p)
    for _ in range(200):
        if rng.random() < 0.4:
            k = rng.choice(primes)
            a, b = _sample_gauss_power(rng, k), _sample_gauss_power(rng, k)
        else:
            a, b = _sample_gauss(rng), _sample_gauss(rng)
        for p in primes:
            total += 1
            agree += is_inadmissible_prime(a, b, p, GAUSSIAN) == _brute_inadmissible(GAUSSIAN, a, b, p)
    record(4, agree == total, f"{agree}/{total} agree (500 pairs over Z, 200 over Z[i], p in {primes})")


def test_criterion_05_gaussian_golden():
    eight_i = GaussInt(0, 8)
    expected = [n for n in range(2, 31) if math.gcd(n, 6) == 1]
    bad = []
    for m in range(1, 7):
        spec = admissible_spec(m, 1, eight_i)
        members = [n for n in range(2, 31) if membership(n, spec)]
        if spec.inadmissible_primes != (2, 3) or spec.shape.value != "odd-only" or members != expected:
            bad.append((m, spec.inadmissible_primes, spec.shape.value, members))
    record(5, not bad, f"m in [1,6]: inadmissible {{2,3}}, odd-only, members {expected}; mismatches {bad}")


def test_criterion_06_membership_equals_condition(corpus):
    agree = total = 0
    for f in corpus:
        if f.degree != 2:
            continue
        spec = admissible_spec(2, f.lc, f.coeffs[0])
        for n in range(2, 25):
            total += 1
            agree += membership(n, spec) == condition_C(2, f.lc, f.coeffs[0], n).verdict
    record(6, agree == total and total > 0, f"{agree}/{total} agree over the degree-2 corpus, n in [2,24]")


def test_criterion_07_witnesses(corpus, oracle):
    reducible = witnessed = verified = p_irreducible = 0
    excluded = 0
    failures = []
    for n in (n for n in SWEEP_NS if n <= 8):
        for f in corpus:
            irr = oracle.inflated_irreducible(f, n)
            if irr is None:
                excluded += 1
                continue
            if irr:
                continue
            reducible += 1
            w = extract_witness(f, n, 20_000_000, verify_input=False)
            if w is None:
                failures.append((str(f), n, "no witness"))
                continue
            witnessed += 1
            if verify_witness(f, n, w):
                verified += 1
            else:
                failures.append((str(f), n, "verify"))
            if is_irreducible(w.P, 20_000_000):
                p_irreducible += 1
            else:
                failures.append((str(f), n, "P reducible"))
    ok = reducible > 0 and witnessed == verified == p_irreducible == reducible
    record(
        7,
        ok,
        f"{reducible} reducible instances (n <= 8): {witnessed} witnessed, {verified} verified, "
        f"{p_irreducible} with P irreducible, {excluded} over budget excluded, {failures[:5]}",
    )


def test_criterion_08_circulant_equals_resultant():
    rng = random.Random(8)
    agree = total = 0
    for _ in range(1000):
        p = rng.choice([2, 3, 5])
        cs = [rng.randint(-10**6, 10**6) for _ in range(p)]
        g = Polynomial(Z, cs)
        Yp1 = Polynomial(Z, [-1] + [0] * (p - 1) + [1])
        expected = Polynomial(Z, [resultant(Yp1, g)]) if not g.is_zero() else Polynomial(Z)
        total += 1
        agree += circulant_det([Polynomial(Z, [c]) for c in cs]) == expected
    record(8, agree == total, f"{agree}/{total} bit-exact")


def test_criterion_09_cyclotomic_counts():
    agree = total = 0
    bad = []
    for q in (2, 3, 5, 7):
        F = prime_field(q)
        for n in range(1, 13):
            if math.gcd(q, n) != 1:
                continue
            d = arith.multiplicative_order(q, n)
            phi = cyclotomic(n).phi_n
            fac = factor_prime_field(Polynomial(F, list(phi.coeffs)))
            total += 1
            if fac.degrees == [d] * (arith.euler_phi(n) // d) and all(e == 1 for _, e in fac.factors):
                agree += 1
            else:
                bad.append((n, q, fac.degrees))
    record(9, agree == total, f"{agree}/{total} (n <= 12, q in {{2,3,5,7}}) match phi(n)/d factors of degree d {bad}")


def test_criterion_10_reduction_to_small_exponents(corpus, oracle):
    agree = total = 0
    excluded = 0
    bad = []
    for n in (6, 8, 9, 12):
        for f in corpus:
            full = oracle.inflated_irreducible(f, n)
            parts = [oracle.inflated_irreducible(f, t) for t in corollary_4_5_reduction(n)]
            if full is None or None in parts:
                excluded += 1
                continue
            total += 1
            if (not full) == (not all(parts)):
                agree += 1
            else:
                bad.append((str(f), n))
    record(10, agree == total and total > 0, f"{agree}/{total} agree, {excluded} over budget excluded {bad[:5]}")


def test_criterion_11_frobenius_powers():
    checked = 0
    bad = []
    for q in (2, 3, 5):
        F = prime_field(q)
        for deg in (1, 2, 3):
            for tail in itertools.product(range(q), repeat=deg):
                for lc in range(1, q):
                    f = Polynomial(F, list(tail) + [lc])
                    if not is_irreducible(f):
                        continue
                    checked += 1
                    fac = factor_prime_field(inflate(f, q))
                    if fac.factors != ((normalize(f), q),) or not corollary_4_6_check(f):
                        bad.append((q, str(f)))
    record(11, not bad and checked > 0, f"{checked} irreducible f over F_2, F_3, F_5 with f(X^q) a q-th power; {bad[:5]}")


def test_criterion_12_schur_shaped():
    rng = random.Random(12)
    claimed = total = 0
    bad = []
    for m in range(2, 9):
        fm = math.factorial(m)
        for _ in range(10):
            a = [rng.randint(-5, 5) for _ in range(m)]
            cs = [fm] + [fm // math.factorial(k) * a[k] for k in range(1, m)] + [rng.choice([1, -1])]
            f = Polynomial(Z, cs)
            if not is_irreducible(f):
                continue
            for n in range(2, 13):
                total += 1
                if theorem_1_1_check(f, n).status is Status.IRREDUCIBLE_BY_CRITERION:
                    claimed += 1
                else:
                    bad.append((str(f), n))
    record(12, claimed == total and total > 0, f"{claimed}/{total} (m in [2,8], n in [2,12]) irreducible by criterion {bad[:3]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
