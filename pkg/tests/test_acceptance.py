"""Acceptance gate: the twelve criteria at full size.

Each test records one PASS/FAIL line, printed in the "acceptance criteria"
section of the pytest summary. Run alone with

    pytest tests/test_acceptance.py -v
"""

import random
import sys
import time
from fractions import Fraction
from itertools import combinations, product

import pytest

from intdiff import ideals as I
from intdiff.action import acts_as_zero, apply_on_divided, word_on_divided, zero_oracle
from intdiff.algebra import (
    Mat,
    Operator,
    atom_mul,
    bounded_monomials,
    d,
    e,
    from_word,
    integral,
    monomial_mul,
    mul,
)
from intdiff.checks import bounded_centre, check_relations, left_annihilator_of_integral, span_equal
from intdiff.growth import filtration_dims, growth_slope
from intdiff.linalg import Echelon, det
from intdiff.quotient import BnElement, bn_mul, bn_unit_check, project_bn
from intdiff.units import global_det, is_unit, split_scalar_plus_f

from strategies import random_operator, random_word, rewrite_word
from test_cli import CASES, GOLDEN, run


def _elapsed(start):
    return f"{time.perf_counter() - start:.2f}s"


# 1 --------------------------------------------------------------------------------


def test_c01_relation_suite(criterion):
    atom_mul.cache_clear()
    monomial_mul.cache_clear()
    start = time.perf_counter()
    results = [ok for n in (1, 2, 3) for _, ok in check_relations(n)]
    seconds = time.perf_counter() - start
    ok = all(results) and seconds < 1.0
    criterion(1, "defining relations vanish for n=1,2,3 in < 1 s", ok, f"{len(results)} relations, {seconds:.3f}s")
    assert ok


# 2 --------------------------------------------------------------------------------


def test_c02_oracle_equivalence(criterion):
    rng = random.Random(20240602)
    start = time.perf_counter()
    disagreements, action_failures, zero_cases = 0, 0, 0
    trials = 10_000
    for _ in range(trials):
        n = rng.choice((1, 2))
        w = random_word(rng, n)
        partner = rewrite_word(rng, w) if rng.random() < 0.4 else random_word(rng, n)
        diff = from_word(n, w) - from_word(n, partner)
        oracle = zero_oracle(n, [(1, w), (-1, partner)])
        zero_cases += oracle
        disagreements += diff.is_zero() != oracle
        a = from_word(n, w)
        for beta in product(range(13), repeat=n):
            r = word_on_divided(w, beta)
            if apply_on_divided(a, beta) != ({r[1]: r[0]} if r else {}):
                action_failures += 1
                break
    ok = disagreements == 0 and action_failures == 0 and zero_cases > trials // 5
    criterion(
        2,
        "10,000 fuzzed words: zero test matches action oracle, actions agree up to exponent 12",
        ok,
        f"{disagreements} disagreements, {action_failures} action failures, {zero_cases} zero pairs, {_elapsed(start)}",
    )
    assert ok


# 3 --------------------------------------------------------------------------------


def test_c03_canonical_uniqueness(criterion):
    rng = random.Random(7)
    start = time.perf_counter()
    false_equalities, pairs = 0, 0
    for k in range(3000):
        n = 1 if k % 3 else 2
        a = random_operator(rng, n, bound=4, terms=rng.randint(1, 5))
        if k % 2:
            # near miss: perturb a single coefficient or monomial
            b = Operator(n, dict(a.terms))
            mono = rng.choice(list(a.terms)) if a.terms else tuple(Mat(0, 0) for _ in range(n))
            b = b + Operator(n, {mono: Fraction(rng.choice((-1, 1)), rng.randint(1, 3))})
        else:
            b = random_operator(rng, n, bound=4, terms=rng.randint(1, 5))
        if a == b:
            continue
        pairs += 1
        false_equalities += acts_as_zero(a - b)
    ok = false_equalities == 0 and pairs > 2500
    criterion(3, "distinct canonical forms act differently within the faithfulness bound", ok,
              f"{pairs} pairs, {false_equalities} false equalities, {_elapsed(start)}")
    assert ok


# 4 --------------------------------------------------------------------------------


def test_c04_ideal_counts(criterion):
    start = time.perf_counter()
    counts = {n: len(I.enumerate_ideals(n)) for n in (1, 2, 3, 4)}
    bounds_ok = all(I.dedekind_bounds(n)[0] <= c <= I.dedekind_bounds(n)[1] for n, c in counts.items())
    spec = {n: sum(I.is_prime(a) is not None for a in I.enumerate_ideals(n)) for n in (1, 2, 3, 4)}
    ok = counts == {1: 3, 2: 6, 3: 20, 4: 168} and bounds_ok and all(spec[n] == 2**n for n in spec)
    criterion(4, "ideal counts 3, 6, 20, 168 within the Dedekind bounds; |Spec| = 2^n", ok,
              f"counts {list(counts.values())}, primes {list(spec.values())}, {_elapsed(start)}")
    assert ok


# 5 --------------------------------------------------------------------------------


def _lattice_laws(n):
    all_ideals = I.enumerate_ideals(n)
    zero, whole, top, bottom = I.zero_ideal(n), I.whole_ideal(n), I.maximal_ideal(n), I.finite_matrices(n)
    for a, b in product(all_ideals, repeat=2):
        ab = I.ideal_product(a, b)
        if ab != I.ideal_product(b, a) or ab != I.ideal_intersect(a, b):
            return False
    if any(I.ideal_product(a, a) != a for a in all_ideals):
        return False
    for a, b, c in product(all_ideals, repeat=3):
        lhs = I.ideal_intersect(a, I.ideal_sum(b, c))
        if lhs != I.ideal_sum(I.ideal_intersect(a, b), I.ideal_intersect(a, c)):
            return False
    proper = [a for a in all_ideals if a != whole]
    maximal = [a for a in proper if not any(b != a and I.contains(b, a) for b in proper)]
    if maximal != [top]:
        return False
    return all(I.contains(a, bottom) for a in all_ideals if a != zero)


def test_c05_lattice_laws(criterion):
    start = time.perf_counter()
    ok = all(_lattice_laws(n) for n in (1, 2, 3))
    ok = ok and all(
        I.contains(a, I.finite_matrices(4)) for a in I.enumerate_ideals(4) if not a.is_zero()
    )
    criterion(5, "exhaustive lattice laws for n <= 3", ok, _elapsed(start))
    assert ok


# 6 --------------------------------------------------------------------------------


def _label_antichains(n):
    labels = I.all_primes(n)
    out = []
    for k in range(1, len(labels) + 1):
        for group in combinations(labels, k):
            if all(not (p <= q or q <= p) for p, q in combinations(group, 2)):
                out.append(frozenset(group))
    return out


def test_c06_unique_factorization(criterion):
    start = time.perf_counter()
    ok = True
    for n in (1, 2, 3, 4):
        for a in I.enumerate_ideals(n):
            if a.is_whole():
                continue
            parts = [I.prime_from_subset(n, s) for s in I.minimal_primes(a)]
            ok &= I.product_of(parts, n) == a == I.intersection_of(parts, n)
    for n in (1, 2, 3):
        groups = _label_antichains(n)
        for a in I.enumerate_ideals(n):
            if a.is_whole():
                continue
            matches = [g for g in groups if I.product_of([I.prime_from_subset(n, s) for s in g], n) == a]
            ok &= matches == [frozenset(I.minimal_primes(a))]
    criterion(6, "product of minimal primes reconstructs every ideal (n <= 4) and is unique (n <= 3)", ok,
              _elapsed(start))
    assert ok


# 7 --------------------------------------------------------------------------------


def _saturated_chain_count(n, p, q):
    """Chains p < ... < q through prime ideals where each step is a cover, found
    from ideal containment alone."""
    primes = {s: I.prime_from_subset(n, s) for s in I.all_primes(n)}
    lt = lambda u, v: u != v and I.contains(primes[v], primes[u])  # noqa: E731
    covers = {u: [v for v in primes if lt(u, v) and not any(lt(u, w) and lt(w, v) for w in primes)] for u in primes}

    def count(u):
        return 1 if u == q else sum(count(v) for v in covers[u] if lt(v, q) or v == q)

    return count(p)


def test_c07_catenarity(criterion):
    start = time.perf_counter()
    ok = True
    for n in (1, 2, 3, 4):
        labels = I.all_primes(n)
        for p, q in product(labels, repeat=2):
            if not p <= q:
                continue
            h, chains = I.height_and_chains(p, q)
            ok &= h == len(q) and all(len(c) - 1 == len(q) - len(p) for c in chains)
            ok &= len(chains) == _saturated_chain_count(n, p, q)
        ok &= I.longest_prime_chain(n) == n
    criterion(7, "catenarity and Krull length n for n <= 4", ok, _elapsed(start))
    assert ok


# 8 --------------------------------------------------------------------------------


def _random_scalar_plus_f(rng, size=8):
    lam = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 2))
    entries = {}
    for _ in range(rng.randint(1, 10)):
        entries[(rng.randrange(size), rng.randrange(size))] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    if rng.random() < 0.35:
        # force a singular block: some diagonal entry cancels lam and its row is otherwise empty
        r = rng.randrange(size)
        entries = {k: v for k, v in entries.items() if k[0] != r}
        entries[(r, r)] = -lam
    return lam + Operator(1, {(Mat(r, c),): v for (r, c), v in entries.items()})


def _action_det(a, size=8):
    """Determinant of a on divided powers x^[0..size-1], which a preserves;
    outside that block a acts as its nonzero scalar part."""
    m = [[Fraction(0)] * size for _ in range(size)]
    for col in range(size):
        for (row,), v in apply_on_divided(a, (col,)).items():
            m[row][col] = Fraction(v)
    return det(m)


def test_c08_units(criterion):
    rng = random.Random(88)
    start = time.perf_counter()
    mismatches = unverified = yes = 0
    for _ in range(1000):
        a = _random_scalar_plus_f(rng)
        r = is_unit(a)
        expected = _action_det(a) != 0
        mismatches += (r.status == "YES") != expected or r.status == "UNKNOWN"
        if r:
            yes += 1
            unverified += not (mul(a, r.inverse) == 1 and mul(r.inverse, a) == 1)
    bad_mult = 0
    for _ in range(200):
        u, v = _random_scalar_plus_f(rng, 5), _random_scalar_plus_f(rng, 5)
        (lu, fu), (lv, fv), (lw, fw) = split_scalar_plus_f(u), split_scalar_plus_f(v), split_scalar_plus_f(mul(u, v))
        bad_mult += global_det(lw, fw) != global_det(lu, fu) * global_det(lv, fv)
    ok = mismatches == 0 and unverified == 0 and bad_mult == 0 and 100 < yes < 900
    criterion(8, "1,000 fuzzed lam + f: decision matches det, inverses verified, det multiplicative", ok,
              f"{yes} units, {mismatches} mismatches, {bad_mult} det failures, {_elapsed(start)}")
    assert ok


# 9 --------------------------------------------------------------------------------


def test_c09_quotient(criterion):
    rng = random.Random(9)
    start = time.perf_counter()
    failures = 0
    for k in range(1000):
        n = 1 if k % 2 else 2
        a, b = random_operator(rng, n, bound=3), random_operator(rng, n, bound=3)
        failures += project_bn(mul(a, b)) != bn_mul(project_bn(a), project_bn(b))
        failures += (not project_bn(a).terms) != I.membership(a, I.maximal_ideal(n))
        mat_only = Operator(n, {m: c for m, c in a.terms.items() if any(at.is_mat for at in m)})
        failures += bool(project_bn(mat_only).terms)
    # bn_unit_check accepts lam d^alpha built from generator images, with the right data
    for _ in range(300):
        alpha = (rng.randint(-3, 3), rng.randint(-3, 3))
        lam = Fraction(rng.choice((-2, -1, 1, 3)), rng.randint(1, 3))
        word = Operator.scalar(2, lam)
        for i, s in enumerate(alpha, 1):
            g = d(2, i) if s > 0 else integral(2, i)
            for _ in range(abs(s)):
                word = mul(word, g)
        u = project_bn(word)
        got = bn_unit_check(u)
        failures += got != (lam, alpha)
        inv = BnElement.monomial((0, 0), tuple(-s for s in alpha), 1 / lam)
        failures += bn_mul(u, inv) != BnElement.scalar(2) or bn_mul(inv, u) != BnElement.scalar(2)
    # and rejects anything else
    for _ in range(300):
        u = project_bn(random_operator(rng, 2, bound=2, terms=3))
        terms = list(u.terms.items())
        is_monomial_unit = len(terms) == 1 and not any(terms[0][0][0])
        failures += (bn_unit_check(u) is not None) != is_monomial_unit
    ok = failures == 0
    criterion(9, "projection to B_n multiplicative, kernel is the maximal ideal, units are lam d^alpha", ok,
              f"{failures} failures, {_elapsed(start)}")
    assert ok


# 10 -------------------------------------------------------------------------------


def test_c10_gk_growth(criterion):
    start = time.perf_counter()
    dims = filtration_dims(1, 16)
    slope = growth_slope(dims, 8, 16)
    seconds = time.perf_counter() - start
    ok = 1.8 <= slope <= 2.2 and seconds < 60
    criterion(10, "filtration growth slope over i=8..16 in [1.8, 2.2]", ok,
              f"slope {slope:.4f}, dims {dims[-1]} at i=16, {seconds:.2f}s")
    assert ok


# 11 -------------------------------------------------------------------------------


def test_c11_bounded_solves(criterion):
    start = time.perf_counter()
    B = 10
    lann_ok = span_equal(1, left_annihilator_of_integral(B), [e(1, 1, k, 0) for k in range(B + 1)])
    centre_ok = bounded_centre(1, B) == [Operator.scalar(1)] and bounded_centre(2, B) == [Operator.scalar(2)]
    p, q = mul(integral(1, 1), d(1, 1)), e(1, 1, 0, 0)
    proj_ok = True
    left, right, whole = Echelon(), Echelon(), Echelon()
    for mono in bounded_monomials(1, B):
        a = Operator(1, {mono: 1})
        ap, aq = mul(a, p), mul(a, q)
        proj_ok &= ap + aq == a and mul(ap, p) == ap and mul(aq, q) == aq
        proj_ok &= mul(ap, q).is_zero() and mul(aq, p).is_zero()
        left.add(ap.terms)
        right.add(aq.terms)
        whole.add(ap.terms)
        whole.add(aq.terms)
    proj_ok &= whole.rank == left.rank + right.rank
    ok = lann_ok and centre_ok and proj_ok
    criterion(11, "B=10: lann(int) = span e_k0, centre = scalars (n=1,2), right projections split I_1", ok,
              f"lann {lann_ok}, centre {centre_ok}, projections {proj_ok}, {_elapsed(start)}")
    assert ok


# 12 -------------------------------------------------------------------------------


ERROR_CASES = [
    (["norm", "-n", "1", "d2"], 1),
    (["norm", "-n", "1", "(d1"], 1),
    (["ideal", "-n", "2", "prod", "{0x}", "{10}"], 1),
    (["bogus"], 1),
    (["dedekind", "6"], 2),
    (["ideal", "-n", "2", "prod", "{011}", "{10}"], 2),
    (["gk", "2", "9"], 2),
]


def test_c12_cli_golden(criterion):
    mismatched = []
    for name, argv in CASES:
        for suffix, extra in ((".txt", []), (".json", ["--json"])):
            code, out, _ = run(extra + argv)
            if code != 0 or out != (GOLDEN / f"{name}{suffix}").read_text():
                mismatched.append(name + suffix)
    wrong_codes = [argv for argv, code in ERROR_CASES if run(argv)[0] != code or run(["--json"] + argv)[0] != code]
    ok = not mismatched and not wrong_codes
    criterion(12, "CLI golden files (text and JSON) and documented exit codes", ok,
              f"{2 * len(CASES)} golden files, {len(mismatched)} mismatches, {len(wrong_codes)} wrong exit codes")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
