"""Finite checks of structural facts about I_n: defining relations, and
characterizations that reduce to exact linear solves on a bounded-support
subspace (all monomials whose indices are at most B)."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .algebra import (
    Operator,
    bounded_monomials,
    commutator,
    d,
    e,
    generator,
    integral,
    monomial_degree,
    monomial_mul,
    mul,
    H,
)
from .linalg import Echelon, kernel


def defining_relations(n: int) -> list[tuple[str, Operator, Operator]]:
    """(name, lhs, rhs) for every defining relation of I_n."""
    rels = []
    one = Operator.scalar(n)
    for i in range(1, n + 1):
        di, ii, hi = d(n, i), integral(n, i), H(n, i)
        idem = one - mul(ii, di)
        rels += [
            (f"d{i} int{i} = 1", mul(di, ii), one),
            (f"[H{i}, int{i}] = int{i}", commutator(hi, ii), ii),
            (f"[H{i}, d{i}] = -d{i}", commutator(hi, di), -di),
            (f"H{i} (1 - int{i} d{i}) = 1 - int{i} d{i}", mul(hi, idem), idem),
            (f"(1 - int{i} d{i}) H{i} = 1 - int{i} d{i}", mul(idem, hi), idem),
        ]
    for i, j in combinations(range(1, n + 1), 2):
        for ka, kb in product(("d", "int", "H"), repeat=2):
            a, b = generator(n, ka, i), generator(n, kb, j)
            rels.append((f"[{ka}{i}, {kb}{j}] = 0", commutator(a, b), Operator.zero(n)))
    return rels


def check_relations(n: int) -> list[tuple[str, bool]]:
    return [(name, (lhs - rhs).is_zero()) for name, lhs, rhs in defining_relations(n)]


def one_sided_inverse_relations(n: int) -> list[tuple[str, bool]]:
    """Relations of the algebra of one-sided inverses under x_i -> int_i, y_i -> d_i."""
    out = []
    one = Operator.scalar(n)
    for i in range(1, n + 1):
        out.append((f"y{i} x{i} = 1", mul(d(n, i), integral(n, i)) == one))
    for i, j in combinations(range(1, n + 1), 2):
        for ka, kb in product(("d", "int"), repeat=2):
            for p, q in ((i, j), (j, i)):
                a, b = generator(n, ka, p), generator(n, kb, q)
                out.append((f"[{ka}{p}, {kb}{q}] = 0", commutator(a, b).is_zero()))
    return out


# bounded-support linear solves -----------------------------------------------------


def _image(vec: dict, g: Operator, how: str, tag: int) -> dict:
    """Image of a vector {monomial: coeff} under z -> z g, z -> -g z or z -> [z, g]
    for a single-term operator g; keys are (tag, monomial)."""
    ((gm, gc),) = g.terms.items()
    out: dict = defaultdict(int)
    for mono, c in vec.items():
        if how in ("right", "commutator"):
            for m, k in monomial_mul(mono, gm):
                out[(tag, m)] += c * k
        if how in ("left", "commutator"):
            for m, k in monomial_mul(gm, mono):
                out[(tag, m)] -= c * k
    return {key: v * gc for key, v in out.items() if v}


def bounded_kernel(n: int, bound: int, maps: Sequence[tuple[Operator, str]]) -> list[Operator]:
    """Joint kernel of linear maps on the bounded-support subspace.

    ``maps`` lists (g, how) with g a single homogeneous monomial and how one of
    "right" (z -> z g), "left" (z -> -g z) or "commutator" (z -> [z, g]). Each
    map shifts the multidegree uniformly, so the kernel is solved one
    homogeneous component at a time, and within a component the maps are
    imposed one after another on the kernel found so far.
    """
    by_degree: dict = defaultdict(list)
    for mono in bounded_monomials(n, bound):
        by_degree[monomial_degree(mono)].append(mono)
    result = []
    for deg in sorted(by_degree):
        basis = [{m: 1} for m in by_degree[deg]]
        for tag, (g, how) in enumerate(maps):
            rels = kernel([_image(v, g, how, tag) for v in basis])
            basis = [_combine(basis, rel) for rel in rels]
            if not basis:
                break
        result.extend(Operator(n, v) for v in basis)
    return result


def _combine(basis: list[dict], rel: dict) -> dict:
    out: dict = defaultdict(Fraction)
    for j, c in rel.items():
        for m, v in basis[j].items():
            out[m] += c * v
    return {m: v for m, v in out.items() if v}


def span_equal(n: int, left: Sequence[Operator], right: Sequence[Operator]) -> bool:
    a, b = Echelon(), Echelon()
    for op in left:
        a.add(op.terms)
    for op in right:
        b.add(op.terms)
    return a.rank == b.rank and all(a.contains(op.terms) for op in right)


def left_annihilator_of_integral(bound: int) -> list[Operator]:
    """Solutions of a int = 0 in I_1 with support bounded by ``bound``."""
    return bounded_kernel(1, bound, [(integral(1, 1), "right")])


def right_annihilator_of_derivative(bound: int) -> list[Operator]:
    """Solutions of d a = 0 in I_1 with support bounded by ``bound``."""
    return bounded_kernel(1, bound, [(d(1, 1), "left")])


def bounded_centre(n: int, bound: int) -> list[Operator]:
    # H_i first: ad H_i is injective off degree zero, which prunes most components early
    maps = [(generator(n, k, i), "commutator") for k in ("H", "d", "int") for i in range(1, n + 1)]
    return bounded_kernel(n, bound, maps)


def left_ideal_chain_is_strict(m_max: int, bound: int) -> list[bool]:
    """For m = 0..m_max: is E_{0,m+1} outside span{b E_{0j} : j <= m, b bounded}?

    A True at every step certifies a strictly increasing chain of left ideals
    sum_{j<=m} I_1 E_{0j} at this support bound.
    """
    from .algebra import E

    monos = bounded_monomials(1, bound)
    ech = Echelon()
    out = []
    for m in range(m_max + 1):
        col = E(1, 1, 0, m)
        for mono in monos:
            ech.add(mul(Operator(1, {mono: 1}), col).terms)
        out.append(not ech.contains(E(1, 1, 0, m + 1).terms))
    return out


def orbit_spans_everything(p, op_bound: int, degree: int) -> bool:
    """Do the images of p under all bounded canonical monomials span every monomial
    of total per-coordinate degree <= ``degree``?"""
    from .action import Polynomial, apply

    ech = Echelon()
    for mono in bounded_monomials(p.n, op_bound):
        img = apply(Operator(p.n, {mono: 1}), p)
        ech.add({k: v for k, v in img.coeffs.items() if max(k) <= degree})
    targets = product(range(degree + 1), repeat=p.n)
    return all(ech.contains({t: 1}) for t in targets)


def selftest() -> list[tuple[str, bool]]:
    """Quick battery used by the CLI."""
    from .action import Polynomial, apply, word_action
    from .algebra import from_word, involution, sigma, tau, x

    results = []
    for n in (1, 2, 3):
        results.append((f"defining relations n={n}", all(ok for _, ok in check_relations(n))))
    word = [("x", 1), ("d", 1), ("int", 1), ("H", 1), ("d", 1)]
    p = Polynomial.monomial([5])
    results.append(("word action agrees", apply(from_word(1, word), p) == word_action(word, p)))
    a = from_word(1, word)
    results.append(("involution is an involution", involution(involution(a)) == a))
    results.append(("tau sigma = id", tau(1, sigma(1, a)) == a))
    results.append(("x* = H d", involution(x(1, 1)) == mul(H(1, 1), d(1, 1))))
    ann = left_annihilator_of_integral(4)
    results.append(("lann(int) = span e_k0", span_equal(1, ann, [e(1, 1, k, 0) for k in range(5)])))
    return results
