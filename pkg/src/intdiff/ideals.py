"""Two-sided ideals of I_n as antichains in {0,1}^n.

A vector f stands for I_f = I_{f(1)} (x) ... (x) I_{f(n)} with I_0 = F (finite
matrices) and I_1 = I_1 (everything); an antichain C stands for the sum of its
I_f. The ideal lattice is then the lattice of down-sets of {0,1}^n, which is
how sums, products and intersections are computed here.

Prime ideals are labelled by subsets I of {1..n} (1-based); p_I is generated
by the vectors that are all ones except a single zero at some i in I.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb
from typing import Iterable, Sequence

from .algebra import MAT, Operator
from .errors import ArityError, DomainError, ParseError, ResourceGuardError

Vector = tuple  # tuple[int, ...] of 0/1
PrimeLabel = frozenset  # frozenset[int], 1-based coordinates

MAX_ENUMERATION_ARITY = 5
MAX_TRANSVERSAL_ARITY = 12


def leq(f: Vector, g: Vector) -> bool:
    return all(a <= b for a, b in zip(f, g))


def maximal_elements(vectors: Iterable[Vector]) -> frozenset:
    vs = set(vectors)
    return frozenset(f for f in vs if not any(f != g and leq(f, g) for g in vs))


@dataclass(frozen=True)
class IdealAC:
    n: int
    antichain: frozenset

    def vectors(self) -> list[Vector]:
        return sorted(self.antichain)

    def is_zero(self) -> bool:
        return not self.antichain

    def is_whole(self) -> bool:
        return self.antichain == frozenset({(1,) * self.n})

    def __str__(self):
        return to_literal(self)


def make_ideal(n: int, vectors: Iterable[Sequence[int]]) -> IdealAC:
    vs = []
    for v in vectors:
        v = tuple(int(b) for b in v)
        if len(v) != n:
            raise ArityError(f"vector {v} has length {len(v)}, expected {n}")
        if any(b not in (0, 1) for b in v):
            raise DomainError(f"vector {v} is not a 0/1 vector")
        vs.append(v)
    return IdealAC(n, maximal_elements(vs))


def zero_ideal(n: int) -> IdealAC:
    return IdealAC(n, frozenset())


def whole_ideal(n: int) -> IdealAC:
    return IdealAC(n, frozenset({(1,) * n}))


def finite_matrices(n: int) -> IdealAC:
    """F_n = F^{(x) n}, the smallest nonzero ideal."""
    return IdealAC(n, frozenset({(0,) * n}))


def maximal_ideal(n: int) -> IdealAC:
    """a_n = p_1 + ... + p_n."""
    return prime_from_subset(n, range(1, n + 1))


def _check(a: IdealAC, b: IdealAC) -> None:
    if a.n != b.n:
        raise ArityError(f"arity mismatch: {a.n} vs {b.n}")


def cube(n: int) -> list[Vector]:
    return list(product((0, 1), repeat=n))


def downset(a: IdealAC) -> frozenset:
    return frozenset(g for g in cube(a.n) if any(leq(g, f) for f in a.antichain))


def contains(a: IdealAC, b: IdealAC) -> bool:
    """a contains b."""
    _check(a, b)
    return all(any(leq(g, f) for f in a.antichain) for g in b.antichain)


def ideal_sum(a: IdealAC, b: IdealAC) -> IdealAC:
    _check(a, b)
    return IdealAC(a.n, maximal_elements(a.antichain | b.antichain))


def ideal_product(a: IdealAC, b: IdealAC) -> IdealAC:
    _check(a, b)
    meets = (tuple(min(x, y) for x, y in zip(f, g)) for f in a.antichain for g in b.antichain)
    return IdealAC(a.n, maximal_elements(meets))


def ideal_intersect(a: IdealAC, b: IdealAC) -> IdealAC:
    """Greatest lower bound, computed from down-sets (independently of the product)."""
    _check(a, b)
    return IdealAC(a.n, maximal_elements(downset(a) & downset(b)))


def product_of(ideals: Sequence[IdealAC], n: int) -> IdealAC:
    result = whole_ideal(n)
    for a in ideals:
        result = ideal_product(result, a)
    return result


def intersection_of(ideals: Sequence[IdealAC], n: int) -> IdealAC:
    result = whole_ideal(n)
    for a in ideals:
        result = ideal_intersect(result, a)
    return result


# primes ------------------------------------------------------------------------


def _unit_vector_zero(n: int, i: int) -> Vector:
    return tuple(0 if j == i else 1 for j in range(1, n + 1))


def prime_from_subset(n: int, subset: Iterable[int]) -> IdealAC:
    subset = frozenset(subset)
    if any(not 1 <= i <= n for i in subset):
        raise DomainError(f"prime label {sorted(subset)} out of range 1..{n}")
    return IdealAC(n, frozenset(_unit_vector_zero(n, i) for i in subset))


def zero_set(f: Vector) -> frozenset:
    return frozenset(i + 1 for i, b in enumerate(f) if b == 0)


def is_prime(a: IdealAC) -> PrimeLabel | None:
    zeros = []
    for f in a.antichain:
        z = zero_set(f)
        if len(z) != 1:
            return None
        zeros.append(next(iter(z)))
    return frozenset(zeros)


def all_primes(n: int) -> list[PrimeLabel]:
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]


def minimal_transversals(edges: Iterable[frozenset], n: int) -> set[frozenset]:
    """All minimal subsets of {1..n} meeting every edge (depth-first, superset pruning)."""
    edges = sorted(set(edges), key=lambda e: (len(e), sorted(e)))
    if any(not e for e in edges):
        raise DomainError("an empty edge cannot be hit")
    found: list[frozenset] = []

    def search(chosen: frozenset, start_edge: int) -> None:
        if any(t <= chosen for t in found):
            return
        for idx in range(start_edge, len(edges)):
            edge = edges[idx]
            if not edge & chosen:
                for v in sorted(edge):
                    search(chosen | {v}, idx + 1)
                return
        found.append(chosen)

    search(frozenset(), 0)
    return {t for t in found if not any(s < t for s in found)}


def minimal_primes(a: IdealAC) -> set[PrimeLabel]:
    if a.n > MAX_TRANSVERSAL_ARITY:
        raise ResourceGuardError(f"minimal primes limited to n <= {MAX_TRANSVERSAL_ARITY}")
    if any(all(a_bit == 1 for a_bit in f) for f in a.antichain):
        raise DomainError("the whole algebra has no prime above it")
    return minimal_transversals((zero_set(f) for f in a.antichain), a.n)


def factor_into_primes(a: IdealAC) -> set[PrimeLabel]:
    """The unique set of incomparable primes whose product (and intersection) is ``a``."""
    return minimal_primes(a)


def minimal_labels(labels: Iterable[PrimeLabel]) -> set[PrimeLabel]:
    labels = set(labels)
    return {p for p in labels if not any(q < p for q in labels)}


def decomposes_as(a: IdealAC, parts: Sequence[IdealAC]) -> bool:
    """Decide a = a_1 ... a_k through minimal primes: Min(a) equals the minimal
    elements of the union of the Min(a_i)."""
    union: set = set()
    for part in parts:
        union |= minimal_primes(part)
    return minimal_primes(a) == minimal_labels(union)


def height(label: PrimeLabel) -> int:
    return len(label)


def maximal_chains(p: PrimeLabel, q: PrimeLabel) -> list[list[PrimeLabel]]:
    """All saturated chains p = I_0 < I_1 < ... < I_l = q of prime labels."""
    p, q = frozenset(p), frozenset(q)
    if not p <= q:
        raise DomainError(f"{sorted(p)} is not contained in {sorted(q)}")
    chains = []
    for order in permutations(sorted(q - p)):
        chain = [p]
        for v in order:
            chain.append(chain[-1] | {v})
        chains.append(chain)
    return chains


def height_and_chains(p: PrimeLabel, q: PrimeLabel) -> tuple[int, list[list[PrimeLabel]]]:
    return height(q), maximal_chains(p, q)


def longest_prime_chain(n: int) -> int:
    """Length of the longest strictly increasing chain in Spec, by dynamic programming
    over the inclusion order of the prime ideals themselves."""
    primes = sorted(all_primes(n), key=len)
    ideals = {p: prime_from_subset(n, p) for p in primes}
    best = {}
    for p in primes:
        below = [best[q] + 1 for q in best if q != p and contains(ideals[p], ideals[q])
                 and ideals[p] != ideals[q]]
        best[p] = max(below, default=0)
    return max(best.values())


# enumeration ---------------------------------------------------------------------


def enumerate_ideals(n: int) -> list[IdealAC]:
    """Every antichain of {0,1}^n exactly once, ordered by (size, sorted vectors)."""
    if n < 1:
        raise DomainError("arity must be positive")
    if n > MAX_ENUMERATION_ARITY:
        raise ResourceGuardError(f"ideal enumeration limited to n <= {MAX_ENUMERATION_ARITY}")
    points = cube(n)
    found: list[tuple[Vector, ...]] = []

    def extend(chosen: list, start: int) -> None:
        found.append(tuple(chosen))
        for j in range(start, len(points)):
            f = points[j]
            if all(not leq(f, g) and not leq(g, f) for g in chosen):
                chosen.append(f)
                extend(chosen, j + 1)
                chosen.pop()

    extend([], 0)
    found.sort(key=lambda c: (len(c), c))
    return [IdealAC(n, frozenset(c)) for c in found]


def dedekind_bounds(n: int) -> tuple[int, int]:
    """Lower and upper bounds 2 - n + sum_i 2^C(n,i) and 2^(2^n)."""
    return 2 - n + sum(2 ** comb(n, i) for i in range(1, n + 1)), 2 ** (2**n)


# operators -----------------------------------------------------------------------


def monomial_pattern(mono) -> Vector:
    """0 where the atom is a matrix unit, 1 where it is a Poly atom."""
    return tuple(0 if atom.kind == MAT else 1 for atom in mono)


def membership(op: Operator, a: IdealAC) -> bool:
    if op.n != a.n:
        raise ArityError(f"arity mismatch: operator {op.n}, ideal {a.n}")
    return all(
        any(leq(monomial_pattern(mono), f) for f in a.antichain) for mono in op.terms
    )


# literals ------------------------------------------------------------------------

_LITERAL = re.compile(r"^\s*\{\s*([01]+(\s*,\s*[01]+)*)?\s*\}\s*$")


def from_literal(n: int, text: str) -> IdealAC:
    """Parse ``{01,10}``: one 0/1 string per vector, coordinate 1 first."""
    if not _LITERAL.match(text):
        raise ParseError(f"malformed antichain literal {text!r}", 0)
    body = text.strip()[1:-1].strip()
    vectors = [tuple(int(ch) for ch in tok.strip()) for tok in body.split(",")] if body else []
    return make_ideal(n, vectors)


def to_literal(a: IdealAC) -> str:
    return "{" + ",".join("".join(map(str, f)) for f in a.vectors()) + "}"


def label_str(label: PrimeLabel) -> str:
    return "p{" + ",".join(map(str, sorted(label))) + "}"


def parse_label(n: int, text: str) -> PrimeLabel:
    body = text.strip()
    if body.startswith("p"):
        body = body[1:]
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"malformed prime label {text!r}", 0)
    inner = body[1:-1].strip()
    try:
        label = frozenset(int(t) for t in inner.split(",")) if inner else frozenset()
    except ValueError:
        raise ParseError(f"malformed prime label {text!r}", 0) from None
    if any(not 1 <= i <= n for i in label):
        raise DomainError(f"prime label {text} out of range 1..{n}")
    return label
