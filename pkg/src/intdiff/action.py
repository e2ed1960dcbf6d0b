"""The faithful action of I_n on P_n = Q[x_1..x_n], and an action-based zero oracle.

On one coordinate, with x^s the monomial basis:

    d x^s = s x^(s-1),  int x^s = x^(s+1)/(s+1),  H x^s = (s+1) x^s,
    e_{st} x^u = delta_{tu} (u!/s!) x^s,

and Poly(shift, k) = v_shift H^k acts as v_shift after H^k.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Mapping, Sequence

from .algebra import MAT, Atom, Operator
from .errors import ArityError, DomainError, ResourceGuardError


class Polynomial:
    """Element of P_n stored as {exponent tuple: Fraction}."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n or any(k < 0 for k in exps):
                raise ArityError(f"bad exponent vector {exps} for arity {n}")
            clean[exps] += Fraction(c)
        self.n = n
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def monomial(cls, exps: Sequence[int], coef=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def divided_power(cls, exps: Sequence[int]) -> "Polynomial":
        """x^[s] = x^s / s! (coordinatewise)."""
        denom = 1
        for s in exps:
            denom *= factorial(s)
        return cls(len(exps), {tuple(exps): Fraction(1, denom)})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.n != other.n:
            raise ArityError("arity mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Polynomial(self.n, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "Polynomial":
        return Polynomial(self.n, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(Fraction(other))
        if self.n != other.n:
            raise ArityError("arity mismatch")
        out: dict = defaultdict(Fraction)
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                out[tuple(p + q for p, q in zip(ka, kb))] += va * vb
        return Polynomial(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def degree_bound(self) -> int:
        return max((max(k) for k in self.coeffs), default=0)

    def __str__(self):
        from .syntax import print_polynomial

        return print_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.n}, {str(self)!r})"


@lru_cache(maxsize=1 << 16)
def atom_on_monomial(atom: Atom, s: int) -> tuple[Fraction, int] | None:
    """Image of x^s under one atom as (coefficient, new exponent), or None if zero."""
    if atom.kind == MAT:
        row, col = atom.a, atom.b
        if s != col:
            return None
        return Fraction(factorial(s), factorial(row)), row
    shift, k = atom.a, atom.b
    coef = Fraction((s + 1) ** k)
    if shift >= 0:
        return coef * Fraction(factorial(s), factorial(s + shift)), s + shift
    if s < -shift:
        return None
    return coef * Fraction(factorial(s), factorial(s + shift)), s + shift


def apply(a: Operator, p: Polynomial) -> Polynomial:
    if a.n != p.n:
        raise ArityError(f"arity mismatch: operator {a.n}, polynomial {p.n}")
    out: dict = defaultdict(Fraction)
    for exps, pc in p.coeffs.items():
        for mono, c in a.terms.items():
            coef = c * pc
            new = []
            for atom, s in zip(mono, exps):
                r = atom_on_monomial(atom, s)
                if r is None:
                    break
                coef *= r[0]
                new.append(r[1])
            else:
                out[tuple(new)] += coef
    return Polynomial(a.n, out)


# generator actions composed directly, independent of the rewrite engine ---------


def _generator_step(kind: str, i: int, coef: Fraction, exps: list[int]):
    s = exps[i]
    if kind == "d":
        if s == 0:
            return None
        exps[i] = s - 1
        return coef * s
    if kind == "int":
        exps[i] = s + 1
        return coef / (s + 1)
    if kind == "H":
        return coef * (s + 1)
    if kind == "x":
        exps[i] = s + 1
        return coef
    raise DomainError(f"unknown generator {kind!r}")


def word_on_monomial(word: Sequence[tuple[str, int]], exps: Sequence[int]):
    """Apply a generator word (rightmost letter first) to x^exps.

    Returns (coefficient, exponent tuple), or None when the image is zero.
    """
    cur = list(exps)
    coef = Fraction(1)
    for kind, i in reversed(word):
        if not 1 <= i <= len(cur):
            raise DomainError(f"generator index {i} out of range")
        coef = _generator_step(kind, i - 1, coef, cur)
        if coef is None:
            return None
    return coef, tuple(cur)


def word_action(word: Sequence[tuple[str, int]], p: Polynomial) -> Polynomial:
    out: dict = defaultdict(Fraction)
    for exps, c in p.coeffs.items():
        r = word_on_monomial(word, exps)
        if r is not None:
            out[r[1]] += c * r[0]
    return Polynomial(p.n, out)


# integer arithmetic on divided powers x^[s] = x^s/s! ------------------------------
#
# In this basis d x^[s] = x^[s-1], int x^[s] = x^[s+1], H x^[s] = (s+1) x^[s] and
# e_{st} x^[u] = delta_{tu} x^[s]: all coefficients are integers. The divided
# powers with exponents in a box span the same space as the monomials in it,
# so every "kills the box" or "agrees on the box" question can be asked here.


@lru_cache(maxsize=1 << 16)
def atom_on_divided(atom: Atom, s: int) -> tuple[int, int] | None:
    if atom.kind == MAT:
        return (1, atom.a) if s == atom.b else None
    shift, k = atom.a, atom.b
    if s + shift < 0:
        return None
    return (s + 1) ** k, s + shift


def apply_on_divided(a: Operator, exps: Sequence[int]) -> dict:
    """a x^[exps] as {exponents: coefficient} in the divided-power basis."""
    out: dict = defaultdict(int)
    for mono, c in a.terms.items():
        coef = 1
        new = []
        for atom, s in zip(mono, exps):
            r = atom_on_divided(atom, s)
            if r is None:
                break
            coef *= r[0]
            new.append(r[1])
        else:
            out[tuple(new)] += c * coef
    return {k: v for k, v in out.items() if v}


def word_on_divided(word: Sequence[tuple[str, int]], exps: Sequence[int]):
    """Integer image of x^[exps] under a word: (coefficient, exponents) or None."""
    cur = list(exps)
    coef = 1
    for kind, i in reversed(word):
        j = i - 1
        s = cur[j]
        if kind == "d":
            if s == 0:
                return None
            cur[j] = s - 1
        elif kind == "int":
            cur[j] = s + 1
        elif kind == "H":
            coef *= s + 1
        elif kind == "x":
            coef *= s + 1
            cur[j] = s + 1
        else:
            raise DomainError(f"unknown generator {kind!r}")
    return coef, tuple(cur)


ORACLE_MAX_LENGTH = 16


def _as_combination(word_or_combo) -> list[tuple[Fraction, list]]:
    items = list(word_or_combo)
    if items and isinstance(items[0], tuple) and len(items[0]) == 2 and isinstance(items[0][0], str):
        return [(Fraction(1), items)]
    return [(Fraction(c), list(w)) for c, w in items]


def zero_oracle(n: int, word) -> bool:
    """True iff the composed generator action kills every x^beta with beta_i <= 2L+2.

    ``word`` is a generator word, or a linear combination given as a list of
    (coefficient, word) pairs; L is the longest word length. The rewrite
    engine is never consulted.
    """
    combo = _as_combination(word)
    length = max((len(w) for _, w in combo), default=0)
    if length > ORACLE_MAX_LENGTH:
        raise ResourceGuardError(f"word length {length} exceeds {ORACLE_MAX_LENGTH}")
    for _, w in combo:
        for _, i in w:
            if not 1 <= i <= n:
                raise DomainError(f"generator index {i} out of range 1..{n}")
    bound = 2 * length + 2
    for exps in product(range(bound + 1), repeat=n):
        acc: dict = defaultdict(Fraction)
        for c, w in combo:
            r = word_on_divided(w, exps)
            if r is not None:
                acc[r[1]] += c * r[0]
        if any(acc.values()):
            return False
    return True


def faithfulness_bound(a: Operator) -> int:
    """Per-coordinate exponent bound used when deciding a == 0 through the action."""
    mat_col = h_pow = shift = 0
    for mono in a.terms:
        for atom in mono:
            if atom.kind == MAT:
                mat_col = max(mat_col, atom.b)
            else:
                h_pow = max(h_pow, atom.b)
                shift = max(shift, abs(atom.a))
    return mat_col + h_pow + shift + 2


def acts_as_zero(a: Operator, bound: int | None = None) -> bool:
    if bound is None:
        bound = faithfulness_bound(a)
    return not any(apply_on_divided(a, exps) for exps in product(range(bound + 1), repeat=a.n))
