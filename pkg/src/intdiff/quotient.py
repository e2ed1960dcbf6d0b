"""The quotient B_n = I_n / a_n as the skew Laurent algebra Q[H][d^{+-1}; tau].

A key ``(k, alpha)`` stands for H^k d^alpha (coefficients on the left),
with d^alpha H_i = (H_i + alpha_i) d^alpha and the image of int_i equal to d_i^-1.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import product
from math import comb
from typing import Mapping

from .algebra import MAT, Operator
from .errors import ArityError

Key = tuple  # (hpows, shifts)


def _shifted_power(c: int, k: int) -> list[tuple[int, int]]:
    """(H + c)^k as [(power, coefficient)]."""
    return [(j, comb(k, j) * c ** (k - j)) for j in range(k + 1) if c ** (k - j)]


class BnElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Key, Fraction] = defaultdict(Fraction)
        for (hpows, shifts), c in items:
            hpows, shifts = tuple(hpows), tuple(shifts)
            if len(hpows) != n or len(shifts) != n or any(k < 0 for k in hpows):
                raise ArityError(f"bad B_n key {(hpows, shifts)} for arity {n}")
            clean[(hpows, shifts)] += Fraction(c)
        self.n = n
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def monomial(cls, hpows, shifts, coef=1) -> "BnElement":
        return cls(len(hpows), {(tuple(hpows), tuple(shifts)): coef})

    @classmethod
    def scalar(cls, n: int, value=1) -> "BnElement":
        return cls.monomial((0,) * n, (0,) * n, value)

    def __add__(self, other: "BnElement") -> "BnElement":
        if self.n != other.n:
            raise ArityError("arity mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BnElement(self.n, out)

    def __sub__(self, other: "BnElement") -> "BnElement":
        return self + other.scale(-1)

    def scale(self, c) -> "BnElement":
        return BnElement(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BnElement):
            return bn_mul(self, other)
        return self.scale(Fraction(other))

    def __eq__(self, other):
        if not isinstance(other, BnElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from .syntax import print_bn

        return print_bn(self)

    def __repr__(self):
        return f"BnElement({self.n}, {str(self)!r})"


def _expand(n: int, factors_per_coord, coef, shifts) -> dict:
    out: dict = defaultdict(Fraction)
    for combo in product(*factors_per_coord):
        c = coef
        for _, v in combo:
            c *= v
        out[(tuple(p for p, _ in combo), shifts)] += c
    return out


def bn_mul(u: BnElement, v: BnElement) -> BnElement:
    """H^k d^a * H^m d^b = H^k prod_i (H_i + a_i)^{m_i} d^{a+b}."""
    if u.n != v.n:
        raise ArityError(f"arity mismatch: {u.n} vs {v.n}")
    out: dict = defaultdict(Fraction)
    for (k, a), cu in u.terms.items():
        for (m, b), cv in v.terms.items():
            factors = [
                [(ki + j, c) for j, c in _shifted_power(ai, mi)] for ki, ai, mi in zip(k, a, m)
            ]
            shifts = tuple(ai + bi for ai, bi in zip(a, b))
            for key, c in _expand(u.n, factors, cu * cv, shifts).items():
                out[key] += c
    return BnElement(u.n, out)


def project_bn(a: Operator) -> BnElement:
    """Image of ``a`` in B_n: drop every monomial with a matrix-unit factor.

    Per coordinate v_s H^k maps to d^(-s) H^k = (H - s)^k d^(-s).
    """
    out: dict = defaultdict(Fraction)
    for mono, c in a.terms.items():
        if any(atom.kind == MAT for atom in mono):
            continue
        factors = [_shifted_power(-atom.a, atom.b) for atom in mono]
        shifts = tuple(-atom.a for atom in mono)
        for key, v in _expand(a.n, factors, c, shifts).items():
            out[key] += v
    return BnElement(a.n, out)


def bn_involution(u: BnElement) -> BnElement:
    """Induced involution d_i -> d_i^-1, H_i fixed: (H^k d^a)* = (H - a)^k d^(-a)."""
    out: dict = defaultdict(Fraction)
    for (k, a), c in u.terms.items():
        factors = [_shifted_power(-ai, ki) for ki, ai in zip(k, a)]
        shifts = tuple(-ai for ai in a)
        for key, v in _expand(u.n, factors, c, shifts).items():
            out[key] += v
    return BnElement(u.n, out)


def bn_unit_check(u: BnElement) -> tuple[Fraction, tuple[int, ...]] | None:
    """(lam, alpha) if u = lam d^alpha with lam != 0, else None."""
    if len(u.terms) != 1:
        return None
    ((hpows, shifts), c), = u.terms.items()
    if any(hpows):
        return None
    return c, shifts
