"""Canonical forms and exact arithmetic in the algebra I_n of polynomial
integro-differential operators.

Every operator is a finite sum of basis monomials. A monomial is a tuple of
``n`` atoms, one per coordinate, and an atom is either

* ``Poly(shift, hpow)`` = v_shift H^hpow, where v_s is int^s for s > 0,
  1 for s = 0 and d^(-s) for s < 0, or
* ``Mat(row, col)`` = e_{row,col} = int^row d^col - int^(row+1) d^(col+1).

Distinct coordinates commute, so multiplication is done coordinatewise with
the rewrite table in :func:`atom_mul`. Coefficients are ``Fraction``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import ArityError, DomainError

POLY = 0
MAT = 1


class Atom(NamedTuple):
    """One-coordinate basis element; ordering is Poly < Mat, then numerically."""

    kind: int
    a: int
    b: int

    @property
    def is_mat(self) -> bool:
        return self.kind == MAT

    @property
    def degree(self) -> int:
        return self.a if self.kind == POLY else self.a - self.b

    def __repr__(self):
        name = "Poly" if self.kind == POLY else "Mat"
        return f"{name}({self.a}, {self.b})"


def Poly(shift: int, hpow: int = 0) -> Atom:
    if hpow < 0:
        raise DomainError("negative power of H")
    return Atom(POLY, shift, hpow)


def Mat(row: int, col: int) -> Atom:
    if row < 0 or col < 0:
        raise DomainError("matrix unit indices must be natural numbers")
    return Atom(MAT, row, col)


ONE_ATOM = Atom(POLY, 0, 0)

Monomial = tuple  # tuple[Atom, ...]


def _h_shift_poly(c: int, k: int, m: int) -> dict[int, int]:
    """Coefficients of (H + c)^k H^m in the basis H^j."""
    coeffs = {j + m: comb(k, j) * c ** (k - j) for j in range(k + 1)}
    return {j: v for j, v in coeffs.items() if v}


@lru_cache(maxsize=None)
def atom_mul(left: Atom, right: Atom) -> tuple[tuple[Atom, int], ...]:
    """Product of two one-coordinate basis elements as ((atom, coeff), ...).

    Coefficients are integers; an empty tuple means the product is zero.
    """
    out: dict[Atom, int] = defaultdict(int)
    if left.kind == POLY and right.kind == POLY:
        a, k = left.a, left.b
        c, m = right.a, right.b
        # v_a H^k v_c H^m = v_a v_c (H+c)^k H^m
        hpoly = _h_shift_poly(c, k, m)
        for j, coef in hpoly.items():
            out[Atom(POLY, a + c, j)] += coef
        if a > 0 and c < 0:
            # int^a d^b = v_{a-b} - sum_t e_{a-t, b-t}; e_{u,w} p(H) = p(w+1) e_{u,w}
            for t in range(1, min(a, -c) + 1):
                u, w = a - t, -c - t
                out[Atom(MAT, u, w)] -= (w + 1 + c) ** k * (w + 1) ** m
    elif left.kind == POLY:
        a, k = left.a, left.b
        s, t = right.a, right.b
        row = s + a
        if row >= 0:
            out[Atom(MAT, row, t)] += (s + 1) ** k
    elif right.kind == POLY:
        s, t = left.a, left.b
        c, m = right.a, right.b
        col = t - c
        if col >= 0:
            out[Atom(MAT, s, col)] += (col + 1) ** m
    else:
        if left.b == right.a:
            out[Atom(MAT, left.a, right.b)] += 1
    return tuple((atom, coef) for atom, coef in sorted(out.items()) if coef)


@lru_cache(maxsize=1 << 18)
def monomial_mul(left: Monomial, right: Monomial) -> tuple[tuple[Monomial, int], ...]:
    factors = []
    single = True
    for x, y in zip(left, right):
        f = atom_mul(x, y)
        if not f:
            return ()
        if len(f) > 1:
            single = False
        factors.append(f)
    if single:
        coef = 1
        atoms = []
        for ((atom, c),) in factors:
            coef *= c
            atoms.append(atom)
        return ((tuple(atoms), coef),)
    out: dict[Monomial, int] = defaultdict(int)
    for combo in product(*factors):
        coef = 1
        for _, c in combo:
            coef *= c
        out[tuple(atom for atom, _ in combo)] += coef
    return tuple((mono, c) for mono, c in out.items() if c)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational coefficient required, got {type(value).__name__}")


class Operator:
    """Immutable element of I_n stored as {monomial: Fraction} with no zeros."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        if n < 1:
            raise DomainError("arity must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = defaultdict(Fraction)
        for mono, coef in items:
            mono = tuple(mono)
            if len(mono) != n:
                raise ArityError(f"monomial {mono!r} has length {len(mono)}, expected {n}")
            for atom in mono:
                if not isinstance(atom, Atom):
                    raise TypeError(f"not an Atom: {atom!r}")
            clean[mono] += _as_fraction(coef)
        self.n = n
        self.terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Operator":
        op = object.__new__(cls)
        op.n = n
        op.terms = terms
        op._hash = None
        return op

    # constructors ---------------------------------------------------------

    @classmethod
    def scalar(cls, n: int, value=1) -> "Operator":
        return cls(n, {(ONE_ATOM,) * n: value})

    @classmethod
    def zero(cls, n: int) -> "Operator":
        return cls._raw(n, {})

    @classmethod
    def atom(cls, n: int, i: int, atom: Atom, coef=1) -> "Operator":
        """``atom`` placed in coordinate i (1-based), identity elsewhere."""
        _check_index(n, i)
        mono = [ONE_ATOM] * n
        mono[i - 1] = atom
        return cls(n, {tuple(mono): coef})

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "Operator":
        if isinstance(other, Operator):
            if other.n != self.n:
                raise ArityError(f"arity mismatch: {self.n} vs {other.n}")
            return other
        return Operator.scalar(self.n, _as_fraction(other))

    def __add__(self, other):
        return add_scale(self, 1, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add_scale(self, -1, self._coerce(other))

    def __rsub__(self, other):
        return add_scale(self._coerce(other), -1, self)

    def __neg__(self):
        return Operator._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Operator):
            return mul(self, other)
        c = _as_fraction(other)
        if not c:
            return Operator.zero(self.n)
        return Operator._raw(self.n, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        result = Operator.scalar(self.n)
        for _ in range(k):
            result = mul(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, Operator):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == Operator.scalar(self.n, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from .syntax import print_canonical

        return print_canonical(self)

    def __repr__(self):
        return f"Operator({self.n}, {str(self)!r})"

    # inspection -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Sequence[Atom]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def support_bound(self) -> int:
        """Largest index (|shift|, H power, matrix row/col) over all atoms."""
        best = 0
        for mono in self.terms:
            for atom in mono:
                best = max(best, abs(atom.a), atom.b)
        return best


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise DomainError(f"coordinate index {i} out of range 1..{n}")


def _check_arity(a: Operator, b: Operator) -> None:
    if a.n != b.n:
        raise ArityError(f"arity mismatch: {a.n} vs {b.n}")


def mul(a: Operator, b: Operator) -> Operator:
    _check_arity(a, b)
    out: dict[Monomial, Fraction] = defaultdict(Fraction)
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            prod_terms = monomial_mul(ma, mb)
            if not prod_terms:
                continue
            c = ca * cb
            for mono, k in prod_terms:
                out[mono] += c * k
    return Operator._raw(a.n, {m: c for m, c in out.items() if c})


def add_scale(a: Operator, lam, b: Operator) -> Operator:
    """a + lam * b."""
    _check_arity(a, b)
    lam = _as_fraction(lam)
    out = dict(a.terms)
    if lam:
        for m, c in b.terms.items():
            v = out.get(m, 0) + lam * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return Operator._raw(a.n, out)


# generators -----------------------------------------------------------------

GENERATOR_ATOMS = {
    "d": ((Poly(-1, 0), 1),),
    "int": ((Poly(1, 0), 1),),
    "H": ((Poly(0, 1), 1),),
    "x": ((Poly(1, 1), 1),),  # x = int H
}


def generator(n: int, kind: str, i: int) -> Operator:
    if kind not in GENERATOR_ATOMS:
        raise DomainError(f"unknown generator {kind!r}")
    _check_index(n, i)
    ((atom, _),) = GENERATOR_ATOMS[kind]
    return Operator.atom(n, i, atom)


def d(n: int, i: int) -> Operator:
    return generator(n, "d", i)


def integral(n: int, i: int) -> Operator:
    return generator(n, "int", i)


def H(n: int, i: int) -> Operator:
    return generator(n, "H", i)


def x(n: int, i: int) -> Operator:
    return generator(n, "x", i)


def e(n: int, i: int, row: int, col: int) -> Operator:
    """Integro-differential matrix unit e_{row,col} in coordinate i."""
    return Operator.atom(n, i, Mat(row, col))


def E(n: int, i: int, row: int, col: int) -> Operator:
    """Matrix unit of the monomial basis x^s: E_{ij} = (i!/j!) e_{ij}."""
    return Operator.atom(n, i, Mat(row, col), Fraction(factorial(row), factorial(col)))


def e_multi(rows: Sequence[int], cols: Sequence[int]) -> Operator:
    """e_{alpha beta} = prod_i e_{alpha_i beta_i}(i)."""
    if len(rows) != len(cols):
        raise ArityError("row and column multi-indices differ in length")
    return Operator(len(rows), {tuple(Mat(r, c) for r, c in zip(rows, cols)): 1})


def from_word(n: int, word: Iterable[tuple[str, int]]) -> Operator:
    """Canonical form of a product of generators, folded left to right.

    ``word`` is a sequence of (kind, index) with kind in {"x", "d", "int", "H"}.
    """
    result = Operator.scalar(n)
    for kind, i in word:
        result = mul(result, generator(n, kind, i))
    return result


# involution, sigma/tau, grading ------------------------------------------------


@lru_cache(maxsize=None)
def _atom_star(atom: Atom) -> tuple[tuple[Atom, int], ...]:
    if atom.kind == MAT:
        return ((Atom(MAT, atom.b, atom.a), 1),)
    # (v_s H^k)* = H^k v_{-s} = v_{-s} (H - s)^k
    s, k = atom.a, atom.b
    return tuple((Atom(POLY, -s, j), c) for j, c in sorted(_h_shift_poly(-s, k, 0).items()) if c)


def involution(a: Operator) -> Operator:
    """The anti-automorphism d_i <-> int_i, H_i fixed."""
    out: dict[Monomial, Fraction] = defaultdict(Fraction)
    for mono, c in a.terms.items():
        for combo in product(*(_atom_star(atom) for atom in mono)):
            k = 1
            for _, v in combo:
                k *= v
            out[tuple(at for at, _ in combo)] += c * k
    return Operator._raw(a.n, {m: c for m, c in out.items() if c})


def sigma(i: int, a: Operator) -> Operator:
    """int_i a d_i."""
    return mul(mul(integral(a.n, i), a), d(a.n, i))


def tau(i: int, a: Operator) -> Operator:
    """d_i a int_i."""
    return mul(mul(d(a.n, i), a), integral(a.n, i))


def monomial_degree(mono: Monomial) -> tuple[int, ...]:
    return tuple(atom.degree for atom in mono)


def grade_decompose(a: Operator) -> dict[tuple[int, ...], Operator]:
    parts: dict[tuple[int, ...], dict] = defaultdict(dict)
    for mono, c in a.terms.items():
        parts[monomial_degree(mono)][mono] = c
    return {deg: Operator._raw(a.n, terms) for deg, terms in sorted(parts.items())}


def commutator(a: Operator, b: Operator) -> Operator:
    return mul(a, b) - mul(b, a)


def bounded_atoms(bound: int) -> list[Atom]:
    """Atoms with |shift|, H power, row and col all at most ``bound``."""
    atoms = [Atom(POLY, s, k) for s in range(-bound, bound + 1) for k in range(bound + 1)]
    atoms += [Atom(MAT, s, t) for s in range(bound + 1) for t in range(bound + 1)]
    return atoms


def bounded_monomials(n: int, bound: int) -> list[Monomial]:
    return [tuple(m) for m in product(bounded_atoms(bound), repeat=n)]
