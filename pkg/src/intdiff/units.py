"""Units of I_n.

Every unit maps to a nonzero scalar in B_n, so a candidate must look like
lam + (element of a_n). When the a_n part lies in F_n = span{e_ab} the
question reduces to a finite determinant (the global determinant of
1 + M_inf). For n = 1, a_1 = F and the decision is complete; for n >= 2,
elements of 1 + a_n outside 1 + F_n are reported as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import MAT, Mat, Operator, mul
from .errors import DomainError
from .linalg import det, inverse
from .quotient import bn_unit_check, project_bn


@dataclass(frozen=True)
class FiniteMatrixPart:
    """f = sum entries[(row, col)] e_{row col} with row, col in N^n."""

    n: int
    entries: dict = field(default_factory=dict)

    def bound(self) -> int:
        return max((max(r + c) for r, c in self.entries), default=0)

    def box(self) -> list[tuple[int, ...]]:
        """Multi-indices of [0, B]^n in lexicographic order."""
        return list(product(range(self.bound() + 1), repeat=self.n))

    def to_operator(self) -> Operator:
        return Operator(
            self.n,
            {tuple(Mat(r, c) for r, c in zip(row, col)): v for (row, col), v in self.entries.items()},
        )

    def matrix(self) -> list[list[Fraction]]:
        idx = self.box()
        pos = {b: k for k, b in enumerate(idx)}
        m = [[Fraction(0)] * len(idx) for _ in idx]
        for (row, col), v in self.entries.items():
            m[pos[row]][pos[col]] += v
        return m


def split_scalar_plus_f(a: Operator) -> tuple[Fraction, FiniteMatrixPart] | None:
    one = None
    entries = {}
    for mono, c in a.terms.items():
        if all(atom.kind == MAT for atom in mono):
            entries[(tuple(at.a for at in mono), tuple(at.b for at in mono))] = c
        elif all(atom.kind != MAT and atom.a == 0 and atom.b == 0 for atom in mono):
            one = c
        else:
            return None
    return (one if one is not None else Fraction(0)), FiniteMatrixPart(a.n, entries)


def _normalized_block(lam: Fraction, f: FiniteMatrixPart) -> list[list[Fraction]]:
    m = f.matrix()
    for i, row in enumerate(m):
        for j in range(len(row)):
            row[j] = row[j] / lam + (1 if i == j else 0)
    return m


def global_det(lam, f: FiniteMatrixPart) -> Fraction:
    """det(1 + f/lam) over the support box; nonzero iff lam + f is a unit."""
    lam = Fraction(lam)
    if not lam:
        raise DomainError("scalar part must be nonzero")
    return det(_normalized_block(lam, f))


@dataclass(frozen=True)
class UnitDecision:
    status: str  # "YES", "NO" or "UNKNOWN"
    inverse: Operator | None = None

    def __bool__(self):
        return self.status == "YES"


NO = UnitDecision("NO")
UNKNOWN = UnitDecision("UNKNOWN")


class InvariantViolation(RuntimeError):
    """A computed inverse failed its own verification."""


def is_unit(a: Operator) -> UnitDecision:
    image = bn_unit_check(project_bn(a))
    if image is None or any(image[1]):
        return NO
    split = split_scalar_plus_f(a)
    if split is None:
        return UNKNOWN
    lam, f = split
    if global_det(lam, f) == 0:
        return NO
    block_inv = inverse(_normalized_block(lam, f))
    idx = f.box()
    entries = {}
    for i, row in enumerate(block_inv):
        for j, v in enumerate(row):
            v = v - (1 if i == j else 0)
            if v:
                entries[(idx[i], idx[j])] = v / lam
    inv = Operator.scalar(a.n, 1 / lam) + FiniteMatrixPart(a.n, entries).to_operator()
    one = Operator.scalar(a.n)
    if mul(a, inv) != one or mul(inv, a) != one:
        raise InvariantViolation("computed inverse does not verify")
    return UnitDecision("YES", inv)
