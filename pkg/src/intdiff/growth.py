"""Growth of the standard filtration of I_n with respect to {d_i, H_i, int_i}."""

from __future__ import annotations

import math
from statistics import linear_regression

from .algebra import Operator, generator, mul
from .errors import DomainError, ResourceGuardError
from .linalg import Echelon

GUARD = {1: 16, 2: 8}


def filtration_dims(n: int, i_max: int) -> list[int]:
    """[dim V_0, ..., dim V_{i_max}] where V_i is spanned by words of length <= i.

    V_{i+1} = V_i + sum_g g V_i; only the vectors added at step i need to be
    multiplied again, since g V_{i-1} is already inside V_i.
    """
    if i_max < 0:
        raise DomainError("i_max must be natural")
    if n not in GUARD or i_max > GUARD[n]:
        raise ResourceGuardError(f"filtration_dims({n}, {i_max}) exceeds the desk-scale guard")
    gens = [generator(n, kind, i) for i in range(1, n + 1) for kind in ("d", "H", "int")]
    ech = Echelon()
    one = Operator.scalar(n)
    ech.add(one.terms)
    frontier = [one]
    dims = [ech.rank]
    for _ in range(i_max):
        new_frontier = []
        for b in frontier:
            for g in gens:
                v = mul(g, b)
                if ech.add(v.terms):
                    new_frontier.append(v)
        frontier = new_frontier
        dims.append(ech.rank)
    return dims


def growth_slope(dims: list[int], lo: int, hi: int) -> float:
    """Least-squares slope of log dim V_i against log i over lo <= i <= hi."""
    xs = [math.log(i) for i in range(lo, hi + 1)]
    ys = [math.log(dims[i]) for i in range(lo, hi + 1)]
    return linear_regression(xs, ys).slope
