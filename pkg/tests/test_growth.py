from itertools import product

import pytest

from intdiff.action import word_on_divided
from intdiff.errors import DomainError, ResourceGuardError
from intdiff.growth import filtration_dims, growth_slope
from intdiff.linalg import rank


def action_rank_dims(n, i_max):
    """dim V_i as the rank of word actions on divided powers, one vector per word.

    Nothing here goes through canonical forms; faithfulness on a large enough
    box makes the action rank equal the dimension.
    """
    letters = [(k, j) for j in range(1, n + 1) for k in ("d", "H", "int")]
    box = list(product(range(3 * i_max + 3), repeat=n))
    dims, vectors = [], []
    for length in range(i_max + 1):
        for w in product(letters, repeat=length):
            vec = {}
            for b in box:
                r = word_on_divided(list(w), b)
                if r is not None:
                    vec[(b, r[1])] = r[0]
            vectors.append(vec)
        dims.append(rank(vectors))
    return dims


def test_examples():
    assert filtration_dims(1, 0) == [1]
    assert filtration_dims(1, 1) == [1, 4]


@pytest.mark.parametrize("n, i_max", [(1, 6), (2, 3)])
def test_against_action_rank(n, i_max):
    assert filtration_dims(n, i_max) == action_rank_dims(n, i_max)


def test_closed_form_n1():
    # observed: dim V_i = 1 + 3 i (i + 1) / 2 for n = 1
    assert filtration_dims(1, 12) == [1 + 3 * i * (i + 1) // 2 for i in range(13)]


def test_upper_bound_from_generators():
    for n, i_max in ((1, 10), (2, 4)):
        dims = filtration_dims(n, i_max)
        assert all(dim <= ((2 * i + 1) * (2 * i + 2)) ** n for i, dim in enumerate(dims))
        assert dims == sorted(dims)


def test_slope_of_quadratic():
    dims = [1 + 3 * i * (i + 1) // 2 for i in range(17)]
    assert 1.8 <= growth_slope(dims, 8, 16) <= 2.2
    assert growth_slope([i**3 if i else 1 for i in range(10)], 2, 9) == pytest.approx(3.0)


def test_guards():
    with pytest.raises(ResourceGuardError):
        filtration_dims(1, 17)
    with pytest.raises(ResourceGuardError):
        filtration_dims(3, 1)
    with pytest.raises(DomainError):
        filtration_dims(1, -1)
