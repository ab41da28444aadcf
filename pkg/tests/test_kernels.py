import random

import pytest

from pcore import _backend
from pcore._backend import get_kernels
from pcore.abacus import RowMultiplicities, partition_from_row_multiplicities
from pcore.partitions import Partition, hook_lengths

BACKENDS = sorted(_backend.BACKENDS)


def test_compiled_backend_is_built():
    # the extension is part of the install; its absence means a broken build
    assert "cython" in _backend.BACKENDS
    assert _backend.BACKEND == "cython"


def test_unknown_backend():
    with pytest.raises(ValueError):
        get_kernels("fortran")


@pytest.mark.parametrize("name", BACKENDS)
@pytest.mark.parametrize(
    "p, expected",
    [(3, (6, 10, 1, (2, 1))), (5, (115, 198, 1, (4, 2, 2, 3))), (7, (5488, 1726, 1, (6, 2, 5, 5, 2, 5)))],
)
def test_search_walks(name, p, expected):
    assert get_kernels(name).search_walks(p) == expected


@pytest.mark.parametrize("p, max_len", [(5, 0), (5, 3), (7, 9), (3, 1)])
def test_search_walks_backends_agree_with_limit(p, max_len):
    results = {get_kernels(name).search_walks(p, max_len) for name in BACKENDS}
    assert len(results) == 1


def _grid_witness(parts, p):
    for r, row in enumerate(hook_lengths(parts), 1):
        for c, h in enumerate(row, 1):
            if h % p == 0:
                return r, c
    return None


@pytest.mark.parametrize("name", BACKENDS)
def test_first_hook_multiple_random(name):
    rng = random.Random(7)
    kern = get_kernels(name)
    for _ in range(400):
        parts = Partition(tuple(sorted((rng.randint(1, 30) for _ in range(rng.randint(0, 12))), reverse=True)))
        p = rng.randint(2, 9)
        assert kern.first_hook_multiple(parts.beta_numbers(), p) == _grid_witness(parts.parts, p)


@pytest.mark.parametrize("name", BACKENDS)
def test_first_hook_multiple_on_cores(name):
    m = RowMultiplicities(7, (6, 2, 5, 5, 2, 5))
    lam = partition_from_row_multiplicities(m)
    assert get_kernels(name).first_hook_multiple(lam.beta_numbers(), 7) is None
    assert get_kernels(name).first_hook_multiple((), 7) is None


@pytest.mark.slow
def test_python_fallback_full_search_p11():
    # the fallback alone must still handle the largest exhaustive case (about 45 s)
    py = get_kernels("python").search_walks(11)
    assert py == (78422157, 29773, 1, (10, 5, 7, 6, 8, 8, 6, 7, 5, 9))
