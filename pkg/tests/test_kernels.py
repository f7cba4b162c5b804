import numpy as np
import pytest

from fibword import _pykernels, trees
from fibword.indices import f1, fwi_star, irr, irr_total, m1, m2, sigma
from fibword.trees import STAT_COLUMNS, iter_stat_blocks, tree_count, tree_from_index, tree_stats

try:
    from fibword import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernel not built")


def _reference_row(t):
    d = t.degrees
    return [irr(t), fwi_star(t), m1(t), m2(t), f1(t), sigma(t), max(d), sum(x > 2 for x in d), irr_total(t)]


def test_backend_reported():
    assert trees.BACKEND in {"cython", "python"}


@pytest.mark.parametrize("n", range(2, 7))
def test_python_kernel_matches_indices(n):
    rows = _pykernels.tree_stats(n, 0, tree_count(n))
    for i in range(tree_count(n)):
        assert list(rows[i]) == _reference_row(tree_from_index(n, i))


def test_kernel_decode_matches_heap_decode():
    for n in range(2, 8):
        for i in range(tree_count(n)):
            deg, edges = _pykernels._decode(n, i)
            t = tree_from_index(n, i)
            assert sorted(tuple(sorted(e)) for e in edges) == list(t.edges)
            assert tuple(deg) == t.degrees


@needs_ext
@pytest.mark.parametrize("n", range(2, 8))
def test_compiled_matches_python(n):
    total = tree_count(n)
    assert np.array_equal(_ckernels.tree_stats(n, 0, total), _pykernels.tree_stats(n, 0, total))


@needs_ext
def test_compiled_partial_range():
    a = _ckernels.tree_stats(8, 1000, 1500)
    b = _pykernels.tree_stats(8, 1000, 1500)
    assert a.shape == (500, len(STAT_COLUMNS))
    assert np.array_equal(a, b)


def test_blocks_cover_range_in_order():
    whole = tree_stats(7)
    for threads in (1, 3):
        parts = list(iter_stat_blocks(7, block_size=1000, threads=threads))
        assert [s for s, _ in parts] == list(range(0, tree_count(7), 1000))
        assert np.array_equal(np.vstack([r for _, r in parts]), whole)


def test_empty_range():
    assert tree_stats(5, 10, 10).shape == (0, len(STAT_COLUMNS))
