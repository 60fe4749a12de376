import itertools
import random

import pytest
from hypothesis import given, strategies as st

from sdot_lab.polygon import PolygonalDecomposition
from sdot_lab.segal_check import SIMPLICIAL_PROPERTIES, check_simplicial, p_segal_report
from sdot_lab.simpset import DepthTooSmall, FiniteCategory, MonotoneMap, delta_of_decomposition, nerve_of_category, standard_simplex


def z2(depth):
    return nerve_of_category(FiniteCategory.cyclic_group(2), depth)


def brute_spine_count(X, n):
    """Composable strings of n edges, counted directly from the face maps."""
    d0, d1 = X.face(1, 0), X.face(1, 1)  # target, source
    count = 0
    for chain in itertools.product(range(X.size(1)), repeat=n):
        count += all(d0[a] == d1[b] for a, b in zip(chain, chain[1:]))
    return count


def test_simplex_is_segal():
    assert check_simplicial(standard_simplex(4, 5), "segal", 4).verdict


def test_square_decomposition_fails_segal_with_composable_witness(square_decomposition):
    X, _ = delta_of_decomposition(square_decomposition, 2)
    rep = check_simplicial(X, "segal", 2)
    assert not rep.verdict
    w = rep.witnesses[0]
    assert w.clause == "segal_map" and w.preimages == 0
    edges = {tuple(v): lab for v, lab in w.element if len(v) == 2}
    assert edges == {(0, 1): (0, 1), (1, 2): (1, 2)}


def test_z2_twosegal_full():
    assert check_simplicial(z2(5), "twosegal_full", 5).verdict


def test_simplex_unital():
    assert check_simplicial(standard_simplex(3, 3), "unital_full", 3).verdict


def test_reduced():
    assert not check_simplicial(standard_simplex(1, 1), "reduced").verdict
    assert check_simplicial(z2(2), "reduced").verdict


def test_depth_guard():
    with pytest.raises(DepthTooSmall):
        check_simplicial(standard_simplex(2, 2), "twosegal_full", 2)
    with pytest.raises(ValueError):
        check_simplicial(standard_simplex(2, 2), "nonsense")


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_nerves_of_posets_pass_everything(seed, size):
    X = nerve_of_category(FiniteCategory.random_poset(random.Random(seed), size), 4)
    for prop in SIMPLICIAL_PROPERTIES[:-1]:
        assert check_simplicial(X, prop, 4).verdict, prop


@pytest.mark.parametrize("make", [lambda: z2(3), lambda: standard_simplex(2, 3),
                                  lambda: delta_of_decomposition(PolygonalDecomposition(3, ((1, 3),)), 3)[0]])
def test_spine_limit_size_matches_brute_force(make):
    from sdot_lab.simpset import segal_map

    X = make()
    for n in (2, 3):
        assert len(segal_map(X, n).limit) == brute_spine_count(X, n)


def test_p_segal_report(square_decomposition):
    assert p_segal_report(standard_simplex(3, 3), square_decomposition).verdict
    # the glued pair of triangles has no 3-simplex filler in the decomposition's own image
    X, _ = delta_of_decomposition(square_decomposition, 3)
    rep = p_segal_report(X, square_decomposition)
    assert not rep.verdict
    assert rep.witnesses[0].element == [([1, 3], (1, 3)), ([0, 1, 3], (0, 1, 3)), ([1, 2, 3], (1, 2, 3))]
    assert rep.witnesses[0].preimages == 0


@pytest.mark.parametrize("seed", range(10))
def test_segal_implies_twosegal(seed):
    X = nerve_of_category(FiniteCategory.random_poset(random.Random(seed), 5, 0.5), 5)
    if check_simplicial(X, "segal", 5).verdict:
        assert check_simplicial(X, "twosegal_full", 5).verdict
