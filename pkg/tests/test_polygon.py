import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import catalan
from sdot_lab.polygon import (
    CrossingDiagonals,
    InvalidDecomposition,
    NotCovering,
    NotIntersectionClosed,
    PolygonalDecomposition,
    crosses,
    decomposition_from_json,
    enumerate_triangulations,
    first_triangle_split,
    is_side,
    last_triangle_split,
    validate_decomposition,
)


def all_diagonals(n):
    return [(a, b) for a, b in itertools.combinations(range(n + 1), 2) if not is_side(n, a, b)]


def brute_triangulations(n):
    """Maximal non-crossing diagonal sets, by exhaustive subset search."""
    diags = all_diagonals(n)
    return sorted(
        s for s in itertools.combinations(diags, n - 2)
        if not any(crosses(d, e) for d, e in itertools.combinations(s, 2))
    )


@st.composite
def decompositions(draw):
    n = draw(st.integers(1, 8))
    chosen = []
    for d in draw(st.permutations(all_diagonals(n))):
        if draw(st.booleans()) and not any(crosses(d, e) for e in chosen):
            chosen.append(d)
    return PolygonalDecomposition(n, tuple(chosen))


def test_square_example_is_valid():
    dec = validate_decomposition(3, [{1, 3}, {1, 2, 3}, {0, 1, 3}])
    assert dec.diagonals == ((1, 3),)


def test_crossing_rejected():
    with pytest.raises(CrossingDiagonals):
        PolygonalDecomposition(3, ((0, 2), (1, 3)))
    with pytest.raises(CrossingDiagonals):
        validate_decomposition(3, [{0, 2}, {1, 3}, {0, 1, 2}, {0, 2, 3}])


def test_missing_intersection_rejected():
    with pytest.raises(NotIntersectionClosed):
        validate_decomposition(3, [{0, 1, 3}, {1, 2, 3}])


def test_uncovered_side_rejected():
    with pytest.raises(NotCovering):
        validate_decomposition(3, [{0, 1, 2}])


def test_side_is_not_a_diagonal():
    with pytest.raises(InvalidDecomposition):
        PolygonalDecomposition(3, ((0, 3),))


@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (5, 14)])
def test_triangulation_counts(n, count):
    assert len(enumerate_triangulations(n)) == count


@pytest.mark.parametrize("n", range(2, 9))
def test_triangulations_match_brute_force(n):
    found = [t.diagonals for t in enumerate_triangulations(n)]
    assert found == brute_triangulations(n)
    assert len(found) == catalan(n - 1)


def test_splits():
    assert set(first_triangle_split(4).faces) == {(0, 1, 2), (0, 2, 3, 4)}
    assert set(last_triangle_split(4).faces) == {(2, 3, 4), (0, 1, 2, 4)}


@given(decompositions())
def test_faces_cover_and_count(dec):
    # k non-crossing diagonals cut the polygon into k+1 faces
    assert len(dec.faces) == len(dec.diagonals) + 1
    assert set().union(*map(set, dec.faces)) == set(range(dec.n + 1))
    # every face is a convex polygon whose sides are sides or diagonals
    for f in dec.faces:
        for a, b in zip(f, f[1:] + f[:1]):
            a, b = min(a, b), max(a, b)
            assert is_side(dec.n, a, b) or (a, b) in dec.diagonals or len(f) == 2


@given(decompositions())
def test_validation_roundtrip(dec):
    if dec.n >= 2:
        assert validate_decomposition(dec.n, dec.polygons) == dec
    assert decomposition_from_json(dec.to_json()) == dec


@given(decompositions())
def test_polygon_family_intersection_closed(dec):
    fam = set(dec.polygons)
    for p, q in itertools.combinations(fam, 2):
        meet = tuple(sorted(set(p) & set(q)))
        if len(meet) >= 2:
            assert meet in fam


def test_faces_meeting_in_a_vertex_are_allowed():
    dec = validate_decomposition(5, [{0, 1, 2}, {2, 3, 4}, {0, 2, 4, 5}, {0, 2}, {2, 4}])
    assert dec.diagonals == ((0, 2), (2, 4))
