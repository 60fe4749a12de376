import pytest
from hypothesis import given, strategies as st

from sdot_lab.doublecat import generate_double
from sdot_lab.polygon import PolygonalDecomposition
from sdot_lab.preaug import MINUS_ONE, check_preaug, constant_point, find_isomorphism, generate_preaug, hom_preaug, representable
from sdot_lab.simpset import DepthTooSmall, FiniteCategory, delta_of_decomposition, monotone_maps, nerve_of_category, standard_simplex
from sdot_lab.waldhausen import (
    augmented_nerve,
    counit_map,
    counit_naturality,
    ordinal_sum,
    path_construction,
    roundtrip_report,
    sdot_double,
    sdot_preaug,
    top_chain,
    triangle_path,
    triangle_sdot,
    unit_map,
    unit_naturality,
    window_inclusion,
)


def z2(depth):
    return nerve_of_category(FiniteCategory.cyclic_group(2), depth)


@given(st.integers(0, 2), st.integers(0, 2), st.data())
def test_ordinal_sum_is_monotone_and_functorial(q, r, data):
    theta = data.draw(st.sampled_from(monotone_maps(1, q)))
    phi = data.draw(st.sampled_from(monotone_maps(1, r)))
    s = ordinal_sum(theta, q, phi, r)
    assert list(s.values) == sorted(s.values)
    assert s.codomain_rank == q + 1 + r
    # (θ', φ') ∘ (θ, φ) ↦ sum of composites
    theta2 = data.draw(st.sampled_from(monotone_maps(q, 2)))
    phi2 = data.draw(st.sampled_from(monotone_maps(r, 2)))
    lhs = ordinal_sum(theta2, 2, phi2, 2).after(s)
    rhs = ordinal_sum(tuple(theta2[t] for t in theta), 2, tuple(phi2[p] for p in phi), 2)
    assert lhs == rhs


def test_path_construction_examples():
    P = path_construction(z2(3), 1)
    assert P.size((0, 1)) == 4
    P0 = path_construction(standard_simplex(0, 5))
    assert set(P0.sizes().values()) == {1}
    assert find_isomorphism(P0, generate_preaug("W", 0, P0.depth)) is not None
    with pytest.raises(DepthTooSmall):
        path_construction(standard_simplex(2, 2), 1)


def test_sdot_of_double_categories():
    for kind, n in [("W", 1), ("W", 2), ("H", 2), ("V", 2)]:
        D = generate_double(kind, n)
        assert sdot_double(D, 0).size(0) == len(D.augmentation)
    assert sdot_double(generate_double("W", 2), 2).sizes() == [3, 6, 10]


def test_sdot_of_h1():
    # every augmented functor W_1 -> H_1 is constant at the single augmented object
    X = sdot_double(generate_double("H", 1), 2)
    assert X.sizes() == [1, 1, 1]


def test_sdot_preaug_of_path_of_simplex():
    assert sdot_preaug(path_construction(standard_simplex(2, 5), 2), 2).sizes() == [3, 6, 10]


def test_window_inclusion():
    assert window_inclusion(0, 0, 1).components[(0, 0)] == (generate_preaug("W", 1, 1).index((0, 0), ((0,), (1,))),)
    f = window_inclusion(1, 1, 1)
    W3 = generate_preaug("W", 3, 1)
    image = {W3.labels[(0, 0)][y] for y in f.components[(0, 0)]}
    assert image == {((0,), (2,)), ((0,), (3,)), ((1,), (2,)), ((1,), (3,))}
    assert f.is_injective() and f.is_natural()
    assert f.components[MINUS_ONE] == ()
    assert top_chain(1, 1) == ((0, 1), (2, 3))


def test_augmented_nerve_of_w1():
    Y = augmented_nerve(generate_double("W", 1), 1)
    assert Y.size((0, 0)) == 3 and Y.size(MINUS_ONE) == 2
    assert len(hom_preaug(generate_preaug("W", 1, 1), Y)) == 3


def test_augmented_nerve_of_w2_is_double_segal():
    assert check_preaug(augmented_nerve(generate_double("W", 2), 2), "double_segal").verdict


def test_augmented_nerve_requires_stable_augmented():
    with pytest.raises(ValueError):
        augmented_nerve(generate_double("H", 1), 1)


def test_nerve_of_h1_is_pointed():
    assert check_preaug(augmented_nerve(generate_double("H", 1), 2, check=False), "pointed").verdict


def test_path_of_z2_is_split():
    assert check_preaug(path_construction(z2(3), 1), "split").verdict


@pytest.mark.parametrize("n", range(4))
def test_unit_on_simplices(n):
    res = unit_map(standard_simplex(n, 5), 2)
    assert res.map.all_bijective
    assert unit_naturality(standard_simplex(n, 5), res).verdict


def test_unit_on_z2():
    assert unit_map(z2(7), 3).map.all_bijective


def test_unit_on_point():
    assert unit_map(standard_simplex(0, 3), 1).map.all_bijective


@pytest.mark.parametrize("make", [
    lambda: augmented_nerve(generate_double("W", 2), 3),
    lambda: path_construction(z2(5), 2),
    lambda: generate_preaug("W", 0, 2),
], ids=["nerve_W2", "path_Z2", "W0"])
def test_counit_bijective(make):
    Y = make()
    res = counit_map(Y)
    assert res.map.all_bijective
    assert counit_naturality(Y, res).verdict


def test_counit_on_representable_misses_everything():
    # W[n] has augmentation cells and Σ[1,1] has none, so S•Σ[1,1] is empty
    res = counit_map(representable((1, 1), 2))
    assert res.sdot.simplicial.sizes() == [0, 0, 0]
    assert not res.map.bijective["0,0"]


def test_triangles():
    assert triangle_path(z2(5), 2).verdict
    assert triangle_path(standard_simplex(2, 5), 2).verdict
    assert triangle_sdot(augmented_nerve(generate_double("W", 2), 2)).verdict


def test_roundtrip_reports():
    rep = roundtrip_report(standard_simplex(3, 5), 2)
    assert rep.all_bijective and rep.theorem_expected
    rep = roundtrip_report(generate_double("W", 3), 2)
    assert rep.all_bijective and rep.theorem_expected
    X, _ = delta_of_decomposition(PolygonalDecomposition(3, ((1, 3),)), 5)
    rep = roundtrip_report(X, 2)
    assert not rep.theorem_expected
    assert rep.to_json()["schema"] == "report/v1"


@pytest.mark.parametrize("n", [1, 2])
def test_sdot_of_nerve_matches_sdot_of_double(n):
    D = generate_double("W", n)
    assert sdot_preaug(augmented_nerve(D, 3), 3).sizes() == sdot_double(D, 3).sizes()
