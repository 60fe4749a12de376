import pytest
from hypothesis import given, settings, strategies as st

from conftest import monotone_count
from sdot_lab.preaug import (
    MINUS_ONE,
    InvalidPresheaf,
    PreaugBisimplicialSet,
    check_preaug,
    constant_point,
    find_isomorphism,
    generate_preaug,
    hom_preaug,
    identity_map,
    parse_key,
    key_name,
    representable,
)


def test_sigma_sizes():
    S = representable((1, 1), 2)
    assert S.size((0, 0)) == 4 and S.size((1, 1)) == 9 and S.size((2, 2)) == 16
    assert S.size(MINUS_ONE) == 0
    assert set(representable((0, 0), 2).sizes().values()) == {1, 0}
    assert representable((0, 0), 2).size(MINUS_ONE) == 0
    assert set(representable(MINUS_ONE, 2).sizes().values()) == {1}


@given(st.integers(0, 2), st.integers(0, 2), st.integers(1, 2))
def test_representable_sizes_match_brute_force(q, r, depth):
    S = representable((q, r), depth)
    for k in range(depth + 1):
        for l in range(depth + 1):
            assert S.size((k, l)) == monotone_count(k, q) * monotone_count(l, r)


def test_w_and_h_examples():
    W1 = generate_preaug("W", 1, 1)
    assert (W1.size((0, 0)), W1.size((1, 0)), W1.size((1, 1)), W1.size(MINUS_ONE)) == (3, 4, 5, 2)
    H2 = generate_preaug("H", 2, 2)
    assert H2.size((0, 1)) == 6 and H2.size(MINUS_ONE) == 1
    assert find_isomorphism(generate_preaug("H", 0, 2), constant_point(2)) is not None
    assert find_isomorphism(generate_preaug("V", 0, 2), constant_point(2)) is not None


@pytest.mark.parametrize("Y", [generate_preaug("W", 1, 2), generate_preaug("H", 2, 2), representable((0, 1), 2)], ids=["W1", "H2", "sigma01"])
@pytest.mark.parametrize("index", [(0, 0), (1, 0), (0, 1), (1, 1), MINUS_ONE])
def test_yoneda_counts(Y, index):
    assert len(hom_preaug(representable(index, Y.depth), Y)) == Y.size(index)


def test_maps_are_natural():
    Y = generate_preaug("W", 2, 2)
    assert identity_map(Y).is_natural()
    for f in hom_preaug(representable((1, 0), 2), Y)[:5]:
        assert f.is_natural()
        assert f.after(identity_map(representable((1, 0), 2))).components == f.components


def test_broken_face_detected():
    Y = representable((1, 1), 1)
    hface = dict(Y.hface)
    d0 = hface[(1, 1)][0]
    hface[(1, 1)] = [tuple(d0[0] for _ in d0)] + list(hface[(1, 1)][1:])
    with pytest.raises(InvalidPresheaf):
        PreaugBisimplicialSet(Y.depth, Y.labels, hface, Y.vface, Y.hdegen, Y.vdegen, Y.aug)


def test_key_names():
    for key in [(0, 0), (2, 1), MINUS_ONE]:
        assert parse_key(key_name(key)) == key


def test_sigma_fails_augmented_baby():
    rep = check_preaug(representable((1, 1), 2), "augmented_baby")
    assert not rep.verdict


def test_w_preaug_passes_structural_checks():
    Y = generate_preaug("W", 2, 3)
    for prop in ("double_segal", "stable_baby", "stable_full", "augmented_baby", "augmented_full"):
        assert check_preaug(Y, prop).verdict, prop
    assert not check_preaug(Y, "pointed").verdict


def test_pointed():
    assert check_preaug(constant_point(2), "pointed").verdict
    # H[1] has a single augmentation cell but is not augmented
    rep = check_preaug(generate_preaug("H", 1, 2), "pointed")
    assert not rep.verdict
    assert rep.witnesses[0].clause == "vertical_augmentation"


def test_unknown_property():
    with pytest.raises(ValueError):
        check_preaug(constant_point(1), "bogus")
