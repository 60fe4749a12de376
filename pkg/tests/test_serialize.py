import json
import random

import pytest
from hypothesis import given, strategies as st

from sdot_lab import serialize
from sdot_lab.doublecat import box_double, generate_double
from sdot_lab.polygon import PolygonalDecomposition
from sdot_lab.preaug import generate_preaug, representable
from sdot_lab.report import WitnessCollector
from sdot_lab.simpset import FiniteCategory, nerve_of_category, standard_simplex
from sdot_lab.waldhausen import path_construction

OBJECTS = {
    "simplex": lambda: standard_simplex(2, 3),
    "z2": lambda: nerve_of_category(FiniteCategory.cyclic_group(2), 3),
    "pdec": lambda: PolygonalDecomposition(5, ((0, 2), (2, 5))),
    "W2": lambda: generate_double("W", 2),
    "H3": lambda: generate_double("H", 3),
    "box": lambda: box_double(1, 2),
    "Wpre": lambda: generate_preaug("W", 1, 2),
    "sigma": lambda: representable((1, 0), 1),
    "path": lambda: path_construction(standard_simplex(2, 3), 1),
}


@pytest.mark.parametrize("name", OBJECTS)
def test_roundtrip_is_byte_identical(name):
    text = serialize.canonical(OBJECTS[name]())
    again = serialize.canonical(serialize.loads(text))
    assert again == text
    assert text.endswith("\n")
    assert list(json.loads(text)) == sorted(json.loads(text))


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_random_nerves_roundtrip(seed, size):
    X = nerve_of_category(FiniteCategory.random_poset(random.Random(seed), size), 2)
    text = serialize.canonical(X)
    Y = serialize.loads(text)
    assert Y.sizes() == X.sizes()
    assert serialize.canonical(Y) == text


@pytest.mark.parametrize("name", OBJECTS)
def test_unknown_fields_rejected(name):
    doc = serialize.to_json(OBJECTS[name]())
    doc["extra"] = 1
    with pytest.raises(serialize.SchemaError):
        serialize.from_json(doc)


def test_missing_or_unknown_schema():
    with pytest.raises(serialize.SchemaError):
        serialize.from_json({"n": 3})
    with pytest.raises(serialize.SchemaError):
        serialize.from_json({"schema": "tss/v9"})
    with pytest.raises(ValueError):
        serialize.loads("{not json")


def test_corrupt_face_array_rejected():
    doc = serialize.to_json(standard_simplex(1, 1))
    first = next(iter(doc["faces"]))
    doc["faces"][first][0] = [99] * len(doc["faces"][first][0])
    with pytest.raises(ValueError):
        serialize.from_json(doc)


def test_augmentation_survives():
    D = serialize.loads(serialize.canonical(generate_double("W", 2)))
    assert len(D.augmentation) == 3


def test_report_schema():
    w = WitnessCollector("segal")
    w.fail("segal_map", level=2, element=[1, 2], preimages=0)
    doc = w.report().to_json()
    assert doc["schema"] == "report/v1" and doc["verdict"] is False
    assert doc["witnesses"][0]["count"] == 1
