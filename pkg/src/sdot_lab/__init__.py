"""Finite combinatorics of the S•-construction: simplicial sets, double categories and presheaves on Σ."""
from .doublecat import AugmentedDoubleCategory, DoubleCategory, check_double, generate_double
from .polygon import PolygonalDecomposition, enumerate_triangulations
from .preaug import PreaugBisimplicialSet, check_preaug, generate_preaug
from .segal_check import check_simplicial
from .simpset import FiniteCategory, SimplicialSet, nerve_of_category, standard_simplex
from .waldhausen import augmented_nerve, counit_map, path_construction, sdot_double, sdot_preaug, unit_map

__all__ = [
    "AugmentedDoubleCategory",
    "DoubleCategory",
    "FiniteCategory",
    "PolygonalDecomposition",
    "PreaugBisimplicialSet",
    "SimplicialSet",
    "augmented_nerve",
    "check_double",
    "check_preaug",
    "check_simplicial",
    "counit_map",
    "enumerate_triangulations",
    "generate_double",
    "generate_preaug",
    "nerve_of_category",
    "path_construction",
    "sdot_double",
    "sdot_preaug",
    "standard_simplex",
    "unit_map",
]
