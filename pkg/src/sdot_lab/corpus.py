"""Named test corpora shared by the acceptance suite and the experiment scripts."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .doublecat import AugmentedDoubleCategory, generate_double
from .polygon import PolygonalDecomposition
from .preaug import PreaugBisimplicialSet, generate_preaug, representable
from .simpset import (
    FiniteCategory,
    SimplicialSet,
    boundary,
    collapse_face,
    delta_of_decomposition,
    nerve_of_category,
    spine,
    standard_simplex,
)
from .waldhausen import augmented_nerve, path_construction


@dataclass(frozen=True)
class CorpusConfig:
    simplicial_depth: int = 5
    preaug_depth: int = 2
    random_posets: int = 3
    poset_size: int = 4
    seed: int = 2024


def simplicial_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[tuple[str, SimplicialSet]]:
    """Twenty simplicial sets: simplices, nerves, decompositions, quotients and a few non-Segal shapes."""
    d = cfg.simplicial_depth
    out = [(f"simplex_{n}", standard_simplex(n, d)) for n in range(5)]
    out += [(f"nerve_order_{n}", nerve_of_category(FiniteCategory.linear_order(n), d)) for n in (2, 3)]
    out += [(f"nerve_Z{m}", nerve_of_category(FiniteCategory.cyclic_group(m), d)) for m in (2, 3)]
    out.append(("nerve_square", nerve_of_category(FiniteCategory.commutative_square(), d)))
    rng = random.Random(cfg.seed)
    for k in range(cfg.random_posets):
        out.append((f"nerve_random_poset_{k}", nerve_of_category(FiniteCategory.random_poset(rng, cfg.poset_size), d)))
    out.append(("delta_P_square", delta_of_decomposition(PolygonalDecomposition(3, ((1, 3),)), d)[0]))
    out.append(("delta_P_pentagon", delta_of_decomposition(PolygonalDecomposition(4, ((0, 2),)), d)[0]))
    out.append(("spine_3", spine(3, d)[0]))
    out.append(("boundary_2", boundary(2, d)[0]))
    out.append(("boundary_3", boundary(3, d)[0]))
    out.append(("collapse_2_01", collapse_face(2, (0, 1), d)))
    out.append(("collapse_3_12", collapse_face(3, (1, 2), d)))
    return out


def double_corpus(max_n: int = 3) -> list[tuple[str, AugmentedDoubleCategory]]:
    return [(f"{kind}_{n}", generate_double(kind, n)) for kind in ("W", "H", "V") for n in range(max_n + 1)]


def stable_augmented_corpus(max_n: int = 3) -> list[tuple[str, AugmentedDoubleCategory]]:
    """The corpus members that are stable and augmented (the ``W_n``)."""
    return [(f"W_{n}", generate_double("W", n)) for n in range(max_n + 1)]


def preaug_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[tuple[str, PreaugBisimplicialSet]]:
    """Path constructions of the simplicial corpus plus generators and nerves."""
    d = cfg.preaug_depth
    out = [(f"path_{name}", path_construction(X, d)) for name, X in simplicial_corpus(cfg)]
    out += [(f"{kind}[{n}]", generate_preaug(kind, n, d)) for kind in ("W", "H", "V") for n in (1, 2)]
    out += [("sigma_1_1", representable((1, 1), d)), ("sigma_0_1", representable((0, 1), d))]
    out += [(f"nerve_W_{n}", augmented_nerve(generate_double("W", n), d)) for n in (1, 2)]
    return out
