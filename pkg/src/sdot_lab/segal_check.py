"""Segal, 2-Segal, unitality and reducedness checks for truncated simplicial sets."""
from __future__ import annotations

from .polygon import PolygonalDecomposition, enumerate_triangulations, first_triangle_split, last_triangle_split
from .report import CheckReport, WitnessCollector
from .simpset import (
    ComparisonResult,
    DepthTooSmall,
    MonotoneMap,
    SimplicialSet,
    p_segal_map,
    pullback_comparison,
    segal_map,
)

SIMPLICIAL_PROPERTIES = (
    "segal",
    "twosegal_full",
    "twosegal_reduced",
    "unital_full",
    "unital_reduced",
    "reduced",
)

MIN_UP_TO = {
    "segal": 2,
    "twosegal_full": 3,
    "twosegal_reduced": 3,
    "unital_full": 2,
    "unital_reduced": 2,
    "reduced": 0,
}


def _limit_element_labels(X: SimplicialSet, res: ComparisonResult, pos: int) -> list:
    """Readable limit element: ``[(vertex set, label), ...]`` over the family."""
    elem = res.limit.elements[pos]
    return [(list(idx), X.labels[len(idx) - 1][x]) for idx, x in zip(res.limit.indices, elem)]


def _record(w: WitnessCollector, clause: str, X: SimplicialSet, n: int, where, res: ComparisonResult) -> None:
    for pos, count in res.failures():
        w.fail(clause, level=n, where=where, element=_limit_element_labels(X, res, pos), preimages=count)


def _unital_square(X: SimplicialSet, n: int, i: int) -> ComparisonResult:
    """``X_{n-1} -> X_n x_{X_1} X_0`` via ``y ↦ (s_i y, vertex_i y)``.

    ``X_n -> X_1`` restricts to the edge ``{i, i+1}``; ``X_0 -> X_1`` is ``s_0``.
    """
    top = X.act(MonotoneMap.vertex(n - 1, i))  # X_{n-1} -> X_0
    left = X.degeneracy(n - 1, i)  # X_{n-1} -> X_n
    bottom = X.act(MonotoneMap.edge(n, i))  # X_n -> X_1
    right = X.degeneracy(0, 0)  # X_0 -> X_1
    return pullback_comparison(top, left, right, bottom, X.size(n - 1), X.size(n), X.size(0))


def _unital_witness(X: SimplicialSet, n: int, res: ComparisonResult, pos: int):
    b, c = res.limit.elements[pos]
    return {"simplex": X.labels[n][b], "vertex": X.labels[0][c]}


def check_simplicial(X: SimplicialSet, prop: str, up_to: int | None = None) -> CheckReport:
    """Decide ``prop`` by strict bijectivity of the relevant comparison maps at levels ``<= up_to``."""
    if prop not in SIMPLICIAL_PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    up_to = X.depth if up_to is None else up_to
    if prop != "reduced":
        if up_to < MIN_UP_TO[prop]:
            raise DepthTooSmall(f"{prop} needs up_to >= {MIN_UP_TO[prop]}")
        if X.depth < up_to:
            raise DepthTooSmall(f"up_to {up_to} exceeds depth {X.depth}")
    w = WitnessCollector(prop)
    if prop == "segal":
        for n in range(2, up_to + 1):
            _record(w, "segal_map", X, n, "spine", segal_map(X, n))
    elif prop == "twosegal_full":
        for n in range(3, up_to + 1):
            for T in enumerate_triangulations(n):
                _record(w, "triangulation", X, n, [list(d) for d in T.diagonals], p_segal_map(X, T))
    elif prop == "twosegal_reduced":
        for n in range(3, up_to + 1):
            for T in (first_triangle_split(n), last_triangle_split(n)):
                _record(w, "split", X, n, [list(d) for d in T.diagonals], p_segal_map(X, T))
    elif prop in ("unital_full", "unital_reduced"):
        tops = range(2, up_to + 1) if prop == "unital_full" else (2,)
        for n in tops:
            for i in range(n):
                res = _unital_square(X, n, i)
                for pos, count in res.failures():
                    w.fail("degeneracy_square", level=n, where=f"s_{i}", element=_unital_witness(X, n, res, pos), preimages=count)
    elif prop == "reduced":
        if X.size(0) != 1:
            w.fail("vertices", level=0, preimages=X.size(0))
    return w.report()


def p_segal_report(X: SimplicialSet, P: PolygonalDecomposition) -> CheckReport:
    w = WitnessCollector("p_segal")
    _record(w, "decomposition", X, P.n, [list(d) for d in P.diagonals], p_segal_map(X, P))
    return w.report()
