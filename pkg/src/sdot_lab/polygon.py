"""Polygonal decompositions of the (n+1)-gon with vertices 0..n."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable


class InvalidDecomposition(ValueError):
    pass


class CrossingDiagonals(InvalidDecomposition):
    pass


class NotIntersectionClosed(InvalidDecomposition):
    pass


class NotCovering(InvalidDecomposition):
    pass


Pair = tuple[int, int]


def is_side(n: int, a: int, b: int) -> bool:
    a, b = min(a, b), max(a, b)
    return b - a == 1 or (a == 0 and b == n)


def crosses(d: Pair, e: Pair) -> bool:
    (a, b), (c, d2) = sorted(d), sorted(e)
    return a < c < b < d2 or c < a < d2 < b


def cut_faces(n: int, diagonals: Iterable[Pair]) -> list[tuple[int, ...]]:
    """Maximal polygons obtained by cutting the (n+1)-gon along non-crossing diagonals."""
    faces = [tuple(range(n + 1))]
    for a, b in sorted(tuple(sorted(d)) for d in diagonals):
        for pos, face in enumerate(faces):
            if a in face and b in face:
                inside = tuple(v for v in face if a <= v <= b)
                outside = tuple(v for v in face if v <= a or v >= b)
                faces[pos : pos + 1] = [outside, inside]
                break
    return sorted(faces)


@dataclass(frozen=True)
class PolygonalDecomposition:
    """A set of pairwise non-crossing diagonals of the (n+1)-gon.

    The diagonal set is the canonical form; the polygon family (faces cut out
    by the diagonals, plus the diagonals themselves) is derived.
    """

    n: int
    diagonals: tuple[Pair, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidDecomposition("a polygon needs n >= 1")
        diags = tuple(sorted({tuple(sorted(d)) for d in self.diagonals}))
        object.__setattr__(self, "diagonals", diags)
        for a, b in diags:
            if not (0 <= a < b <= self.n) or is_side(self.n, a, b):
                raise InvalidDecomposition(f"{{{a},{b}}} is not a diagonal of the {self.n + 1}-gon")
        for d, e in combinations(diags, 2):
            if crosses(d, e):
                raise CrossingDiagonals(f"diagonals {d} and {e} cross")

    @classmethod
    def trivial(cls, n: int) -> "PolygonalDecomposition":
        return cls(n, ())

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(cut_faces(self.n, self.diagonals))

    @cached_property
    def polygons(self) -> tuple[tuple[int, ...], ...]:
        """Faces and diagonals, ordered by size then lexicographically."""
        return tuple(sorted(set(self.faces) | set(self.diagonals), key=lambda s: (len(s), s)))

    @property
    def is_triangulation(self) -> bool:
        return all(len(f) == 3 for f in self.faces)

    def max_rank(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def to_json(self) -> dict:
        return {"schema": "pdec/v1", "n": self.n, "diagonals": [list(d) for d in self.diagonals]}


def validate_decomposition(n: int, polygons: Iterable[Iterable[int]]) -> PolygonalDecomposition:
    """Validate a family of vertex subsets and return its decomposition.

    Intersections are required to be in the family whenever they have at
    least two vertices; two faces meeting in a single vertex are allowed.
    """
    family = {tuple(sorted(set(p))) for p in polygons}
    for p in family:
        if len(p) < 2 or p[0] < 0 or p[-1] > n:
            raise InvalidDecomposition(f"{list(p)} is not a subset of size >= 2 of 0..{n}")
    pairs = [p for p in family if len(p) == 2 and not is_side(n, *p)]
    for d, e in combinations(sorted(pairs), 2):
        if crosses(d, e):
            raise CrossingDiagonals(f"diagonals {d} and {e} cross")
    for p, q in combinations(sorted(family), 2):
        meet = tuple(sorted(set(p) & set(q)))
        if len(meet) >= 2 and meet not in family:
            raise NotIntersectionClosed(f"{list(p)} and {list(q)} meet in {list(meet)}, which is missing")
    sides = [(i, i + 1) for i in range(n)] + ([(0, n)] if n >= 2 else [])
    for a, b in sides:
        if not any(a in p and b in p for p in family):
            raise NotCovering(f"side {{{a},{b}}} is not covered")
    dec = PolygonalDecomposition(n, pairs)
    if set(dec.polygons) != family:
        raise InvalidDecomposition(
            f"family is not the set of faces cut out by its diagonals {list(dec.diagonals)}"
        )
    return dec


def _triangulate(vertices: tuple[int, ...]) -> list[frozenset]:
    """All triangulations of a convex polygon, as sets of diagonals."""
    if len(vertices) <= 3:
        return [frozenset()]
    first, last = vertices[0], vertices[-1]
    out = []
    # the triangle on the side (first, last) has apex vertices[k]
    for k in range(1, len(vertices) - 1):
        left, right = vertices[: k + 1], vertices[k:]
        own = set()
        if k > 1:
            own.add((first, vertices[k]))
        if k < len(vertices) - 2:
            own.add((vertices[k], last))
        for tl in _triangulate(left):
            for tr in _triangulate(right):
                out.append(frozenset(own) | tl | tr)
    return out


def enumerate_triangulations(n: int) -> list[PolygonalDecomposition]:
    """All triangulations of the (n+1)-gon, ordered lexicographically by sorted diagonals."""
    if n < 2:
        raise ValueError("triangulations need n >= 2")
    found = sorted({tuple(sorted(t)) for t in _triangulate(tuple(range(n + 1)))})
    return [PolygonalDecomposition(n, t) for t in found]


def first_triangle_split(n: int) -> PolygonalDecomposition:
    """Triangle {0,1,2} plus the n-gon {0,2,...,n}."""
    if n < 3:
        raise ValueError("needs n >= 3")
    return PolygonalDecomposition(n, ((0, 2),))


def last_triangle_split(n: int) -> PolygonalDecomposition:
    """Triangle {n-2,n-1,n} plus the n-gon {0,...,n-2,n}."""
    if n < 3:
        raise ValueError("needs n >= 3")
    return PolygonalDecomposition(n, ((n - 2, n),))


def decomposition_from_json(doc: dict) -> PolygonalDecomposition:
    return PolygonalDecomposition(doc["n"], tuple(tuple(d) for d in doc["diagonals"]))
