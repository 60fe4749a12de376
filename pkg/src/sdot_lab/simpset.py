"""Finite truncated simplicial sets, nerves, and finite limits over posets.

A truncated simplicial set stores levels ``X_0 .. X_N`` as lists of labels
together with the generating face and degeneracy maps as index arrays.  The
action of an arbitrary monotone map is computed by factoring it into cofaces
and codegeneracies.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Callable, Hashable, Iterable, Sequence


class DepthTooSmall(ValueError):
    pass


class InvalidSimplicialSet(ValueError):
    pass


class InvalidCategory(ValueError):
    pass


Array = tuple[int, ...]


# ---------------------------------------------------------------------------
# monotone maps


@dataclass(frozen=True)
class MonotoneMap:
    """A weakly increasing map ``[k] -> [n]`` given by its list of values."""

    codomain_rank: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a monotone map needs at least one value")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"values {self.values} are not weakly increasing")
        if self.values[0] < 0 or self.values[-1] > self.codomain_rank:
            raise ValueError(f"values {self.values} leave [0, {self.codomain_rank}]")

    @property
    def domain_rank(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def after(self, inner: "MonotoneMap") -> "MonotoneMap":
        """Composite ``self ∘ inner``."""
        if inner.codomain_rank != self.domain_rank:
            raise ValueError("ranks do not match")
        return MonotoneMap(self.codomain_rank, tuple(self.values[v] for v in inner.values))

    @classmethod
    def identity(cls, n: int) -> "MonotoneMap":
        return cls(n, tuple(range(n + 1)))

    @classmethod
    def coface(cls, n: int, i: int) -> "MonotoneMap":
        """``d^i : [n-1] -> [n]`` skipping ``i``."""
        return cls(n, tuple(v for v in range(n + 1) if v != i))

    @classmethod
    def codegeneracy(cls, n: int, i: int) -> "MonotoneMap":
        """``s^i : [n+1] -> [n]`` hitting ``i`` twice."""
        return cls(n, tuple(v if v <= i else v - 1 for v in range(n + 2)))

    @classmethod
    def vertex(cls, n: int, i: int) -> "MonotoneMap":
        """``[0] -> [n]``, ``0 ↦ i``."""
        return cls(n, (i,))

    @classmethod
    def edge(cls, n: int, i: int) -> "MonotoneMap":
        """``[1] -> [n]``, ``0 < 1 ↦ i < i+1``."""
        return cls(n, (i, i + 1))


def monotone_maps(k: int, n: int) -> list[tuple[int, ...]]:
    """All weakly increasing tuples of length ``k+1`` in ``[0, n]``, lexicographically."""
    return list(combinations_with_replacement(range(n + 1), k + 1))


def action_array(
    values: tuple[int, ...],
    k: int,
    face: Callable[[int, int], Array],
    degen: Callable[[int, int], Array],
    size: Callable[[int], int],
    cache: dict,
) -> Array:
    """Index array of ``θ^* : X_k -> X_j`` for ``θ = values : [j] -> [k]``.

    ``face(m, i)`` is ``d_i : X_m -> X_{m-1}`` and ``degen(m, i)`` is
    ``s_i : X_m -> X_{m+1}``.
    """
    key = (values, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    j = len(values) - 1
    if j == k and values == tuple(range(k + 1)):
        out = tuple(range(size(k)))
    else:
        image = set(values)
        missing = [v for v in range(k + 1) if v not in image]
        if missing:
            # θ = d^i ∘ θ' with i the largest value that is skipped
            i = missing[-1]
            inner = tuple(v if v < i else v - 1 for v in values)
            d = face(k, i)
            rest = action_array(inner, k - 1, face, degen, size, cache)
            out = tuple(rest[y] for y in d)
        else:
            # θ = θ'' ∘ s^a at the first repeated value
            a = next(a for a in range(j) if values[a] == values[a + 1])
            inner = values[: a + 1] + values[a + 2 :]
            rest = action_array(inner, k, face, degen, size, cache)
            s = degen(j - 1, a)
            out = tuple(s[y] for y in rest)
    cache[key] = out
    return out


# ---------------------------------------------------------------------------
# truncated simplicial sets


class SimplicialSet:
    """A simplicial set truncated at ``depth``.

    ``faces[k][i]`` is the array of ``d_i : X_k -> X_{k-1}`` (``k >= 1``) and
    ``degeneracies[k][i]`` the array of ``s_i : X_k -> X_{k+1}`` (``k < depth``).
    Instances are treated as immutable.
    """

    def __init__(
        self,
        depth: int,
        labels: Sequence[Sequence[Hashable]],
        faces: Sequence[Sequence[Array]],
        degeneracies: Sequence[Sequence[Array]],
        *,
        validate: bool = True,
    ):
        if depth < 0 or len(labels) != depth + 1:
            raise InvalidSimplicialSet("need one label list per level 0..depth")
        self.depth = depth
        self.labels = tuple(tuple(level) for level in labels)
        self.faces = tuple(tuple(tuple(a) for a in fs) for fs in faces)
        self.degeneracies = tuple(tuple(tuple(a) for a in ss) for ss in degeneracies)
        self._index = [None] * (depth + 1)
        self._cache: dict = {}
        if validate:
            self.validate()

    # construction -----------------------------------------------------

    @classmethod
    def from_functions(
        cls,
        depth: int,
        levels: Sequence[Sequence[Hashable]],
        face: Callable[[int, int, Hashable], Hashable],
        degen: Callable[[int, int, Hashable], Hashable],
        *,
        validate: bool = True,
    ) -> "SimplicialSet":
        """Build from labelled levels and label-level face/degeneracy functions."""
        index = [{x: n for n, x in enumerate(level)} for level in levels]
        faces: list[list[Array]] = [[]]
        for k in range(1, depth + 1):
            faces.append([tuple(index[k - 1][face(k, i, x)] for x in levels[k]) for i in range(k + 1)])
        degens: list[list[Array]] = []
        for k in range(depth):
            degens.append([tuple(index[k + 1][degen(k, i, x)] for x in levels[k]) for i in range(k + 1)])
        degens.append([])
        return cls(depth, levels, faces, degens, validate=validate)

    # basic accessors ----------------------------------------------------

    def size(self, k: int) -> int:
        return len(self.labels[k])

    def sizes(self) -> list[int]:
        return [len(level) for level in self.labels]

    def index(self, k: int, label: Hashable) -> int:
        if self._index[k] is None:
            self._index[k] = {x: n for n, x in enumerate(self.labels[k])}
        return self._index[k][label]

    def face(self, k: int, i: int) -> Array:
        return self.faces[k][i]

    def degeneracy(self, k: int, i: int) -> Array:
        if k >= self.depth:
            raise DepthTooSmall(f"s_{i} out of level {k} needs depth > {k}")
        return self.degeneracies[k][i]

    def act(self, theta: MonotoneMap | Sequence[int], k: int | None = None) -> Array:
        """Array of ``θ^* : X_k -> X_j`` for ``θ : [j] -> [k]``."""
        if isinstance(theta, MonotoneMap):
            values, k = theta.values, theta.codomain_rank
        else:
            values = tuple(theta)
            if k is None:
                raise ValueError("codomain rank required")
        j = len(values) - 1
        if max(j, k) > self.depth:
            raise DepthTooSmall(f"map [{j}] -> [{k}] exceeds depth {self.depth}")
        return action_array(values, k, self.face, self.degeneracy, self.size, self._cache)

    def is_degenerate(self, k: int, x: int) -> bool:
        if k == 0:
            return False
        return any(x in set(self.degeneracies[k - 1][i]) for i in range(k))

    def nondegenerate(self, k: int) -> list[int]:
        if k == 0:
            return list(range(self.size(0)))
        hit = set()
        for s in self.degeneracies[k - 1]:
            hit.update(s)
        return [x for x in range(self.size(k)) if x not in hit]

    def restrict(self, depth: int) -> "SimplicialSet":
        if depth > self.depth:
            raise DepthTooSmall(f"cannot restrict depth {self.depth} to {depth}")
        degens = list(self.degeneracies[:depth]) + [()]
        return SimplicialSet(depth, self.labels[: depth + 1], self.faces[: depth + 1], degens, validate=False)

    def relabel(self, fn: Callable[[int, Hashable], Hashable]) -> "SimplicialSet":
        labels = [[fn(k, x) for x in level] for k, level in enumerate(self.labels)]
        return SimplicialSet(self.depth, labels, self.faces, self.degeneracies, validate=False)

    def __repr__(self):
        return f"SimplicialSet(depth={self.depth}, sizes={self.sizes()})"

    # validation -----------------------------------------------------------

    def validate(self) -> None:
        """Check array shapes and the simplicial identities on generators."""
        N = self.depth
        for k in range(1, N + 1):
            if len(self.faces[k]) != k + 1:
                raise InvalidSimplicialSet(f"level {k} needs {k + 1} faces")
            for i, d in enumerate(self.faces[k]):
                if len(d) != self.size(k) or any(not 0 <= y < self.size(k - 1) for y in d):
                    raise InvalidSimplicialSet(f"d_{i} on level {k} is malformed")
        for k in range(N):
            if len(self.degeneracies[k]) != k + 1:
                raise InvalidSimplicialSet(f"level {k} needs {k + 1} degeneracies")
            for i, s in enumerate(self.degeneracies[k]):
                if len(s) != self.size(k) or any(not 0 <= y < self.size(k + 1) for y in s):
                    raise InvalidSimplicialSet(f"s_{i} on level {k} is malformed")
        problem = first_simplicial_identity_failure(self.size, self.faces, self.degeneracies, N)
        if problem:
            raise InvalidSimplicialSet(problem)


def _compose(*arrays: Array) -> Array:
    """Apply arrays left to right."""
    out = arrays[0]
    for a in arrays[1:]:
        out = tuple(a[y] for y in out)
    return out


def first_simplicial_identity_failure(size, faces, degens, depth) -> str | None:
    """Return a description of the first violated simplicial identity, if any."""
    for k in range(2, depth + 1):
        for j in range(k + 1):
            for i in range(j):
                # d_i d_j = d_{j-1} d_i
                if _compose(faces[k][j], faces[k - 1][i]) != _compose(faces[k][i], faces[k - 1][j - 1]):
                    return f"d_{i} d_{j} != d_{j - 1} d_{i} on level {k}"
    for k in range(depth):
        ident = tuple(range(size(k)))
        for j in range(k + 1):
            s = degens[k][j]
            for i in range(k + 2):
                lhs = _compose(s, faces[k + 1][i])
                if i in (j, j + 1):
                    rhs = ident
                elif i < j:
                    rhs = _compose(faces[k][i], degens[k - 1][j - 1])
                else:
                    rhs = _compose(faces[k][i - 1], degens[k - 1][j])
                if lhs != rhs:
                    return f"d_{i} s_{j} identity fails on level {k}"
    for k in range(depth - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                # s_i s_j = s_{j+1} s_i  (i <= j)
                if _compose(degens[k][j], degens[k + 1][i]) != _compose(degens[k][i], degens[k + 1][j + 1]):
                    return f"s_{i} s_{j} identity fails on level {k}"
    return None


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    components: tuple[Array, ...]

    def is_natural(self) -> bool:
        return self.first_naturality_failure() is None

    def first_naturality_failure(self) -> str | None:
        X, Y, f = self.source, self.target, self.components
        depth = min(X.depth, Y.depth, len(f) - 1)
        for k in range(1, depth + 1):
            for i in range(k + 1):
                if _compose(f[k], Y.faces[k][i]) != _compose(X.faces[k][i], f[k - 1]):
                    return f"d_{i} on level {k}"
        for k in range(depth):
            for i in range(k + 1):
                if _compose(f[k], Y.degeneracies[k][i]) != _compose(X.degeneracies[k][i], f[k + 1]):
                    return f"s_{i} on level {k}"
        return None

    def is_injective(self) -> bool:
        return all(len(set(c)) == len(c) for c in self.components)

    def bijective_levels(self) -> list[bool]:
        return [sorted(c) == list(range(self.target.size(k))) for k, c in enumerate(self.components)]


# ---------------------------------------------------------------------------
# standard simplices and their subcomplexes


def standard_simplex(n: int, depth: int) -> SimplicialSet:
    """``Δ[n]`` truncated at ``depth``; level ``k`` is the set of monotone maps ``[k] -> [n]``."""
    if n < 0 or depth < 0:
        raise ValueError("n and depth must be non-negative")
    levels = [monotone_maps(k, n) for k in range(depth + 1)]
    return SimplicialSet.from_functions(
        depth,
        levels,
        lambda k, i, x: x[:i] + x[i + 1 :],
        lambda k, i, x: x[: i + 1] + x[i:],
        validate=False,
    )


def generated_subcomplex(
    n: int, generators: Iterable[Iterable[int]], depth: int
) -> tuple[SimplicialSet, SimplicialMap]:
    """Smallest simplicial subset of ``Δ[n]`` containing the simplices spanned by ``generators``.

    Returns the subcomplex and its inclusion into ``Δ[n]``.
    """
    gens = [frozenset(g) for g in generators]
    ambient = standard_simplex(n, depth)
    levels = [[x for x in level if any(set(x) <= g for g in gens)] for level in ambient.labels]
    sub = SimplicialSet.from_functions(
        depth,
        levels,
        lambda k, i, x: x[:i] + x[i + 1 :],
        lambda k, i, x: x[: i + 1] + x[i:],
        validate=False,
    )
    incl = SimplicialMap(
        sub, ambient, tuple(tuple(ambient.index(k, x) for x in sub.labels[k]) for k in range(depth + 1))
    )
    return sub, incl


def spine(n: int, depth: int) -> tuple[SimplicialSet, SimplicialMap]:
    """The spine ``I[n] ⊂ Δ[n]`` with its inclusion."""
    if n < 1 or depth < 1:
        raise ValueError("spine needs n >= 1 and depth >= 1")
    return generated_subcomplex(n, [(i, i + 1) for i in range(n)], depth)


def boundary(n: int, depth: int) -> tuple[SimplicialSet, SimplicialMap]:
    """``∂Δ[n]`` with its inclusion."""
    return generated_subcomplex(n, [tuple(v for v in range(n + 1) if v != i) for i in range(n + 1)], depth)


def delta_of_decomposition(decomposition, depth: int) -> tuple[SimplicialSet, SimplicialMap]:
    """``Δ[P]``: the subcomplex of ``Δ[n]`` generated by the polygons of ``P``."""
    return generated_subcomplex(decomposition.n, decomposition.polygons, depth)


def collapse_face(n: int, face: Sequence[int], depth: int) -> SimplicialSet:
    """``Δ[n] / Δ[face]``: simplices lying in ``face`` are identified with the constant one at ``min(face)``."""
    inside = set(face)
    base = min(inside)

    def canon(t: tuple) -> tuple:
        return (base,) * len(t) if all(v in inside for v in t) else t

    levels = [sorted({canon(c) for c in combinations_with_replacement(range(n + 1), k + 1)}) for k in range(depth + 1)]
    return SimplicialSet.from_functions(
        depth,
        levels,
        lambda k, i, x: canon(x[:i] + x[i + 1 :]),
        lambda k, i, x: canon(x[: i + 1] + x[i:]),
    )


# ---------------------------------------------------------------------------
# finite categories and nerves


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """A finite category with explicit composition table.

    ``compose[(f, g)]`` is the composite "``f`` then ``g``", defined when
    ``target[f] == source[g]``.
    """

    objects: tuple
    morphisms: tuple
    source: dict
    target: dict
    identity: dict
    compose: dict

    def validate(self) -> None:
        obs = set(self.objects)
        for f in self.morphisms:
            if self.source.get(f) not in obs or self.target.get(f) not in obs:
                raise InvalidCategory(f"morphism {f!r} has bad endpoints")
        for x in self.objects:
            e = self.identity.get(x)
            if e is None or self.source[e] != x or self.target[e] != x:
                raise InvalidCategory(f"object {x!r} lacks an identity")
        for f in self.morphisms:
            for g in self.morphisms:
                composable = self.target[f] == self.source[g]
                h = self.compose.get((f, g))
                if composable != (h is not None):
                    raise InvalidCategory(f"composition table wrong at ({f!r}, {g!r})")
                if h is not None and (self.source[h], self.target[h]) != (self.source[f], self.target[g]):
                    raise InvalidCategory(f"composite of ({f!r}, {g!r}) has wrong endpoints")
        for f in self.morphisms:
            if self.compose[(self.identity[self.source[f]], f)] != f:
                raise InvalidCategory(f"left unit law fails at {f!r}")
            if self.compose[(f, self.identity[self.target[f]])] != f:
                raise InvalidCategory(f"right unit law fails at {f!r}")
        for (f, g), fg in self.compose.items():
            for h in self.morphisms:
                if self.target[g] == self.source[h]:
                    if self.compose[(fg, h)] != self.compose[(f, self.compose[(g, h)])]:
                        raise InvalidCategory(f"associativity fails at ({f!r}, {g!r}, {h!r})")

    @classmethod
    def from_poset(cls, elements: Sequence, leq: Callable[[object, object], bool]) -> "FiniteCategory":
        pairs = tuple((a, b) for a in elements for b in elements if leq(a, b))
        return cls(
            objects=tuple(elements),
            morphisms=pairs,
            source={p: p[0] for p in pairs},
            target={p: p[1] for p in pairs},
            identity={a: (a, a) for a in elements},
            compose={(f, g): (f[0], g[1]) for f in pairs for g in pairs if f[1] == g[0]},
        )

    @classmethod
    def linear_order(cls, n: int) -> "FiniteCategory":
        """The category ``[n] = {0 < 1 < ... < n}``."""
        return cls.from_poset(list(range(n + 1)), lambda a, b: a <= b)

    @classmethod
    def terminal(cls) -> "FiniteCategory":
        return cls.linear_order(0)

    @classmethod
    def commutative_square(cls) -> "FiniteCategory":
        """``[1] x [1]``: a commuting square."""
        return cls.from_poset(
            [(0, 0), (0, 1), (1, 0), (1, 1)], lambda a, b: a[0] <= b[0] and a[1] <= b[1]
        )

    @classmethod
    def cyclic_group(cls, order: int) -> "FiniteCategory":
        """The one-object category of ``Z/order``."""
        mors = tuple(range(order))
        return cls(
            objects=("*",),
            morphisms=mors,
            source={g: "*" for g in mors},
            target={g: "*" for g in mors},
            identity={"*": 0},
            compose={(a, b): (a + b) % order for a in mors for b in mors},
        )

    @classmethod
    def random_poset(cls, rng: random.Random, size: int, density: float = 0.4) -> "FiniteCategory":
        """A random poset on ``0..size-1`` (transitive closure of random forward edges)."""
        above = {a: {a} for a in range(size)}
        for a in range(size):
            for b in range(a + 1, size):
                if rng.random() < density:
                    above[a].add(b)
        for a in reversed(range(size)):
            for b in sorted(above[a]):
                if b != a:
                    above[a] |= above[b]
        return cls.from_poset(list(range(size)), lambda a, b: b in above[a])


def nerve_of_category(C: FiniteCategory, depth: int) -> SimplicialSet:
    """Level ``k`` holds the ``k``-chains of composable morphisms (objects at level 0)."""
    C.validate()
    levels: list[list] = [list(C.objects)]
    by_source: dict = {}
    for f in C.morphisms:
        by_source.setdefault(C.source[f], []).append(f)
    if depth >= 1:
        levels.append([(f,) for f in C.morphisms])
    for k in range(2, depth + 1):
        levels.append([c + (g,) for c in levels[-1] for g in by_source.get(C.target[c[-1]], ())])

    def vertex(chain, i):
        return C.source[chain[0]] if i == 0 else C.target[chain[i - 1]]

    def face(k, i, x):
        if k == 1:
            return C.target[x[0]] if i == 0 else C.source[x[0]]
        if i == 0:
            return x[1:]
        if i == k:
            return x[:-1]
        return x[: i - 1] + (C.compose[(x[i - 1], x[i])],) + x[i + 1 :]

    def degen(k, i, x):
        if k == 0:
            return (C.identity[x],)
        return x[:i] + (C.identity[vertex(x, i)],) + x[i:]

    return SimplicialSet.from_functions(depth, levels, face, degen)


# ---------------------------------------------------------------------------
# finite limits over posets


@dataclass(frozen=True, eq=False)
class PosetDiagram:
    """A contravariant set-valued diagram on a finite poset.

    ``maps[(p, q)]`` for ``p < q`` is the restriction ``D(q) -> D(p)`` as an
    index array.  The keys must form a transitively closed strict order.
    """

    indices: tuple
    sizes: dict
    maps: dict

    def validate(self) -> None:
        below: dict = {q: set() for q in self.indices}
        for p, q in self.maps:
            below[q].add(p)
        for (p, q), f in self.maps.items():
            if len(f) != self.sizes[q] or any(not 0 <= y < self.sizes[p] for y in f):
                raise ValueError(f"map {p!r} <- {q!r} is malformed")
            for o in below[p]:
                if (o, q) not in self.maps:
                    raise ValueError(f"relation {o!r} < {q!r} missing (not transitive)")
                if _compose(f, self.maps[(o, p)]) != self.maps[(o, q)]:
                    raise ValueError(f"diagram not functorial at {o!r} < {p!r} < {q!r}")


@dataclass(frozen=True, eq=False)
class FiniteLimit:
    indices: tuple
    elements: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.elements)

    def projection(self, p) -> Array:
        k = self.indices.index(p)
        return tuple(e[k] for e in self.elements)

    def position(self) -> dict:
        return {e: n for n, e in enumerate(self.elements)}


def finite_limit(D: PosetDiagram) -> FiniteLimit:
    """Compatible families ``(x_p)`` with ``D(p<q)(x_q) = x_p``, sorted.

    Families are enumerated over the maximal indices; each step looks up the
    candidates matching the already-determined lower components.
    """
    below: dict = {q: [] for q in D.indices}
    lower_set = set()
    for p, q in D.maps:
        below[q].append(p)
        lower_set.add(p)
    maximal = [q for q in D.indices if q not in lower_set]
    steps = []
    covered: set = set()
    for m in maximal:
        known = [p for p in D.indices if p in covered and (p, m) in D.maps]
        fresh = [p for p in D.indices if p not in covered and (p, m) in D.maps]
        table: dict = {}
        for x in range(D.sizes[m]):
            key = tuple(D.maps[(p, m)][x] for p in known)
            table.setdefault(key, []).append(x)
        steps.append((m, known, fresh, table))
        covered.update(fresh)
        covered.add(m)

    pos = {p: n for n, p in enumerate(D.indices)}
    out: list[tuple[int, ...]] = []
    values: dict = {}

    def go(t: int) -> None:
        if t == len(steps):
            out.append(tuple(values[p] for p in D.indices))
            return
        m, known, fresh, table = steps[t]
        for x in table.get(tuple(values[p] for p in known), ()):
            values[m] = x
            for p in fresh:
                values[p] = D.maps[(p, m)][x]
            go(t + 1)
        values.pop(m, None)

    go(0)
    del pos
    return FiniteLimit(tuple(D.indices), tuple(sorted(out)))


@dataclass(frozen=True, eq=False)
class ComparisonResult:
    """A map ``X_n -> lim`` together with its fibres."""

    limit: FiniteLimit
    images: Array
    preimages: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def bijective(self) -> bool:
        return all(len(p) == 1 for p in self.preimages)

    def failures(self) -> list[tuple[int, int]]:
        """(limit element position, number of preimages) for every non-singleton fibre."""
        return [(n, len(p)) for n, p in enumerate(self.preimages) if len(p) != 1]


def restriction_comparison(X: SimplicialSet, n: int, family: Sequence[Sequence[int]]) -> ComparisonResult:
    """Compare ``X_n`` with the limit of ``X`` over a family of vertex subsets of ``[n]``.

    Each subset ``S = {i_0 < ... < i_k}`` indexes ``X_k``; inclusions of
    subsets induce restrictions.
    """
    if X.depth < n:
        raise DepthTooSmall(f"level {n} needs depth >= {n}, have {X.depth}")
    fam = tuple(sorted({tuple(sorted(s)) for s in family}, key=lambda s: (len(s), s)))
    maps = {}
    for p in fam:
        for q in fam:
            if p != q and set(p) <= set(q):
                theta = MonotoneMap(len(q) - 1, tuple(q.index(v) for v in p))
                maps[(p, q)] = X.act(theta)
    D = PosetDiagram(fam, {p: X.size(len(p) - 1) for p in fam}, maps)
    lim = finite_limit(D)
    where = lim.position()
    restr = [X.act(MonotoneMap(n, p)) for p in fam]
    images = tuple(where[tuple(r[x] for r in restr)] for x in range(X.size(n)))
    fibres: list[list[int]] = [[] for _ in lim.elements]
    for x, y in enumerate(images):
        fibres[y].append(x)
    return ComparisonResult(lim, images, tuple(tuple(f) for f in fibres))


def p_segal_map(X: SimplicialSet, decomposition) -> ComparisonResult:
    """The ``P``-Segal map ``X_n -> lim_{polygons of P} X_k``."""
    return restriction_comparison(X, decomposition.n, decomposition.polygons)


def spine_family(n: int) -> list[tuple[int, ...]]:
    """Edges ``{i, i+1}`` and the inner vertices they share."""
    return [(i, i + 1) for i in range(n)] + [(i,) for i in range(1, n)]


def segal_map(X: SimplicialSet, n: int) -> ComparisonResult:
    """``X_n -> X_1 x_{X_0} ... x_{X_0} X_1``."""
    return restriction_comparison(X, n, spine_family(n))


def pullback_comparison(
    top: Array, left: Array, right: Array, bottom: Array, corner_size: int, b_size: int, c_size: int
) -> ComparisonResult:
    """Compare ``A`` with ``B x_D C`` for a commuting square.

    ``left: A -> B``, ``top: A -> C``, ``bottom: B -> D``, ``right: C -> D``;
    ``corner_size = |A|``.
    """
    elements = sorted((b, c) for b in range(b_size) for c in range(c_size) if bottom[b] == right[c])
    lim = FiniteLimit(("B", "C"), tuple(elements))
    where = lim.position()
    fibres: list[list[int]] = [[] for _ in elements]
    images = []
    for a in range(corner_size):
        key = (left[a], top[a])
        if key not in where:
            raise ValueError("square does not commute")
        images.append(where[key])
        fibres[where[key]].append(a)
    return ComparisonResult(lim, tuple(images), tuple(tuple(f) for f in fibres))


def all_products(*sizes: int):
    return product(*(range(s) for s in sizes))
