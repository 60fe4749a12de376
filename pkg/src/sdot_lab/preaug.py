"""Finite preaugmented bisimplicial sets: presheaves on Δ×Δ with an added terminal object [-1].

Bidegree ``(k, l)``: ``k`` is the vertical index and ``l`` the horizontal
one.  Horizontal faces/degeneracies act on ``l``, vertical ones on ``k``.
The extra level ``-1`` carries the augmentation map ``Y_{-1} -> Y_{0,0}``,
induced by the unique map ``(0,0) -> [-1]``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Hashable, Sequence, Union

from .report import CheckReport, WitnessCollector
from .search import Structure, homomorphisms
from .simpset import (
    DepthTooSmall,
    SimplicialSet,
    action_array,
    first_simplicial_identity_failure,
    monotone_maps,
    segal_map,
)

Key = Union[tuple[int, int], int]
Array = tuple[int, ...]
MINUS_ONE = -1


class InvalidPresheaf(ValueError):
    pass


def key_name(key: Key) -> str:
    return "-1" if key == MINUS_ONE else f"{key[0]},{key[1]}"


def parse_key(name: str) -> Key:
    if name == "-1":
        return MINUS_ONE
    k, l = name.split(",")
    return (int(k), int(l))


def _compose(a: Array, b: Array) -> Array:
    """``a`` then ``b``."""
    return tuple(b[y] for y in a)


class PreaugBisimplicialSet:
    """A preaugmented bisimplicial set truncated at ``0 <= k, l <= depth``.

    ``hface[(k, l)][i]``: ``Y_{k,l} -> Y_{k,l-1}``; ``vface[(k, l)][i]``:
    ``Y_{k,l} -> Y_{k-1,l}``; ``hdegen[(k, l)][i]``: ``Y_{k,l} -> Y_{k,l+1}``;
    ``vdegen[(k, l)][i]``: ``Y_{k,l} -> Y_{k+1,l}``; ``aug``: ``Y_{-1} -> Y_{0,0}``.
    """

    def __init__(self, depth: int, labels: dict, hface: dict, vface: dict, hdegen: dict, vdegen: dict, aug: Array, *, validate: bool = True):
        self.depth = depth
        self.labels = {key: tuple(v) for key, v in labels.items()}
        self.hface = hface
        self.vface = vface
        self.hdegen = hdegen
        self.vdegen = vdegen
        self.aug = tuple(aug)
        self._index: dict = {}
        self._vcache: dict = defaultdict(dict)
        self._hcache: dict = defaultdict(dict)
        if validate:
            self.validate()

    # construction -----------------------------------------------------------

    @classmethod
    def from_functions(
        cls,
        depth: int,
        levels: dict,
        *,
        hface: Callable[[int, int, int, Hashable], Hashable],
        vface: Callable[[int, int, int, Hashable], Hashable],
        hdegen: Callable[[int, int, int, Hashable], Hashable],
        vdegen: Callable[[int, int, int, Hashable], Hashable],
        aug: Callable[[Hashable], Hashable],
        validate: bool = True,
    ) -> "PreaugBisimplicialSet":
        """Build from labelled levels and label-level structure maps ``fn(k, l, i, x)``."""
        index = {key: {x: n for n, x in enumerate(v)} for key, v in levels.items()}
        N = depth
        hf, vf, hd, vd = {}, {}, {}, {}
        for k in range(N + 1):
            for l in range(N + 1):
                xs = levels[(k, l)]
                if l >= 1:
                    hf[(k, l)] = tuple(tuple(index[(k, l - 1)][hface(k, l, i, x)] for x in xs) for i in range(l + 1))
                if k >= 1:
                    vf[(k, l)] = tuple(tuple(index[(k - 1, l)][vface(k, l, i, x)] for x in xs) for i in range(k + 1))
                if l < N:
                    hd[(k, l)] = tuple(tuple(index[(k, l + 1)][hdegen(k, l, i, x)] for x in xs) for i in range(l + 1))
                if k < N:
                    vd[(k, l)] = tuple(tuple(index[(k + 1, l)][vdegen(k, l, i, x)] for x in xs) for i in range(k + 1))
        au = tuple(index[(0, 0)][aug(x)] for x in levels[MINUS_ONE])
        return cls(N, levels, hf, vf, hd, vd, au, validate=validate)

    # accessors ----------------------------------------------------------------

    def keys(self) -> list[Key]:
        return [(k, l) for k in range(self.depth + 1) for l in range(self.depth + 1)] + [MINUS_ONE]

    def size(self, key: Key) -> int:
        return len(self.labels[key])

    def sizes(self) -> dict[str, int]:
        return {key_name(key): self.size(key) for key in self.keys()}

    def index(self, key: Key, label: Hashable) -> int:
        if key not in self._index:
            self._index[key] = {x: n for n, x in enumerate(self.labels[key])}
        return self._index[key][label]

    def __repr__(self):
        return f"PreaugBisimplicialSet(depth={self.depth}, sizes={self.sizes()})"

    def _need(self, *ranks: int) -> None:
        if max(ranks) > self.depth:
            raise DepthTooSmall(f"bidegree rank {max(ranks)} exceeds depth {self.depth}")

    def vertical_act(self, theta: Sequence[int], q: int, r: int) -> Array:
        """``Y_{q,r} -> Y_{k,r}`` for ``θ: [k] -> [q]``."""
        self._need(q, len(theta) - 1, r)
        return action_array(
            tuple(theta), q,
            lambda m, i: self.vface[(m, r)][i],
            lambda m, i: self.vdegen[(m, r)][i],
            lambda m: self.size((m, r)),
            self._vcache[r],
        )

    def horizontal_act(self, phi: Sequence[int], k: int, r: int) -> Array:
        """``Y_{k,r} -> Y_{k,l}`` for ``φ: [l] -> [r]``."""
        self._need(k, len(phi) - 1, r)
        return action_array(
            tuple(phi), r,
            lambda m, i: self.hface[(k, m)][i],
            lambda m, i: self.hdegen[(k, m)][i],
            lambda m: self.size((k, m)),
            self._hcache[k],
        )

    def act(self, theta: Sequence[int], q: int, phi: Sequence[int], r: int) -> Array:
        """``Y_{q,r} -> Y_{k,l}`` for ``(θ, φ): (k, l) -> (q, r)``."""
        v = self.vertical_act(theta, q, r)
        h = self.horizontal_act(phi, len(theta) - 1, r)
        return _compose(v, h)

    def from_minus_one(self, k: int, l: int) -> Array:
        """``Y_{-1} -> Y_{k,l}`` induced by ``(k, l) -> [-1]``."""
        return _compose(self.aug, self.act((0,) * (k + 1), 0, (0,) * (l + 1), 0))

    def row(self, k: int) -> SimplicialSet:
        """The horizontal simplicial set ``Y_{k,•}``."""
        N = self.depth
        faces = [()] + [self.hface[(k, l)] for l in range(1, N + 1)]
        degens = [self.hdegen[(k, l)] for l in range(N)] + [()]
        return SimplicialSet(N, [self.labels[(k, l)] for l in range(N + 1)], faces, degens, validate=False)

    def column(self, l: int) -> SimplicialSet:
        """The vertical simplicial set ``Y_{•,l}``."""
        N = self.depth
        faces = [()] + [self.vface[(k, l)] for k in range(1, N + 1)]
        degens = [self.vdegen[(k, l)] for k in range(N)] + [()]
        return SimplicialSet(N, [self.labels[(k, l)] for k in range(N + 1)], faces, degens, validate=False)

    def nondegenerate(self, key: Key) -> list[int]:
        if key == MINUS_ONE:
            return list(range(self.size(key)))
        k, l = key
        hit = set()
        if l >= 1:
            for s in self.hdegen[(k, l - 1)]:
                hit.update(s)
        if k >= 1:
            for s in self.vdegen[(k - 1, l)]:
                hit.update(s)
        return [x for x in range(self.size(key)) if x not in hit]

    def restrict(self, depth: int) -> "PreaugBisimplicialSet":
        if depth > self.depth:
            raise DepthTooSmall(f"cannot restrict depth {self.depth} to {depth}")
        inside = lambda key: key[0] <= depth and key[1] <= depth
        labels = {key: v for key, v in self.labels.items() if key == MINUS_ONE or inside(key)}
        hd = {key: v for key, v in self.hdegen.items() if inside(key) and key[1] < depth}
        vd = {key: v for key, v in self.vdegen.items() if inside(key) and key[0] < depth}
        hf = {key: v for key, v in self.hface.items() if inside(key)}
        vf = {key: v for key, v in self.vface.items() if inside(key)}
        return PreaugBisimplicialSet(depth, labels, hf, vf, hd, vd, self.aug, validate=False)

    # generator maps ------------------------------------------------------------

    def generators(self) -> list[tuple[str, Key, Key, Array]]:
        """Every generating structure map as ``(name, source key, target key, array)``."""
        out = []
        for (k, l), fs in sorted(self.hface.items()):
            out += [(f"h{i}@{k},{l}", (k, l), (k, l - 1), a) for i, a in enumerate(fs)]
        for (k, l), fs in sorted(self.vface.items()):
            out += [(f"v{i}@{k},{l}", (k, l), (k - 1, l), a) for i, a in enumerate(fs)]
        for (k, l), ss in sorted(self.hdegen.items()):
            out += [(f"hs{i}@{k},{l}", (k, l), (k, l + 1), a) for i, a in enumerate(ss)]
        for (k, l), ss in sorted(self.vdegen.items()):
            out += [(f"vs{i}@{k},{l}", (k, l), (k + 1, l), a) for i, a in enumerate(ss)]
        out.append(("aug", MINUS_ONE, (0, 0), self.aug))
        return out

    def structure(self) -> Structure:
        return Structure(
            sorts={key_name(key): self.size(key) for key in self.keys()},
            unary={name: (key_name(a), key_name(b), arr) for name, a, b, arr in self.generators()},
        )

    # validation -----------------------------------------------------------------

    def validate(self) -> None:
        N = self.depth
        if set(self.labels) != set(self.keys()):
            raise InvalidPresheaf("levels must be (k, l) for 0 <= k, l <= depth plus -1")
        for name, a, b, arr in self.generators():
            if len(arr) != self.size(a) or any(not 0 <= y < self.size(b) for y in arr):
                raise InvalidPresheaf(f"map {name} is malformed")
        for k in range(N + 1):
            row = self.row(k)
            problem = first_simplicial_identity_failure(row.size, row.faces, row.degeneracies, N)
            if problem:
                raise InvalidPresheaf(f"row {k}: {problem}")
        for l in range(N + 1):
            col = self.column(l)
            problem = first_simplicial_identity_failure(col.size, col.faces, col.degeneracies, N)
            if problem:
                raise InvalidPresheaf(f"column {l}: {problem}")
        problem = self.first_commutation_failure()
        if problem:
            raise InvalidPresheaf(problem)

    def first_commutation_failure(self) -> str | None:
        """Horizontal and vertical generators must commute with each other."""
        N = self.depth
        for k in range(N + 1):
            for l in range(N + 1):
                h_ops = [("d", i, self.hface[(k, l)][i], l - 1) for i in range(l + 1)] if l >= 1 else []
                h_ops += [("s", i, self.hdegen[(k, l)][i], l + 1) for i in range(l + 1)] if l < N else []
                v_ops = [("d", j, self.vface[(k, l)][j], k - 1) for j in range(k + 1)] if k >= 1 else []
                v_ops += [("s", j, self.vdegen[(k, l)][j], k + 1) for j in range(k + 1)] if k < N else []
                for hk, i, h, l2 in h_ops:
                    for vk, j, v, k2 in v_ops:
                        v_after = (self.vface if vk == "d" else self.vdegen)[(k, l2)][j]
                        h_after = (self.hface if hk == "d" else self.hdegen)[(k2, l)][i]
                        if _compose(h, v_after) != _compose(v, h_after):
                            return f"horizontal {hk}_{i} and vertical {vk}_{j} do not commute at ({k},{l})"
        return None


@dataclass(frozen=True, eq=False)
class PreaugMap:
    source: PreaugBisimplicialSet
    target: PreaugBisimplicialSet
    components: dict  # key -> Array

    def first_naturality_failure(self) -> str | None:
        f = self.components
        gens_t = {name: arr for name, _, _, arr in self.target.generators()}
        for name, a, b, arr in self.source.generators():
            if name not in gens_t:
                continue
            if _compose(arr, f[b]) != _compose(f[a], gens_t[name]):
                return name
        return None

    def is_natural(self) -> bool:
        return self.first_naturality_failure() is None

    def bijective_levels(self) -> dict[str, bool]:
        return {
            key_name(key): sorted(c) == list(range(self.target.size(key))) for key, c in self.components.items()
        }

    def is_injective(self) -> bool:
        return all(len(set(c)) == len(c) for c in self.components.values())

    def after(self, inner: "PreaugMap") -> "PreaugMap":
        return PreaugMap(
            inner.source,
            self.target,
            {key: tuple(self.components[key][y] for y in c) for key, c in inner.components.items()},
        )


def identity_map(Y: PreaugBisimplicialSet) -> PreaugMap:
    return PreaugMap(Y, Y, {key: tuple(range(Y.size(key))) for key in Y.keys()})


def map_from_functions(F: PreaugBisimplicialSet, Y: PreaugBisimplicialSet, fn: Callable[[Key, Hashable], Hashable]) -> PreaugMap:
    """Map given on labels: ``fn(key, x)`` is the image label."""
    return PreaugMap(
        F, Y, {key: tuple(Y.index(key, fn(key, x)) for x in F.labels[key]) for key in F.keys()}
    )


# ---------------------------------------------------------------------------
# generators


def _delete(t: tuple, i: int) -> tuple:
    return t[:i] + t[i + 1 :]


def _repeat(t: tuple, i: int) -> tuple:
    return t[: i + 1] + t[i:]


def representable(index: Key, depth: int) -> PreaugBisimplicialSet:
    """``Σ[q, r]`` (monotone pairs into ``([q], [r])``, empty at -1) or ``Σ[-1]`` (constant point)."""
    if index == MINUS_ONE:
        return constant_point(depth)
    q, r = index
    levels: dict = {
        (k, l): [(f, g) for f in monotone_maps(k, q) for g in monotone_maps(l, r)]
        for k in range(depth + 1)
        for l in range(depth + 1)
    }
    levels[MINUS_ONE] = []
    return PreaugBisimplicialSet.from_functions(
        depth,
        levels,
        hface=lambda k, l, i, x: (x[0], _delete(x[1], i)),
        vface=lambda k, l, i, x: (_delete(x[0], i), x[1]),
        hdegen=lambda k, l, i, x: (x[0], _repeat(x[1], i)),
        vdegen=lambda k, l, i, x: (_repeat(x[0], i), x[1]),
        aug=lambda x: x,
        validate=False,
    )


def constant_point(depth: int) -> PreaugBisimplicialSet:
    """``Σ[-1]``: the terminal presheaf."""
    levels = {(k, l): [()] for k in range(depth + 1) for l in range(depth + 1)}
    levels[MINUS_ONE] = [()]
    same = lambda k, l, i, x: ()
    return PreaugBisimplicialSet.from_functions(
        depth, levels, hface=same, vface=same, hdegen=same, vdegen=same, aug=lambda x: (), validate=False
    )


def w_preaug(n: int, depth: int) -> PreaugBisimplicialSet:
    """``W[n]``: chains ``i_0 <= .. <= i_k <= j_0 <= .. <= j_l <= n``, with ``(i, i)`` at level -1."""
    levels: dict = {}
    for k in range(depth + 1):
        for l in range(depth + 1):
            levels[(k, l)] = [
                (c[: k + 1], c[k + 1 :]) for c in combinations_with_replacement(range(n + 1), k + l + 2)
            ]
    levels[MINUS_ONE] = [(i, i) for i in range(n + 1)]
    return PreaugBisimplicialSet.from_functions(
        depth,
        levels,
        hface=lambda k, l, i, x: (x[0], _delete(x[1], i)),
        vface=lambda k, l, i, x: (_delete(x[0], i), x[1]),
        hdegen=lambda k, l, i, x: (x[0], _repeat(x[1], i)),
        vdegen=lambda k, l, i, x: (_repeat(x[0], i), x[1]),
        aug=lambda x: ((x[0],), (x[1],)),
        validate=False,
    )


def pushout(f: PreaugMap, g: PreaugMap) -> tuple[PreaugBisimplicialSet, PreaugMap, PreaugMap]:
    """Level-wise pushout of ``B <- A -> C`` (``f: A -> B``, ``g: A -> C``).

    Elements are labelled ``(0, b)`` or ``(1, c)`` by the smallest member of
    their class, with the ``B`` side first.
    """
    A, B, C = f.source, f.target, g.target
    if not A.depth == B.depth == C.depth == g.source.depth:
        raise ValueError("pushout needs equal depths")
    depth = A.depth
    rep: dict = {}
    cls_of: dict = {}
    for key in A.keys():
        nB, nC = B.size(key), C.size(key)
        parent = list(range(nB + nC))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in range(A.size(key)):
            x, y = find(f.components[key][a]), find(nB + g.components[key][a])
            if x != y:
                parent[max(x, y)] = min(x, y)
        roots = sorted({find(x) for x in range(nB + nC)})
        pos = {r: n for n, r in enumerate(roots)}
        rep[key] = [(0, B.labels[key][r]) if r < nB else (1, C.labels[key][r - nB]) for r in roots]
        cls_of[key] = [pos[find(x)] for x in range(nB + nC)]

    def induced(maps_b, maps_c, src, dst):
        # image of each class under a structure map, via any representative
        out = [None] * len(rep[src])
        for x in range(B.size(src)):
            out[cls_of[src][x]] = cls_of[dst][maps_b[x]]
        for y in range(C.size(src)):
            out[cls_of[src][B.size(src) + y]] = cls_of[dst][B.size(dst) + maps_c[y]]
        return tuple(out)

    def table(attr, shift):
        out = {}
        for key, arrs_b in getattr(B, attr).items():
            dst = (key[0] + shift[0], key[1] + shift[1])
            arrs_c = getattr(C, attr)[key]
            out[key] = tuple(induced(b, c, key, dst) for b, c in zip(arrs_b, arrs_c))
        return out

    P = PreaugBisimplicialSet(
        depth,
        rep,
        table("hface", (0, -1)),
        table("vface", (-1, 0)),
        table("hdegen", (0, 1)),
        table("vdegen", (1, 0)),
        induced(B.aug, C.aug, MINUS_ONE, (0, 0)),
    )
    inB = PreaugMap(B, P, {key: tuple(cls_of[key][x] for x in range(B.size(key))) for key in P.keys()})
    inC = PreaugMap(C, P, {key: tuple(cls_of[key][B.size(key) + y] for y in range(C.size(key))) for key in P.keys()})
    return P, inB, inC


def _point_inclusion(q: int, r: int, at: tuple[int, int], depth: int) -> PreaugMap:
    """``Σ[0,0] -> Σ[q,r]`` picking the object ``at``."""
    S00, S = representable((0, 0), depth), representable((q, r), depth)
    return map_from_functions(
        S00, S, lambda key, x: (tuple(at[0] for _ in x[0]), tuple(at[1] for _ in x[1]))
    )


def _to_point(Y: PreaugBisimplicialSet) -> PreaugMap:
    P = constant_point(Y.depth)
    return PreaugMap(Y, P, {key: (0,) * Y.size(key) for key in Y.keys()})


def h_preaug(n: int, depth: int) -> PreaugBisimplicialSet:
    """``Σ[0,n]`` with its first object glued to ``Σ[-1]``."""
    f = _point_inclusion(0, n, (0, 0), depth)
    return pushout(f, _to_point(f.source))[0]


def v_preaug(n: int, depth: int) -> PreaugBisimplicialSet:
    """``Σ[n,0]`` with its last object glued to ``Σ[-1]``."""
    f = _point_inclusion(n, 0, (n, 0), depth)
    return pushout(f, _to_point(f.source))[0]


def generate_preaug(kind: str, n: int, depth: int) -> PreaugBisimplicialSet:
    if n < 0 or depth < 0:
        raise ValueError("n and depth must be non-negative")
    if kind == "W":
        return w_preaug(n, depth)
    if kind == "H":
        return h_preaug(n, depth)
    if kind == "V":
        return v_preaug(n, depth)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# maps between presheaves


def _hint(F: PreaugBisimplicialSet) -> list[tuple[str, int]]:
    """Nondegenerate elements by descending total degree, level -1 last."""
    keys = sorted((k for k in F.keys() if k != MINUS_ONE), key=lambda k: (-(k[0] + k[1]), k))
    hint = [(key_name(k), x) for k in keys for x in F.nondegenerate(k)]
    return hint + [("-1", x) for x in range(F.size(MINUS_ONE))]


def hom_preaug(F: PreaugBisimplicialSet, Y: PreaugBisimplicialSet, *, node_limit: int | None = 2_000_000) -> list[PreaugMap]:
    """All natural maps ``F -> Y`` over the truncated index category, in deterministic order."""
    if F.depth != Y.depth:
        raise ValueError(f"depths differ: {F.depth} vs {Y.depth}")
    found = homomorphisms(F.structure(), Y.structure(), order_hint=_hint(F), node_limit=node_limit)
    keys = F.keys()
    return [PreaugMap(F, Y, {key: f[key_name(key)] for key in keys}) for f in found]


def find_isomorphism(Y: PreaugBisimplicialSet, Z: PreaugBisimplicialSet) -> PreaugMap | None:
    """Some level-wise bijective natural map ``Y -> Z``, if one exists."""
    if Y.depth != Z.depth or any(Y.size(k) != Z.size(k) for k in Y.keys()):
        return None
    for m in hom_preaug(Y, Z):
        if all(m.bijective_levels().values()):
            return m
    return None


# ---------------------------------------------------------------------------
# predicates


def _bijection(w: WitnessCollector, clause: str, level, domain: list, image: Callable, codomain_size: int, show: Callable = lambda x: x) -> None:
    fibres: list[list] = [[] for _ in range(codomain_size)]
    for d in domain:
        fibres[image(d)].append(d)
    for y, fib in enumerate(fibres):
        if len(fib) != 1:
            w.fail(clause, level=level, element=show(y), preimages=len(fib))


def _pullback(left: Array, right: Array) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` with ``left[a] == right[b]``."""
    by = defaultdict(list)
    for b, z in enumerate(right):
        by[z].append(b)
    return [(a, b) for a, z in enumerate(left) for b in by[z]]


def _check_double_segal(Y: PreaugBisimplicialSet, w: WitnessCollector) -> None:
    N = Y.depth
    for k in range(N + 1):
        row = Y.row(k)
        for r in range(2, N + 1):
            res = segal_map(row, r)
            for pos, n in res.failures():
                w.fail("horizontal_segal", level=(k, r), element=res.limit.elements[pos], preimages=n)
    for l in range(N + 1):
        col = Y.column(l)
        for q in range(2, N + 1):
            res = segal_map(col, q)
            for pos, n in res.failures():
                w.fail("vertical_segal", level=(q, l), element=res.limit.elements[pos], preimages=n)


def _check_stable(Y: PreaugBisimplicialSet, w: WitnessCollector, top: int) -> None:
    for q in range(1, top + 1):
        for r in range(1, top + 1):
            for clause, vq, vr in (("span", 0, 0), ("cospan", q, r)):
                # restriction to the first (span) or last (cospan) row and column
                to_row = Y.act((vq,), q, tuple(range(r + 1)), r)  # Y_{q,r} -> Y_{0,r}
                to_col = Y.act(tuple(range(q + 1)), q, (vr,), r)  # Y_{q,r} -> Y_{q,0}
                row_corner = Y.act((0,), 0, (0 if clause == "span" else r,), r)  # Y_{0,r} -> Y_{0,0}
                col_corner = Y.act((0 if clause == "span" else q,), q, (0,), 0)  # Y_{q,0} -> Y_{0,0}
                pairs = _pullback(row_corner, col_corner)
                where = {p: n for n, p in enumerate(pairs)}
                _bijection(
                    w, clause, (q, r), list(range(Y.size((q, r)))),
                    lambda x: where[(to_row[x], to_col[x])], len(pairs), lambda n: pairs[n],
                )


def _check_augmented(Y: PreaugBisimplicialSet, w: WitnessCollector, top: int) -> None:
    aug = Y.aug
    for q in range(1, top + 1):
        last_vertex = Y.act((q,), q, (0,), 0)  # Y_{q,0} -> Y_{0,0}
        drop_last = Y.act(tuple(range(q)), q, (0,), 0)  # Y_{q,0} -> Y_{q-1,0}
        dom = _pullback(last_vertex, aug)
        _bijection(w, "vertical_augmentation", (q, 0), dom, lambda p: drop_last[p[0]], Y.size((q - 1, 0)))
    for r in range(1, top + 1):
        first_vertex = Y.act((0,), 0, (0,), r)  # Y_{0,r} -> Y_{0,0}
        drop_first = Y.act((0,), 0, tuple(range(1, r + 1)), r)  # Y_{0,r} -> Y_{0,r-1}
        dom = _pullback(first_vertex, aug)
        _bijection(w, "horizontal_augmentation", (0, r), dom, lambda p: drop_first[p[0]], Y.size((0, r - 1)))


def _check_split(Y: PreaugBisimplicialSet, w: WitnessCollector) -> None:
    bottom_left = Y.act((1,), 1, (0,), 1)
    top_left = Y.act((0,), 1, (0,), 1)
    bottom_right = Y.act((1,), 1, (1,), 1)
    dom = _pullback(bottom_left, Y.aug)
    n00 = Y.size((0, 0))
    _bijection(
        w, "split", (1, 1), dom, lambda p: top_left[p[0]] * n00 + bottom_right[p[0]], n00 * n00,
        lambda y: divmod(y, n00),
    )


PREAUG_PROPERTIES = ("double_segal", "stable_baby", "stable_full", "augmented_baby", "augmented_full", "pointed", "split")


def check_preaug(Y: PreaugBisimplicialSet, prop: str) -> CheckReport:
    """Strict set-level bijectivity of the comparison maps defining ``prop``.

    Full variants range over ``1 <= q, r <= depth``; baby variants use ``q = r = 1``.
    """
    if prop not in PREAUG_PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    if Y.depth < 1:
        raise DepthTooSmall(f"{prop} needs depth >= 1")
    w = WitnessCollector(prop)
    if prop in ("double_segal", "pointed") and Y.depth < 2:
        w.notes.append("depth 1: Segal conditions hold vacuously")
    if prop == "double_segal":
        _check_double_segal(Y, w)
    elif prop == "stable_baby":
        _check_stable(Y, w, 1)
    elif prop == "stable_full":
        _check_stable(Y, w, Y.depth)
    elif prop == "augmented_baby":
        _check_augmented(Y, w, 1)
    elif prop == "augmented_full":
        _check_augmented(Y, w, Y.depth)
    elif prop == "pointed":
        _check_double_segal(Y, w)
        _check_stable(Y, w, Y.depth)
        _check_augmented(Y, w, Y.depth)
        if Y.size(MINUS_ONE) != 1:
            w.fail("augmentation_singleton", level=-1, preimages=Y.size(MINUS_ONE))
    elif prop == "split":
        _check_split(Y, w)
    return w.report()
