"""Path construction, S•-construction, and the unit/counit of their adjunction.

The path construction restricts a simplicial set along the ordinal sum
``(q, r) ↦ [q+1+r]``, ``[-1] ↦ [0]``.  Its right adjoint sends a
preaugmented bisimplicial set ``Y`` to the simplicial set ``n ↦ Hom(W[n], Y)``;
for double categories the analogous construction is ``n ↦ Hom_aug(W_n, D)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .doublecat import (
    AugmentedDoubleCategory,
    DoubleFunctor,
    NotStableOrAugmented,
    check_double,
    generate_double,
    hom_augmented_functors,
    validate_double_category,
    w_index_functor,
)
from .preaug import (
    MINUS_ONE,
    PreaugBisimplicialSet,
    PreaugMap,
    hom_preaug,
    key_name,
    map_from_functions,
    representable,
    w_preaug,
)
from .report import CheckReport, WitnessCollector
from .simpset import DepthTooSmall, MonotoneMap, SimplicialSet


# ---------------------------------------------------------------------------
# ordinal sum


def ordinal_sum(theta: Sequence[int], q: int, phi: Sequence[int], r: int) -> MonotoneMap:
    """``(θ, φ): (k, l) -> (q, r)`` goes to ``θ ⊕ φ: [k+1+l] -> [q+1+r]``."""
    return MonotoneMap(q + 1 + r, tuple(theta) + tuple(v + q + 1 for v in phi))


def ordinal_sum_to_point(k: int, l: int) -> MonotoneMap:
    """``(k, l) -> [-1]`` goes to the constant map ``[k+1+l] -> [0]``."""
    return MonotoneMap(0, (0,) * (k + l + 2))


# ---------------------------------------------------------------------------
# path construction


def path_construction(X: SimplicialSet, depth: int | None = None) -> PreaugBisimplicialSet:
    """``(PX)_{q,r} = X_{q+1+r}`` and ``(PX)_{-1} = X_0``, truncated at ``depth``.

    Needs ``X.depth >= 2 * depth + 1``; ``depth`` defaults to the largest such value.
    """
    if depth is None:
        depth = (X.depth - 1) // 2
    if depth < 0 or X.depth < 2 * depth + 1:
        raise DepthTooSmall(f"path construction at depth {depth} needs simplicial depth {2 * depth + 1}, have {X.depth}")
    N = depth
    labels: dict = {(q, r): X.labels[q + 1 + r] for q in range(N + 1) for r in range(N + 1)}
    labels[MINUS_ONE] = X.labels[0]
    hf, vf, hd, vd = {}, {}, {}, {}
    for q in range(N + 1):
        for r in range(N + 1):
            m = q + 1 + r
            if r >= 1:
                hf[(q, r)] = tuple(X.face(m, q + 1 + i) for i in range(r + 1))
            if q >= 1:
                vf[(q, r)] = tuple(X.face(m, i) for i in range(q + 1))
            if r < N:
                hd[(q, r)] = tuple(X.degeneracy(m, q + 1 + i) for i in range(r + 1))
            if q < N:
                vd[(q, r)] = tuple(X.degeneracy(m, i) for i in range(q + 1))
    return PreaugBisimplicialSet(N, labels, hf, vf, hd, vd, X.degeneracy(0, 0), validate=False)


# ---------------------------------------------------------------------------
# S• of a double category


@dataclass(eq=False)
class SdotDouble:
    """``S•D`` together with the functor behind each simplex."""

    simplicial: SimplicialSet
    functors: list[list[DoubleFunctor]]


def sdot_double_full(D: AugmentedDoubleCategory, up_to: int, *, node_limit: int | None = 2_000_000) -> SdotDouble:
    levels = [
        hom_augmented_functors(generate_double("W", n), D, node_limit=node_limit) for n in range(up_to + 1)
    ]
    where = [{F.key(): i for i, F in enumerate(level)} for level in levels]

    def pullback(values: tuple[int, ...], n: int) -> tuple[int, ...]:
        W = w_index_functor(values, n)
        m = len(values) - 1
        return tuple(where[m][F.after(W).key()] for F in levels[n])

    faces = [()] + [
        tuple(pullback(MonotoneMap.coface(n, i).values, n) for i in range(n + 1)) for n in range(1, up_to + 1)
    ]
    degens = [
        tuple(pullback(MonotoneMap.codegeneracy(n, i).values, n) for i in range(n + 1)) for n in range(up_to)
    ] + [()]
    labels = [list(range(len(level))) for level in levels]
    X = SimplicialSet(up_to, labels, faces, degens)
    return SdotDouble(X, levels)


def sdot_double(D: AugmentedDoubleCategory, up_to: int, **kw) -> SimplicialSet:
    """Level ``n`` is ``Hom_aug(W_n, D)``; simplices are labelled by position in that list."""
    return sdot_double_full(D, up_to, **kw).simplicial


def require_stable_augmented(D: AugmentedDoubleCategory) -> None:
    problems = []
    valid = validate_double_category(D.base)
    if not valid.verdict:
        problems.append("not a valid double category")
    else:
        for prop in ("stable", "augmented"):
            rep = check_double(D, prop)
            if not rep.verdict:
                problems.append(f"not {prop}: {rep.witnesses[0].to_json()}")
    if problems:
        raise NotStableOrAugmented(f"{D.name}: " + "; ".join(problems))


def augmented_nerve(D: AugmentedDoubleCategory, depth: int, *, check: bool = True) -> PreaugBisimplicialSet:
    """``N^a D``: level ``(q, r)`` is ``Hom_aug(W_{q+1+r}, D)``, level -1 is ``Hom_aug(W_0, D) ≅ A(D)``.

    With ``check=False`` the hom formula is evaluated even when ``D`` is not
    stable and augmented.
    """
    if check:
        require_stable_augmented(D)
    return path_construction(sdot_double(D, 2 * depth + 1), depth)


def window_double_functor(q: int, r: int) -> DoubleFunctor:
    """``[q]⊠[r] -> W_{q+1+r}``, ``(i, j) ↦ (i, q+1+j)``."""
    from .doublecat import box_double, w_double

    S, T = box_double(q, r), w_double(q + 1 + r)
    s = q + 1
    io = {x: n for n, x in enumerate(T.ob)}
    ih = {x: n for n, x in enumerate(T.hor)}
    iv = {x: n for n, x in enumerate(T.ver)}
    isq = {x: n for n, x in enumerate(T.sq)}
    return DoubleFunctor(
        S,
        T,
        tuple(io[(i, j + s)] for i, j in S.ob),
        tuple(ih[(i, j + s, k + s)] for i, j, k in S.hor),
        tuple(iv[(i, k, j + s)] for i, j, k in S.ver),
        tuple(isq[(i, k, j + s, l + s)] for i, j, k, l in S.sq),
    )


# ---------------------------------------------------------------------------
# S• of a preaugmented bisimplicial set


@lru_cache(maxsize=None)
def _w_preaug(n: int, depth: int) -> PreaugBisimplicialSet:
    return w_preaug(n, depth)


def w_preaug_map(values: Sequence[int], n: int, depth: int) -> PreaugMap:
    """``W[θ]: W[m] -> W[n]`` for monotone ``θ: [m] -> [n]``: apply ``θ`` to every entry."""
    values = tuple(values)
    m = len(values) - 1
    S, T = _w_preaug(m, depth), _w_preaug(n, depth)

    def image(key, x):
        if key == MINUS_ONE:
            return (values[x[0]], values[x[1]])
        return (tuple(values[i] for i in x[0]), tuple(values[j] for j in x[1]))

    return map_from_functions(S, T, image)


@dataclass(eq=False)
class SdotPreaug:
    """``S•Y`` together with the natural map behind each simplex.

    Every level uses ``W[n]`` truncated at the common ``depth``.
    """

    simplicial: SimplicialSet
    maps: list[list[PreaugMap]]
    depth: int
    notes: list[str] = field(default_factory=list)

    def position(self, n: int, components: dict) -> int:
        """Index in ``S_n`` of the natural map with the given components."""
        keys = _w_preaug(n, self.depth).keys()
        return self._where[n][tuple(components[k] for k in keys)]

    def __post_init__(self):
        self._where = []
        for n, level in enumerate(self.maps):
            keys = _w_preaug(n, self.depth).keys()
            self._where.append({tuple(m.components[k] for k in keys): i for i, m in enumerate(level)})


def sdot_preaug_full(Y: PreaugBisimplicialSet, up_to: int, *, node_limit: int | None = 2_000_000) -> SdotPreaug:
    if Y.depth < up_to:
        raise DepthTooSmall(f"S• up to level {up_to} needs bisimplicial depth {up_to}, have {Y.depth}")
    depth = up_to
    Yd = Y.restrict(depth) if Y.depth > depth else Y
    levels = [hom_preaug(_w_preaug(n, depth), Yd, node_limit=node_limit) for n in range(up_to + 1)]
    result = SdotPreaug(SimplicialSet(0, [[0]], [()], [()], validate=False), levels, depth)

    def pullback(values: tuple[int, ...], n: int) -> tuple[int, ...]:
        Wt = w_preaug_map(values, n, depth)
        m = len(values) - 1
        return tuple(result.position(m, phi.after(Wt).components) for phi in levels[n])

    faces = [()] + [
        tuple(pullback(MonotoneMap.coface(n, i).values, n) for i in range(n + 1)) for n in range(1, up_to + 1)
    ]
    degens = [
        tuple(pullback(MonotoneMap.codegeneracy(n, i).values, n) for i in range(n + 1)) for n in range(up_to)
    ] + [()]
    result.simplicial = SimplicialSet(up_to, [list(range(len(level))) for level in levels], faces, degens)
    result.notes.append(f"Hom(W[n], Y) computed over bidegrees <= {depth}")
    return result


def sdot_preaug(Y: PreaugBisimplicialSet, up_to: int, **kw) -> SimplicialSet:
    """Level ``n`` is ``Hom(W[n], Y)``; simplices are labelled by position."""
    return sdot_preaug_full(Y, up_to, **kw).simplicial


def window_inclusion(q: int, r: int, depth: int) -> PreaugMap:
    """``Σ[q, r] -> W[q+1+r]``: ``(f, g) ↦ (f; g + q + 1)``."""
    S = representable((q, r), depth)
    T = _w_preaug(q + 1 + r, depth)
    return map_from_functions(S, T, lambda key, x: (x[0], tuple(v + q + 1 for v in x[1])))


def top_chain(q: int, r: int) -> tuple:
    """The chain of ``W[q+1+r]_{q,r}`` picked out by the identity of ``Σ[q, r]``."""
    return (tuple(range(q + 1)), tuple(range(q + 1, q + 2 + r)))


# ---------------------------------------------------------------------------
# unit and counit


@dataclass(eq=False)
class LevelwiseMap:
    """Per-level functions with bijectivity verdicts."""

    name: str
    components: dict  # level -> array
    target_sizes: dict

    @property
    def bijective(self) -> dict:
        return {
            lvl: sorted(c) == list(range(self.target_sizes[lvl])) for lvl, c in self.components.items()
        }

    @property
    def all_bijective(self) -> bool:
        return all(self.bijective.values())

    def report(self) -> CheckReport:
        w = WitnessCollector(self.name)
        for lvl, c in self.components.items():
            seen: dict = {}
            for x, y in enumerate(c):
                seen.setdefault(y, []).append(x)
            for y in range(self.target_sizes[lvl]):
                n = len(seen.get(y, ()))
                if n != 1:
                    w.fail("bijective", level=lvl, element=y, preimages=n)
        return w.report()


def _chain_map(chain_key, chain) -> tuple[int, ...]:
    """``θ_w: [k+1+l] -> [n]`` for a chain ``w`` of ``W[n]`` (level -1: ``[0] -> [n]``)."""
    if chain_key == MINUS_ONE:
        return (chain[0],)
    return tuple(chain[0]) + tuple(chain[1])


def unit_components(X: SimplicialSet, S: SdotPreaug, P: PreaugBisimplicialSet, up_to: int) -> dict[int, tuple[int, ...]]:
    """``η: X_n -> Hom(W[n], PX)``, ``x ↦ (w ↦ θ_w^* x)``."""
    out = {}
    for n in range(up_to + 1):
        W = _w_preaug(n, S.depth)
        keys = W.keys()
        comp = []
        for x in range(X.size(n)):
            components = {}
            for key in keys:
                if key == MINUS_ONE:
                    components[key] = tuple(X.act(MonotoneMap(n, (c[0],)))[x] for c in W.labels[key])
                else:
                    components[key] = tuple(
                        X.act(MonotoneMap(n, _chain_map(key, c)))[x] for c in W.labels[key]
                    )
            comp.append(S.position(n, components))
        out[n] = tuple(comp)
    return out


@dataclass(eq=False)
class UnitResult:
    map: LevelwiseMap
    sdot: SdotPreaug
    path: PreaugBisimplicialSet


def unit_map(X: SimplicialSet, up_to: int) -> UnitResult:
    """The unit ``X -> S•(PX)`` at levels ``0..up_to``; needs ``X.depth >= 2 * up_to + 1``."""
    need = 2 * up_to + 1
    if X.depth < need:
        raise DepthTooSmall(f"unit up to level {up_to} needs simplicial depth {need}, have {X.depth}")
    P = path_construction(X, up_to)
    S = sdot_preaug_full(P, up_to)
    comps = unit_components(X, S, P, up_to)
    sizes = {n: S.simplicial.size(n) for n in range(up_to + 1)}
    return UnitResult(LevelwiseMap("unit", comps, sizes), S, P)


@dataclass(eq=False)
class CounitResult:
    map: LevelwiseMap  # keyed by Σ-level names
    sdot: SdotPreaug
    levels: list

    def as_preaug_map(self, source: PreaugBisimplicialSet, target: PreaugBisimplicialSet) -> PreaugMap:
        return PreaugMap(source, target, {k: self.map.components[key_name(k)] for k in source.keys()})


def counit_map(Y: PreaugBisimplicialSet, up_to: int | None = None) -> CounitResult:
    """``ε: Hom(W[q+1+r], Y) -> Y_{q,r}`` by evaluation at the top chain; ``Hom(W[0], Y) -> Y_{-1}``.

    Computed at every ``(q, r)`` with ``q + 1 + r <= up_to`` (default ``Y.depth``).
    """
    up_to = Y.depth if up_to is None else up_to
    S = sdot_preaug_full(Y, up_to)
    comps: dict = {}
    sizes: dict = {}
    levels: list = []
    for q in range(up_to):
        for r in range(up_to - q):
            n = q + 1 + r
            W = _w_preaug(n, S.depth)
            at = W.index((q, r), top_chain(q, r))
            comps[key_name((q, r))] = tuple(phi.components[(q, r)][at] for phi in S.maps[n])
            sizes[key_name((q, r))] = Y.size((q, r))
            levels.append((q, r))
    comps["-1"] = tuple(phi.components[MINUS_ONE][0] for phi in S.maps[0])
    sizes["-1"] = Y.size(MINUS_ONE)
    levels.append(MINUS_ONE)
    return CounitResult(LevelwiseMap("counit", comps, sizes), S, levels)


# ---------------------------------------------------------------------------
# naturality and triangle identities


def counit_naturality(Y: PreaugBisimplicialSet, result: CounitResult) -> CheckReport:
    """Counit components commute with the generator maps between computed levels."""
    w = WitnessCollector("counit_naturality")
    S = result.sdot.simplicial
    comp = result.map.components
    computed = set(result.levels)
    for key in computed:
        if key == MINUS_ONE:
            continue
        q, r = key
        n = q + 1 + r
        # aug: level -1 -> (0,0)
        moves = []
        if r >= 1:
            moves += [(f"h{i}", (q, r - 1), MonotoneMap.coface(n, q + 1 + i).values, Y.hface[(q, r)][i]) for i in range(r + 1)]
        if q >= 1:
            moves += [(f"v{i}", (q - 1, r), MonotoneMap.coface(n, i).values, Y.vface[(q, r)][i]) for i in range(q + 1)]
        for name, dst, theta, y_map in moves:
            s_map = S.act(MonotoneMap(n, theta))
            for phi in range(S.size(n)):
                if comp[key_name(dst)][s_map[phi]] != y_map[comp[key_name(key)][phi]]:
                    w.fail("face", level=key, where=name, element=phi)
        for name, dst, theta, y_map in [
            (f"hs{i}", (q, r + 1), MonotoneMap.codegeneracy(n, q + 1 + i).values, Y.hdegen.get((q, r), [None] * (r + 1))[i])
            for i in range(r + 1)
        ] + [
            (f"vs{i}", (q + 1, r), MonotoneMap.codegeneracy(n, i).values, Y.vdegen.get((q, r), [None] * (q + 1))[i])
            for i in range(q + 1)
        ]:
            if dst not in computed or y_map is None:
                continue
            s_map = S.act(MonotoneMap(n, theta))
            for phi in range(S.size(n)):
                if comp[key_name(dst)][s_map[phi]] != y_map[comp[key_name(key)][phi]]:
                    w.fail("degeneracy", level=key, where=name, element=phi)
    if (0, 0) in computed:
        s0 = S.degeneracy(0, 0)
        for phi in range(S.size(0)):
            if comp["0,0"][s0[phi]] != Y.aug[comp["-1"][phi]]:
                w.fail("augmentation", element=phi)
    return w.report()


def unit_naturality(X: SimplicialSet, result: UnitResult) -> CheckReport:
    w = WitnessCollector("unit_naturality")
    S = result.sdot.simplicial
    comp = result.map.components
    top = max(comp)
    for n in range(1, top + 1):
        for i in range(n + 1):
            if tuple(comp[n - 1][y] for y in X.face(n, i)) != tuple(S.face(n, i)[y] for y in comp[n]):
                w.fail("face", level=n, where=f"d{i}")
    for n in range(top):
        for i in range(n + 1):
            if tuple(comp[n + 1][y] for y in X.degeneracy(n, i)) != tuple(S.degeneracy(n, i)[y] for y in comp[n]):
                w.fail("degeneracy", level=n, where=f"s{i}")
    return w.report()


def triangle_path(X: SimplicialSet, depth: int) -> CheckReport:
    """``ε_{PX} ∘ P(η_X) = id`` on ``(PX)_{q,r}`` for ``q + 1 + r <= depth``, and at -1."""
    w = WitnessCollector("triangle_path")
    if X.depth < 2 * depth + 1:
        raise DepthTooSmall(f"needs simplicial depth {2 * depth + 1}, have {X.depth}")
    P = path_construction(X, depth)
    eps = counit_map(P, depth)
    S = eps.sdot
    eta = unit_components(X, S, P, depth)
    for key in eps.levels:
        m = 0 if key == MINUS_ONE else key[0] + 1 + key[1]
        composite = tuple(eps.map.components[key_name(key)][eta[m][x]] for x in range(X.size(m)))
        if composite != tuple(range(X.size(m))):
            bad = next(x for x, y in enumerate(composite) if y != x)
            w.fail("identity", level=key, element=X.labels[m][bad])
    return w.report()


def triangle_sdot(Y: PreaugBisimplicialSet, up_to: int | None = None) -> CheckReport:
    """``S•(ε_Y) ∘ η_{S•Y} = id`` on ``S_n Y`` for ``n <= up_to``.

    ``η_{S•Y}(φ)`` sends a chain ``w`` of ``W[n]`` to ``θ_w^* φ``; applying ``ε_Y``
    evaluates that simplex at its top chain.  The composite is compared with
    ``φ`` on every chain whose simplex level ``k+1+l`` is within ``up_to``.
    """
    up_to = Y.depth if up_to is None else up_to
    eps = counit_map(Y, up_to)
    S = eps.sdot
    X = S.simplicial
    comp = eps.map.components
    w = WitnessCollector("triangle_sdot")
    for n in range(up_to + 1):
        W = _w_preaug(n, S.depth)
        for idx, phi in enumerate(S.maps[n]):
            for key in W.keys():
                if key != MINUS_ONE and key[0] + 1 + key[1] > up_to:
                    continue
                lvl = "-1" if key == MINUS_ONE else key_name(key)
                for c_idx, chain in enumerate(W.labels[key]):
                    theta = MonotoneMap(n, (chain[0],) if key == MINUS_ONE else _chain_map(key, chain))
                    pulled = X.act(theta)[idx]
                    if comp[lvl][pulled] != phi.components[key][c_idx]:
                        w.fail("identity", level=n, where=lvl, element=(idx, chain))
    return w.report()


# ---------------------------------------------------------------------------
# round trips


@dataclass
class RoundtripReport:
    kind: str
    up_to: int
    bijective: dict
    theorem_expected: bool
    notes: list[str] = field(default_factory=list)

    @property
    def all_bijective(self) -> bool:
        return all(self.bijective.values())

    def to_json(self) -> dict:
        return {
            "schema": "report/v1",
            "property": f"roundtrip_{self.kind}",
            "verdict": self.all_bijective,
            "bijective": {str(k): v for k, v in self.bijective.items()},
            "theorem_expected": self.theorem_expected,
            "up_to": self.up_to,
            "witnesses": [],
            "notes": list(self.notes),
        }


def roundtrip_report(obj, up_to: int) -> RoundtripReport:
    """Unit for a simplicial set, counit on the augmented nerve for a double category."""
    from .segal_check import check_simplicial

    if isinstance(obj, SimplicialSet):
        notes = []
        expected = True
        if obj.depth >= 3:
            for prop in ("twosegal_full", "unital_full"):
                rep = check_simplicial(obj, prop, min(obj.depth, 2 * up_to + 1))
                if not rep.verdict:
                    expected = False
                    notes.append(f"{prop} fails; no bijectivity is predicted")
        res = unit_map(obj, up_to)
        return RoundtripReport("unit", up_to, res.map.bijective, expected, notes)
    if isinstance(obj, AugmentedDoubleCategory):
        notes = []
        expected = True
        try:
            require_stable_augmented(obj)
        except NotStableOrAugmented as exc:
            expected = False
            notes.append(str(exc))
        Y = augmented_nerve(obj, up_to, check=False)
        res = counit_map(Y)
        return RoundtripReport("counit", up_to, res.map.bijective, expected, notes)
    raise TypeError(f"cannot round-trip {type(obj).__name__}")
