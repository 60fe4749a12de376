"""Finite strict double categories, the families W_n, H_n, V_n and [q]⊠[r], and functor enumeration.

Conventions: a square ``σ`` has horizontal source/target ``s_h σ, t_h σ``
(its left and right vertical edges) and vertical source/target
``s_v σ, t_v σ`` (its top and bottom horizontal edges).  Composition tables
are keyed by ``(first, second)`` in diagrammatic order.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Hashable, Sequence

from .report import CheckReport, WitnessCollector
from .search import Structure, homomorphisms


class InvalidDoubleCategory(ValueError):
    pass


class NotStableOrAugmented(ValueError):
    pass


Array = tuple[int, ...]
Table = dict[tuple[int, int], int]


@dataclass(frozen=True, eq=False)
class DoubleCategory:
    ob: tuple
    hor: tuple
    ver: tuple
    sq: tuple
    h_src: Array
    h_tgt: Array
    v_src: Array
    v_tgt: Array
    sq_sh: Array
    sq_th: Array
    sq_sv: Array
    sq_tv: Array
    id_hor: Array
    id_ver: Array
    idsq_h: Array  # Ver -> Sq, horizontal identity square on a vertical morphism
    idsq_v: Array  # Hor -> Sq, vertical identity square on a horizontal morphism
    hor_comp: Table
    ver_comp: Table
    sq_hcomp: Table
    sq_vcomp: Table
    name: str = ""

    def sizes(self) -> dict[str, int]:
        return {"Ob": len(self.ob), "Hor": len(self.hor), "Ver": len(self.ver), "Sq": len(self.sq)}

    def __repr__(self):
        return f"DoubleCategory({self.name or '?'}, {self.sizes()})"

    @classmethod
    def from_labels(
        cls,
        ob: Sequence[Hashable],
        hor: Sequence[Hashable],
        ver: Sequence[Hashable],
        sq: Sequence[Hashable],
        *,
        h_src: Callable,
        h_tgt: Callable,
        v_src: Callable,
        v_tgt: Callable,
        sq_sh: Callable,
        sq_th: Callable,
        sq_sv: Callable,
        sq_tv: Callable,
        id_hor: Callable,
        id_ver: Callable,
        idsq_h: Callable,
        idsq_v: Callable,
        hor_comp: Callable,
        ver_comp: Callable,
        sq_hcomp: Callable,
        sq_vcomp: Callable,
        name: str = "",
    ) -> "DoubleCategory":
        """Build from label-level functions; compositions are called on composable pairs only."""
        io = {x: n for n, x in enumerate(ob)}
        ih = {x: n for n, x in enumerate(hor)}
        iv = {x: n for n, x in enumerate(ver)}
        isq = {x: n for n, x in enumerate(sq)}
        hs = tuple(io[h_src(f)] for f in hor)
        ht = tuple(io[h_tgt(f)] for f in hor)
        vs = tuple(io[v_src(f)] for f in ver)
        vt = tuple(io[v_tgt(f)] for f in ver)
        sh = tuple(iv[sq_sh(a)] for a in sq)
        th = tuple(iv[sq_th(a)] for a in sq)
        sv = tuple(ih[sq_sv(a)] for a in sq)
        tv = tuple(ih[sq_tv(a)] for a in sq)

        def table(elems, index, first_end, second_start, fn):
            by_start = defaultdict(list)
            for n, start in enumerate(second_start):
                by_start[start].append(n)
            return {
                (a, b): index[fn(elems[a], elems[b])]
                for a in range(len(elems))
                for b in by_start[first_end[a]]
            }

        return cls(
            ob=tuple(ob),
            hor=tuple(hor),
            ver=tuple(ver),
            sq=tuple(sq),
            h_src=hs,
            h_tgt=ht,
            v_src=vs,
            v_tgt=vt,
            sq_sh=sh,
            sq_th=th,
            sq_sv=sv,
            sq_tv=tv,
            id_hor=tuple(ih[id_hor(x)] for x in ob),
            id_ver=tuple(iv[id_ver(x)] for x in ob),
            idsq_h=tuple(isq[idsq_h(v)] for v in ver),
            idsq_v=tuple(isq[idsq_v(h)] for h in hor),
            hor_comp=table(hor, ih, ht, hs, hor_comp),
            ver_comp=table(ver, iv, vt, vs, ver_comp),
            sq_hcomp=table(sq, isq, th, sh, sq_hcomp),
            sq_vcomp=table(sq, isq, tv, sv, sq_vcomp),
            name=name,
        )

    def replace_table(self, which: str, key: tuple[int, int], value: int) -> "DoubleCategory":
        """Copy with one composition entry overwritten (for corruption experiments)."""
        tables = {k: dict(getattr(self, k)) for k in ("hor_comp", "ver_comp", "sq_hcomp", "sq_vcomp")}
        tables[which][key] = value
        fields = {k: getattr(self, k) for k in self.__dataclass_fields__}
        fields.update(tables)
        return DoubleCategory(**fields)

    def full_subcategory(self, keep: Callable[[Hashable], bool], name: str = "") -> "DoubleCategory":
        """Full sub-double category on the objects whose label satisfies ``keep``."""
        obs = [n for n, x in enumerate(self.ob) if keep(x)]
        kept = set(obs)
        hs = [f for f in range(len(self.hor)) if self.h_src[f] in kept and self.h_tgt[f] in kept]
        vs = [v for v in range(len(self.ver)) if self.v_src[v] in kept and self.v_tgt[v] in kept]
        hset, vset = set(hs), set(vs)
        ss = [
            a
            for a in range(len(self.sq))
            if self.sq_sv[a] in hset and self.sq_tv[a] in hset and self.sq_sh[a] in vset and self.sq_th[a] in vset
        ]
        ro = {x: n for n, x in enumerate(obs)}
        rh = {x: n for n, x in enumerate(hs)}
        rv = {x: n for n, x in enumerate(vs)}
        rs = {x: n for n, x in enumerate(ss)}

        def sub_table(table, keep_map):
            return {
                (keep_map[a], keep_map[b]): keep_map[c]
                for (a, b), c in table.items()
                if a in keep_map and b in keep_map
            }

        return DoubleCategory(
            ob=tuple(self.ob[x] for x in obs),
            hor=tuple(self.hor[f] for f in hs),
            ver=tuple(self.ver[v] for v in vs),
            sq=tuple(self.sq[a] for a in ss),
            h_src=tuple(ro[self.h_src[f]] for f in hs),
            h_tgt=tuple(ro[self.h_tgt[f]] for f in hs),
            v_src=tuple(ro[self.v_src[v]] for v in vs),
            v_tgt=tuple(ro[self.v_tgt[v]] for v in vs),
            sq_sh=tuple(rv[self.sq_sh[a]] for a in ss),
            sq_th=tuple(rv[self.sq_th[a]] for a in ss),
            sq_sv=tuple(rh[self.sq_sv[a]] for a in ss),
            sq_tv=tuple(rh[self.sq_tv[a]] for a in ss),
            id_hor=tuple(rh[self.id_hor[x]] for x in obs),
            id_ver=tuple(rv[self.id_ver[x]] for x in obs),
            idsq_h=tuple(rs[self.idsq_h[v]] for v in vs),
            idsq_v=tuple(rs[self.idsq_v[f]] for f in hs),
            hor_comp=sub_table(self.hor_comp, rh),
            ver_comp=sub_table(self.ver_comp, rv),
            sq_hcomp=sub_table(self.sq_hcomp, rs),
            sq_vcomp=sub_table(self.sq_vcomp, rs),
            name=name,
        )

    def structure(self, augmentation: frozenset | None = None) -> Structure:
        """Encoding for the homomorphism solver."""
        sorts = {"Ob": len(self.ob), "Hor": len(self.hor), "Ver": len(self.ver), "Sq": len(self.sq)}
        unary = {
            "h_src": ("Hor", "Ob", self.h_src),
            "h_tgt": ("Hor", "Ob", self.h_tgt),
            "v_src": ("Ver", "Ob", self.v_src),
            "v_tgt": ("Ver", "Ob", self.v_tgt),
            "sq_sh": ("Sq", "Ver", self.sq_sh),
            "sq_th": ("Sq", "Ver", self.sq_th),
            "sq_sv": ("Sq", "Hor", self.sq_sv),
            "sq_tv": ("Sq", "Hor", self.sq_tv),
            "id_hor": ("Ob", "Hor", self.id_hor),
            "id_ver": ("Ob", "Ver", self.id_ver),
            "idsq_h": ("Ver", "Sq", self.idsq_h),
            "idsq_v": ("Hor", "Sq", self.idsq_v),
        }
        binary = {
            "hor_comp": ("Hor", "Hor", "Hor", self.hor_comp),
            "ver_comp": ("Ver", "Ver", "Ver", self.ver_comp),
            "sq_hcomp": ("Sq", "Sq", "Sq", self.sq_hcomp),
            "sq_vcomp": ("Sq", "Sq", "Sq", self.sq_vcomp),
        }
        subsets = {} if augmentation is None else {"A": ("Ob", frozenset(augmentation))}
        return Structure(sorts, unary, binary, subsets)


@dataclass(frozen=True, eq=False)
class AugmentedDoubleCategory:
    base: DoubleCategory
    augmentation: frozenset = field(default_factory=frozenset)

    @property
    def name(self) -> str:
        return self.base.name

    def augmentation_labels(self) -> list:
        return [self.base.ob[x] for x in sorted(self.augmentation)]

    def __repr__(self):
        return f"AugmentedDoubleCategory({self.base.name or '?'}, A={self.augmentation_labels()})"


@dataclass(frozen=True, eq=False)
class DoubleFunctor:
    source: DoubleCategory
    target: DoubleCategory
    ob: Array
    hor: Array
    ver: Array
    sq: Array

    def key(self) -> tuple:
        return (self.ob, self.hor, self.ver, self.sq)

    def after(self, inner: "DoubleFunctor") -> "DoubleFunctor":
        """``self ∘ inner``."""
        return DoubleFunctor(
            inner.source,
            self.target,
            tuple(self.ob[x] for x in inner.ob),
            tuple(self.hor[x] for x in inner.hor),
            tuple(self.ver[x] for x in inner.ver),
            tuple(self.sq[x] for x in inner.sq),
        )


AugmentedDoubleFunctor = DoubleFunctor


# ---------------------------------------------------------------------------
# validation


def validate_double_category(D: DoubleCategory) -> CheckReport:
    """Sweep every double-category axiom, recording the first failure per clause."""
    w = WitnessCollector("double_category")
    nO, nH, nV, nS = len(D.ob), len(D.hor), len(D.ver), len(D.sq)
    shapes = [
        ("h_src", D.h_src, nH, nO), ("h_tgt", D.h_tgt, nH, nO),
        ("v_src", D.v_src, nV, nO), ("v_tgt", D.v_tgt, nV, nO),
        ("sq_sh", D.sq_sh, nS, nV), ("sq_th", D.sq_th, nS, nV),
        ("sq_sv", D.sq_sv, nS, nH), ("sq_tv", D.sq_tv, nS, nH),
        ("id_hor", D.id_hor, nO, nH), ("id_ver", D.id_ver, nO, nV),
        ("idsq_h", D.idsq_h, nV, nS), ("idsq_v", D.idsq_v, nH, nS),
    ]
    for name, arr, dom, cod in shapes:
        if len(arr) != dom or any(not 0 <= y < cod for y in arr):
            w.fail("shape", where=name)
    if w.failed:
        return w.report()

    hs, ht, vs, vt = D.h_src, D.h_tgt, D.v_src, D.v_tgt
    sh, th, sv, tv = D.sq_sh, D.sq_th, D.sq_sv, D.sq_tv

    for a in range(nS):
        if (hs[sv[a]], ht[sv[a]], hs[tv[a]], ht[tv[a]]) != (vs[sh[a]], vs[th[a]], vt[sh[a]], vt[th[a]]):
            w.fail("square_corners", element=D.sq[a])

    for x in range(nO):
        if (hs[D.id_hor[x]], ht[D.id_hor[x]]) != (x, x):
            w.fail("identity_boundary", where="id_hor", element=D.ob[x])
        if (vs[D.id_ver[x]], vt[D.id_ver[x]]) != (x, x):
            w.fail("identity_boundary", where="id_ver", element=D.ob[x])
        if D.idsq_h[D.id_ver[x]] != D.idsq_v[D.id_hor[x]]:
            w.fail("identity_square_coherence", element=D.ob[x])
    for v in range(nV):
        a = D.idsq_h[v]
        if (sh[a], th[a], sv[a], tv[a]) != (v, v, D.id_hor[vs[v]], D.id_hor[vt[v]]):
            w.fail("identity_boundary", where="idsq_h", element=D.ver[v])
    for f in range(nH):
        a = D.idsq_v[f]
        if (sv[a], tv[a], sh[a], th[a]) != (f, f, D.id_ver[hs[f]], D.id_ver[ht[f]]):
            w.fail("identity_boundary", where="idsq_v", element=D.hor[f])

    def check_category(label, n, src, tgt, ident, table, elems):
        for a in range(n):
            for b in range(n):
                composable = tgt[a] == src[b]
                c = table.get((a, b))
                if composable and c is None:
                    w.fail("composition_total", where=label, element=(elems[a], elems[b]))
                elif not composable and c is not None:
                    w.fail("composition_domain", where=label, element=(elems[a], elems[b]))
        for (a, b), c in table.items():
            if not 0 <= c < n or (src[c], tgt[c]) != (src[a], tgt[b]):
                w.fail("composition_boundary", where=label, element=(elems[a], elems[b]))
        for a in range(n):
            if table.get((ident[src[a]], a)) != a or table.get((a, ident[tgt[a]])) != a:
                w.fail("unit_law", where=label, element=elems[a])
        by_src = defaultdict(list)
        for b in range(n):
            by_src[src[b]].append(b)
        for (a, b), ab in table.items():
            for c in by_src[tgt[b]]:
                bc = table.get((b, c))
                left = table.get((ab, c))
                right = table.get((a, bc)) if bc is not None else None
                if left is None or left != right:
                    w.fail("associativity", where=label, element=(elems[a], elems[b], elems[c]))

    check_category("hor", nH, hs, ht, D.id_hor, D.hor_comp, D.hor)
    check_category("ver", nV, vs, vt, D.id_ver, D.ver_comp, D.ver)
    # squares form categories over Ver (horizontally) and over Hor (vertically)
    idsq_for_h = [D.idsq_h[v] for v in range(nV)]
    idsq_for_v = [D.idsq_v[f] for f in range(nH)]
    check_category("sq_h", nS, sh, th, idsq_for_h, D.sq_hcomp, D.sq)
    check_category("sq_v", nS, sv, tv, idsq_for_v, D.sq_vcomp, D.sq)

    for (a, b), c in D.sq_hcomp.items():
        if D.hor_comp.get((sv[a], sv[b])) != sv[c] or D.hor_comp.get((tv[a], tv[b])) != tv[c]:
            w.fail("square_hcomp_boundary", element=(D.sq[a], D.sq[b]))
    for (a, b), c in D.sq_vcomp.items():
        if D.ver_comp.get((sh[a], sh[b])) != sh[c] or D.ver_comp.get((th[a], th[b])) != th[c]:
            w.fail("square_vcomp_boundary", element=(D.sq[a], D.sq[b]))
    for (f, g), fg in D.hor_comp.items():
        if D.sq_hcomp.get((D.idsq_v[f], D.idsq_v[g])) != D.idsq_v[fg]:
            w.fail("identity_square_composition", where="hor", element=(D.hor[f], D.hor[g]))
    for (u, v), uv in D.ver_comp.items():
        if D.sq_vcomp.get((D.idsq_h[u], D.idsq_h[v])) != D.idsq_h[uv]:
            w.fail("identity_square_composition", where="ver", element=(D.ver[u], D.ver[v]))

    below = defaultdict(list)  # squares by their top edge
    for c in range(nS):
        below[sv[c]].append(c)
    for (a, b), ab in D.sq_hcomp.items():
        for c in below[tv[a]]:
            for d in below[tv[b]]:
                if th[c] != sh[d]:
                    continue
                cd = D.sq_hcomp.get((c, d))
                top_bottom = D.sq_vcomp.get((ab, cd)) if cd is not None else None
                ac, bd = D.sq_vcomp.get((a, c)), D.sq_vcomp.get((b, d))
                left_right = D.sq_hcomp.get((ac, bd)) if ac is not None and bd is not None else None
                if top_bottom is None or top_bottom != left_right:
                    w.fail("interchange", element=(D.sq[a], D.sq[b], D.sq[c], D.sq[d]))
    return w.report()


# ---------------------------------------------------------------------------
# generated families


@lru_cache(maxsize=None)
def w_double(n: int) -> DoubleCategory:
    """Triangle-shaped grid on objects ``(i, j)``, ``0 <= i <= j <= n``."""
    r = range(n + 1)
    ob = list(combinations_with_replacement(r, 2))
    hor = list(combinations_with_replacement(r, 3))
    ver = list(combinations_with_replacement(r, 3))
    sq = list(combinations_with_replacement(r, 4))
    return DoubleCategory.from_labels(
        ob, hor, ver, sq,
        h_src=lambda f: (f[0], f[1]),
        h_tgt=lambda f: (f[0], f[2]),
        v_src=lambda v: (v[0], v[2]),
        v_tgt=lambda v: (v[1], v[2]),
        sq_sh=lambda a: (a[0], a[1], a[2]),
        sq_th=lambda a: (a[0], a[1], a[3]),
        sq_sv=lambda a: (a[0], a[2], a[3]),
        sq_tv=lambda a: (a[1], a[2], a[3]),
        id_hor=lambda x: (x[0], x[1], x[1]),
        id_ver=lambda x: (x[0], x[0], x[1]),
        idsq_h=lambda v: (v[0], v[1], v[2], v[2]),
        idsq_v=lambda f: (f[0], f[0], f[1], f[2]),
        hor_comp=lambda f, g: (f[0], f[1], g[2]),
        ver_comp=lambda u, v: (u[0], v[1], u[2]),
        sq_hcomp=lambda a, b: (a[0], a[1], a[2], b[3]),
        sq_vcomp=lambda a, b: (a[0], b[1], a[2], a[3]),
        name=f"W_{n}",
    )


@lru_cache(maxsize=None)
def box_double(q: int, r: int) -> DoubleCategory:
    """``[q] ⊠ [r]``: objects ``(i, j)`` with ``i <= q`` (vertical) and ``j <= r`` (horizontal)."""
    ob = [(i, j) for i in range(q + 1) for j in range(r + 1)]
    hor = [(i, j, k) for i in range(q + 1) for j, k in combinations_with_replacement(range(r + 1), 2)]
    ver = [(i, j, k) for i, k in combinations_with_replacement(range(q + 1), 2) for j in range(r + 1)]
    sq = [
        (i, j, k, l)
        for i, k in combinations_with_replacement(range(q + 1), 2)
        for j, l in combinations_with_replacement(range(r + 1), 2)
    ]
    return DoubleCategory.from_labels(
        ob, hor, ver, sq,
        h_src=lambda f: (f[0], f[1]),
        h_tgt=lambda f: (f[0], f[2]),
        v_src=lambda v: (v[0], v[1]),
        v_tgt=lambda v: (v[2], v[1]),
        sq_sh=lambda a: (a[0], a[1], a[2]),
        sq_th=lambda a: (a[0], a[3], a[2]),
        sq_sv=lambda a: (a[0], a[1], a[3]),
        sq_tv=lambda a: (a[2], a[1], a[3]),
        id_hor=lambda x: (x[0], x[1], x[1]),
        id_ver=lambda x: (x[0], x[1], x[0]),
        idsq_h=lambda v: (v[0], v[1], v[2], v[1]),
        idsq_v=lambda f: (f[0], f[1], f[0], f[2]),
        hor_comp=lambda f, g: (f[0], f[1], g[2]),
        ver_comp=lambda u, v: (u[0], u[1], v[2]),
        sq_hcomp=lambda a, b: (a[0], a[1], a[2], b[3]),
        sq_vcomp=lambda a, b: (a[0], a[1], b[2], a[3]),
        name=f"box_{q}_{r}",
    )


def _augment(D: DoubleCategory, labels) -> AugmentedDoubleCategory:
    index = {x: n for n, x in enumerate(D.ob)}
    return AugmentedDoubleCategory(D, frozenset(index[x] for x in labels))


@lru_cache(maxsize=None)
def generate_double(kind: str, *params: int) -> AugmentedDoubleCategory | DoubleCategory:
    """``W``/``H``/``V`` take ``n`` and come augmented; ``box`` takes ``q, r`` and is plain."""
    if kind == "box":
        q, r = params
        if q < 0 or r < 0:
            raise ValueError("q, r must be non-negative")
        return box_double(q, r)
    (n,) = params
    if n < 0:
        raise ValueError("n must be non-negative")
    W = w_double(n)
    if kind == "W":
        return _augment(W, [(i, i) for i in range(n + 1)])
    if kind == "H":
        return _augment(W.full_subcategory(lambda x: x[0] == 0, f"H_{n}"), [(0, 0)])
    if kind == "V":
        return _augment(W.full_subcategory(lambda x: x[1] == n, f"V_{n}"), [(n, n)])
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# stability and augmentation


def check_double(D: AugmentedDoubleCategory | DoubleCategory, prop: str) -> CheckReport:
    """``stable``: squares biject with spans and with cospans.
    ``augmented``: each object receives exactly one horizontal morphism from
    the augmentation and emits exactly one vertical morphism into it.
    """
    if isinstance(D, DoubleCategory):
        D = AugmentedDoubleCategory(D, frozenset())
    B = D.base
    valid = validate_double_category(B)
    if not valid.verdict:
        raise InvalidDoubleCategory(f"{B.name}: {valid.witnesses[0].to_json()}")
    w = WitnessCollector(prop)
    if prop == "stable":
        spans = defaultdict(list)
        cospans = defaultdict(list)
        for a in range(len(B.sq)):
            spans[(B.sq_sv[a], B.sq_sh[a])].append(a)
            cospans[(B.sq_th[a], B.sq_tv[a])].append(a)
        for f in range(len(B.hor)):
            for v in range(len(B.ver)):
                if B.h_src[f] == B.v_src[v]:
                    n = len(spans.get((f, v), ()))
                    if n != 1:
                        w.fail("span", element=(B.hor[f], B.ver[v]), preimages=n)
                if B.v_tgt[v] == B.h_tgt[f]:
                    n = len(cospans.get((v, f), ()))
                    if n != 1:
                        w.fail("cospan", element=(B.ver[v], B.hor[f]), preimages=n)
    elif prop == "augmented":
        A = D.augmentation
        hor_in = [0] * len(B.ob)
        ver_out = [0] * len(B.ob)
        for f in range(len(B.hor)):
            if B.h_src[f] in A:
                hor_in[B.h_tgt[f]] += 1
        for v in range(len(B.ver)):
            if B.v_tgt[v] in A:
                ver_out[B.v_src[v]] += 1
        for x in range(len(B.ob)):
            if hor_in[x] != 1:
                w.fail("horizontal_from_augmentation", element=B.ob[x], preimages=hor_in[x])
            if ver_out[x] != 1:
                w.fail("vertical_to_augmentation", element=B.ob[x], preimages=ver_out[x])
    else:
        raise ValueError(f"unknown property {prop!r}")
    return w.report()


# ---------------------------------------------------------------------------
# functors


def _functors(S: DoubleCategory, T: DoubleCategory, sa, ta, node_limit) -> list[DoubleFunctor]:
    found = homomorphisms(S.structure(sa), T.structure(ta), node_limit=node_limit)
    out = [DoubleFunctor(S, T, f["Ob"], f["Hor"], f["Ver"], f["Sq"]) for f in found]
    out.sort(key=DoubleFunctor.key)
    return out


def hom_augmented_functors(
    S: AugmentedDoubleCategory, D: AugmentedDoubleCategory, *, node_limit: int | None = 2_000_000
) -> list[DoubleFunctor]:
    """All double functors preserving the augmentation, ordered by their component arrays."""
    return _functors(S.base, D.base, S.augmentation, D.augmentation, node_limit)


def hom_double_functors(S: DoubleCategory, D: DoubleCategory, *, node_limit: int | None = 2_000_000) -> list[DoubleFunctor]:
    return _functors(S, D, None, None, node_limit)


def grid_set(D: DoubleCategory | AugmentedDoubleCategory, q: int, r: int) -> list[DoubleFunctor]:
    """Plain double functors ``[q] ⊠ [r] -> D``."""
    base = D.base if isinstance(D, AugmentedDoubleCategory) else D
    return hom_double_functors(box_double(q, r), base)


def w_index_functor(values: Sequence[int], n: int) -> DoubleFunctor:
    """``W(θ): W_m -> W_n`` for a monotone ``θ: [m] -> [n]``, applying ``θ`` to every index."""
    m = len(values) - 1
    S, T = w_double(m), w_double(n)

    def image(labels, target):
        index = {x: k for k, x in enumerate(target)}
        return tuple(index[tuple(values[i] for i in x)] for x in labels)

    return DoubleFunctor(S, T, image(S.ob, T.ob), image(S.hor, T.hor), image(S.ver, T.ver), image(S.sq, T.sq))


def box_index_functor(theta: Sequence[int], q: int, phi: Sequence[int], r: int) -> DoubleFunctor:
    """``[k]⊠[l] -> [q]⊠[r]`` induced by monotone ``θ: [k] -> [q]`` (rows) and ``φ: [l] -> [r]`` (columns)."""
    k, l = len(theta) - 1, len(phi) - 1
    S, T = box_double(k, l), box_double(q, r)
    it = {x: n for n, x in enumerate(T.ob)}
    ih = {x: n for n, x in enumerate(T.hor)}
    iv = {x: n for n, x in enumerate(T.ver)}
    isq = {x: n for n, x in enumerate(T.sq)}
    return DoubleFunctor(
        S,
        T,
        tuple(it[(theta[i], phi[j])] for i, j in S.ob),
        tuple(ih[(theta[i], phi[j], phi[k2])] for i, j, k2 in S.hor),
        tuple(iv[(theta[i], phi[j], theta[k2])] for i, j, k2 in S.ver),
        tuple(isq[(theta[i], phi[j], theta[k2], phi[l2])] for i, j, k2, l2 in S.sq),
    )
