"""Backtracking enumeration of homomorphisms between finite multi-sorted structures.

A structure has finitely many sorts, unary operations between sorts, partial
binary operations, and distinguished subsets.  A homomorphism is a function
per sort commuting with every operation (binary composites of defined pairs
must be defined in the target) and mapping each distinguished subset into its
counterpart.  Presheaves and double categories are both encoded this way.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Structure:
    sorts: dict[str, int]
    unary: dict[str, tuple[str, str, tuple[int, ...]]] = field(default_factory=dict)
    binary: dict[str, tuple[str, str, str, dict[tuple[int, int], int]]] = field(default_factory=dict)
    subsets: dict[str, tuple[str, frozenset]] = field(default_factory=dict)


Var = tuple[str, int]


@dataclass
class SearchStats:
    nodes: int = 0
    solutions: int = 0


def _check_signature(S: Structure, T: Structure) -> None:
    if set(S.sorts) != set(T.sorts):
        raise ValueError("structures have different sorts")
    for name, (a, b, _) in S.unary.items():
        if T.unary.get(name, (None, None))[:2] != (a, b):
            raise ValueError(f"unary operation {name} differs")
    for name, (a, b, c, _) in S.binary.items():
        if T.binary.get(name, (None,) * 3)[:3] != (a, b, c):
            raise ValueError(f"binary operation {name} differs")
    for name, (a, _) in S.subsets.items():
        if T.subsets.get(name, (None,))[0] != a:
            raise ValueError(f"subset {name} differs")


def verify_homomorphism(S: Structure, T: Structure, f: dict[str, Sequence[int]]) -> bool:
    for name, (a, b, arr) in S.unary.items():
        tarr = T.unary[name][2]
        if any(f[b][arr[x]] != tarr[f[a][x]] for x in range(S.sorts[a])):
            return False
    for name, (a, b, c, table) in S.binary.items():
        ttable = T.binary[name][3]
        for (x, y), z in table.items():
            if ttable.get((f[a][x], f[b][y])) != f[c][z]:
                return False
    for name, (a, members) in S.subsets.items():
        tmem = T.subsets[name][1]
        if any(f[a][x] not in tmem for x in members):
            return False
    return True


class _Solver:
    def __init__(self, S: Structure, T: Structure, order_hint, node_limit):
        self.S, self.T = S, T
        self.node_limit = node_limit
        self.stats = SearchStats()
        self.vars: list[Var] = [(s, x) for s in sorted(S.sorts) for x in range(S.sorts[s])]
        self.out_unary: dict[Var, list] = defaultdict(list)
        for name, (a, b, arr) in S.unary.items():
            tarr = T.unary[name][2]
            pre: dict[int, list[int]] = defaultdict(list)
            for y, z in enumerate(tarr):
                pre[z].append(y)
            for x in range(S.sorts[a]):
                self.out_unary[(a, x)].append(((b, arr[x]), tarr, pre))
        self.binary_links: dict[Var, list] = defaultdict(list)
        for name, (a, b, c, table) in S.binary.items():
            ttable = T.binary[name][3]
            for (x, y), z in table.items():
                link = ((a, x), (b, y), (c, z), ttable)
                self.binary_links[(a, x)].append(link)
                self.binary_links[(b, y)].append(link)
        allowed: dict[Var, set] = {}
        for name, (a, members) in S.subsets.items():
            tmem = T.subsets[name][1]
            for x in members:
                allowed[(a, x)] = allowed.get((a, x), set(tmem)) & set(tmem)
        self.domain = {
            v: sorted(allowed[v]) if v in allowed else range(T.sorts[v[0]]) for v in self.vars
        }
        self.allowed = allowed
        self.value: dict[Var, int] = {}
        self.trail: list[Var] = []
        hint = [v for v in (order_hint or ()) if v in self.domain]
        self.hint = list(dict.fromkeys(hint))
        self.hint_pos = 0

    # assignment with forced propagation ---------------------------------

    def assign(self, v: Var, y: int) -> bool:
        queue = [(v, y)]
        while queue:
            u, z = queue.pop()
            have = self.value.get(u)
            if have is not None:
                if have != z:
                    return False
                continue
            if u in self.allowed and z not in self.allowed[u]:
                return False
            self.value[u] = z
            self.trail.append(u)
            for w, tarr, _ in self.out_unary[u]:
                queue.append((w, tarr[z]))
            for left, right, res, ttable in self.binary_links[u]:
                a, b = self.value.get(left), self.value.get(right)
                if a is None or b is None:
                    continue
                c = ttable.get((a, b))
                if c is None:
                    return False
                queue.append((res, c))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            del self.value[self.trail.pop()]

    # variable selection ----------------------------------------------------

    def candidates(self, v: Var) -> Iterable[int]:
        best = None
        for w, _, pre in self.out_unary[v]:
            z = self.value.get(w)
            if z is not None:
                opts = pre.get(z, ())
                if best is None or len(opts) < len(best):
                    best = opts
        return self.domain[v] if best is None else best

    def choose(self):
        while self.hint_pos < len(self.hint):
            v = self.hint[self.hint_pos]
            if v not in self.value:
                return v, self.candidates(v)
            self.hint_pos += 1
        best_v, best_c = None, None
        for v in self.vars:
            if v in self.value:
                continue
            c = self.candidates(v)
            if best_c is None or len(c) < len(best_c):
                best_v, best_c = v, c
                if len(c) <= 1:
                    break
        return best_v, best_c

    def run(self) -> list[dict[str, tuple[int, ...]]]:
        out = []
        self._search(out)
        return out

    def _search(self, out) -> None:
        self.stats.nodes += 1
        if self.node_limit is not None and self.stats.nodes > self.node_limit:
            raise SearchBudgetExceeded(f"more than {self.node_limit} search nodes")
        saved_hint = self.hint_pos
        v, cands = self.choose()
        if v is None:
            f = {s: tuple(self.value[(s, x)] for x in range(n)) for s, n in self.S.sorts.items()}
            if verify_homomorphism(self.S, self.T, f):
                out.append(f)
                self.stats.solutions += 1
            self.hint_pos = saved_hint
            return
        for y in list(cands):
            mark = len(self.trail)
            if self.assign(v, y):
                self._search(out)
            self.undo(mark)
        self.hint_pos = saved_hint


def homomorphisms(
    S: Structure,
    T: Structure,
    *,
    order_hint: Sequence[Var] | None = None,
    node_limit: int | None = 2_000_000,
) -> list[dict[str, tuple[int, ...]]]:
    """All homomorphisms ``S -> T``, sorted by their value tuples in sort-name order."""
    _check_signature(S, T)
    if any(S.sorts[s] > 0 and T.sorts[s] == 0 for s in S.sorts):
        return []
    solver = _Solver(S, T, order_hint, node_limit)
    found = solver.run()
    names = sorted(S.sorts)
    found.sort(key=lambda f: tuple(f[s] for s in names))
    return found


def count_homomorphisms(S: Structure, T: Structure, **kw) -> int:
    return len(homomorphisms(S, T, **kw))


def presheaf_structure(levels: dict[Hashable, int], maps: dict[str, tuple[Hashable, Hashable, tuple[int, ...]]]) -> Structure:
    """Encode a presheaf (levels and generating maps) as a structure with string sort names."""
    return Structure(
        sorts={str(k): n for k, n in levels.items()},
        unary={name: (str(a), str(b), arr) for name, (a, b, arr) in maps.items()},
    )
