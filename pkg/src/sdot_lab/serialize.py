"""JSON documents: ``tss/v1``, ``pdec/v1``, ``dcat/v1``, ``paug/v1`` and ``report/v1``.

Every document carries a ``schema`` field and unknown fields are rejected.
Element ids are strings (labels are stringified on output).  The canonical
form sorts ids within each level and remaps all index arrays accordingly, so
``dumps(loads(text)) == text`` for canonical text.
"""
from __future__ import annotations

import json
from typing import Any

from .doublecat import AugmentedDoubleCategory, DoubleCategory
from .polygon import PolygonalDecomposition
from .preaug import MINUS_ONE, PreaugBisimplicialSet, key_name, parse_key
from .simpset import SimplicialSet


class SchemaError(ValueError):
    pass


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def _fields(doc: dict, schema: str, required: set, optional: set = frozenset()) -> None:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if doc.get("schema") != schema:
        raise SchemaError(f"expected schema {schema!r}, got {doc.get('schema')!r}")
    keys = set(doc) - {"schema"}
    unknown = keys - required - set(optional)
    if unknown:
        raise SchemaError(f"unknown fields for {schema}: {sorted(unknown)}")
    missing = required - keys
    if missing:
        raise SchemaError(f"missing fields for {schema}: {sorted(missing)}")


def _ids(labels) -> list[str]:
    ids = [x if isinstance(x, str) else str(x) for x in labels]
    if len(set(ids)) != len(ids):
        raise SchemaError("element ids are not unique within a level")
    return ids


def _sorted_order(ids: list[str]) -> tuple[list[str], dict[int, int]]:
    """Sorted ids and the old-index -> new-index map."""
    order = sorted(range(len(ids)), key=lambda n: ids[n])
    return [ids[n] for n in order], {old: new for new, old in enumerate(order)}


def _remap(arr, src: dict[int, int], dst: dict[int, int]) -> list[int]:
    """Array re-indexed on both sides: ``new[src[x]] = dst[arr[x]]``."""
    out = [0] * len(arr)
    for x, y in enumerate(arr):
        out[src[x]] = dst[y]
    return out


def _int_array(value, length: int, bound: int, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or len(value) != length:
        raise SchemaError(f"{what}: expected an array of length {length}")
    if any(not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < bound for y in value):
        raise SchemaError(f"{what}: entries must be integers in [0, {bound})")
    return tuple(value)


# ---------------------------------------------------------------------------
# tss/v1


def simplicial_to_json(X: SimplicialSet) -> dict:
    ids = [_ids(level) for level in X.labels]
    sorted_ids, perm = zip(*(_sorted_order(level) for level in ids))
    faces = {
        str(k): [_remap(X.faces[k][i], perm[k], perm[k - 1]) for i in range(k + 1)] for k in range(1, X.depth + 1)
    }
    degens = {
        str(k): [_remap(X.degeneracies[k][i], perm[k], perm[k + 1]) for i in range(k + 1)] for k in range(X.depth)
    }
    return {
        "schema": "tss/v1",
        "depth": X.depth,
        "levels": [list(level) for level in sorted_ids],
        "faces": faces,
        "degeneracies": degens,
    }


def simplicial_from_json(doc: dict) -> SimplicialSet:
    _fields(doc, "tss/v1", {"depth", "levels", "faces", "degeneracies"})
    N = doc["depth"]
    if not isinstance(N, int) or N < 0:
        raise SchemaError("depth must be a non-negative integer")
    levels = doc["levels"]
    if not isinstance(levels, list) or len(levels) != N + 1:
        raise SchemaError("levels must list depth+1 levels")
    levels = [_ids(level) for level in levels]
    sizes = [len(level) for level in levels]
    if set(doc["faces"]) != {str(k) for k in range(1, N + 1)}:
        raise SchemaError("faces must be keyed by levels 1..depth")
    if set(doc["degeneracies"]) != {str(k) for k in range(N)}:
        raise SchemaError("degeneracies must be keyed by levels 0..depth-1")
    faces: list = [()]
    for k in range(1, N + 1):
        fs = doc["faces"][str(k)]
        if not isinstance(fs, list) or len(fs) != k + 1:
            raise SchemaError(f"level {k} needs {k + 1} faces")
        faces.append(tuple(_int_array(a, sizes[k], sizes[k - 1], f"d_{i} at level {k}") for i, a in enumerate(fs)))
    degens: list = []
    for k in range(N):
        ss = doc["degeneracies"][str(k)]
        if not isinstance(ss, list) or len(ss) != k + 1:
            raise SchemaError(f"level {k} needs {k + 1} degeneracies")
        degens.append(tuple(_int_array(a, sizes[k], sizes[k + 1], f"s_{i} at level {k}") for i, a in enumerate(ss)))
    degens.append(())
    return SimplicialSet(N, levels, faces, degens)


# ---------------------------------------------------------------------------
# pdec/v1


def decomposition_to_json(P: PolygonalDecomposition) -> dict:
    return P.to_json()


def decomposition_from_json(doc: dict) -> PolygonalDecomposition:
    _fields(doc, "pdec/v1", {"n", "diagonals"})
    diags = doc["diagonals"]
    if not isinstance(diags, list) or any(not isinstance(d, list) or len(d) != 2 for d in diags):
        raise SchemaError("diagonals must be pairs")
    return PolygonalDecomposition(doc["n"], tuple(tuple(d) for d in diags))


# ---------------------------------------------------------------------------
# dcat/v1

_DCAT_ARRAYS = {
    # name: (domain sort, codomain sort)
    "h_src": ("hor", "ob"), "h_tgt": ("hor", "ob"),
    "v_src": ("ver", "ob"), "v_tgt": ("ver", "ob"),
    "sq_sh": ("sq", "ver"), "sq_th": ("sq", "ver"),
    "sq_sv": ("sq", "hor"), "sq_tv": ("sq", "hor"),
    "id_hor": ("ob", "hor"), "id_ver": ("ob", "ver"),
    "idsq_h": ("ver", "sq"), "idsq_v": ("hor", "sq"),
}
_DCAT_TABLES = {"hor_comp": "hor", "ver_comp": "ver", "sq_hcomp": "sq", "sq_vcomp": "sq"}
_SORTS = ("ob", "hor", "ver", "sq")


def double_to_json(D: DoubleCategory | AugmentedDoubleCategory) -> dict:
    aug = None
    if isinstance(D, AugmentedDoubleCategory):
        aug, D = D.augmentation, D.base
    ids = {s: _ids(getattr(D, s)) for s in _SORTS}
    order = {s: _sorted_order(ids[s]) for s in _SORTS}
    doc: dict[str, Any] = {"schema": "dcat/v1", "name": D.name}
    for s in _SORTS:
        doc[s] = order[s][0]
    for name, (a, b) in _DCAT_ARRAYS.items():
        doc[name] = _remap(getattr(D, name), order[a][1], order[b][1])
    for name, s in _DCAT_TABLES.items():
        p = order[s][1]
        doc[name] = sorted([p[x], p[y], p[z]] for (x, y), z in getattr(D, name).items())
    doc["augmentation"] = None if aug is None else sorted(order["ob"][1][x] for x in aug)
    return doc


def double_from_json(doc: dict) -> DoubleCategory | AugmentedDoubleCategory:
    _fields(doc, "dcat/v1", set(_SORTS) | set(_DCAT_ARRAYS) | set(_DCAT_TABLES), {"name", "augmentation"})
    labels = {s: _ids(doc[s]) for s in _SORTS}
    size = {s: len(v) for s, v in labels.items()}
    arrays = {
        name: _int_array(doc[name], size[a], size[b], name) for name, (a, b) in _DCAT_ARRAYS.items()
    }
    tables = {}
    for name, s in _DCAT_TABLES.items():
        rows = doc[name]
        if not isinstance(rows, list):
            raise SchemaError(f"{name} must be a list of triples")
        table = {}
        for row in rows:
            x, y, z = _int_array(row, 3, size[s], name)
            table[(x, y)] = z
        tables[name] = table
    D = DoubleCategory(
        ob=tuple(labels["ob"]), hor=tuple(labels["hor"]), ver=tuple(labels["ver"]), sq=tuple(labels["sq"]),
        name=doc.get("name") or "", **arrays, **tables,
    )
    aug = doc.get("augmentation")
    if aug is None:
        return D
    return AugmentedDoubleCategory(D, frozenset(_int_array(aug, len(aug), size["ob"], "augmentation")))


# ---------------------------------------------------------------------------
# paug/v1


def preaug_to_json(Y: PreaugBisimplicialSet) -> dict:
    ids = {key: _ids(Y.labels[key]) for key in Y.keys()}
    order = {key: _sorted_order(ids[key]) for key in Y.keys()}
    maps = {
        name: _remap(arr, order[a][1], order[b][1]) for name, a, b, arr in Y.generators()
    }
    return {
        "schema": "paug/v1",
        "depth": Y.depth,
        "levels": {key_name(key): order[key][0] for key in Y.keys()},
        "maps": maps,
    }


def preaug_from_json(doc: dict) -> PreaugBisimplicialSet:
    _fields(doc, "paug/v1", {"depth", "levels", "maps"})
    N = doc["depth"]
    if not isinstance(N, int) or N < 0:
        raise SchemaError("depth must be a non-negative integer")
    expected = {key_name((k, l)) for k in range(N + 1) for l in range(N + 1)} | {"-1"}
    if set(doc["levels"]) != expected:
        raise SchemaError("levels must be keyed by 'k,l' for 0 <= k, l <= depth and '-1'")
    labels = {parse_key(name): _ids(v) for name, v in doc["levels"].items()}
    size = {key: len(v) for key, v in labels.items()}
    # names follow the generator naming of PreaugBisimplicialSet.generators
    hf, vf, hd, vd = {}, {}, {}, {}
    wanted = {}
    for k in range(N + 1):
        for l in range(N + 1):
            if l >= 1:
                wanted.update({f"h{i}@{k},{l}": (hf, (k, l), (k, l - 1), l + 1) for i in range(l + 1)})
            if k >= 1:
                wanted.update({f"v{i}@{k},{l}": (vf, (k, l), (k - 1, l), k + 1) for i in range(k + 1)})
            if l < N:
                wanted.update({f"hs{i}@{k},{l}": (hd, (k, l), (k, l + 1), l + 1) for i in range(l + 1)})
            if k < N:
                wanted.update({f"vs{i}@{k},{l}": (vd, (k, l), (k + 1, l), k + 1) for i in range(k + 1)})
    names = set(doc["maps"])
    if names != set(wanted) | {"aug"}:
        extra = sorted(names - set(wanted) - {"aug"})
        missing = sorted((set(wanted) | {"aug"}) - names)
        raise SchemaError(f"maps mismatch; unknown {extra}, missing {missing}")
    for name, (table, src, dst, count) in wanted.items():
        table.setdefault(src, [None] * count)
        i = int(name.split("@")[0].lstrip("hvs"))
        table[src][i] = _int_array(doc["maps"][name], size[src], size[dst], name)
    freeze = lambda t: {key: tuple(v) for key, v in t.items()}
    aug = _int_array(doc["maps"]["aug"], size[MINUS_ONE], size[(0, 0)], "aug")
    return PreaugBisimplicialSet(N, labels, freeze(hf), freeze(vf), freeze(hd), freeze(vd), aug)


# ---------------------------------------------------------------------------
# dispatch

LOADERS = {
    "tss/v1": simplicial_from_json,
    "pdec/v1": decomposition_from_json,
    "dcat/v1": double_from_json,
    "paug/v1": preaug_from_json,
}


def to_json(obj) -> dict:
    if isinstance(obj, SimplicialSet):
        return simplicial_to_json(obj)
    if isinstance(obj, PolygonalDecomposition):
        return decomposition_to_json(obj)
    if isinstance(obj, (DoubleCategory, AugmentedDoubleCategory)):
        return double_to_json(obj)
    if isinstance(obj, PreaugBisimplicialSet):
        return preaug_to_json(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"no schema for {type(obj).__name__}")


def from_json(doc: dict):
    if not isinstance(doc, dict) or "schema" not in doc:
        raise SchemaError("document has no schema field")
    loader = LOADERS.get(doc["schema"])
    if loader is None:
        raise SchemaError(f"unsupported schema {doc['schema']!r}")
    return loader(doc)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_json(doc)


def load(path: str):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def canonical(obj) -> str:
    return dumps(to_json(obj))
