"""Verdicts with reproducible failure witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Witness:
    """First failing instance of one clause, plus how many instances failed."""

    clause: str
    level: Any = None
    where: Any = None
    element: Any = None
    preimages: int | None = None
    count: int = 1

    def to_json(self) -> dict:
        out: dict[str, Any] = {"clause": self.clause, "count": self.count}
        for key in ("level", "where", "element", "preimages"):
            value = getattr(self, key)
            if value is not None:
                out[key] = jsonable(value)
        return out


@dataclass
class CheckReport:
    property: str
    verdict: bool = True
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        doc = {
            "schema": "report/v1",
            "property": self.property,
            "verdict": self.verdict,
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc


class WitnessCollector:
    """Accumulate failures per clause, keeping the first instance of each."""

    def __init__(self, prop: str):
        self.prop = prop
        self.first: dict[str, Witness] = {}
        self.counts: dict[str, int] = {}
        self.notes: list[str] = []

    def fail(self, clause: str, **kw) -> None:
        if clause not in self.first:
            self.first[clause] = Witness(clause, **kw)
        self.counts[clause] = self.counts.get(clause, 0) + 1

    @property
    def failed(self) -> bool:
        return bool(self.first)

    def report(self) -> CheckReport:
        ws = [
            Witness(w.clause, w.level, w.where, w.element, w.preimages, self.counts[c])
            for c, w in self.first.items()
        ]
        return CheckReport(self.prop, not ws, ws, list(self.notes))


def jsonable(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)
