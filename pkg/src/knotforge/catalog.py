"""Persistent knot catalog and the table-building entry points.

Storage is append-only JSON lines with an explicit compaction step; a
record's identity is its canonical fraction (or pattern string), and
re-discoveries only replace the stored parameters when the new
frequency tuple is lexicographically smaller.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .lissajous import admissible_nz_values, enumerate_L, enumerate_L_family
from .twobridge import canonical, crossing_number, is_one_mod2, alexander_of_fraction

__all__ = [
    "KnotRecord",
    "KnotCatalog",
    "tabulate_L2",
    "tabulate_by_crossing",
    "two_bridge_count_rows",
]


@dataclass(frozen=True)
class KnotRecord:
    """One catalogued knot: identity plus the parameters that found it."""

    identity: str
    family: str  # "lissajous" | "fourier112"
    parameters: Mapping[str, object]
    crossing_number: int | None = None
    first_seen: Mapping[str, object] = field(default_factory=dict)

    def freq_tuple(self) -> tuple:
        p = self.parameters
        if self.family == "fourier112":
            return (p["nx"], p["ny"], p["nz1"], p["nz2"])
        return (p["nx"], p["ny"], p["nz"])

    def to_json(self) -> str:
        return json.dumps(
            {
                "identity": self.identity,
                "family": self.family,
                "parameters": dict(self.parameters),
                "crossing_number": self.crossing_number,
                "first_seen": dict(self.first_seen),
            },
            sort_keys=False,
        )

    @classmethod
    def from_json(cls, line: str) -> "KnotRecord":
        d = json.loads(line)
        return cls(
            identity=d["identity"],
            family=d["family"],
            parameters=d["parameters"],
            crossing_number=d.get("crossing_number"),
            first_seen=d.get("first_seen", {}),
        )


class KnotCatalog:
    """Single-writer deduplicated store keyed by (family, identity)."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self.records: dict[tuple[str, str], KnotRecord] = {}
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    self._absorb(KnotRecord.from_json(line))

    def _absorb(self, rec: KnotRecord) -> KnotRecord:
        key = (rec.family, rec.identity)
        old = self.records.get(key)
        if old is None or rec.freq_tuple() < old.freq_tuple():
            self.records[key] = rec
        return self.records[key]

    def upsert(self, rec: KnotRecord) -> KnotRecord:
        """Insert, or replace only when the frequency tuple is smaller."""
        stored = self._absorb(rec)
        if self.path and stored is rec:
            with self.path.open("a") as fh:
                fh.write(rec.to_json() + "\n")
        return stored

    def compact(self) -> None:
        """Rewrite the backing file with one line per stored identity."""
        if not self.path:
            return
        lines = [rec.to_json() for _, rec in sorted(self.records.items())]
        self.path.write_text("".join(line + "\n" for line in lines))

    def count(self, family: str | None = None, include_unknot: bool = False) -> int:
        n = 0
        for (fam, ident), _ in self.records.items():
            if family and fam != family:
                continue
            if not include_unknot and ident == "1/1":
                continue
            n += 1
        return n

    def __len__(self) -> int:
        return len(self.records)


def tabulate_L2(
    ny_max: int, window: str = "stabilized", workers: int = 1
) -> dict[int, int]:
    """Distinct non-trivial knot counts per odd ny, 3 <= ny <= ny_max."""
    out = {}
    for ny in range(3, ny_max + 1, 2):
        out[ny] = len(enumerate_L_family(2, ny, window=window, workers=workers))
    return out


def tabulate_by_crossing(
    ny_list: Iterable[int], window: str = "stabilized", workers: int = 1
) -> dict[int, dict[int, list[str]]]:
    """Fractions of each family grouped by crossing number."""
    out: dict[int, dict[int, list[str]]] = {}
    for ny in ny_list:
        groups: dict[int, list[str]] = {}
        for ident in enumerate_L_family(2, ny, window=window, workers=workers):
            p, q = map(int, ident.split("/"))
            cr = crossing_number(canonical(p, q))
            groups.setdefault(cr, []).append(ident)
        out[ny] = {cr: sorted(ids, key=_frac_key) for cr, ids in sorted(groups.items())}
    return out


def _frac_key(ident: str) -> tuple[int, int]:
    p, q = map(int, ident.split("/"))
    return p, q


def two_bridge_count_rows(cr_max: int) -> dict[str, list[int]]:
    """Counts of 2-bridge knots and of those with trivial mod-2 Alexander
    polynomial, per crossing number 3..cr_max."""
    from .twobridge import enumerate_two_bridge

    table = enumerate_two_bridge(cr_max)
    crossings = list(range(3, cr_max + 1))
    all_counts, one_counts = [], []
    for cr in crossings:
        fracs = table[cr]
        all_counts.append(len(fracs))
        one_counts.append(sum(1 for f in fracs if is_one_mod2(alexander_of_fraction(f))))
    return {"crossing": crossings, "two_bridge": all_counts, "delta_one_mod2": one_counts}
