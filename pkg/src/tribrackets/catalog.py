"""Named corpus of PD codes: prime knots to 8 crossings, prime links to 7
crossings, the square/granny knots, the (4,2)-torus link, and the
Reidemeister-move fixture pairs.

Entries live as plain-text assets under ``data/`` (one file per entry); set
``TRIBRACKET_CATALOG`` to point at an alternative directory.
"""

from __future__ import annotations

import difflib
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .diagram import PDCode, parse_pd


class UnknownNameError(KeyError):
    def __init__(self, name: str, suggestion: str | None):
        self.name = name
        self.suggestion = suggestion
        hint = f" (did you mean {suggestion!r}?)" if suggestion else ""
        super().__init__(f"no catalog entry named {name!r}{hint}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pd: PDCode
    components: int
    tags: frozenset[str]
    det: int | None = None
    pair: str | None = None
    default_orientation: tuple[int, ...] = ()

    @property
    def crossings(self) -> int:
        return self.pd.crossing_count


def _data_dir() -> Path:
    override = os.environ.get("TRIBRACKET_CATALOG")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def _parse_entry(text: str, source: str) -> CatalogEntry:
    fields: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(":")
        fields[key.strip()] = value.strip()
    try:
        name = fields["name"]
        pd = parse_pd(fields["pd"])
        components = int(fields["components"])
    except KeyError as missing:
        raise ValueError(f"catalog entry {source} is missing field {missing}")
    tags = frozenset(fields.get("tags", "").split()) or frozenset()
    det = int(fields["det"]) if "det" in fields else None
    pair = fields.get("pair") or None
    orientation = tuple(
        int(v) for v in fields.get("orientation", "").split()
    ) or tuple([0] * components)
    return CatalogEntry(name, pd, components, tags, det, pair, orientation)


@lru_cache(maxsize=None)
def _load_all(data_dir: str) -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    directory = Path(data_dir)
    if not directory.is_dir():
        raise FileNotFoundError(f"catalog directory {directory} does not exist")
    for path in sorted(directory.glob("*.txt")):
        entry = _parse_entry(path.read_text(), str(path))
        if entry.name in entries:
            raise ValueError(f"duplicate catalog name {entry.name!r} in {path}")
        entries[entry.name] = entry
    return entries


def _entries() -> dict[str, CatalogEntry]:
    return _load_all(str(_data_dir()))


def get(name: str) -> CatalogEntry:
    entries = _entries()
    if name not in entries:
        close = difflib.get_close_matches(name, entries.keys(), n=1)
        raise UnknownNameError(name, close[0] if close else None)
    return entries[name]


def list_entries(
    tags: set[str] | None = None,
    min_crossings: int | None = None,
    max_crossings: int | None = None,
) -> list[CatalogEntry]:
    """Name-sorted entries, optionally filtered by tags and crossing range."""
    out = []
    for entry in _entries().values():
        if tags and not tags <= entry.tags:
            continue
        if min_crossings is not None and entry.crossings < min_crossings:
            continue
        if max_crossings is not None and entry.crossings > max_crossings:
            continue
        out.append(entry)
    return sorted(out, key=_name_key)


def _name_key(entry: CatalogEntry) -> tuple:
    """Sort knots numerically (3_1 before 10_1), then links, then the rest."""
    name = entry.name
    parts = name.replace("_", " ").split()
    if len(parts) == 2 and parts[0].isdigit() and parts[1].isdigit():
        return (0, int(parts[0]), int(parts[1]), name)
    return (1, 0, 0, name)
