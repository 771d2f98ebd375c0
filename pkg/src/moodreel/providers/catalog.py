"""Song catalog ingestion from a frozen file snapshot (JSON or CSV)."""

from __future__ import annotations

import csv
import json
from importlib import resources
from pathlib import Path

from .base import SongEntry

CSV_FIELDS = ("id", "title", "valence", "energy", "popularity")


class CatalogError(ValueError):
    """The catalog file is missing, unparseable, or has invalid rows."""


def load_song_catalog(path: str | Path) -> list[SongEntry]:
    """Load and validate a song catalog.

    Accepts a JSON array of song objects or a CSV with header
    ``id,title,valence,energy,popularity``. Every invalid row is reported
    with its row number; an empty file is an empty catalog.
    """
    path = Path(path)
    if not path.exists():
        raise CatalogError(f"catalog file not found: {path}")
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        return []
    if path.suffix.lower() == ".csv":
        rows = _csv_rows(text, path)
    else:
        rows = _json_rows(text, path)

    entries: list[SongEntry] = []
    problems: list[str] = []
    seen_ids: dict[str, int] = {}
    for rownum, rec in rows:
        try:
            entry = SongEntry(
                id=str(rec["id"]),
                title=str(rec.get("title", "")),
                valence=float(rec["valence"]),
                energy=float(rec["energy"]),
                popularity=float(rec["popularity"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            problems.append(f"row {rownum}: {exc}")
            continue
        if entry.id in seen_ids:
            problems.append(f"row {rownum}: duplicate id {entry.id!r} "
                            f"(first seen at row {seen_ids[entry.id]})")
            continue
        seen_ids[entry.id] = rownum
        entries.append(entry)
    if problems:
        raise CatalogError(f"{path}: " + "; ".join(problems))
    return entries


def _json_rows(text: str, path: Path):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, list):
        raise CatalogError(f"{path}: expected a JSON array of songs")
    return [(i + 1, rec if isinstance(rec, dict) else {}) for i, rec in enumerate(data)]


def _csv_rows(text: str, path: Path):
    reader = csv.DictReader(text.splitlines())
    if reader.fieldnames is None:
        return []
    missing = [f for f in CSV_FIELDS if f not in reader.fieldnames]
    if missing:
        raise CatalogError(f"{path}: header missing columns {missing}")
    # header is line 1, first data row line 2
    return [(i + 2, rec) for i, rec in enumerate(reader)]


def sample_catalog_path() -> Path:
    """Filesystem path of the bundled demonstration catalog."""
    ref = resources.files("moodreel").joinpath("data/sample_catalog.json")
    with resources.as_file(ref) as path:
        return Path(path)
