"""Manifest composition: the ordered, timed, scored scene list that the
preview plays and the operator ships.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Mapping

from .models import (
    MAX_VIDEO_SECONDS,
    ManifestScene,
    Script,
    VideoManifest,
)

log = logging.getLogger(__name__)


class ManifestCompositionError(ValueError):
    """The script is missing pieces the manifest needs; names every gap."""

    def __init__(self, gaps: list[str]):
        super().__init__("cannot compose manifest: " + "; ".join(gaps))
        self.gaps = gaps


def compose_manifest(script: Script, selected_images: Mapping[int, str],
                     song_id: str) -> VideoManifest:
    """Assemble the deliverable from a finished script.

    Every scene needs a selected image path and a usable duration, and a
    song must be chosen; any gap is reported by scene index. A total runtime
    over the target is allowed but flagged.
    """
    gaps: list[str] = []
    if not song_id:
        gaps.append("no song selected")
    for scene in script.scenes:
        if not selected_images.get(scene.index):
            gaps.append(f"scene {scene.index} has no selected image")
        if scene.duration_s is None or not 0 < scene.duration_s <= MAX_VIDEO_SECONDS:
            gaps.append(f"scene {scene.index} has no usable duration "
                        f"({scene.duration_s!r})")
    if gaps:
        raise ManifestCompositionError(gaps)

    scenes = tuple(
        ManifestScene(
            image=selected_images[s.index],
            text=s.text,
            duration_s=s.duration_s,
            positivity=s.positivity.value,
        )
        for s in script.scenes
    )
    total = sum(s.duration_s for s in scenes)
    over = total > MAX_VIDEO_SECONDS
    if over:
        log.warning("manifest runs %.1fs, over the %.0fs target", total,
                    MAX_VIDEO_SECONDS)
    return VideoManifest(scenes=scenes, song_id=song_id,
                         total_duration_s=total, over_length=over)


def manifest_json(manifest: VideoManifest) -> str:
    """Canonical JSON rendering (stable key order, trailing newline)."""
    return json.dumps(manifest.to_dict(), indent=2, sort_keys=True) + "\n"


def save_manifest(manifest: VideoManifest, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(manifest_json(manifest), encoding="utf-8")
    return path


def load_manifest(path: str | Path) -> VideoManifest:
    with open(path, encoding="utf-8") as f:
        return VideoManifest.from_dict(json.load(f))
