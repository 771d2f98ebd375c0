"""One-call campaign run: brief in, manifest (and assets) out.

Used by the CLI and the demos. The with-mood path follows the full
workflow; the baseline path drops every mood input: script prompt without
the mood clause, plain illustration prompts, and a seeded random song pick
instead of feature matching.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from ..moodcore import (
    MoodPalette,
    SentimentLexicon,
    average_positivity,
    default_lexicon,
    default_palette,
)
from ..providers import ImageRef, ProviderSet, SongEntry
from .manifest import compose_manifest, save_manifest
from .models import ColorSuggestion, Script, StyleSuggestion, VideoManifest
from .music import mood_energy, rank_by_popularity, recommend_songs
from .parsing import serialize_script
from .script import generate_script
from .visuals import generate_scene_images, recommend_colors, recommend_styles

DEFAULT_SONG_COUNT = 8


@dataclass
class RunResult:
    """Everything a full run produced, plus the bytes behind image paths."""

    script: Script
    manifest: VideoManifest
    styles: list[StyleSuggestion] = field(default_factory=list)
    color: ColorSuggestion | None = None
    ranked_songs: list[SongEntry] = field(default_factory=list)
    images: dict[str, bytes] = field(default_factory=dict)


def candidate_path(scene_index: int, candidate: int) -> str:
    """Relative path an image candidate is stored under in a project."""
    return f"images/scene_{scene_index:02d}_cand_{candidate}.png"


def collect_images(script: Script) -> dict[str, bytes]:
    """Map every generated candidate to its project-relative path."""
    images: dict[str, bytes] = {}
    for scene in script.scenes:
        if scene.images is None:
            continue
        for ci, ref in enumerate(scene.images.candidates):
            if isinstance(ref, ImageRef):
                images[candidate_path(scene.index, ci)] = ref.data
    return images


def run_campaign(brief, providers: ProviderSet, catalog: Sequence[SongEntry],
                 *, with_mood: bool = True, seed: int = 0,
                 lexicon: SentimentLexicon | None = None,
                 palette: MoodPalette | None = None,
                 song_count: int = DEFAULT_SONG_COUNT,
                 out_dir: str | Path | None = None) -> RunResult:
    """Run all three stages with first-suggestion defaults.

    Deterministic for a fixed (brief, seed) under mock providers. When
    ``out_dir`` is given, images, the serialized script, and manifest.json
    are written there.
    """
    lexicon = lexicon or default_lexicon()
    palette = palette or default_palette()

    script = generate_script(brief, with_mood, providers, lexicon)
    avg = average_positivity([s.positivity for s in script.scenes])

    styles: list[StyleSuggestion] = []
    color: ColorSuggestion | None = None
    chosen_style: StyleSuggestion | None = None
    if with_mood:
        styles = recommend_styles(brief.mood, avg, providers)
        chosen_style = styles[0]
        color = recommend_colors(brief.mood, providers)

    script = generate_scene_images(script, chosen_style, color, providers,
                                   base_seed=seed)

    if with_mood:
        energy = mood_energy(brief.mood, palette, providers, cache={})
        ranked = recommend_songs(catalog, avg, energy, k=song_count)
        song = ranked[0]
    else:
        if not catalog:
            raise ValueError("song catalog is empty")
        ranked = rank_by_popularity(catalog)
        song = random.Random(seed).choice(sorted(catalog, key=lambda s: s.id))

    selected = {s.index: candidate_path(s.index, 0) for s in script.scenes}
    manifest = compose_manifest(script, selected, song.id)
    images = collect_images(script)

    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for rel, data in images.items():
            target = out / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_bytes(data)
        (out / "script.txt").write_text(serialize_script(script) + "\n",
                                        encoding="utf-8")
        save_manifest(manifest, out / "manifest.json")

    return RunResult(script=script, manifest=manifest, styles=styles,
                     color=color, ranked_songs=ranked, images=images)
