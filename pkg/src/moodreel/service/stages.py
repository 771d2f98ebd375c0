"""Stage runners: each one reads the project record, does the provider
work, and commits the result as a single revision."""

from __future__ import annotations

import random
from typing import Sequence

from ..moodcore import MoodPalette, SentimentLexicon, average_positivity
from ..pipeline import generate_scene_images, generate_script, mood_energy
from ..pipeline import recommend_colors, recommend_songs, recommend_styles
from ..pipeline.runner import candidate_path
from ..providers import ImageRef, ProviderSet, SongEntry
from .state import (
    brief_from_state,
    color_from_state,
    color_to_state,
    scene_to_state,
    script_from_state,
    style_to_state,
    styles_from_state,
    uploads_from_state,
)
from .store import ProjectStore


class StageOrderError(Exception):
    """A stage was requested before the one it depends on finished."""


def run_script_stage(store: ProjectStore, project_id: str,
                     providers: ProviderSet, lexicon: SentimentLexicon) -> None:
    state = store.read(project_id)
    uploads = uploads_from_state(state, store, project_id)
    brief = brief_from_state(state, uploads)
    script = generate_script(brief, state["with_mood"], providers, lexicon)

    def commit(d: dict) -> dict:
        d["scenes"] = [scene_to_state(s) for s in script.scenes]
        d["styles"] = None
        d["color"] = None
        d["mood_energy"] = None
        d["stages"] = {"script": True, "visuals": False, "music": False}
        d["selections"] = {"images": {}, "style": 0, "song_id": None}
        return d

    store.mutate(project_id, commit)


def run_visuals_stage(store: ProjectStore, project_id: str,
                      providers: ProviderSet) -> None:
    state = store.read(project_id)
    if not state["stages"]["script"]:
        raise StageOrderError("script stage has not completed")
    uploads = uploads_from_state(state, store, project_id)
    script = script_from_state(state, uploads)

    styles = None
    color = None
    chosen = None
    if state["with_mood"]:
        avg = average_positivity([s.positivity for s in script.scenes])
        styles = styles_from_state(state) or recommend_styles(
            script.brief.mood, avg, providers)
        pick = state["selections"].get("style", 0)
        if not 0 <= pick < len(styles):
            pick = 0
        chosen = styles[pick]
        color = color_from_state(state) or recommend_colors(
            script.brief.mood, providers)

    script = generate_scene_images(script, chosen, color, providers,
                                   base_seed=state["seed"])

    scene_images: dict[int, dict] = {}
    for scene in script.scenes:
        if scene.images is None:
            continue
        paths = []
        for ci, ref in enumerate(scene.images.candidates):
            assert isinstance(ref, ImageRef)
            rel = candidate_path(scene.index, ci)
            store.write_blob(project_id, rel, ref.data)
            paths.append(rel)
        scene_images[scene.index] = {
            "prompt_used": scene.images.prompt_used,
            "restyled": scene.images.restyled,
            "candidates": paths,
        }

    def commit(d: dict) -> dict:
        d["scenes"] = [
            scene_to_state(s, images=scene_images.get(s.index))
            for s in script.scenes
        ]
        if styles is not None:
            d["styles"] = [style_to_state(s) for s in styles]
        if color is not None:
            d["color"] = color_to_state(color)
        d["stages"]["visuals"] = True
        # every scene starts on its first candidate
        d["selections"]["images"] = {
            str(i): imgs["candidates"][0]
            for i, imgs in scene_images.items() if imgs["candidates"]
        }
        return d

    store.mutate(project_id, commit)


def run_music_stage(store: ProjectStore, project_id: str,
                    providers: ProviderSet, catalog: Sequence[SongEntry],
                    palette: MoodPalette) -> None:
    state = store.read(project_id)
    if not state["stages"]["script"]:
        raise StageOrderError("script stage has not completed")
    if not catalog:
        raise ValueError("song catalog is empty")
    script = script_from_state(state)
    avg = average_positivity([s.positivity for s in script.scenes])

    if state["with_mood"]:
        energy = mood_energy(state["brief"]["mood"], palette, providers)
        ranked = recommend_songs(catalog, avg, energy, k=8)
        default_song = ranked[0].id
    else:
        energy = None
        ordered = sorted(catalog, key=lambda s: s.id)
        default_song = random.Random(state["seed"]).choice(ordered).id

    def commit(d: dict) -> dict:
        d["mood_energy"] = energy
        d["stages"]["music"] = True
        if not d["selections"].get("song_id"):
            d["selections"]["song_id"] = default_song
        return d

    store.mutate(project_id, commit)


STAGE_RUNNERS = ("script", "visuals", "music")
