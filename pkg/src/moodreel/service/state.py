"""Conversion between pipeline objects and the JSON project record.

Image bytes never live in the record; they are blobs under the project
directory and the record carries their relative paths.
"""

from __future__ import annotations

from typing import Any, Mapping, Sequence

from ..moodcore import PositivityScore
from ..pipeline import CampaignBrief, ColorSuggestion, Scene, Script, StyleSuggestion, Upload
from ..providers import ImageRef, SongEntry
from .store import ProjectStore


def new_project_state(brief: Mapping[str, str], with_mood: bool, seed: int) -> dict:
    return {
        "brief": {
            "audience": brief["audience"],
            "problem": brief["problem"],
            "action": brief["action"],
            "mood": brief["mood"],
        },
        "with_mood": with_mood,
        "seed": seed,
        "uploads": [],
        "scenes": None,
        "styles": None,
        "color": None,
        "mood_energy": None,
        "stages": {"script": False, "visuals": False, "music": False},
        "selections": {"images": {}, "style": 0, "song_id": None},
    }


def scene_to_state(scene: Scene, images: dict | None = None) -> dict:
    """Scene as a JSON record; ``images`` is the blob-path form, if any."""
    return {
        "index": scene.index,
        "text": scene.text,
        "image_description": scene.image_description,
        "narrative_goal": scene.narrative_goal,
        "duration_s": scene.duration_s,
        "positivity": scene.positivity.value,
        "upload_bound": scene.upload_bound,
        "image_error": scene.image_error,
        "images": images,
    }


def scene_from_state(d: Mapping[str, Any]) -> Scene:
    """Rebuild a scene without image bytes (paths stay in the record)."""
    return Scene(
        index=d["index"],
        text=d["text"],
        image_description=d["image_description"],
        narrative_goal=d.get("narrative_goal", ""),
        positivity=PositivityScore(d["positivity"]),
        duration_s=d.get("duration_s"),
        upload_bound=d.get("upload_bound"),
        image_error=d.get("image_error"),
    )


def uploads_from_state(state: Mapping[str, Any], store: ProjectStore,
                       project_id: str) -> tuple[Upload, ...]:
    uploads = []
    for u in state["uploads"]:
        data = store.read_blob(project_id, u["path"])
        uploads.append(Upload(
            id=u["id"],
            image=ImageRef(data=data, format=u.get("format", "png")),
            description=u["description"],
        ))
    return tuple(uploads)


def brief_from_state(state: Mapping[str, Any],
                     uploads: Sequence[Upload] = ()) -> CampaignBrief:
    b = state["brief"]
    return CampaignBrief(audience=b["audience"], problem=b["problem"],
                         action=b["action"], mood=b["mood"],
                         uploads=tuple(uploads))


def script_from_state(state: Mapping[str, Any],
                      uploads: Sequence[Upload] = ()) -> Script:
    if not state.get("scenes"):
        raise ValueError("project has no script yet")
    scenes = tuple(scene_from_state(d) for d in state["scenes"])
    return Script(scenes=scenes, brief=brief_from_state(state, uploads),
                  with_mood=state["with_mood"])


def styles_from_state(state: Mapping[str, Any]) -> list[StyleSuggestion] | None:
    if not state.get("styles"):
        return None
    return [StyleSuggestion(word=s["word"], style=s["style"],
                            explanation=s["explanation"])
            for s in state["styles"]]


def style_to_state(style: StyleSuggestion) -> dict:
    return {"word": style.word, "style": style.style,
            "explanation": style.explanation}


def color_from_state(state: Mapping[str, Any]) -> ColorSuggestion | None:
    c = state.get("color")
    if not c:
        return None
    return ColorSuggestion(energy_score=c["energy_score"],
                           color_description=c["color_description"])


def color_to_state(color: ColorSuggestion) -> dict:
    return {"energy_score": color.energy_score,
            "color_description": color.color_description}


def song_to_dict(song: SongEntry) -> dict:
    return {"id": song.id, "title": song.title, "valence": song.valence,
            "energy": song.energy, "popularity": song.popularity}
