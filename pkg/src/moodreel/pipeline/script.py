"""Stage 1: script generation, single-scene regeneration, upload
integration, and duration assignment.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Sequence

from ..moodcore import PositivityScore, SentimentLexicon, dice_similarity, positivity_score
from ..providers import ProviderSet, TextRequest
from .models import (
    DEFAULT_SCENE_SECONDS,
    MAX_VIDEO_SECONDS,
    CampaignBrief,
    Scene,
    Script,
    Upload,
)
from .parsing import parse_scene_block, parse_script, serialize_scene, serialize_script
from .prompts import build_regen_prompt, build_script_prompt

log = logging.getLogger(__name__)


class UploadAssignmentError(ValueError):
    """There are more uploads than scenes to place them in."""

    def __init__(self, unplaced: Sequence[str]):
        super().__init__(f"no scenes left for uploads: {', '.join(unplaced)}")
        self.unplaced = list(unplaced)


def rescore_scene(scene: Scene, lexicon: SentimentLexicon) -> Scene:
    """Recompute a scene's positivity from its text and image description."""
    return replace(scene, positivity=positivity_score(
        scene.text, scene.image_description, lexicon))


def generate_script(brief: CampaignBrief, with_mood: bool,
                    providers: ProviderSet,
                    lexicon: SentimentLexicon) -> Script:
    """Run the full stage-1 chain: prompt, completion, parse, score, uploads.

    Deterministic under mock providers. Parse failures surface before any
    partial script exists.
    """
    prompt = build_script_prompt(brief, with_mood)
    raw = providers.text.generate_text(TextRequest(prompt))
    script = parse_script(raw, with_mood=with_mood)
    script = assign_durations(script)
    script = replace(script, brief=brief,
                     scenes=tuple(rescore_scene(s, lexicon) for s in script.scenes))
    return integrate_uploads(script, brief.uploads)


def regenerate_scene(script: Script, index: int, new_goal: str,
                     new_positivity: PositivityScore | int,
                     providers: ProviderSet,
                     lexicon: SentimentLexicon) -> Scene:
    """Replace one scene with a regenerated one; neighbors are untouched.

    ``new_positivity`` is the user's target for the rewrite; the replacement
    prompt carries script context, goal, and mood, and the returned scene's
    positivity is rescored from the new wording. On parse failure the
    original scene stays in place (this function raises without side
    effects).
    """
    if not 0 <= index < len(script.scenes):
        raise IndexError(f"scene index {index} out of range "
                         f"(script has {len(script.scenes)} scenes)")
    PositivityScore(getattr(new_positivity, "value", new_positivity))  # range check
    current = script.scenes[index]
    mood = script.brief.mood if (script.with_mood and script.brief) else None
    prompt = build_regen_prompt(
        script_context=serialize_script(script),
        index=index,
        scene_block=serialize_scene(current, grammar="brief"),
        goal=new_goal,
        mood=mood,
    )
    raw = providers.text.generate_text(TextRequest(prompt))
    parsed = parse_scene_block(raw)
    scene = replace(
        current,
        text=parsed.text,
        image_description=parsed.image_description,
        narrative_goal=new_goal,
        upload_bound=None,
        images=None,
        image_error=None,
    )
    return rescore_scene(scene, lexicon)


def integrate_uploads(script: Script, uploads: Sequence[Upload]) -> Script:
    """Bind each upload to its most description-similar scene.

    Greedy over all (upload, scene) pairs by descending similarity, ties
    broken by upload then scene order. Bound scenes take the upload's
    description so the user can see where their imagery will land.
    """
    if not uploads:
        return script
    for up in uploads:
        if not up.description.strip():
            raise ValueError(f"upload {up.id!r} has an empty description")
    pairs = sorted(
        ((-dice_similarity(up.description, scene.image_description), ui, si)
         for ui, up in enumerate(uploads)
         for si, scene in enumerate(script.scenes)),
    )
    taken_uploads: set[int] = set()
    taken_scenes: set[int] = set()
    binding: dict[int, Upload] = {}
    for _neg_sim, ui, si in pairs:
        if ui in taken_uploads or si in taken_scenes:
            continue
        taken_uploads.add(ui)
        taken_scenes.add(si)
        binding[si] = uploads[ui]
    unplaced = [up.id for ui, up in enumerate(uploads) if ui not in taken_uploads]
    if unplaced:
        raise UploadAssignmentError(unplaced)
    scenes = tuple(
        replace(scene, image_description=binding[si].description,
                upload_bound=binding[si].id)
        if si in binding else scene
        for si, scene in enumerate(script.scenes)
    )
    return replace(script, scenes=scenes)


def assign_durations(script: Script) -> Script:
    """Fill in missing or unusable scene durations with the default.

    Parsed values outside (0, 45] are replaced and logged; everything stays
    editable afterward.
    """
    scenes = []
    for scene in script.scenes:
        d = scene.duration_s
        if d is None:
            d = DEFAULT_SCENE_SECONDS
        elif not 0 < d <= MAX_VIDEO_SECONDS:
            log.warning("scene %d duration %ss out of range, using default %ss",
                        scene.index, d, DEFAULT_SCENE_SECONDS)
            d = DEFAULT_SCENE_SECONDS
        scenes.append(replace(scene, duration_s=d))
    total = sum(s.duration_s for s in scenes)
    if total > MAX_VIDEO_SECONDS:
        log.warning("script runs %.1fs, over the %.0fs target", total, MAX_VIDEO_SECONDS)
    return replace(script, scenes=tuple(scenes))
