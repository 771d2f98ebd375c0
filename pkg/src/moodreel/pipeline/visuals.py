"""Stage 2: art style and color recommendation, per-scene image generation,
and upload restyling.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import replace

from ..providers import (
    ImageEditRequest,
    ImageRequest,
    ProviderError,
    ProviderSet,
    TextRequest,
)
from .models import (
    IMAGE_HEIGHT,
    IMAGE_WIDTH,
    ColorSuggestion,
    ImageSet,
    Scene,
    Script,
    StyleSuggestion,
    Upload,
)
from .parsing import parse_color, parse_styles
from .prompts import (
    build_color_prompt,
    build_image_prompt,
    build_style_prompt,
    plain_image_prompt,
    sentiment_word,
)

log = logging.getLogger(__name__)

#: How strongly restyling pulls an upload toward the chosen art style.
RESTYLE_STRENGTH = 0.8


def recommend_styles(mood: str, avg_positivity: float,
                     providers: ProviderSet) -> list[StyleSuggestion]:
    """Ask for three art styles fitting the mood and the script's sentiment."""
    word = sentiment_word(avg_positivity)
    raw = providers.text.generate_text(
        TextRequest(build_style_prompt(mood, word)))
    return parse_styles(raw)


def recommend_colors(mood: str, providers: ProviderSet) -> ColorSuggestion:
    """Ask for a 0-100 mood energy rank and a short color description."""
    raw = providers.text.generate_text(TextRequest(build_color_prompt(mood)))
    return parse_color(raw)


def scene_seed(base_seed: int, scene_index: int) -> int:
    """Stable per-scene seed derived from the project seed."""
    digest = hashlib.sha256(f"{base_seed}:{scene_index}".encode()).digest()
    return int.from_bytes(digest[:4], "big")


def _scene_prompt(scene: Scene, style: StyleSuggestion | None,
                  color: ColorSuggestion | None) -> str:
    if style is not None and color is not None:
        return build_image_prompt(style, color, scene.image_description)
    return plain_image_prompt(scene.image_description)


def generate_scene_images(script: Script, style: StyleSuggestion | None,
                          color: ColorSuggestion | None,
                          providers: ProviderSet, *,
                          base_seed: int = 0,
                          width: int = IMAGE_WIDTH,
                          height: int = IMAGE_HEIGHT,
                          restyle_strength: float = RESTYLE_STRENGTH) -> Script:
    """Attach a four-candidate image set to every scene.

    Upload-bound scenes get their upload restyled as the primary candidate
    plus three fresh generations; every other scene gets four generations.
    A provider failure is recorded on its scene; other scenes proceed.
    Passing style/color as None produces the style-free baseline prompts.
    """
    uploads: dict[str, Upload] = {}
    if script.brief is not None:
        uploads = {up.id: up for up in script.brief.uploads}
    scenes = []
    for scene in script.scenes:
        try:
            scenes.append(_image_one_scene(
                scene, style, color, providers, uploads,
                seed=scene_seed(base_seed, scene.index),
                width=width, height=height, strength=restyle_strength))
        except (ProviderError, ValueError) as exc:
            log.warning("image generation failed for scene %d: %s", scene.index, exc)
            scenes.append(replace(scene, images=None, image_error=str(exc)))
    return replace(script, scenes=tuple(scenes))


def _image_one_scene(scene: Scene, style, color, providers, uploads,
                     *, seed: int, width: int, height: int,
                     strength: float) -> Scene:
    prompt = _scene_prompt(scene, style, color)
    if scene.upload_bound:
        upload = uploads.get(scene.upload_bound)
        if upload is None:
            raise ValueError(f"scene {scene.index} bound to unknown upload "
                             f"{scene.upload_bound!r}")
        primary = providers.image.restyle_image(ImageEditRequest(
            source_image=upload.image, style_prompt=prompt,
            strength=strength, seed=seed))
        alternates = providers.image.generate_images(ImageRequest(
            prompt=prompt, width=width, height=height, count=3, seed=seed))
        image_set = ImageSet(primary=primary, alternates=tuple(alternates),
                             prompt_used=prompt, restyled=True)
    else:
        images = providers.image.generate_images(ImageRequest(
            prompt=prompt, width=width, height=height, count=4, seed=seed))
        image_set = ImageSet(primary=images[0], alternates=tuple(images[1:]),
                             prompt_used=prompt, restyled=False)
    return replace(scene, images=image_set, image_error=None)
