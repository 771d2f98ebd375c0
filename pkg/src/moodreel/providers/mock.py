"""Deterministic offline providers.

Every mock is a pure function of (request, seed): identical requests yield
byte-identical outputs, which is what makes the whole pipeline replayable in
CI. The text mock first consults an explicit fixture table keyed by a stable
prompt hash; failing that, it recognizes the four prompt families the
pipeline emits and synthesizes a well-formed completion from the prompt hash.
Anything else is a missing fixture.
"""

from __future__ import annotations

import hashlib
import io
import random
import re
from dataclasses import dataclass, field
from typing import Mapping

from PIL import Image, UnidentifiedImageError

from .base import (
    DescriptionRequest,
    ImageDecodeError,
    ImageEditRequest,
    ImageRef,
    ImageRequest,
    MockFixtureMissingError,
    TextRequest,
    prompt_key,
)

# Cheap tone table so synthesized scripts respond to the requested mood the
# way a real model would. Mock-only; the engine never consults it.
_POSITIVE_MOODS = {"calm", "contented", "delighted", "excited", "happy",
                   "hopeful", "peaceful", "tranquil", "joyful", "uplifting"}
_NEGATIVE_MOODS = {"angry", "frustrated", "depressed", "tired", "sad",
                   "fearful", "desperate", "gloomy", "anxious"}

_POSITIVE_WORDS = ["hope", "thriving", "wonderful", "care", "brighter",
                   "love", "safe", "better", "kindness", "joy"]
_NEGATIVE_WORDS = ["threat", "loss", "danger", "tragic", "harm",
                   "crisis", "alarming", "damage", "struggling", "grim"]
_NEUTRAL_WORDS = ["daily", "nearby", "local", "routine", "common",
                  "ordinary", "steady", "quiet", "simple", "plain"]

_GOALS = ["Introduction", "Showing stakes", "Building empathy",
          "Fostering connection", "Offering solution", "Inspiring action",
          "Imagining tomorrow", "Call to action"]

_SUBJECTS = ["a city street at dusk", "a small crowd gathering", "hands holding a sign",
             "a quiet neighborhood corner", "a close-up of concerned faces",
             "a sweeping view of the skyline", "a community notice board",
             "a person pausing mid-step", "children watching from a window",
             "volunteers working together"]

_STYLE_ENTRIES = [
    ("Uplifting", "Minimalist Scandinavian Design",
     "clean lines and natural elements create a positive, cozy sense of wellness"),
    ("Exciting", "Action Comic Book Illustration",
     "bold sharp lines and vivid effects display dynamic, action-packed scenes"),
    ("Serene", "Chinese Watercolor Painting",
     "flowing washes and soft gradients evoke stillness and gentle reflection"),
    ("Somber", "German Expressionist Woodcut",
     "stark angular shapes and heavy shadow carry tension and unease"),
    ("Playful", "Mid-century Children's Storybook",
     "rounded friendly forms and flat cheerful colors feel warm and inviting"),
    ("Nostalgic", "Faded Polaroid Photography",
     "soft focus and warm film grain recall treasured everyday memories"),
    ("Bold", "Swiss Poster Design",
     "strong grids and decisive typography project confidence and urgency"),
    ("Dreamy", "Impressionist Oil Painting",
     "loose luminous brushwork softens edges into a hazy, wistful glow"),
    ("Gritty", "Urban Charcoal Sketch",
     "rough smudged strokes give scenes a raw, unpolished weight"),
    ("Hopeful", "Sunrise Flat Illustration",
     "simple shapes under warming light suggest an optimistic new start"),
]

# Energy guesses for mood words the color-prompt mock may be asked about.
_MOOD_ENERGY = {"calm": 10, "tranquil": 12, "peaceful": 8, "depressed": 15,
                "tired": 20, "sad": 25, "contented": 40, "frustrated": 60,
                "hopeful": 65, "desperate": 70, "happy": 75, "delighted": 80,
                "angry": 85, "energetic": 88, "excited": 90}

_SCRIPT_RE = re.compile(
    r"informing (?P<audience>.+?) about the problem that (?P<problem>.+?)\. "
    r"Additionally, I want to inform them that this problem can be addressed "
    r"when (?P<action>.+?)\. Please provide",
    re.DOTALL)
_SCRIPT_MOOD_RE = re.compile(r"key emotional beats that are (?P<mood>.+?)\. The video")
_REGEN_RE = re.compile(
    r"achieves the goal of (?P<goal>.+?)\?", re.DOTALL)
_REGEN_MOOD_RE = re.compile(r"It should generally have a (?P<mood>.+?) mood\.")
_STYLE_RE = re.compile(r"describe a (?P<mood>.+?) mood that is also (?P<word>.+?)\?")
_COLOR_RE = re.compile(r"rank this mood: (?P<mood>.+?)\. Then,", re.DOTALL)


def _rng_for(prompt: str) -> random.Random:
    digest = hashlib.sha256(prompt.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _tone_words(mood: str | None, rng: random.Random) -> list[str]:
    if mood:
        mood_token = mood.strip().lower()
        if mood_token in _POSITIVE_MOODS:
            return _POSITIVE_WORDS
        if mood_token in _NEGATIVE_MOODS:
            return _NEGATIVE_WORDS
    return _NEUTRAL_WORDS


def _clip(text: str, words: int) -> str:
    return " ".join(text.split()[:words])


@dataclass
class MockTextProvider:
    """Fixture-backed text completion with template-aware synthesis."""

    fixtures: Mapping[str, str] = field(default_factory=dict)

    def generate_text(self, req: TextRequest) -> str:
        key = prompt_key(req.prompt)
        if req.prompt in self.fixtures:
            return self.fixtures[req.prompt]
        if key in self.fixtures:
            return self.fixtures[key]
        for matcher, synth in ((_SCRIPT_RE, self._script), (_REGEN_RE, self._regen),
                               (_STYLE_RE, self._styles), (_COLOR_RE, self._color)):
            m = matcher.search(req.prompt)
            if m:
                return synth(req.prompt, m)
        raise MockFixtureMissingError(f"no fixture for prompt hash {key}")

    def _script(self, prompt: str, m: re.Match) -> str:
        rng = _rng_for(prompt)
        audience = _clip(m.group("audience"), 8)
        problem = _clip(m.group("problem"), 10)
        action = _clip(m.group("action"), 10)
        mood_m = _SCRIPT_MOOD_RE.search(prompt)
        tone = _tone_words(mood_m.group("mood") if mood_m else None, rng)
        n_scenes = 4 + rng.randrange(3)
        goals = _GOALS[:1] + rng.sample(_GOALS[1:-1], n_scenes - 2) + _GOALS[-1:]
        sections = []
        for i in range(n_scenes):
            subject = rng.choice(_SUBJECTS)
            w1, w2 = rng.choice(tone), rng.choice(tone)
            if i == 0:
                text = f"{audience.capitalize()}, this is {w1}: {problem}."
            elif i == n_scenes - 1:
                text = f"It gets {w1} when {action}."
            else:
                text = f"A {w1} truth, {w2} for everyone nearby."
            visual = f"{subject}, {w2} in feeling"
            duration = 3 + rng.randrange(4)
            sections.append(
                f"***VISUAL DESCRIPTION: {visual} TEXT: {text} "
                f"DURATION: {duration} seconds EMOTIONAL GOAL: {goals[i]}")
        return "\n".join(sections)

    def _regen(self, prompt: str, m: re.Match) -> str:
        rng = _rng_for(prompt)
        goal = _clip(m.group("goal"), 6)
        mood_m = _REGEN_MOOD_RE.search(prompt)
        tone = _tone_words(mood_m.group("mood") if mood_m else None, rng)
        w1, w2 = rng.choice(tone), rng.choice(tone)
        subject = rng.choice(_SUBJECTS)
        return (f"***TEXT: Toward {goal}, something {w1} and {w2}. "
                f"IMAGE DESCRIPTION: {subject}")

    def _styles(self, prompt: str, m: re.Match) -> str:
        rng = _rng_for(prompt)
        picks = rng.sample(_STYLE_ENTRIES, 3)
        return "\n".join(f"* {word}: {style} | {expl}" for word, style, expl in picks)

    def _color(self, prompt: str, m: re.Match) -> str:
        rng = _rng_for(prompt)
        mood = m.group("mood").strip().lower()
        score = _MOOD_ENERGY.get(mood, rng.randrange(101))
        if score < 20:
            desc = "very muted colors"
        elif score < 40:
            desc = "soft, soothing colors"
        elif score < 60:
            desc = "balanced natural tones"
        elif score < 80:
            desc = "warm vivid colors"
        else:
            desc = "very vibrant and saturated colors"
        return f"SCORE: {score} COLOR DESCRIPTION: {desc}"


def _hash_color(key: str) -> tuple[int, int, int]:
    d = hashlib.sha256(key.encode("utf-8")).digest()
    return d[0], d[1], d[2]


def _encode_png(img: Image.Image) -> bytes:
    buf = io.BytesIO()
    img.save(buf, format="PNG")
    return buf.getvalue()


def _decode(ref: ImageRef) -> Image.Image:
    try:
        img = Image.open(io.BytesIO(ref.data))
        img.load()
        return img.convert("RGB")
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        raise ImageDecodeError(f"cannot decode image: {exc}") from exc


class MockImageProvider:
    """Placeholder image synthesis encoding (seed, prompt hash) in pixels."""

    def generate_images(self, req: ImageRequest) -> list[ImageRef]:
        refs = []
        for i in range(req.count):
            key = f"{prompt_key(req.prompt)}|{req.seed}|{i}"
            base = _hash_color(key)
            img = Image.new("RGB", (req.width, req.height), base)
            # horizontal bands derived from the same key keep candidates
            # visually distinct at a glance
            band_h = max(1, req.height // 4)
            for b in range(4):
                shade = _hash_color(f"{key}|band{b}")
                img.paste(shade, (0, b * band_h, req.width // 8, (b + 1) * band_h))
            self._stamp(img, key)
            refs.append(ImageRef(_encode_png(img)))
        return refs

    def restyle_image(self, req: ImageEditRequest) -> ImageRef:
        src = _decode(req.source_image)
        if req.strength == 0.0:
            return req.source_image
        key = f"{prompt_key(req.style_prompt)}|{req.seed}"
        overlay = Image.new("RGB", src.size, _hash_color(key))
        out = Image.blend(src, overlay, req.strength)
        self._stamp(out, key)
        return ImageRef(_encode_png(out))

    @staticmethod
    def _stamp(img: Image.Image, key: str) -> None:
        # first-row pixels carry the request digest so tests can tell
        # outputs apart byte-wise
        digest = hashlib.sha256(key.encode("utf-8")).digest()
        px = img.load()
        for x in range(min(img.width, 32)):
            px[x, 0] = (digest[x % 32], digest[(x + 7) % 32], digest[(x + 13) % 32])


_CAPTION_ADJ = ["quiet", "busy", "sunlit", "cluttered", "open", "narrow",
                "colorful", "weathered", "modern", "familiar"]
_CAPTION_NOUN = ["street scene", "animal at rest", "group of people", "building facade",
                 "patch of greenery", "waterfront view", "everyday object",
                 "room interior", "crowded market", "stretch of road"]


@dataclass
class MockVisionProvider:
    """Caption fixtures keyed by image content hash, with a synthesized default."""

    fixtures: Mapping[str, str] = field(default_factory=dict)

    def describe_image(self, req: DescriptionRequest) -> str:
        _decode(req.image)  # corrupt uploads fail here, same as live
        sha = req.image.sha
        if sha in self.fixtures:
            return self.fixtures[sha]
        rng = random.Random(int(sha, 16))
        return f"a {rng.choice(_CAPTION_ADJ)} {rng.choice(_CAPTION_NOUN)}"


def mock_provider_set(text_fixtures: Mapping[str, str] | None = None,
                      vision_fixtures: Mapping[str, str] | None = None):
    from .base import ProviderSet

    return ProviderSet(
        text=MockTextProvider(text_fixtures or {}),
        image=MockImageProvider(),
        vision=MockVisionProvider(vision_fixtures or {}),
    )
