"""Domain types for the three campaign stages.

Everything is an immutable dataclass; stages return updated copies via
``dataclasses.replace`` so a single project's state can only advance through
the service layer's serialized commits.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence, Union

from ..moodcore import PositivityScore
from ..providers import ImageRef

ASPECT_RATIO = "19.5:9"
#: 19.5:9 at diffusion-friendly multiples of 64.
IMAGE_WIDTH = 832
IMAGE_HEIGHT = 384
#: Soft cap on total runtime; beyond this the manifest carries a warning.
MAX_VIDEO_SECONDS = 45.0
DEFAULT_SCENE_SECONDS = 3.0

ImageRefLike = Union[ImageRef, str]


@dataclass(frozen=True)
class Upload:
    """A user-supplied image plus its (editable) content description."""

    id: str
    image: ImageRef
    description: str

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("upload id must be non-empty")


@dataclass(frozen=True)
class CampaignBrief:
    """The four advocacy inputs plus any uploaded imagery."""

    audience: str
    problem: str
    action: str
    mood: str
    uploads: tuple[Upload, ...] = ()

    def __post_init__(self) -> None:
        for name in ("audience", "problem", "action", "mood"):
            if not getattr(self, name).strip():
                raise ValueError(f"brief field {name!r} must be non-empty")
        for up in self.uploads:
            if not up.description.strip():
                raise ValueError(f"upload {up.id!r} needs a non-empty description")


@dataclass(frozen=True)
class ImageSet:
    """Four image candidates for one scene; the first is preselected."""

    primary: ImageRefLike
    alternates: tuple[ImageRefLike, ...]
    prompt_used: str
    restyled: bool = False

    def __post_init__(self) -> None:
        if len(self.alternates) != 3:
            raise ValueError(f"expected exactly 3 alternates, got {len(self.alternates)}")

    @property
    def candidates(self) -> tuple[ImageRefLike, ...]:
        return (self.primary, *self.alternates)


@dataclass(frozen=True)
class Scene:
    """One beat of the campaign video.

    ``duration_s`` may be None straight out of the parser; the playable
    contract (0, 45] is established by ``assign_durations`` and enforced at
    manifest composition.
    """

    index: int
    text: str
    image_description: str
    narrative_goal: str = ""
    positivity: PositivityScore = PositivityScore(50)
    duration_s: float | None = None
    upload_bound: str | None = None
    images: ImageSet | None = None
    image_error: str | None = None

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("scene index must be >= 0")


@dataclass(frozen=True)
class Script:
    """An ordered list of scenes plus the brief that produced them."""

    scenes: tuple[Scene, ...]
    brief: CampaignBrief | None = None
    with_mood: bool = True

    def __post_init__(self) -> None:
        if not self.scenes:
            raise ValueError("a script needs at least one scene")
        indices = [s.index for s in self.scenes]
        if indices != list(range(len(self.scenes))):
            raise ValueError(f"scene indices must be contiguous from 0, got {indices}")

    def with_scene(self, index: int, scene: Scene) -> "Script":
        if not 0 <= index < len(self.scenes):
            raise IndexError(f"scene index {index} out of range")
        scenes = list(self.scenes)
        scenes[index] = replace(scene, index=index)
        return replace(self, scenes=tuple(scenes))

    @property
    def total_duration_s(self) -> float | None:
        durations = [s.duration_s for s in self.scenes]
        if any(d is None for d in durations):
            return None
        return sum(durations)  # type: ignore[arg-type]


@dataclass(frozen=True)
class StyleSuggestion:
    """One art-style recommendation: mood word, style name, short rationale."""

    word: str
    style: str
    explanation: str

    def __post_init__(self) -> None:
        if not (self.word.strip() and self.style.strip() and self.explanation.strip()):
            raise ValueError("style suggestion fields must be non-empty")


@dataclass(frozen=True)
class ColorSuggestion:
    """Color-palette guidance: a 0-100 energy rank plus a short description."""

    energy_score: int
    color_description: str

    def __post_init__(self) -> None:
        if not 0 <= self.energy_score <= 100:
            raise ValueError(f"energy_score {self.energy_score} out of [0, 100]")
        if not self.color_description.strip():
            raise ValueError("color_description must be non-empty")


@dataclass(frozen=True)
class ManifestScene:
    image: str
    text: str
    duration_s: float
    positivity: int


@dataclass(frozen=True)
class VideoManifest:
    """The final deliverable: ordered timed scenes plus the selected song."""

    scenes: tuple[ManifestScene, ...]
    song_id: str
    total_duration_s: float
    aspect_ratio: str = ASPECT_RATIO
    over_length: bool = False

    def to_dict(self) -> dict:
        return {
            "scenes": [
                {"image": s.image, "text": s.text, "duration_s": s.duration_s,
                 "positivity": s.positivity}
                for s in self.scenes
            ],
            "song_id": self.song_id,
            "aspect_ratio": self.aspect_ratio,
            "total_duration_s": self.total_duration_s,
            "over_length": self.over_length,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "VideoManifest":
        return cls(
            scenes=tuple(
                ManifestScene(image=s["image"], text=s["text"],
                              duration_s=float(s["duration_s"]),
                              positivity=int(s["positivity"]))
                for s in data["scenes"]
            ),
            song_id=data["song_id"],
            total_duration_s=float(data["total_duration_s"]),
            aspect_ratio=data.get("aspect_ratio", ASPECT_RATIO),
            over_length=bool(data.get("over_length", False)),
        )


def canonical_scene(scene: Scene) -> tuple:
    """The representation the parser/serializer round-trip preserves."""
    return (scene.text, scene.image_description, scene.narrative_goal,
            scene.duration_s)
