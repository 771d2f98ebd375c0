"""Request/response types, typed errors, and retry policy shared by all
generative-service providers.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Protocol, Sequence


class ProviderError(Exception):
    """Base class for anything a provider call can raise."""


class ProviderTimeoutError(ProviderError):
    """Upstream did not answer within the deadline (after retries)."""


class ProviderRateLimitError(ProviderError):
    """Upstream refused the call due to rate limiting (after retries)."""


class ProviderResponseError(ProviderError):
    """Upstream answered with something we cannot use."""


class MockFixtureMissingError(ProviderError):
    """A mock provider has no fixture for the request."""


class ImageDecodeError(ProviderError):
    """The supplied image bytes are not a decodable image."""


@dataclass(frozen=True)
class ImageRef:
    """A reference to one generated or uploaded image (encoded bytes)."""

    data: bytes
    format: str = "png"

    @property
    def sha(self) -> str:
        return hashlib.sha256(self.data).hexdigest()[:16]

    def __repr__(self) -> str:  # keep byte blobs out of logs
        return f"ImageRef(sha={self.sha}, format={self.format}, {len(self.data)} bytes)"


@dataclass(frozen=True)
class TextRequest:
    prompt: str
    max_length: int = 1024
    temperature: float = 0.7

    def __post_init__(self) -> None:
        if not self.prompt:
            raise ValueError("prompt must be non-empty")
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")


@dataclass(frozen=True)
class ImageRequest:
    prompt: str
    width: int
    height: int
    count: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("image dimensions must be positive")
        if not 1 <= self.count <= 8:
            raise ValueError(f"count {self.count} out of [1, 8]")


@dataclass(frozen=True)
class ImageEditRequest:
    source_image: ImageRef
    style_prompt: str
    strength: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.strength <= 1.0:
            raise ValueError(f"strength {self.strength} out of [0, 1]")


@dataclass(frozen=True)
class DescriptionRequest:
    image: ImageRef

    def __post_init__(self) -> None:
        if not self.image.data:
            raise ValueError("image must be non-empty")


@dataclass(frozen=True)
class SongEntry:
    """One catalog song with the audio features used for matching."""

    id: str
    title: str
    valence: float
    energy: float
    popularity: float

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("song id must be non-empty")
        if not 0.0 <= self.valence <= 1.0:
            raise ValueError(f"valence {self.valence} out of [0, 1]")
        if not 0.0 <= self.energy <= 1.0:
            raise ValueError(f"energy {self.energy} out of [0, 1]")
        if not 0.0 <= self.popularity <= 100.0:
            raise ValueError(f"popularity {self.popularity} out of [0, 100]")


class TextProvider(Protocol):
    def generate_text(self, req: TextRequest) -> str: ...


class ImageProvider(Protocol):
    def generate_images(self, req: ImageRequest) -> list[ImageRef]: ...

    def restyle_image(self, req: ImageEditRequest) -> ImageRef: ...


class VisionProvider(Protocol):
    def describe_image(self, req: DescriptionRequest) -> str: ...


@dataclass
class ProviderSet:
    """The three generative services the pipeline talks to."""

    text: TextProvider
    image: ImageProvider
    vision: VisionProvider


def prompt_key(prompt: str) -> str:
    """Stable hash used to key mock fixtures and derive mock randomness."""
    return hashlib.sha256(prompt.encode("utf-8")).hexdigest()[:16]


#: (attempts, base delay) for transient upstream failures.
RETRY_ATTEMPTS = 3
RETRY_BASE_DELAY = 0.5

_TRANSIENT = (ProviderTimeoutError, ProviderRateLimitError)


def with_retries(call: Callable[[], object], *, attempts: int = RETRY_ATTEMPTS,
                 base_delay: float = RETRY_BASE_DELAY,
                 sleep: Callable[[float], None] = time.sleep,
                 rng: random.Random | None = None):
    """Run ``call``, retrying transient errors with exponential backoff.

    Backoff is base_delay * 2^n plus up to 25% jitter. The final failure is
    re-raised as its typed error; non-transient errors surface immediately.
    """
    rng = rng or random
    last: ProviderError | None = None
    for attempt in range(attempts):
        try:
            return call()
        except _TRANSIENT as exc:
            last = exc
            if attempt + 1 < attempts:
                delay = base_delay * (2 ** attempt)
                sleep(delay * (1.0 + 0.25 * rng.random()))
    assert last is not None
    raise last
