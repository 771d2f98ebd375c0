"""Uniform interface to the generative services and the song catalog.

Configuration comes from environment variables (``TEXTGEN_ENDPOINT``,
``TEXTGEN_API_KEY``, ``IMAGEGEN_ENDPOINT``, ``IMAGEGEN_API_KEY``,
``VISION_ENDPOINT``, ``VISION_API_KEY``). When none are set, every provider
runs in deterministic mock mode.
"""

from __future__ import annotations

import os

from .base import (
    DescriptionRequest,
    ImageDecodeError,
    ImageEditRequest,
    ImageRef,
    ImageRequest,
    MockFixtureMissingError,
    ProviderError,
    ProviderRateLimitError,
    ProviderResponseError,
    ProviderSet,
    ProviderTimeoutError,
    SongEntry,
    TextProvider,
    TextRequest,
    VisionProvider,
    prompt_key,
    with_retries,
)
from .catalog import CatalogError, load_song_catalog, sample_catalog_path
from .live import LiveImageProvider, LiveTextProvider, LiveVisionProvider
from .mock import (
    MockImageProvider,
    MockTextProvider,
    MockVisionProvider,
    mock_provider_set,
)

_ENV_VARS = ("TEXTGEN_ENDPOINT", "TEXTGEN_API_KEY", "IMAGEGEN_ENDPOINT",
             "IMAGEGEN_API_KEY", "VISION_ENDPOINT", "VISION_API_KEY")


def provider_set_from_env(env: dict | None = None) -> ProviderSet:
    """Build providers from the environment; all-absent means mock mode.

    Each service goes live independently when its endpoint is configured, so
    a partly configured environment mixes live and mock providers.
    """
    env = os.environ if env is None else env
    text_ep = env.get("TEXTGEN_ENDPOINT")
    image_ep = env.get("IMAGEGEN_ENDPOINT")
    vision_ep = env.get("VISION_ENDPOINT")
    return ProviderSet(
        text=(LiveTextProvider(text_ep, env.get("TEXTGEN_API_KEY", ""))
              if text_ep else MockTextProvider()),
        image=(LiveImageProvider(image_ep, env.get("IMAGEGEN_API_KEY", ""))
               if image_ep else MockImageProvider()),
        vision=(LiveVisionProvider(vision_ep, env.get("VISION_API_KEY", ""))
                if vision_ep else MockVisionProvider()),
    )


__all__ = [
    "CatalogError",
    "DescriptionRequest",
    "ImageDecodeError",
    "ImageEditRequest",
    "ImageRef",
    "ImageRequest",
    "LiveImageProvider",
    "LiveTextProvider",
    "LiveVisionProvider",
    "MockFixtureMissingError",
    "MockImageProvider",
    "MockTextProvider",
    "MockVisionProvider",
    "ProviderError",
    "ProviderRateLimitError",
    "ProviderResponseError",
    "ProviderSet",
    "ProviderTimeoutError",
    "SongEntry",
    "TextProvider",
    "TextRequest",
    "VisionProvider",
    "load_song_catalog",
    "mock_provider_set",
    "prompt_key",
    "provider_set_from_env",
    "sample_catalog_path",
    "with_retries",
]
