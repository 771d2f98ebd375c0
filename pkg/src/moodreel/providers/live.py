"""HTTP-backed providers.

Each provider speaks a minimal JSON contract to a configured endpoint and
maps transport failures onto the typed provider errors. Transient failures
(timeouts, rate limits) are retried up to three times with exponential
backoff before surfacing; malformed responses surface immediately.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass
from typing import Any

import requests

from .base import (
    DescriptionRequest,
    ImageEditRequest,
    ImageRef,
    ImageRequest,
    ProviderRateLimitError,
    ProviderResponseError,
    ProviderTimeoutError,
    TextRequest,
    with_retries,
)

DEFAULT_TIMEOUT_S = 30.0


def _post_json(session, url: str, api_key: str, payload: dict,
               timeout: float) -> dict:
    try:
        resp = session.post(
            url,
            json=payload,
            headers={"Authorization": f"Bearer {api_key}"},
            timeout=timeout,
        )
    except requests.Timeout as exc:
        raise ProviderTimeoutError(f"timeout calling {url}") from exc
    except requests.RequestException as exc:
        raise ProviderResponseError(f"transport failure calling {url}: {exc}") from exc
    if resp.status_code == 429:
        raise ProviderRateLimitError(f"rate limited by {url}")
    if resp.status_code >= 400:
        raise ProviderResponseError(f"{url} answered HTTP {resp.status_code}")
    try:
        body = resp.json()
    except ValueError as exc:
        raise ProviderResponseError(f"{url} answered non-JSON body") from exc
    if not isinstance(body, dict):
        raise ProviderResponseError(f"{url} answered non-object JSON")
    return body


def _field(body: dict, key: str, kind: type, url: str) -> Any:
    value = body.get(key)
    if not isinstance(value, kind):
        raise ProviderResponseError(f"{url} response missing {key!r}")
    return value


@dataclass
class LiveTextProvider:
    endpoint: str
    api_key: str
    timeout: float = DEFAULT_TIMEOUT_S
    session: Any = None

    def __post_init__(self) -> None:
        self.session = self.session or requests.Session()

    def generate_text(self, req: TextRequest) -> str:
        payload = {"prompt": req.prompt, "max_length": req.max_length,
                   "temperature": req.temperature}

        def call() -> str:
            body = _post_json(self.session, self.endpoint, self.api_key,
                              payload, self.timeout)
            return _field(body, "text", str, self.endpoint)

        return with_retries(call)


def _decode_b64_image(encoded: str, url: str) -> ImageRef:
    try:
        return ImageRef(base64.b64decode(encoded, validate=True))
    except (ValueError, TypeError) as exc:
        raise ProviderResponseError(f"{url} returned undecodable image data") from exc


@dataclass
class LiveImageProvider:
    endpoint: str
    api_key: str
    timeout: float = DEFAULT_TIMEOUT_S
    session: Any = None

    def __post_init__(self) -> None:
        self.session = self.session or requests.Session()

    def generate_images(self, req: ImageRequest) -> list[ImageRef]:
        payload = {"prompt": req.prompt, "width": req.width, "height": req.height,
                   "count": req.count, "seed": req.seed}

        def call() -> list[ImageRef]:
            body = _post_json(self.session, self.endpoint, self.api_key,
                              payload, self.timeout)
            images = _field(body, "images", list, self.endpoint)
            if len(images) != req.count:
                raise ProviderResponseError(
                    f"{self.endpoint} returned {len(images)} images, wanted {req.count}")
            return [_decode_b64_image(i, self.endpoint) for i in images]

        return with_retries(call)

    def restyle_image(self, req: ImageEditRequest) -> ImageRef:
        payload = {
            "image": base64.b64encode(req.source_image.data).decode("ascii"),
            "style_prompt": req.style_prompt,
            "strength": req.strength,
            "seed": req.seed,
        }

        def call() -> ImageRef:
            body = _post_json(self.session, self.endpoint, self.api_key,
                              payload, self.timeout)
            return _decode_b64_image(_field(body, "image", str, self.endpoint),
                                     self.endpoint)

        return with_retries(call)


@dataclass
class LiveVisionProvider:
    endpoint: str
    api_key: str
    timeout: float = DEFAULT_TIMEOUT_S
    session: Any = None

    def __post_init__(self) -> None:
        self.session = self.session or requests.Session()

    def describe_image(self, req: DescriptionRequest) -> str:
        payload = {"image": base64.b64encode(req.image.data).decode("ascii")}

        def call() -> str:
            body = _post_json(self.session, self.endpoint, self.api_key,
                              payload, self.timeout)
            return _field(body, "description", str, self.endpoint)

        return with_retries(call)
