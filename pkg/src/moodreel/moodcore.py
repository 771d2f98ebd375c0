"""Mood math: the circumplex palette, lexicon positivity scoring, and
bigram string similarity.

Everything in this module is a pure function over immutable inputs, so it is
safe to call from any number of concurrent tasks.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

UNCLEAR_LABEL = "unclear"

VALENCE_CLASSES = ("negative", "neutral", "positive")
AROUSAL_CLASSES = ("low", "neutral", "high")

_TOKEN_RE = re.compile(r"[^0-9a-z]+")
_WHITESPACE_RE = re.compile(r"\s+")


class LexiconError(ValueError):
    """Raised when a sentiment lexicon file or entry is invalid."""


class PaletteError(ValueError):
    """Raised when a mood palette is malformed."""


class UnknownMoodError(KeyError):
    """Raised when a mood label is neither a palette name nor "unclear"."""


class MatchKind(enum.Enum):
    """Outcome of comparing an observed mood label against a target mood.

    Classification is total: every (target, observed) pair maps to exactly
    one kind, with precedence Exact > ValenceMatch > ArousalMatch > NoMatch
    and "unclear" short-circuiting to Unclear.
    """

    EXACT = "exact"
    VALENCE_MATCH = "valence_match"
    AROUSAL_MATCH = "arousal_match"
    NO_MATCH = "no_match"
    UNCLEAR = "unclear"


@dataclass(frozen=True)
class MoodSpec:
    """A named mood positioned on the valence-arousal plane.

    ``default_energy`` is the mood's music-energy target in [0, 1], used when
    no model round-trip is available for the mood word.
    """

    name: str
    valence_class: str
    arousal_class: str
    default_energy: float

    def __post_init__(self) -> None:
        if not self.name:
            raise PaletteError("mood name must be non-empty")
        if self.valence_class not in VALENCE_CLASSES:
            raise PaletteError(f"bad valence class {self.valence_class!r} for {self.name!r}")
        if self.arousal_class not in AROUSAL_CLASSES:
            raise PaletteError(f"bad arousal class {self.arousal_class!r} for {self.name!r}")
        if not 0.0 <= self.default_energy <= 1.0:
            raise PaletteError(f"default_energy {self.default_energy} out of [0,1] for {self.name!r}")


@dataclass(frozen=True)
class MoodPalette:
    """Ordered collection of moods available to a campaign."""

    moods: tuple[MoodSpec, ...]
    unclear_label: str = UNCLEAR_LABEL

    def __post_init__(self) -> None:
        names = [m.name for m in self.moods]
        if len(set(names)) != len(names):
            raise PaletteError("duplicate mood names in palette")
        if self.unclear_label in names:
            raise PaletteError(f"{self.unclear_label!r} is reserved and cannot name a mood")

    def names(self) -> list[str]:
        return [m.name for m in self.moods]

    def __contains__(self, name: str) -> bool:
        return any(m.name == name for m in self.moods)

    def get(self, name: str) -> MoodSpec:
        for m in self.moods:
            if m.name == name:
                return m
        raise UnknownMoodError(name)


@dataclass(frozen=True)
class PositivityScore:
    """Scene positivity on the 0 (most negative) to 100 (most positive) scale."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise ValueError(f"positivity must be an integer, got {self.value!r}")
        if not 0 <= self.value <= 100:
            raise ValueError(f"positivity {self.value} out of [0, 100]")


@dataclass(frozen=True)
class SentimentLexicon:
    """Token -> integer valence map, valences in [-5, 5], tokens lowercase."""

    entries: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for token, valence in self.entries.items():
            if not token or token != token.lower() or any(c.isspace() for c in token):
                raise LexiconError(f"bad lexicon token {token!r}")
            if not -5 <= valence <= 5:
                raise LexiconError(f"valence {valence} out of [-5, 5] for {token!r}")

    def __len__(self) -> int:
        return len(self.entries)


def tokenize(text: str) -> list[str]:
    """Lowercase and split on runs of non-alphanumeric characters."""
    return [t for t in _TOKEN_RE.split(text.lower()) if t]


def positivity_score(text: str, image_description: str,
                     lexicon: SentimentLexicon) -> PositivityScore:
    """Score the combined sentiment of scene text and image description.

    The comparative sentiment (summed lexicon valence over token count) is
    mapped linearly onto [0, 100]: 50 is neutral and each comparative point
    moves the score by 10, saturating at the lexicon extremes. Empty input
    scores the neutral midpoint 50.
    """
    if not lexicon.entries:
        raise LexiconError("lexicon must be non-empty")
    tokens = tokenize(text) + tokenize(image_description)
    raw = sum(lexicon.entries.get(tok, 0) for tok in tokens)
    comparative = raw / max(1, len(tokens))
    value = int(min(100, max(0, _round_half_up(50 + 10 * comparative))))
    return PositivityScore(value)


def _round_half_up(x: float) -> int:
    import math

    return math.floor(x + 0.5)


def _bigrams(s: str) -> list[str]:
    return [s[i:i + 2] for i in range(len(s) - 1)]


def dice_similarity(a: str, b: str) -> float:
    """Sorensen-Dice coefficient over character-bigram multisets.

    Both strings are case-folded and stripped of whitespace first. Strings
    shorter than two characters after normalization cannot form a bigram;
    they compare 1.0 when equal and 0.0 otherwise.
    """
    na = _WHITESPACE_RE.sub("", a.casefold())
    nb = _WHITESPACE_RE.sub("", b.casefold())
    if len(na) < 2 or len(nb) < 2:
        return 1.0 if na == nb else 0.0
    from collections import Counter

    ca, cb = Counter(_bigrams(na)), Counter(_bigrams(nb))
    overlap = sum((ca & cb).values())
    return 2.0 * overlap / (len(na) - 1 + len(nb) - 1)


def best_match(query: str, candidates: Sequence[str]) -> tuple[int, float]:
    """Index and score of the candidate most bigram-similar to ``query``.

    Ties break toward the lowest index.
    """
    if not candidates:
        raise ValueError("no candidates to match against")
    best_idx, best_score = 0, -1.0
    for i, cand in enumerate(candidates):
        score = dice_similarity(query, cand)
        if score > best_score:
            best_idx, best_score = i, score
    return best_idx, best_score


def classify_match(target: MoodSpec, observed_label: str,
                   palette: MoodPalette) -> MatchKind:
    """Classify an observed mood label against the target mood.

    Precedence: unclear, then exact name, then shared valence class, then
    shared arousal class, then no match.
    """
    if observed_label == palette.unclear_label:
        return MatchKind.UNCLEAR
    if observed_label not in palette:
        raise UnknownMoodError(observed_label)
    observed = palette.get(observed_label)
    if observed.name == target.name:
        return MatchKind.EXACT
    if observed.valence_class == target.valence_class:
        return MatchKind.VALENCE_MATCH
    if observed.arousal_class == target.arousal_class:
        return MatchKind.AROUSAL_MATCH
    return MatchKind.NO_MATCH


def average_positivity(scores: Iterable[PositivityScore]) -> float:
    """Arithmetic mean of positivity scores, in [0, 100]."""
    values = [s.value for s in scores]
    if not values:
        raise ValueError("cannot average an empty list of scores")
    return sum(values) / len(values)


def load_lexicon(path: str | Path) -> SentimentLexicon:
    """Load a two-column UTF-8 TSV lexicon (token<TAB>integer valence)."""
    entries: dict[str, int] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconError(f"{path}:{lineno}: expected token<TAB>valence")
            token, raw = parts
            try:
                valence = int(raw)
            except ValueError:
                raise LexiconError(f"{path}:{lineno}: valence {raw!r} is not an integer") from None
            entries[token] = valence
    return SentimentLexicon(entries)


def load_palette(path: str | Path) -> MoodPalette:
    """Load a palette JSON file: an array of mood objects."""
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    return palette_from_records(data)


def palette_from_records(records: Sequence[Mapping]) -> MoodPalette:
    moods = []
    for rec in records:
        try:
            moods.append(MoodSpec(
                name=rec["name"],
                valence_class=rec["valence_class"],
                arousal_class=rec["arousal_class"],
                default_energy=float(rec["default_energy"]),
            ))
        except KeyError as exc:
            raise PaletteError(f"palette record missing field {exc}") from None
    return MoodPalette(tuple(moods))


def default_lexicon() -> SentimentLexicon:
    """The bundled AFINN-165 word list (single-token entries)."""
    ref = resources.files("moodreel").joinpath("data/afinn-165.tsv")
    with resources.as_file(ref) as path:
        return load_lexicon(path)


def default_palette() -> MoodPalette:
    """The bundled eight-mood palette spanning the valence-arousal plane."""
    ref = resources.files("moodreel").joinpath("data/default_palette.json")
    with resources.as_file(ref) as path:
        return load_palette(path)
