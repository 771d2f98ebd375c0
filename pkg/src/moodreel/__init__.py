"""Mood-consistent advocacy video pipeline.

A campaign brief (audience, problem, call to action, target mood) goes
through three stages: script generation with per-scene positivity scoring,
styled image candidates, and feature-matched music. A file-backed service
exposes the same flow over HTTP for interactive editing.
"""

from .moodcore import (
    MatchKind,
    MoodPalette,
    MoodSpec,
    PositivityScore,
    SentimentLexicon,
    UnknownMoodError,
    average_positivity,
    best_match,
    classify_match,
    default_lexicon,
    default_palette,
    dice_similarity,
    load_lexicon,
    load_palette,
    positivity_score,
    tokenize,
)
from .pipeline import (
    CampaignBrief,
    RunResult,
    Scene,
    Script,
    Upload,
    VideoManifest,
    run_campaign,
)
from .providers import ProviderSet, SongEntry, mock_provider_set, provider_set_from_env

__version__ = "0.1.0"

__all__ = [
    "CampaignBrief",
    "MatchKind",
    "MoodPalette",
    "MoodSpec",
    "PositivityScore",
    "ProviderSet",
    "RunResult",
    "Scene",
    "Script",
    "SentimentLexicon",
    "SongEntry",
    "UnknownMoodError",
    "Upload",
    "VideoManifest",
    "average_positivity",
    "best_match",
    "classify_match",
    "default_lexicon",
    "default_palette",
    "dice_similarity",
    "load_lexicon",
    "load_palette",
    "mock_provider_set",
    "positivity_score",
    "provider_set_from_env",
    "run_campaign",
    "tokenize",
]
