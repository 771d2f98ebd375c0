"""Stage 3: song recommendation by valence/energy proximity and by
popularity.
"""

from __future__ import annotations

import heapq
from typing import MutableMapping, Sequence

from ..moodcore import MoodPalette
from ..providers import ProviderSet, SongEntry
from .visuals import recommend_colors


def recommend_songs(catalog: Sequence[SongEntry], avg_positivity: float,
                    mood_energy: float, k: int) -> list[SongEntry]:
    """The k songs nearest the target point in the valence-energy square.

    The target valence is the average scene positivity rescaled to [0, 1];
    distance is Euclidean with both axes unweighted. Ties break by ascending
    song id.
    """
    if not catalog:
        raise ValueError("song catalog is empty")
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 <= avg_positivity <= 100:
        raise ValueError(f"average positivity {avg_positivity} out of [0, 100]")
    if not 0 <= mood_energy <= 1:
        raise ValueError(f"mood energy {mood_energy} out of [0, 1]")
    tv, te = avg_positivity / 100.0, mood_energy

    def rank(song: SongEntry):
        dv, de = song.valence - tv, song.energy - te
        return (dv * dv + de * de, song.id)

    return heapq.nsmallest(min(k, len(catalog)), catalog, key=rank)


def rank_by_popularity(catalog: Sequence[SongEntry]) -> list[SongEntry]:
    """Catalog sorted highest popularity first, ties by ascending id."""
    return sorted(catalog, key=lambda s: (-s.popularity, s.id))


def mood_energy(mood: str, palette: MoodPalette, providers: ProviderSet,
                cache: MutableMapping[str, float] | None = None) -> float:
    """The mood's music-energy target in [0, 1].

    Palette moods carry their configured default; free-text moods cost one
    text-provider round-trip (the 0-100 color-prompt rank, rescaled), cached
    per project.
    """
    if not mood.strip():
        raise ValueError("mood must be non-empty")
    if mood in palette:
        return palette.get(mood).default_energy
    if cache is not None and mood in cache:
        return cache[mood]
    energy = recommend_colors(mood, providers).energy_score / 100.0
    if cache is not None:
        cache[mood] = energy
    return energy
