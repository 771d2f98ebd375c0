"""Annotation scoring for mood-consistency studies.

Takes a CSV of human annotations (one row per annotator per video), computes
per-video mood-match accuracies, per-record cross-channel consistency, and a
two-condition comparison with a Welch t-test.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from scipy.stats import t as t_dist

from .moodcore import MatchKind, MoodPalette, UnknownMoodError, UNCLEAR_LABEL, classify_match

REQUIRED_COLUMNS = (
    "video_id",
    "condition",
    "target_mood",
    "annotator_id",
    "text_mood",
    "imagery_mood",
    "music_mood",
    "overall_mood",
)

CHANNELS = ("text_mood", "imagery_mood", "music_mood")


class AnnotationError(ValueError):
    """Raised when the annotation CSV is malformed."""


@dataclass(frozen=True)
class AnnotationRecord:
    video_id: str
    condition: str
    target_mood: str
    annotator_id: str
    text_mood: str
    imagery_mood: str
    music_mood: str
    overall_mood: str

    def channel(self, name: str) -> str:
        if name not in CHANNELS:
            raise KeyError(name)
        return getattr(self, name)


def load_annotations(path: str | Path) -> list[AnnotationRecord]:
    """Read annotation rows from a CSV file.

    The header must carry exactly the required columns (order free). Field
    values are stripped; empty required fields are an error.
    """
    path = Path(path)
    if not path.exists():
        raise AnnotationError(f"annotations file not found: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise AnnotationError("annotations file is empty")
        missing = [c for c in REQUIRED_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise AnnotationError(f"missing columns: {', '.join(missing)}")
        records = []
        for i, row in enumerate(reader, start=2):
            values = {}
            for col in REQUIRED_COLUMNS:
                value = (row.get(col) or "").strip()
                if not value:
                    raise AnnotationError(f"row {i}: empty {col}")
                values[col] = value
            records.append(AnnotationRecord(**values))
    return records


def _classes(label: str, palette: MoodPalette) -> tuple[str, str] | None:
    """(valence_class, arousal_class) for a mood label, None if unclear."""
    if label == UNCLEAR_LABEL:
        return None
    spec = palette.get(label)
    return (spec.valence_class, spec.arousal_class)


def match_accuracies(records: Sequence[AnnotationRecord],
                     palette: MoodPalette) -> dict[str, float]:
    """Per-video accuracies under an any-annotator rule.

    A video counts as an exact hit when at least one of its annotators named
    the target mood overall; as a valence (arousal) hit when at least one
    overall label shares the target's valence (arousal) class. Exact hits
    satisfy both relaxed variants by construction.
    """
    if not records:
        raise ValueError("no records")
    videos: dict[str, dict[str, bool]] = {}
    for rec in records:
        hits = videos.setdefault(rec.video_id,
                                 {"exact": False, "valence": False, "arousal": False})
        target = _classes(rec.target_mood, palette)
        if target is None:
            raise UnknownMoodError(f"target mood may not be {UNCLEAR_LABEL!r}")
        observed = _classes(rec.overall_mood, palette)
        if observed is None:
            continue
        if rec.overall_mood == rec.target_mood:
            hits["exact"] = True
        if observed[0] == target[0]:
            hits["valence"] = True
        if observed[1] == target[1]:
            hits["arousal"] = True
    n = len(videos)
    return {
        "exact": sum(v["exact"] for v in videos.values()) / n,
        "valence": sum(v["valence"] for v in videos.values()) / n,
        "arousal": sum(v["arousal"] for v in videos.values()) / n,
    }


def consistency_score(record: AnnotationRecord, palette: MoodPalette) -> float:
    """How well the three channels agree with the overall impression.

    Each channel contributes 1 for an exact label match with the overall
    mood, 0.5 for a shared valence or arousal class, else 0. A channel marked
    unclear scores 0; an unclear overall mood zeroes the record.
    """
    if record.overall_mood == UNCLEAR_LABEL:
        return 0.0
    overall = palette.get(record.overall_mood)
    total = 0.0
    for name in CHANNELS:
        kind = classify_match(overall, record.channel(name), palette)
        if kind is MatchKind.EXACT:
            total += 1.0
        elif kind in (MatchKind.VALENCE_MATCH, MatchKind.AROUSAL_MATCH):
            total += 0.5
    return total


def unclear_rate(records: Sequence[AnnotationRecord]) -> float:
    """Fraction of records whose overall mood was marked unclear."""
    if not records:
        raise ValueError("no records")
    return sum(r.overall_mood == UNCLEAR_LABEL for r in records) / len(records)


def _mean(xs: Sequence[float]) -> float:
    return sum(xs) / len(xs)


def _sample_var(xs: Sequence[float]) -> float:
    if len(xs) < 2:
        return float("nan")
    m = _mean(xs)
    return sum((x - m) ** 2 for x in xs) / (len(xs) - 1)


def welch_t_test(a: Sequence[float], b: Sequence[float]) -> tuple[float, float, float]:
    """Two-sided Welch t-test: (statistic, degrees of freedom, p).

    Unequal variances assumed. Degenerate zero-variance groups resolve to
    p = 1.0 when the means agree and p = 0.0 otherwise.
    """
    if len(a) < 2 or len(b) < 2:
        raise ValueError("each group needs at least two observations")
    na, nb = len(a), len(b)
    va, vb = _sample_var(a), _sample_var(b)
    se2 = va / na + vb / nb
    diff = _mean(a) - _mean(b)
    if se2 == 0.0:
        if diff == 0.0:
            return (0.0, float(na + nb - 2), 1.0)
        return (math.copysign(math.inf, diff), float(na + nb - 2), 0.0)
    stat = diff / math.sqrt(se2)
    # the squared terms can underflow to zero for variances near the float
    # floor even though se2 > 0; any positive df works then, 1 by convention
    denom = (va / na) ** 2 / (na - 1) + (vb / nb) ** 2 / (nb - 1)
    df = se2 ** 2 / denom if denom > 0.0 else 1.0
    p = 2.0 * float(t_dist.sf(abs(stat), df))
    return (stat, df, p)


@dataclass(frozen=True)
class ConditionStats:
    condition: str
    n_records: int
    n_videos: int
    consistency_mean: float
    consistency_sd: float
    unclear_rate: float
    accuracies: Mapping[str, float]


@dataclass(frozen=True)
class MetricsReport:
    conditions: tuple[ConditionStats, ...]
    t_statistic: float | None = None
    t_df: float | None = None
    p_value: float | None = None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "conditions": [
                {
                    "condition": c.condition,
                    "n_records": c.n_records,
                    "n_videos": c.n_videos,
                    "consistency_mean": c.consistency_mean,
                    "consistency_sd": c.consistency_sd,
                    "unclear_rate": c.unclear_rate,
                    "accuracies": dict(c.accuracies),
                }
                for c in self.conditions
            ],
            "t_statistic": self.t_statistic,
            "t_df": self.t_df,
            "p_value": self.p_value,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def render(self) -> str:
        """Plain-text table of the report."""
        lines = []
        header = (f"{'condition':<14} {'records':>7} {'videos':>6} "
                  f"{'consist':>8} {'sd':>6} {'unclear':>8} "
                  f"{'exact':>6} {'valence':>8} {'arousal':>8}")
        lines.append(header)
        lines.append("-" * len(header))
        for c in self.conditions:
            lines.append(
                f"{c.condition:<14} {c.n_records:>7} {c.n_videos:>6} "
                f"{c.consistency_mean:>8.2f} {c.consistency_sd:>6.2f} "
                f"{c.unclear_rate * 100:>7.1f}% "
                f"{c.accuracies['exact'] * 100:>5.1f}% "
                f"{c.accuracies['valence'] * 100:>7.1f}% "
                f"{c.accuracies['arousal'] * 100:>7.1f}%"
            )
        if self.p_value is not None:
            lines.append("")
            lines.append(f"Welch t = {self.t_statistic:.3f}, "
                         f"df = {self.t_df:.1f}, p = {self.p_value:.4g}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def condition_summary(records: Sequence[AnnotationRecord],
                      palette: MoodPalette) -> MetricsReport:
    """Group records by condition and compare consistency across conditions.

    Consistency statistics average over records, not videos, so videos with
    more annotators weigh more. The t-test runs only when exactly two
    conditions are present and both have at least two records.
    """
    if not records:
        raise ValueError("no records")
    by_condition: dict[str, list[AnnotationRecord]] = {}
    for rec in records:
        by_condition.setdefault(rec.condition, []).append(rec)

    stats = []
    scores_by_condition: dict[str, list[float]] = {}
    for name in sorted(by_condition):
        group = by_condition[name]
        scores = [consistency_score(r, palette) for r in group]
        scores_by_condition[name] = scores
        sd = _sample_var(scores)
        stats.append(ConditionStats(
            condition=name,
            n_records=len(group),
            n_videos=len({r.video_id for r in group}),
            consistency_mean=_mean(scores),
            consistency_sd=math.sqrt(sd) if not math.isnan(sd) else float("nan"),
            unclear_rate=unclear_rate(group),
            accuracies=match_accuracies(group, palette),
        ))

    notes = ["consistency statistics average over records, so videos with "
             "more annotators carry more weight"]
    t_stat = t_df = p = None
    names = sorted(by_condition)
    if len(names) == 2:
        a, b = scores_by_condition[names[0]], scores_by_condition[names[1]]
        if len(a) >= 2 and len(b) >= 2:
            t_stat, t_df, p = welch_t_test(a, b)
        else:
            notes.append("t-test skipped: fewer than two records in a condition")
    elif len(names) != 2:
        notes.append(f"t-test skipped: requires exactly two conditions, "
                     f"found {len(names)}")

    return MetricsReport(conditions=tuple(stats), t_statistic=t_stat,
                         t_df=t_df, p_value=p, notes=tuple(notes))
