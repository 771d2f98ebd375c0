"""Hand-constructed annotation sets with known metric values.

The fixtures are built backwards from the numbers the metrics must hit, so
every expected value in the tests is independent of the implementation:

- accuracy fixture: 16 videos, one annotator each, target always "calm";
  6 exact hits, 6 valence-only, 3 arousal-only, 1 miss
  -> exact 6/16, valence 12/16, arousal 9/16.
- consistency fixtures: 32 records per condition on the half-point lattice;
  sums picked so the means land within +-0.005 of 1.61 and 1.02, with 7 and
  14 unclear records respectively.
"""

from moodreel.evalharness import AnnotationRecord

# overall mood "calm" is (positive, low); these labels realize each
# per-channel contribution against it
EXACT = "calm"
HALF = "contented"      # shares positive valence only
ZERO = "angry"          # negative/high: no shared class

# how one annotator's overall label lands for target "calm"
VALENCE_ONLY = "contented"   # positive valence, neutral arousal
AROUSAL_ONLY = "tired"       # neutral valence, low arousal
MISS = "angry"

ACCURACY_EXACT = 6
ACCURACY_VALENCE_ONLY = 6
ACCURACY_AROUSAL_ONLY = 3
ACCURACY_MISS = 1

# multisets of per-record consistency scores (lattice {0, 0.5, ..., 3});
# None marks a record whose overall mood is unclear
WITH_MOOD_SCORES = [2.0] * 21 + [3.0] * 3 + [0.5] + [None] * 7
WITHOUT_MOOD_SCORES = [2.0] * 16 + [0.5] + [0.0] + [None] * 14

assert len(WITH_MOOD_SCORES) == 32
assert len(WITHOUT_MOOD_SCORES) == 32
assert sum(s for s in WITH_MOOD_SCORES if s is not None) == 51.5
assert sum(s for s in WITHOUT_MOOD_SCORES if s is not None) == 32.5


def channels_for_score(score: float) -> tuple[str, str, str]:
    """Three channel labels whose consistency against "calm" sums to score."""
    full, half = int(score), 1 if score % 1 else 0
    labels = [EXACT] * full + [HALF] * half
    labels += [ZERO] * (3 - len(labels))
    return tuple(labels)


def accuracy_fixture() -> list[AnnotationRecord]:
    records = []
    outcomes = ([EXACT] * ACCURACY_EXACT
                + [VALENCE_ONLY] * ACCURACY_VALENCE_ONLY
                + [AROUSAL_ONLY] * ACCURACY_AROUSAL_ONLY
                + [MISS] * ACCURACY_MISS)
    for i, overall in enumerate(outcomes):
        records.append(AnnotationRecord(
            video_id=f"v{i:02d}", condition="with_mood", target_mood="calm",
            annotator_id="a0", text_mood=overall, imagery_mood=overall,
            music_mood=overall, overall_mood=overall))
    return records


def consistency_fixture(condition: str, scores) -> list[AnnotationRecord]:
    records = []
    for i, score in enumerate(scores):
        video = f"{condition[:1]}{i // 4:02d}"
        annotator = f"a{i % 4}"
        if score is None:
            overall = "unclear"
            channels = (EXACT, EXACT, EXACT)
        else:
            overall = "calm"
            channels = channels_for_score(score)
        records.append(AnnotationRecord(
            video_id=video, condition=condition, target_mood="calm",
            annotator_id=annotator, text_mood=channels[0],
            imagery_mood=channels[1], music_mood=channels[2],
            overall_mood=overall))
    return records


def study_fixture() -> list[AnnotationRecord]:
    """Both conditions together, as the eval CLI would load them."""
    return (consistency_fixture("with_mood", WITH_MOOD_SCORES)
            + consistency_fixture("without_mood", WITHOUT_MOOD_SCORES))
