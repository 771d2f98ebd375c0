"""
Scoring an annotation study
===========================

Equivalent to the CLI:  moodreel eval --annotations demos/data/annotations.csv
"""

import pathlib

from moodreel import default_palette
from moodreel.evalharness import (condition_summary, load_annotations,
                                  match_accuracies)

here = pathlib.Path(__file__).parent
records = load_annotations(here / "data" / "annotations.csv")
palette = default_palette()

report = condition_summary(records, palette)
print(report.render())

# per-video mood-match rates: a video counts as matched when any annotator
# hit the target exactly, or shared its valence or arousal class
with_mood = [r for r in records if r.condition == "with_mood"]
acc = match_accuracies(with_mood, palette)
for kind in ("exact", "valence", "arousal"):
    print(f"{kind:>8}: {acc[kind] * 100:.1f}%")
