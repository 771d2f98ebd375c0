"""
One call from brief to storyboard manifest
==========================================

Equivalent to the CLI:  moodreel run --brief demos/briefs/m1.json --out ... --mock
"""

import json
import pathlib
import tempfile

from moodreel import CampaignBrief, mock_provider_set, run_campaign
from moodreel.providers import load_song_catalog, sample_catalog_path

brief = CampaignBrief(
    audience="Subway riders",
    problem="Trains are delayed every morning because riders crowd the "
            "doors before anyone can step off",
    action="Let riders off first; the whole platform boards faster",
    mood="frustrated",
)

out = pathlib.Path(tempfile.mkdtemp(prefix="moodreel-campaign-"))
result = run_campaign(brief, mock_provider_set(),
                      load_song_catalog(sample_catalog_path()),
                      seed=0, out_dir=out)

print("scenes:", len(result.script.scenes))
print("style:", result.styles[0].style)
print("color:", result.color.color_description)
print("song:", result.ranked_songs[0].title)
print("files under", out)

manifest = json.loads((out / "manifest.json").read_text())
print(json.dumps(manifest, indent=2)[:400], "...")
