"""
Style suggestions, color direction, and scene imagery
=====================================================

"""

import pathlib
import tempfile

from moodreel import CampaignBrief, default_lexicon, mock_provider_set
from moodreel.moodcore import average_positivity
from moodreel.pipeline import (generate_scene_images, generate_script,
                               recommend_colors, recommend_styles)

brief = CampaignBrief(
    audience="commuters",
    problem="subway doors are so crowded that boarding takes forever",
    action="ride in the middle cars where there is always room",
    mood="calm",
)

providers = mock_provider_set()
script = generate_script(brief, True, providers, default_lexicon())
avg = average_positivity([s.positivity for s in script.scenes])

# three art-style suggestions, ranked by the provider
styles = recommend_styles(brief.mood, avg, providers)
for s in styles:
    print(f"{s.word} -> {s.style}: {s.explanation}")

# a 0-100 energy rating plus a short color phrase
color = recommend_colors(brief.mood, providers)
print("color:", color.energy_score, color.color_description)

# four seeded candidates per scene; same seed, same bytes
script = generate_scene_images(script, styles[0], color, providers,
                               base_seed=7)
out = pathlib.Path(tempfile.mkdtemp(prefix="moodreel-demo-"))
for scene in script.scenes:
    for i, image in enumerate(scene.images.candidates):
        path = out / f"scene_{scene.index:02d}_cand_{i}.png"
        path.write_bytes(image.data)
print("wrote", 4 * len(script.scenes), "images to", out)
print("prompt for scene 0:", script.scenes[0].images.prompt_used)
