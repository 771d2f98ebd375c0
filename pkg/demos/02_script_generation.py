"""
Generating a campaign script from a brief
=========================================

Runs entirely on the bundled mock providers, so no API keys are needed.
"""

from moodreel import CampaignBrief, default_lexicon, mock_provider_set
from moodreel.pipeline import generate_script, serialize_script

brief = CampaignBrief(
    audience="Cat Owners in New York City",
    problem="Free-roaming pet cats are the biggest human-made threat to "
            "birds, causing the loss of 2.4 billion birds each year in the "
            "US alone",
    action="New Yorkers can help address this issue by keeping their pet "
            "cats indoors, and, if allowing them outdoors, keeping them "
            "under strict surveillance",
    mood="calm",
)

providers = mock_provider_set()
lexicon = default_lexicon()

script = generate_script(brief, True, providers, lexicon)
for scene in script.scenes:
    print(f"[{scene.index}] {scene.narrative_goal:<18} "
          f"positivity={scene.positivity.value:<3} "
          f"{scene.duration_s}s  {scene.text}")

print()
print("total duration:", script.total_duration_s, "seconds")

# the same brief without the mood clause reads noticeably flatter
plain = generate_script(brief, False, providers, lexicon)
print("with mood   :", script.scenes[0].text)
print("without mood:", plain.scenes[0].text)

# the wire format round-trips through the parser
print()
print(serialize_script(script)[:160], "...")
