"""Prompt builders for the generative text calls.

Two families exist for every mood-bearing prompt: the full variant that
threads the target mood through, and a baseline variant with every mood
clause removed (used for comparison runs).
"""

from __future__ import annotations

from .models import CampaignBrief, ColorSuggestion, Script, StyleSuggestion

_SCRIPT_FORMAT = (
    "The video should follow a narrative arc, and the narrative goal "
    "(for example: Introduction, fostering connection, inspiring action...) "
    "of each section should be labeled in under three words. "
    "Follow this format, and make sure to start every section with *** - "
    "VISUAL DESCRIPTION: [description of the imagery on screen] "
    "TEXT: [text on screen] DURATION: [approximate time of this scene] "
    "EMOTIONAL GOAL: [Emotional goal]. "
    "This video will be made for social media and should be under 45 seconds."
)

STYLE_PROMPT_TEMPLATE = (
    "What are words I could use to describe a {mood} mood that is also {word}? "
    "For each word, can you provide an art style, movement, or illustration style "
    "that is generally representative of that word? "
    "You don't have to use traditional movements - feel free to be inspired by "
    "children's storybook styles, animated styles, styles from advertisements, "
    "architecture, and more. "
    "Start each item of the list with * and follow this format "
    "* Word: Style | Explanation. "
    "For example, entries could be "
    "* Uplifting: Minimalist Scandinavian Design | typically uses clean lines, "
    "neutral color palettes, and natural elements to create a positive and cozy "
    "environment that inspires wellness and simplicity "
    "*Exciting: Action Comic Book illustration in the style of Marvel | this style "
    "uses bold and sharp lines, colors, and visual effects to display dynamic "
    "action-packed scenes. "
    "Please provide three entries and keep the description under 20 words."
)

COLOR_PROMPT_TEMPLATE = (
    'On a scale of 0-100, 0 meaning "completely calm" to 100 meaning '
    '"very excited,", rank this mood: {mood}. '
    "Then, using this assessment, provide a description of colors that could "
    "accurately capture this mood. "
    'For example, for "completely calm", you could say "very muted colors". '
    'For "very excited", you could say "very vibrant and saturated colors". '
    "Please keep this color description under six words. "
    "Format your response like this: "
    "SCORE: [rank from 0-100] COLOR DESCRIPTION: [color description]"
)


def _require_brief(brief: CampaignBrief) -> None:
    for name in ("audience", "problem", "action", "mood"):
        if not getattr(brief, name, "").strip():
            raise ValueError(f"brief field {name!r} must be non-empty")


def build_script_prompt(brief: CampaignBrief, with_mood: bool) -> str:
    """The stage-1 script request, with or without the mood clause."""
    _require_brief(brief)
    head = (f"I am making a PSA informing {brief.audience} about the problem "
            f"that {brief.problem}. Additionally, I want to inform them that "
            f"this problem can be addressed when {brief.action}. ")
    if with_mood:
        ask = ("Please provide an example description of such a video, making "
               f"sure to follow key emotional beats that are {brief.mood}. ")
    else:
        ask = "Please provide an example description of such a video. "
    return head + ask + _SCRIPT_FORMAT


def build_regen_prompt(script_context: str, index: int, scene_block: str,
                       goal: str, mood: str | None) -> str:
    """The single-scene replacement request.

    ``mood`` of None omits the mood sentence (baseline runs).
    """
    if not goal.strip():
        raise ValueError("narrative goal must be non-empty")
    mood_clause = f"It should generally have a {mood} mood. " if mood else ""
    return (
        f"Using this script as context: {script_context}, can you replace "
        f"SCENE {index} {scene_block} with a scene that achieves the goal of "
        f"{goal}? {mood_clause}"
        "Make sure the text makes sense in the context of the text in the "
        "scenes before and after. "
        "Also, make sure to follow the format of the other parts of the script: "
        "***TEXT: [onscreen text] IMAGE DESCRIPTION: [image description]. "
        "Only return the information for this one scene."
    )


def sentiment_word(avg_positivity: float) -> str:
    """Map an average positivity onto the five-step sentiment scale."""
    if not 0 <= avg_positivity <= 100:
        raise ValueError(f"average positivity {avg_positivity} out of [0, 100]")
    if avg_positivity < 20:
        return "strongly negative"
    if avg_positivity < 40:
        return "negative"
    if avg_positivity < 60:
        return "neutral"
    if avg_positivity < 80:
        return "positive"
    return "strongly positive"


def build_style_prompt(mood: str, word: str) -> str:
    if not mood.strip():
        raise ValueError("mood must be non-empty")
    return STYLE_PROMPT_TEMPLATE.format(mood=mood, word=word)


def build_color_prompt(mood: str) -> str:
    if not mood.strip():
        raise ValueError("mood must be non-empty")
    return COLOR_PROMPT_TEMPLATE.format(mood=mood)


def build_image_prompt(style: StyleSuggestion, color: ColorSuggestion,
                       image_description: str) -> str:
    """Art style + color + "illustration of" + scene description."""
    if not image_description.strip():
        raise ValueError("image description must be non-empty")
    return f"{style.style} {color.color_description} illustration of {image_description}"


def plain_image_prompt(image_description: str) -> str:
    """Baseline image prompt with style and color guidance removed."""
    if not image_description.strip():
        raise ValueError("image description must be non-empty")
    return f"illustration of {image_description}"
