"""Parsing of model completions into structured stage data, plus the
inverse serialization used for prompts and operator debugging.

The script grammar is lenient where model output drifts: both the
VISUAL DESCRIPTION and IMAGE DESCRIPTION labels map to the scene's image
description, EMOTIONAL GOAL and NARRATIVE GOAL both map to the narrative
goal, and durations accept free-form phrases like "3 seconds" or "about 4s".
Labels are matched uppercase only, so prose mentioning "text:" is not
mistaken for a field.
"""

from __future__ import annotations

import re

from .models import ColorSuggestion, Scene, Script, StyleSuggestion

SECTION_MARKER = "***"

_LABEL_RE = re.compile(
    r"(VISUAL DESCRIPTION|IMAGE DESCRIPTION|TEXT|DURATION|EMOTIONAL GOAL|NARRATIVE GOAL)\s*:")
_LABEL_FIELD = {
    "VISUAL DESCRIPTION": "image_description",
    "IMAGE DESCRIPTION": "image_description",
    "TEXT": "text",
    "DURATION": "duration",
    "EMOTIONAL GOAL": "narrative_goal",
    "NARRATIVE GOAL": "narrative_goal",
}
_NUMBER_RE = re.compile(r"-?\d+(?:\.\d+)?")
_SCORE_RE = re.compile(r"SCORE\s*:\s*(-?\d+)")
_COLOR_DESC_RE = re.compile(r"COLOR DESCRIPTION\s*:\s*(.+)")
_STYLE_ENTRY_RE = re.compile(
    r"\*\s*(?P<word>[^:*\n]+?)\s*:\s*(?P<style>[^|\n]+?)\s*\|\s*(?P<expl>[^*\n]+)")


class ParseError(ValueError):
    """A model completion did not contain the expected structure.

    Carries the raw completion for operator inspection.
    """

    def __init__(self, message: str, raw: str):
        super().__init__(message)
        self.raw = raw


class ScriptParseError(ParseError):
    pass


class StyleParseError(ParseError):
    pass


class ColorParseError(ParseError):
    pass


def parse_duration(value: str) -> float | None:
    """Pull seconds out of phrases like "3 seconds", "3.5s", "about 4"."""
    m = _NUMBER_RE.search(value)
    return float(m.group()) if m else None


def _parse_section(section: str) -> dict | None:
    matches = list(_LABEL_RE.finditer(section))
    if not matches:
        return None
    fields: dict = {}
    for i, m in enumerate(matches):
        end = matches[i + 1].start() if i + 1 < len(matches) else len(section)
        value = section[m.end():end].strip()
        fields.setdefault(_LABEL_FIELD[m.group(1)], value)
    if "text" not in fields and "image_description" not in fields:
        return None
    return fields


def parse_script(raw: str, *, with_mood: bool = True) -> Script:
    """Split a completion on *** markers and extract the labeled scenes.

    Missing durations stay None (filled later by ``assign_durations``); a
    completion with zero parseable sections is a ScriptParseError.
    """
    if not raw.strip():
        raise ScriptParseError("empty completion", raw=raw)
    scenes: list[Scene] = []
    for section in raw.split(SECTION_MARKER):
        fields = _parse_section(section)
        if fields is None:
            continue
        duration = parse_duration(fields["duration"]) if "duration" in fields else None
        scenes.append(Scene(
            index=len(scenes),
            text=fields.get("text", ""),
            image_description=fields.get("image_description", ""),
            narrative_goal=fields.get("narrative_goal", ""),
            duration_s=duration,
        ))
    if not scenes:
        raise ScriptParseError("no parseable scene sections", raw=raw)
    return Script(scenes=tuple(scenes), with_mood=with_mood)


def parse_scene_block(raw: str) -> Scene:
    """Parse a single-scene completion (the regeneration reply)."""
    script = parse_script(raw)
    return script.scenes[0]


def _format_duration(seconds: float) -> str:
    return f"{seconds:g} seconds"


def serialize_scene(scene: Scene, grammar: str = "full") -> str:
    """Render one scene in the script grammar.

    ``full`` uses the four-field stage-1 labels; ``brief`` uses the two-field
    TEXT / IMAGE DESCRIPTION form that single-scene replacements follow.
    """
    if grammar == "brief":
        return (f"{SECTION_MARKER}TEXT: {scene.text} "
                f"IMAGE DESCRIPTION: {scene.image_description}")
    parts = [f"{SECTION_MARKER}VISUAL DESCRIPTION: {scene.image_description}",
             f"TEXT: {scene.text}"]
    if scene.duration_s is not None:
        parts.append(f"DURATION: {_format_duration(scene.duration_s)}")
    parts.append(f"EMOTIONAL GOAL: {scene.narrative_goal}")
    return " ".join(parts)


def serialize_script(script: Script, grammar: str = "full") -> str:
    """Render a script in the ***-delimited grammar (operator debugging)."""
    return "\n".join(serialize_scene(s, grammar) for s in script.scenes)


def parse_styles(raw: str) -> list[StyleSuggestion]:
    """Extract exactly three * Word: Style | Explanation entries."""
    suggestions = []
    for m in _STYLE_ENTRY_RE.finditer(raw):
        try:
            suggestions.append(StyleSuggestion(
                word=m.group("word").strip(),
                style=m.group("style").strip(),
                explanation=m.group("expl").strip(),
            ))
        except ValueError:
            continue
    if len(suggestions) < 3:
        raise StyleParseError(
            f"expected 3 style entries, found {len(suggestions)}", raw=raw)
    return suggestions[:3]


def parse_color(raw: str) -> ColorSuggestion:
    """Extract the SCORE and COLOR DESCRIPTION fields."""
    score_m = _SCORE_RE.search(raw)
    if not score_m:
        raise ColorParseError("missing SCORE field", raw=raw)
    desc_m = _COLOR_DESC_RE.search(raw)
    if not desc_m:
        raise ColorParseError("missing COLOR DESCRIPTION field", raw=raw)
    description = desc_m.group(1).splitlines()[0].strip()
    if not description:
        raise ColorParseError("empty COLOR DESCRIPTION", raw=raw)
    return ColorSuggestion(energy_score=int(score_m.group(1)),
                           color_description=description)
