"""Campaign pipeline: script generation, visuals, music, manifest."""

from .manifest import (
    ManifestCompositionError,
    compose_manifest,
    load_manifest,
    manifest_json,
    save_manifest,
)
from .models import (
    ASPECT_RATIO,
    DEFAULT_SCENE_SECONDS,
    IMAGE_HEIGHT,
    IMAGE_WIDTH,
    MAX_VIDEO_SECONDS,
    CampaignBrief,
    ColorSuggestion,
    ImageSet,
    ManifestScene,
    Scene,
    Script,
    StyleSuggestion,
    Upload,
    VideoManifest,
    canonical_scene,
)
from .music import mood_energy, rank_by_popularity, recommend_songs
from .parsing import (
    ColorParseError,
    ParseError,
    ScriptParseError,
    StyleParseError,
    parse_color,
    parse_duration,
    parse_scene_block,
    parse_script,
    parse_styles,
    serialize_scene,
    serialize_script,
)
from .prompts import (
    build_color_prompt,
    build_image_prompt,
    build_regen_prompt,
    build_script_prompt,
    build_style_prompt,
    plain_image_prompt,
    sentiment_word,
)
from .runner import RunResult, candidate_path, collect_images, run_campaign
from .script import (
    UploadAssignmentError,
    assign_durations,
    generate_script,
    integrate_uploads,
    regenerate_scene,
    rescore_scene,
)
from .visuals import (
    RESTYLE_STRENGTH,
    generate_scene_images,
    recommend_colors,
    recommend_styles,
    scene_seed,
)

__all__ = [
    "ASPECT_RATIO",
    "DEFAULT_SCENE_SECONDS",
    "IMAGE_HEIGHT",
    "IMAGE_WIDTH",
    "MAX_VIDEO_SECONDS",
    "RESTYLE_STRENGTH",
    "CampaignBrief",
    "ColorParseError",
    "ColorSuggestion",
    "ImageSet",
    "ManifestCompositionError",
    "ManifestScene",
    "ParseError",
    "RunResult",
    "Scene",
    "Script",
    "ScriptParseError",
    "StyleParseError",
    "StyleSuggestion",
    "Upload",
    "UploadAssignmentError",
    "VideoManifest",
    "assign_durations",
    "build_color_prompt",
    "build_image_prompt",
    "build_regen_prompt",
    "build_script_prompt",
    "build_style_prompt",
    "candidate_path",
    "canonical_scene",
    "collect_images",
    "compose_manifest",
    "generate_scene_images",
    "generate_script",
    "integrate_uploads",
    "load_manifest",
    "manifest_json",
    "mood_energy",
    "parse_color",
    "parse_duration",
    "parse_scene_block",
    "parse_script",
    "parse_styles",
    "plain_image_prompt",
    "rank_by_popularity",
    "recommend_colors",
    "recommend_songs",
    "regenerate_scene",
    "rescore_scene",
    "run_campaign",
    "save_manifest",
    "scene_seed",
    "sentiment_word",
    "serialize_scene",
    "serialize_script",
]
