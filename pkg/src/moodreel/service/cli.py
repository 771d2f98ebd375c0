"""Command line front end.

serve  run the HTTP service over a project store
run    one-shot: brief file in, script + images + manifest out
eval   score an annotation CSV and print the comparison table
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..evalharness import AnnotationError, condition_summary, load_annotations
from ..moodcore import default_palette, load_palette
from ..pipeline import CampaignBrief, Upload, run_campaign
from ..providers import (
    ImageRef,
    load_song_catalog,
    mock_provider_set,
    provider_set_from_env,
    sample_catalog_path,
)
from ..providers.catalog import CatalogError

DEFAULT_STORE = "moodreel-projects"


def _providers(mock: bool):
    if mock:
        return mock_provider_set()
    return provider_set_from_env()


def _load_catalog(path: str | None):
    return load_song_catalog(path if path else sample_catalog_path())


def _load_brief(path: Path) -> CampaignBrief:
    raw = json.loads(path.read_text(encoding="utf-8"))
    uploads = []
    for u in raw.get("uploads", []):
        image_path = Path(u["path"])
        if not image_path.is_absolute():
            image_path = path.parent / image_path
        fmt = image_path.suffix.lstrip(".").lower() or "png"
        uploads.append(Upload(
            id=u.get("id", image_path.stem),
            image=ImageRef(data=image_path.read_bytes(), format=fmt),
            description=u["description"],
        ))
    return CampaignBrief(audience=raw["audience"], problem=raw["problem"],
                         action=raw["action"], mood=raw["mood"],
                         uploads=tuple(uploads))


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app
    from .store import ProjectStore

    catalog = _load_catalog(args.catalog)
    app = create_app(ProjectStore(args.store), _providers(args.mock), catalog)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def cmd_run(args) -> int:
    brief = _load_brief(Path(args.brief))
    catalog = _load_catalog(args.catalog)
    result = run_campaign(brief, _providers(args.mock), catalog,
                          with_mood=not args.no_mood, seed=args.seed,
                          out_dir=args.out)
    manifest = result.manifest
    print(f"scenes: {len(result.script.scenes)}")
    print(f"images written: {len(result.images)}")
    print(f"song: {manifest.song_id}")
    print(f"total duration: {manifest.total_duration_s:g}s"
          + (" (over length)" if manifest.over_length else ""))
    print(f"manifest: {Path(args.out) / 'manifest.json'}")
    return 0


def cmd_eval(args) -> int:
    palette = load_palette(args.palette) if args.palette else default_palette()
    records = load_annotations(args.annotations)
    report = condition_summary(records, palette)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moodreel",
        description="mood-consistent advocacy video pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--catalog", help="song catalog (csv or json); "
                                         "bundled sample when omitted")
    serve.add_argument("--store", default=DEFAULT_STORE,
                       help="project store directory")
    serve.add_argument("--mock", action="store_true",
                       help="force mock providers")
    serve.set_defaults(fn=cmd_serve)

    run = sub.add_parser("run", help="run a brief end to end")
    run.add_argument("--brief", required=True, help="brief json file")
    run.add_argument("--out", required=True, help="output directory")
    run.add_argument("--catalog", help="song catalog; bundled sample "
                                       "when omitted")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--mock", action="store_true",
                     help="force mock providers")
    run.add_argument("--no-mood", action="store_true",
                     help="drop all mood conditioning")
    run.set_defaults(fn=cmd_run)

    ev = sub.add_parser("eval", help="score an annotation csv")
    ev.add_argument("--annotations", required=True)
    ev.add_argument("--palette", help="palette json; bundled default "
                                      "when omitted")
    ev.add_argument("--json", action="store_true",
                    help="emit the report as json")
    ev.set_defaults(fn=cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (AnnotationError, CatalogError, FileNotFoundError, KeyError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
