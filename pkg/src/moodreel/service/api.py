"""HTTP surface over the project store and pipeline.

All state round-trips through the file store, so several server processes
can share one store directory. Stage work runs on a background pool; the
stage endpoints hand back job tickets.
"""

from __future__ import annotations

import base64
import binascii
import dataclasses
import io
from typing import Optional, Sequence

from fastapi import FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from PIL import Image, UnidentifiedImageError
from pydantic import BaseModel, Field

from ..moodcore import (
    MoodPalette,
    SentimentLexicon,
    average_positivity,
    default_lexicon,
    default_palette,
)
from ..pipeline import (
    MAX_VIDEO_SECONDS,
    CampaignBrief,
    ManifestCompositionError,
    compose_manifest,
    rank_by_popularity,
    recommend_songs,
    regenerate_scene,
    rescore_scene,
)
from ..providers import DescriptionRequest, ImageRef, ProviderSet, SongEntry
from .jobs import JobManager, ProjectBusyError
from .stages import run_music_stage, run_script_stage, run_visuals_stage
from .state import (
    new_project_state,
    scene_from_state,
    scene_to_state,
    script_from_state,
    song_to_dict,
    uploads_from_state,
)
from .store import ProjectNotFoundError, ProjectStore, StoreError

MATCH_RANK_SIZE = 8


class ApiError(Exception):
    def __init__(self, status: int, detail: str, **extra):
        self.status = status
        self.detail = detail
        self.extra = extra
        super().__init__(detail)


class ProjectCreate(BaseModel):
    audience: str
    problem: str
    action: str
    mood: str
    with_mood: bool = True
    seed: int = 0


class UploadCreate(BaseModel):
    image_b64: str
    description: Optional[str] = None


class UploadPatch(BaseModel):
    description: str


class ScenePatch(BaseModel):
    text: Optional[str] = None
    image_description: Optional[str] = None
    narrative_goal: Optional[str] = None
    duration_s: Optional[float] = None
    regenerate: bool = False
    goal: Optional[str] = None
    positivity: Optional[int] = Field(default=None, ge=0, le=100)


class SelectionsPost(BaseModel):
    images: Optional[dict[int, int]] = None
    style: Optional[int] = None
    song_id: Optional[str] = None


def _decode_upload(image_b64: str) -> tuple[bytes, str]:
    try:
        data = base64.b64decode(image_b64, validate=True)
    except (binascii.Error, ValueError):
        raise ApiError(400, "image_b64 is not valid base64") from None
    try:
        with Image.open(io.BytesIO(data)) as im:
            fmt = (im.format or "png").lower()
            im.verify()
    except (UnidentifiedImageError, OSError):
        raise ApiError(400, "image data is not a decodable image") from None
    return data, "jpg" if fmt == "jpeg" else fmt


def create_app(store: ProjectStore, providers: ProviderSet,
               catalog: Sequence[SongEntry], *,
               lexicon: SentimentLexicon | None = None,
               palette: MoodPalette | None = None,
               jobs: JobManager | None = None) -> FastAPI:
    lexicon = lexicon or default_lexicon()
    palette = palette or default_palette()
    jobs = jobs or JobManager()
    songs_by_id = {s.id: s for s in catalog}

    app = FastAPI(title="campaign video service")
    # the browser client may be served from any static host
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    app.state.store = store
    app.state.jobs = jobs
    app.state.catalog = list(catalog)

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"detail": exc.detail, **exc.extra})

    @app.exception_handler(ProjectNotFoundError)
    async def _not_found(request: Request, exc: ProjectNotFoundError):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(ProjectBusyError)
    async def _busy(request: Request, exc: ProjectBusyError):
        return JSONResponse(status_code=409,
                            content={"detail": str(exc), "job_id": exc.job_id})

    def _state(project_id: str) -> dict:
        return store.read(project_id)

    @app.post("/projects", status_code=201)
    def create_project(body: ProjectCreate) -> dict:
        try:
            CampaignBrief(audience=body.audience, problem=body.problem,
                          action=body.action, mood=body.mood)
        except ValueError as exc:
            raise ApiError(400, str(exc))
        return store.create(new_project_state(body.model_dump(), body.with_mood,
                                              body.seed))

    @app.get("/projects/{project_id}")
    def get_project(project_id: str) -> dict:
        return _state(project_id)

    @app.post("/projects/{project_id}/uploads", status_code=201)
    def add_upload(project_id: str, body: UploadCreate) -> dict:
        _state(project_id)
        data, fmt = _decode_upload(body.image_b64)
        description = (body.description or "").strip()
        if not description:
            description = providers.vision.describe_image(
                DescriptionRequest(image=ImageRef(data=data, format=fmt)))
        upload_id = store.new_upload_id()
        rel = f"uploads/{upload_id}.{fmt}"
        store.write_blob(project_id, rel, data)
        entry = {"id": upload_id, "description": description, "path": rel,
                 "format": fmt}

        def commit(d: dict) -> dict:
            d["uploads"].append(entry)
            return d

        store.mutate(project_id, commit)
        return entry

    @app.patch("/projects/{project_id}/uploads/{upload_id}")
    def edit_upload(project_id: str, upload_id: str, body: UploadPatch) -> dict:
        if not body.description.strip():
            raise ApiError(400, "description must be non-empty")
        state = _state(project_id)
        if not any(u["id"] == upload_id for u in state["uploads"]):
            raise ApiError(404, f"no such upload: {upload_id}")

        def commit(d: dict) -> dict:
            for u in d["uploads"]:
                if u["id"] == upload_id:
                    u["description"] = body.description.strip()
            return d

        updated = store.mutate(project_id, commit)
        return next(u for u in updated["uploads"] if u["id"] == upload_id)

    @app.post("/projects/{project_id}/stages/{stage}", status_code=202)
    def start_stage(project_id: str, stage: str) -> dict:
        state = _state(project_id)
        if stage == "script":
            fn = lambda: run_script_stage(store, project_id, providers, lexicon)
        elif stage == "visuals":
            if not state["stages"]["script"]:
                raise ApiError(409, "script stage has not completed")
            fn = lambda: run_visuals_stage(store, project_id, providers)
        elif stage == "music":
            if not state["stages"]["script"]:
                raise ApiError(409, "script stage has not completed")
            fn = lambda: run_music_stage(store, project_id, providers, catalog,
                                         palette)
        else:
            raise ApiError(404, f"unknown stage: {stage!r}")
        job = jobs.submit(project_id, stage, fn)
        return job.to_dict()

    @app.get("/jobs/{job_id}")
    def get_job(job_id: str) -> dict:
        job = jobs.get(job_id)
        if job is None:
            raise ApiError(404, f"no such job: {job_id}")
        return job.to_dict()

    @app.patch("/projects/{project_id}/scenes/{index}")
    def patch_scene(project_id: str, index: int, body: ScenePatch) -> dict:
        state = _state(project_id)
        if not state.get("scenes"):
            raise ApiError(409, "project has no script yet")
        if not 0 <= index < len(state["scenes"]):
            raise ApiError(404, f"no scene at index {index}")

        if body.regenerate:
            uploads = uploads_from_state(state, store, project_id)
            script = script_from_state(state, uploads)
            old = script.scenes[index]
            goal = body.goal if body.goal is not None else old.narrative_goal
            positivity = (body.positivity if body.positivity is not None
                          else old.positivity.value)
            try:
                new_scene = regenerate_scene(script, index, goal, positivity,
                                             providers, lexicon)
            except ValueError as exc:
                raise ApiError(400, str(exc))

            def commit(d: dict) -> dict:
                d["scenes"][index] = scene_to_state(new_scene, images=None)
                d["selections"]["images"].pop(str(index), None)
                return d

            updated = store.mutate(project_id, commit)
            return updated["scenes"][index]

        old = scene_from_state(state["scenes"][index])
        changes: dict = {}
        if body.text is not None:
            if not body.text.strip():
                raise ApiError(400, "text must be non-empty")
            changes["text"] = body.text
        if body.image_description is not None:
            if not body.image_description.strip():
                raise ApiError(400, "image_description must be non-empty")
            changes["image_description"] = body.image_description
        if body.narrative_goal is not None:
            changes["narrative_goal"] = body.narrative_goal
        if body.duration_s is not None:
            if not 0 < body.duration_s <= MAX_VIDEO_SECONDS:
                raise ApiError(400, f"duration_s must be in (0, "
                                    f"{MAX_VIDEO_SECONDS:g}]")
            changes["duration_s"] = body.duration_s
        if not changes:
            raise ApiError(400, "no scene fields to change")

        new_scene = dataclasses.replace(old, **changes)
        if "text" in changes or "image_description" in changes:
            new_scene = rescore_scene(new_scene, lexicon)
        drop_images = "image_description" in changes

        def commit(d: dict) -> dict:
            keep = None if drop_images else d["scenes"][index].get("images")
            d["scenes"][index] = scene_to_state(new_scene, images=keep)
            if drop_images:
                d["selections"]["images"].pop(str(index), None)
            return d

        updated = store.mutate(project_id, commit)
        return updated["scenes"][index]

    @app.post("/projects/{project_id}/selections")
    def post_selections(project_id: str, body: SelectionsPost) -> dict:
        state = _state(project_id)
        image_picks: dict[str, str] = {}
        if body.images:
            if not state.get("scenes"):
                raise ApiError(409, "project has no script yet")
            for idx, cand in body.images.items():
                if not 0 <= idx < len(state["scenes"]):
                    raise ApiError(404, f"no scene at index {idx}")
                images = state["scenes"][idx].get("images")
                if not images or not images["candidates"]:
                    raise ApiError(409, f"scene {idx} has no image candidates")
                if not 0 <= cand < len(images["candidates"]):
                    raise ApiError(400, f"scene {idx} has no candidate {cand}")
                image_picks[str(idx)] = images["candidates"][cand]
        if body.style is not None:
            styles = state.get("styles") or []
            if not 0 <= body.style < max(len(styles), 1):
                raise ApiError(400, f"no style suggestion {body.style}")
        if body.song_id is not None and body.song_id not in songs_by_id:
            raise ApiError(400, f"unknown song: {body.song_id}")

        def commit(d: dict) -> dict:
            d["selections"]["images"].update(image_picks)
            if body.style is not None:
                d["selections"]["style"] = body.style
            if body.song_id is not None:
                d["selections"]["song_id"] = body.song_id
            return d

        return store.mutate(project_id, commit)["selections"]

    @app.get("/projects/{project_id}/songs")
    def get_songs(project_id: str,
                  rank: str = Query(default="match")) -> dict:
        state = _state(project_id)
        if rank == "popularity":
            ranked = rank_by_popularity(catalog)
        elif rank == "match":
            if not state["with_mood"]:
                raise ApiError(409, "match ranking needs a mood; this project "
                                    "runs without one")
            if state.get("mood_energy") is None:
                raise ApiError(409, "music stage has not completed")
            script = script_from_state(state)
            avg = average_positivity([s.positivity for s in script.scenes])
            ranked = recommend_songs(catalog, avg, state["mood_energy"],
                                     k=MATCH_RANK_SIZE)
        else:
            raise ApiError(400, "rank must be 'match' or 'popularity'")
        return {"rank": rank, "songs": [song_to_dict(s) for s in ranked]}

    @app.get("/projects/{project_id}/manifest")
    def get_manifest(project_id: str) -> dict:
        state = _state(project_id)
        if not state.get("scenes"):
            raise ApiError(409, "project has no script yet",
                           gaps=["script stage has not run"])
        script = script_from_state(state)
        picks = {int(k): v for k, v in state["selections"]["images"].items()}
        try:
            manifest = compose_manifest(script, picks,
                                        state["selections"]["song_id"] or "")
        except ManifestCompositionError as exc:
            raise ApiError(409, "manifest is incomplete", gaps=list(exc.gaps))
        return manifest.to_dict()

    @app.get("/projects/{project_id}/files/{relpath:path}")
    def get_file(project_id: str, relpath: str) -> Response:
        _state(project_id)
        try:
            data = store.read_blob(project_id, relpath)
        except StoreError:
            raise ApiError(404, f"no such file: {relpath}")
        suffix = relpath.rsplit(".", 1)[-1].lower()
        media = {"png": "image/png", "jpg": "image/jpeg",
                 "jpeg": "image/jpeg"}.get(suffix, "application/octet-stream")
        return Response(content=data, media_type=media)

    return app
