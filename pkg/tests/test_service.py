import base64
import io
import threading
import time

import pytest
from fastapi.testclient import TestClient
from PIL import Image

from moodreel.providers import ProviderSet, mock_provider_set
from moodreel.providers import load_song_catalog, sample_catalog_path
from moodreel.service import ProjectStore, create_app
from moodreel.service.jobs import JobManager, ProjectBusyError

BRIEF = dict(
    audience="commuters",
    problem="bike lanes end abruptly at every major junction",
    action="the city council funds a connected network",
    mood="frustrated",
)


def png_b64(color=(20, 120, 60)) -> str:
    buf = io.BytesIO()
    Image.new("RGB", (32, 32), color).save(buf, format="PNG")
    return base64.b64encode(buf.getvalue()).decode()


@pytest.fixture(scope="module")
def catalog():
    return load_song_catalog(sample_catalog_path())


@pytest.fixture
def service(tmp_path, catalog):
    jobs = JobManager()
    store = ProjectStore(tmp_path / "projects")
    app = create_app(store, mock_provider_set(), catalog, jobs=jobs)
    client = TestClient(app)
    yield client, jobs, store
    jobs.shutdown()


def create_project(client, **overrides):
    body = {**BRIEF, **overrides}
    resp = client.post("/projects", json=body)
    assert resp.status_code == 201
    return resp.json()["id"]


def run_stage(client, jobs, pid, stage):
    resp = client.post(f"/projects/{pid}/stages/{stage}")
    assert resp.status_code == 202, resp.text
    job = jobs.wait(resp.json()["id"])
    assert job.status == "done", (stage, job.error)
    return job


class TestProjectLifecycle:
    def test_create_and_fetch(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        project = client.get(f"/projects/{pid}").json()
        assert project["revision"] == 1
        assert project["brief"]["mood"] == "frustrated"
        assert project["stages"] == {"script": False, "visuals": False,
                                     "music": False}

    def test_create_rejects_blank_fields(self, service):
        client, _, _ = service
        assert client.post("/projects", json={**BRIEF, "mood": "  "}).status_code == 400

    def test_unknown_project_404(self, service):
        client, _, _ = service
        assert client.get("/projects/proj_nope").status_code == 404

    def test_cross_origin_allowed(self, service):
        client, _, _ = service
        pid = create_project(client)
        resp = client.get(f"/projects/{pid}",
                          headers={"Origin": "http://localhost:5173"})
        assert resp.headers["access-control-allow-origin"] == "*"

    def test_full_stage_flow(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        project = client.get(f"/projects/{pid}").json()
        assert project["stages"]["script"] is True
        assert 4 <= len(project["scenes"]) <= 6

        run_stage(client, jobs, pid, "visuals")
        project = client.get(f"/projects/{pid}").json()
        assert project["styles"] and len(project["styles"]) == 3
        assert project["color"]["color_description"]
        scene0 = project["scenes"][0]
        assert len(scene0["images"]["candidates"]) == 4
        assert project["selections"]["images"]["0"] == \
            scene0["images"]["candidates"][0]

        run_stage(client, jobs, pid, "music")
        project = client.get(f"/projects/{pid}").json()
        assert project["mood_energy"] == 0.55  # palette default for the mood
        assert project["selections"]["song_id"]

        manifest = client.get(f"/projects/{pid}/manifest")
        assert manifest.status_code == 200
        body = manifest.json()
        assert body["song_id"] == project["selections"]["song_id"]
        assert len(body["scenes"]) == len(project["scenes"])

    def test_script_rerun_resets_downstream(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        run_stage(client, jobs, pid, "visuals")
        run_stage(client, jobs, pid, "music")
        run_stage(client, jobs, pid, "script")
        project = client.get(f"/projects/{pid}").json()
        assert project["stages"]["visuals"] is False
        assert project["stages"]["music"] is False
        assert project["styles"] is None
        assert project["selections"]["images"] == {}
        assert project["selections"]["song_id"] is None


class TestStageGuards:
    def test_visuals_requires_script(self, service):
        client, _, _ = service
        pid = create_project(client)
        assert client.post(f"/projects/{pid}/stages/visuals").status_code == 409
        assert client.post(f"/projects/{pid}/stages/music").status_code == 409

    def test_unknown_stage_404(self, service):
        client, _, _ = service
        pid = create_project(client)
        assert client.post(f"/projects/{pid}/stages/render").status_code == 404

    def test_busy_project_conflicts(self, tmp_path, catalog):
        gate = threading.Event()
        base = mock_provider_set()

        class GatedText:
            def generate_text(self, req):
                gate.wait(timeout=10)
                return base.text.generate_text(req)

        jobs = JobManager()
        app = create_app(ProjectStore(tmp_path / "p"),
                         ProviderSet(text=GatedText(), image=base.image,
                                     vision=base.vision),
                         catalog, jobs=jobs)
        client = TestClient(app)
        pid = create_project(client)
        first = client.post(f"/projects/{pid}/stages/script")
        assert first.status_code == 202
        second = client.post(f"/projects/{pid}/stages/script")
        assert second.status_code == 409
        assert second.json()["job_id"] == first.json()["id"]
        gate.set()
        assert jobs.wait(first.json()["id"]).status == "done"
        # free again once the job finished
        third = client.post(f"/projects/{pid}/stages/script")
        assert third.status_code == 202
        jobs.wait(third.json()["id"])
        jobs.shutdown()

    def test_job_endpoint(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        ticket = client.post(f"/projects/{pid}/stages/script").json()
        jobs.wait(ticket["id"])
        body = client.get(f"/jobs/{ticket['id']}").json()
        assert body["status"] == "done"
        assert body["project_id"] == pid
        assert client.get("/jobs/job_nope").status_code == 404


class TestUploads:
    def test_upload_with_description(self, service):
        client, _, _ = service
        pid = create_project(client)
        resp = client.post(f"/projects/{pid}/uploads", json={
            "image_b64": png_b64(), "description": "a cyclist at a dead end"})
        assert resp.status_code == 201
        body = resp.json()
        assert body["description"] == "a cyclist at a dead end"
        project = client.get(f"/projects/{pid}").json()
        assert project["uploads"][0]["id"] == body["id"]
        file_resp = client.get(f"/projects/{pid}/files/{body['path']}")
        assert file_resp.status_code == 200
        assert file_resp.headers["content-type"] == "image/png"

    def test_upload_auto_description_via_vision(self, service):
        client, _, _ = service
        pid = create_project(client)
        resp = client.post(f"/projects/{pid}/uploads",
                           json={"image_b64": png_b64((9, 9, 9))})
        assert resp.status_code == 201
        assert resp.json()["description"].startswith("a ")

    def test_upload_binds_into_script(self, tmp_path, catalog):
        # fix the vision caption so similarity is decisive, then check the
        # script stage hands the upload's wording to its best scene
        from moodreel.providers import ImageRef, MockVisionProvider

        raw = base64.b64decode(png_b64((1, 2, 3)))
        sha = ImageRef(raw).sha
        base = mock_provider_set()
        providers = ProviderSet(
            text=base.text, image=base.image,
            vision=MockVisionProvider(fixtures={sha: "a quiet street corner"}))
        jobs = JobManager()
        app = create_app(ProjectStore(tmp_path / "p"), providers, catalog,
                         jobs=jobs)
        client = TestClient(app)
        pid = create_project(client)
        up = client.post(f"/projects/{pid}/uploads",
                         json={"image_b64": png_b64((1, 2, 3))}).json()
        assert up["description"] == "a quiet street corner"
        run_stage(client, jobs, pid, "script")
        project = client.get(f"/projects/{pid}").json()
        bound = [s for s in project["scenes"] if s["upload_bound"] == up["id"]]
        assert len(bound) == 1
        assert bound[0]["image_description"] == "a quiet street corner"
        run_stage(client, jobs, pid, "visuals")
        project = client.get(f"/projects/{pid}").json()
        bound_scene = next(s for s in project["scenes"]
                           if s["upload_bound"] == up["id"])
        assert bound_scene["images"]["restyled"] is True
        jobs.shutdown()

    def test_patch_upload_description(self, service):
        client, _, _ = service
        pid = create_project(client)
        up = client.post(f"/projects/{pid}/uploads", json={
            "image_b64": png_b64(), "description": "before"}).json()
        resp = client.patch(f"/projects/{pid}/uploads/{up['id']}",
                            json={"description": "after"})
        assert resp.status_code == 200
        assert resp.json()["description"] == "after"
        assert client.patch(f"/projects/{pid}/uploads/up_nope",
                            json={"description": "x"}).status_code == 404

    def test_bad_upload_payloads(self, service):
        client, _, _ = service
        pid = create_project(client)
        assert client.post(f"/projects/{pid}/uploads",
                           json={"image_b64": "%%%"}).status_code == 400
        junk = base64.b64encode(b"plain text").decode()
        assert client.post(f"/projects/{pid}/uploads",
                           json={"image_b64": junk}).status_code == 400


class TestScenePatch:
    def test_text_edit_rescored(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        resp = client.patch(f"/projects/{pid}/scenes/0", json={
            "text": "A wonderful, safe ride for everyone."})
        assert resp.status_code == 200
        assert resp.json()["positivity"] > 50

    def test_description_edit_drops_images(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        run_stage(client, jobs, pid, "visuals")
        resp = client.patch(f"/projects/{pid}/scenes/0", json={
            "image_description": "an empty bike rack in the rain"})
        assert resp.status_code == 200
        assert resp.json()["images"] is None
        project = client.get(f"/projects/{pid}").json()
        assert "0" not in project["selections"]["images"]
        # other scenes keep theirs
        assert project["scenes"][1]["images"] is not None

    def test_duration_bounds(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        assert client.patch(f"/projects/{pid}/scenes/0",
                            json={"duration_s": 0}).status_code == 400
        assert client.patch(f"/projects/{pid}/scenes/0",
                            json={"duration_s": 46}).status_code == 400
        ok = client.patch(f"/projects/{pid}/scenes/0", json={"duration_s": 4.5})
        assert ok.status_code == 200
        assert ok.json()["duration_s"] == 4.5

    def test_empty_patch_rejected(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        assert client.patch(f"/projects/{pid}/scenes/0", json={}).status_code == 400

    def test_before_script_409_and_bad_index_404(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        assert client.patch(f"/projects/{pid}/scenes/0",
                            json={"text": "x"}).status_code == 409
        run_stage(client, jobs, pid, "script")
        assert client.patch(f"/projects/{pid}/scenes/99",
                            json={"text": "x"}).status_code == 404

    def test_regenerate(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        before = client.get(f"/projects/{pid}").json()["scenes"][1]
        resp = client.patch(f"/projects/{pid}/scenes/1", json={
            "regenerate": True, "goal": "spell out the fix", "positivity": 70})
        assert resp.status_code == 200
        after = resp.json()
        assert after["narrative_goal"] == "spell out the fix"
        assert after["text"] != before["text"]
        project = client.get(f"/projects/{pid}").json()
        assert project["revision"] > 1


class TestSelections:
    def test_select_candidates_and_song(self, service, catalog):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        run_stage(client, jobs, pid, "visuals")
        project = client.get(f"/projects/{pid}").json()
        want = project["scenes"][0]["images"]["candidates"][2]
        resp = client.post(f"/projects/{pid}/selections", json={
            "images": {"0": 2}, "song_id": catalog[0].id, "style": 1})
        assert resp.status_code == 200
        sel = resp.json()
        assert sel["images"]["0"] == want
        assert sel["song_id"] == catalog[0].id
        assert sel["style"] == 1

    def test_validation(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        assert client.post(f"/projects/{pid}/selections",
                           json={"images": {"0": 0}}).status_code == 409
        run_stage(client, jobs, pid, "visuals")
        assert client.post(f"/projects/{pid}/selections",
                           json={"images": {"0": 9}}).status_code == 400
        assert client.post(f"/projects/{pid}/selections",
                           json={"images": {"44": 0}}).status_code == 404
        assert client.post(f"/projects/{pid}/selections",
                           json={"song_id": "trk999"}).status_code == 400


class TestSongsEndpoint:
    def test_match_requires_music_stage(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        run_stage(client, jobs, pid, "script")
        assert client.get(f"/projects/{pid}/songs").status_code == 409
        run_stage(client, jobs, pid, "music")
        resp = client.get(f"/projects/{pid}/songs", params={"rank": "match"})
        assert resp.status_code == 200
        assert len(resp.json()["songs"]) == 8

    def test_popularity_any_time(self, service, catalog):
        client, _, _ = service
        pid = create_project(client)
        resp = client.get(f"/projects/{pid}/songs",
                          params={"rank": "popularity"})
        assert resp.status_code == 200
        pops = [s["popularity"] for s in resp.json()["songs"]]
        assert pops == sorted(pops, reverse=True)
        assert len(pops) == len(catalog)

    def test_match_unavailable_without_mood(self, service):
        client, jobs, _ = service
        pid = create_project(client, with_mood=False)
        run_stage(client, jobs, pid, "script")
        run_stage(client, jobs, pid, "music")
        assert client.get(f"/projects/{pid}/songs").status_code == 409
        assert client.get(f"/projects/{pid}/songs",
                          params={"rank": "popularity"}).status_code == 200

    def test_bad_rank_param(self, service):
        client, _, _ = service
        pid = create_project(client)
        assert client.get(f"/projects/{pid}/songs",
                          params={"rank": "zzz"}).status_code == 400


class TestManifestEndpoint:
    def test_gaps_then_complete(self, service):
        client, jobs, _ = service
        pid = create_project(client)
        resp = client.get(f"/projects/{pid}/manifest")
        assert resp.status_code == 409
        run_stage(client, jobs, pid, "script")
        resp = client.get(f"/projects/{pid}/manifest")
        assert resp.status_code == 409
        gaps = resp.json()["gaps"]
        assert any("song" in g for g in gaps)
        assert any("scene 0" in g for g in gaps)
        run_stage(client, jobs, pid, "visuals")
        run_stage(client, jobs, pid, "music")
        resp = client.get(f"/projects/{pid}/manifest")
        assert resp.status_code == 200
        assert resp.json()["over_length"] in (False, True)


class TestNoMoodProjects:
    def test_flow_without_mood(self, service):
        client, jobs, _ = service
        pid = create_project(client, with_mood=False)
        run_stage(client, jobs, pid, "script")
        run_stage(client, jobs, pid, "visuals")
        project = client.get(f"/projects/{pid}").json()
        assert project["styles"] is None
        assert project["color"] is None
        # plain baseline prompt, no style or color prefix
        prompt = project["scenes"][0]["images"]["prompt_used"]
        assert prompt.startswith("illustration of ")
        run_stage(client, jobs, pid, "music")
        project = client.get(f"/projects/{pid}").json()
        assert project["mood_energy"] is None
        assert project["selections"]["song_id"]


class TestJobManager:
    def test_error_jobs_carry_message(self):
        jobs = JobManager()

        def boom():
            raise RuntimeError("provider exploded")

        job = jobs.submit("proj_x", "script", boom)
        finished = jobs.wait(job.id)
        assert finished.status == "error"
        assert "provider exploded" in finished.error
        jobs.shutdown()

    def test_busy_raises(self):
        jobs = JobManager()
        gate = threading.Event()
        job = jobs.submit("proj_x", "script", lambda: gate.wait(5))
        with pytest.raises(ProjectBusyError):
            jobs.submit("proj_x", "visuals", lambda: None)
        # other projects unaffected
        other = jobs.submit("proj_y", "script", lambda: None)
        gate.set()
        assert jobs.wait(job.id).status == "done"
        assert jobs.wait(other.id).status == "done"
        jobs.shutdown()

    def test_wait_timeout(self):
        jobs = JobManager()
        gate = threading.Event()
        job = jobs.submit("proj_x", "script", lambda: gate.wait(5))
        with pytest.raises(TimeoutError):
            jobs.wait(job.id, timeout=0.05)
        gate.set()
        jobs.wait(job.id)
        jobs.shutdown()
