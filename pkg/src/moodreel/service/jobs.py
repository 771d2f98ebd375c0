"""Background job tickets for stage runs.

One pool, one active job per project. Submitting a second job for a project
while one is queued or running raises ProjectBusyError, which the API maps
to a conflict response.
"""

from __future__ import annotations

import secrets
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

ACTIVE_STATES = ("queued", "running")


class ProjectBusyError(Exception):
    def __init__(self, project_id: str, job_id: str):
        self.project_id = project_id
        self.job_id = job_id
        super().__init__(f"project {project_id} already has active job {job_id}")


@dataclass
class Job:
    id: str
    project_id: str
    kind: str
    status: str = "queued"
    error: str | None = None
    created_at: float = field(default_factory=time.time)
    finished_at: float | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "project_id": self.project_id,
            "kind": self.kind,
            "status": self.status,
            "error": self.error,
        }


class JobManager:
    def __init__(self, workers: int = 4):
        self._pool = ThreadPoolExecutor(max_workers=workers,
                                        thread_name_prefix="stage")
        self._jobs: dict[str, Job] = {}
        self._lock = threading.Lock()

    def submit(self, project_id: str, kind: str, fn: Callable[[], None]) -> Job:
        with self._lock:
            for job in self._jobs.values():
                if job.project_id == project_id and job.status in ACTIVE_STATES:
                    raise ProjectBusyError(project_id, job.id)
            job = Job(id="job_" + secrets.token_hex(6), project_id=project_id,
                      kind=kind)
            self._jobs[job.id] = job
        self._pool.submit(self._run, job.id, fn)
        return job

    def _run(self, job_id: str, fn: Callable[[], None]) -> None:
        with self._lock:
            job = self._jobs[job_id]
            job.status = "running"
        try:
            fn()
        except Exception as exc:  # job errors surface via the ticket
            with self._lock:
                job.status = "error"
                job.error = str(exc) or exc.__class__.__name__
                job.finished_at = time.time()
        else:
            with self._lock:
                job.status = "done"
                job.finished_at = time.time()

    def get(self, job_id: str) -> Job | None:
        with self._lock:
            return self._jobs.get(job_id)

    def wait(self, job_id: str, timeout: float = 30.0) -> Job:
        """Poll a job to completion; mainly for tests and the CLI."""
        deadline = time.monotonic() + timeout
        while time.monotonic() < deadline:
            job = self.get(job_id)
            if job is None:
                raise KeyError(job_id)
            if job.status not in ACTIVE_STATES:
                return job
            time.sleep(0.01)
        raise TimeoutError(f"job {job_id} still active after {timeout}s")

    def shutdown(self) -> None:
        self._pool.shutdown(wait=True)
