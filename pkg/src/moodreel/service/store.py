"""Crash-safe file store for projects.

One directory per project holding project.json plus blob files (uploaded
images, generated candidates). Record writes go through a temp file, fsync,
and os.replace, so a reader never sees a half-written record even if the
writer dies mid-write. Mutations take a per-project thread lock plus a file
lock, and bump a revision counter on every commit.
"""

from __future__ import annotations

import copy
import json
import os
import secrets
import tempfile
import threading
from pathlib import Path
from typing import Callable

from filelock import FileLock

PROJECT_FILE = "project.json"


class StoreError(Exception):
    pass


class ProjectNotFoundError(StoreError):
    def __init__(self, project_id: str):
        self.project_id = project_id
        super().__init__(f"no such project: {project_id}")


def atomic_write_bytes(target: Path, data: bytes) -> None:
    """Write so the target is either the old content or the new, never a mix."""
    fd, tmp_name = tempfile.mkstemp(dir=target.parent, prefix=".tmp-")
    tmp = Path(tmp_name)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, target)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


class ProjectStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._thread_locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def _dir(self, project_id: str) -> Path:
        # ids are generated here; reject anything path-like from callers
        if not project_id or "/" in project_id or project_id.startswith("."):
            raise ProjectNotFoundError(project_id)
        return self.root / project_id

    def _record_path(self, project_id: str) -> Path:
        return self._dir(project_id) / PROJECT_FILE

    def _thread_lock(self, project_id: str) -> threading.Lock:
        with self._guard:
            return self._thread_locks.setdefault(project_id, threading.Lock())

    def _file_lock(self, project_id: str) -> FileLock:
        return FileLock(str(self._dir(project_id) / ".lock"))

    def create(self, data: dict) -> dict:
        project_id = "proj_" + secrets.token_hex(6)
        pdir = self._dir(project_id)
        pdir.mkdir(parents=True)
        record = dict(copy.deepcopy(data))
        record["id"] = project_id
        record["revision"] = 1
        self._write_record(project_id, record)
        return record

    def read(self, project_id: str) -> dict:
        path = self._record_path(project_id)
        try:
            raw = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise ProjectNotFoundError(project_id) from None
        return json.loads(raw)

    def mutate(self, project_id: str, fn: Callable[[dict], dict]) -> dict:
        """Apply fn to a copy of the record and commit it at revision + 1.

        fn may return a new dict or mutate its argument in place and return
        it. id and revision are managed here; fn cannot move them.
        """
        with self._thread_lock(project_id), self._file_lock(project_id):
            current = self.read(project_id)
            updated = fn(copy.deepcopy(current))
            if updated is None:
                raise StoreError("mutation returned None")
            updated["id"] = project_id
            updated["revision"] = current["revision"] + 1
            self._write_record(project_id, updated)
            return updated

    def _write_record(self, project_id: str, record: dict) -> None:
        payload = (json.dumps(record, indent=2, sort_keys=True) + "\n").encode()
        atomic_write_bytes(self._record_path(project_id), payload)

    def exists(self, project_id: str) -> bool:
        try:
            return self._record_path(project_id).exists()
        except ProjectNotFoundError:
            return False

    def list_projects(self) -> list[str]:
        if not self.root.exists():
            return []
        return sorted(p.name for p in self.root.iterdir()
                      if (p / PROJECT_FILE).exists())

    def _blob_path(self, project_id: str, relpath: str) -> Path:
        pdir = self._dir(project_id).resolve()
        target = (pdir / relpath).resolve()
        if not target.is_relative_to(pdir) or target == pdir:
            raise StoreError(f"blob path escapes project: {relpath!r}")
        return target

    def write_blob(self, project_id: str, relpath: str, data: bytes) -> None:
        if not self.exists(project_id):
            raise ProjectNotFoundError(project_id)
        target = self._blob_path(project_id, relpath)
        target.parent.mkdir(parents=True, exist_ok=True)
        atomic_write_bytes(target, data)

    def read_blob(self, project_id: str, relpath: str) -> bytes:
        target = self._blob_path(project_id, relpath)
        try:
            return target.read_bytes()
        except FileNotFoundError:
            raise StoreError(f"no such blob: {relpath!r}") from None

    def new_upload_id(self) -> str:
        return "up_" + secrets.token_hex(4)
