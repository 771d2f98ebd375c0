"""HTTP service, project store, and CLI."""

from .api import create_app
from .jobs import Job, JobManager, ProjectBusyError
from .stages import StageOrderError, run_music_stage, run_script_stage, run_visuals_stage
from .store import ProjectNotFoundError, ProjectStore, StoreError, atomic_write_bytes

__all__ = [
    "Job",
    "JobManager",
    "ProjectBusyError",
    "ProjectNotFoundError",
    "ProjectStore",
    "StageOrderError",
    "StoreError",
    "atomic_write_bytes",
    "create_app",
    "run_music_stage",
    "run_script_stage",
    "run_visuals_stage",
]
