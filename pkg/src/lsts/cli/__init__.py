"""Command-line interface"""

from .commands import CommandResult, UsageError
from .main import build_parser, main, run
from .recorder import RunRecorder
from .schemas import SCHEMA_VERSION, RunManifest

__all__ = [
    "CommandResult",
    "RunManifest",
    "RunRecorder",
    "SCHEMA_VERSION",
    "UsageError",
    "build_parser",
    "main",
    "run",
]
