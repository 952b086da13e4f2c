"""Run recording: dispatch subcommands and emit a manifest for each run"""

import hashlib
import time
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from .. import __version__
from .commands import CommandResult, handlers
from .schemas import RunManifest

# argparse bookkeeping that is not a run parameter
_INTERNAL_ARGS = {"command", "manifest_out", "verbose"}


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def sha256_file(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def digests(paths: List[Path]) -> Dict[str, str]:
    return {str(p): sha256_file(p) for p in paths if p.exists()}


def strip_manifest_flag(argv: List[str]) -> List[str]:
    """Drop --manifest-out so a replayed run does not overwrite its own manifest"""
    out: List[str] = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token == "--manifest-out":
            skip = True
            continue
        if token.startswith("--manifest-out="):
            continue
        out.append(token)
    return out


class RunRecorder:
    """
    Subcommand dispatcher with a manifest trail

    Every call runs one handler, digests its inputs, outputs and standard
    output, and records a RunManifest. The manifest goes to the log as a single
    line and, when requested, to a JSON file.
    """

    def __init__(self, config: Dict):
        self.config = config
        self.commands = handlers()
        self.manifests: List[RunManifest] = []

    def call(self, args, argv: List[str]) -> Tuple[CommandResult, RunManifest]:
        if args.command not in self.commands:
            raise ValueError(f"Unknown subcommand: {args.command}")

        logger.debug(f"lsts {args.command}")
        started_at = datetime.now(timezone.utc).isoformat()
        started = time.perf_counter()

        result = self.commands[args.command](args, self.config)

        manifest = RunManifest(
            version=__version__,
            subcommand=args.command,
            argv=strip_manifest_flag(argv),
            params=self._params(args),
            inputs=digests(result.inputs),
            outputs=digests(result.outputs),
            stdout_sha256=sha256_bytes(result.stdout.encode()),
            exit_code=result.exit_code,
            started_at=started_at,
            finished_at=datetime.now(timezone.utc).isoformat(),
            elapsed=round(time.perf_counter() - started, 6),
        )
        self._record(manifest, getattr(args, "manifest_out", None))
        return result, manifest

    @staticmethod
    def _params(args) -> Dict[str, Any]:
        params = {}
        for key, value in sorted(vars(args).items()):
            if key in _INTERNAL_ARGS or callable(value):
                continue
            params[key] = str(value) if isinstance(value, (Fraction, Path)) else value
        return params

    def _record(self, manifest: RunManifest, path: Optional[str]) -> None:
        self.manifests.append(manifest)
        logger.info(f"manifest {manifest.model_dump_json()}")
        if path:
            out = Path(path)
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(manifest.model_dump_json(indent=2) + "\n")


def load_manifest(path: Path) -> RunManifest:
    return RunManifest.model_validate_json(Path(path).read_text())


def compare_runs(recorded: RunManifest, replayed: RunManifest) -> List[str]:
    """Differences between a recorded run and its replay; empty when identical"""
    problems = []
    for name, digest in recorded.inputs.items():
        if replayed.inputs.get(name) != digest:
            problems.append(f"{name}: input changed since the recorded run")
    if recorded.exit_code != replayed.exit_code:
        problems.append(f"exit code {recorded.exit_code} -> {replayed.exit_code}")
    if recorded.stdout_sha256 != replayed.stdout_sha256:
        problems.append("standard output differs")
    for name, digest in recorded.outputs.items():
        now = replayed.outputs.get(name)
        if now is None:
            problems.append(f"{name}: not written")
        elif now != digest:
            problems.append(f"{name}: contents differ")
    return problems
