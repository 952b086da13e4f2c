"""JSON payloads printed by the CLI and the run manifest"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class WitnessModel(BaseModel):
    """s edges spanning at most k vertices"""
    k: int
    s: int
    edges: List[List[int]]
    span: List[int]
    k_spanned: int


class CheckResult(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    edges: int
    family: List[List[int]]
    free: bool
    witness: Optional[WitnessModel] = None


class ConstructSidecar(BaseModel):
    """Summary written next to every constructed .3g file"""
    schema_version: int = SCHEMA_VERSION
    n: int
    t: int
    seed: int
    budget: int
    cascade: bool
    copies: int
    coverage: float
    coverage_exact: str
    edges: int
    density: float
    density_exact: str
    warning: Optional[str] = None


class BoundsResult(BaseModel):
    schema_version: int = SCHEMA_VERSION
    problem: str
    value: str
    primal: Dict[str, str] = Field(default_factory=dict)
    dual: List[str] = Field(default_factory=list)
    verified: bool = True
    trivial_cap: Optional[str] = None


class OracleOutput(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    k: int
    s: int
    value: int
    nodes: int
    verified: bool
    witness: str
    diagnostics: List[str] = Field(default_factory=list)
    upper_bounds: Dict[str, str] = Field(default_factory=dict)
    random_lower_exponent: Optional[str] = None


class ReportEnvelope(BaseModel):
    """Versioned wrapper for profile, analyze and reproduce reports"""
    schema_version: int = SCHEMA_VERSION
    command: str
    passed: bool
    report: Dict[str, Any]


class RunManifest(BaseModel):
    """Everything needed to replay one CLI run and compare its outputs"""
    schema_version: int = SCHEMA_VERSION
    tool: str = "lsts"
    version: str
    subcommand: str
    argv: List[str]
    params: Dict[str, Any]
    inputs: Dict[str, str] = Field(default_factory=dict)
    outputs: Dict[str, str] = Field(default_factory=dict)
    stdout_sha256: str
    exit_code: int
    started_at: str
    finished_at: str
    elapsed: float
