"""Subcommand handlers

Each handler takes the parsed arguments and the loaded config and returns a
CommandResult; nothing here writes to standard output directly, so the
recorder can digest exactly what the user sees.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List

from ..bounds import (
    analytic_upper_bounds,
    audit_five_three,
    audit_injection,
    audit_six_four,
    averaging_bound,
    classify_triples,
    five_three_program,
    random_lower_exponent,
    six_four_program,
    solve_lp,
    verify_certificate,
)
from ..checker import ConfigFinder, ForbiddenFamily
from ..construct import GreedyPacker, lift
from ..core import SparseTripleLab
from ..exceptions import LSTSError
from ..hypergraph import codegree_profile, read_file, write_file, write_system
from ..metrics import DensityMetrics
from ..oracle import ExtremalSearch, verify_extremal
from .schemas import (
    BoundsResult,
    CheckResult,
    ConstructSidecar,
    OracleOutput,
    ReportEnvelope,
    WitnessModel,
)


class UsageError(LSTSError):
    """Bad or missing command-line flag"""

    def __init__(self, flag: str, message: str):
        self.flag = flag
        super().__init__(f"{flag}: {message}")


@dataclass
class CommandResult:
    exit_code: int
    stdout: str
    inputs: List[Path] = field(default_factory=list)
    outputs: List[Path] = field(default_factory=list)


def _dump(model) -> str:
    return model.model_dump_json(indent=2) + "\n"


def _lines(*lines: str) -> str:
    return "\n".join(lines) + "\n"


def cmd_construct(args, config: Dict) -> CommandResult:
    if args.t < 1:
        raise UsageError("--t", f"must be at least 1, got {args.t}")
    if Path(args.out).suffix == ".json":
        raise UsageError("--out", "a .json path would collide with the summary written next to the system")
    packer = GreedyPacker(config.get("packing", {}))
    packing = packer.pack(args.n, args.t, args.seed, budget=args.budget, cascade=args.cascade)
    g = lift(args.n, packing)

    out = Path(args.out)
    sidecar_path = out.with_suffix(".json")
    density = DensityMetrics.density(g)
    sidecar = ConstructSidecar(
        n=args.n,
        t=args.t,
        seed=args.seed,
        budget=packing.budget,
        cascade=bool(args.cascade if args.cascade is not None else packer.cascade),
        copies=packing.copies,
        coverage=float(packing.coverage),
        coverage_exact=str(packing.coverage),
        edges=g.num_edges,
        density=float(density),
        density_exact=str(density),
        warning=packing.warning,
    )
    write_file(g, out)
    sidecar_path.write_text(_dump(sidecar))

    if args.json:
        text = _dump(sidecar)
    else:
        text = _lines(
            f"wrote {out} ({g.num_edges} triples from {packing.copies} copies of H_{args.t})",
            f"coverage: {float(packing.coverage):.6f}",
            f"density: {density} ({float(density):.6f})",
        )
    return CommandResult(0, text, outputs=[out, sidecar_path])


def _family(args) -> ForbiddenFamily:
    if args.family:
        if args.k is not None or args.s is not None:
            raise UsageError("--family", "cannot be combined with --k/--s")
        try:
            return ForbiddenFamily.parse(args.family)
        except ValueError as exc:
            raise UsageError("--family", str(exc))
    if args.k is None or args.s is None:
        raise UsageError("--k/--s", "give both --k and --s, or one or more --family K,S")
    return ForbiddenFamily.of((args.k, args.s))


def cmd_check(args, config: Dict) -> CommandResult:
    family = _family(args)
    g = read_file(args.file)
    free, witness = ConfigFinder(config.get("checker", {})).is_free(g, family)

    if args.json:
        result = CheckResult(
            n=g.n,
            edges=g.num_edges,
            family=[[k, s] for k, s in family],
            free=free,
            witness=WitnessModel(**witness.to_dict()) if witness else None,
        )
        text = _dump(result)
    elif free:
        text = _lines("free")
    else:
        text = _lines("not free", f"F({witness.k},{witness.s}):", *witness.lines())
    return CommandResult(0 if free else 1, text, inputs=[Path(args.file)])


def cmd_profile(args, config: Dict) -> CommandResult:
    g = read_file(args.file)
    profile = codegree_profile(g)
    if args.json:
        text = _dump(ReportEnvelope(command="profile", passed=profile.handshake, report=profile.to_dict()))
    else:
        data = profile.to_dict()
        lines = [
            f"n: {profile.n}",
            f"edges: {profile.edges}",
            f"max codegree: {profile.max_codegree}",
            f"linear: {str(profile.linear).lower()}",
        ]
        for label, count in data["counts"].items():
            lines.append(f"class {label}: {count} ({data['fractions'][label]} of pairs, {data['normalized'][label]} n^2)")
        lines.append(f"distance to extremal (5,3) profile: {profile.extremal_distance}")
        text = _lines(*lines)
    return CommandResult(0, text, inputs=[Path(args.file)])


def cmd_oracle(args, config: Dict) -> CommandResult:
    oracle_config = dict(config.get("oracle", {}))
    if args.any_witness:
        oracle_config["any_witness"] = True
    search = ExtremalSearch(oracle_config)
    result = search.exact_f(args.n, args.k, args.s, upper_hint=args.upper_hint)
    verified = verify_extremal(result, ConfigFinder(config.get("checker", {})))
    bounds = analytic_upper_bounds(result.n, result.k, result.s)

    if args.json:
        text = _dump(OracleOutput(
            n=result.n,
            k=result.k,
            s=result.s,
            value=result.value,
            nodes=result.nodes,
            verified=verified,
            witness=write_system(result.witness),
            diagnostics=result.diagnostics,
            upper_bounds={name: str(b) for name, b in bounds.items()},
            random_lower_exponent=str(random_lower_exponent(result.k, result.s)),
        ))
    else:
        text = _lines(
            f"value: {result.value}",
            f"nodes: {result.nodes}",
            f"verified: {str(verified).lower()}",
        ) + write_system(result.witness)
    return CommandResult(0 if verified else 1, text)


def cmd_bounds(args, config: Dict) -> CommandResult:
    if args.problem == "averaging":
        if args.n is None or args.k is None:
            raise UsageError("--n/--k", "the averaging bound needs both --n and --k")
        bound = averaging_bound(args.n, args.k)
        result = BoundsResult(problem="averaging", value=str(bound.value), trivial_cap=str(bound.trivial_cap))
        text = _lines(f"value: {bound.value}", f"trivial cap: {bound.trivial_cap}")
    else:
        if args.problem == "five-three":
            lp = five_three_program(args.b)
        else:
            lp = six_four_program()
        cert = solve_lp(lp)
        verified = verify_certificate(lp, cert)
        payload = cert.to_dict()
        result = BoundsResult(
            problem=args.problem,
            value=payload["value"],
            primal=payload["primal"],
            dual=payload["dual"],
            verified=verified,
        )
        text = _lines(
            f"value: {cert.value}",
            "primal: " + " ".join(f"{k}={v}" for k, v in payload["primal"].items()),
            "dual: " + " ".join(payload["dual"]),
            f"verified: {str(verified).lower()}",
        )
    if args.json:
        text = _dump(result)
    return CommandResult(0 if result.verified else 1, text)


AUDITS: Dict[str, Callable] = {
    "five-three": audit_five_three,
    "six-four": audit_six_four,
    "injection": audit_injection,
}


def cmd_analyze(args, config: Dict) -> CommandResult:
    g = read_file(args.file)
    if args.audit == "classify":
        classification = classify_triples(g)
        envelope = ReportEnvelope(command="analyze", passed=True, report=classification.to_dict())
    else:
        report = AUDITS[args.audit](g, ConfigFinder(config.get("checker", {})))
        envelope = ReportEnvelope(command="analyze", passed=report.passed, report=report.to_dict())
    return CommandResult(0 if envelope.passed else 1, _dump(envelope), inputs=[Path(args.file)])


def _sizes(raw: str) -> List[int]:
    try:
        sizes = [int(v) for v in raw.split(",") if v.strip()]
    except ValueError:
        raise UsageError("--sweep", f"expected comma-separated integers, got {raw!r}")
    if not sizes:
        raise UsageError("--sweep", "no sizes given")
    return sizes


def cmd_reproduce(args, config: Dict) -> CommandResult:
    if (args.t is None) == (args.eps is None) and not args.sweep:
        raise UsageError("--t/--eps", "give exactly one of --t and --eps")
    lab = SparseTripleLab(config)

    if args.sweep:
        if args.t is None:
            raise UsageError("--t", "a sweep runs at fixed --t")
        df = lab.trajectory(_sizes(args.sweep), args.t, args.seed, budget=args.budget, cascade=args.cascade)
        outputs = []
        if args.out:
            out = Path(args.out)
            out.parent.mkdir(parents=True, exist_ok=True)
            df.to_csv(out, index=False)
            outputs.append(out)
        passed = bool(df["free"].all() and df["audit_passed"].all() and df["below_cap"].all())
        if args.json:
            text = json.dumps({"rows": json.loads(df.to_json(orient="records")), "passed": passed}, indent=2) + "\n"
        else:
            text = df.to_string(index=False) + "\n"
        return CommandResult(0 if passed else 1, text, outputs=outputs)

    if args.n is None:
        raise UsageError("--n", "required unless --sweep is given")
    report = lab.reproduce(args.n, args.seed, t=args.t, eps=args.eps, budget=args.budget, cascade=args.cascade)
    if args.json:
        text = _dump(ReportEnvelope(command="reproduce", passed=report.passed, report=report.to_dict()))
    else:
        data = report.to_dict()
        keys = ["n", "t", "seed", "copies", "coverage", "edges", "density", "steiner_density", "cap",
                "free", "audit_passed", "profile_matches"]
        if report.eps is not None:
            keys += ["eps", "target_density", "guaranteed_copies"]
        text = _lines(*(f"{key}: {data[key]}" for key in keys))
    return CommandResult(0 if report.passed else 1, text)


def handlers() -> Dict[str, Callable]:
    return {
        "construct": cmd_construct,
        "check": cmd_check,
        "profile": cmd_profile,
        "oracle": cmd_oracle,
        "bounds": cmd_bounds,
        "analyze": cmd_analyze,
        "reproduce": cmd_reproduce,
    }
