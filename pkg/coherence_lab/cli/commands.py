"""Command handlers.

Each handler takes the parsed arguments and returns the certificate plus
the human-readable lines to print. Library errors propagate to ``main``,
which maps them to exit codes.
"""

import argparse
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from coherence_lab.core.config import get_settings
from coherence_lab.schemas.certificate import Certificate, Verdict
from coherence_lab.schemas.matrix_file import MatrixKind
from coherence_lab.services.bipartite import (
    counterexample_23,
    is_maximally_entangled,
    make_mcs_max_entangled,
    max_entangled_phases,
    phase_matrix,
    result2_check,
    superadditivity_report,
)
from coherence_lab.services.channels import (
    classify_mcs_preservation,
    identity_mcs_decomposition,
    is_incoherent,
    is_unital,
    kraus_channel,
)
from coherence_lab.services.coherence import c_l1, c_re, is_mcs, make_mcs
from coherence_lab.services.linalg import frobenius
from coherence_lab.services.states import density_matrix, reduced_states
from coherence_lab.storage.files import (
    digest,
    encode_matrix,
    matrices,
    read_matrix_file,
    to_matrix_file,
    write_matrix_file,
)


@dataclass
class CommandResult:
    """Certificate plus the lines shown to a human reader."""

    certificate: Certificate
    lines: list[str] = field(default_factory=list)


def _tol(args: argparse.Namespace) -> float:
    return get_settings().TOL if args.tol is None else args.tol


def _seed(args: argparse.Namespace) -> int:
    return get_settings().SEED if args.seed is None else args.seed


def _render(verdicts: dict[str, Verdict]) -> list[str]:
    width = max((len(key) for key in verdicts), default=0)
    lines = []
    for key, value in verdicts.items():
        if isinstance(value, float):
            shown = f"{value:.15g}"
        elif isinstance(value, list):
            shown = "[" + ", ".join(f"{v:.15g}" for v in value) + "]"
        else:
            shown = str(value)
        lines.append(f"{key.ljust(width)}  {shown}")
    return lines


def _result(
    command: str,
    tol: float,
    verdicts: dict[str, Verdict],
    *,
    inputs: dict[str, str] | None = None,
    parameters: dict[str, Verdict] | None = None,
    witnesses: dict[str, list[list[list[float]]]] | None = None,
    extra_lines: list[str] | None = None,
) -> CommandResult:
    certificate = Certificate(
        command=command,
        inputs=inputs or {},
        parameters=parameters or {},
        verdicts=verdicts,
        witnesses=witnesses,
        tol=tol,
    )
    return CommandResult(certificate, [f"# {command}", *_render(verdicts), *(extra_lines or [])])


def _write_state(path: Path, mat: np.ndarray) -> str:
    write_matrix_file(path, to_matrix_file(MatrixKind.STATE, [mat]))
    return f"wrote {path}"


def cmd_coherence(args: argparse.Namespace) -> CommandResult:
    """Coherence of a state file with its MCS verdict."""
    tol = _tol(args)
    path = Path(args.state_file)
    document = read_matrix_file(path, MatrixKind.STATE)
    rho = density_matrix(matrices(document)[0], tol)
    report = is_mcs(rho)
    if args.measure == "l1":
        value, bound = c_l1(rho), float(rho.dim - 1)
    else:
        value, bound = report.value, report.max_possible
    verdicts: dict[str, Verdict] = {
        "measure": args.measure,
        "dim": rho.dim,
        "value": value,
        "max_possible": bound,
        "is_mcs": report.is_mcs,
    }
    if report.witness_phases is not None:
        verdicts["witness_phases"] = list(report.witness_phases)
    return _result(
        "coherence", tol, verdicts,
        inputs={str(path): digest(path)},
        parameters={"measure": args.measure},
    )


def cmd_superadd(args: argparse.Namespace) -> CommandResult:
    """Super-additivity report of a bipartite state file."""
    tol = _tol(args)
    path = Path(args.state_file)
    rho = density_matrix(matrices(read_matrix_file(path, MatrixKind.STATE))[0], tol)
    report = superadditivity_report(rho, args.da, args.db)
    verdicts: dict[str, Verdict] = report.model_dump(exclude={"tol"})
    return _result(
        "superadd", tol, verdicts,
        inputs={str(path): digest(path)},
        parameters={"da": args.da, "db": args.db},
    )


def cmd_counterexample(args: argparse.Namespace) -> CommandResult:
    """The 2 x 3 phase state at the given theta."""
    tol = _tol(args)
    theta = args.theta
    rho, report = counterexample_23(theta)
    rho_a, rho_b = reduced_states(rho, 2, 3)
    k = np.arange(3)
    displayed_a = 0.5 * np.exp(3j * theta * (np.arange(2)[:, None] - np.arange(2)[None, :]))
    displayed_b = np.exp(1j * theta * (k[:, None] - k[None, :])) / 3.0
    verdicts: dict[str, Verdict] = report.model_dump(exclude={"tol"})
    verdicts["rho_a_residual"] = float(np.max(np.abs(rho_a.mat - displayed_a)))
    verdicts["rho_b_residual"] = float(np.max(np.abs(rho_b.mat - displayed_b)))
    verdicts["rho_a_is_mcs"] = is_mcs(rho_a).is_mcs
    verdicts["rho_b_is_mcs"] = is_mcs(rho_b).is_mcs
    extra = [_write_state(Path(args.out), rho.mat)] if args.out else []
    return _result(
        "counterexample", tol, verdicts,
        parameters={"theta": theta},
        witnesses={"rho_a": encode_matrix(rho_a.mat), "rho_b": encode_matrix(rho_b.mat)},
        extra_lines=extra,
    )


def cmd_entangled_mcs(args: argparse.Namespace) -> CommandResult:
    """Maximally coherent and maximally entangled state on d x d."""
    tol = _tol(args)
    d = args.d
    rho = make_mcs_max_entangled(d)
    rho_a, _ = reduced_states(rho, d, d)
    report = is_mcs(rho)
    verdicts: dict[str, Verdict] = {
        "d": d,
        "c_re": report.value,
        "max_possible": report.max_possible,
        "is_mcs": report.is_mcs,
        "reduced_residual": frobenius(rho_a.mat - np.eye(d) / d),
        "maximally_entangled": is_maximally_entangled(rho, d, d, tol),
    }
    theta = max_entangled_phases(d).normalized().theta
    extra = [_write_state(Path(args.out), rho.mat)] if args.out else []
    return _result(
        "entangled-mcs", tol, verdicts,
        parameters={"d": d},
        witnesses={"phases": encode_matrix(theta)},
        extra_lines=extra,
    )


def cmd_identity_decomp(args: argparse.Namespace) -> CommandResult:
    """Identity as a sum of d MCS projectors."""
    tol = _tol(args)
    d = args.d
    states = identity_mcs_decomposition(d)
    total = sum((phi.projector() for phi in states), start=np.zeros((d, d), dtype=np.complex128))
    verdicts: dict[str, Verdict] = {
        "d": d,
        "residual": frobenius(total - np.eye(d)),
        "all_mcs": all(is_mcs(density_matrix(phi.projector(), tol)).is_mcs for phi in states),
    }
    extra = []
    if args.out:
        out_dir = Path(args.out)
        for j, phi in enumerate(states, start=1):
            extra.append(_write_state(out_dir / f"phi_{j}.json", phi.projector()))
    return _result("identity-decomp", tol, verdicts, parameters={"d": d}, extra_lines=extra)


def cmd_channel(args: argparse.Namespace) -> CommandResult:
    """Incoherence, unitality and (optionally) MCS preservation of a Kraus set."""
    tol = _tol(args)
    path = Path(args.kraus_file)
    ch = kraus_channel(matrices(read_matrix_file(path, MatrixKind.KRAUS_SET)), tol)
    incoherence = is_incoherent(ch)
    verdicts: dict[str, Verdict] = {
        "dim": ch.d,
        "kraus_terms": len(ch),
        "incoherent": incoherence.incoherent,
        "unital": is_unital(ch, tol),
    }
    parameters: dict[str, Verdict] = {"classify": args.classify}
    witnesses = None
    if args.classify:
        samples = args.samples or get_settings().MONTE_CARLO_SAMPLES
        seed = _seed(args)
        parameters.update({"samples": samples, "seed": seed})
        result = classify_mcs_preservation(
            ch, samples, rng=np.random.default_rng(seed), tol=tol
        )
        verdicts["preserves_mcs"] = result.preserves_mcs
        verdicts["factorized"] = result.factors is not None
        if result.witness is not None:
            verdicts["witness_phases"] = [float(t) for t in result.witness.input_phases]
            verdicts["coherence_drop"] = result.witness.coherence_drop
            witnesses = {"output_state": encode_matrix(result.witness.output_state.mat)}
    return _result(
        "channel", tol, verdicts,
        inputs={str(path): digest(path)},
        parameters=parameters,
        witnesses=witnesses,
    )


def cmd_mcs_make(args: argparse.Namespace) -> CommandResult:
    """Build U|psi_d> from a phase vector."""
    tol = _tol(args)
    phases = [float(t) for t in args.phases]
    rho = make_mcs(phases, len(phases))
    report = is_mcs(rho)
    verdicts: dict[str, Verdict] = {
        "dim": rho.dim,
        "c_re": c_re(rho),
        "max_possible": math.log2(rho.dim),
        "is_mcs": report.is_mcs,
    }
    extra = [_write_state(Path(args.out), rho.mat)] if args.out else []
    return _result("mcs-make", tol, verdicts, parameters={"phases": phases}, extra_lines=extra)


def cmd_result2(args: argparse.Namespace) -> CommandResult:
    """Equality, product and phase-separability verdicts for a square phase table."""
    tol = _tol(args)
    path = Path(args.phase_file)
    table = matrices(read_matrix_file(path, MatrixKind.PHASE_MATRIX))[0]
    equality, is_product, consistent = result2_check(phase_matrix(np.real(table)))
    verdicts: dict[str, Verdict] = {
        "equality": equality,
        "is_product": is_product,
        "phases_consistent": consistent,
    }
    return _result("result2", tol, verdicts, inputs={str(path): digest(path)})
