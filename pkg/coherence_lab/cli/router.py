"""Sub-command registration."""

import argparse
from collections.abc import Callable

from coherence_lab.cli import commands

Handler = Callable[[argparse.Namespace], commands.CommandResult]


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def add_global_options(parser: argparse.ArgumentParser, *, suppress: bool = False) -> None:
    """Options shared by every command.
    
    Sub-parsers register them with ``suppress`` so a flag given before the
    verb is not reset by the sub-parser default.
    """
    unset = argparse.SUPPRESS if suppress else None
    flag = argparse.SUPPRESS if suppress else False
    parser.add_argument(
        "--tol", type=_positive_float, default=unset,
        help="validation tolerance (default: COHERENCE_LAB_TOL)",
    )
    parser.add_argument(
        "--seed", type=int, default=unset,
        help="random seed for sampled MCSs (default: COHERENCE_LAB_SEED)",
    )
    parser.add_argument(
        "--json", action="store_true", default=flag, help="print the certificate as JSON"
    )
    parser.add_argument(
        "--verbose", action="store_true", default=flag, help="log at DEBUG level to stderr"
    )


def register_commands(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    """Attach every command with its handler under ``handler``."""
    
    def add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text, description=handler.__doc__)
        add_global_options(sub, suppress=True)
        sub.set_defaults(handler=handler)
        return sub
    
    sub = add("coherence", commands.cmd_coherence, "coherence of a state and its MCS verdict")
    sub.add_argument("state_file")
    sub.add_argument("--measure", choices=("re", "l1"), default="re")
    
    sub = add("superadd", commands.cmd_superadd, "super-additivity of a bipartite state")
    sub.add_argument("state_file")
    sub.add_argument("--da", type=_positive_int, required=True)
    sub.add_argument("--db", type=_positive_int, required=True)
    
    sub = add("counterexample", commands.cmd_counterexample, "2 x 3 phase state at theta")
    sub.add_argument("--theta", type=float, required=True)
    sub.add_argument("--out", help="write the state to this file")
    
    sub = add("entangled-mcs", commands.cmd_entangled_mcs, "maximally coherent entangled state")
    sub.add_argument("--d", type=_positive_int, required=True)
    sub.add_argument("--out", help="write the state to this file")
    
    sub = add("identity-decomp", commands.cmd_identity_decomp, "identity as d MCS projectors")
    sub.add_argument("--d", type=_positive_int, required=True)
    sub.add_argument("--out", help="directory for phi_1.json ... phi_d.json")
    
    sub = add("channel", commands.cmd_channel, "incoherence, unitality and MCS preservation")
    sub.add_argument("kraus_file")
    sub.add_argument("--classify", action="store_true", help="decide MCS preservation")
    sub.add_argument("--samples", type=_positive_int, default=None)
    
    sub = add("mcs-make", commands.cmd_mcs_make, "MCS with the given phases")
    sub.add_argument("--phases", type=float, nargs="+", required=True)
    sub.add_argument("--out", help="write the state to this file")
    
    sub = add("result2", commands.cmd_result2, "equality and product verdicts for a phase table")
    sub.add_argument("phase_file")
