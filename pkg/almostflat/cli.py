"""
    @file:              cli.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       Command line entry point. Every subcommand prints a JSON report on standard output and exits
                        with 0 when its check passes, 2 when a check fails or a threshold is refused and 1 on
                        malformed input.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, NamedTuple, Optional

import numpy as np

from .bundle import cocycle_check, flatness_audit
from .chern_karea import TORUS_TREE, chern_number, clock_shift_probe, probe_verdict
from .config import Settings
from .errors import AlmostFlatError, ComplexError, PreconditionError, ThresholdError
from .fixtures import (
    filled_square,
    monopole_bundle,
    random_flat_bundle,
    sphere_complex,
    torus_complex,
    torus_substitution
)
from .quasirep import bundle_to_rep, defect, relation_reports, rep_to_bundle, substitute
from .simplicial import maximal_tree, presentation_from_tree
from .trivialize import certify_tree_loops, extend_skeleton, trivialize
from .utils import (
    SCHEMA_VERSION,
    bundle_from_dict,
    bundle_to_dict,
    complex_from_dict,
    complex_to_dict,
    dump_json,
    read_json,
    rep_from_dict,
    rep_to_dict
)

logger = logging.getLogger(__name__)

PASS, INPUT_ERROR, CHECK_FAILED = 0, 1, 2


class CommandResult(NamedTuple):
    report: Dict[str, Any]
    passed: bool = True


def _load_bundle(path: str):
    return bundle_from_dict(read_json(path))


def run_validate(args: argparse.Namespace, settings: Settings) -> CommandResult:
    document = read_json(args.complex)
    document = document.get("complex", document)
    x = complex_from_dict({k: v for k, v in document.items() if k != "orientation"})
    report = {
        "vertices": len(x.vertices),
        "simplices": len(x),
        "dimension": x.dimension,
        "euler_characteristic": x.euler_characteristic(),
        "connected": x.is_connected(),
        "closed_oriented_surface": False,
        "orientation_consistent": True
    }
    try:
        oriented = complex_from_dict(document)
    except ComplexError as e:
        report.update(orientation_consistent=False, error=str(e))
        return CommandResult(report, passed=False)

    report["closed_oriented_surface"] = oriented.is_closed_oriented_surface()
    return CommandResult(report)


def run_audit(args: argparse.Namespace, settings: Settings) -> CommandResult:
    bundle = _load_bundle(args.bundle)
    audit = flatness_audit(bundle)
    cocycle = cocycle_check(bundle, tol=settings.audit_tol)
    report = {
        "flatness": audit.epsilon,
        "worst_pair": [list(s) for s in audit.worst] if audit.worst is not None else None,
        "cocycle": {"passed": cocycle.passed, "max_residual": cocycle.max_residual}
    }
    if cocycle.violation is not None:
        v = cocycle.violation
        report["cocycle"]["violation"] = {
            "tau": list(v.tau), "rho": list(v.rho), "sigma": list(v.sigma), "point": list(v.point),
            "residual": v.residual
        }

    return CommandResult(report, passed=cocycle.passed)


def run_trivialize(args: argparse.Namespace, settings: Settings) -> CommandResult:
    bundle = _load_bundle(args.bundle)
    tree = maximal_tree(bundle.base)
    certificates = certify_tree_loops(bundle, tree=tree, verbose=args.verbose)
    trivialization = trivialize(bundle, tree, certificates, settings=settings)
    report = {
        "tree": [list(e) for e in sorted(tree)],
        "certificates": [
            {"edge": list(c.edge), "defect": c.defect, "bound": c.bound, "complexity": c.complexity}
            for c in certificates
        ],
        "chart_flatness": trivialization.audit(),
        "compatibility_residual": trivialization.compatibility_residual()
    }

    return CommandResult(report)


def run_extend(args: argparse.Namespace, settings: Settings) -> CommandResult:
    bundle = _load_bundle(args.bundle)
    x = complex_from_dict(read_json(args.complex)) if args.complex else bundle.base
    target = min(args.to_skeleton, x.dimension)
    while bundle.base.dimension < target:
        bundle = extend_skeleton(bundle, x, settings=settings)
    if args.output:
        dump_json(bundle_to_dict(bundle), args.output)

    return CommandResult({"dimension": bundle.base.dimension, "flatness": flatness_audit(bundle).epsilon})


def run_chern(args: argparse.Namespace, settings: Settings) -> CommandResult:
    return CommandResult({"chern": chern_number(_load_bundle(args.bundle), settings=settings)})


def run_rep2bundle(args: argparse.Namespace, settings: Settings) -> CommandResult:
    phi = rep_from_dict(read_json(args.rep))
    torus = torus_complex()
    presentation = presentation_from_tree(torus, tree=frozenset(TORUS_TREE), basepoint=0)
    if not phi.presentation.generator_edges:
        phi = substitute(phi, torus_substitution(presentation), presentation).rep
    bundle = rep_to_bundle(phi, torus, TORUS_TREE, phi.presentation, depth=settings.lattice_depth, settings=settings)
    if args.output:
        dump_json(bundle_to_dict(bundle), args.output)

    return CommandResult({
        "base": args.base,
        "defect": defect(phi),
        "flatness": flatness_audit(bundle).epsilon,
        "chern": chern_number(bundle, settings=settings)
    })


def run_bundle2rep(args: argparse.Namespace, settings: Settings) -> CommandResult:
    bundle = _load_bundle(args.bundle)
    presentation = presentation_from_tree(bundle.base)
    phi = bundle_to_rep(bundle, presentation)
    reports = [r.to_dict() for r in relation_reports(bundle, presentation)] if args.witness else []
    if args.output:
        dump_json(rep_to_dict(phi), args.output)

    return CommandResult(
        {"generators": len(presentation.generators), "defect": defect(phi), "relation_bounds": reports},
        passed=all(r["pass"] for r in reports)
    )


def run_probe(args: argparse.Namespace, settings: Settings) -> CommandResult:
    ks = [int(k) for k in args.clock_shift.split(",") if k.strip()]
    verdict = probe_verdict(clock_shift_probe(ks, depth=settings.lattice_depth, settings=settings))

    return CommandResult(dict(verdict.to_dict(), ks=ks), passed=verdict.witness)


def run_fixture(args: argparse.Namespace, settings: Settings) -> CommandResult:
    if args.kind == "monopole":
        document = bundle_to_dict(monopole_bundle(sphere_complex(args.depth), args.q, depth=settings.lattice_depth))
    elif args.kind == "sphere":
        document = complex_to_dict(sphere_complex(args.depth))
    elif args.kind == "torus":
        document = complex_to_dict(torus_complex())
    else:
        rng = np.random.default_rng(settings.seed)
        bundle = random_flat_bundle(filled_square(), args.rank, args.eps, depth=settings.lattice_depth, rng=rng)
        document = bundle_to_dict(bundle)

    if args.output:
        dump_json(document, args.output)
        return CommandResult({"fixture": args.kind, "output": args.output})

    return CommandResult({"fixture": args.kind, "document": document})


def build_parser() -> argparse.ArgumentParser:
    """
    Argument parser of the almostflat command.

    Returns
    -------
    parser : argparse.ArgumentParser
        Parser with one subparser per command.
    """
    parser = argparse.ArgumentParser(prog="almostflat", description="Almost flat bundles and almost representations.")
    parser.add_argument(
        "--tol", type=float, default=None,
        help="Numerical tolerance, also used for cocycle and compatibility audits unless --audit-tol is given."
    )
    parser.add_argument("--audit-tol", type=float, default=None, help="Tolerance of cocycle and compatibility audits.")
    parser.add_argument("--lattice-depth", type=int, default=None, help="Sampling depth of unitary maps.")
    parser.add_argument("--seed", type=int, default=None, help="Seed of every random choice.")
    parser.add_argument("--output", default=None, help="File receiving the produced bundle, rep or fixture.")
    parser.add_argument("--verbose", action="store_true", help="Log progress on standard error.")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="Closure and orientation audit of a complex.")
    validate.add_argument("complex")
    validate.set_defaults(run=run_validate)

    audit = commands.add_parser("audit", help="Flatness and cocycle audit of a bundle.")
    audit.add_argument("bundle")
    audit.set_defaults(run=run_audit)

    trivialize_ = commands.add_parser("trivialize", help="Global trivialization from tree loop certificates.")
    trivialize_.add_argument("bundle")
    trivialize_.add_argument("--tree", choices=["auto"], default="auto")
    trivialize_.set_defaults(run=run_trivialize)

    extend = commands.add_parser("extend", help="Skeleton by skeleton extension of a bundle.")
    extend.add_argument("bundle")
    extend.add_argument("--to-skeleton", type=int, required=True)
    extend.add_argument("--complex", default=None, help="Complex to extend over, the base of the bundle by default.")
    extend.set_defaults(run=run_extend)

    chern = commands.add_parser("chern", help="Chern number over a closed oriented surface.")
    chern.add_argument("bundle")
    chern.set_defaults(run=run_chern)

    rep2bundle = commands.add_parser("rep2bundle", help="Bundle from an almost representation.")
    rep2bundle.add_argument("rep")
    rep2bundle.add_argument("--base", choices=["torus7"], default="torus7")
    rep2bundle.set_defaults(run=run_rep2bundle)

    bundle2rep = commands.add_parser("bundle2rep", help="Almost representation from a bundle.")
    bundle2rep.add_argument("bundle")
    bundle2rep.add_argument("--witness", action="store_true", help="Check witnessed bounds on the relations.")
    bundle2rep.set_defaults(run=run_bundle2rep)

    probe = commands.add_parser("probe", help="Infinite K-area probe from clock and shift torus bundles.")
    probe.add_argument("--clock-shift", required=True, help="Comma separated ranks, e.g. 6,12,24,48.")
    probe.set_defaults(run=run_probe)

    fixture = commands.add_parser("fixture", help="Fixture complexes and bundles.")
    fixture.add_argument("kind", choices=["monopole", "sphere", "torus", "random-flat"])
    fixture.add_argument("--q", type=int, default=1)
    fixture.add_argument("--depth", type=int, default=2, help="Subdivision depth of the sphere.")
    fixture.add_argument("--rank", type=int, default=2)
    fixture.add_argument("--eps", type=float, default=0.01)
    fixture.set_defaults(run=run_fixture)

    return parser


def _settings(args: argparse.Namespace) -> Settings:
    settings = Settings.from_env()
    names = ("tol", "audit_tol", "lattice_depth", "seed")
    overrides = {name: getattr(args, name) for name in names if getattr(args, name) is not None}
    if args.tol is not None and args.audit_tol is None:
        overrides["audit_tol"] = args.tol

    return settings.replace(**overrides) if overrides else settings


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs one subcommand and prints its report.

    Parameters
    ----------
    argv : Optional[List[str]]
        Arguments, sys.argv[1:] by default.

    Returns
    -------
    code : int
        0 on pass, 2 on a failed check or a refused threshold, 1 on malformed input.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    report: Dict[str, Any] = {"schema": SCHEMA_VERSION, "command": args.command}

    settings = _settings(args)
    logger.debug(f"Running {args.command} with {settings}.")
    try:
        result = args.run(args, settings)
        report.update(result.report, passed=result.passed)
        code = PASS if result.passed else CHECK_FAILED
    except PreconditionError as e:
        report.update(passed=False, error=str(e), precondition=type(e).__name__)
        if isinstance(e, ThresholdError) and e.where is not None:
            report["where"] = list(e.where)
        code = CHECK_FAILED
    except (AlmostFlatError, ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        report.update(passed=False, error=str(e))
        code = INPUT_ERROR

    print(dump_json(report))

    return code


if __name__ == "__main__":
    sys.exit(main())
