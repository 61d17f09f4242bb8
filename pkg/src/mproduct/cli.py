"""Command-line entry point: compute, verify, solve, index, laws and example."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Iterable, Optional

from . import formats, ginv, laws, solver
from .config import DEFAULT_TOLERANCES, ToleranceConfig
from .errors import DimensionMismatchError, MProductError, NumericalFailureError
from .ginv import InverseKind
from .tensor import TRANSFORM_PRESETS, Tensor3, TransformMatrix, transform_preset


LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2
EXIT_LAW_VIOLATION = 3

LAW_KINDS = ("gd", "gdmp", "gdstar")


def _resolve_transform(args: argparse.Namespace, eta3: int) -> TransformMatrix:
    if args.m is not None:
        m = TransformMatrix(formats.load_matrix_file(args.m).matrix)
    else:
        m = transform_preset(args.m_preset, eta3)
    if m.size != eta3:
        raise DimensionMismatchError(f"M has size {m.size} but the tensor has {eta3} frontal slices")
    return m


def _tolerances(args: argparse.Namespace) -> ToleranceConfig:
    return DEFAULT_TOLERANCES.with_overrides(residual_tol=args.tol, rank_tol_factor=args.rank_tol)


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _dims_text(tensor: Tensor3) -> str:
    return "x".join(str(d) for d in tensor.dims)


def run_compute(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    source = formats.load_tensor_file(args.input)
    a = source.tensor
    m = _resolve_transform(args, a.dims[2])
    kind = InverseKind(args.kind)

    result = ginv.compute_inverse(kind, a, m, tol)
    report = laws.verify_kind(kind, a, result, m, tol)
    index_text = str(ginv.tensor_index(a, m, tol)) if a.is_square else "n/a"
    summary = (
        f"kind={kind.value} dims={_dims_text(a)} k={index_text} max_residual={report.max_residual:.3e}"
    )
    if not report.passed:
        LOGGER.error("Computed %s inverse misses tolerance on: %s", kind.value, ", ".join(report.failing()))
        return EXIT_NUMERICAL

    name = f"{kind.value} inverse of {source.name}" if source.name else None
    if args.output:
        formats.save_tensor_file(args.output, result, name=name)
        print(summary)
    else:
        sys.stdout.write(formats.dumps(formats.TensorFile(result, name).to_dict()) + "\n")
        LOGGER.info(summary)
    return EXIT_OK


def run_verify(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    a = formats.load_tensor_file(args.input).tensor
    x = formats.load_tensor_file(args.candidate).tensor
    m = _resolve_transform(args, a.dims[2])

    report = laws.verify_kind(args.kind, a, x, m, tol, k=args.k)
    _emit(report.to_dict())
    if not report.passed:
        LOGGER.info("Candidate fails: %s", ", ".join(report.failing()))
        return EXIT_NUMERICAL
    return EXIT_OK


def run_solve(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    a = formats.load_tensor_file(args.a).tensor
    b = formats.load_tensor_file(args.b).tensor
    z = formats.load_tensor_file(args.z).tensor if args.z else None
    m = _resolve_transform(args, a.dims[2])

    request = solver.SolveRequest(a=a, b=b, z=z, kind=InverseKind(args.kind))
    if args.rhs_check:
        consistency = solver.rhs_consistency(a, b, m, request.kind, tol)
        LOGGER.info(
            "Right-hand side %s consistent (residual %.3e)",
            "is" if consistency.passed else "is not",
            consistency.max_residual,
        )
    result = solver.solve(request, m, tol)

    if args.output:
        formats.save_tensor_file(args.output, result.x, name=f"{request.kind.value} solution")
    else:
        sys.stdout.write(formats.dumps(formats.TensorFile(result.x).to_dict()) + "\n")
    print(f"residual={result.residual:.3e}", file=sys.stdout if args.output else sys.stderr)
    return EXIT_OK


def run_index(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    a = formats.load_tensor_file(args.input).tensor
    m = _resolve_transform(args, a.dims[2])

    indices = ginv.slice_indices(a, m, tol)
    print(max(indices))
    if args.per_slice:
        print(" ".join(str(index) for index in indices))
    return EXIT_OK


def run_laws(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    a = formats.load_tensor_file(args.a).tensor
    b = formats.load_tensor_file(args.b).tensor
    m = _resolve_transform(args, a.dims[2])

    if args.check == "additive":
        outcome = laws.check_additive_law(a, b, m, tol, kind=args.kind)
    elif args.kind == "gd":
        variant = args.variant if args.check == "reverse-order" else laws.GDOrderVariant.FORWARD
        outcome = laws.check_gd_reverse_order(a, b, m, tol, variant=variant)
    elif args.kind == "gdmp":
        outcome = laws.check_gdmp_product_laws(a, b, m, tol, direction=args.check.split("-")[0])
    else:
        outcome = laws.check_gdstar_product_laws(a, b, m, tol, direction=args.check.split("-")[0])

    _emit(outcome.to_dict())
    if not outcome.holds:
        return EXIT_LAW_VIOLATION
    return EXIT_OK


def run_example(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    if args.list or not args.name:
        for name in formats.list_examples():
            print(name)
        return EXIT_OK
    text = formats.example_text(args.name)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _positive_float(value: str) -> float:
    number = float(value)
    if not number > 0:
        raise argparse.ArgumentTypeError("must be a positive number")
    return number


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=None, help="Residual tolerance (default 1e-8)")
    common.add_argument(
        "--rank-tol", type=_positive_float, default=None, help="Relative rank threshold factor (default 1e-12)"
    )
    transform_group = common.add_mutually_exclusive_group()
    transform_group.add_argument("--m", help="MatrixFile JSON holding the transform matrix M")
    transform_group.add_argument(
        "--m-preset", choices=TRANSFORM_PRESETS, default="identity", help="Named transform matrix"
    )
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    verbosity.add_argument("--verbose", action="store_true", help="Log debug detail")
    return common


def build_arg_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(description="Generalized inverses of third-order tensors under the M-product")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[common], help="Compute an inverse of a tensor")
    compute.add_argument("--kind", choices=[kind.value for kind in InverseKind], required=True)
    compute.add_argument("--input", required=True, help="TensorFile JSON holding A")
    compute.add_argument("--output", help="Where to write the inverse (stdout when omitted)")
    compute.set_defaults(handler=run_compute)

    verify = commands.add_parser("verify", parents=[common], help="Check a candidate inverse")
    verify.add_argument("--kind", choices=["gd", "gdmp", "gdstar", "mp", "drazin"], required=True)
    verify.add_argument("--input", required=True, help="TensorFile JSON holding A")
    verify.add_argument("--candidate", required=True, help="TensorFile JSON holding the candidate X")
    verify.add_argument("--k", type=int, default=None, help="Power to verify at (defaults to the tensor index)")
    verify.set_defaults(handler=run_verify)

    solve = commands.add_parser("solve", parents=[common], help="Solve A X = A S B for the chosen kind")
    solve.add_argument("--kind", choices=LAW_KINDS, required=True)
    solve.add_argument("--a", required=True, help="TensorFile JSON holding A")
    solve.add_argument("--b", required=True, help="TensorFile JSON holding B")
    solve.add_argument("--z", help="TensorFile JSON holding the free parameter Z (zero when omitted)")
    solve.add_argument("--output", help="Where to write X (stdout when omitted)")
    solve.add_argument("--rhs-check", action="store_true", help="Log whether B already lies in the target range")
    solve.set_defaults(handler=run_solve)

    index = commands.add_parser("index", parents=[common], help="Print the tensor index")
    index.add_argument("--input", required=True, help="TensorFile JSON holding A")
    index.add_argument("--per-slice", action="store_true", help="Also print every transformed slice index")
    index.set_defaults(handler=run_index)

    law = commands.add_parser("laws", parents=[common], help="Check a product or additive law on a pair")
    law.add_argument("--check", choices=["reverse-order", "forward-order", "additive"], required=True)
    law.add_argument("--kind", choices=LAW_KINDS, default="gd")
    law.add_argument(
        "--variant",
        choices=[laws.GDOrderVariant.SQUARE_COMMUTING.value, laws.GDOrderVariant.COMMUTING.value],
        default=laws.GDOrderVariant.COMMUTING.value,
        help="Hypothesis set for the GD reverse-order law",
    )
    law.add_argument("--a", required=True, help="TensorFile JSON holding A")
    law.add_argument("--b", required=True, help="TensorFile JSON holding B")
    law.set_defaults(handler=run_laws)

    example = commands.add_parser("example", parents=[common], help="Export a packaged worked-example fixture")
    example.add_argument("name", nargs="?", help="Fixture name")
    example.add_argument("--list", action="store_true", help="List fixture names")
    example.add_argument("--output", help="Where to write the fixture (stdout when omitted)")
    example.set_defaults(handler=run_example)

    return parser


def run(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(None if argv is None else list(argv))

    level = logging.WARNING if args.quiet else logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s [%(name)s] %(message)s")
    logging.getLogger().setLevel(level)

    if getattr(args, "k", None) is not None and args.k < 0:
        parser.error("--k must be >= 0")

    try:
        return args.handler(args, _tolerances(args))
    except NumericalFailureError as exc:
        LOGGER.error("Numerical failure: %s", exc)
        return EXIT_NUMERICAL
    except (MProductError, ValueError, OSError) as exc:
        LOGGER.error("Invalid input: %s", exc)
        return EXIT_INPUT


def main(argv: Optional[Iterable[str]] = None) -> None:
    code = run(argv)
    if code:
        raise SystemExit(code)


if __name__ == "__main__":
    main()
