"""Command line front end: ``parafock report | gram | verify``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import DEFAULT_MAX_N, AlgebraSpec, GuardExceeded, as_fraction
from .gram import SymmetryViolation
from .presets import NAMES, PresetId, build
from .report import SECTIONS, build_report, dumps, emit, gram_document, verify_section

EXIT_OK, EXIT_ARGS, EXIT_GUARD, EXIT_INCONSISTENT = 0, 2, 3, 4


class ArgumentError(ValueError):
    pass


def _add_algebra_args(p: argparse.ArgumentParser, modes_required: bool = False) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=NAMES)
    src.add_argument("--spec", type=Path, help="serialized AlgebraSpec (JSON)")
    p.add_argument("--p", type=int)
    p.add_argument("--q", help="rational, e.g. 1/2")
    p.add_argument("--sign", choices=["+1", "-1", "1"], default=None)
    p.add_argument("--mb", type=int)
    p.add_argument("--mf", type=int)
    p.add_argument("--variant", choices=["affine", "step"])
    p.add_argument("--x", help="affine preset: coefficient of N in f")
    p.add_argument("--y", help="affine preset: coefficient of N_ij")
    p.add_argument("--z", help="affine preset: coefficient of N_ji")
    p.add_argument("--modes", type=int, required=modes_required)
    p.add_argument("--max-n", type=int, default=None)


def resolve_algebra(args) -> tuple:
    """Validate parameters and build ``(spec, preset_id)`` before any computation."""
    if args.spec is not None:
        try:
            spec = AlgebraSpec.from_json(args.spec.read_text(encoding="utf-8"))
        except (OSError, ValueError, KeyError) as exc:
            raise ArgumentError(f"cannot read spec: {exc}") from None
        if args.max_n is not None:
            spec = spec.with_max_n(args.max_n)
        return spec, None
    params = {}
    if args.p is not None:
        params["p"] = args.p
    if args.q is not None:
        params["q"] = args.q
    if args.sign is not None:
        params["sign"] = -1 if args.sign == "-1" else 1
    if args.mb is not None:
        params["mb"] = args.mb
    if args.mf is not None:
        params["mf"] = args.mf
    if args.variant is not None:
        params["variant"] = args.variant
    for key in ("x", "y", "z"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    try:
        for key in ("q", "x", "y", "z"):
            if key in params:
                params[key] = str(as_fraction(params[key]))
        preset = PresetId(args.preset, params)
        max_n = args.max_n if args.max_n is not None else DEFAULT_MAX_N
        if max_n < 1:
            raise ValueError("--max-n must be positive")
        if args.preset != "palev-super" and args.modes is None:
            raise ValueError("--modes is required")
        spec = build(preset, args.modes, max_n=max_n)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ArgumentError(str(exc)) from None
    return spec, preset


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")


def cmd_report(args) -> int:
    spec, preset = resolve_algebra(args)
    sections = [s.strip() for s in args.sections.split(",") if s.strip()]
    bad = [s for s in sections if s not in SECTIONS]
    if bad:
        raise ArgumentError(f"unknown sections: {', '.join(bad)}")
    report, code = build_report(spec, preset, sections, timing=args.timing)
    if args.format == "json" and args.out is None:
        sys.stdout.write(dumps(report))
    else:
        emit(report, args.format, args.out or "report")
    return code


def cmd_gram(args) -> int:
    spec, preset = resolve_algebra(args)
    try:
        indices = [int(s) for s in args.indices.split(",")]
    except ValueError:
        raise ArgumentError("--indices must be comma separated integers") from None
    try:
        doc = gram_document(spec, indices, preset)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, SymmetryViolation):
            raise
        raise ArgumentError(str(exc)) from None
    _write(dumps(doc), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec, preset = resolve_algebra(args)
    doc = {"preset": preset.to_dict() if preset else None, "spec": spec.to_dict(),
           "verify": verify_section(spec, preset)}
    _write(dumps(doc), args.out)
    v = doc["verify"]
    failed = any(isinstance(v[k], dict) and v[k].get("holds") is False
                 for k in ("triple_relation", "transition_expansion"))
    return EXIT_INCONSISTENT if failed else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parafock", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="dimension tables, Haldane parameters, positivity, diagnostics")
    _add_algebra_args(rep)
    rep.add_argument("--sections", default=",".join(SECTIONS))
    rep.add_argument("--format", choices=["json", "csv"], default="json")
    rep.add_argument("--out", help="output file (json) or directory (csv)")
    rep.add_argument("--timing", action="store_true", help="record per-section wall time")
    rep.set_defaults(func=cmd_report)

    gram = sub.add_parser("gram", help="generic Gram matrix and its c(pi) decomposition")
    _add_algebra_args(gram)
    gram.add_argument("--indices", required=True)
    gram.add_argument("--out")
    gram.set_defaults(func=cmd_gram)

    ver = sub.add_parser("verify", help="triple relation and transition-expansion checks")
    _add_algebra_args(ver)
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command == "gram" and args.modes is None and args.spec is None and args.preset != "palev-super":
        # the generic matrix only needs as many modes as indices
        try:
            args.modes = max(int(s) for s in args.indices.split(","))
        except ValueError:
            pass
    try:
        return args.func(args)
    except ArgumentError as exc:
        print(f"parafock: error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except GuardExceeded as exc:
        print(f"parafock: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SymmetryViolation as exc:
        print(f"parafock: inconsistent algebra: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
