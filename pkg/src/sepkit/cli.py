"""Command-line interface.

Subcommands: check (criteria battery on one state file), sweep (family
grid report), audit (randomized soundness / oracle-agreement audit) and
decompose (separable-decomposition search).

Exit codes: 0 success, 2 malformed input file, 3 missing file, 4 invalid
configuration, 1 unexpected failure. Reports are written atomically.
"""
from __future__ import annotations

import argparse
import sys

from . import fileio
from .criteria import CRITERIA, TOL, Verdict, applicable_criteria, evaluate
from .decomposition import liqiao_search, liqiao_verify
from .errors import NoCrossingError, OutOfRangeError, ParseError, SepkitError
from .harness import (
    FAMILIES,
    FamilySpec,
    audit,
    render_audit,
    render_report,
    sweep,
)
from .states import PureState, pure_to_density

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_NOT_FOUND = 3
EXIT_CONFIG = 4


class _ConfigError(Exception):
    pass


def _parse_criteria(arg: str | None) -> list[str] | None:
    if arg is None:
        return None
    names = [n.strip() for n in arg.split(",") if n.strip()]
    unknown = [n for n in names if n not in CRITERIA]
    if unknown:
        raise _ConfigError(f"unknown criteria {unknown}; known: {sorted(CRITERIA)}")
    if not names:
        raise _ConfigError("empty criteria list")
    return names


def _check_tol(tol: float) -> float:
    if not tol > 0.0:
        raise _ConfigError(f"--tol must be positive, got {tol}")
    return tol


def _write_out(path: str | None, text: str) -> None:
    if path is not None:
        fileio.write_atomic(path, text)


def _cmd_check(args) -> int:
    tol = _check_tol(args.tol)
    names = _parse_criteria(args.criteria)
    state = fileio.load_state(args.state)
    pure = isinstance(state, PureState)
    available = applicable_criteria(state.dims, pure)
    if names is None:
        names = available
    else:
        bad = [n for n in names if n not in available]
        if bad:
            raise _ConfigError(
                f"criteria {bad} not applicable to this state (dims "
                f"{tuple(state.dims)}, {'pure' if pure else 'mixed'})"
            )
    rows = [evaluate(name, state, tol=tol, seed=args.seed) for name in names]
    rows.sort(key=lambda v: v.criterion)
    width = max(len(v.criterion) for v in rows)
    for v in rows:
        print(f"{v.criterion:<{width}}  statistic={v.statistic: .12g}  "
              f"threshold={v.threshold:.12g}  {v.verdict.value}")
    verdicts = {v.verdict for v in rows}
    if Verdict.ENTANGLED in verdicts:
        summary = "ENTANGLED"
    elif Verdict.SEPARABLE in verdicts:
        summary = "SEPARABLE"
    else:
        summary = "INCONCLUSIVE"
    print(summary)
    lines = ["criterion,statistic,threshold,verdict"]
    lines += [f"{v.criterion},{v.statistic:.12g},{v.threshold:.12g},{v.verdict.value}"
              for v in rows]
    _write_out(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    tol = _check_tol(args.tol)
    names = _parse_criteria(args.criteria)
    try:
        start, stop, steps = args.grid.split(":")
        spec = FamilySpec(args.family, start=float(start), stop=float(stop),
                          steps=int(steps))
    except ValueError as exc:
        raise _ConfigError(f"--grid must be start:stop:steps, got {args.grid!r}") from exc
    report = sweep(spec, criteria=names, tol=tol, seed=args.seed)
    text = render_report(report)
    if args.out:
        _write_out(args.out, text)
    else:
        sys.stdout.write(text)
    for name in sorted(report.thresholds):
        print(f"# detection threshold {name}: {report.thresholds[name]:.12g}",
              file=sys.stderr)
    return EXIT_OK


def _cmd_audit(args) -> int:
    tol = _check_tol(args.tol)
    summary = audit(args.n, args.seed, generator=args.generator, terms=args.terms,
                    tol=tol)
    text = render_audit(summary)
    if args.out:
        _write_out(args.out, text)
    else:
        sys.stdout.write(text)
    false_positives = sum(c.false_positive for c in summary.counts.values())
    print(f"# {summary.generator} audit, n={summary.n}, "
          f"false positives={false_positives}", file=sys.stderr)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    tol = _check_tol(args.tol)
    state = fileio.load_state(args.state)
    if isinstance(state, PureState):
        state = pure_to_density(state)
    result = liqiao_search(state, terms=args.terms, seed=args.seed,
                           max_iters=args.max_iters, tol=tol)
    res = result.residuals
    print(f"residuals: dr={res.dr:.6g} ds={res.ds:.6g} dtau={res.dtau:.6g}")
    if result.certified:
        check = liqiao_verify(result.certificate, state)
        print(f"CERTIFIED separable with {len(result.certificate)} terms "
              f"(max residual {check.max:.6g})")
        _write_out(args.out, fileio.dumps_candidate(result.certificate))
        return EXIT_OK
    print("NOT CERTIFIED (no decomposition found; not evidence of entanglement)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepkit",
        description="Separability analysis for small bipartite quantum states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run the criteria battery on one state file")
    p_check.add_argument("state", help="path to a state file (JSON)")
    p_check.add_argument("--criteria", help="comma-separated criterion names (default: all applicable)")
    p_check.add_argument("--tol", type=float, default=TOL)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--out", help="write a CSV verdict table here")
    p_check.set_defaults(func=_cmd_check)

    p_sweep = sub.add_parser("sweep", help="evaluate criteria over a state family grid")
    p_sweep.add_argument("--family", required=True, choices=FAMILIES)
    p_sweep.add_argument("--grid", required=True, help="start:stop:steps")
    p_sweep.add_argument("--criteria")
    p_sweep.add_argument("--tol", type=float, default=TOL)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--out", help="write the report here (default: stdout)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_audit = sub.add_parser("audit", help="random-state audit against the exact oracle")
    p_audit.add_argument("--n", type=int, required=True)
    p_audit.add_argument("--seed", type=int, required=True)
    p_audit.add_argument("--generator", choices=("separable", "mixed", "pure"),
                         default="separable")
    p_audit.add_argument("--terms", type=int, default=8,
                         help="product terms per separable state")
    p_audit.add_argument("--tol", type=float, default=TOL)
    p_audit.add_argument("--out")
    p_audit.set_defaults(func=_cmd_audit)

    p_dec = sub.add_parser("decompose", help="search for a separable decomposition")
    p_dec.add_argument("state", help="path to a state file (JSON)")
    p_dec.add_argument("--terms", "-L", type=int, default=16)
    p_dec.add_argument("--seed", type=int, required=True)
    p_dec.add_argument("--max-iters", type=int, default=5000)
    p_dec.add_argument("--tol", type=float, default=1e-6,
                       help="certification tolerance on the residuals")
    p_dec.add_argument("--out", help="write the certificate here")
    p_dec.set_defaults(func=_cmd_decompose)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags; remap to the config exit code
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (OutOfRangeError, NoCrossingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SepkitError as exc:
        # invalid state content (bad trace, not PSD, ...) counts as bad input
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
