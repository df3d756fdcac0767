"""Command-line interface.

Exit codes: 0 accepted, 2 rejected, 1 runtime error, 64 usage error.
"""

import argparse
import os
import sys

from .completion import FillMethod, complete
from .consistency import analyze, classify_parametric_ci, parametric_table
from .errors import IcrError
from .ioformats import (
    build_report,
    parse_matrix,
    render_matrix,
    render_report_machine,
    render_report_text,
    render_simulation_table,
)
from .matrices import SAATY_SCALE
from .randomindex import (
    DEFAULT_SEED,
    RiSource,
    SimulationSpec,
    approximate_ri,
    estimate_ri,
    lookup_ri,
)

EXIT_ACCEPTED = 0
EXIT_ERROR = 1
EXIT_REJECTED = 2
EXIT_USAGE = 64

PARAMETRIC_ALPHAS = (1 / 5, 1 / 4, 1 / 3, 1 / 2, 1, 2, 3, 4, 5)


class _UsageExit(Exception):
    def __init__(self, message):
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageExit(f"{self.prog}: {message}\n{self.format_usage()}")


def _default_seed():
    env = os.environ.get("ICR_SEED")
    return int(env) if env else DEFAULT_SEED


def _build_parser():
    parser = _Parser(prog="icr",
                     description="Consistency analysis of (incomplete) "
                                 "pairwise comparison matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="accept/reject a matrix file")
    p.add_argument("file")
    p.add_argument("--method", choices=[m.value for m in FillMethod],
                   default="bounded")
    p.add_argument("--threshold", type=float, default=0.1)
    p.add_argument("--ri-override", type=float, default=None,
                   help="use this RI value instead of the table lookup")
    p.add_argument("--allow-method-mismatch", action="store_true",
                   help="permit non-bounded completion despite the "
                        "thresholds being calibrated for bounded fills")
    p.add_argument("--machine", action="store_true",
                   help="emit the flat key-value report")

    p = sub.add_parser("complete", help="print the optimally filled matrix")
    p.add_argument("file")
    p.add_argument("--method", choices=[m.value for m in FillMethod],
                   default="bounded")

    p = sub.add_parser("ri", help="random index for (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--simulate", action="store_true",
                   help="estimate by Monte Carlo instead of the table")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("ri-approx", help="linear approximation of RI(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("table4", help="CI grid of the parametric example")
    p.add_argument("--machine", action="store_true")

    p = sub.add_parser("simulate", help="run the RI estimator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None,
                   help="also write the results table to this file")

    p = sub.add_parser("serve", help="start the local HTTP service")
    p.add_argument("--port", type=int, default=8402)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--state-dir", default=None,
                   help="directory for append-only session logs")
    return parser


def _cmd_analyze(args, out):
    with open(args.file) as fh:
        matrix = parse_matrix(fh.read())
    method = FillMethod(args.method)
    if method is not FillMethod.BOUNDED and not args.allow_method_mismatch:
        raise _UsageExit(
            "icr analyze: --method unbounded/discrete requires "
            "--allow-method-mismatch (thresholds assume bounded fills)")
    result, verdict = analyze(
        matrix, method=method, threshold=args.threshold,
        allow_method_mismatch=args.allow_method_mismatch,
        ri_override=args.ri_override)
    report = build_report(matrix, result, verdict)
    out.write(render_report_machine(report) if args.machine
              else render_report_text(report))
    if method is not FillMethod.BOUNDED:
        print("warning: verdict used a non-bounded completion; the "
              "random-index thresholds are calibrated for bounded fills",
              file=sys.stderr)
    return EXIT_ACCEPTED if verdict.accepted else EXIT_REJECTED


def _cmd_complete(args, out):
    with open(args.file) as fh:
        matrix = parse_matrix(fh.read())
    result = complete(matrix, FillMethod(args.method))
    out.write(render_matrix(result.filled))
    return EXIT_ACCEPTED


def _cmd_ri(args, out):
    if args.simulate:
        spec = SimulationSpec(args.n, args.m, args.samples,
                              seed=args.seed if args.seed is not None
                              else _default_seed())
        r = estimate_ri(spec, jobs=args.jobs)
        out.write(f"{r.ri:.6f} (simulated, samples={r.samples_kept}, "
                  f"std_error={r.std_error:.2g})\n")
    else:
        ri = lookup_ri(args.n, args.m)
        out.write(f"{ri.value:.6g} ({ri.source.value})\n"
                  if ri.source is not RiSource.PUBLISHED
                  else f"{ri.value:g} ({ri.source.value})\n")
    return EXIT_ACCEPTED


def _cmd_ri_approx(args, out):
    out.write(f"{approximate_ri(args.n, args.m):.3f}\n")
    return EXIT_ACCEPTED


def _cmd_table4(args, out):
    betas = SAATY_SCALE
    grid = parametric_table(PARAMETRIC_ALPHAS, betas)
    if args.machine:
        for r, beta in enumerate(betas):
            for c, alpha in enumerate(PARAMETRIC_ALPHAS):
                cls = classify_parametric_ci(grid[r, c])
                out.write(f"cell.{r}.{c}: {beta:.12g} {alpha:.12g} "
                          f"{grid[r, c]:.12g} {cls}\n")
        return EXIT_ACCEPTED
    from .ioformats import format_value

    out.write("CI of the parametric 4x4 instance "
              "(rows: beta, columns: alpha)\n")
    out.write("[ci] accepted vs RI(4,2); (ci) accepted only vs RI(4,0)\n\n")
    out.write("beta\\alpha " +
              " ".join(f"{format_value(a):>8}" for a in PARAMETRIC_ALPHAS) +
              "\n")
    for r, beta in enumerate(betas):
        cells = []
        for c in range(len(PARAMETRIC_ALPHAS)):
            ci = grid[r, c]
            cls = classify_parametric_ci(ci)
            text = f"{ci:.4f}"
            if cls == "accepted":
                text = f"[{text}]"
            elif cls == "classic_only":
                text = f"({text})"
            cells.append(f"{text:>8}")
        out.write(f"{format_value(beta):>10} " + " ".join(cells) + "\n")
    return EXIT_ACCEPTED


def _cmd_simulate(args, out):
    spec = SimulationSpec(args.n, args.m, args.samples,
                          seed=args.seed if args.seed is not None
                          else _default_seed())
    result = estimate_ri(spec, jobs=args.jobs)
    table = render_simulation_table([result])
    out.write(table)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(table)
    return EXIT_ACCEPTED


def _cmd_serve(args, out):
    import uvicorn

    from .service import create_app

    app = create_app(state_dir=args.state_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_ACCEPTED


_COMMANDS = {
    "analyze": _cmd_analyze,
    "complete": _cmd_complete,
    "ri": _cmd_ri,
    "ri-approx": _cmd_ri_approx,
    "table4": _cmd_table4,
    "simulate": _cmd_simulate,
    "serve": _cmd_serve,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageExit as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (IcrError, OSError) as exc:
        print(f"icr: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
