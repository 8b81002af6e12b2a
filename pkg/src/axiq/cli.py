"""Command line interface.

Subcommands: build, transpile, simulate, cost, compare. Reports print as
tab-delimited lines, or as one newline-terminated JSON object with --json;
--plot renders the matching figure to a file. Exit codes: 0 success, 1 domain
error (or tolerance exceeded in compare), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cost import report
from .errors import AxiqError
from .grover import Axis, GroverSpec, build_grover
from .passes import PASSES, pipeline, realize_mcz
from .sim import probabilities, run, sample, tvd
from .textio import emit, parse

DEFAULT_SHOTS = 1024


def _read(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _cmd_build(args) -> int:
    spec = GroverSpec(
        n=args.qubits,
        marked=args.marked,
        iterations=args.iterations,
        axis=Axis(args.axis),
        include_measure=args.measure,
    )
    _write_text(emit(build_grover(spec)), args.output)
    return 0


def _cmd_transpile(args) -> int:
    names = [name for name in args.passes.split(",") if name]
    unknown = [name for name in names if name not in PASSES]
    if unknown:
        print(
            f"usage error: unknown pass {', '.join(unknown)}; "
            f"valid: {', '.join(sorted(PASSES))}",
            file=sys.stderr,
        )
        return 2
    circuit = _read(args.file)
    circuit, log = pipeline(circuit, names)
    if args.verbose:
        for name, before, after in log.entries:
            print(f"{name}: {before} -> {after} instructions", file=sys.stderr)
    _write_text(emit(circuit), args.output)
    return 0


def _cmd_simulate(args) -> int:
    circuit = _read(args.file)
    dist = probabilities(run(circuit))
    counts = None
    if args.shots is not None:
        counts = sample(dist, args.shots, args.seed)
    if args.json:
        obj = {"n": circuit.n, "probabilities": {k: dist[k] for k in sorted(dist)}}
        if counts is not None:
            obj.update(shots=args.shots, seed=args.seed,
                       counts={k: counts[k] for k in sorted(counts)})
        _emit_json(obj)
    else:
        for key in sorted(dist):
            row = f"{key}\t{dist[key]:.12g}"
            if counts is not None:
                row += f"\t{counts.get(key, 0)}"
            print(row)
    if args.plot:
        from .plotting import plot_distribution

        plot_distribution(dist, args.plot, counts=counts, title=args.file)
    return 0


def _cmd_cost(args) -> int:
    circuit = _read(args.file)
    if args.realize_mcz:
        circuit = realize_mcz(circuit)
    rep = report(circuit)
    if args.json:
        _emit_json(
            {
                "n": rep.n,
                "total": rep.total,
                "depth": rep.depth,
                "native_total": rep.native_total,
                "non_native_total": rep.non_native_total,
                "wrapper_native_total": rep.wrapper_native_total,
                "per_kind": {k: rep.per_kind[k] for k in sorted(rep.per_kind)},
            }
        )
    else:
        for kind in sorted(rep.per_kind):
            print(f"{kind}\t{rep.per_kind[kind]}")
        print(f"total\t{rep.total}")
        print(f"depth\t{rep.depth}")
        print(f"native_total\t{rep.native_total}")
        print(f"non_native_total\t{rep.non_native_total}")
        print(f"wrapper_native_total\t{rep.wrapper_native_total}")
    if args.plot:
        from .plotting import plot_cost

        plot_cost(rep, args.plot, title=args.file)
    return 0


def _cmd_compare(args) -> int:
    circ_a = _read(args.a)
    circ_b = _read(args.b)
    dist_a = probabilities(run(circ_a))
    dist_b = probabilities(run(circ_b))
    distance = tvd(dist_a, dist_b)
    rep_a = report(circ_a)
    rep_b = report(circ_b)
    if rep_a.wrapper_native_total > 0:
        reduction = 100.0 * (1.0 - rep_b.wrapper_native_total / rep_a.wrapper_native_total)
        reduction_text = f"{reduction:.6g}"
    else:
        reduction_text = "n/a"
    print(f"tvd\t{distance:.12g}")
    print(f"wrapper_native_baseline\t{rep_a.wrapper_native_total}")
    print(f"wrapper_native_candidate\t{rep_b.wrapper_native_total}")
    print(f"wrapper_reduction_percent\t{reduction_text}")
    if args.plot:
        from .plotting import plot_comparison

        plot_comparison(dist_a, dist_b, args.plot, labels=(args.a, args.b))
    return 0 if distance <= args.tolerance else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="axiq",
        description="Search-circuit toolkit for sqrt(X)-native superposition rewrites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit a tagged search circuit")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--marked", required=True, help="marked bitstring, qubit n-1 first")
    p.add_argument("--iterations", type=int, default=1)
    p.add_argument("--axis", choices=["x", "y"], default="x")
    p.add_argument("--measure", action="store_true", help="append a measure-all marker")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("transpile", help="apply rewrite passes to a circuit file")
    p.add_argument("file")
    p.add_argument(
        "--passes",
        required=True,
        help="comma-separated pass names: " + ", ".join(sorted(PASSES)),
    )
    p.add_argument("-o", "--output")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=_cmd_transpile)

    p = sub.add_parser("simulate", help="exact probabilities, optional sampling")
    p.add_argument("file")
    p.add_argument(
        "--shots",
        type=int,
        nargs="?",
        const=DEFAULT_SHOTS,
        default=None,
        help=f"sample this many shots (bare flag means {DEFAULT_SHOTS})",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="FILE", help="write an outcome histogram")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("cost", help="gate counts and depth")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--realize-mcz", action="store_true",
                   help="expand MCZ to [h, mcx, h] before counting")
    p.add_argument("--plot", metavar="FILE", help="write a gate-count chart")
    p.set_defaults(func=_cmd_cost)

    p = sub.add_parser("compare", help="distribution distance and wrapper reduction")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--plot", metavar="FILE", help="write a side-by-side histogram")
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AxiqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
