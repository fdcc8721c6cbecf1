"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 unreadable or invalid graph input,
3 search budget exhausted, 4 a theorem-level consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .bounds import bound_report
from .constructive import classify_equality, resolving_from_dominating
from .domination import domination_number
from .errors import AnomalyError, BudgetExceeded, GraphError
from .io import read_graph, write_graph
from .report import ERROR, TIMEOUT, RunReport, bound_dict, emit_report, invariants
from .resolve import metric_dimension
from .sweep import verify

#: Search nodes granted per millisecond of ``--budget``; fixed so that a
#: given budget gives the same answer on every machine.
WORK_UNITS_PER_MS = 1000

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET, EXIT_ANOMALY = range(5)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="one-line JSON report")
    common.add_argument("--budget", type=int, metavar="MS", default=argparse.SUPPRESS,
                        help=f"search budget in ms ({WORK_UNITS_PER_MS} search nodes per ms)")

    parser = _Parser(prog="metdom", parents=[common],
                     description="Metric dimension, domination number and their bounds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", parents=[common], help="write a named graph to a file")
    gen.add_argument("family", choices=sorted(generators.FAMILIES))
    gen.add_argument("params", nargs="*")
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output", required=True, metavar="FILE")

    for name, text in [("dim", "exact metric dimension"),
                       ("dom", "exact domination number"),
                       ("construct", "resolving set from a normalized minimum dominating set"),
                       ("classify", "decide whether beta = n - gamma")]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
    b = sub.add_parser("bounds", parents=[common], help="upper bounds on beta")
    b.add_argument("file")
    b.add_argument("--exact", action="store_true", help="also compute beta and gamma")

    v = sub.add_parser("verify", parents=[common], help="property sweep over many graphs")
    v.add_argument("--count", type=int, default=1000)
    v.add_argument("--min-n", type=int, default=7)
    v.add_argument("--max-n", type=int, default=18)
    v.add_argument("--p", type=float, default=0.35)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--exhaustive-upto", type=int, default=6, metavar="K")
    return parser


def _budget(args):
    ms = getattr(args, "budget", None)
    return None if ms is None else ms * WORK_UNITS_PER_MS


def _run_gen(args, out):
    spec = generators.parse_family(args.family, args.params, args.seed)
    G = spec.build()
    write_graph(G, args.output, comment=str(spec))
    if args.json:
        out.write(json.dumps({"graph_id": str(spec), "n": G.n, "m": G.m, "file": args.output}) + "\n")
    else:
        out.write(f"wrote {args.output}: {spec} (n={G.n}, m={G.m})\n")
    return EXIT_OK


def _analyse(args, report, G):
    budget = _budget(args)
    cmd = args.command
    if cmd == "dim":
        res = metric_dimension(G, budget=budget)
        report.set(beta=res.beta, basis=list(res.basis))
    elif cmd == "dom":
        res = domination_number(G, budget=budget)
        report.set(gamma=res.gamma, dominating_set=list(res.dominating_set))
    elif cmd == "construct":
        built = resolving_from_dominating(G, budget=budget)
        report.set(gamma=len(built.dominating_set),
                   dominating_set=list(built.dominating_set),
                   resolving_set=list(built.resolving_set),
                   trace=[{"removed": s.removed, "inserted": s.inserted, "reason": s.reason}
                          for s in built.trace.steps])
    elif cmd == "bounds":
        rep = bound_report(G, compute_exact=args.exact, budget=budget)
        report.set(bounds=[bound_dict(e) for e in rep.entries], tightest=rep.tightest,
                   beta=rep.beta_exact, gamma=rep.gamma_exact)
        if rep.timeouts:
            report.status = TIMEOUT
            report.set(upper_bound=min(rep.timeouts.values()),
                       message="budget exhausted for " + ", ".join(sorted(rep.timeouts)))
            return EXIT_BUDGET
    elif cmd == "classify":
        c = classify_equality(G, budget=budget)
        report.set(beta=c.beta, gamma=c.gamma, classification=c.verdict,
                   classification_params=list(c.params))
    return EXIT_OK


def _run_file_command(args, out, err):
    report = RunReport(args.file)
    try:
        G = read_graph(args.file)
        G.require_connected()
        report.set(**invariants(G))
        code = _analyse(args, report, G)
    except GraphError as exc:
        report.status = ERROR
        report.set(message=str(exc))
        code = EXIT_INPUT
    except BudgetExceeded as exc:
        report.status = TIMEOUT
        report.set(upper_bound=exc.upper_bound, message=str(exc))
        code = EXIT_BUDGET
    except AnomalyError as exc:
        report.status = ERROR
        report.set(message=f"anomaly: {exc}")
        code = EXIT_ANOMALY
    out.write(emit_report(report, args.json) + "\n")
    if code in (EXIT_INPUT, EXIT_ANOMALY) and not args.json:
        err.write(f"metdom: {report.values['message']}\n")
    return code


def _run_verify(args, out):
    result = verify(count=args.count, min_n=args.min_n, max_n=args.max_n, p=args.p,
                    seed=args.seed, exhaustive_upto=args.exhaustive_upto)
    if args.json:
        out.write(json.dumps(result.as_dict(), separators=(",", ":")) + "\n")
    else:
        out.write(f"graphs checked: {result.graphs} "
                  f"({result.exhaustive} exhaustive, {result.random} random)\n")
        out.write(f"equality cases: {result.equality_cases}\n")
        for name, count in result.violations.items():
            out.write(f"{name:<17} violations: {count}\n")
        for f in result.failures:
            out.write(f"  {f.source}: {f.violations}\n")
    return EXIT_OK if result.ok else EXIT_ANOMALY


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    try:
        if args.command == "gen":
            return _run_gen(args, out)
        if args.command == "verify":
            return _run_verify(args, out)
    except GraphError as exc:
        err.write(f"metdom: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"metdom: {exc}\n")
        return EXIT_INPUT
    return _run_file_command(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
