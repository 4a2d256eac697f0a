"""``cclique`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 refusal by a size guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closure, harness
from .driver import FILTERS, enumerate_cclosed
from .generators import GENERATORS, generate
from .graph import GraphParseError, format_edge_list, read_edge_list
from .kernels import KERNELS, OracleLimitError
from .trie import CuringRefusal
from .wedges import enumerate_wedges

OK, FAIL, USAGE, REFUSED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _load(args):
    return read_edge_list(args.file, relabel=getattr(args, "relabel", False))


def _label(g, v):
    return g.labels[v] if g.labels else str(v)


def cmd_closure(args, out):
    g = _load(args)
    rep = closure.analyze(g)
    out.write(json.dumps(rep.to_json()) + "\n")
    return OK


def cmd_wedges(args, out):
    g = _load(args)
    idx = enumerate_wedges(g)
    out.write(f"total {idx.count}\n")
    for v, k in enumerate(idx.endpoint_counts()):
        out.write(f"{_label(g, v)} {k}\n")
    if args.dump:
        with open(args.dump, "w") as fh:
            for a, m, b in idx.wedges():
                fh.write(f"{a} {m} {b}\n")
    return OK


def cmd_enumerate(args, out):
    g = _load(args)
    algo = args.algo
    stats = None
    metrics = None
    if algo in ("tomita", "outsens", "oracle"):
        cl = KERNELS[algo](g)
        cliques = cl.cliques
        stats = {"kernel": algo, "alpha": len(cliques), "recursive_calls": cl.stats.recursive_calls,
                 "delay_max": cl.stats.delay_max, "ops": cl.stats.ops}
    else:
        flt = "exact" if args.safe else args.filter
        if algo == "baseline" and flt is None:
            flt = "cure"
        forest, metrics = enumerate_cclosed(
            g,
            order="auto" if args.auto_order else None,
            mode=algo,
            filter=flt,
            kernel=args.kernel,
        )
        cliques = forest.cliques()
        stats = metrics.to_json()
        for key in ("alpha_i", "beta_i", "ref_i"):
            stats.pop(key)
    rows = sorted(tuple(sorted(k)) for k in cliques)
    for k in rows:
        out.write(" ".join(_label(g, v) for v in k) + "\n")
    if args.stats:
        out.write(json.dumps(stats) + "\n")
    if args.metrics:
        if metrics is None:
            raise SystemExit(f"--metrics needs --algo baseline or improved (got {algo})")
        with open(args.metrics, "w") as fh:
            fh.write(metrics.dumps() + "\n")
    return OK


def cmd_verify(args, out):
    g = _load(args)
    rep = harness.verify(g, cross=args.cross)
    out.write(json.dumps(rep) + "\n")
    return OK if rep["passed"] else FAIL


def cmd_bench(args, out):
    with open(args.suite) as fh:
        suite = json.load(fh)
    sink = None
    fh = None
    if args.out:
        fh = open(args.out, "w")

        def sink(rec):
            fh.write(harness.dumps_record(rec) + "\n")
            fh.flush()
    else:
        def sink(rec):
            out.write(harness.dumps_record(rec) + "\n")
    try:
        harness.bench(suite, workers=args.workers, timeout=args.timeout, sink=sink)
    finally:
        if fh:
            fh.close()
    return OK


def _number(tok):
    try:
        return int(tok)
    except ValueError:
        return float(tok)


def cmd_generate(args, out):
    g = generate(args.kind, *[_number(a) for a in args.params])
    text = format_edge_list(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return OK


def build_parser():
    p = _Parser(prog="cclique", description="Maximal cliques of (weakly) c-closed graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("closure", help="closure and weak-closure numbers as JSON")
    s.add_argument("file")
    s.add_argument("--relabel", action="store_true", help="accept arbitrary vertex tokens")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("wedges", help="wedge totals and per-vertex endpoint counts")
    s.add_argument("file")
    s.add_argument("--dump", metavar="PATH", help="write canonical wedge triples here")
    s.add_argument("--relabel", action="store_true")
    s.set_defaults(func=cmd_wedges)

    s = sub.add_parser("enumerate", help="list maximal cliques, one per line")
    s.add_argument("file")
    s.add_argument("--algo", default="improved",
                   choices=["baseline", "improved", "tomita", "outsens", "oracle"])
    s.add_argument("--filter", choices=FILTERS)
    s.add_argument("--kernel", default="tomita", choices=["tomita", "outsens"])
    s.add_argument("--auto-order", action="store_true", help="use the greedy weak-closure order")
    s.add_argument("--safe", action="store_true", help="shorthand for --filter exact")
    s.add_argument("--stats", action="store_true", help="append a JSON stats line")
    s.add_argument("--metrics", metavar="PATH", help="write run metrics as JSON")
    s.add_argument("--relabel", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="compare every pipeline against a reference")
    s.add_argument("file")
    s.add_argument("--cross", action="store_true",
                   help="use whole-graph pivot enumeration instead of the subset oracle")
    s.add_argument("--relabel", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", help="run a JSON suite, emit JSON lines")
    s.add_argument("suite")
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--timeout", type=float, help="seconds per task (default 60)")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("generate", help="write a generated instance as an edge list")
    s.add_argument("kind", choices=sorted(GENERATORS))
    s.add_argument("params", nargs="*", help="e.g. 'gnp 50 0.1 7' or 'planted_cclosed 200 8 1'")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (OracleLimitError, CuringRefusal) as exc:
        print(f"cclique: refused: {exc}", file=sys.stderr)
        return REFUSED
    except GraphParseError as exc:
        print(f"cclique: {args.file}: {exc}", file=sys.stderr)
        return USAGE
    except (OSError, ValueError, TypeError) as exc:
        print(f"cclique: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
