"""Command line entry point: ``meander {index,reduce,verify,enumerate,graph}``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from .cascade import tyj_index
from .compositions import (Composition, RootSubset, SeaweedSpec, SpecError, has_crossing,
                           seaweed, spec_from_subsets)
from .frobenius import distinct_spec_count, enumerate_records
from .index import index_of
from .io import dumps, encode_graph, encode_trace, graph_document, write_records_csv
from .oracle import oracle_index
from .reduction import reduce_trace
from .render import render_ascii, render_svg

DEFAULT_SEED = 20161207
EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2
ORACLES = ("graph", "tyj", "matrix")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _parts(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise SpecError(f"expected comma-separated integers, got {text!r}") from None


def _subset(n: int, text: str, rank: int) -> RootSubset:
    members = _parts(text)
    bad = [i for i in members if not 1 <= i <= rank]
    if bad:
        raise SpecError(f"simple root indices must lie in 1..{rank}, got {bad}")
    return RootSubset(n, members)


def spec_from_args(args) -> SeaweedSpec:
    t, n = args.type, args.n
    subset_form = args.s is not None or args.t is not None
    comp_form = args.a is not None or args.b is not None
    if subset_form == comp_form:
        raise SpecError("give either --s/--t (subsets) or --a/--b (compositions)")
    if subset_form:
        rank = n - 1 if t == "A" else n
        S, T = _subset(n, args.s or "", rank), _subset(n, args.t or "", rank)
        if args.crossing and not (t == "D" and has_crossing(n, S, T)):
            raise SpecError("--crossing given but (S, T) has no crossing")
        return spec_from_subsets(t, n, S, T)
    a = Composition.parse(args.a or "")
    b = Composition.parse(args.b or "")
    return seaweed(t, n, a, b, args.crossing)


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", choices=list("ABCD"), default="D")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", help="simple roots of S, e.g. 1,2,4 ('' for none)")
    p.add_argument("--t", help="simple roots of T")
    p.add_argument("--a", help="composition below, e.g. 2,3 ('' for empty)")
    p.add_argument("--b", help="composition above")
    p.add_argument("--crossing", action="store_true")


def cmd_index(args) -> int:
    spec = spec_from_args(args)
    if args.sl and spec.algebra_type != "A":
        raise SpecError("--sl only applies to type A")
    print(dumps(encode_graph(graph_document(spec, sl=args.sl))))
    return EXIT_OK


def cmd_reduce(args) -> int:
    spec = spec_from_args(args)
    trace = reduce_trace(spec)
    if args.trace:
        print(dumps(encode_trace(trace)))
        return EXIT_OK
    print(trace.start.notation())
    for st in trace.steps:
        mark = "* " if st.rule == "central-swap" else ""
        delta = f", +{st.index_delta}" if st.index_delta else ""
        print(f"⟿ {mark}{st.successor.notation()}    [{st.rule}{delta}]")
    print(f"terminal {trace.terminal} with index {trace.terminal_index}; total index {trace.total_index}")
    return EXIT_OK


# -- verify -------------------------------------------------------------------

@dataclass
class VerifyConfig:
    n: int
    algebra_type: str = "D"
    oracles: tuple[str, ...] = ORACLES
    exhaustive: bool = True
    samples: int = 0
    seed: int = DEFAULT_SEED
    trials: int = 5
    max_exhaustive_n: int = 8


@dataclass
class VerifyReport:
    config: VerifyConfig
    pairs: int = 0
    agree: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return len(self.counterexamples)


def _oracle_value(name: str, t: str, n: int, S, T, cfg: VerifyConfig) -> int:
    if name == "graph":
        return index_of(spec_from_subsets(t, n, S, T))
    if name == "tyj":
        return tyj_index(n, S, T, t)
    return oracle_index(n, S, T, cfg.trials, cfg.seed, t)


def verify_pairs(cfg: VerifyConfig) -> VerifyReport:
    t, n = cfg.algebra_type, cfg.n
    if "tyj" in cfg.oracles and t not in "AD":
        raise SpecError("the tyj oracle is available for types A and D only")
    rank = n - 1 if t == "A" else n
    total = 1 << (2 * rank)
    if cfg.exhaustive:
        if n > cfg.max_exhaustive_n:
            raise SpecError(f"exhaustive mode is limited to n <= {cfg.max_exhaustive_n}")
        codes = range(total)
    else:
        codes = sorted(random.Random(cfg.seed).sample(range(total), min(cfg.samples, total)))
    report = VerifyReport(cfg)
    names = cfg.oracles
    report.agree = {(x, y): 0 for x in names for y in names}
    for code in codes:
        s_mask, t_mask = divmod(code, 1 << rank)
        S, T = RootSubset.from_mask(n, s_mask), RootSubset.from_mask(n, t_mask)
        vals = {x: _oracle_value(x, t, n, S, T, cfg) for x in names}
        report.pairs += 1
        for x in names:
            for y in names:
                report.agree[x, y] += vals[x] == vals[y]
        if len(set(vals.values())) > 1:
            report.counterexamples.append((s_mask, t_mask, vals))
    return report


def format_report(rep: VerifyReport) -> str:
    cfg = rep.config
    mode = "exhaustive" if cfg.exhaustive else f"{cfg.samples} samples"
    lines = [f"type {cfg.algebra_type}, n = {cfg.n}, {mode}, seed = {cfg.seed}, pairs = {rep.pairs}",
             "agreement matrix (pairs with equal index):"]
    w = max(len(x) for x in cfg.oracles) + 2
    lines.append(" " * w + "".join(x.rjust(w) for x in cfg.oracles))
    for x in cfg.oracles:
        lines.append(x.ljust(w) + "".join(str(rep.agree[x, y]).rjust(w) for y in cfg.oracles))
    for s, t, vals in rep.counterexamples[:20]:
        lines.append(f"MISMATCH S={s:#b} T={t:#b} " + " ".join(f"{k}={v}" for k, v in vals.items()))
    lines.append(f"mismatches: {rep.mismatches}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    oracles = tuple(x.strip() for x in args.oracles.split(",") if x.strip())
    unknown = set(oracles) - set(ORACLES)
    if unknown or not oracles:
        raise SpecError(f"unknown oracles {sorted(unknown)}; choose from {','.join(ORACLES)}")
    if args.samples is not None and args.exhaustive:
        raise SpecError("--exhaustive and --samples are exclusive")
    cfg = VerifyConfig(args.n, args.type, oracles, args.samples is None, args.samples or 0,
                       args.seed, args.trials, args.max_exhaustive_n)
    rep = verify_pairs(cfg)
    print(format_report(rep))
    return EXIT_MISMATCH if rep.mismatches else EXIT_OK


def cmd_enumerate(args) -> int:
    flt = (lambda r: r.frobenius) if args.frobenius_only else None
    records = enumerate_records(args.n, flt, workers=args.workers)
    if args.out == "-":
        count = write_records_csv(records, sys.stdout)
    else:
        try:
            with open(args.out, "w", newline="") as fh:
                count = write_records_csv(records, fh)
        except OSError as e:
            print(f"error: cannot write {args.out}: {e.strerror}", file=sys.stderr)
            return EXIT_INVALID
    print(f"records: {count} of {4 ** args.n} pairs", file=sys.stderr)
    if args.stats:
        print(f"distinct seaweeds: {distinct_spec_count(args.n)}", file=sys.stderr)
    return EXIT_OK


def cmd_graph(args) -> int:
    doc = graph_document(spec_from_args(args))
    if args.format == "json":
        text = dumps(encode_graph(doc)) + "\n"
    elif args.format == "svg":
        text = render_svg(doc)
    else:
        text = render_ascii(doc)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as e:
            print(f"error: cannot write {args.out}: {e.strerror}", file=sys.stderr)
            return EXIT_INVALID
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="meander", description="Meander graphs and the index of seaweed subalgebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("index", help="index and graph data as JSON")
    _add_spec_flags(q)
    q.add_argument("--sl", action="store_true", help="type A: index in sl_n instead of gl_n")
    q.set_defaults(func=cmd_index)

    q = sub.add_parser("reduce", help="run the inductive reduction")
    _add_spec_flags(q)
    q.add_argument("--trace", action="store_true", help="emit the trace as JSON")
    q.set_defaults(func=cmd_reduce)

    q = sub.add_parser("verify", help="compare index oracles over (S, T) pairs")
    q.add_argument("--type", choices=list("ABCD"), default="D")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--exhaustive", action="store_true", help="all pairs (the default)")
    q.add_argument("--samples", type=int, help="random sample of K pairs")
    q.add_argument("--oracles", default=",".join(ORACLES))
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--trials", type=int, default=5)
    q.add_argument("--max-exhaustive-n", type=int, default=8)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("enumerate", help="CSV of all seaweeds of so_2n")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--frobenius-only", action="store_true")
    q.add_argument("--out", default="-", help="output file, '-' for stdout")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--stats", action="store_true", help="also count distinct seaweeds")
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("graph", help="draw the meander graph")
    _add_spec_flags(q)
    q.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    q.add_argument("--out")
    q.set_defaults(func=cmd_graph)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
