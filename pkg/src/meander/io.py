"""JSON and CSV serialisation of graphs, traces and enumeration records."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from typing import IO, Iterable

from .compositions import SeaweedSpec, SpecError, seaweed
from .frobenius import EnumerationRecord
from .graph import MeanderGraph, build_meander, components
from .index import index_A, index_BC, index_D
from .reduction import ReductionStep, ReductionTrace

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class ComponentDoc:
    kind: str
    vertices: tuple[int, ...]
    sigma_stable: bool | None
    strange: bool


@dataclass(frozen=True)
class GraphDocument:
    schema_version: str
    algebra_type: str
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    crossing: bool
    arcs_below: tuple[tuple[int, int], ...]
    arcs_above: tuple[tuple[int, int], ...]
    mirror: float | None
    components: tuple[ComponentDoc, ...]
    m_a: int | None
    m_b: int | None
    epsilon: int | None
    index: int

    def graph(self) -> MeanderGraph:
        vc = sum(self.a) if self.algebra_type == "A" else 2 * self.n + (self.algebra_type == "B")
        return MeanderGraph(vc, frozenset(self.arcs_below), frozenset(self.arcs_above),
                            self.mirror, self.crossing)


def graph_document(spec: SeaweedSpec, sl: bool = False) -> GraphDocument:
    g = build_meander(spec)
    s = components(g)
    eps = None
    t = spec.algebra_type
    if t == "A":
        ind = index_A(spec.a, spec.b, "sl" if sl else "gl")
    elif t in "BC":
        ind = index_BC(spec.a, spec.b, spec.n, t)
    else:
        r = index_D(spec)
        ind, eps = r.index, r.epsilon
    comps = tuple(ComponentDoc(c.kind, tuple(c.vertices), c.sigma_stable, c.strange)
                  for c in s.components)
    mirrored = g.mirror is not None
    return GraphDocument(SCHEMA_VERSION, t, spec.n, tuple(spec.a), tuple(spec.b), spec.crossing,
                         tuple(sorted(g.arcs_below)), tuple(sorted(g.arcs_above)), g.mirror,
                         comps, s.m_a if mirrored else None, s.m_b if mirrored else None, eps, ind)


def _check_version(d: dict) -> None:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise SpecError(f"unsupported schema_version {d.get('schema_version')!r}")


def encode_graph(doc: GraphDocument) -> dict:
    return asdict(doc)


def decode_graph(d: dict) -> GraphDocument:
    _check_version(d)
    pairs = lambda xs: tuple(tuple(x) for x in xs)
    comps = tuple(ComponentDoc(c["kind"], tuple(c["vertices"]), c["sigma_stable"], c["strange"])
                  for c in d["components"])
    return GraphDocument(d["schema_version"], d["algebra_type"], d["n"], tuple(d["a"]), tuple(d["b"]),
                         d["crossing"], pairs(d["arcs_below"]), pairs(d["arcs_above"]),
                         d["mirror"], comps, d["m_a"], d["m_b"], d["epsilon"], d["index"])


def encode_spec(spec: SeaweedSpec) -> dict:
    return {"algebra_type": spec.algebra_type, "n": spec.n, "a": list(spec.a), "b": list(spec.b),
            "crossing": spec.crossing, "crossing_side": spec.crossing_side}


def decode_spec(d: dict) -> SeaweedSpec:
    return seaweed(d["algebra_type"], d["n"], d["a"], d["b"], d["crossing"], d["crossing_side"])


def encode_trace(trace: ReductionTrace) -> dict:
    def step(s: ReductionStep) -> dict:
        return {"rule": s.rule, "index_delta": s.index_delta, "spec": encode_spec(s.spec),
                "successor": encode_spec(s.successor) if s.successor else None,
                "notation": s.successor.notation() if s.successor else None}
    return {"schema_version": SCHEMA_VERSION, "start": encode_spec(trace.start),
            "steps": [step(s) for s in trace.steps], "terminal": trace.terminal,
            "terminal_spec": encode_spec(trace.terminal_spec),
            "terminal_index": trace.terminal_index, "total_index": trace.total_index,
            "chain": trace.chain()}


def decode_trace(d: dict) -> ReductionTrace:
    _check_version(d)
    steps = tuple(ReductionStep(s["rule"], s["index_delta"], decode_spec(s["spec"]),
                                decode_spec(s["successor"]) if s["successor"] else None)
                  for s in d["steps"])
    return ReductionTrace(decode_spec(d["start"]), steps, d["terminal"],
                          decode_spec(d["terminal_spec"]), d["terminal_index"], d["total_index"])


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def write_records_csv(records: Iterable[EnumerationRecord], out: IO[str]) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(EnumerationRecord.columns())
    count = 0
    for r in records:
        w.writerow([int(x) if isinstance(x, bool) else x for x in r.row()])
        count += 1
    return count


def read_records_csv(inp: IO[str]) -> list[EnumerationRecord]:
    rows = csv.reader(inp)
    header = next(rows)
    if header != EnumerationRecord.columns():
        raise SpecError(f"unexpected CSV header {header}")
    out = []
    for row in rows:
        v = [int(x) for x in row]
        out.append(EnumerationRecord(v[0], v[1], v[2], bool(v[3]), *v[4:9], bool(v[9])))
    return out
