"""Meander graphs of seaweeds and the analysis of their components."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .compositions import (Composition, SeaweedSpec, SpecError, as_composition,
                           seaweed, symmetrize)

Arc = tuple[int, int]


@dataclass(frozen=True)
class MeanderGraph:
    vertex_count: int
    arcs_below: frozenset[Arc]
    arcs_above: frozenset[Arc]
    mirror: float | None = None
    crossing: bool = False

    def sigma(self, v: int) -> int:
        """Reflection through the mirror."""
        return int(round(2 * self.mirror)) - v

    def arcs(self) -> Iterable[tuple[str, Arc]]:
        for arc in sorted(self.arcs_below):
            yield "below", arc
        for arc in sorted(self.arcs_above):
            yield "above", arc

    def is_central(self, arc: Arc) -> bool:
        return self.mirror is not None and arc[0] < self.mirror < arc[1]

    def relabel(self, perm: dict[int, int]) -> "MeanderGraph":
        f = lambda arcs: frozenset(_arc(perm.get(i, i), perm.get(j, j)) for i, j in arcs)
        return MeanderGraph(self.vertex_count, f(self.arcs_below), f(self.arcs_above),
                            self.mirror, self.crossing)

    def crossing_pairs(self) -> list[tuple[Arc, Arc]]:
        """Pairs of arcs on the same side whose drawings intersect."""
        out = []
        for arcs in (self.arcs_below, self.arcs_above):
            arcs = sorted(arcs)
            for k, (i, j) in enumerate(arcs):
                for (p, q) in arcs[k + 1:]:
                    if i < p < j < q:
                        out.append(((i, j), (p, q)))
        return out


def _arc(i: int, j: int) -> Arc:
    return (i, j) if i < j else (j, i)


def block_arcs(a: Composition, offset: int = 0) -> set[Arc]:
    """Nested arcs over each block of ``a``, widest arc joining the block ends."""
    arcs, start = set(), offset + 1
    for p in a:
        for k in range(p // 2):
            arcs.add((start + k, start + p - 1 - k))
        start += p
    return arcs


def build_meander_A(a, b) -> MeanderGraph:
    a, b = as_composition(a), as_composition(b)
    if a.sum() != b.sum():
        raise SpecError(f"type A needs |a| = |b|, got {a.sum()} and {b.sum()}")
    if a.sum() < 1:
        raise SpecError("type A meander graph needs at least one vertex")
    return MeanderGraph(a.sum(), frozenset(block_arcs(a)), frozenset(block_arcs(b)))


def build_meander_C(a, b, n: int) -> MeanderGraph:
    g = build_meander_A(symmetrize(a, n), symmetrize(b, n))
    return MeanderGraph(g.vertex_count, g.arcs_below, g.arcs_above, mirror=n + 0.5)


def build_meander_B(a, b, n: int) -> MeanderGraph:
    g = build_meander_A(symmetrize(a, n, "B"), symmetrize(b, n, "B"))
    return MeanderGraph(g.vertex_count, g.arcs_below, g.arcs_above, mirror=float(n + 1))


def build_meander_D(spec: SeaweedSpec) -> MeanderGraph:
    if spec.algebra_type != "D":
        raise SpecError(f"expected a type D spec, got type {spec.algebra_type}")
    n = spec.n
    if n == 0:
        return MeanderGraph(0, frozenset(), frozenset(), mirror=0.5)
    g = build_meander_C(spec.a, spec.b, n)
    if not spec.crossing:
        return g
    below, above = set(g.arcs_below), set(g.arcs_above)
    side = below if spec.crossing_side == "below" else above
    p = (spec.a if spec.crossing_side == "below" else spec.b)[-1]
    # the widest arcs of the two middle copies of the last part trade n and n+1
    side -= {(n - p + 1, n), (n + 1, n + p)}
    side |= {(n - p + 1, n + 1), (n, n + p)}
    return MeanderGraph(2 * n, frozenset(below), frozenset(above), mirror=n + 0.5, crossing=True)


def build_meander(spec: SeaweedSpec) -> MeanderGraph:
    t = spec.algebra_type
    if t == "A":
        return build_meander_A(spec.a, spec.b)
    if t == "B":
        return build_meander_B(spec.a, spec.b, spec.n)
    if t == "C":
        return build_meander_C(spec.a, spec.b, spec.n)
    return build_meander_D(spec)


# -- components -------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    kind: str  # "cycle" or "segment"
    vertices: tuple[int, ...]
    sigma_stable: bool | None
    strange: bool


@dataclass(frozen=True)
class ComponentSummary:
    cycles: int
    segments: int
    sigma_stable_segments: int
    strange_components: int
    strange_kind: str | None  # "cycle", "segments" or None
    m_a: int
    m_b: int
    central_innermost_in_segment: bool | None
    components: tuple[Component, ...] = ()

    @property
    def non_sigma_stable_segments(self) -> int:
        return self.segments - self.sigma_stable_segments


def _adjacency(g: MeanderGraph) -> dict[int, list[int]]:
    adj = {v: [] for v in range(1, g.vertex_count + 1)}
    for side, arcs in (("below", g.arcs_below), ("above", g.arcs_above)):
        ends = [v for arc in arcs for v in arc]
        if len(ends) != len(set(ends)):
            raise SpecError(f"two arcs {side} share a vertex")
        for i, j in arcs:
            adj[i].append(j)
            adj[j].append(i)
    return adj


def components(g: MeanderGraph) -> ComponentSummary:
    adj = _adjacency(g)
    for v, nbrs in adj.items():
        if len(nbrs) > 2:
            raise SpecError(f"vertex {v} has degree {len(nbrs)} > 2")
    central = {v for _, arc in g.arcs() if g.crossing and g.is_central(arc) for v in arc}
    seen: set[int] = set()
    comps = []
    for v in adj:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        verts = tuple(sorted(comp))
        kind = "cycle" if all(len(adj[u]) == 2 for u in verts) else "segment"
        stable = None
        if g.mirror is not None:
            stable = {g.sigma(u) for u in verts} == set(verts)
        comps.append(Component(kind, verts, stable, bool(central & set(verts))))

    cycles = sum(c.kind == "cycle" for c in comps)
    segs = [c for c in comps if c.kind == "segment"]
    strange = [c for c in comps if c.strange]
    strange_kind = None
    if strange:
        strange_kind = "cycle" if strange[0].kind == "cycle" else "segments"

    m_a = sum(g.is_central(arc) for arc in g.arcs_below)
    m_b = sum(g.is_central(arc) for arc in g.arcs_above)
    innermost = None
    if g.mirror is not None and not g.crossing:
        hi, lo = max(m_a, m_b), min(m_a, m_b)
        if lo == 0 and hi % 2 == 1:
            # the innermost central arc is the one through the vertex left of the mirror
            v = int(g.mirror - 0.5) if g.mirror % 1 else int(g.mirror) - 1
            innermost = next(c for c in comps if v in c.vertices).kind == "segment"
    return ComponentSummary(
        cycles=cycles,
        segments=len(segs),
        sigma_stable_segments=sum(bool(c.sigma_stable) for c in segs),
        strange_components=len(strange),
        strange_kind=strange_kind,
        m_a=m_a,
        m_b=m_b,
        central_innermost_in_segment=innermost,
        components=tuple(comps),
    )


# -- splitting ---------------------------------------------------------------

def split_three_pieces(spec: SeaweedSpec, m: int):
    """Split along a common prefix sum ``m`` of ``a`` and ``b``.

    Returns ``(left, center, right)``: the two type-A pieces on the outer
    ``m`` vertices of each end and the type-D seaweed of rank ``n - m`` in
    the middle (``None`` when ``m == n``). For a crossing spec with
    ``m == n`` the pieces describe the graph before the crossing alteration.
    """
    if spec.algebra_type != "D":
        raise SpecError("split_three_pieces expects a type D spec")
    n = spec.n
    if not (1 <= m <= n - 2 or m == n):
        raise SpecError(f"cannot split at m = {m}: need m <= n - 2 or m = n")
    sa, sb = spec.a.partial_sums(), spec.b.partial_sums()
    if m not in sa or m not in sb:
        raise SpecError(f"no common prefix sum {m} for {spec}")
    k, l = sa.index(m) + 1, sb.index(m) + 1
    a1, b1 = Composition(spec.a[:k]), Composition(spec.b[:l])
    left = seaweed("A", m, a1, b1)
    right = seaweed("A", m, a1.reverse(), b1.reverse())
    center = None
    if m < n:
        side = spec.crossing_side if spec.crossing else None
        center = seaweed("D", n - m, spec.a[k:], spec.b[l:], spec.crossing, side)
    return left, center, right


def glue_pieces(left: SeaweedSpec, center: SeaweedSpec | None, right: SeaweedSpec) -> MeanderGraph:
    """Disjoint union of the three piece graphs, relabelled into one line."""
    m = left.n
    lg, rg = build_meander_A(left.a, left.b), build_meander_A(right.a, right.b)
    below, above = set(lg.arcs_below), set(lg.arcs_above)
    width, crossing = 0, False
    if center is not None:
        cg = build_meander_D(center)
        width, crossing = cg.vertex_count, cg.crossing
        below |= {(i + m, j + m) for i, j in cg.arcs_below}
        above |= {(i + m, j + m) for i, j in cg.arcs_above}
    off = m + width
    below |= {(i + off, j + off) for i, j in rg.arcs_below}
    above |= {(i + off, j + off) for i, j in rg.arcs_above}
    total = 2 * m + width
    return MeanderGraph(total, frozenset(below), frozenset(above), mirror=total / 2 + 0.5,
                        crossing=crossing)
