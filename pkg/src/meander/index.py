"""Index of seaweeds read off their meander graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import SeaweedSpec, SpecError, as_composition
from .graph import (ComponentSummary, build_meander_A, build_meander_B,
                    build_meander_C, build_meander_D, components)


@dataclass(frozen=True)
class IndexReport:
    index: int
    epsilon: int | None
    summary: ComponentSummary
    formula_terms: tuple[int, int]  # (cycles, non-sigma-stable segments)


def index_A(a, b, algebra: str = "gl") -> int:
    s = components(build_meander_A(a, b))
    ind = 2 * s.cycles + s.segments
    if algebra == "sl":
        return ind - 1
    if algebra != "gl":
        raise SpecError(f"algebra must be 'gl' or 'sl', got {algebra!r}")
    return ind


def _half(count: int) -> int:
    if count % 2:
        raise AssertionError("non-sigma-stable segments must come in pairs")
    return count // 2


def index_BC(a, b, n: int, algebra_type: str = "C") -> int:
    g = build_meander_B(a, b, n) if algebra_type == "B" else build_meander_C(a, b, n)
    s = components(g)
    return s.cycles + _half(s.non_sigma_stable_segments)


def epsilon_D(spec: SeaweedSpec, summary: ComponentSummary) -> int:
    """Correction term of the type-D index formula."""
    if spec.crossing:
        if summary.strange_kind == "cycle":
            return -1
        if summary.strange_kind == "segments":
            return 0
        raise AssertionError(f"crossing graph of {spec} has no strange component")
    hi, lo = max(summary.m_a, summary.m_b), min(summary.m_a, summary.m_b)
    if (hi - lo) % 2 == 0:
        return 0
    if hi % 2 == 1 and lo == 0 and summary.central_innermost_in_segment:
        return 1
    return -1


def index_D(spec: SeaweedSpec) -> IndexReport:
    summary = components(build_meander_D(spec))
    eps = epsilon_D(spec, summary)
    nss = summary.non_sigma_stable_segments
    ind = summary.cycles + _half(nss) + eps
    if ind < 0:
        raise AssertionError(f"negative index {ind} for {spec}")
    return IndexReport(ind, eps, summary, (summary.cycles, nss))


def index_of(spec: SeaweedSpec) -> int:
    """Index of any spec: gl_n for type A, so/sp otherwise."""
    t = spec.algebra_type
    if t == "A":
        return index_A(spec.a, spec.b)
    if t in "BC":
        return index_BC(spec.a, spec.b, spec.n, t)
    return index_D(spec).index


def k_value(a, n: int) -> int:
    a = as_composition(a)
    return sum(p // 2 for p in a) + (n - a.sum())
