"""Frobenius seaweeds of so_2n: structural criteria and exhaustive enumeration."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Callable, Iterator

from .compositions import RootSubset, SeaweedSpec, SpecError, as_composition, canonicalize_seaweed_D, seaweed
from .graph import build_meander_A, build_meander_D, components
from .index import index_BC, index_D

NOT_FROBENIUS_TWO_SEGMENTS = "not-frobenius-two-strange-segments"
FROBENIUS_SINGLE_CYCLE = "frobenius-single-cycle"
NOT_FROBENIUS_OTHER = "not-frobenius-other"


def frobenius_crossing_criterion(spec: SeaweedSpec) -> str:
    if not spec.crossing:
        raise SpecError(f"{spec} has no crossing")
    report = index_D(spec)
    s = report.summary
    if s.strange_kind == "segments":
        return NOT_FROBENIUS_TWO_SEGMENTS
    if report.index == 0:
        assert s.cycles == 1 and s.segments == 0 and spec.n % 2 == 0
        return FROBENIUS_SINGLE_CYCLE
    return NOT_FROBENIUS_OTHER


def _single_cycle(g) -> bool:
    s = components(g)
    return s.cycles == 1 and s.segments == 0


def mrs_gl2_bijection_check(a, b) -> bool:
    """Whether ``Gamma^A(a|b)`` is one cycle; checked against the crossing graph."""
    a, b = as_composition(a), as_composition(b)
    n = a.sum()
    if b.sum() != n or not a or a[-1] < 2 or b[-1] < 2:
        raise SpecError("need compositions of the same n with last parts >= 2")
    left = _single_cycle(build_meander_A(a, b))
    whole = _single_cycle(build_meander_D(seaweed("D", n, a, b, crossing=True)))
    assert left == whole, f"single-cycle property differs for ({a}|{b})"
    return left


@dataclass(frozen=True)
class NoCrossingVerdict:
    epsilon: int
    clause: str  # "i", "ii" or "iii"
    frobenius: bool
    type_c_partner: SeaweedSpec | None = None
    type_c_frobenius: bool | None = None
    central_arcs_even: bool | None = None
    clause_iii_structure: bool | None = None


def frobenius_no_crossing_criteria(spec: SeaweedSpec) -> NoCrossingVerdict:
    """Frobenius verdict from the sign of epsilon and the graph structure alone."""
    if spec.crossing:
        raise SpecError(f"{spec} has a crossing")
    report = index_D(spec)
    s, eps = report.summary, report.epsilon
    if eps == 1:
        return NoCrossingVerdict(eps, "i", False)
    if eps == 0:
        partner = seaweed("C", spec.n, spec.a, spec.b) if spec.n else None
        c_frob = partner is None or index_BC(spec.a, spec.b, spec.n) == 0
        even = (s.m_a + s.m_b) % 2 == 0
        return NoCrossingVerdict(eps, "ii", c_frob and even, partner, c_frob, even)
    # eps == -1
    n = spec.n
    through_middle = next(c for c in s.components if n in c.vertices)
    structure = ((s.m_a + s.m_b) % 2 == 1
                 and min(s.m_a, s.m_b) == 0
                 and s.cycles == 1
                 and through_middle.kind == "cycle"
                 and n + 1 in through_middle.vertices
                 and s.non_sigma_stable_segments == 0)
    return NoCrossingVerdict(eps, "iii", structure, clause_iii_structure=structure)


def is_frobenius_by_criteria(spec: SeaweedSpec) -> bool:
    if spec.crossing:
        return frobenius_crossing_criterion(spec) == FROBENIUS_SINGLE_CYCLE
    return frobenius_no_crossing_criteria(spec).frobenius


# -- enumeration ---------------------------------------------------------------

@dataclass(frozen=True)
class EnumerationRecord:
    n: int
    s_mask: int
    t_mask: int
    crossing: bool
    index: int
    epsilon: int
    cycles: int
    segments: int
    sigma_stable_segments: int
    frobenius: bool

    @classmethod
    def columns(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def row(self) -> tuple:
        return astuple(self)


def record_for(n: int, s_mask: int, t_mask: int) -> EnumerationRecord:
    spec = canonicalize_seaweed_D(n, RootSubset.from_mask(n, s_mask), RootSubset.from_mask(n, t_mask))
    r = index_D(spec)
    s = r.summary
    return EnumerationRecord(n, s_mask, t_mask, spec.crossing, r.index, r.epsilon,
                             s.cycles, s.segments, s.sigma_stable_segments, r.index == 0)


def _records_for_s(args: tuple[int, int]) -> list[EnumerationRecord]:
    n, s_mask = args
    return [record_for(n, s_mask, t) for t in range(1 << n)]


def enumerate_records(n: int, filter: Callable[[EnumerationRecord], bool] | None = None,
                      workers: int = 1) -> Iterator[EnumerationRecord]:
    """All ``4^n`` pairs ``(S, T)``, S-mask major and T-mask minor."""
    if n < 1:
        raise SpecError(f"n must be >= 1, got {n}")
    jobs = [(n, s) for s in range(1 << n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = pool.map(_records_for_s, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            for chunk in chunks:
                yield from (r for r in chunk if filter is None or filter(r))
        return
    for job in jobs:
        yield from (r for r in _records_for_s(job) if filter is None or filter(r))


def distinct_spec_count(n: int) -> int:
    """Number of distinct canonical specs among the ``4^n`` pairs."""
    seen = set()
    for s in range(1 << n):
        for t in range(1 << n):
            seen.add(canonicalize_seaweed_D(n, RootSubset.from_mask(n, s), RootSubset.from_mask(n, t)))
    return len(seen)
