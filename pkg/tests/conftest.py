from __future__ import annotations

from hypothesis import strategies as st

from meander.compositions import RootSubset, canonicalize_seaweed_D, seaweed


def all_pairs(n: int, rank: int | None = None):
    rank = n if rank is None else rank
    for s in range(1 << rank):
        for t in range(1 << rank):
            yield RootSubset.from_mask(n, s), RootSubset.from_mask(n, t)


def all_specs_D(n: int):
    for S, T in all_pairs(n):
        yield S, T, canonicalize_seaweed_D(n, S, T)


@st.composite
def compositions(draw, total: int):
    """Uniformly cut ``total`` at a random set of positions."""
    cuts = draw(st.sets(st.integers(1, total - 1), max_size=total - 1)) if total > 1 else set()
    pts = [0] + sorted(cuts) + [total]
    return tuple(b - a for a, b in zip(pts, pts[1:]))


@st.composite
def subset_pairs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    s = draw(st.integers(0, (1 << n) - 1))
    t = draw(st.integers(0, (1 << n) - 1))
    return n, RootSubset.from_mask(n, s), RootSubset.from_mask(n, t)


@st.composite
def specs_D(draw, max_n: int = 9):
    n, S, T = draw(subset_pairs(1, max_n))
    return canonicalize_seaweed_D(n, S, T)


@st.composite
def crossing_specs(draw, max_n: int = 10):
    n = draw(st.integers(2, max_n))
    a = draw(compositions(n).filter(lambda c: c[-1] >= 2))
    b = draw(compositions(n).filter(lambda c: c[-1] >= 2))
    return seaweed("D", n, a, b, crossing=True)


@st.composite
def bc_compositions(draw, max_n: int = 9):
    """``(a, b, n)`` with ``|a|, |b| <= n``."""
    n = draw(st.integers(1, max_n))
    la = draw(st.integers(0, n))
    lb = draw(st.integers(0, n))
    a = draw(compositions(la)) if la else ()
    b = draw(compositions(lb)) if lb else ()
    return a, b, n
