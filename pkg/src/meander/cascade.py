"""Kostant cascades of Levi subalgebras and the Tauvel-Yu-Joseph index."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import exact
from .compositions import RootSubset, as_composition
from .roots import Root, dot, height, positive_roots, positive_roots_of


@dataclass(frozen=True)
class CascadeData:
    roots: tuple[Root, ...]
    span_dim: int


def _irreducible_factors(roots: list[Root]) -> list[list[Root]]:
    """Split a root subsystem into classes of the non-orthogonality relation."""
    factors: list[list[Root]] = []
    for r in roots:
        touching = [f for f in factors if any(dot(r, x) for x in f)]
        merged = [r]
        for f in touching:
            merged += f
            factors.remove(f)
        factors.append(merged)
    first = lambda f: min(next(i for i, x in enumerate(r) if x) for r in f)
    return sorted(factors, key=first)


def _cascade(algebra_type: str, n: int, roots: list[Root]) -> list[Root]:
    out = []
    for factor in _irreducible_factors(roots):
        top = max(factor, key=lambda r: height(algebra_type, n, r))
        out.append(top)
        out += _cascade(algebra_type, n, [r for r in factor if dot(r, top) == 0])
    return out


def cascade_of_subset(n: int, algebra_type: str, S) -> CascadeData:
    """Cascade of strongly orthogonal roots of the standard Levi ``l(S)``."""
    if algebra_type not in ("A", "D"):
        raise ValueError("cascades are provided for types A and D only")
    members = S.members if isinstance(S, RootSubset) else frozenset(S)
    return _cascade_cached(n, algebra_type, members)


@lru_cache(maxsize=4096)
def _cascade_cached(n: int, algebra_type: str, members: frozenset[int]) -> CascadeData:
    roots = tuple(_cascade(algebra_type, n, positive_roots_of(algebra_type, n, members)))
    return CascadeData(roots, exact.rank(roots))


def cascade_count_levi(a, d: int) -> int:
    """Size of the cascade of ``gl_{a_1} + ... + gl_{a_s} + so_2d``."""
    a = as_composition(a)
    return sum(p // 2 for p in a) + d - (d % 2)


def strongly_orthogonal(algebra_type: str, n: int, u: Root, v: Root) -> bool:
    roots = set(positive_roots(algebra_type, n))
    roots |= {tuple(-x for x in r) for r in roots}
    plus = tuple(x + y for x, y in zip(u, v))
    minus = tuple(x - y for x, y in zip(u, v))
    return dot(u, v) == 0 and plus not in roots and minus not in roots


def span_sum_dim(n: int, algebra_type: str, S, T) -> int:
    return exact.rank(cascade_of_subset(n, algebra_type, S).roots
                      + cascade_of_subset(n, algebra_type, T).roots)


def tyj_index(n: int, S, T, algebra_type: str = "D") -> int:
    """``rk g + dim E_S + dim E_T - 2 dim(E_S + E_T)``."""
    es = cascade_of_subset(n, algebra_type, S)
    et = cascade_of_subset(n, algebra_type, T)
    both = exact.rank(es.roots + et.roots)
    return n + es.span_dim + et.span_dim - 2 * both


def full_span(n: int, S) -> bool:
    """Whether ``E_S + E_Pi`` is all of the Cartan dual of so_2n."""
    return span_sum_dim(n, "D", S, range(1, n + 1)) == n


def full_span_predicted(a, d: int) -> bool:
    """Prediction of :func:`full_span` at odd n from the Levi data ``(a, d)``."""
    a = as_composition(a)
    return (d >= 2 and d % 2 == 0) or (d == 0 and a[-1] > 1)
