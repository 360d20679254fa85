"""Root data of gl_n, so_2n+1, sp_2n and so_2n in epsilon coordinates."""

from __future__ import annotations

from functools import lru_cache

from .exact import solve

Root = tuple[int, ...]


def _e(n: int, *terms: tuple[int, int]) -> Root:
    v = [0] * n
    for i, c in terms:
        v[i - 1] += c
    return tuple(v)


@lru_cache(maxsize=None)
def simple_roots(algebra_type: str, n: int) -> tuple[Root, ...]:
    """``alpha_1..alpha_n`` (``alpha_1..alpha_{n-1}`` for gl_n)."""
    gl = tuple(_e(n, (i, 1), (i + 1, -1)) for i in range(1, n))
    if algebra_type == "A":
        return gl
    if algebra_type == "B":
        return gl + (_e(n, (n, 1)),)
    if algebra_type == "C":
        return gl + (_e(n, (n, 2)),)
    if algebra_type == "D":
        if n == 1:
            # so_2 has no roots; keep a formal placeholder so that |Pi| = n
            return (_e(n),)
        return gl + (_e(n, (n - 1, 1), (n, 1)),)
    raise ValueError(f"unknown type {algebra_type!r}")


@lru_cache(maxsize=None)
def positive_roots(algebra_type: str, n: int) -> tuple[Root, ...]:
    out = [_e(n, (i, 1), (j, -1)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if algebra_type == "A":
        return tuple(out)
    out += [_e(n, (i, 1), (j, 1)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if algebra_type == "B":
        out += [_e(n, (i, 1)) for i in range(1, n + 1)]
    elif algebra_type == "C":
        out += [_e(n, (i, 2)) for i in range(1, n + 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def simple_coordinates(algebra_type: str, n: int, root: Root) -> tuple[int, ...]:
    """Coefficients of ``root`` in the simple roots."""
    coeffs = solve(simple_roots(algebra_type, n), root)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise AssertionError(f"{root} is not in the root lattice of {algebra_type}{n}")
    return tuple(int(c) for c in coeffs)


@lru_cache(maxsize=None)
def root_support(algebra_type: str, n: int) -> dict[Root, frozenset[int]]:
    """Simple-root support (1-based indices) of every positive root."""
    return {r: frozenset(i + 1 for i, c in enumerate(simple_coordinates(algebra_type, n, r)) if c)
            for r in positive_roots(algebra_type, n)}


def positive_roots_of(algebra_type: str, n: int, S) -> list[Root]:
    """Positive roots of the Levi subsystem spanned by the simple roots in ``S``."""
    S = frozenset(S)
    return [r for r, supp in root_support(algebra_type, n).items() if supp <= S]


def height(algebra_type: str, n: int, root: Root) -> int:
    return sum(simple_coordinates(algebra_type, n, root))


def dot(u: Root, v: Root) -> int:
    return sum(x * y for x, y in zip(u, v))
