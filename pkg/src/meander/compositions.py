"""Compositions, simple-root subsets and canonical seaweed specifications.

Simple roots are addressed by their index ``1..n``. In type D the last two
are ``alpha_{n-1} = e_{n-1} - e_n`` and ``alpha_n = e_{n-1} + e_n``; this is
where all the type-D special cases come from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class SpecError(ValueError):
    """An input violates an invariant of compositions or seaweed specs."""


@dataclass(frozen=True)
class Composition:
    """Finite sequence of positive integers. Zero parts are dropped."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise SpecError(f"composition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", tuple(p for p in parts if p))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip()
        if not text or text in ("-", "∅"):
            return cls(())
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError:
            raise SpecError(f"cannot parse composition {text!r}") from None

    def sum(self) -> int:
        return sum(self.parts)

    def reverse(self) -> "Composition":
        return Composition(self.parts[::-1])

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __add__(self, other: "Composition") -> "Composition":
        return Composition(self.parts + tuple(other))

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "∅"

    def partial_sums(self) -> list[int]:
        out, acc = [], 0
        for p in self.parts:
            acc += p
            out.append(acc)
        return out


def as_composition(a) -> Composition:
    return a if isinstance(a, Composition) else Composition(a)


@dataclass(frozen=True)
class RootSubset:
    """A subset of the simple roots, given by indices in ``1..n``."""

    n: int
    members: frozenset[int] = frozenset()

    def __init__(self, n: int, members: Iterable[int] = ()):
        members = frozenset(int(i) for i in members)
        bad = [i for i in members if not 1 <= i <= n]
        if bad:
            raise SpecError(f"simple root indices {sorted(bad)} outside 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, n: int) -> "RootSubset":
        return cls(n, range(1, n + 1))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "RootSubset":
        return cls(n, (i + 1 for i in range(n) if mask >> i & 1))

    @property
    def mask(self) -> int:
        return sum(1 << (i - 1) for i in self.members)

    def __contains__(self, i: int) -> bool:
        # alpha_0 does not exist; treating it as present keeps n = 1 admissible
        return i < 1 or i in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def complement(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if i not in self.members]

    def swap_last_two(self) -> "RootSubset":
        n = self.n
        swap = {n - 1: n, n: n - 1}
        return RootSubset(n, (swap.get(i, i) for i in self.members))


def _as_subset(n: int, S) -> RootSubset:
    return S if isinstance(S, RootSubset) else RootSubset(n, S)


def _differences(cuts: list[int]) -> Composition:
    prev, parts = 0, []
    for c in cuts:
        parts.append(c - prev)
        prev = c
    return Composition(parts)


# -- type A -----------------------------------------------------------------

def subset_to_composition_A(n: int, S) -> Composition:
    """Block sizes of the standard Levi of gl_n with simple roots ``S``."""
    members = S.members if isinstance(S, RootSubset) else frozenset(S)
    bad = sorted(i for i in members if not 1 <= i < n)
    if bad:
        raise SpecError(f"invalid subset for gl_{n}: indices {bad} not in 1..{n - 1}")
    cuts = [i for i in range(1, n) if i not in members] + [n]
    return _differences(cuts)


def composition_to_subset_A(a) -> RootSubset:
    a = as_composition(a)
    n = a.sum()
    cuts = set(a.partial_sums()[:-1])
    return RootSubset(n, (i for i in range(1, n) if i not in cuts))


# -- types B and C ----------------------------------------------------------

def subset_to_composition_BC(n: int, S) -> Composition:
    S = _as_subset(n, S)
    return _differences(S.complement())


def composition_to_subset_BC(a, n: int) -> RootSubset:
    a = as_composition(a)
    if a.sum() > n:
        raise SpecError(f"|a| = {a.sum()} exceeds n = {n}")
    cuts = set(a.partial_sums())
    return RootSubset(n, (i for i in range(1, n + 1) if i not in cuts))


# -- type D -----------------------------------------------------------------

def is_admissible(n: int, S) -> bool:
    S = _as_subset(n, S)
    return not (n - 1 not in S and n in S)


def subset_to_composition_D(n: int, S) -> tuple[Composition | None, bool]:
    """Composition of an admissible subset, or ``(None, False)``.

    With alpha_{n-1}, alpha_n both in S the sum is at most n - 2; with
    alpha_n missing the sum is exactly n.
    """
    S = _as_subset(n, S)
    if not is_admissible(n, S):
        return None, False
    cut = S.complement()
    if n in S:
        return _differences(cut), True
    cut = [i for i in cut if i != n] + [n]
    return _differences(cut), True


def composition_to_subset_D(a, n: int) -> RootSubset:
    """Admissible subset of a composition with ``|a| <= n``, ``|a| != n - 1``."""
    a = as_composition(a)
    total = a.sum()
    if total > n or (total == n - 1 and n > 1):
        raise SpecError(f"no admissible subset for |a| = {total}, n = {n}")
    sums = a.partial_sums()
    if total == n:
        cuts = set(sums[:-1]) | {n}
    else:
        cuts = set(sums)
    return RootSubset(n, (i for i in range(1, n + 1) if i not in cuts))


def symmetrize(a, n: int, variant: str = "D_or_C") -> Composition:
    """``(a, 2d, a^-1)`` with ``d = n - |a|``; the B variant uses ``2d + 1``."""
    a = as_composition(a)
    d = n - a.sum()
    if d < 0:
        raise SpecError(f"|a| = {a.sum()} exceeds n = {n}")
    middle = 2 * d + 1 if variant == "B" else 2 * d
    return Composition(a.parts + (middle,) + a.parts[::-1])


def normalize_excluded(a, n: int) -> Composition:
    """Replace a composition of ``n - 1`` by ``(a, 1)``; same parabolic of so_2n."""
    a = as_composition(a)
    if a.sum() == n - 1:
        return a + Composition((1,))
    return a


# -- seaweed specifications -------------------------------------------------

ALGEBRA_TYPES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class SeaweedSpec:
    """A standard seaweed given by two compositions.

    ``crossing_side`` records on which side of the line the two crossing arcs
    are drawn. It defaults to the side of the smaller last part (below on a
    tie); reduction can produce the other side transiently.
    """

    algebra_type: str
    n: int
    a: Composition
    b: Composition
    crossing: bool = False
    crossing_side: str | None = field(default=None)

    def __post_init__(self):
        t = self.algebra_type
        if t not in ALGEBRA_TYPES:
            raise SpecError(f"unknown algebra type {t!r}")
        a, b = as_composition(self.a), as_composition(self.b)
        n = self.n
        if n < 0 or (n == 0 and t != "D"):
            raise SpecError(f"rank must be positive, got n = {n}")
        if t == "D" and not self.crossing:
            a, b = normalize_excluded(a, n), normalize_excluded(b, n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if t == "A":
            if a.sum() != n or b.sum() != n:
                raise SpecError(f"type A needs |a| = |b| = n = {n}, got {a.sum()}, {b.sum()}")
        elif a.sum() > n or b.sum() > n:
            raise SpecError(f"need |a|, |b| <= n = {n}, got {a.sum()}, {b.sum()}")
        if not self.crossing:
            if self.crossing_side is not None:
                raise SpecError("crossing_side given for a seaweed without crossing")
            return
        if t != "D":
            raise SpecError("only type D seaweeds can have a crossing")
        if a.sum() != n or b.sum() != n:
            raise SpecError(f"crossing needs |a| = |b| = n = {n}")
        side = self.crossing_side or self.correct_side
        if side not in ("below", "above"):
            raise SpecError(f"crossing_side must be 'below' or 'above', got {side!r}")
        object.__setattr__(self, "crossing_side", side)
        altered = a if side == "below" else b
        if altered[-1] < 2:
            raise SpecError("crossing needs the last part on the crossing side to be >= 2")
        if self.crossing_side == self.correct_side and min(a[-1], b[-1]) < 2:
            raise SpecError("crossing needs a_s >= 2 and b_t >= 2")

    @property
    def correct_side(self) -> str | None:
        if not self.crossing:
            return None
        return "below" if self.a[-1] <= self.b[-1] else "above"

    @property
    def wrong_side(self) -> bool:
        return self.crossing and self.crossing_side != self.correct_side and self.a[-1] != self.b[-1]

    def swapped(self) -> "SeaweedSpec":
        side = {"below": "above", "above": "below"}.get(self.crossing_side)
        return SeaweedSpec(self.algebra_type, self.n, self.b, self.a, self.crossing, side)

    def notation(self) -> str:
        body = f"({self.a}|{self.b})"
        if self.algebra_type == "D":
            if self.n == 0:
                return "0"
            return f"q_{self.n}{body}" + ("_c" if self.crossing else "")
        return f"q^{self.algebra_type}_{self.n}{body}"

    def __str__(self) -> str:
        return self.notation()


def seaweed(algebra_type: str, n: int, a, b, crossing: bool = False,
            crossing_side: str | None = None) -> SeaweedSpec:
    return SeaweedSpec(algebra_type, n, as_composition(a), as_composition(b),
                       crossing, crossing_side)


def has_crossing(n: int, S, T) -> bool:
    S, T = _as_subset(n, S), _as_subset(n, T)
    if n < 2:
        return False
    m, l = n - 1, n
    return ((m in T and m not in S and l in S and l not in T)
            or (m in S and m not in T and l in T and l not in S))


def canonicalize_seaweed_D(n: int, S, T) -> SeaweedSpec:
    """Turn ``q(S, T)`` in so_2n into compositions plus a crossing flag."""
    S, T = _as_subset(n, S), _as_subset(n, T)
    if has_crossing(n, S, T):
        s_ok, t_ok = is_admissible(n, S), is_admissible(n, T)
        assert s_ok != t_ok, "exactly one side of a crossing is non-admissible"
        fix = lambda X: RootSubset(n, (X.members - {n}) | {n - 1})
        if not s_ok:
            S = fix(S)
        else:
            T = fix(T)
        a, _ = subset_to_composition_D(n, S)
        b, _ = subset_to_composition_D(n, T)
        return SeaweedSpec("D", n, a, b, crossing=True)
    if not (is_admissible(n, S) and is_admissible(n, T)):
        S, T = S.swap_last_two(), T.swap_last_two()
    a, _ = subset_to_composition_D(n, S)
    b, _ = subset_to_composition_D(n, T)
    return SeaweedSpec("D", n, a, b)


def spec_from_subsets(algebra_type: str, n: int, S, T) -> SeaweedSpec:
    if algebra_type == "D":
        return canonicalize_seaweed_D(n, S, T)
    if algebra_type == "A":
        return SeaweedSpec("A", n, subset_to_composition_A(n, S), subset_to_composition_A(n, T))
    return SeaweedSpec(algebra_type, n, subset_to_composition_BC(n, S),
                       subset_to_composition_BC(n, T))


def subsets_of_spec(spec: SeaweedSpec) -> tuple[RootSubset, RootSubset]:
    """One pair ``(S, T)`` realising ``spec``; the inverse of canonicalisation."""
    n, t = spec.n, spec.algebra_type
    if t == "A":
        return composition_to_subset_A(spec.a), composition_to_subset_A(spec.b)
    if t in "BC":
        return composition_to_subset_BC(spec.a, n), composition_to_subset_BC(spec.b, n)
    S, T = composition_to_subset_D(spec.a, n), composition_to_subset_D(spec.b, n)
    if spec.crossing:
        if min(spec.a[-1], spec.b[-1]) < 2:
            raise SpecError(f"{spec} is a transient reduction state with no subset form")
        # either subset may carry the non-admissible alpha_n; the results are isomorphic
        S = RootSubset(n, (S.members - {n - 1}) | {n})
    return S, T
