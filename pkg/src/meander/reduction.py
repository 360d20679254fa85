"""The inductive procedure for type-D seaweeds.

Each step rewrites ``(n; a | b)`` into a smaller seaweed of the same index,
up to the recorded ``index_delta``. The rewriting ends at a parabolic, at
``q_ec(m)`` or at zero, whose indices are known in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .compositions import Composition, SeaweedSpec, SpecError, as_composition, seaweed

TERMINAL_RULES = ("terminal-parabolic", "terminal-q_ec", "terminal-zero")
RULES = TERMINAL_RULES + (
    "strip-equal-head",
    "rewrite-small-head",
    "rewrite-large-head",
    "rewrite-small-head-mirror",
    "rewrite-large-head-mirror",
    "central-swap",
)


@dataclass(frozen=True)
class ReductionStep:
    rule: str
    index_delta: int
    spec: SeaweedSpec
    successor: SeaweedSpec | None = None

    @property
    def terminal(self) -> bool:
        return self.rule in TERMINAL_RULES


@dataclass(frozen=True)
class ReductionTrace:
    start: SeaweedSpec
    steps: tuple[ReductionStep, ...]
    terminal: str  # "parabolic", "q_ec" or "zero"
    terminal_spec: SeaweedSpec
    terminal_index: int
    total_index: int = field(default=0)

    def chain(self) -> list[str]:
        """Successive seaweeds in arrow notation, the swap marked with ``*``."""
        out = [self.start.notation()]
        for st in self.steps:
            tag = "* " if st.rule == "central-swap" else ""
            out.append(tag + st.successor.notation())
        return out

    def __str__(self) -> str:
        return " ⟿ ".join(self.chain())


def parabolic_index_closed_form(a, n: int) -> int:
    """Index of the parabolic ``q_n(a | ∅)`` of so_2n."""
    a = as_composition(a)
    d = n - a.sum()
    if d < 0 or (d == 1 and n > 0):
        raise SpecError(f"excluded or oversized composition {a} for n = {n}")
    k = sum(p // 2 for p in a) + d
    if n % 2 == 0:
        return k if d % 2 == 0 else k - 1
    if d % 2 == 1:
        return k
    if d == 0 and a[-1] == 1:
        return k + 1
    return k - 1


def q_ec_index(m: int) -> int:
    if m < 2:
        raise SpecError(f"q_ec(m) needs m >= 2, got {m}")
    return m - 2


def _successor(spec: SeaweedSpec, n: int, a, b, crossing=None) -> SeaweedSpec:
    crossing = spec.crossing if crossing is None else crossing
    if n == 0:
        return seaweed("D", 0, (), ())
    side = spec.crossing_side if crossing else None
    return seaweed("D", n, a, b, crossing, side)


def _rewrite(n: int, a: Composition, b: Composition):
    """One application of the head rewrite for ``a_1 < b_1``."""
    a1, b1 = a[0], b[0]
    if 2 * a1 <= b1:
        return "rewrite-small-head", n - a1, a[1:], (b1 - 2 * a1, a1) + b[1:]
    return "rewrite-large-head", n - b1 + a1, (2 * a1 - b1,) + a[1:], (a1,) + b[1:]


def reduce_step(spec: SeaweedSpec) -> ReductionStep:
    if spec.algebra_type != "D":
        raise SpecError(f"reduction expects a type D spec, got type {spec.algebra_type}")
    n, a, b = spec.n, spec.a, spec.b
    if n == 0:
        return ReductionStep("terminal-zero", 0, spec)
    if spec.wrong_side:
        # relabel the two central vertices; the crossing moves to the other side
        side = "above" if spec.crossing_side == "below" else "below"
        last = (a if side == "below" else b)[-1]
        if last == 1:
            succ = seaweed("D", n, a, b)
        else:
            succ = seaweed("D", n, a, b, True, side)
        return ReductionStep("central-swap", 0, spec, succ)
    if spec.crossing and len(a) == 1 and len(b) == 1:
        return ReductionStep("terminal-q_ec", 0, spec)
    if not a or not b:
        return ReductionStep("terminal-parabolic", 0, spec)
    if a[0] == b[0]:
        return ReductionStep("strip-equal-head", a[0], spec,
                             _successor(spec, n - a[0], a[1:], b[1:]))
    if a[0] < b[0]:
        rule, m, na, nb = _rewrite(n, a, b)
    else:
        rule, m, nb, na = _rewrite(n, b, a)
        rule += "-mirror"
    return ReductionStep(rule, 0, spec, _successor(spec, m, na, nb))


def terminal_index(step: ReductionStep) -> int:
    spec = step.spec
    if step.rule == "terminal-zero":
        return 0
    if step.rule == "terminal-q_ec":
        return q_ec_index(spec.n)
    if step.rule == "terminal-parabolic":
        return parabolic_index_closed_form(spec.a or spec.b, spec.n)
    raise ValueError(f"{step.rule} is not a terminal rule")


def reduce_trace(spec: SeaweedSpec) -> ReductionTrace:
    budget = 4 * (spec.n + len(spec.a) + len(spec.b)) + 4
    steps, current = [], spec
    for _ in range(budget):
        step = reduce_step(current)
        if step.terminal:
            t_index = terminal_index(step)
            total = sum(s.index_delta for s in steps) + t_index
            return ReductionTrace(spec, tuple(steps), step.rule.removeprefix("terminal-"),
                                  current, t_index, total)
        steps.append(step)
        current = step.successor
    raise RuntimeError(f"reduction of {spec} exceeded {budget} steps")
