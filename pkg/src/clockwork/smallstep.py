"""Structural small-step semantics, used as a ground-truth oracle.

One configuration is a (command, store) pair; ``Skip`` is terminal.  The
step relation is deterministic:

    Set x a        ->  Skip                      (store updated)
    Seq Skip c2    ->  c2
    Seq c1 c2      ->  Seq c1' c2                when c1 -> c1'
    If b ct cf     ->  ct | cf                   by the guard's value
    While b c      ->  If b (Seq c (While b c)) Skip

This module deliberately shares nothing with the clocked evaluators
beyond the syntax and aval/bval: iterating ``step`` is an independent
path to final stores and trace lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .imp import Com, If, Seq, Set, Skip, Store, While, aval, bval, pretty

_SKIP = Skip()


@dataclass(frozen=True, slots=True)
class Config:
    """One small-step machine state."""

    com: Com
    store: Store

    def is_terminal(self) -> bool:
        return type(self.com) is Skip

    def render(self) -> str:
        return f"⟨{pretty(self.com)}, {self.store.pretty()}⟩"


@dataclass(frozen=True, slots=True)
class Terminated:
    store: Store
    steps: int


@dataclass(frozen=True, slots=True)
class StepLimit:
    cap: int


OracleOutcome = Union[Terminated, StepLimit]


def _step_parts(c: Com, s: Store) -> tuple[Com, Store, bool]:
    """One step of a non-terminal command; the flag marks a While unfold."""
    # Walk down the left spine of Seq nodes to the redex, iteratively so
    # that deeply left-nested programs cannot overflow the call stack.
    spine: list[Com] = []
    while type(c) is Seq and type(c.first) is not Skip:
        spine.append(c.second)
        c = c.first
    cls = type(c)
    unfolded = False
    if cls is Seq:  # first part is Skip
        c = c.second
    elif cls is Set:
        s = s.set(c.var, aval(c.expr, s))
        c = _SKIP
    elif cls is If:
        c = c.then_branch if bval(c.guard, s) else c.else_branch
    elif cls is While:
        c = If(c.guard, Seq(c.body, c), _SKIP)
        unfolded = True
    else:
        raise TypeError(f"not a command: {c!r}")
    while spine:
        c = Seq(c, spine.pop())
    return c, s, unfolded


def step(cfg: Config) -> Optional[Config]:
    """The unique successor of `cfg`, or None when `cfg` is terminal."""
    if type(cfg.com) is Skip:
        return None
    c, s, _ = _step_parts(cfg.com, cfg.store)
    return Config(c, s)


def iter_trace(c: Com, s: Store, cap: int) -> Iterator[Config]:
    """Yield the configurations from ⟨c, s⟩, at most `cap` steps long.

    The initial configuration is always yielded; at most cap + 1
    configurations are produced.  The trace is complete exactly when the
    last yielded configuration is terminal.
    """
    if cap < 1:
        raise ValueError("step cap must be positive")
    yield Config(c, s)
    for _ in range(cap):
        if type(c) is Skip:
            return
        c, s, _ = _step_parts(c, s)
        yield Config(c, s)


def run_oracle(c: Com, s: Store, cap: int) -> OracleOutcome:
    """Iterate `step` to termination or `cap` steps."""
    outcome, _ = run_oracle_stats(c, s, cap)
    return outcome


def run_oracle_stats(c: Com, s: Store, cap: int) -> tuple[OracleOutcome, int]:
    """Like run_oracle, also counting uses of the While unfold rule."""
    if cap < 1:
        raise ValueError("step cap must be positive")
    while_steps = 0
    for n in range(cap + 1):
        if type(c) is Skip:
            return Terminated(s, n), while_steps
        if n == cap:
            break
        c, s, unfolded = _step_parts(c, s)
        while_steps += unfolded
    return StepLimit(cap), while_steps
