"""Depth-bounded evaluators: the clock is passed down and never returned.

Two disciplines for spending the clock:

* ``ev`` spends one tick at every evaluation step, so the clock bounds
  the depth of evaluation.  Even SKIP needs a nonzero clock.
* ``ev_min`` spends a tick only where the command being evaluated does
  not shrink, which is exactly the While unfold.  SKIP and assignment
  run with an empty clock.

A run that exhausts its clock returns None; a completed run returns the
final store.  Both functions use an explicit continuation stack rather
than native recursion, so clocks in the millions cannot overflow the
interpreter stack.
"""

from __future__ import annotations

from typing import Optional

from .imp import Com, Seq, Set, Skip, If, While, Store, aval, bval, size

EnvResult = Optional[Store]


def _check_fuel(t: int) -> None:
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise ValueError(f"fuel must be a non-negative integer, got {t!r}")


def ev(c: Com, s: Store, t: int) -> EnvResult:
    """Evaluate `c` in `s`, spending one tick on every evaluation step.

    Clause by clause: clock 0 is an immediate timeout for any command;
    SKIP yields the store; assignment yields the updated store; Seq runs
    both parts with the decremented clock; If runs the chosen branch
    with the decremented clock; While with a true guard runs the unfold
    ``Seq(body, While(...))`` with the decremented clock, and with a
    false guard yields the store.
    """
    _check_fuel(t)
    stack: list[tuple[Com, int]] = [(c, t)]
    push = stack.append
    pop = stack.pop
    while stack:
        c, t = pop()
        while True:
            if t == 0:
                return None
            cls = type(c)
            if cls is Skip:
                break
            if cls is Set:
                s = s.set(c.var, aval(c.expr, s))
                break
            t -= 1
            if cls is Seq:
                push((c.second, t))
                c = c.first
                continue
            if cls is If:
                c = c.then_branch if bval(c.guard, s) else c.else_branch
                continue
            if cls is While:
                if bval(c.guard, s):
                    c = Seq(c.body, c)
                    continue
                break
            raise TypeError(f"not a command: {c!r}")
    return s


def ev_min(c: Com, s: Store, t: int) -> EnvResult:
    """Evaluate `c` in `s`, spending a tick only at While unfolds.

    SKIP and assignment never consult the clock; Seq and If pass it
    through unchanged.  While with a true guard times out when the clock
    is 0 and otherwise runs the unfold with the decremented clock; a
    false guard yields the store.
    """
    _check_fuel(t)
    stack: list[tuple[Com, int]] = [(c, t)]
    push = stack.append
    pop = stack.pop
    while stack:
        c, t = pop()
        while True:
            cls = type(c)
            if cls is Skip:
                break
            if cls is Set:
                s = s.set(c.var, aval(c.expr, s))
                break
            if cls is Seq:
                push((c.second, t))
                c = c.first
                continue
            if cls is If:
                c = c.then_branch if bval(c.guard, s) else c.else_branch
                continue
            if cls is While:
                if bval(c.guard, s):
                    if t == 0:
                        return None
                    t -= 1
                    c = Seq(c.body, c)
                    continue
                break
            raise TypeError(f"not a command: {c!r}")
    return s


class TerminationMeasureError(AssertionError):
    """A recursive call failed to shrink the (clock, command size) measure."""


def ev_min_checked(c: Com, s: Store, t: int) -> EnvResult:
    """`ev_min`, additionally checking its termination measure at runtime.

    Every recursive call made by the defining equations must strictly
    decrease the lexicographic pair (clock, command size): the clock
    stays put only on calls whose command is a proper subterm.  Violations
    raise TerminationMeasureError; otherwise the result equals
    ``ev_min(c, s, t)``.
    """
    _check_fuel(t)
    # Frames carry the measure of the calling clause instance.
    stack: list[tuple[Com, int, Optional[tuple[int, int]]]] = [(c, t, None)]
    push = stack.append
    pop = stack.pop
    while stack:
        c, t, caller = pop()
        while True:
            measure = (t, size(c))
            if caller is not None and not measure < caller:
                raise TerminationMeasureError(
                    f"call measure {measure} does not decrease below {caller}"
                )
            caller = measure
            cls = type(c)
            if cls is Skip:
                break
            if cls is Set:
                s = s.set(c.var, aval(c.expr, s))
                break
            if cls is Seq:
                push((c.second, t, caller))
                c = c.first
                continue
            if cls is If:
                c = c.then_branch if bval(c.guard, s) else c.else_branch
                continue
            if cls is While:
                if bval(c.guard, s):
                    if t == 0:
                        return None
                    t -= 1
                    c = Seq(c.body, c)
                    continue
                break
            raise TypeError(f"not a command: {c!r}")
    return s
