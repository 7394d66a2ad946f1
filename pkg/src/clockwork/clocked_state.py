"""Length-bounded evaluators: the clock is threaded through and returned.

A successful run yields a (store, leftover clock) pair, so the clock
bounds the total number of While unfolds across the whole run rather
than the depth of evaluation.  Three variants:

* ``cval`` guards against a (never actually occurring) clock increase by
  clamping each sequencing intermediate result with ``fix_clock``.
* ``cval_guard`` performs the same clamp at the consumption site, on the
  clock argument of the continuation call, instead of on the produced
  result.  Observably identical to ``cval``.
* ``cval_tick`` also spends one tick on every evaluation step, making
  the consumed clock count evaluation steps rather than While unfolds.

All variants return None on timeout and use explicit continuation
stacks, so multi-million clocks cannot overflow the interpreter stack.
"""

from __future__ import annotations

from typing import Optional

from .imp import Com, If, Seq, Set, Skip, Store, While, aval, bval

StateResult = Optional[tuple[Store, int]]

_EVAL = 0
_SEQK = 1


def _check_fuel(t: int) -> None:
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise ValueError(f"fuel must be a non-negative integer, got {t!r}")


def fix_clock(t: int, r: StateResult) -> StateResult:
    """Clamp the clock in `r` to at most `t`; timeouts pass through."""
    if r is None:
        return None
    s, t2 = r
    if t < t2:
        return (s, t)
    return r


def cval(c: Com, s: Store, t: int) -> StateResult:
    """Evaluate `c` in `s`, threading the clock; ticks are spent at While.

    SKIP and assignment return the clock unchanged; Seq clamps the first
    part's result with ``fix_clock`` and feeds its leftover clock to the
    second part; If passes the clock to the chosen branch; While with a
    true guard times out at clock 0 and otherwise runs the unfold with
    the decremented clock; a false guard returns (store, clock).
    """
    _check_fuel(t)
    stack: list[tuple[int, object, object]] = [(_EVAL, c, None)]
    push = stack.append
    pop = stack.pop
    while stack:
        tag, a, b = pop()
        if tag == _SEQK:
            # A timeout would already have returned, and fix_clock maps
            # timeouts to timeouts, so clamping only the success path is exact.
            s, t = fix_clock(a, (s, t))
            c = b
        else:
            c = a
        while True:
            cls = type(c)
            if cls is Skip:
                break
            if cls is Set:
                s = s.set(c.var, aval(c.expr, s))
                break
            if cls is Seq:
                push((_SEQK, t, c.second))
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
    return (s, t)


def cval_guard(c: Com, s: Store, t: int) -> StateResult:
    """`cval` with the clamp moved to the consumption site.

    The Seq clause continues with clock ``t if t < t2 else t2`` where t2
    is the first part's leftover, instead of clamping the produced result.
    """
    _check_fuel(t)
    stack: list[tuple[int, object, object]] = [(_EVAL, c, None)]
    push = stack.append
    pop = stack.pop
    while stack:
        tag, a, b = pop()
        if tag == _SEQK:
            if a < t:  # redundant safety check: leftover exceeded the input
                t = a
            c = b
        else:
            c = a
        while True:
            cls = type(c)
            if cls is Skip:
                break
            if cls is Set:
                s = s.set(c.var, aval(c.expr, s))
                break
            if cls is Seq:
                push((_SEQK, t, c.second))
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
    return (s, t)


def cval_tick(c: Com, s: Store, t: int) -> StateResult:
    """Threaded clock spent on every evaluation step.

    Every clause checks for clock 0 and consumes one tick on entry, so a
    successful run's consumed clock equals the number of evaluation steps
    taken and the leftover is strictly below the input.  Otherwise the
    clauses mirror ``cval``: Seq threads (and clamps) the clock, If picks
    a branch, While with a true guard runs the unfold.
    """
    _check_fuel(t)
    stack: list[tuple[int, object, object]] = [(_EVAL, c, None)]
    push = stack.append
    pop = stack.pop
    while stack:
        tag, a, b = pop()
        if tag == _SEQK:
            s, t = fix_clock(a, (s, t))
            c = b
        else:
            c = a
        while True:
            if t == 0:
                return None
            t -= 1
            cls = type(c)
            if cls is Skip:
                break
            if cls is Set:
                s = s.set(c.var, aval(c.expr, s))
                break
            if cls is Seq:
                push((_SEQK, t, c.second))
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
    return (s, t)


def cval_unfolds(c: Com, s: Store, t: int) -> tuple[StateResult, int]:
    """`cval` plus a count of guard-true While unfolds performed.

    On success the count equals the consumed clock; on timeout it counts
    the unfolds completed before the clock ran out.
    """
    _check_fuel(t)
    unfolds = 0
    stack: list[tuple[int, object, object]] = [(_EVAL, c, None)]
    push = stack.append
    pop = stack.pop
    while stack:
        tag, a, b = pop()
        if tag == _SEQK:
            r = fix_clock(a, (s, t))
            s, t = r
            c = b
        else:
            c = a
        while True:
            cls = type(c)
            if cls is Skip:
                break
            if cls is Set:
                s = s.set(c.var, aval(c.expr, s))
                break
            if cls is Seq:
                push((_SEQK, t, c.second))
                c = c.first
                continue
            if cls is If:
                c = c.then_branch if bval(c.guard, s) else c.else_branch
                continue
            if cls is While:
                if bval(c.guard, s):
                    if t == 0:
                        return (None, unfolds)
                    t -= 1
                    unfolds += 1
                    c = Seq(c.body, c)
                    continue
                break
            raise TypeError(f"not a command: {c!r}")
    return ((s, t), unfolds)
