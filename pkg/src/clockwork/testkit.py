"""Seeded program generation and the differential property harness.

Campaigns are reproducible across machines and runs: all randomness
comes from SplitMix64 (state advances by 0x9E3779B97F4A7C15; output is
the finalizer with multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB),
and case k of a campaign draws from an independent stream seeded with
``mix64(seed + k * 0x9E3779B97F4A7C15)``.  Bounded draws take the next
64-bit output modulo the range size.  Any failure can therefore be
replayed from (property id, seed, case index) alone.

The eleven property ids:

    P1   a successful threaded-clock run never returns more clock than
         it was given (strictly less for cval_tick)
    P2   fix_clock is the identity on cval results
    P3   cval_guard agrees exactly with cval
    P4   padding both sides of a sequence with SKIP never changes ev_min
    P5   the same SKIP-padding is invisible to ev when the operands'
         results are clock-stable one tick down (premises sampled over
         trace-reachable stores plus 32 random ones)
    P6   more fuel never changes a successful ev / ev_min outcome
    P7   success under ev implies success under ev_min, same store
    P8   three facets per case: (a) extra input fuel flows through
         cval / cval_tick unchanged, (b) success under cval implies
         success under ev_min with the same store, (c) any two
         successful runs agree on the final store
    P9   every oracle-terminated program is reached by all five
         evaluators, within a documented fuel bound
    P10  oracle step-limited programs time out at every small fuel
    RT   parse(pretty(c)) == c
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Union

from .clocked_env import EnvResult, ev, ev_min
from .clocked_state import StateResult, cval, cval_guard, cval_tick, fix_clock
from .imp import (
    Aexp,
    And,
    Bc,
    Bexp,
    Com,
    If,
    Less,
    N,
    Not,
    Plus,
    Seq,
    Set,
    Skip,
    Store,
    V,
    While,
    pretty,
    size,
)
from .parser import ParseError, parse_com
from .smallstep import StepLimit, Terminated, iter_trace, run_oracle, run_oracle_stats

SEMANTICS: dict[str, Callable[[Com, Store, int], object]] = {
    "ev": ev,
    "ev_min": ev_min,
    "cval": cval,
    "cval_guard": cval_guard,
    "cval_tick": cval_tick,
}
ENV_SEMANTICS = frozenset({"ev", "ev_min"})

PROPERTY_IDS = ("P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "RT")

ORACLE_CAP = 10_000
TIMEOUT_FUEL_CEILING = 256
_P5_TRACE_CAP = 4096
_P5_EXTRA_STORES = 32


def search_bound(steps: int, program_size: int) -> int:
    """Fuel ceiling for finding depth-clocked results of an oracle-terminated
    run: 4 * (steps + program size) + 8.

    Confirmed by exhaustive search over small programs (see the fuel-bound
    test module) before being baked into P9.
    """
    return 4 * (steps + program_size) + 8


# --------------------------------------------------------------------------
# PRNG


_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer; also used to derive per-case stream seeds."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator with a one-word state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw from [0, n)."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Inclusive range draw."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: float) -> bool:
        return self.next_u64() < int(p * 18446744073709551616.0)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def case_stream(seed: int, case_index: int) -> SplitMix64:
    """Independent per-case stream; see the module docstring for the formula."""
    return SplitMix64(mix64(seed + case_index * _GAMMA))


# --------------------------------------------------------------------------
# Generation


@dataclass(frozen=True)
class GenConfig:
    """Knobs for random program generation.

    ``loop_bias`` is the fraction of While nodes drawn from a guaranteed-
    terminating counting-loop template rather than a free guard and body.
    """

    seed: int
    max_size: int = 12
    var_pool: tuple[str, ...] = ("x", "y", "z")
    literal_range: tuple[int, int] = (-4, 4)
    loop_bias: float = 0.5

    def __post_init__(self) -> None:
        if self.max_size < 1:
            raise ValueError("max_size must be positive")
        if not self.var_pool:
            raise ValueError("var_pool must be non-empty")
        lo, hi = self.literal_range
        if lo > hi:
            raise ValueError("literal_range must be non-empty")
        if not 0.0 <= self.loop_bias <= 1.0:
            raise ValueError("loop_bias must lie in [0, 1]")


def _gen_aexp(rng: SplitMix64, cfg: GenConfig, depth: int) -> Aexp:
    lo, hi = cfg.literal_range
    if depth <= 0 or rng.below(3) == 0:
        if rng.below(2) == 0:
            return N(rng.randint(lo, hi))
        return V(rng.choice(cfg.var_pool))
    pick = rng.below(3)
    if pick == 0:
        return N(rng.randint(lo, hi))
    if pick == 1:
        return V(rng.choice(cfg.var_pool))
    return Plus(_gen_aexp(rng, cfg, depth - 1), _gen_aexp(rng, cfg, depth - 1))


def _gen_bexp(rng: SplitMix64, cfg: GenConfig, depth: int) -> Bexp:
    if depth <= 0:
        if rng.below(3) == 0:
            return Bc(rng.below(2) == 0)
        return Less(_gen_aexp(rng, cfg, 1), _gen_aexp(rng, cfg, 1))
    pick = rng.below(6)
    if pick == 0:
        return Bc(rng.below(2) == 0)
    if pick == 1:
        return Not(_gen_bexp(rng, cfg, depth - 1))
    if pick == 2:
        return And(_gen_bexp(rng, cfg, depth - 1), _gen_bexp(rng, cfg, depth - 1))
    return Less(_gen_aexp(rng, cfg, 1), _gen_aexp(rng, cfg, 1))


def _counting_loop(rng: SplitMix64, cfg: GenConfig) -> While:
    # Terminating template: count a fresh variable up to a fresh literal.
    x = rng.choice(cfg.var_pool)
    lo, hi = cfg.literal_range
    k = rng.randint(lo, hi)
    return While(Less(V(x), N(k)), Set(x, Plus(V(x), N(1))))


def _gen_com(rng: SplitMix64, cfg: GenConfig, budget: int) -> Com:
    choices = [("skip", 1), ("set", 3)]
    if budget >= 2:
        choices.append(("while", 3))
    if budget >= 3:
        choices.append(("seq", 4))
        choices.append(("if", 2))
    total = sum(w for _, w in choices)
    r = rng.below(total)
    for tag, w in choices:
        if r < w:
            break
        r -= w
    if tag == "skip":
        return Skip()
    if tag == "set":
        return Set(rng.choice(cfg.var_pool), _gen_aexp(rng, cfg, 2))
    if tag == "while":
        if rng.chance(cfg.loop_bias):
            return _counting_loop(rng, cfg)
        return While(_gen_bexp(rng, cfg, 2), _gen_com(rng, cfg, budget - 1))
    left = rng.randint(1, budget - 2)
    right = budget - 1 - left
    if tag == "seq":
        return Seq(_gen_com(rng, cfg, left), _gen_com(rng, cfg, right))
    return If(_gen_bexp(rng, cfg, 2), _gen_com(rng, cfg, left), _gen_com(rng, cfg, right))


def gen_com(cfg: GenConfig, budget: int) -> Com:
    """Deterministic random command with size(c) <= budget."""
    if budget < 1:
        raise ValueError("budget must be positive")
    return _gen_com(SplitMix64(mix64(cfg.seed)), cfg, budget)


def _gen_store(rng: SplitMix64, cfg: GenConfig) -> Store:
    lo, hi = cfg.literal_range
    return Store({x: rng.randint(lo, hi) for x in cfg.var_pool})


def _gen_fuel(rng: SplitMix64) -> int:
    pick = rng.below(10)
    if pick == 0:
        return 0
    if pick == 1:
        return 1
    return rng.randint(0, 64)


def gen_store(cfg: GenConfig) -> Store:
    """Deterministic random store over the configured variable pool."""
    return _gen_store(SplitMix64(mix64(cfg.seed ^ 0x5353)), cfg)


# --------------------------------------------------------------------------
# Fuel search


def fuel_search(
    sem: str, c: Com, s: Store, max_fuel: int
) -> Optional[tuple[int, Union[EnvResult, StateResult]]]:
    """First fuel along 1, 2, 4, ... (capped at max_fuel) giving a result.

    Returns (fuel, result) or None when even max_fuel times out.  By fuel
    monotonicity the found result is canonical for the program and store.
    """
    if sem not in SEMANTICS:
        raise ValueError(f"unknown semantics: {sem!r}")
    if max_fuel < 1:
        raise ValueError("max_fuel must be positive")
    fn = SEMANTICS[sem]
    fuel = 1
    while True:
        r = fn(c, s, fuel)
        if r is not None:
            return (fuel, r)
        if fuel >= max_fuel:
            return None
        fuel = min(fuel * 2, max_fuel)


# --------------------------------------------------------------------------
# Reports


@dataclass
class Failure:
    case_index: int
    seed: int
    inputs: dict[str, object]
    expected: str
    actual: str
    shrunk: Optional[dict[str, object]] = None

    def to_json_dict(self) -> dict[str, object]:
        d: dict[str, object] = {
            "case": self.case_index,
            "seed": self.seed,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
        }
        if self.shrunk is not None:
            d["shrunk"] = self.shrunk
        return d


@dataclass
class PropertyReport:
    property_id: str
    cases_run: int
    failures: list[Failure]
    elapsed_ms: int
    skipped: int = 0
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict[str, object]:
        d: dict[str, object] = {
            "property": self.property_id,
            "cases": self.cases_run,
            "failures": [f.to_json_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
            "skipped": self.skipped,
        }
        if self.details:
            d["details"] = self.details
        return d


# --------------------------------------------------------------------------
# Case checkers.  A checker is a pure function of its structured inputs and
# returns None (pass), SKIPPED (premises not met), or (expected, actual).

SKIPPED = object()

_CheckOutcome = Union[None, object, tuple[str, str]]
_Checker = Callable[[dict[str, object]], _CheckOutcome]


def _render_env(r: EnvResult) -> str:
    return "timeout" if r is None else f"final {r.to_dict()}"


def _render_state(r: StateResult) -> str:
    if r is None:
        return "timeout"
    return f"final ({r[0].to_dict()}, leftover {r[1]})"


def _check_p1(inp: dict[str, object]) -> _CheckOutcome:
    c, s, t = inp["program"], inp["store"], inp["fuel"]
    for name, fn, strict in (
        ("cval", cval, False),
        ("cval_guard", cval_guard, False),
        ("cval_tick", cval_tick, True),
    ):
        r = fn(c, s, t)
        if r is not None:
            leftover = r[1]
            bad = leftover >= t if strict else leftover > t
            if bad:
                op = "<" if strict else "<="
                return (f"{name} leftover {op} input fuel {t}", f"leftover {leftover}")
    return None


def _check_p2(inp: dict[str, object]) -> _CheckOutcome:
    c, s, t = inp["program"], inp["store"], inp["fuel"]
    r = cval(c, s, t)
    wrapped = fix_clock(t, r)
    if wrapped != r:
        return (f"fix_clock({t}, r) == r where r = {_render_state(r)}", _render_state(wrapped))
    return None


def _check_p3(inp: dict[str, object]) -> _CheckOutcome:
    c, s, t = inp["program"], inp["store"], inp["fuel"]
    a = cval(c, s, t)
    b = cval_guard(c, s, t)
    if a != b:
        return (f"cval_guard == cval == {_render_state(a)}", _render_state(b))
    return None


def _padded(p: Com, q: Com) -> Com:
    return Seq(Seq(p, Skip()), Seq(Skip(), q))


def _check_p4(inp: dict[str, object]) -> _CheckOutcome:
    p, q, s, t = inp["first"], inp["second"], inp["store"], inp["fuel"]
    lhs = ev_min(_padded(p, q), s, t)
    rhs = ev_min(Seq(p, q), s, t)
    if lhs != rhs:
        return (f"padded == plain == {_render_env(rhs)}", _render_env(lhs))
    return None


def _check_p5(inp: dict[str, object]) -> _CheckOutcome:
    p, q, s, t = inp["first"], inp["second"], inp["store"], inp["fuel"]
    if t <= 2:  # P5 only claims anything for clocks above 2
        return SKIPPED
    sample = {s} | set(inp["premise_stores"])
    for cfg in iter_trace(Seq(p, q), s, _P5_TRACE_CAP):
        sample.add(cfg.store)
    for sigma in sample:
        if ev(p, sigma, t - 1) != ev(p, sigma, t - 2):
            return SKIPPED
        if ev(q, sigma, t - 1) != ev(q, sigma, t - 2):
            return SKIPPED
    lhs = ev(_padded(p, q), s, t)
    rhs = ev(Seq(p, q), s, t)
    if lhs != rhs:
        return (
            f"padded == plain == {_render_env(rhs)} (premises held on {len(sample)} stores)",
            _render_env(lhs),
        )
    return None


def _check_p6(inp: dict[str, object]) -> _CheckOutcome:
    c, s, t, k = inp["program"], inp["store"], inp["fuel"], inp["extra"]
    for name, fn in (("ev", ev), ("ev_min", ev_min)):
        r = fn(c, s, t)
        if r is not None:
            r2 = fn(c, s, t + k)
            if r2 != r:
                return (f"{name} at fuel {t + k} == {_render_env(r)}", _render_env(r2))
    return None


def _check_p7(inp: dict[str, object]) -> _CheckOutcome:
    c, s, t = inp["program"], inp["store"], inp["fuel"]
    r = ev(c, s, t)
    if r is not None:
        r2 = ev_min(c, s, t)
        if r2 != r:
            return (f"ev_min at fuel {t} == {_render_env(r)}", _render_env(r2))
    return None


def _check_p8a(inp: dict[str, object]) -> _CheckOutcome:
    c, s, t = inp["program"], inp["store"], inp["fuel"]
    k1, k2 = inp["extra"], inp["extra2"]
    for name, fn in (("cval", cval), ("cval_tick", cval_tick)):
        r = fn(c, s, t)
        if r is not None:
            s1, t1 = r
            for k in (k1, k2):
                rk = fn(c, s, t + k)
                if rk != (s1, t1 + k):
                    return (
                        f"P8a: {name} at fuel {t + k} == final ({s1.to_dict()}, leftover {t1 + k})",
                        _render_state(rk),
                    )
    return None


def _check_p8b(inp: dict[str, object]) -> _CheckOutcome:
    c, s, t = inp["program"], inp["store"], inp["fuel"]
    r = cval(c, s, t)
    if r is not None:
        r2 = ev_min(c, s, t)
        if r2 != r[0]:
            return (f"P8b: ev_min at fuel {t} == final {r[0].to_dict()}", _render_env(r2))
    return None


def _check_p8c(inp: dict[str, object]) -> _CheckOutcome:
    c, s = inp["program"], inp["store"]
    fuels = inp["fuels"]
    finals: list[tuple[str, int, Store]] = []
    for name, fn in SEMANTICS.items():
        for t in fuels:
            r = fn(c, s, t)
            if r is None:
                continue
            store = r if name in ENV_SEMANTICS else r[0]
            finals.append((name, t, store))
    for name, t, store in finals[1:]:
        ref_name, ref_t, ref_store = finals[0]
        if store != ref_store:
            return (
                f"P8c: {name}@{t} agrees with {ref_name}@{ref_t} on final {ref_store.to_dict()}",
                f"final {store.to_dict()}",
            )
    return None


def _check_p8(inp: dict[str, object]) -> _CheckOutcome:
    """Fuel additivity, length-dominates-depth, and cross-semantics agreement."""
    for sub in (_check_p8a, _check_p8b, _check_p8c):
        outcome = sub(inp)
        if outcome is not None:
            return outcome
    return None


def _check_p9(inp: dict[str, object]) -> _CheckOutcome:
    c, s = inp["program"], inp["store"]
    outcome, while_steps = run_oracle_stats(c, s, ORACLE_CAP)
    if isinstance(outcome, StepLimit):
        return None
    s_fin, n = outcome.store, outcome.steps
    want = f"final {s_fin.to_dict()}"

    r = cval(c, s, n + 1)
    if r is None or r[0] != s_fin:
        return (f"cval at fuel {n + 1} reaches {want}", _render_state(r))
    unfolds = (n + 1) - r[1]
    if not unfolds <= while_steps <= n:
        return (
            f"cval unfolds <= oracle While steps <= oracle steps {n}",
            f"unfolds {unfolds}, While steps {while_steps}",
        )

    r2 = ev_min(c, s, n + 1)
    if r2 != s_fin:
        return (f"ev_min at fuel {n + 1} reaches {want}", _render_env(r2))

    bound = search_bound(n, size(c))
    for sem in ("ev", "cval_tick"):
        found = fuel_search(sem, c, s, bound)
        if found is None:
            return (f"{sem} found within fuel {bound}", "not found")
        _, res = found
        store = res if sem in ENV_SEMANTICS else res[0]
        if store != s_fin:
            return (f"{sem} search reaches {want}", f"final {store.to_dict()}")
    return None


def _check_p10(inp: dict[str, object]) -> _CheckOutcome:
    c, s = inp["program"], inp["store"]
    outcome = run_oracle(c, s, ORACLE_CAP)
    if isinstance(outcome, Terminated):
        return None
    for fuel in range(TIMEOUT_FUEL_CEILING + 1):
        for name, fn in SEMANTICS.items():
            r = fn(c, s, fuel)
            if r is not None:
                rendered = _render_env(r) if name in ENV_SEMANTICS else _render_state(r)
                return (f"{name} times out at every fuel <= {TIMEOUT_FUEL_CEILING}", f"{name} at fuel {fuel}: {rendered}")
    return None


def _check_rt(inp: dict[str, object]) -> _CheckOutcome:
    c = inp["program"]
    text = pretty(c)
    try:
        back = parse_com(text)
    except ParseError as e:
        return (f"parse of {text!r} == original", f"ParseError: {e}")
    if back != c:
        return (f"parse of {text!r} == original", pretty(back))
    return None


def _gen_triple(rng: SplitMix64, cfg: GenConfig) -> dict[str, object]:
    return {
        "program": _gen_com(rng, cfg, cfg.max_size),
        "store": _gen_store(rng, cfg),
        "fuel": _gen_fuel(rng),
    }


def _gen_case(property_id: str, rng: SplitMix64, cfg: GenConfig) -> tuple[dict[str, object], _Checker]:
    if property_id in ("P1", "P2", "P3"):
        return _gen_triple(rng, cfg), {"P1": _check_p1, "P2": _check_p2, "P3": _check_p3}[property_id]
    if property_id == "P4":
        return {
            "first": _gen_com(rng, cfg, cfg.max_size),
            "second": _gen_com(rng, cfg, cfg.max_size),
            "store": _gen_store(rng, cfg),
            "fuel": _gen_fuel(rng),
        }, _check_p4
    if property_id == "P5":
        return {
            "first": _gen_com(rng, cfg, cfg.max_size),
            "second": _gen_com(rng, cfg, cfg.max_size),
            "store": _gen_store(rng, cfg),
            "fuel": rng.randint(3, 64),
            "premise_stores": tuple(_gen_store(rng, cfg) for _ in range(_P5_EXTRA_STORES)),
        }, _check_p5
    if property_id == "P6":
        inp = _gen_triple(rng, cfg)
        inp["extra"] = rng.randint(0, 16)
        return inp, _check_p6
    if property_id == "P7":
        return _gen_triple(rng, cfg), _check_p7
    if property_id == "P8":
        inp = _gen_triple(rng, cfg)
        inp["extra"] = rng.randint(1, 8)
        inp["extra2"] = inp["extra"] + rng.randint(1, 8)
        inp["fuels"] = (_gen_fuel(rng), _gen_fuel(rng), _gen_fuel(rng))
        return inp, _check_p8
    if property_id in ("P9", "P10"):
        return {
            "program": _gen_com(rng, cfg, cfg.max_size),
            "store": _gen_store(rng, cfg),
        }, _check_p9 if property_id == "P9" else _check_p10
    if property_id == "RT":
        return {"program": _gen_com(rng, cfg, cfg.max_size)}, _check_rt
    raise ValueError(f"unknown property id: {property_id!r}")


_DETAILS: dict[str, dict[str, object]] = {
    "P5": {"premise_sample": f"trace-reachable stores plus {_P5_EXTRA_STORES} random"},
    "P9": {"oracle_cap": ORACLE_CAP, "search_bound": "4*(steps+size)+8"},
    "P10": {"oracle_cap": ORACLE_CAP, "fuel_ceiling": TIMEOUT_FUEL_CEILING},
}


# --------------------------------------------------------------------------
# Shrinking


def _aexp_shrinks(a: Aexp) -> Iterator[Aexp]:
    cls = type(a)
    if cls is N:
        if a.value != 0:
            yield N(0)
            half = a.value // 2 if a.value > 0 else -((-a.value) // 2)
            if half not in (0, a.value):
                yield N(half)
    elif cls is Plus:
        for left in _aexp_shrinks(a.left):
            yield Plus(left, a.right)
        for right in _aexp_shrinks(a.right):
            yield Plus(a.left, right)


def _bexp_shrinks(b: Bexp) -> Iterator[Bexp]:
    cls = type(b)
    if cls is Not:
        for arg in _bexp_shrinks(b.arg):
            yield Not(arg)
    elif cls is And:
        for left in _bexp_shrinks(b.left):
            yield And(left, b.right)
        for right in _bexp_shrinks(b.right):
            yield And(b.left, right)
    elif cls is Less:
        for left in _aexp_shrinks(b.left):
            yield Less(left, b.right)
        for right in _aexp_shrinks(b.right):
            yield Less(b.left, right)


def _com_shrinks(c: Com) -> Iterator[Com]:
    cls = type(c)
    if cls is Skip:
        return
    yield Skip()
    if cls is Set:
        for e in _aexp_shrinks(c.expr):
            yield Set(c.var, e)
    elif cls is Seq:
        for first in _com_shrinks(c.first):
            yield Seq(first, c.second)
        for second in _com_shrinks(c.second):
            yield Seq(c.first, second)
    elif cls is If:
        for g in _bexp_shrinks(c.guard):
            yield If(g, c.then_branch, c.else_branch)
        for t in _com_shrinks(c.then_branch):
            yield If(c.guard, t, c.else_branch)
        for e in _com_shrinks(c.else_branch):
            yield If(c.guard, c.then_branch, e)
    elif cls is While:
        for g in _bexp_shrinks(c.guard):
            yield While(g, c.body)
        for body in _com_shrinks(c.body):
            yield While(c.guard, body)


def _value_shrinks(v: object) -> Iterator[object]:
    if isinstance(v, bool):
        return
    if isinstance(v, int):
        seen = set()
        for cand in (0, v // 2, v - 1):
            if 0 <= cand < v and cand not in seen:
                seen.add(cand)
                yield cand
        return
    if isinstance(v, Store):
        for name in v.names():
            yield v.set(name, 0)
            half = v.get(name) // 2 if v.get(name) > 0 else -((-v.get(name)) // 2)
            if half != v.get(name):
                yield v.set(name, half)
        return
    if isinstance(v, tuple):
        if all(isinstance(x, int) for x in v):
            for i, x in enumerate(v):
                for nx in _value_shrinks(x):
                    yield v[:i] + (nx,) + v[i + 1 :]
        else:
            for i in range(len(v)):
                yield v[:i] + v[i + 1 :]
        return
    if isinstance(v, (Skip, Set, Seq, If, While)):
        yield from _com_shrinks(v)


def _shrink_candidates(inputs: dict[str, object]) -> Iterator[dict[str, object]]:
    for key, v in inputs.items():
        for nv in _value_shrinks(v):
            cand = dict(inputs)
            cand[key] = nv
            yield cand


def _shrink(inputs: dict[str, object], check: _Checker) -> dict[str, object]:
    """Greedy descent: accept the first candidate that still fails."""
    current = inputs
    for _ in range(500):
        for cand in _shrink_candidates(current):
            outcome = check(cand)
            if outcome is not None and outcome is not SKIPPED:
                current = cand
                break
        else:
            return current
    return current


# --------------------------------------------------------------------------
# Campaign driver


def _render_value(v: object) -> object:
    if isinstance(v, (Skip, Set, Seq, If, While)):
        return pretty(v)
    if isinstance(v, Store):
        return v.to_dict()
    if isinstance(v, tuple):
        return [_render_value(x) for x in v]
    return v


def _render_inputs(inputs: dict[str, object]) -> dict[str, object]:
    return {k: _render_value(v) for k, v in inputs.items()}


def run_property(property_id: str, cfg: GenConfig, cases: int) -> PropertyReport:
    """Run one property campaign over `cases` generated inputs.

    Case k draws everything it needs from ``case_stream(cfg.seed, k)``,
    so any failure is replayable from (property_id, cfg.seed, k); on
    failure the inputs are greedily shrunk before reporting.
    """
    if property_id not in PROPERTY_IDS:
        raise ValueError(f"unknown property id: {property_id!r}")
    if cases < 0:
        raise ValueError("cases must be non-negative")
    t0 = time.perf_counter()
    failures: list[Failure] = []
    skipped = 0
    for k in range(cases):
        rng = case_stream(cfg.seed, k)
        inputs, check = _gen_case(property_id, rng, cfg)
        outcome = check(inputs)
        if outcome is None:
            continue
        if outcome is SKIPPED:
            skipped += 1
            continue
        expected, actual = outcome
        shrunk = _shrink(inputs, check)
        failures.append(
            Failure(
                case_index=k,
                seed=cfg.seed,
                inputs=_render_inputs(inputs),
                expected=expected,
                actual=actual,
                shrunk=_render_inputs(shrunk) if shrunk != inputs else None,
            )
        )
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return PropertyReport(
        property_id=property_id,
        cases_run=cases,
        failures=failures,
        elapsed_ms=elapsed_ms,
        skipped=skipped,
        details=dict(_DETAILS.get(property_id, {})),
    )


def replay_case(property_id: str, cfg: GenConfig, case_index: int) -> tuple[dict[str, object], str]:
    """Re-generate and re-check one campaign case.

    Returns the rendered inputs and "pass", "skip", or "fail: ..." so a
    reported failure can be reproduced in isolation.
    """
    if property_id not in PROPERTY_IDS:
        raise ValueError(f"unknown property id: {property_id!r}")
    rng = case_stream(cfg.seed, case_index)
    inputs, check = _gen_case(property_id, rng, cfg)
    outcome = check(inputs)
    if outcome is None:
        verdict = "pass"
    elif outcome is SKIPPED:
        verdict = "skip"
    else:
        verdict = f"fail: expected {outcome[0]}; got {outcome[1]}"
    return _render_inputs(inputs), verdict


def default_config(seed: int) -> GenConfig:
    """The stock campaign configuration at the given seed."""
    return GenConfig(seed=seed)


__all__ = [
    "ENV_SEMANTICS",
    "Failure",
    "GenConfig",
    "ORACLE_CAP",
    "PROPERTY_IDS",
    "PropertyReport",
    "SEMANTICS",
    "SKIPPED",
    "SplitMix64",
    "TIMEOUT_FUEL_CEILING",
    "case_stream",
    "default_config",
    "fuel_search",
    "gen_com",
    "gen_store",
    "mix64",
    "replay_case",
    "run_property",
    "search_bound",
]
