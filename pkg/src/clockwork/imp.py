"""Abstract syntax, stores, and expression semantics for the While language.

The language has three syntactic categories: arithmetic expressions
(integer literals, variables, addition), boolean expressions (constants,
negation, conjunction, less-than), and commands (SKIP, assignment,
sequencing, conditional, while-loop).  All nodes are immutable; stores
are total maps from variable names to integers with a default of 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ValueError(f"invalid variable name: {name!r}")


# --------------------------------------------------------------------------
# Arithmetic expressions


@dataclass(frozen=True, slots=True)
class N:
    """Integer literal."""

    value: int


@dataclass(frozen=True, slots=True)
class V:
    """Variable reference."""

    name: str

    def __post_init__(self) -> None:
        _check_name(self.name)


@dataclass(frozen=True, slots=True)
class Plus:
    left: "Aexp"
    right: "Aexp"


Aexp = Union[N, V, Plus]


# --------------------------------------------------------------------------
# Boolean expressions


@dataclass(frozen=True, slots=True)
class Bc:
    """Boolean constant."""

    value: bool


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Bexp"


@dataclass(frozen=True, slots=True)
class And:
    left: "Bexp"
    right: "Bexp"


@dataclass(frozen=True, slots=True)
class Less:
    left: Aexp
    right: Aexp


Bexp = Union[Bc, Not, And, Less]


# --------------------------------------------------------------------------
# Commands


@dataclass(frozen=True, slots=True)
class Skip:
    pass


@dataclass(frozen=True, slots=True)
class Set:
    """Assignment `var := expr`."""

    var: str
    expr: Aexp

    def __post_init__(self) -> None:
        _check_name(self.var)


@dataclass(frozen=True, slots=True)
class Seq:
    first: "Com"
    second: "Com"


@dataclass(frozen=True, slots=True)
class If:
    guard: Bexp
    then_branch: "Com"
    else_branch: "Com"


@dataclass(frozen=True, slots=True)
class While:
    guard: Bexp
    body: "Com"


Com = Union[Skip, Set, Seq, If, While]


# --------------------------------------------------------------------------
# Stores


class Store:
    """Total mapping from variable names to integers, default 0.

    Zero bindings are normalized away on construction and update, so two
    stores compare equal exactly when they agree on every name (a bound
    ``x = 0`` is indistinguishable from an unbound ``x``).  Instances are
    immutable; ``set`` returns a new store.
    """

    __slots__ = ("_m",)

    def __init__(self, bindings: Mapping[str, int] | None = None) -> None:
        m: dict[str, int] = {}
        if bindings:
            for name, value in bindings.items():
                _check_name(name)
                if not isinstance(value, int) or isinstance(value, bool):
                    raise ValueError(f"store value for {name!r} must be an int")
                if value != 0:
                    m[name] = value
        self._m = m

    @classmethod
    def _wrap(cls, m: dict[str, int]) -> "Store":
        obj = object.__new__(cls)
        obj._m = m
        return obj

    def get(self, name: str) -> int:
        return self._m.get(name, 0)

    def set(self, name: str, value: int) -> "Store":
        """Functional update; the receiver is unchanged."""
        m = dict(self._m)
        if value == 0:
            m.pop(name, None)
        else:
            m[name] = value
        return Store._wrap(m)

    def to_dict(self) -> dict[str, int]:
        """Nonzero bindings as a plain dict (sorted by name)."""
        return {k: self._m[k] for k in sorted(self._m)}

    def names(self) -> Iterator[str]:
        return iter(sorted(self._m))

    def pretty(self) -> str:
        inner = ", ".join(f"{k}: {self._m[k]}" for k in sorted(self._m))
        return "{" + inner + "}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Store):
            return NotImplemented
        return self._m == other._m

    def __hash__(self) -> int:
        return hash(frozenset(self._m.items()))

    def __repr__(self) -> str:
        return f"Store({self._m!r})"


# --------------------------------------------------------------------------
# Expression evaluation


def aval(a: Aexp, s: Store) -> int:
    """Value of an arithmetic expression in store `s`. Total."""
    cls = type(a)
    if cls is N:
        return a.value
    if cls is V:
        return s.get(a.name)
    if cls is Plus:
        return aval(a.left, s) + aval(a.right, s)
    raise TypeError(f"not an arithmetic expression: {a!r}")


def bval(b: Bexp, s: Store) -> bool:
    """Value of a boolean expression in store `s`. Total."""
    cls = type(b)
    if cls is Bc:
        return b.value
    if cls is Not:
        return not bval(b.arg, s)
    if cls is And:
        return bval(b.left, s) and bval(b.right, s)
    if cls is Less:
        return aval(b.left, s) < aval(b.right, s)
    raise TypeError(f"not a boolean expression: {b!r}")


def size(c: Com) -> int:
    """Command-node count of `c`.

    Only command nodes are counted; guards and assigned expressions
    contribute nothing.  Every proper sub-command therefore has a
    strictly smaller size.
    """
    total = 0
    todo = [c]
    while todo:
        node = todo.pop()
        total += 1
        cls = type(node)
        if cls is Seq:
            todo.append(node.first)
            todo.append(node.second)
        elif cls is If:
            todo.append(node.then_branch)
            todo.append(node.else_branch)
        elif cls is While:
            todo.append(node.body)
        elif cls is not Skip and cls is not Set:
            raise TypeError(f"not a command: {node!r}")
    return total


# --------------------------------------------------------------------------
# Pretty-printing (inverse of the parser; see clockwork.parser for the grammar)


def pretty_aexp(a: Aexp) -> str:
    cls = type(a)
    if cls is N:
        return str(a.value)
    if cls is V:
        return a.name
    # '+' associates to the left, so only the right operand needs parens.
    return f"{pretty_aexp(a.left)} + {_aexp_term(a.right)}"


def _aexp_term(a: Aexp) -> str:
    if type(a) is Plus:
        return f"({pretty_aexp(a)})"
    return pretty_aexp(a)


def pretty_bexp(b: Bexp) -> str:
    if type(b) is And:
        # '&&' associates to the right.
        return f"{_bexp_conj(b.left)} && {pretty_bexp(b.right)}"
    return _bexp_conj(b)


def _bexp_conj(b: Bexp) -> str:
    cls = type(b)
    if cls is Bc:
        return "true" if b.value else "false"
    if cls is Not:
        return f"! {_bexp_conj(b.arg)}"
    if cls is Less:
        return f"{pretty_aexp(b.left)} < {pretty_aexp(b.right)}"
    return f"({pretty_bexp(b)})"


def pretty(c: Com) -> str:
    """Concrete syntax for a command; `parse_com(pretty(c)) == c`."""
    cls = type(c)
    if cls is Skip:
        return "SKIP"
    if cls is Set:
        return f"{c.var} := {pretty_aexp(c.expr)}"
    if cls is Seq:
        # ';' associates to the right; a Seq on the left needs parens.
        left = f"({pretty(c.first)})" if type(c.first) is Seq else pretty(c.first)
        return f"{left} ; {pretty(c.second)}"
    if cls is If:
        return (
            f"IF {pretty_bexp(c.guard)} THEN {pretty(c.then_branch)}"
            f" ELSE {pretty(c.else_branch)} FI"
        )
    if cls is While:
        return f"WHILE {pretty_bexp(c.guard)} DO {pretty(c.body)} OD"
    raise TypeError(f"not a command: {c!r}")
