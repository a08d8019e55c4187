"""Abstract syntax of the two sorts, plus rules and actions.

Formulas and arguments are mutually recursive. Every node is an immutable
value with structural equality; hashes are cached because nodes are used
heavily as dictionary keys (awareness sets, memo tables).

Derived connectives (``Or``, ``Implies``, ``Iff``, ``Diamond``, ``TOP``) are
plain functions that build the core representation, so two formulas written
with different sugar compare equal whenever their core trees agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


class ArityError(ValueError):
    """An inference step or rule was built with no antecedents."""


class _Node:
    """Structural equality plus a cached hash for frozen dataclass nodes."""

    __match_args__: tuple[str, ...] = ()

    def _values(self) -> tuple:
        cached = self.__dict__.get("_vals")
        if cached is None:
            cached = self.__dict__["_vals"] = tuple(getattr(self, name) for name in self.__match_args__)
        return cached

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((type(self).__name__,) + self._values())
            self.__dict__["_hash"] = cached
        return cached

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return hash(self) == hash(other) and self._values() == other._values()

    def __getstate__(self):
        # str hashes differ between processes
        return {k: v for k, v in self.__dict__.items() if k not in ("_hash", "_vals")}

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self) -> str:
        # rendered text is far easier to read than nested reprs
        from .text import render

        return f"{type(self).__name__}<{render(self)}>"


# --------------------------------------------------------------------- formulas


class Formula(_Node):
    """Base class of the formula sort."""


@dataclass(frozen=True, eq=False, repr=False)
class Atom(Formula):
    name: str


@dataclass(frozen=True, eq=False, repr=False)
class Bot(Formula):
    """The falsum constant. ``TOP`` is its negation."""


@dataclass(frozen=True, eq=False, repr=False)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True, eq=False, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Box(Formula):
    sub: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Aware(Formula):
    arg: "Argument"


@dataclass(frozen=True, eq=False, repr=False)
class ConcIs(Formula):
    arg: "Argument"
    claim: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Strict(Formula):
    arg: "Argument"


@dataclass(frozen=True, eq=False, repr=False)
class Undercuts(Formula):
    attacker: "Argument"
    target: "Argument"


@dataclass(frozen=True, eq=False, repr=False)
class WellShaped(Formula):
    arg: "Argument"


@dataclass(frozen=True, eq=False, repr=False)
class Believes(Formula):
    """Argument-based belief: ``arg`` is in the grounded extension and concludes ``claim``."""

    arg: "Argument"
    claim: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Dynamic(Formula):
    """``[action] body``; the box-style dynamic modality."""

    action: "Action"
    body: Formula


BOT = Bot()
TOP = Not(BOT)


def Or(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))


def Implies(left: Formula, right: Formula) -> Formula:
    return Not(And(left, Not(right)))


def Iff(left: Formula, right: Formula) -> Formula:
    return And(Implies(left, right), Implies(right, left))


def Diamond(sub: Formula) -> Formula:
    return Not(Box(Not(sub)))


def DynamicDual(action: "Action", body: Formula) -> Formula:
    return Not(Dynamic(action, Not(body)))


def conjoin(parts) -> Formula:
    """Right-nested conjunction of ``parts``; the empty conjunction is ``TOP``."""
    parts = list(parts)
    if not parts:
        return TOP
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = And(part, result)
    return result


# -------------------------------------------------------------------- arguments


class Argument(_Node):
    """Base class of the argument sort."""

    claim: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Atomic(Argument):
    claim: Formula


def _check_children(children) -> tuple:
    children = tuple(children)
    if not children:
        raise ArityError("an inference step needs at least one sub-argument")
    for child in children:
        if not isinstance(child, Argument):
            raise TypeError(f"expected an Argument, got {type(child).__name__}")
    return children


@dataclass(frozen=True, eq=False, repr=False)
class StrictStep(Argument):
    children: tuple[Argument, ...]
    claim: Formula

    def __post_init__(self):
        object.__setattr__(self, "children", _check_children(self.children))


@dataclass(frozen=True, eq=False, repr=False)
class DefeasibleStep(Argument):
    children: tuple[Argument, ...]
    claim: Formula

    def __post_init__(self):
        object.__setattr__(self, "children", _check_children(self.children))


Step = Union[StrictStep, DefeasibleStep]


# ------------------------------------------------------------------------ rules


@dataclass(frozen=True, eq=False, repr=False)
class Rule(_Node):
    antecedents: tuple[Formula, ...]
    conclusion: Formula

    def __post_init__(self):
        antecedents = tuple(self.antecedents)
        if not antecedents:
            raise ArityError("a rule needs at least one antecedent")
        object.__setattr__(self, "antecedents", antecedents)


# ---------------------------------------------------------------------- actions


class Action(_Node):
    """Base class of the four model-changing actions."""


@dataclass(frozen=True, eq=False, repr=False)
class Acquire(Action):
    arg: Argument


@dataclass(frozen=True, eq=False, repr=False)
class Forget(Action):
    arg: Argument


@dataclass(frozen=True, eq=False, repr=False)
class LearnRule(Action):
    rule: Rule


@dataclass(frozen=True, eq=False, repr=False)
class Announce(Action):
    formula: Formula


# ------------------------------------------------------------------- traversal

_ARG_OPERATORS = (Aware, ConcIs, Strict, Undercuts, WellShaped, Believes)


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Formula-position subformulas of ``phi`` (pre-order), not descending into arguments."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        match node:
            case Not(sub) | Box(sub):
                stack.append(sub)
            case And(left, right):
                stack.extend((right, left))
            case Dynamic(_, body):
                stack.append(body)


def is_static(phi: Formula) -> bool:
    """True when ``phi`` contains no dynamic modality (anywhere, including arguments)."""
    return not any(isinstance(node, Dynamic) for node in _all_formulas(phi))


def is_core(phi: Formula) -> bool:
    """True for formulas of the base language: no dynamic modality, no argument-based belief."""
    return not any(isinstance(node, (Dynamic, Believes)) for node in _all_formulas(phi))


def _all_formulas(phi: Formula) -> Iterator[Formula]:
    stack: list = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Argument):
            stack.append(node.claim)
            if isinstance(node, (StrictStep, DefeasibleStep)):
                stack.extend(node.children)
            continue
        yield node
        match node:
            case Not(sub) | Box(sub):
                stack.append(sub)
            case And(left, right):
                stack.extend((left, right))
            case Aware(a) | Strict(a) | WellShaped(a):
                stack.append(a)
            case ConcIs(a, c) | Believes(a, c):
                stack.extend((a, c))
            case Undercuts(a, b):
                stack.extend((a, b))
            case Dynamic(action, body):
                stack.append(body)
                match action:
                    case Acquire(a) | Forget(a):
                        stack.append(a)
                    case LearnRule(r):
                        stack.extend(r.antecedents)
                        stack.append(r.conclusion)
                    case Announce(f):
                        stack.append(f)


def size(node) -> int:
    """Number of formula and argument nodes in ``node``."""
    match node:
        case Atom() | Bot():
            return 1
        case Not(sub) | Box(sub):
            return 1 + size(sub)
        case And(left, right):
            return 1 + size(left) + size(right)
        case Aware(a) | Strict(a) | WellShaped(a):
            return 1 + size(a)
        case ConcIs(a, c) | Believes(a, c):
            return 1 + size(a) + size(c)
        case Undercuts(a, b):
            return 1 + size(a) + size(b)
        case Dynamic(action, body):
            return 1 + size(action) + size(body)
        case Atomic(c):
            return 1 + size(c)
        case StrictStep(children, c) | DefeasibleStep(children, c):
            return 1 + sum(size(ch) for ch in children) + size(c)
        case Rule(antecedents, conclusion):
            return 1 + sum(size(f) for f in antecedents) + size(conclusion)
        case Acquire(a) | Forget(a):
            return 1 + size(a)
        case LearnRule(r):
            return 1 + size(r)
        case Announce(f):
            return 1 + size(f)
    raise TypeError(f"not a syntax node: {node!r}")


def modal_depth(phi: Formula) -> int:
    """Nesting depth of dynamic modalities in formula positions."""
    match phi:
        case Not(sub) | Box(sub):
            return modal_depth(sub)
        case And(left, right):
            return max(modal_depth(left), modal_depth(right))
        case Dynamic(_, body):
            return 1 + modal_depth(body)
    return 0


def count_dynamic(phi: Formula) -> int:
    return sum(isinstance(node, Dynamic) for node in subformulas(phi))
