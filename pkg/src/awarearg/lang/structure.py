"""Structural analysis of arguments: premises, conclusion, subarguments, rules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .syntax import Argument, Atomic, DefeasibleStep, Formula, Rule, StrictStep


@dataclass(frozen=True)
class StructureReport:
    premises: frozenset[Formula]
    conclusion: Formula
    subarguments: frozenset[Argument]
    top_rule: Optional[Rule]
    defeasible_rules: frozenset[Rule]

    @property
    def is_strict(self) -> bool:
        return not self.defeasible_rules


def conclusion(arg: Argument) -> Formula:
    return arg.claim


@lru_cache(maxsize=None)
def premises(arg: Argument) -> frozenset[Formula]:
    if isinstance(arg, Atomic):
        return frozenset([arg.claim])
    return frozenset().union(*(premises(child) for child in arg.children))


@lru_cache(maxsize=None)
def subarguments(arg: Argument) -> frozenset[Argument]:
    if isinstance(arg, Atomic):
        return frozenset([arg])
    return frozenset([arg]).union(*(subarguments(child) for child in arg.children))


def top_rule(arg: Argument) -> Optional[Rule]:
    """The last rule applied in ``arg``; ``None`` for atomic arguments."""
    if isinstance(arg, Atomic):
        return None
    return Rule(tuple(child.claim for child in arg.children), arg.claim)


@lru_cache(maxsize=None)
def defeasible_rules(arg: Argument) -> frozenset[Rule]:
    if isinstance(arg, Atomic):
        return frozenset()
    inner = frozenset().union(*(defeasible_rules(child) for child in arg.children))
    if isinstance(arg, DefeasibleStep):
        return inner | {top_rule(arg)}
    return inner


def is_strict(arg: Argument) -> bool:
    return not defeasible_rules(arg)


def structure(arg: Argument) -> StructureReport:
    return StructureReport(
        premises=premises(arg),
        conclusion=arg.claim,
        subarguments=subarguments(arg),
        top_rule=top_rule(arg),
        defeasible_rules=defeasible_rules(arg),
    )


def simplest_argument(rule: Rule) -> DefeasibleStep:
    """The defeasible one-step argument from atomic arguments for each antecedent."""
    return DefeasibleStep(tuple(Atomic(phi) for phi in rule.antecedents), rule.conclusion)


def flatten(arg: StrictStep | DefeasibleStep) -> StrictStep | DefeasibleStep:
    """Same step kind and claim, with every child replaced by the atomic argument of its conclusion."""
    children = tuple(Atomic(child.claim) for child in arg.children)
    return type(arg)(children, arg.claim)


def is_flat(arg: Argument) -> bool:
    return not isinstance(arg, Atomic) and all(isinstance(c, Atomic) for c in arg.children)


def argument_depth(arg: Argument) -> int:
    if isinstance(arg, Atomic):
        return 0
    return 1 + max(argument_depth(child) for child in arg.children)
