"""Slow, obviously-correct reference implementations used to cross-check the fast code.

Nothing here shares code with the modules it checks: entailment enumerates
valuations one dictionary at a time, and the structural functions recurse on
the argument tree directly.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from ..lang.syntax import And, Argument, Atom, Atomic, Bot, DefeasibleStep, Formula, Not, Rule


def leaves(phi: Formula, out: list | None = None) -> list:
    """Atoms and maximal non-Boolean subformulas, in first-occurrence order."""
    out = [] if out is None else out
    if isinstance(phi, Not):
        leaves(phi.sub, out)
    elif isinstance(phi, And):
        leaves(phi.left, out)
        leaves(phi.right, out)
    elif not isinstance(phi, Bot) and phi not in out:
        out.append(phi)
    return out


def truth(phi: Formula, assignment: dict) -> bool:
    if isinstance(phi, Bot):
        return False
    if isinstance(phi, Not):
        return not truth(phi.sub, assignment)
    if isinstance(phi, And):
        return truth(phi.left, assignment) and truth(phi.right, assignment)
    return assignment[phi]


def naive_entails(premises: Iterable[Formula], conclusion: Formula) -> bool:
    premises = list(premises)
    letters: list = []
    for phi in premises + [conclusion]:
        leaves(phi, letters)
    for values in product((False, True), repeat=len(letters)):
        assignment = dict(zip(letters, values, strict=True))
        if all(truth(p, assignment) for p in premises) and not truth(conclusion, assignment):
            return False
    return True


def naive_tautology(phi: Formula) -> bool:
    return naive_entails([], phi)


def claim_of(arg: Argument) -> Formula:
    # every node stores its own claim; atomic arguments claim their premise
    return arg.claim


def has_defeasible_step(arg: Argument) -> bool:
    if isinstance(arg, Atomic):
        return False
    return isinstance(arg, DefeasibleStep) or any(has_defeasible_step(c) for c in arg.children)


def one_step_argument(rule: Rule) -> Argument:
    return DefeasibleStep(tuple(Atomic(phi) for phi in rule.antecedents), rule.conclusion)


def is_negated_atom(phi: Formula) -> bool:
    return isinstance(phi, Not) and isinstance(phi.sub, Atom)


def grounded_by_iteration(nodes, attacks) -> frozenset:
    """Grounded extension by the unattacked-in / attacked-out labelling loop."""
    attackers = {n: {a for a, b in attacks if b == n} for n in nodes}
    inside: set = set()
    outside: set = set()
    changed = True
    while changed:
        changed = False
        for n in nodes:
            if n in inside or n in outside:
                continue
            if attackers[n] <= outside:
                inside.add(n)
                changed = True
            elif attackers[n] & inside:
                outside.add(n)
                changed = True
    return frozenset(inside)
