"""Kripke models whose syntactic components vary from world to world.

These are the non-standard models used to relate the standard semantics to
relational KD45 semantics: truth survives taking generated submodels, and a
uniform model collapses to a standard pointed model with the same theory.
Evaluation here is a direct per-world recursion, independent of the
truth-set evaluator in :mod:`awarearg.semantics`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .lang.structure import is_strict, top_rule
from .lang.syntax import (
    And,
    Argument,
    Atom,
    Atomic,
    Aware,
    Bot,
    Box,
    ConcIs,
    DefeasibleStep,
    Formula,
    Not,
    Rule,
    Strict,
    StrictStep,
    Undercuts,
    WellShaped,
)
from .model import EmptyDoxasticSet, Model, rule_violation, validate
from .prop import entails
from .semantics import PointedModel


class KripkeError(ValueError):
    pass


class NotUniform(KripkeError):
    pass


@dataclass(frozen=True, eq=False)
class KripkeModel:
    worlds: tuple[str, ...]
    relation: frozenset[tuple[str, str]]
    awareness_at: Mapping[str, frozenset[Argument]]
    rules_at: Mapping[str, frozenset[Rule]]
    names_at: Mapping[str, Mapping[Rule, str]] = field(default_factory=dict)
    valuation: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "worlds", tuple(dict.fromkeys(self.worlds)))
        set_(self, "relation", frozenset(self.relation))
        set_(self, "awareness_at", MappingProxyType({w: frozenset(self.awareness_at.get(w, ())) for w in self.worlds}))
        set_(self, "rules_at", MappingProxyType({w: frozenset(self.rules_at.get(w, ())) for w in self.worlds}))
        set_(
            self,
            "names_at",
            MappingProxyType({w: MappingProxyType(dict(self.names_at.get(w, {}))) for w in self.worlds}),
        )
        set_(self, "valuation", MappingProxyType({a: frozenset(ws) for a, ws in self.valuation.items()}))
        successors: dict[str, set[str]] = {w: set() for w in self.worlds}
        for u, v in self.relation:
            if u not in successors or v not in successors:
                raise KripkeError(f"relation pair ({u!r}, {v!r}) mentions an unknown world")
            successors[u].add(v)
        set_(self, "_successors", {w: frozenset(s) for w, s in successors.items()})

    def successors(self, world: str) -> frozenset[str]:
        return self._successors[world]

    def well_shaped(self, world: str, arg: Argument) -> bool:
        if isinstance(arg, Atomic):
            return True
        if not all(self.well_shaped(world, child) for child in arg.children):
            return False
        antecedents = tuple(child.claim for child in arg.children)
        if isinstance(arg, StrictStep):
            return entails(antecedents, arg.claim)
        return Rule(antecedents, arg.claim) in self.rules_at[world]


def problems(km: KripkeModel) -> list[str]:
    """Violations of the frame conditions, relation-invariance and rule constraints."""
    found = []
    if not km.worlds:
        found.append("no worlds")
    succ = km.successors
    for w in km.worlds:
        if not succ(w):
            found.append(f"not serial at {w}")
        for v in succ(w):
            if not succ(v) <= succ(w):
                found.append(f"not transitive at {w} -> {v}")
            for u in succ(w):
                if u not in succ(v):
                    found.append(f"not euclidean at {w}: {v} -/-> {u}")
            if km.awareness_at[w] != km.awareness_at[v]:
                found.append(f"awareness differs along {w} -> {v}")
            if km.rules_at[w] != km.rules_at[v]:
                found.append(f"rules differ along {w} -> {v}")
            if km.names_at[w] != km.names_at[v]:
                found.append(f"names differ along {w} -> {v}")
        for rule in km.rules_at[w]:
            problem = rule_violation(rule)
            if problem is not None:
                found.append(f"at {w}: {problem}")
    return found


def validate_kripke(km: KripkeModel) -> KripkeModel:
    found = problems(km)
    if found:
        raise KripkeError("; ".join(found))
    return km


def eval_k(km: KripkeModel, world: str, phi: Formula) -> bool:
    match phi:
        case Atom(name):
            return world in km.valuation.get(name, ())
        case Bot():
            return False
        case Not(sub):
            return not eval_k(km, world, sub)
        case And(left, right):
            return eval_k(km, world, left) and eval_k(km, world, right)
        case Box(sub):
            return all(eval_k(km, v, sub) for v in km.successors(world))
        case Aware(arg):
            return arg in km.awareness_at[world]
        case ConcIs(arg, claim):
            return arg.claim == claim
        case Strict(arg):
            return is_strict(arg)
        case Undercuts(attacker, target):
            if not isinstance(target, DefeasibleStep):
                return False
            name = km.names_at[world].get(top_rule(target))
            return name is not None and attacker.claim == Not(Atom(name))
        case WellShaped(arg):
            return km.well_shaped(world, arg)
    raise TypeError(f"relational evaluation covers the base language only, got {phi!r}")


def generated_submodel(km: KripkeModel, world: str) -> KripkeModel:
    """Restriction of ``km`` to ``world`` and every world reachable from it."""
    reached = {world}
    frontier = [world]
    while frontier:
        for v in km.successors(frontier.pop()):
            if v not in reached:
                reached.add(v)
                frontier.append(v)
    worlds = tuple(w for w in km.worlds if w in reached)
    return KripkeModel(
        worlds=worlds,
        relation=frozenset((u, v) for u, v in km.relation if u in reached),
        awareness_at={w: km.awareness_at[w] for w in worlds},
        rules_at={w: km.rules_at[w] for w in worlds},
        names_at={w: km.names_at[w] for w in worlds},
        valuation={a: ws & reached for a, ws in km.valuation.items()},
    )


def is_uniform(km: KripkeModel) -> bool:
    """Awareness and rules agree at all worlds, as do the names of those rules."""
    if not km.worlds:
        return True
    first = km.worlds[0]
    rules = km.rules_at[first]
    for w in km.worlds[1:]:
        if km.awareness_at[w] != km.awareness_at[first] or km.rules_at[w] != rules:
            return False
        for rule in rules:
            if km.names_at[w].get(rule) != km.names_at[first].get(rule):
                return False
    return True


def to_standard(km: KripkeModel, world: str) -> PointedModel:
    """Collapse a uniform Kripke model at ``world`` into a standard pointed model."""
    if not is_uniform(km):
        raise NotUniform("the Kripke model is not uniform")
    believed = km.successors(world)
    if not believed:
        # seriality rules this out for well-formed Kripke models
        raise EmptyDoxasticSet()
    kept = {world} | believed
    model = Model(
        worlds=tuple(w for w in km.worlds if w in kept),
        doxastic=believed,
        awareness=km.awareness_at[world],
        rules=km.rules_at[world],
        names=dict(km.names_at[world]),
        valuation={a: ws & kept for a, ws in km.valuation.items()},
    )
    return PointedModel(validate(model), world)
