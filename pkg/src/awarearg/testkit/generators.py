"""Seeded random syntax and random models.

Every public generator is a pure function of ``(cfg, index)``: the random
stream is seeded from the generator kind together with the configuration seed
and draw index. Models and schema instances draw arguments from a shared,
seed-derived *argument universe*, so the syntactic parts of a model actually
interact with the formulas being checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from ..kripke import KripkeModel
from ..lang.structure import simplest_argument
from ..lang.syntax import (
    Acquire,
    Action,
    And,
    Announce,
    Argument,
    Atom,
    Atomic,
    Aware,
    Believes,
    Box,
    ConcIs,
    DefeasibleStep,
    Diamond,
    Dynamic,
    Forget,
    Formula,
    Iff,
    Implies,
    LearnRule,
    Not,
    Or,
    Rule,
    Strict,
    StrictStep,
    Undercuts,
    WellShaped,
)
from ..lang.text import render
from ..model import Model, rule_violation, validate


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    atom_pool: tuple[str, ...] = ("p", "q", "r", "s")
    max_formula_depth: int = 3
    max_argument_depth: int = 2
    max_worlds: int = 5
    max_awareness: int = 6
    max_rules: int = 4

    def __post_init__(self):
        object.__setattr__(self, "atom_pool", tuple(self.atom_pool))
        if not self.atom_pool:
            raise ValueError("atom_pool must not be empty")
        for name in ("max_formula_depth", "max_argument_depth", "max_worlds", "max_awareness", "max_rules"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")

    def rng(self, kind: str, index: int) -> random.Random:
        # string seeds are hashed with sha512, so streams are stable across runs
        return random.Random(f"{self.seed}:{kind}:{index}")


class Draw:
    """Random syntax drawn from one stream; shared by all generators and schema builders."""

    def __init__(self, cfg: GenConfig, rng: random.Random, beliefs: bool = False):
        self.cfg = cfg
        self.rng = rng
        # allow B(A,F) leaves in static formulas
        self.beliefs = beliefs
        # arguments recently mentioned by actions; leaves revisit them
        self.focus: list[Argument] = []

    # basic pieces -----------------------------------------------------------

    def atom(self) -> Atom:
        return Atom(self.rng.choice(self.cfg.atom_pool))

    def literal(self) -> Formula:
        a = self.atom()
        return Not(a) if self.rng.random() < 0.4 else a

    def other_atom(self, avoid: str) -> Atom:
        choices = [a for a in self.cfg.atom_pool if a != avoid]
        return Atom(self.rng.choice(choices)) if choices else Atom(avoid + "x")

    def prop_formula(self, depth: int = 1) -> Formula:
        """Purely Boolean formula over the atom pool."""
        if depth <= 0 or self.rng.random() < 0.45:
            return self.literal()
        op = self.rng.randrange(4)
        left, right = self.prop_formula(depth - 1), self.prop_formula(depth - 1)
        return (And, Or, Implies, Iff)[op](left, right)

    def claim(self) -> Formula:
        """Small static formula used as an argument claim or rule component."""
        roll = self.rng.random()
        if roll < 0.6:
            return self.literal()
        if roll < 0.9:
            return self.prop_formula(1)
        return Box(self.atom()) if roll < 0.95 else Not(Box(self.atom()))

    def rule(self) -> Rule:
        if self.rng.random() < 0.7:
            return self.rng.choice(rule_pool(self.cfg))
        n = self.rng.choice((1, 1, 2))
        return Rule(tuple(self.claim() for _ in range(n)), self.claim())

    def learnable_rule(self) -> Rule:
        for _ in range(20):
            rule = self.rule()
            if rule_violation(rule) is None:
                return rule
        return self.rng.choice(rule_pool(self.cfg))

    # arguments --------------------------------------------------------------

    def argument(self, depth: int | None = None, kind: str = "any") -> Argument:
        """Random argument. ``kind`` is ``any``, ``strict`` (no defeasible step) or ``defeasible``."""
        if depth is None:
            depth = self.cfg.max_argument_depth
        if kind == "any" and self.focus and self.rng.random() < 0.4:
            return self.rng.choice(self.focus)
        if kind == "any" and self.rng.random() < 0.5:
            return self.rng.choice(argument_universe(self.cfg))
        if depth <= 0 or (kind != "defeasible" and self.rng.random() < 0.35):
            return Atomic(self.claim())
        if kind == "strict" or (kind == "any" and self.rng.random() < 0.45):
            return self.strict_step(depth, kind)
        return self.defeasible_step(depth, kind)

    def _children_for(self, claims, depth, kind):
        sub_kind = "strict" if kind == "strict" else "any"
        out = []
        for claim in claims:
            if depth > 1 and self.rng.random() < 0.4:
                out.append(self.argument_concluding(claim, depth - 1, sub_kind))
            else:
                out.append(Atomic(claim))
        return tuple(out)

    def argument_concluding(self, claim: Formula, depth: int, kind: str = "any") -> Argument:
        """Argument whose conclusion is ``claim``."""
        if depth <= 0 or self.rng.random() < 0.4:
            return Atomic(claim)
        if kind == "strict" or self.rng.random() < 0.5:
            children = self._children_for([claim, self.claim()][: self.rng.choice((1, 2))], depth, kind)
            return StrictStep(children, claim)
        antecedents = tuple(self.claim() for _ in range(self.rng.choice((1, 1, 2))))
        return DefeasibleStep(self._children_for(antecedents, depth, kind), claim)

    def strict_step(self, depth: int, kind: str = "any") -> StrictStep:
        n = self.rng.choice((1, 1, 2, 2, 3))
        claims = [self.claim() for _ in range(n)]
        children = self._children_for(claims, depth, kind)
        return StrictStep(children, self.entailed_claim(claims) if self.rng.random() < 0.6 else self.claim())

    def defeasible_step(self, depth: int, kind: str = "any") -> DefeasibleStep:
        rule = self.rule()
        children = self._children_for(rule.antecedents, depth, kind if kind == "strict" else "any")
        if kind == "defeasible" or self.rng.random() < 0.85:
            return DefeasibleStep(children, rule.conclusion)
        return DefeasibleStep(children, self.claim())

    def entailed_claim(self, claims) -> Formula:
        """A formula that classically follows from ``claims`` (by construction)."""
        roll = self.rng.random()
        first = self.rng.choice(claims)
        if roll < 0.3 or len(claims) == 1 and roll < 0.5:
            return first
        if roll < 0.6 and len(claims) > 1:
            second = self.rng.choice(claims)
            return And(first, second)
        if roll < 0.8:
            return Or(first, self.claim())
        return Implies(self.claim(), first)

    # formulas ---------------------------------------------------------------

    def formula(self, depth: int | None = None) -> Formula:
        """Random static formula of the base language, weighted toward non-Boolean operators."""
        if depth is None:
            depth = self.cfg.max_formula_depth
        if depth <= 0:
            return self.literal() if self.rng.random() < 0.7 else self.leaf_operator()
        roll = self.rng.random()
        if roll < 0.12:
            return self.atom()
        if roll < 0.22:
            return Not(self.formula(depth - 1))
        if roll < 0.34:
            return And(self.formula(depth - 1), self.formula(depth - 1))
        if roll < 0.42:
            return (Or, Implies)[self.rng.randrange(2)](self.formula(depth - 1), self.formula(depth - 1))
        if roll < 0.54:
            return Box(self.formula(depth - 1))
        if roll < 0.60:
            return Diamond(self.formula(depth - 1))
        return self.leaf_operator()

    def leaf_operator(self) -> Formula:
        roll = self.rng.random()
        if self.beliefs and roll < 0.1:
            arg = self.argument()
            return Believes(arg, arg.claim if self.rng.random() < 0.8 else self.claim())
        if roll < 0.25:
            return Aware(self.argument())
        if roll < 0.4:
            arg = self.argument()
            return ConcIs(arg, arg.claim if self.rng.random() < 0.5 else self.claim())
        if roll < 0.55:
            return Strict(self.argument())
        if roll < 0.75:
            target = self.argument(kind="defeasible") if self.rng.random() < 0.6 else self.argument()
            return Undercuts(self.undercutter(target), target)
        return WellShaped(self.argument())

    def undercutter(self, target: Argument) -> Argument:
        """An argument concluding the negation of some atom, often a plausible rule name."""
        return self.argument_concluding(Not(self.atom()), 1)

    # actions and dynamic formulas ---------------------------------------------

    def announcement(self) -> Formula:
        return self.prop_formula(1) if self.rng.random() < 0.7 else self.formula(1)

    def action(self) -> Action:
        roll = self.rng.random()
        if roll < 0.45:
            arg = self.argument()
            self.focus.append(arg)
            return Acquire(arg) if roll < 0.3 else Forget(arg)
        if roll < 0.75:
            rule = self.rule()
            self.focus.append(simplest_argument(rule))
            return LearnRule(rule)
        return Announce(self.announcement())

    def dyn_formula(self, depth: int | None = None, dyn_depth: int = 2) -> Formula:
        """Formula with at most ``dyn_depth`` nested dynamic modalities and no B(A,F)."""
        if depth is None:
            depth = self.cfg.max_formula_depth
        if depth <= 0 or self.rng.random() < 0.15:
            return self.literal() if self.rng.random() < 0.5 else self.leaf_operator()
        roll = self.rng.random()
        if dyn_depth > 0 and roll < 0.4:
            action = self.action()
            body = self.dyn_formula(depth - 1, dyn_depth - 1)
            return Dynamic(action, body) if self.rng.random() < 0.8 else Not(Dynamic(action, Not(body)))
        if roll < 0.55:
            return Not(self.dyn_formula(depth - 1, dyn_depth))
        if roll < 0.75:
            return And(self.dyn_formula(depth - 1, dyn_depth), self.dyn_formula(depth - 1, dyn_depth))
        if roll < 0.85:
            return Implies(self.dyn_formula(depth - 1, dyn_depth), self.dyn_formula(depth - 1, dyn_depth))
        return Box(self.dyn_formula(depth - 1, dyn_depth))

    def coherent_argument(self, rules, names, depth: int = 2) -> Argument:
        """Argument that is well-shaped given ``rules``, or an attacker of one.

        Mixes atomic literals, one-step rule applications, chains through rule
        conclusions, strict consequences, undercutters of named rules and
        rebutters of rule conclusions.
        """
        rules = sorted(rules, key=_rule_key)
        roll = self.rng.random()
        if not rules or roll < 0.2:
            return Atomic(self.literal())
        rule = self.rng.choice(rules)
        if roll < 0.35 and rule in names:
            attacker_claim = Not(Atom(names[rule]))
            if self.rng.random() < 0.5:
                return Atomic(attacker_claim)
            supporting = [r for r in rules if r.conclusion == attacker_claim]
            if supporting:
                return self.chain(self.rng.choice(supporting), rules, depth - 1)
            return Atomic(attacker_claim)
        if roll < 0.5:
            target = self.rng.choice(rules).conclusion
            return self.argument_concluding(Not(target), 1, "strict") if self.rng.random() < 0.5 else Atomic(Not(target))
        arg = self.chain(rule, rules, depth)
        if roll < 0.65:
            claims = [arg.claim] + ([self.literal()] if self.rng.random() < 0.5 else [])
            children = (arg,) + tuple(Atomic(c) for c in claims[1:])
            return StrictStep(children, self.entailed_claim(claims))
        return arg

    def chain(self, rule: Rule, rules, depth: int) -> DefeasibleStep:
        children = []
        for antecedent in rule.antecedents:
            feeders = [r for r in rules if r.conclusion == antecedent and r is not rule]
            if depth > 1 and feeders and self.rng.random() < 0.6:
                children.append(self.chain(self.rng.choice(feeders), rules, depth - 1))
            else:
                children.append(Atomic(antecedent))
        return DefeasibleStep(tuple(children), rule.conclusion)


def _rule_key(rule: Rule):
    return render(rule)


@lru_cache(maxsize=64)
def rule_pool(cfg: GenConfig) -> tuple[Rule, ...]:
    """Learnable rules over the atom pool, in a seed-dependent order."""
    atoms = [Atom(a) for a in cfg.atom_pool]
    rules = []
    for x in atoms:
        for y in atoms:
            if x != y:
                rules.append(Rule((x,), y))
                rules.append(Rule((x,), Not(y)))
    for x in atoms:
        for y in atoms:
            for z in atoms:
                if len({x, y, z}) == 3:
                    rules.append(Rule((x, y), z))
    if len(atoms) == 1:
        rules.append(Rule((atoms[0],), Atom(cfg.atom_pool[0] + "x")))
    rng = cfg.rng("rules", 0)
    rng.shuffle(rules)
    return tuple(r for r in rules[:16] if rule_violation(r) is None)


@lru_cache(maxsize=64)
def argument_universe(cfg: GenConfig) -> tuple[Argument, ...]:
    """A finite, seed-derived stock of arguments that models are typically aware of."""
    rng = cfg.rng("universe", 0)
    draw = Draw(cfg, rng)
    stock: dict[Argument, None] = {}
    for a in cfg.atom_pool:
        stock[Atomic(Atom(a))] = None
        stock[Atomic(Not(Atom(a)))] = None
    for rule in rule_pool(cfg):
        stock[simplest_argument(rule)] = None
    # undercutters of named rules and chained arguments
    for _ in range(12):
        stock[draw.argument_concluding(Not(draw.atom()), 2)] = None
    for _ in range(12):
        kind = rng.choice(("strict", "defeasible"))
        stock[draw.strict_step(2) if kind == "strict" else draw.defeasible_step(2)] = None
    return tuple(stock)


# ---------------------------------------------------------------- public API


def random_formula(cfg: GenConfig, index: int = 0) -> Formula:
    return Draw(cfg, cfg.rng("formula", index)).formula()


def random_dyn_formula(cfg: GenConfig, index: int = 0, dyn_depth: int = 3) -> Formula:
    return Draw(cfg, cfg.rng("dyn-formula", index)).dyn_formula(dyn_depth=dyn_depth)


def random_argument(cfg: GenConfig, index: int = 0) -> Argument:
    draw = Draw(cfg, cfg.rng("argument", index))
    return draw.argument(kind=draw.rng.choice(("any", "strict", "defeasible")))


def random_rule(cfg: GenConfig, index: int = 0) -> Rule:
    return Draw(cfg, cfg.rng("rule", index)).rule()


def _valuation(rng: random.Random, atoms, worlds, doxastic, lean=None) -> dict[str, frozenset[str]]:
    """Random valuation; ``lean`` maps atoms to a polarity they tend to be believed with."""
    lean = lean or {}
    valuation = {}
    for atom in atoms:
        roll = rng.random()
        true_in_b = None
        if atom in lean and roll < 0.7:
            true_in_b = lean[atom]
        elif roll < 0.45:
            true_in_b = True
        elif roll < 0.75:
            true_in_b = False
        ws = set()
        for w in worlds:
            if w in doxastic and true_in_b is not None:
                if true_in_b:
                    ws.add(w)
            elif rng.random() < 0.5:
                ws.add(w)
        valuation[atom] = frozenset(ws)
    return valuation


def random_model(cfg: GenConfig, index: int = 0) -> Model:
    rng = cfg.rng("model", index)
    draw = Draw(cfg, rng)
    worlds = tuple(f"w{i}" for i in range(rng.randint(1, cfg.max_worlds)))
    doxastic = frozenset(rng.sample(worlds, rng.randint(1, len(worlds))))
    universe = argument_universe(cfg)
    rules = set()
    pool = rule_pool(cfg)
    for _ in range(rng.randint(0, cfg.max_rules)):
        rule = rng.choice(pool) if rng.random() < 0.8 else draw.rule()
        if rule_violation(rule) is None:
            rules.add(rule)
    names = {}
    for rule in pool + tuple(sorted(rules - set(pool), key=_rule_key)):
        if rng.random() < 0.5:
            names[rule] = rng.choice(cfg.atom_pool)
    lean = {}
    for rule in sorted(rules, key=_rule_key):
        for phi in rule.antecedents:
            match phi:
                case Atom(name):
                    lean.setdefault(name, True)
                case Not(Atom(name)):
                    lean.setdefault(name, False)
    # give undercutters and rebutters a chance of being accepted
    for rule in sorted(rules, key=_rule_key):
        if rule in names and rng.random() < 0.5:
            lean.setdefault(names[rule], False)
        if rng.random() < 0.4:
            match rule.conclusion:
                case Atom(name):
                    lean.setdefault(name, False)
                case Not(Atom(name)):
                    lean.setdefault(name, True)
    valuation = _valuation(rng, cfg.atom_pool, worlds, doxastic, lean)
    believed = [
        lit
        for a in cfg.atom_pool
        for lit in (Atom(a), Not(Atom(a)))
        if all((w in valuation[a]) == isinstance(lit, Atom) for w in doxastic)
    ]
    awareness = set()
    for _ in range(rng.randint(0, cfg.max_awareness)):
        roll = rng.random()
        if roll < 0.15 and believed:
            awareness.add(Atomic(rng.choice(believed)))
        elif roll < 0.6:
            awareness.add(draw.coherent_argument(rules, names, cfg.max_argument_depth))
        elif roll < 0.85:
            awareness.add(rng.choice(universe))
        else:
            awareness.add(draw.argument())
    return validate(Model(worlds, doxastic, frozenset(awareness), frozenset(rules), names, valuation))


def random_kripke(cfg: GenConfig, index: int = 0) -> KripkeModel:
    """Disjoint union of balloons: a fully connected core, plus tail worlds pointing into it.

    Each balloon carries its own syntactic components, which keeps
    the relation KD45 and the syntactic components relation-invariant by
    construction while making the whole model non-uniform in general.
    """
    rng = cfg.rng("kripke", index)
    draw = Draw(cfg, rng)
    n = rng.randint(1, cfg.max_worlds)
    worlds = [f"k{i}" for i in range(n)]
    order = worlds[:]
    rng.shuffle(order)
    relation = set()
    awareness_at, rules_at, names_at = {}, {}, {}
    universe = argument_universe(cfg)
    pool = rule_pool(cfg)
    while order:
        size = rng.randint(1, len(order))
        balloon, order = order[:size], order[size:]
        tails = rng.randint(0, len(balloon) - 1)
        core, tail = balloon[tails:], balloon[:tails]
        relation |= {(u, v) for u in core for v in core}
        relation |= {(t, v) for t in tail for v in core}
        awareness = frozenset(
            rng.choice(universe) if rng.random() < 0.75 else draw.argument()
            for _ in range(rng.randint(0, cfg.max_awareness))
        )
        rules = frozenset(r for r in (rng.choice(pool) for _ in range(rng.randint(0, cfg.max_rules))))
        names = {r: rng.choice(cfg.atom_pool) for r in pool if rng.random() < 0.5}
        for w in balloon:
            awareness_at[w], rules_at[w], names_at[w] = awareness, rules, names
    valuation = {a: frozenset(w for w in worlds if rng.random() < 0.5) for a in cfg.atom_pool}
    return KripkeModel(tuple(worlds), frozenset(relation), awareness_at, rules_at, names_at, valuation)


def random_framework(rng: random.Random, max_nodes: int = 8, density: float | None = None):
    """Random abstract framework over integer nodes (self-attacks allowed)."""
    from ..af import ArgFramework

    n = rng.randint(0, max_nodes)
    p = rng.choice((0.1, 0.2, 0.3, 0.5)) if density is None else density
    attacks = {(a, b) for a in range(n) for b in range(n) if rng.random() < p}
    return ArgFramework(tuple(range(n)), frozenset(attacks))
