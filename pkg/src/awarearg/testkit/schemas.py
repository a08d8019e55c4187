"""Random instances of the axiom schemas, static and dynamic.

Each schema is a builder that draws its meta-variables from a :class:`Draw`
and returns an :class:`Instance`. Side-conditioned schemas only emit
instances whose meta-condition holds; :func:`recheck` re-verifies the
condition with the slow oracles so a builder bug cannot slip through.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..dynamics import pre_formula
from ..lang.syntax import (
    BOT,
    TOP,
    Acquire,
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
    Dynamic,
    Forget,
    Formula,
    Iff,
    Implies,
    LearnRule,
    Not,
    Or,
    Strict,
    StrictStep,
    Undercuts,
    WellShaped,
    conjoin,
)
from ..prop import entails
from ..semantics import bd_formula, explicit_belief_formula
from . import oracles
from .generators import Draw, GenConfig, rule_pool


@dataclass(frozen=True)
class Instance:
    schema: str
    formula: Formula
    # the instance says something non-trivial at worlds where this holds
    guard: Optional[Formula] = None
    # meta-variables needed to re-verify the side condition
    meta: tuple = ()

    def get(self, key):
        return dict(self.meta)[key]


Builder = Callable[[Draw], Optional[Instance]]
SCHEMAS: dict[str, Builder] = {}
SIDE_CONDITIONS: dict[str, Callable[[Instance], bool]] = {}


def schema(name: str, side: Callable[[Instance], bool] | None = None):
    def register(builder: Builder) -> Builder:
        SCHEMAS[name] = builder
        if side is not None:
            SIDE_CONDITIONS[name] = side
        return builder

    return register


def _step(kind, children, claim):
    return (StrictStep if kind == "strict" else DefeasibleStep)(tuple(children), claim)


def _children(draw: Draw, n: int | None = None) -> tuple[Argument, ...]:
    n = n or draw.rng.choice((1, 1, 2, 3))
    return tuple(draw.argument(draw.cfg.max_argument_depth - 1) for _ in range(n))


def _atomised(children) -> tuple[Argument, ...]:
    return tuple(Atomic(c.claim) for c in children)


def _rule_shaped(draw: Draw) -> tuple[tuple[Argument, ...], Formula]:
    """Children concluding the antecedents of a pool rule, and usually its conclusion."""
    rule = draw.rng.choice(rule_pool(draw.cfg)) if draw.rng.random() < 0.75 else draw.rule()
    children = tuple(draw.argument_concluding(a, draw.cfg.max_argument_depth - 1) for a in rule.antecedents)
    claim = rule.conclusion if draw.rng.random() < 0.8 else draw.claim()
    return children, claim


# --------------------------------------------------------------- propositional

_TAUTOLOGY_TEMPLATES = (
    lambda a, b, c: Implies(a, Implies(b, a)),
    lambda a, b, c: Implies(Implies(a, Implies(b, c)), Implies(Implies(a, b), Implies(a, c))),
    lambda a, b, c: Implies(Implies(Not(a), Not(b)), Implies(b, a)),
    lambda a, b, c: Or(a, Not(a)),
    lambda a, b, c: Iff(Not(And(a, b)), Or(Not(a), Not(b))),
    lambda a, b, c: Implies(And(a, Or(Not(a), b)), b),
)


def _substitute(phi: Formula, table: dict) -> Formula:
    match phi:
        case Atom(name) if name in table:
            return table[name]
        case Not(sub):
            return Not(_substitute(sub, table))
        case And(left, right):
            return And(_substitute(left, table), _substitute(right, table))
    return phi


@schema("Ax0", side=lambda inst: oracles.naive_tautology(inst.formula))
def _ax0(draw: Draw):
    letters = [Atom("_x"), Atom("_y"), Atom("_z")]
    if draw.rng.random() < 0.5:
        shape = draw.rng.choice(_TAUTOLOGY_TEMPLATES)(*letters)
    else:
        for _ in range(40):
            shape = _random_shape(draw, letters, 3)
            if oracles.naive_tautology(shape):
                break
        else:
            shape = Or(letters[0], Not(letters[0]))
    table = {a.name: draw.formula(2) for a in letters}
    return Instance("Ax0", _substitute(shape, table))


def _random_shape(draw: Draw, letters, depth) -> Formula:
    if depth == 0 or draw.rng.random() < 0.3:
        return draw.rng.choice(letters)
    op = draw.rng.randrange(4)
    if op == 0:
        return Not(_random_shape(draw, letters, depth - 1))
    left, right = _random_shape(draw, letters, depth - 1), _random_shape(draw, letters, depth - 1)
    return (And, Or, Implies)[op - 1](left, right)


# ------------------------------------------------------------------ KD45 for []


@schema("K")
def _k(draw: Draw):
    phi, psi = draw.formula(2), draw.formula(2)
    guard = And(Box(Implies(phi, psi)), Box(phi))
    return Instance("K", Implies(Box(Implies(phi, psi)), Implies(Box(phi), Box(psi))), guard)


@schema("D")
def _d(draw: Draw):
    phi = draw.formula(2)
    return Instance("D", Implies(Box(phi), Not(Box(Not(phi)))), Box(phi))


@schema("4")
def _4(draw: Draw):
    phi = draw.formula(2)
    return Instance("4", Implies(Box(phi), Box(Box(phi))), Box(phi))


@schema("5")
def _5(draw: Draw):
    phi = draw.formula(2)
    return Instance("5", Implies(Not(Box(phi)), Box(Not(Box(phi)))), Not(Box(phi)))


@schema("Ax1")
def _ax1(draw: Draw):
    inst = SCHEMAS[draw.rng.choice(("K", "D", "4", "5"))](draw)
    return Instance("Ax1", inst.formula, inst.guard)


# --------------------------------------------- introspection of the syntactic parts


def _introspection(name, make, negative):
    @schema(name)
    def build(draw: Draw):
        atom = make(draw)
        antecedent = Not(atom) if negative else atom
        return Instance(name, Implies(antecedent, Box(antecedent)), antecedent)

    return build


def _undercut_pair(draw: Draw) -> Formula:
    target = draw.argument(kind="defeasible") if draw.rng.random() < 0.7 else draw.argument()
    return Undercuts(draw.undercutter(target), target)


_introspection("Ax2", lambda d: Aware(d.argument()), False)
_introspection("Ax3", lambda d: Aware(d.argument()), True)
_introspection("Ax4", lambda d: WellShaped(d.argument()), False)
_introspection("Ax5", lambda d: WellShaped(d.argument()), True)
_introspection("Ax6", _undercut_pair, False)
_introspection("Ax7", _undercut_pair, True)


# -------------------------------------------------------- conclusions, strictness


@schema("Ax8", side=lambda inst: oracles.claim_of(inst.get("arg")) == inst.get("claim"))
def _ax8(draw: Draw):
    arg = draw.argument()
    return Instance("Ax8", ConcIs(arg, arg.claim), meta=(("arg", arg), ("claim", arg.claim)))


@schema("Ax9", side=lambda inst: oracles.claim_of(inst.get("arg")) != inst.get("claim"))
def _ax9(draw: Draw):
    arg = draw.argument()
    claim = draw.claim()
    if claim == arg.claim:
        return None
    return Instance("Ax9", Not(ConcIs(arg, claim)), meta=(("arg", arg), ("claim", claim)))


@schema("Ax10", side=lambda inst: not oracles.has_defeasible_step(inst.get("arg")))
def _ax10(draw: Draw):
    arg = draw.argument(kind="strict")
    return Instance("Ax10", Strict(arg), meta=(("arg", arg),))


@schema("Ax11", side=lambda inst: oracles.has_defeasible_step(inst.get("arg")))
def _ax11(draw: Draw):
    arg = draw.argument(kind="defeasible")
    if draw.rng.random() < 0.4:
        # bury the defeasible step under a strict one
        arg = StrictStep((arg,) + _children(draw, 1), arg.claim)
    return Instance("Ax11", Not(Strict(arg)), meta=(("arg", arg),))


# --------------------------------------------------------------- well-shapedness


@schema("Ax12")
def _ax12(draw: Draw):
    return Instance("Ax12", WellShaped(Atomic(draw.claim())))


@schema("Ax13")
def _ax13(draw: Draw):
    children = _children(draw)
    claim = draw.entailed_claim([c.claim for c in children]) if draw.rng.random() < 0.7 else draw.claim()
    whole = WellShaped(StrictStep(children, claim))
    return Instance("Ax13", Implies(whole, conjoin(WellShaped(c) for c in children)), whole)


def _entailment_holds(inst: Instance) -> bool:
    return oracles.naive_entails([oracles.claim_of(c) for c in inst.get("children")], inst.get("claim"))


@schema("Ax14", side=_entailment_holds)
def _ax14(draw: Draw):
    children = _children(draw)
    claim = draw.entailed_claim([c.claim for c in children])
    if not entails([c.claim for c in children], claim):
        return None
    body = conjoin(WellShaped(c) for c in children)
    return Instance(
        "Ax14",
        Implies(body, WellShaped(StrictStep(children, claim))),
        body,
        (("children", children), ("claim", claim)),
    )


@schema("Ax15", side=lambda inst: not _entailment_holds(inst))
def _ax15(draw: Draw):
    children = _children(draw)
    claim = draw.claim()
    if entails([c.claim for c in children], claim):
        return None
    return Instance(
        "Ax15",
        Not(WellShaped(StrictStep(children, claim))),
        meta=(("children", children), ("claim", claim)),
    )


@schema("Ax16")
def _ax16(draw: Draw):
    children, claim = _rule_shaped(draw)
    left = And(conjoin(WellShaped(c) for c in children), WellShaped(DefeasibleStep(_atomised(children), claim)))
    return Instance("Ax16", Iff(left, WellShaped(DefeasibleStep(children, claim))))


@schema("Ax17")
def _ax17(draw: Draw):
    children, claim = _rule_shaped(draw)
    ws = WellShaped(DefeasibleStep(children, claim))
    clash = WellShaped(StrictStep(_atomised(children) + (Atomic(claim),), BOT))
    return Instance("Ax17", Implies(ws, Not(clash)), ws)


@schema("Ax18")
def _ax18(draw: Draw):
    children, claim = _rule_shaped(draw)
    ws = WellShaped(DefeasibleStep(children, claim))
    return Instance("Ax18", Implies(ws, Not(WellShaped(StrictStep(children, claim)))), ws)


# ---------------------------------------------------------------------- undercut


@schema("Ax19", side=lambda inst: inst.get("p") != inst.get("q"))
def _ax19(draw: Draw):
    rule = draw.rule()
    target = oracles.one_step_argument(rule)
    p = draw.atom()
    q = draw.other_atom(p.name)
    hit = Undercuts(Atomic(Not(p)), target)
    return Instance("Ax19", Implies(hit, Not(Undercuts(Atomic(Not(q)), target))), hit, (("p", p), ("q", q)))


@schema("Ax20")
def _ax20(draw: Draw):
    return Instance("Ax20", Not(Undercuts(draw.undercutter(None), Atomic(draw.claim()))))


@schema("Ax21")
def _ax21(draw: Draw):
    children = _children(draw)
    claim = draw.entailed_claim([c.claim for c in children])
    return Instance("Ax21", Not(Undercuts(draw.undercutter(None), StrictStep(children, claim))))


@schema("Ax22", side=lambda inst: not oracles.is_negated_atom(oracles.claim_of(inst.get("attacker"))))
def _ax22(draw: Draw):
    attacker = draw.argument()
    if oracles.is_negated_atom(attacker.claim):
        return None
    target = draw.argument(kind="defeasible") if draw.rng.random() < 0.7 else draw.argument()
    return Instance("Ax22", Not(Undercuts(attacker, target)), meta=(("attacker", attacker),))


def _undercut_transfer(draw: Draw):
    children, claim = _rule_shaped(draw)
    p = draw.atom()
    attacker = draw.argument_concluding(Not(p), 1) if draw.rng.random() < 0.75 else draw.argument()
    flat = Undercuts(Atomic(Not(p)), DefeasibleStep(_atomised(children), claim))
    deep = Undercuts(attacker, DefeasibleStep(children, claim))
    return flat, deep, ConcIs(attacker, Not(p))


@schema("Ax23")
def _ax23(draw: Draw):
    flat, deep, conc = _undercut_transfer(draw)
    guard = And(flat, conc)
    return Instance("Ax23", Implies(guard, deep), guard)


@schema("Ax24")
def _ax24(draw: Draw):
    flat, deep, conc = _undercut_transfer(draw)
    guard = And(deep, conc)
    return Instance("Ax24", Implies(guard, flat), guard)


STATIC_SCHEMAS = ("Ax0", "Ax1", "K", "D", "4", "5") + tuple(f"Ax{i}" for i in range(2, 25))


# ------------------------------------------------------------ belief validities


@schema("explicit-implies-box")
def _v1(draw: Draw):
    phi = draw.claim()
    e = explicit_belief_formula(phi)
    return Instance("explicit-implies-box", Implies(e, Box(phi)), e)


@schema("explicit-as-box")
def _v2(draw: Draw):
    phi = draw.claim()
    return Instance("explicit-as-box", Iff(explicit_belief_formula(phi), Box(And(phi, Aware(Atomic(phi))))))


def _bd_pair(draw: Draw) -> tuple[Argument, Formula]:
    arg = draw.argument(kind="strict") if draw.rng.random() < 0.7 else draw.argument()
    claim = arg.claim if draw.rng.random() < 0.85 else draw.claim()
    return arg, claim


@schema("deductive-implies-box")
def _v3(draw: Draw):
    arg, phi = _bd_pair(draw)
    bd = bd_formula(arg, phi)
    return Instance("deductive-implies-box", Implies(bd, Box(phi)), bd)


@schema("explicit-as-deductive")
def _v4(draw: Draw):
    phi = draw.claim()
    return Instance("explicit-as-deductive", Iff(explicit_belief_formula(phi), bd_formula(Atomic(phi), phi)))


@schema("deductive-implies-arg")
def _v5(draw: Draw):
    arg, phi = _bd_pair(draw)
    bd = bd_formula(arg, phi)
    return Instance("deductive-implies-arg", Implies(bd, Believes(arg, phi)), bd)


@schema("explicit-implies-arg")
def _v6(draw: Draw):
    phi = draw.claim()
    e = explicit_belief_formula(phi)
    return Instance("explicit-implies-arg", Implies(e, Believes(Atomic(phi), phi)), e)


VALIDITY_SCHEMAS = (
    "explicit-implies-box",
    "explicit-as-box",
    "deductive-implies-box",
    "explicit-as-deductive",
    "deductive-implies-arg",
    "explicit-implies-arg",
)


# ----------------------------------------------------------- reduction axioms

# Instances pair [act]phi with its one-step rewrite; bodies may themselves
# contain dynamic modalities, so the equivalences are checked semantically.


def _awareness_action(draw: Draw, sign: str | None = None):
    arg = draw.argument()
    draw.focus.append(arg)
    sign = sign or draw.rng.choice("+-")
    return (Acquire if sign == "+" else Forget)(arg), arg


def _body(draw: Draw) -> Formula:
    return draw.dyn_formula(2, dyn_depth=1)


def _arg_rows():
    def atom(d):
        act, _ = _awareness_action(d)
        p = d.atom()
        return Iff(Dynamic(act, p), p), None

    def neg(d):
        act, _ = _awareness_action(d)
        phi = _body(d)
        return Iff(Dynamic(act, Not(phi)), Not(Dynamic(act, phi))), None

    def conj(d):
        act, _ = _awareness_action(d)
        phi, psi = _body(d), _body(d)
        return Iff(Dynamic(act, And(phi, psi)), And(Dynamic(act, phi), Dynamic(act, psi))), None

    def box(d):
        act, _ = _awareness_action(d)
        phi = _body(d)
        return Iff(Dynamic(act, Box(phi)), Box(Dynamic(act, phi))), None

    def aware_other(d):
        act, arg = _awareness_action(d)
        other = d.argument()
        if other == arg:
            return None
        return Iff(Dynamic(act, Aware(other)), Aware(other)), None, (("arg", arg), ("other", other))

    def aware_add(d):
        act, arg = _awareness_action(d, "+")
        return Iff(Dynamic(act, Aware(arg)), TOP), None

    def aware_drop(d):
        act, arg = _awareness_action(d, "-")
        return Iff(Dynamic(act, Aware(arg)), BOT), None

    def invariant(make):
        def row(d):
            act, _ = _awareness_action(d)
            leaf = make(d)
            return Iff(Dynamic(act, leaf), leaf), None

        return row

    return {
        "atom": atom,
        "not": neg,
        "and": conj,
        "box": box,
        "aware-other": aware_other,
        "aware-add": aware_add,
        "aware-drop": aware_drop,
        "conc": invariant(lambda d: ConcIs(d.argument(), d.claim())),
        "strict": invariant(lambda d: Strict(d.argument())),
        "undercuts": invariant(_undercut_pair),
        "ws": invariant(lambda d: WellShaped(d.argument())),
    }


def _announce_rows():
    def make(kind):
        def row(d: Draw):
            act = Announce(d.announcement())
            guard = pre_formula(act)
            if kind == "atom":
                p = d.atom()
                return Iff(Dynamic(act, p), Implies(guard, p)), guard
            if kind == "not":
                psi = _body(d)
                return Iff(Dynamic(act, Not(psi)), Implies(guard, Not(Dynamic(act, psi)))), guard
            if kind == "and":
                delta, psi = _body(d), _body(d)
                return Iff(Dynamic(act, And(delta, psi)), And(Dynamic(act, delta), Dynamic(act, psi))), guard
            if kind == "box":
                psi = _body(d)
                return Iff(Dynamic(act, Box(psi)), Implies(guard, Box(Dynamic(act, psi)))), guard
            leaf = _LEAVES[kind](d)
            return Iff(Dynamic(act, leaf), Implies(guard, leaf)), guard

        return row

    return {k: make(k) for k in ("atom", "not", "and", "box", "aware", "conc", "strict", "undercuts", "ws")}


_LEAVES = {
    "aware": lambda d: Aware(d.argument()),
    "conc": lambda d: ConcIs(d.argument(), d.claim()),
    "strict": lambda d: Strict(d.argument()),
    "undercuts": _undercut_pair,
    "ws": lambda d: WellShaped(d.argument()),
}


def _rule_rows():
    def learn(d: Draw):
        rule = d.rule()
        d.focus.append(oracles.one_step_argument(rule))
        act = LearnRule(rule)
        return act, rule, pre_formula(act)

    def make(kind):
        def row(d: Draw):
            act, rule, guard = learn(d)
            if kind == "atom":
                p = d.atom()
                return Iff(Dynamic(act, p), Implies(guard, p)), guard
            if kind == "not":
                phi = _body(d)
                return Iff(Dynamic(act, Not(phi)), Implies(guard, Not(Dynamic(act, phi)))), guard
            if kind == "and":
                phi, psi = _body(d), _body(d)
                return Iff(Dynamic(act, And(phi, psi)), And(Dynamic(act, phi), Dynamic(act, psi))), guard
            if kind == "box":
                phi = _body(d)
                return Iff(Dynamic(act, Box(phi)), Box(Dynamic(act, phi))), guard
            leaf = _LEAVES[kind](d)
            return Iff(Dynamic(act, leaf), Implies(guard, leaf)), guard

        return row

    def ws_atomic(d: Draw):
        act, _, guard = learn(d)
        return Iff(Dynamic(act, WellShaped(Atomic(d.claim()))), TOP), guard

    def ws_strict_flat(d: Draw):
        act, _, guard = learn(d)
        claims = [d.claim() for _ in range(d.rng.choice((1, 2)))]
        claim = d.entailed_claim(claims) if d.rng.random() < 0.6 else d.claim()
        ws = WellShaped(StrictStep(tuple(Atomic(c) for c in claims), claim))
        return Iff(Dynamic(act, ws), Implies(guard, ws)), guard

    def ws_own(d: Draw):
        act, rule, guard = learn(d)
        arg = oracles.one_step_argument(rule)
        return Iff(Dynamic(act, WellShaped(arg)), TOP), guard, (("rule", rule), ("arg", arg))

    def ws_other(d: Draw):
        act, rule, guard = learn(d)
        other = d.rule()
        if other == rule:
            return None
        ws = WellShaped(oracles.one_step_argument(other))
        return Iff(Dynamic(act, ws), Implies(guard, ws)), guard, (("rule", rule), ("other", other))

    def ws_step(d: Draw):
        act, rule, guard = learn(d)
        kind = d.rng.choice(("strict", "defeasible"))
        if kind == "defeasible" and d.rng.random() < 0.6:
            children = tuple(d.argument_concluding(a, 1) for a in rule.antecedents)
            claim = rule.conclusion
        else:
            children, claim = _children(d), d.claim()
        whole = WellShaped(_step(kind, children, claim))
        parts = [Dynamic(act, WellShaped(c)) for c in children]
        parts.append(Dynamic(act, WellShaped(_step(kind, _atomised(children), claim))))
        return Iff(Dynamic(act, whole), Implies(guard, conjoin(parts))), guard

    rows = {k: make(k) for k in ("atom", "not", "and", "box", "aware", "conc", "strict", "undercuts")}
    rows.update(
        {
            "ws-atomic": ws_atomic,
            "ws-strict-flat": ws_strict_flat,
            "ws-own": ws_own,
            "ws-other": ws_other,
            "ws-step": ws_step,
        }
    )
    return rows


def _register_rows(prefix: str, rows: dict):
    for kind, make in rows.items():
        name = f"Table2-{prefix}-{kind}"

        def build(draw: Draw, make=make, name=name):
            made = make(draw)
            if made is None:
                return None
            formula, guard, *meta = made
            return Instance(name, formula, guard, meta[0] if meta else ())

        SCHEMAS[name] = build


_register_rows("arg", _arg_rows())
_register_rows("announce", _announce_rows())
_register_rows("rule", _rule_rows())

SIDE_CONDITIONS["Table2-arg-aware-other"] = lambda inst: inst.get("arg") != inst.get("other")
SIDE_CONDITIONS["Table2-rule-ws-own"] = lambda inst: inst.get("arg") == DefeasibleStep(
    tuple(Atomic(a) for a in inst.get("rule").antecedents), inst.get("rule").conclusion
)
SIDE_CONDITIONS["Table2-rule-ws-other"] = lambda inst: inst.get("rule") != inst.get("other")

DYNAMIC_SCHEMAS = tuple(name for name in SCHEMAS if name.startswith("Table2-"))


# ------------------------------------------------------------------------- API


def schema_names() -> tuple[str, ...]:
    return tuple(SCHEMAS)


def expand(name: str) -> tuple[str, ...]:
    """Schema names matching ``name``; ``Table2-*`` style prefixes select a family."""
    if name in SCHEMAS:
        return (name,)
    if name.endswith("*"):
        found = tuple(n for n in SCHEMAS if n.startswith(name[:-1]))
        if found:
            return found
    raise KeyError(f"unknown schema {name!r}")


def axiom_instances(name: str, cfg: GenConfig, n: int, beliefs: bool = True) -> list[Instance]:
    """``n`` instances of one schema, deterministic in ``cfg.seed``.

    ``beliefs`` lets static formula slots contain ``B(A,F)``.
    """
    if name not in SCHEMAS:
        raise KeyError(f"unknown schema {name!r}")
    build = SCHEMAS[name]
    out: list[Instance] = []
    attempt = 0
    while len(out) < n:
        draw = Draw(cfg, cfg.rng(f"schema:{name}", attempt), beliefs=beliefs and not name.startswith("Table2-"))
        attempt += 1
        inst = build(draw)
        if inst is not None:
            out.append(inst)
        elif attempt > 50 * n + 100:
            raise RuntimeError(f"could not satisfy the side condition of {name}")
    return out


def recheck(inst: Instance) -> bool:
    """Independent re-verification of the instance's side condition."""
    check = SIDE_CONDITIONS.get(inst.schema)
    return True if check is None else check(inst)
