"""Model-changing actions and their reduction to the static language."""

from __future__ import annotations

from typing import Iterator, Optional

from .lang.structure import flatten, is_flat, simplest_argument
from .lang.syntax import (
    BOT,
    TOP,
    Acquire,
    Action,
    And,
    Announce,
    Atomic,
    Aware,
    Believes,
    Box,
    DefeasibleStep,
    Diamond,
    Dynamic,
    Forget,
    Formula,
    Implies,
    LearnRule,
    Not,
    Rule,
    StrictStep,
    WellShaped,
    conjoin,
)
from .lang.text import ParseError, parse_action, render
from .model import Model, rule_violation
from .semantics import STATIC, Evaluator, PointedModel, Rebuttal


class PreconditionFailed(ValueError):
    def __init__(self, action: Action, step: Optional[int] = None, reason: str = ""):
        self.action = action
        self.step = step
        self.reason = reason
        where = f"step {step}: " if step is not None else ""
        super().__init__(f"{where}precondition of {render(action)} fails" + (f" ({reason})" if reason else ""))


class NotReducible(ValueError):
    """No reduction axiom pushes a dynamic modality through argument-based belief."""


# ---------------------------------------------------------------------- actions


def pre_formula(action: Action) -> Formula:
    """The precondition as a static formula."""
    match action:
        case Acquire() | Forget():
            return TOP
        case LearnRule(rule):
            atoms = tuple(Atomic(phi) for phi in rule.antecedents)
            return And(
                Not(WellShaped(StrictStep(atoms + (Atomic(rule.conclusion),), BOT))),
                Not(WellShaped(StrictStep(atoms, rule.conclusion))),
            )
        case Announce(phi):
            return And(phi, Diamond(phi))
    raise TypeError(f"not an action: {action!r}")


def pre(pm: PointedModel, action: Action) -> bool:
    match action:
        case Acquire() | Forget():
            return True
        case LearnRule(rule):
            return rule_violation(rule) is None
        case Announce(phi):
            model = pm.model
            phi_set = STATIC.truth_set(model, phi)
            return bool(phi_set & model.bit[pm.world]) and bool(phi_set & model.doxastic_mask)
    raise TypeError(f"not an action: {action!r}")


def _announce(model: Model, phi_set: int) -> Model:
    keep = model.worlds_of(phi_set)
    return model.replace(
        worlds=tuple(w for w in model.worlds if w in keep),
        doxastic=model.doxastic & keep,
        valuation={atom: ws & keep for atom, ws in model.valuation.items()},
    )


def apply(model: Model, action: Action, world: Optional[str] = None) -> Model:
    """The updated model.

    Rule learning requires a learnable rule. Announcements require the formula
    to hold somewhere in the doxastic set and, when ``world`` is given, at
    ``world`` too; otherwise :class:`PreconditionFailed` is raised.
    """
    match action:
        case Acquire(arg):
            return model.replace(awareness=model.awareness | {arg})
        case Forget(arg):
            return model.replace(awareness=model.awareness - {arg})
        case LearnRule(rule):
            problem = rule_violation(rule)
            if problem is not None:
                raise PreconditionFailed(action, reason=str(problem))
            return model.replace(rules=model.rules | {rule})
        case Announce(phi):
            phi_set = STATIC.truth_set(model, phi)
            if not phi_set & model.doxastic_mask:
                raise PreconditionFailed(action, reason="false throughout the doxastic set")
            if world is not None and not phi_set & model.bit[world]:
                raise PreconditionFailed(action, reason=f"false at {world}")
            return _announce(model, phi_set)
    raise TypeError(f"not an action: {action!r}")


# ------------------------------------------------------------------ evaluation


def _updated(model: Model, action: Action) -> Model:
    """``apply`` for the world-independent actions, memoised on the model."""
    cache = model.__dict__.setdefault("_updates", {})
    if action not in cache:
        cache[action] = apply(model, action)
    return cache[action]


class DynamicEvaluator(Evaluator):
    def dynamic(self, model: Model, phi: Dynamic) -> int:
        action, body = phi.action, phi.body
        match action:
            case Acquire() | Forget():
                return self.truth_set(_updated(model, action), body)
            case LearnRule(rule):
                if rule_violation(rule) is not None:
                    return model.full_mask
                return self.truth_set(_updated(model, action), body)
            case Announce(psi):
                psi_set = self.truth_set(model, psi)
                if not psi_set & model.doxastic_mask:
                    return model.full_mask
                cache = model.__dict__.setdefault("_restrictions", {})
                if psi_set not in cache:
                    cache[psi_set] = _announce(model, psi_set)
                updated = cache[psi_set]
                after = updated.worlds_of(self.truth_set(updated, body))
                return (model.full_mask ^ psi_set) | model.mask(after)
        raise TypeError(f"not an action: {action!r}")


def eval_dyn(pm: PointedModel, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    return DynamicEvaluator(mode).holds(pm.model, pm.world, phi)


def dyn_truth_set(model: Model, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> int:
    return DynamicEvaluator(mode).truth_set(model, phi)


def valid_in_model_dyn(model: Model, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    return dyn_truth_set(model, phi, mode) == model.full_mask


# ------------------------------------------------------------------- reduction


def reduce(phi: Formula) -> Formula:
    """Static equivalent of ``phi``, eliminating dynamic modalities innermost first."""
    match phi:
        case Not(sub):
            return Not(reduce(sub))
        case And(left, right):
            return And(reduce(left), reduce(right))
        case Box(sub):
            return Box(reduce(sub))
        case Dynamic(action, body):
            return push(action, reduce(body))
    return phi


def push(action: Action, phi: Formula) -> Formula:
    """Rewrite ``[action]phi`` for a static ``phi`` by the reduction axioms."""
    if isinstance(phi, Dynamic):
        raise ValueError("push expects a static formula; use reduce")
    if isinstance(phi, Believes):
        raise NotReducible(f"no reduction axiom for {render(action)} over {render(phi)}")
    match action:
        case Acquire(arg) | Forget(arg):
            return _push_awareness(action, arg, phi)
        case Announce():
            return _push_announcement(action, phi)
        case LearnRule(rule):
            return _push_rule(action, rule, phi)
    raise TypeError(f"not an action: {action!r}")


def _push_awareness(action: Action, arg, phi: Formula) -> Formula:
    match phi:
        case Not(sub):
            return Not(push(action, sub))
        case And(left, right):
            return And(push(action, left), push(action, right))
        case Box(sub):
            return Box(push(action, sub))
        case Aware(beta) if beta == arg:
            return TOP if isinstance(action, Acquire) else BOT
    # awareness of other arguments is untouched, as is everything syntactic
    return phi


def _push_announcement(action: Announce, phi: Formula) -> Formula:
    guard = pre_formula(action)
    match phi:
        case Not(sub):
            return Implies(guard, Not(push(action, sub)))
        case And(left, right):
            return And(push(action, left), push(action, right))
        case Box(sub):
            return Implies(guard, Box(push(action, sub)))
    return Implies(guard, phi)


def _push_rule(action: LearnRule, rule: Rule, phi: Formula) -> Formula:
    guard = pre_formula(action)
    match phi:
        case Not(sub):
            return Implies(guard, Not(push(action, sub)))
        case And(left, right):
            return And(push(action, left), push(action, right))
        case Box(sub):
            return Box(push(action, sub))
        case WellShaped(arg):
            if isinstance(arg, Atomic):
                return TOP
            if is_flat(arg):
                if isinstance(arg, DefeasibleStep) and arg == simplest_argument(rule):
                    return TOP
                return Implies(guard, phi)
            parts = [push(action, WellShaped(child)) for child in arg.children]
            parts.append(push(action, WellShaped(flatten(arg))))
            return Implies(guard, conjoin(parts))
    return Implies(guard, phi)


def _innermost(phi: Formula) -> Optional[Formula]:
    """Leftmost dynamic subformula whose body is static."""
    match phi:
        case Not(sub) | Box(sub):
            return _innermost(sub)
        case And(left, right):
            found = _innermost(left)
            return found if found is not None else _innermost(right)
        case Dynamic(_, body):
            found = _innermost(body)
            return phi if found is None else found
    return None


def _replace(phi: Formula, target: Formula, replacement: Formula) -> Formula:
    """Rewrite the occurrence of ``target`` that is identical (``is``) to it; untouched parts are kept."""
    if phi is target:
        return replacement
    match phi:
        case Not(sub) | Box(sub):
            new = _replace(sub, target, replacement)
            return phi if new is sub else type(phi)(new)
        case And(left, right):
            new_left = _replace(left, target, replacement)
            if new_left is not left:
                return And(new_left, right)
            new_right = _replace(right, target, replacement)
            return phi if new_right is right else And(left, new_right)
        case Dynamic(action, body):
            new = _replace(body, target, replacement)
            return phi if new is body else Dynamic(action, new)
    return phi


def reduction_trace(phi: Formula) -> Iterator[Formula]:
    """``phi`` followed by the formula after each single-modality elimination."""
    yield phi
    while True:
        target = _innermost(phi)
        if target is None:
            return
        phi = _replace(phi, target, push(target.action, target.body))
        yield phi


# ----------------------------------------------------------------- scripts


def parse_script(text: str) -> list[Action]:
    """One action per line; blank lines and ``#`` comments are ignored."""
    actions = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            actions.append(parse_action(line))
        except ParseError as err:
            err.args = (f"line {lineno}: {err}",)
            raise
    return actions


def run_script(model: Model, actions: list[Action], world: Optional[str] = None) -> Model:
    """Apply ``actions`` left to right; a failing precondition aborts with its 1-based step."""
    for step, action in enumerate(actions, 1):
        try:
            model = apply(model, action, world)
        except PreconditionFailed as err:
            raise PreconditionFailed(action, step, err.reason) from err
    return model
