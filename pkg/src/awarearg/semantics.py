"""Truth at pointed models, and the belief and defeat notions built on it.

Evaluation works on truth sets: ``Evaluator.truth_set`` returns the set of
worlds satisfying a formula as an integer bit mask (bit order follows
``Model.worlds``). Pointed evaluation is a bit test on that mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lang.structure import is_strict, premises, subarguments, top_rule
from .lang.syntax import (
    And,
    Argument,
    Atom,
    Atomic,
    Aware,
    Believes,
    Bot,
    Box,
    ConcIs,
    DefeasibleStep,
    Dynamic,
    Formula,
    Not,
    Strict,
    StrictStep,
    Undercuts,
    WellShaped,
    conjoin,
)
from .model import Model, UnknownWorld
from .prop import entails


class Rebuttal(str, Enum):
    UNRESTRICTED = "unrestricted"
    RESTRICTED = "restricted"


@dataclass(frozen=True)
class PointedModel:
    model: Model
    world: str

    def __post_init__(self):
        if self.world not in self.model.bit:
            raise UnknownWorld(self.world, "the pointed model")


class Evaluator:
    """Static truth-set evaluator.

    ``mode`` is the rebuttal notion used for ``B(A,F)``. Subclasses override
    individual clauses (``box``, ``dynamic``); the dynamic evaluator lives in
    :mod:`awarearg.dynamics`.
    """

    def __init__(self, mode: Rebuttal | str = Rebuttal.UNRESTRICTED):
        self.mode = Rebuttal(mode)
        # evaluators of one class and mode agree, so they share the per-model memo
        self._memo_key = (type(self), self.mode)

    def truth_set(self, model: Model, phi: Formula) -> int:
        memo = model.__dict__.setdefault("_truth", {}).setdefault(self._memo_key, {})
        found = memo.get(phi)
        if found is None:
            found = memo[phi] = self.compute(model, phi)
        return found

    def compute(self, model: Model, phi: Formula) -> int:
        """One clause of the truth definition; subformulas go through :meth:`truth_set`."""
        full = model.full_mask
        match phi:
            case Atom(name):
                return model.atom_mask(name)
            case Bot():
                return 0
            case Not(sub):
                return full ^ self.truth_set(model, sub)
            case And(left, right):
                left_set = self.truth_set(model, left)
                return left_set and left_set & self.truth_set(model, right)
            case Box(sub):
                return self.box(model, self.truth_set(model, sub))
            case Aware(arg):
                return full if arg in model.awareness else 0
            case ConcIs(arg, claim):
                return full if arg.claim == claim else 0
            case Strict(arg):
                return full if is_strict(arg) else 0
            case Undercuts(attacker, target):
                return full if undercuts(model, attacker, target) else 0
            case WellShaped(arg):
                return full if model.well_shaped(arg) else 0
            case Believes(arg, claim):
                return full if self.believes(model, arg, claim) else 0
            case Dynamic():
                return self.dynamic(model, phi)
        raise TypeError(f"not a formula: {phi!r}")

    def box(self, model: Model, inner: int) -> int:
        dox = model.doxastic_mask
        return model.full_mask if inner & dox == dox else 0

    def believes(self, model: Model, arg: Argument, claim: Formula) -> bool:
        from .af import grounded_extension

        return arg.claim == claim and arg in grounded_extension(model, self.mode)

    def dynamic(self, model: Model, phi: Dynamic) -> int:
        raise TypeError("dynamic modality in a static formula; use dynamics.eval_dyn")

    def holds(self, model: Model, world: str, phi: Formula) -> bool:
        return bool(self.truth_set(model, phi) & model.bit[world])


STATIC = Evaluator()


def evaluate(pm: PointedModel, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    evaluator = STATIC if Rebuttal(mode) is Rebuttal.UNRESTRICTED else Evaluator(mode)
    return evaluator.holds(pm.model, pm.world, phi)


def holds(model: Model, world: str, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    return evaluate(PointedModel(model, world), phi, mode)


def truth_set(model: Model, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> frozenset[str]:
    return model.worlds_of(Evaluator(mode).truth_set(model, phi))


def valid_in_model(model: Model, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    return Evaluator(mode).truth_set(model, phi) == model.full_mask


# ------------------------------------------------------- syntactic predicates


def undercuts(model: Model, attacker: Argument, target: Argument) -> bool:
    """``attacker`` concludes the negation of the name of ``target``'s defeasible top rule."""
    if not isinstance(target, DefeasibleStep):
        return False
    name = model.names.get(top_rule(target))
    return name is not None and attacker.claim == Not(Atom(name))


def sem_neg(phi: Formula, psi: Formula) -> bool:
    """``phi`` and ``psi`` are propositional negations of each other (both directions)."""
    return entails([phi], Not(psi)) and entails([psi], Not(phi))


def prefers(alpha: Argument, beta: Argument) -> bool:
    """Strict arguments are at least as strong as anything; otherwise only when ``beta`` is defeasible."""
    return is_strict(alpha) or not is_strict(beta)


# ------------------------------------------------------------ doxastic notions


def accepts(model: Model, arg: Argument) -> bool:
    """Every premise of ``arg`` is believed (true throughout the doxastic set)."""
    dox = model.doxastic_mask
    return all(STATIC.truth_set(model, phi) & dox == dox for phi in premises(arg))


def explicit_belief(pm: PointedModel, phi: Formula) -> bool:
    return evaluate(pm, explicit_belief_formula(phi))


def bd_belief(pm: PointedModel, arg: Argument, phi: Formula) -> bool:
    model = pm.model
    return (
        accepts(model, arg)
        and arg in model.awareness
        and arg.claim == phi
        and is_strict(arg)
        and model.well_shaped(arg)
    )


# formula-level abbreviations; ordering of premises is by rendered text so the
# same argument always yields the same formula


def explicit_belief_formula(phi: Formula) -> Formula:
    return And(Box(phi), Aware(Atomic(phi)))


def accept_formula(arg: Argument) -> Formula:
    from .lang.text import render

    return conjoin(Box(phi) for phi in sorted(premises(arg), key=render))


def bd_formula(arg: Argument, phi: Formula) -> Formula:
    return conjoin(
        [accept_formula(arg), Aware(arg), ConcIs(arg, phi), Strict(arg), WellShaped(arg)]
    )


def sem_neg_formula(phi: Formula, psi: Formula) -> Formula:
    return And(
        WellShaped(StrictStep((Atomic(phi),), Not(psi))),
        WellShaped(StrictStep((Atomic(psi),), Not(phi))),
    )


# ---------------------------------------------------------------------- defeat


def undercuts_star(model: Model, alpha: Argument, beta: Argument) -> bool:
    return any(undercuts(model, alpha, sub) for sub in subarguments(beta))


def rebuts(alpha: Argument, beta: Argument, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    if is_strict(beta):
        return False
    if Rebuttal(mode) is Rebuttal.UNRESTRICTED:
        return any(
            sem_neg(alpha.claim, sub.claim) and prefers(alpha, sub) for sub in subarguments(beta)
        )
    return any(
        isinstance(sub, DefeasibleStep) and sem_neg(alpha.claim, sub.claim)
        for sub in subarguments(beta)
    )


def defeats(model: Model, alpha: Argument, beta: Argument, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    return undercuts_star(model, alpha, beta) or rebuts(alpha, beta, mode)
