"""Randomised checks of structural facts about Kripke models and grounded semantics."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..af import (
    check_direct_consistency,
    complete_extensions_bruteforce,
    grounded,
    grounded_extension,
    is_complete,
    is_conflict_free,
)
from ..dynamics import DynamicEvaluator, reduce
from ..kripke import eval_k, generated_submodel, is_uniform, problems, to_standard
from ..lang.structure import subarguments
from ..lang.syntax import Argument, DefeasibleStep, Formula, Not, StrictStep
from ..lang.text import render
from ..model import Model, to_dict
from ..prop import consistent, entails
from ..semantics import STATIC, Rebuttal, evaluate
from . import oracles
from .generators import Draw, GenConfig, random_dyn_formula, random_framework, random_kripke, random_model


@dataclass
class Check:
    name: str
    checks: int = 0
    failures: int = 0
    examples: list[str] = field(default_factory=list)

    def record(self, ok: bool, describe) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 3:
                self.examples.append(describe())

    def line(self) -> str:
        return f"{self.name:<28} checks={self.checks:<7} failures={self.failures}"


@dataclass
class LemmaReport:
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.failures == 0 for c in self.checks)

    def by_name(self) -> dict[str, Check]:
        return {c.name: c for c in self.checks}

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        for c in self.checks:
            out.extend(f"counterexample {c.name}: {e}" for e in c.examples)
        total = sum(c.failures for c in self.checks)
        out.append(f"{'OK' if total == 0 else 'FAIL'}: {len(self.checks)} checks, {total} failures")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def kripke_lemmas(cfg: GenConfig = GenConfig(max_worlds=6), n_models: int = 300, formulas: int = 10) -> LemmaReport:
    """Generated submodels are uniform and truth-preserving; collapsing them keeps truth."""
    wellformed = Check("kripke-frame")
    uniform = Check("submodel-uniform")
    preserved = Check("submodel-truth")
    collapsed = Check("collapse-truth")
    for i in range(n_models):
        km = random_kripke(cfg, i)
        found = problems(km)
        wellformed.record(not found, lambda: f"model {i}: {'; '.join(found)}")
        draw = Draw(cfg, cfg.rng("kripke-formulas", i))
        phis = [draw.formula(cfg.max_formula_depth) for _ in range(formulas)]
        for w in km.worlds:
            sub = generated_submodel(km, w)
            uniform.record(is_uniform(sub), lambda: f"model {i} at {w}")
            pm = to_standard(sub, w) if is_uniform(sub) else None
            for phi in phis:
                for v in sub.worlds:
                    preserved.record(
                        eval_k(km, v, phi) == eval_k(sub, v, phi),
                        lambda: f"model {i} from {w} at {v}: {render(phi)}",
                    )
                if pm is not None:
                    collapsed.record(
                        evaluate(pm, phi) == eval_k(sub, w, phi),
                        lambda: f"model {i} at {w}: {render(phi)}",
                    )
    return LemmaReport([wellformed, uniform, preserved, collapsed])


def grounded_oracle(seed: int = 0, n_frameworks: int = 500, max_nodes: int = 8) -> LemmaReport:
    """Fixpoint grounded extension against brute-force complete extensions and a labelling loop."""
    minimum = Check("grounded-least-complete")
    complete = Check("grounded-complete")
    conflict = Check("grounded-conflict-free")
    labelling = Check("grounded-labelling")
    for i in range(n_frameworks):
        af = random_framework(random.Random(f"{seed}:framework:{i}"), max_nodes)
        ge = grounded(af)
        extensions = complete_extensions_bruteforce(af)
        least = [e for e in extensions if all(e <= other for other in extensions)]
        describe = lambda: f"framework {i}: nodes={list(af.nodes)} attacks={sorted(af.attacks)} grounded={sorted(ge)}"  # noqa: E731
        minimum.record(least == [ge], describe)
        complete.record(is_complete(af, ge), describe)
        conflict.record(is_conflict_free(af, ge), describe)
        labelling.record(oracles.grounded_by_iteration(af.nodes, af.attacks) == ge, describe)
    return LemmaReport([minimum, complete, conflict, labelling])


def direct_consistency(
    cfg: GenConfig = GenConfig(),
    n_models: int = 500,
    modes: Sequence[Rebuttal | str] = (Rebuttal.UNRESTRICTED, Rebuttal.RESTRICTED),
) -> LemmaReport:
    """No two grounded arguments have mutually negating conclusions."""
    checks = []
    for mode in modes:
        mode = Rebuttal(mode)
        check = Check(f"direct-consistency-{mode.value}")
        for i in range(n_models):
            model = random_model(cfg, i)
            witness = check_direct_consistency(model, mode)
            check.record(
                witness is None,
                lambda: f"model {i}: B({render(witness.alpha)}) and B({render(witness.beta)}) "
                f"in {to_dict(model)}",
            )
        checks.append(check)
    return LemmaReport(checks)


def translation(cfg: GenConfig = GenConfig(), n_pairs: int = 500, dyn_depth: int = 3) -> LemmaReport:
    """Dynamic evaluation agrees with evaluation of the reduced static formula."""
    agree = Check("reduce-agrees")
    dynamic = DynamicEvaluator()
    for i in range(n_pairs):
        model = random_model(cfg, i)
        delta = random_dyn_formula(cfg, i, dyn_depth)
        static = reduce(delta)
        agree.record(
            dynamic.truth_set(model, delta) == STATIC.truth_set(model, static),
            lambda: f"pair {i}: {render(delta)} reduced to {render(static)}",
        )
    return LemmaReport([agree])


# ------------------------------------------------- bounded closure experiment


def bounded_closure(model: Model, rounds: int = 2, max_premises: int = 2) -> frozenset[Argument]:
    """A finite stand-in for "aware of every argument".

    Starting from the awareness set closed under subarguments, each round
    chains accepted rules onto existing conclusions and adds strict steps that
    contradict the conclusion of some defeasible step from at most
    ``max_premises`` other arguments (the transpositions that restricted
    rebuttal relies on).
    """
    found: set[Argument] = set()
    for arg in model.awareness:
        found |= subarguments(arg)
    for _ in range(rounds):
        by_claim: dict[Formula, Argument] = {}
        for arg in sorted(found, key=render):
            by_claim.setdefault(arg.claim, arg)
        new: set[Argument] = set()
        for rule in model.rules:
            if all(phi in by_claim for phi in rule.antecedents):
                new.add(DefeasibleStep(tuple(by_claim[phi] for phi in rule.antecedents), rule.conclusion))
        pool = sorted(found, key=render)
        for target in [a for a in pool if isinstance(a, DefeasibleStep)]:
            negation = Not(target.claim)
            for k in range(1, max_premises + 1):
                for combo in combinations(pool, k):
                    if target in combo:
                        continue
                    claims = [a.claim for a in combo]
                    if consistent(claims) and entails(claims, negation):
                        new.add(StrictStep(combo, negation))
        if new <= found:
            break
        found |= new
    return frozenset(found)


@dataclass
class ClosureReport:
    models: int
    restricted_raw: int
    restricted_closed: int
    unrestricted_closed: int
    indirect_closed: int
    mean_awareness: float

    def lines(self) -> list[str]:
        return [
            f"models                              {self.models}",
            f"mean closed awareness size          {self.mean_awareness:.1f}",
            f"restricted, awareness as given      {self.restricted_raw} direct-consistency witnesses",
            f"restricted, bounded closure         {self.restricted_closed} direct-consistency witnesses",
            f"unrestricted, bounded closure       {self.unrestricted_closed} direct-consistency witnesses",
            f"restricted, bounded closure         {self.indirect_closed} with inconsistent grounded conclusions",
        ]

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def closure_experiment(cfg: GenConfig = GenConfig(), n_models: int = 100, rounds: int = 2) -> ClosureReport:
    """Informative only: closure is bounded, so no outcome here confirms or refutes a general claim."""
    raw = closed_r = closed_u = indirect = 0
    sizes = 0
    for i in range(n_models):
        model = random_model(cfg, i)
        raw += check_direct_consistency(model, Rebuttal.RESTRICTED) is not None
        closed = model.replace(awareness=bounded_closure(model, rounds))
        sizes += len(closed.awareness)
        closed_r += check_direct_consistency(closed, Rebuttal.RESTRICTED) is not None
        closed_u += check_direct_consistency(closed, Rebuttal.UNRESTRICTED) is not None
        believed = grounded_extension(closed, Rebuttal.RESTRICTED)
        indirect += not consistent([a.claim for a in believed])
    return ClosureReport(n_models, raw, closed_r, closed_u, indirect, sizes / max(n_models, 1))
