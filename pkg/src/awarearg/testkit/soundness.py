"""Sampled validity checks: every schema instance must hold at every world of every sampled model."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ..dynamics import DynamicEvaluator
from ..lang.syntax import Formula
from ..lang.text import render
from ..model import Model, to_dict
from ..semantics import Evaluator, Rebuttal
from .generators import GenConfig, random_model
from .schemas import DYNAMIC_SCHEMAS, STATIC_SCHEMAS, VALIDITY_SCHEMAS, Instance, axiom_instances, recheck


@dataclass(frozen=True)
class Counterexample:
    schema: str
    model: Model
    world: str
    formula: Formula
    mode: Rebuttal

    def describe(self) -> str:
        return (
            f"counterexample {self.schema} [{self.mode.value}] at {self.world}: {render(self.formula)}\n"
            f"  model: {json.dumps(to_dict(self.model), sort_keys=True)}"
        )


@dataclass
class SchemaResult:
    schema: str
    instances: int = 0
    checks: int = 0
    nonvacuous: int = 0
    side_condition_failures: int = 0
    # invalid (instance, model) pairs; only the first few are kept as examples
    invalid: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return self.invalid + self.side_condition_failures

    def merge(self, other: "SchemaResult") -> "SchemaResult":
        return SchemaResult(
            self.schema,
            self.instances + other.instances,
            self.checks + other.checks,
            self.nonvacuous + other.nonvacuous,
            self.side_condition_failures + other.side_condition_failures,
            self.invalid + other.invalid,
            self.counterexamples + other.counterexamples,
        )

    def line(self) -> str:
        return (
            f"{self.schema:<28} instances={self.instances:<5} checks={self.checks:<7} "
            f"nonvacuous={self.nonvacuous:<7} failures={self.failures}"
        )


@dataclass
class Report:
    results: list[SchemaResult]
    models: int

    @property
    def ok(self) -> bool:
        return all(r.failures == 0 for r in self.results)

    @property
    def counterexamples(self) -> list[Counterexample]:
        return [c for r in self.results for c in r.counterexamples]

    def by_schema(self) -> dict[str, SchemaResult]:
        return {r.schema: r for r in self.results}

    def lines(self) -> list[str]:
        out = [r.line() for r in self.results]
        for r in self.results:
            if r.side_condition_failures:
                out.append(f"side condition violated {r.schema}: {r.side_condition_failures} instance(s)")
        out.extend(c.describe() for c in self.counterexamples)
        total = sum(r.failures for r in self.results)
        out.append(f"{'OK' if total == 0 else 'FAIL'}: {len(self.results)} schemas, {self.models} models, {total} failures")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def check_instances(
    instances: Sequence[Instance],
    models: Iterable[Model],
    evaluator: Evaluator,
    max_examples: int = 3,
) -> SchemaResult:
    """Evaluate ``instances`` on ``models``; keep at most ``max_examples`` counterexamples."""
    models = list(models)
    result = SchemaResult(instances[0].schema if instances else "", instances=len(instances))
    for inst in instances:
        if not recheck(inst):
            result.side_condition_failures += 1
            continue
        for model in models:
            full = model.full_mask
            truth = evaluator.truth_set(model, inst.formula)
            result.checks += len(model.worlds)
            guard = full if inst.guard is None else evaluator.truth_set(model, inst.guard)
            result.nonvacuous += bin(guard).count("1")
            if truth != full:
                result.invalid += 1
                if len(result.counterexamples) < max_examples:
                    bad = next(w for w in model.worlds if not truth & model.bit[w])
                    result.counterexamples.append(Counterexample(inst.schema, model, bad, inst.formula, evaluator.mode))
    return result


def sample_models(cfg: GenConfig, n_models: int) -> list[Model]:
    return [random_model(cfg, i) for i in range(n_models)]


def soundness_report(
    cfg: GenConfig = GenConfig(),
    per_schema: int = 200,
    n_models: int = 50,
    schemas: Optional[Sequence[str]] = None,
    evaluator: Optional[Evaluator] = None,
    modes: Sequence[Rebuttal | str] = (Rebuttal.UNRESTRICTED,),
) -> Report:
    """Check ``per_schema`` instances of each schema on ``n_models`` random models.

    ``schemas`` defaults to every registered schema. ``evaluator`` replaces the dynamic evaluator (this is
    the hook for mutation testing); otherwise one is built per rebuttal mode.
    """
    if schemas is None:
        schemas = STATIC_SCHEMAS + DYNAMIC_SCHEMAS + VALIDITY_SCHEMAS
    models = sample_models(cfg, n_models)
    evaluators = [evaluator] if evaluator is not None else [DynamicEvaluator(m) for m in modes]
    results = []
    for name in schemas:
        instances = axiom_instances(name, cfg, per_schema)
        merged = SchemaResult(name)
        for ev in evaluators:
            part = check_instances(instances, models, ev)
            part.schema = name
            merged = merged.merge(part)
        merged.instances = len(instances)
        results.append(merged)
    return Report(results, len(models))
