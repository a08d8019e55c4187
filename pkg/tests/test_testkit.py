import random
import re

import pytest

from awarearg.dynamics import DynamicEvaluator
from awarearg.lang import (
    Atomic,
    Dynamic,
    Iff,
    Not,
    Undercuts,
    WellShaped,
    parse_argument,
    parse_formula,
    render,
    structure,
)
from awarearg.lang.syntax import Acquire, Atom, Forget
from awarearg.model import check, to_dict
from awarearg.testkit import (
    GenConfig,
    axiom_instances,
    random_argument,
    random_formula,
    random_framework,
    random_kripke,
    random_model,
    soundness_report,
)
from awarearg.testkit import oracles
from awarearg.testkit.schemas import Instance, expand, recheck, schema_names


def test_config_bounds():
    with pytest.raises(ValueError):
        GenConfig(max_worlds=0)
    with pytest.raises(ValueError):
        GenConfig(atom_pool=())


def test_generators_are_deterministic():
    cfg = GenConfig(seed=42)
    assert to_dict(random_model(cfg, 3)) == to_dict(random_model(cfg, 3))
    assert random_formula(cfg, 7) == random_formula(cfg, 7)
    assert random_argument(cfg, 7) == random_argument(cfg, 7)
    k1, k2 = random_kripke(cfg, 5), random_kripke(cfg, 5)
    assert k1.relation == k2.relation and dict(k1.valuation) == dict(k2.valuation)
    assert to_dict(random_model(cfg, 3)) != to_dict(random_model(GenConfig(seed=43), 3))


def test_random_models_are_valid_and_bounded():
    cfg = GenConfig(seed=0)
    for i in range(1000):
        model = random_model(cfg, i)
        assert check(model) == []
        assert 1 <= len(model.worlds) <= cfg.max_worlds
        assert len(model.awareness) <= cfg.max_awareness
        assert len(model.rules) <= cfg.max_rules


def test_random_models_exercise_attacks():
    cfg = GenConfig(seed=0)
    from awarearg.af import build_af

    with_attacks = sum(bool(build_af(random_model(cfg, i)).attacks) for i in range(200))
    assert with_attacks >= 5


def test_random_argument_structure_is_total():
    cfg = GenConfig(seed=0)
    for i in range(1000):
        arg = random_argument(cfg, i)
        report = structure(arg)
        assert report.conclusion == oracles.claim_of(arg)
        assert report.is_strict != oracles.has_defeasible_step(arg)


def test_framework_generator_is_seeded():
    a = random_framework(random.Random("x"), 8)
    b = random_framework(random.Random("x"), 8)
    assert a == b


# ------------------------------------------------------------------- schemas


def test_schema_catalogue():
    names = schema_names()
    for expected in ["Ax0", "Ax24", "K", "D", "4", "5", "Table2-arg-atom", "Table2-rule-ws-step"]:
        assert expected in names
    assert list(expand("Ax1")) == ["Ax1"]
    assert all(n.startswith("Table2-rule") for n in expand("Table2-rule*"))
    with pytest.raises(KeyError):
        expand("Ax99")


def test_ax12_shape():
    for inst in axiom_instances("Ax12", GenConfig(seed=1), 20):
        assert isinstance(inst.formula, WellShaped) and isinstance(inst.formula.arg, Atomic)


def test_ax20_shape():
    for inst in axiom_instances("Ax20", GenConfig(seed=1), 20):
        assert isinstance(inst.formula, Not) and isinstance(inst.formula.sub, Undercuts)
        assert isinstance(inst.formula.sub.target, Atomic)


def test_acquire_atom_row_shape():
    shape = re.compile(r"^\(\[([+-])arg (<.*>)\]([a-z]\w*) <-> ([a-z]\w*)\)$")
    for inst in axiom_instances("Table2-arg-atom", GenConfig(seed=1), 20):
        match = shape.match(render(inst.formula))
        assert match and match.group(3) == match.group(4)
        action = (Acquire if match.group(1) == "+" else Forget)(parse_argument(match.group(2)))
        p = Atom(match.group(3))
        assert inst.formula == Iff(Dynamic(action, p), p)


def test_instances_are_deterministic():
    cfg = GenConfig(seed=5)
    first = [i.formula for i in axiom_instances("Ax19", cfg, 10)]
    assert first == [i.formula for i in axiom_instances("Ax19", cfg, 10)]


@pytest.mark.parametrize("name", ["Ax8", "Ax9", "Ax10", "Ax11", "Ax14", "Ax15", "Ax19", "Ax22"])
def test_side_conditions_hold_and_are_rechecked(name):
    for inst in axiom_instances(name, GenConfig(seed=2), 30):
        assert recheck(inst)


def test_recheck_rejects_a_forged_instance():
    good = axiom_instances("Ax19", GenConfig(seed=2), 1)[0]
    meta = dict(good.meta)
    forged = Instance(good.schema, good.formula, good.guard, (("p", meta["p"]), ("q", meta["p"])))
    assert not recheck(forged)


def test_every_schema_produces_instances():
    cfg = GenConfig(seed=3)
    for name in schema_names():
        assert len(axiom_instances(name, cfg, 3)) == 3, name


# ------------------------------------------------------------------- harness


def test_small_report_is_clean():
    report = soundness_report(GenConfig(seed=4), per_schema=10, n_models=5, schemas=["Ax2", "K", "Table2-arg-box"])
    assert report.ok
    assert len(report.results) == 3
    assert report.text().strip().endswith("0 failures")


class BrokenBox(DynamicEvaluator):
    """Box that only looks at worlds inside the doxastic set, so it is no longer global."""

    def box(self, model, inner):
        return inner & model.doxastic_mask


def test_mutation_is_detected():
    report = soundness_report(
        GenConfig(seed=0), per_schema=50, n_models=30, schemas=["Ax2", "Ax3"], evaluator=BrokenBox()
    )
    assert not report.ok
    assert report.by_schema()["Ax2"].failures > 0
    example = report.counterexamples[0]
    assert example.schema in {"Ax2", "Ax3"}
    assert "counterexample" in example.describe()
    assert render(example.formula) in report.text()


def test_oracle_tautologies():
    assert oracles.naive_tautology(parse_formula("(p | !p)"))
    assert not oracles.naive_tautology(parse_formula("([]p | !p)"))
