import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from awarearg.demo import R1, harry_model
from awarearg.lang import Atom, Atomic, parse_argument, parse_rule
from awarearg.model import (
    DeductiveRule,
    EmptyDoxasticSet,
    InconsistentRule,
    InvalidModel,
    ModelFormatError,
    UnknownWorld,
    dumps,
    load,
    loads,
    make_model,
    save,
    unclosed_awareness,
    validate,
    well_shaped,
)
from awarearg.testkit import GenConfig, random_model

from strategies import arguments, base_formulas, rules

HARRY_ARG = parse_argument("<<be> => br>")


def violations(**kwargs):
    with pytest.raises(InvalidModel) as info:
        make_model(**kwargs)
    return info.value.violations


def test_harry_model_is_valid(m0):
    assert validate(m0) is m0
    assert m0.doxastic == set(m0.worlds) == {"w0", "w1", "w2", "w3"}
    assert m0.awareness == {Atomic(Atom("be"))}
    assert not m0.rules
    assert m0.names[R1] == "r1"


def test_empty_doxastic_set():
    [problem] = violations(worlds=["w0"], doxastic=[])
    assert isinstance(problem, EmptyDoxasticSet)


def test_deductive_rule_is_rejected():
    [problem] = violations(worlds=["w0"], doxastic=["w0"], rules=[parse_rule("[p => (p | q)]")])
    assert isinstance(problem, DeductiveRule)


def test_inconsistent_rule_is_rejected():
    [problem] = violations(worlds=["w0"], doxastic=["w0"], rules=[parse_rule("[p => !p]")])
    assert isinstance(problem, InconsistentRule)


def test_all_violations_are_listed():
    found = violations(worlds=["w0"], doxastic=["w9"], valuation={"p": ["w7"]})
    assert {type(v) for v in found} == {UnknownWorld}
    assert {v.world for v in found} == {"w9", "w7"}


# -------------------------------------------------------------- well-shapedness


@pytest.mark.parametrize("text", ["<p>", "<bot>", "<[]aware(<q>)>"])
def test_atomic_arguments_are_well_shaped(m0, text):
    assert well_shaped(m0, parse_argument(text))


def test_harry_argument_needs_the_rule(m0):
    assert not well_shaped(m0, HARRY_ARG)
    assert well_shaped(m0.replace(rules={R1}), HARRY_ARG)


def test_modus_ponens_is_well_shaped_everywhere(m0):
    arg = parse_argument("<<p>,<(p -> q)> ->> q>")
    assert well_shaped(m0, arg)
    cfg = GenConfig(seed=5)
    assert all(well_shaped(random_model(cfg, i), arg) for i in range(50))


def test_invalid_strict_step_is_not_well_shaped(m0):
    assert not well_shaped(m0, parse_argument("<<p> ->> q>"))


def test_one_step_defeasible_matches_rule_membership(m0):
    rule = parse_rule("[p, q => r]")
    arg = parse_argument("<<p>,<q> => r>")
    assert not well_shaped(m0, arg)
    assert well_shaped(m0.replace(rules={rule}), arg)


@given(arguments, st.lists(rules, max_size=3), st.lists(rules, max_size=2))
def test_well_shaped_is_monotone_in_rules(arg, small, extra):
    base = harry_model()
    # validity of the rule set does not matter for the recursion
    before = base.replace(rules=set(small))
    after = base.replace(rules=set(small) | set(extra))
    if well_shaped(before, arg):
        assert well_shaped(after, arg)


@given(arguments, st.lists(rules, max_size=3))
def test_strict_steps_ignore_rules(arg, some_rules):
    from awarearg.lang import is_strict

    if is_strict(arg):
        base = harry_model()
        assert well_shaped(base, arg) == well_shaped(base.replace(rules=set(some_rules)), arg)


@given(st.lists(base_formulas, min_size=1, max_size=3), base_formulas)
def test_one_step_rule_specialisation(antecedents, conclusion):
    from awarearg.lang import DefeasibleStep, Rule

    arg = DefeasibleStep(tuple(Atomic(a) for a in antecedents), conclusion)
    rule = Rule(tuple(antecedents), conclusion)
    base = harry_model()
    assert not well_shaped(base, arg)
    assert well_shaped(base.replace(rules={rule}), arg)


def test_unclosed_awareness_is_informational(m0):
    model = m0.replace(awareness={HARRY_ARG})
    assert unclosed_awareness(model) == [Atomic(Atom("be"))]


# ------------------------------------------------------------------ file format


def test_file_round_trip(tmp_path, m0):
    path = tmp_path / "m0.json"
    save(m0, path)
    assert load(path) == m0


def test_random_models_round_trip():
    cfg = GenConfig(seed=9)
    for i in range(100):
        model = random_model(cfg, i)
        assert loads(dumps(model)) == model


def test_shipped_model_files_load():
    from pathlib import Path

    root = Path(__file__).resolve().parent.parent / "models"
    assert load(root / "harry_m0.json") == harry_model()
    assert load(root / "empty_awareness.json").awareness == frozenset()


def _doc(**changes):
    data = {"worlds": ["w0"], "b": ["w0"], "o": [], "d": [], "names": {}, "val": {}}
    data.update(changes)
    return data


def test_missing_b_is_a_format_error():
    data = _doc()
    del data["b"]
    with pytest.raises(ModelFormatError, match="'b'"):
        loads(json.dumps(data))


@pytest.mark.parametrize(
    "changes, fragment",
    [
        ({"o": ["<p"]}, r"o\[0\]"),
        ({"d": ["[p q]"]}, r"d\[0\]"),
        ({"names": {"[p => q]": "Bad"}}, "not an atom"),
        ({"extra": 1}, "unknown field"),
        ({"worlds": "w0"}, "worlds"),
    ],
)
def test_format_errors_name_the_location(changes, fragment):
    with pytest.raises(ModelFormatError, match=fragment):
        loads(json.dumps(_doc(**changes)))


def test_malformed_json_reports_line():
    with pytest.raises(ModelFormatError, match=r"<model>:2:"):
        loads('{"worlds": ["w0"],\n "b": [}')


def test_deductive_rule_in_file():
    with pytest.raises(InvalidModel) as info:
        loads(json.dumps(_doc(d=["[p => (p | q)]"])))
    assert isinstance(info.value.violations[0], DeductiveRule)
