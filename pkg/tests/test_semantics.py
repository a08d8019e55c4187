import pytest
from hypothesis import given

from awarearg.demo import R1, harry_model
from awarearg.lang import Atom, Atomic, Box, parse_argument, parse_formula, parse_rule
from awarearg.model import make_model
from awarearg.semantics import (
    STATIC,
    PointedModel,
    Rebuttal,
    accepts,
    bd_belief,
    defeats,
    evaluate,
    explicit_belief,
    prefers,
    rebuts,
    sem_neg,
    sem_neg_formula,
    undercuts_star,
    valid_in_model,
)
from awarearg.testkit import GenConfig, random_formula, random_model

from strategies import arguments, base_formulas, formulas

A = parse_argument
F = parse_formula
HARRY = A("<<be> => br>")
R2_ARG = A("<<a> => !r1>")


def test_explicit_belief_at_w0(m0):
    pm = PointedModel(m0, "w0")
    assert evaluate(pm, F("([]be & aware(<be>))"))
    assert explicit_belief(pm, Atom("be"))


def test_undercut_of_harry_argument(m0):
    assert evaluate(PointedModel(m0, "w0"), F("undercuts(<!r1>, <<be> => br>)"))
    assert not evaluate(PointedModel(m0, "w0"), F("undercuts(<!r2>, <<be> => br>)"))


def test_undercut_needs_a_name(m0):
    unnamed = m0.replace(names={})
    assert not evaluate(PointedModel(unnamed, "w0"), F("undercuts(<!r1>, <<be> => br>)"))


def test_undercut_is_syntactic(m0):
    # !!!r1 is equivalent to !r1 but is not literally the negated name
    assert not evaluate(PointedModel(m0, "w0"), F("undercuts(<!!!r1>, <<be> => br>)"))


@pytest.mark.parametrize("text", ["strict(<p>)", "!undercuts(<!r1>, <p>)", "ws(<q>)", "conc(<p>)=p"])
def test_trivially_true(m0, text):
    assert valid_in_model(m0, F(text))


@pytest.mark.parametrize(
    "text, expected",
    [("aware(<be>)", True), ("be", True), ("br", False), ("[]br", False), ("<>br", True)],
)
def test_valid_in_harry_model(m0, text, expected):
    assert valid_in_model(m0, F(text)) is expected


def test_atom_truth_follows_valuation(m0):
    assert STATIC.truth_set(m0, Atom("br")) == m0.mask({"w0", "w2"})
    assert [evaluate(PointedModel(m0, w), Atom("a")) for w in m0.worlds] == [True, True, False, False]


@pytest.mark.parametrize(
    "phi, psi, expected",
    [("p", "!p", True), ("(p & q)", "(!p | !q)", True), ("p", "q", False), ("[]p", "![]p", True), ("p", "p", False)],
)
def test_sem_neg(phi, psi, expected):
    assert sem_neg(F(phi), F(psi)) is expected


@given(base_formulas, base_formulas)
def test_sem_neg_matches_its_formula(phi, psi):
    model = harry_model()
    assert sem_neg(phi, psi) == valid_in_model(model, sem_neg_formula(phi, psi))
    assert sem_neg(phi, psi) == sem_neg(psi, phi)


def test_acceptance_and_bd_belief(m0):
    pm = PointedModel(m0, "w0")
    assert accepts(m0, Atomic(Atom("be")))
    assert bd_belief(pm, Atomic(Atom("be")), Atom("be"))
    assert not accepts(m0, Atomic(Atom("br")))
    assert not bd_belief(pm, Atomic(Atom("br")), Atom("br"))


def test_bd_belief_requires_strictness(m0):
    model = m0.replace(rules={R1}, awareness={HARRY})
    assert accepts(model, HARRY)
    assert not bd_belief(PointedModel(model, "w0"), HARRY, Atom("br"))


def test_prefers():
    assert prefers(A("<p>"), A("<<q> => r>"))
    assert not prefers(A("<<q> => r>"), A("<p>"))
    assert prefers(A("<<q> => r>"), A("<<p> => s>"))


@given(arguments, arguments, arguments)
def test_prefers_is_a_total_preorder(a, b, c):
    assert prefers(a, b) or prefers(b, a)
    if prefers(a, b) and prefers(b, c):
        assert prefers(a, c)


def test_harry_defeat(m0):
    model = m0.replace(rules={R1})
    for mode in Rebuttal:
        assert defeats(model, R2_ARG, HARRY, mode)
    assert undercuts_star(model, R2_ARG, HARRY)
    assert not defeats(model, HARRY, R2_ARG)


@given(arguments, base_formulas)
def test_atomic_targets_are_never_defeated(alpha, phi):
    for mode in Rebuttal:
        assert not defeats(harry_model(), alpha, Atomic(phi), mode)


def test_rebuttal_cases(m0):
    assert defeats(m0, A("<!q>"), A("<<p> => q>"), Rebuttal.UNRESTRICTED)
    assert defeats(m0, A("<!q>"), A("<<p> => q>"), Rebuttal.RESTRICTED)
    assert not defeats(m0, A("<<p> => !q>"), A("<q>"), Rebuttal.UNRESTRICTED)


def test_restricted_rebuttal_needs_a_defeasible_top():
    target = A("<<<p> => q>,<s> ->> (q & s)>")
    attacker = A("<!(q & s)>")
    assert rebuts(attacker, target, Rebuttal.UNRESTRICTED)
    assert not rebuts(attacker, target, Rebuttal.RESTRICTED)


def test_unrestricted_rebuttal_respects_preference():
    # a defeasible attacker cannot rebut a strict subargument
    target = A("<<<p> ->> (p | q)> => r>")
    attacker = A("<<s> => !(p | q)>")
    assert not rebuts(attacker, target, Rebuttal.UNRESTRICTED)
    assert rebuts(A("<!(p | q)>"), target, Rebuttal.UNRESTRICTED)


def test_boxed_formulas_are_world_independent():
    cfg = GenConfig(seed=11)
    for i in range(60):
        model = random_model(cfg, i)
        for j in range(10):
            assert STATIC.truth_set(model, Box(random_formula(cfg, 100 * i + j))) in (0, model.full_mask)


@given(formulas)
def test_box_is_global_on_harry_model(phi):
    model = harry_model().replace(rules={R1}, awareness={HARRY, Atomic(Atom("be"))})
    assert STATIC.truth_set(model, Box(phi)) in (0, model.full_mask)


def test_invalid_world_is_rejected(m0):
    from awarearg.model import UnknownWorld

    with pytest.raises(UnknownWorld):
        PointedModel(m0, "w9")


def test_rebutted_defeasible_argument_is_not_believed():
    model = make_model(
        worlds=["w0"],
        doxastic=["w0"],
        awareness=[A("<!q>"), A("<<p> => q>")],
        rules=[parse_rule("[p => q]")],
        valuation={"p": ["w0"]},
    )
    for mode in Rebuttal:
        pm = PointedModel(model, "w0")
        assert evaluate(pm, F("B(<!q>, !q)"), mode)
        assert not evaluate(pm, F("B(<<p> => q>, q)"), mode)
