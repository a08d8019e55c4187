import pytest
from hypothesis import given

from awarearg.lang import (
    BOT,
    TOP,
    Acquire,
    And,
    Announce,
    ArityError,
    Atom,
    Atomic,
    Believes,
    Box,
    ConcIs,
    DefeasibleStep,
    Diamond,
    Dynamic,
    Iff,
    Implies,
    LearnRule,
    Not,
    Or,
    ParseError,
    Rule,
    StrictStep,
    Undercuts,
    WellShaped,
    argument_depth,
    count_dynamic,
    flatten,
    is_flat,
    is_static,
    parse_action,
    parse_argument,
    parse_formula,
    parse_rule,
    parse_static_formula,
    render,
    simplest_argument,
    structure,
    subarguments,
)
from awarearg.testkit import GenConfig, random_argument, random_dyn_formula, random_formula

from strategies import actions, arguments, dyn_formulas, rules

p, q, r = Atom("p"), Atom("q"), Atom("r")
bird, wings, flies = Atom("bird"), Atom("wings"), Atom("flies")
BIRD_ARG = DefeasibleStep(
    (StrictStep((Atomic(bird), Atomic(Implies(bird, wings))), wings),),
    flies,
)


# ------------------------------------------------------------------ parsing


def test_parse_boolean():
    assert parse_formula("(bird & !flies)") == And(bird, Not(flies))


def test_parse_bird_argument():
    assert parse_argument("<<<bird>,<(bird -> wings)> ->> wings> => flies>") == BIRD_ARG


def test_parse_ws_atomic():
    assert parse_formula("ws(<p>)") == WellShaped(Atomic(p))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("top", TOP),
        ("bot", BOT),
        ("(p | q)", Or(p, q)),
        ("(p -> q)", Implies(p, q)),
        ("(p <-> q)", Iff(p, q)),
        ("<>p", Diamond(p)),
        ("[]!p", Box(Not(p))),
        ("conc(<p>)=(p & q)", ConcIs(Atomic(p), And(p, q))),
        ("undercuts(<!r>, <<p> => q>)", Undercuts(Atomic(Not(r)), DefeasibleStep((Atomic(p),), q))),
        ("B(<p>, p)", Believes(Atomic(p), p)),
        ("[+arg <p>]q", Dynamic(Acquire(Atomic(p)), q)),
        ("<announce p>q", Not(Dynamic(Announce(p), Not(q)))),
    ],
)
def test_parse_operators(text, expected):
    assert parse_formula(text) == expected


def test_derived_connectives_are_core():
    # equality is decided on the desugared tree
    assert parse_formula("(p -> q)") == parse_formula("!(p & !q)")
    assert parse_formula("<>p") == parse_formula("![]!p")


def test_parse_rule_and_action():
    assert parse_rule("[p, q => r]") == Rule((p, q), r)
    assert parse_action("+rule [be => br]") == LearnRule(Rule((Atom("be"),), Atom("br")))
    assert parse_action("announce (p & q)") == Announce(And(p, q))


@pytest.mark.parametrize(
    "text, position",
    [
        ("(p & q", 6),
        ("p q", 2),
        ("(p # q)", 3),
        ("aware(p)", 6),
    ],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert info.value.position == position


def test_argument_error_position():
    with pytest.raises(ParseError) as info:
        parse_argument("<p ->> q>")
    assert info.value.position == 3


def test_zero_child_steps_are_rejected():
    with pytest.raises(ParseError):
        parse_argument("< ->> p>")
    with pytest.raises(ArityError):
        StrictStep((), p)
    with pytest.raises(ArityError):
        DefeasibleStep((), p)
    with pytest.raises(ArityError):
        Rule((), p)


def test_reserved_words_are_not_atoms():
    with pytest.raises(ParseError):
        parse_formula("(ws & p)")


def test_belief_and_dynamics_are_not_allowed_inside_arguments():
    with pytest.raises(ParseError):
        parse_argument("<B(<p>,p)>")
    with pytest.raises(ParseError):
        parse_formula("aware(<[+arg <p>]p>)")
    with pytest.raises(ParseError):
        parse_static_formula("[+arg <p>]p")


# ------------------------------------------------------------------ printing


def test_render_canonical_forms():
    assert render(And(p, q)) == "(p & q)"
    assert render(Atomic(p)) == "<p>"
    assert render(BIRD_ARG) == "<<<bird>,<(bird -> wings)> ->> wings> => flies>"
    assert render(Rule((p, q), r)) == "[p,q => r]"


def test_render_normalises_spacing():
    assert render(parse_formula("  ( p&  !q )")) == "(p & !q)"


@given(dyn_formulas)
def test_formula_round_trip(phi):
    assert parse_formula(render(phi)) == phi


@given(arguments)
def test_argument_round_trip(arg):
    assert parse_argument(render(arg)) == arg


@given(rules)
def test_rule_round_trip(rule):
    assert parse_rule(render(rule)) == rule


@given(actions)
def test_action_round_trip(action):
    assert parse_action(render(action)) == action


def test_round_trip_on_generated_syntax():
    cfg = GenConfig(seed=3)
    for i in range(1000):
        for node, parse in (
            (random_formula(cfg, i), parse_formula),
            (random_argument(cfg, i), parse_argument),
            (random_dyn_formula(cfg, i), parse_formula),
        ):
            assert parse(render(node)) == node


def test_nodes_survive_pickling():
    import pickle

    phi = parse_formula("[+arg <<p> => q>](aware(<<p> => q>) & B(<p>,p))")
    again = pickle.loads(pickle.dumps(phi))
    assert again == phi and hash(again) == hash(phi)


# ------------------------------------------------------------------ structure


def test_bird_structure():
    report = structure(BIRD_ARG)
    assert report.premises == {bird, Implies(bird, wings)}
    assert report.conclusion == flies
    assert report.defeasible_rules == {Rule((wings,), flies)}
    assert report.top_rule == Rule((wings,), flies)
    assert not report.is_strict


def test_atomic_structure():
    report = structure(Atomic(p))
    assert report.premises == {p}
    assert report.conclusion == p
    assert report.subarguments == {Atomic(p)}
    assert report.top_rule is None
    assert report.is_strict


def test_strict_step_structure():
    report = structure(StrictStep((Atomic(p), Atomic(q)), And(p, q)))
    assert report.premises == {p, q}
    assert report.defeasible_rules == frozenset()
    assert report.top_rule == Rule((p, q), And(p, q))


def test_strict_top_rule_is_not_defeasible():
    inner = DefeasibleStep((Atomic(p),), q)
    outer = StrictStep((inner,), Or(q, r))
    assert structure(outer).defeasible_rules == {Rule((p,), q)}


@given(arguments)
def test_structure_recursions(arg):
    report = structure(arg)
    assert report.conclusion == arg.claim
    assert arg in report.subarguments
    assert report.is_strict == (not report.defeasible_rules)
    if not isinstance(arg, Atomic):
        kids = [structure(c) for c in arg.children]
        assert report.premises == frozenset().union(*(k.premises for k in kids))
        assert report.subarguments == {arg}.union(*(k.subarguments for k in kids))
        inner = frozenset().union(*(k.defeasible_rules for k in kids))
        expected = inner | {report.top_rule} if isinstance(arg, DefeasibleStep) else inner
        assert report.defeasible_rules == expected
        for child in arg.children:
            assert subarguments(child) <= report.subarguments


@pytest.mark.parametrize(
    "rule, text",
    [
        (Rule((wings,), flies), "<<wings> => flies>"),
        (Rule((Atom("be"),), Atom("br")), "<<be> => br>"),
        (Rule((p, q), r), "<<p>,<q> => r>"),
    ],
)
def test_simplest_argument(rule, text):
    assert render(simplest_argument(rule)) == text


def test_flatten():
    assert flatten(BIRD_ARG) == DefeasibleStep((Atomic(wings),), flies)
    assert is_flat(flatten(BIRD_ARG)) and not is_flat(BIRD_ARG)
    assert argument_depth(BIRD_ARG) == 2


def test_static_and_dynamic_counts():
    phi = parse_formula("([+arg <p>][announce q]p & [+rule [p => q]]q)")
    assert count_dynamic(phi) == 3
    assert not is_static(phi)
    assert is_static(parse_formula("B(<p>,p)"))
