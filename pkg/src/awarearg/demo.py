"""The British-subject example: learning a rule, then an undercutting fact.

An agent believes Harry was born in Bermuda (``be``). After learning that
being born in Bermuda presumably makes one a British subject (rule ``R1``,
named ``r1``) and entertaining the one-step argument for ``br``, she holds
the argument-based belief ``B(<<be> => br>, br)``. Learning that Harry's
parents are aliens (``a``) together with the rule ``R2 = [a => !r1]`` and its
argument undercuts the first argument, and the belief is withdrawn.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lang.syntax import Atom, Atomic, Formula, Rule
from .lang.text import parse_formula, parse_rule
from .lang.structure import simplest_argument
from .model import Model, make_model

R1: Rule = parse_rule("[be => br]")
R2: Rule = parse_rule("[a => !r1]")
ALPHA_R1 = simplest_argument(R1)
ALPHA_R2 = simplest_argument(R2)


def harry_model() -> Model:
    worlds = ("w0", "w1", "w2", "w3")
    return make_model(
        worlds=worlds,
        doxastic=worlds,
        awareness=[Atomic(Atom("be"))],
        rules=[],
        names={R1: "r1"},
        valuation={"be": worlds, "br": ("w0", "w2"), "r1": ("w0", "w2"), "a": ("w0", "w1")},
    )


@dataclass(frozen=True)
class Claim:
    label: str
    formula: Formula
    expected: bool


HARRY_CLAIMS = (
    Claim("explicit belief in be", parse_formula("([]be & aware(<be>))"), True),
    Claim(
        "belief in br after learning R1 and its argument",
        parse_formula("[+rule [be => br]][+arg <<be> => br>]B(<<be> => br>, br)"),
        True,
    ),
    Claim(
        "no belief in br after also learning a, R2 and its argument",
        parse_formula(
            "[+rule [be => br]][+arg <<be> => br>][announce a][+rule [a => !r1]][+arg <<a> => !r1>]"
            "!B(<<be> => br>, br)"
        ),
        True,
    ),
)
