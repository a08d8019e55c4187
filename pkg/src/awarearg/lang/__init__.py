"""Two-sorted language of formulas and arguments."""

from .structure import (
    StructureReport,
    argument_depth,
    conclusion,
    defeasible_rules,
    flatten,
    is_flat,
    is_strict,
    premises,
    simplest_argument,
    structure,
    subarguments,
    top_rule,
)
from .syntax import (
    BOT,
    TOP,
    Acquire,
    Action,
    And,
    Announce,
    Argument,
    ArityError,
    Atom,
    Atomic,
    Aware,
    Believes,
    Bot,
    Box,
    ConcIs,
    DefeasibleStep,
    Diamond,
    Dynamic,
    DynamicDual,
    Forget,
    Formula,
    Iff,
    Implies,
    LearnRule,
    Not,
    Or,
    Rule,
    Strict,
    StrictStep,
    Undercuts,
    WellShaped,
    conjoin,
    count_dynamic,
    is_core,
    is_static,
    modal_depth,
    size,
    subformulas,
)
from .text import (
    ParseError,
    parse_action,
    parse_argument,
    parse_formula,
    parse_rule,
    parse_static_formula,
    render,
)
