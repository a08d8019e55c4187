"""Argument-based belief for agents with limited awareness of arguments.

Modules: ``lang`` (syntax, parser, argument structure), ``prop`` (classical
consequence), ``model`` (models and well-shapedness), ``semantics`` (truth,
defeat), ``af`` (frameworks and grounded semantics), ``dynamics`` (actions and
reduction), ``kripke`` (relational models), ``testkit`` (random checks).
"""

from .af import ArgFramework, build_af, check_direct_consistency, grounded, grounded_extension
from .dynamics import PreconditionFailed, apply, eval_dyn, pre, reduce, run_script
from .lang import parse_action, parse_argument, parse_formula, parse_rule, render
from .model import InvalidModel, Model, load, make_model, save, validate
from .prop import consistent, entails
from .semantics import PointedModel, Rebuttal, defeats, evaluate, holds, valid_in_model

__all__ = [
    "ArgFramework",
    "InvalidModel",
    "Model",
    "PointedModel",
    "PreconditionFailed",
    "Rebuttal",
    "apply",
    "build_af",
    "check_direct_consistency",
    "consistent",
    "defeats",
    "entails",
    "eval_dyn",
    "evaluate",
    "grounded",
    "grounded_extension",
    "holds",
    "load",
    "make_model",
    "parse_action",
    "parse_argument",
    "parse_formula",
    "parse_rule",
    "pre",
    "reduce",
    "render",
    "run_script",
    "save",
    "valid_in_model",
    "validate",
]
