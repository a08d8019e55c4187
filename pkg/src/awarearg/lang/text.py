"""Concrete text syntax: recursive-descent parser and canonical printer.

Grammar (fully parenthesised binary connectives)::

    F ::= atom | top | bot | !F | []F | <>F
        | (F & F) | (F | F) | (F -> F) | (F <-> F)
        | aware(A) | conc(A)=F | strict(A) | undercuts(A,A) | ws(A)
        | B(A,F)                      argument-based belief
        | [ACT]F | <ACT>F             dynamic modality and its dual
    A ::= <F> | <A,...,A ->> F> | <A,...,A => F>
    R ::= [F,...,F => F]
    ACT ::= +arg A | -arg A | +rule R | announce F

Atoms match ``[a-z][a-z0-9_]*`` minus the reserved words. Formulas nested in
arguments or rules, and action payloads, must be static (no ``[ACT]``, no ``B``).
"""

from __future__ import annotations

import re
from typing import Callable

from .syntax import (
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
    Dynamic,
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
    TOP,
    Undercuts,
    WellShaped,
)

RESERVED = frozenset({"top", "bot", "aware", "conc", "strict", "undercuts", "ws", "announce"})
ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op><->|->>|->|=>|<>|\[\]|\+arg\b|-arg\b|\+rule\b|[<>\[\](),!&|=])
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {_excerpt(text, position)}")


def _excerpt(text: str, position: int) -> str:
    start = max(0, position - 20)
    return repr(text[start : position + 20]) + (f" (offset {position - start})" if start else "")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        if match.lastgroup != "ws":
            tokens.append((match.group(), pos))
        pos = match.end()
    tokens.append(("", len(text)))
    return tokens


_ACTION_WORDS = ("+arg", "-arg", "+rule", "announce")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    # token helpers
    def peek(self, offset: int = 0) -> str:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def next(self) -> str:
        tok = self.tokens[self.i][0]
        if self.i < len(self.tokens) - 1:
            self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {tok!r}, found {found!r}", self.text, self.pos())
        self.next()

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos())

    def finish(self) -> None:
        if self.peek() != "":
            self.fail(f"unexpected trailing input {self.peek()!r}")

    # formulas
    def formula(self, static: bool = False) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.next()
            return Not(self.formula(static))
        if tok == "[]":
            self.next()
            return Box(self.formula(static))
        if tok == "<>":
            self.next()
            return Not(Box(Not(self.formula(static))))
        if tok == "(":
            return self.binary(static)
        if tok == "[" or (tok == "<" and self.peek(1) in _ACTION_WORDS):
            if static:
                self.fail("dynamic modality not allowed here")
            closing = "]" if tok == "[" else ">"
            self.next()
            action = self.action()
            self.expect(closing)
            body = self.formula()
            if closing == ">":
                return Not(Dynamic(action, Not(body)))
            return Dynamic(action, body)
        if tok == "B" and self.peek(1) == "(":
            if static:
                self.fail("argument-based belief not allowed here")
            self.next()
            self.next()
            arg = self.argument()
            self.expect(",")
            claim = self.formula(static=True)
            self.expect(")")
            return Believes(arg, claim)
        if tok in ("aware", "strict", "ws"):
            self.next()
            self.expect("(")
            arg = self.argument()
            self.expect(")")
            return {"aware": Aware, "strict": Strict, "ws": WellShaped}[tok](arg)
        if tok == "conc":
            self.next()
            self.expect("(")
            arg = self.argument()
            self.expect(")")
            self.expect("=")
            return ConcIs(arg, self.formula(static=True))
        if tok == "undercuts":
            self.next()
            self.expect("(")
            attacker = self.argument()
            self.expect(",")
            target = self.argument()
            self.expect(")")
            return Undercuts(attacker, target)
        if tok == "top":
            self.next()
            return TOP
        if tok == "bot":
            self.next()
            return Bot()
        if tok and ATOM_RE.match(tok) and tok not in RESERVED:
            self.next()
            return Atom(tok)
        self.fail(f"expected a formula, found {tok or 'end of input'!r}")

    _BINARY: dict[str, Callable[[Formula, Formula], Formula]] = {
        "&": And,
        "|": Or,
        "->": Implies,
        "<->": Iff,
    }

    def binary(self, static: bool) -> Formula:
        self.expect("(")
        left = self.formula(static)
        op = self.peek()
        if op not in self._BINARY:
            self.fail(f"expected a binary connective, found {op or 'end of input'!r}")
        self.next()
        right = self.formula(static)
        self.expect(")")
        return self._BINARY[op](left, right)

    # arguments
    def argument(self) -> Argument:
        start = self.pos()
        self.expect("<")
        if self.peek() != "<":
            claim = self.formula(static=True)
            self.expect(">")
            return Atomic(claim)
        children = [self.argument()]
        while self.peek() == ",":
            self.next()
            children.append(self.argument())
        kind = self.peek()
        if kind not in ("->>", "=>"):
            self.fail(f"expected '->>' or '=>', found {kind or 'end of input'!r}")
        self.next()
        claim = self.formula(static=True)
        self.expect(">")
        try:
            cls = StrictStep if kind == "->>" else DefeasibleStep
            return cls(tuple(children), claim)
        except ArityError as err:  # pragma: no cover - grammar already requires a child
            raise ParseError(str(err), self.text, start) from err

    def rule(self) -> Rule:
        start = self.pos()
        self.expect("[")
        antecedents = []
        if self.peek() == "=>":
            raise ParseError("a rule needs at least one antecedent", self.text, start)
        antecedents.append(self.formula(static=True))
        while self.peek() == ",":
            self.next()
            antecedents.append(self.formula(static=True))
        self.expect("=>")
        conclusion = self.formula(static=True)
        self.expect("]")
        return Rule(tuple(antecedents), conclusion)

    def action(self) -> Action:
        tok = self.peek()
        if tok == "+arg":
            self.next()
            return Acquire(self.argument())
        if tok == "-arg":
            self.next()
            return Forget(self.argument())
        if tok == "+rule":
            self.next()
            return LearnRule(self.rule())
        if tok == "announce":
            self.next()
            return Announce(self.formula(static=True))
        self.fail(f"expected an action (+arg, -arg, +rule, announce), found {tok or 'end of input'!r}")


def _parse(text: str, method: str, *args):
    parser = _Parser(text)
    result = getattr(parser, method)(*args)
    parser.finish()
    return result


def parse_formula(text: str) -> Formula:
    """Parse a formula; dynamic modalities and ``B(A,F)`` are allowed at formula positions."""
    return _parse(text, "formula")


def parse_static_formula(text: str) -> Formula:
    return _parse(text, "formula", True)


def parse_argument(text: str) -> Argument:
    return _parse(text, "argument")


def parse_rule(text: str) -> Rule:
    return _parse(text, "rule")


def parse_action(text: str) -> Action:
    return _parse(text, "action")


# ------------------------------------------------------------------- printing


def render(node) -> str:
    if isinstance(node, Formula):
        return _formula(node)
    if isinstance(node, Argument):
        return _argument(node)
    if isinstance(node, Rule):
        return _rule(node)
    if isinstance(node, Action):
        return _action(node)
    raise TypeError(f"cannot render {type(node).__name__}")


def _implication(phi: Formula):
    """``(a, b)`` if ``phi`` is the core form of ``a -> b``."""
    if isinstance(phi, Not) and isinstance(phi.sub, And) and isinstance(phi.sub.right, Not):
        return phi.sub.left, phi.sub.right.sub
    return None


def _formula(phi: Formula) -> str:
    match phi:
        case Atom(name):
            return name
        case Bot():
            return "bot"
        case Not(Bot()):
            return "top"
        case Not(Box(Not(inner))):
            return "<>" + _formula(inner)
        case Not(Dynamic(action, Not(inner))):
            return f"<{_action(action)}>{_formula(inner)}"
        case Not(And(Not(a), Not(b))):
            return f"({_formula(a)} | {_formula(b)})"
        case Not(And(a, Not(b))):
            return f"({_formula(a)} -> {_formula(b)})"
        case Not(sub):
            return "!" + _formula(sub)
        case And(left, right):
            first, second = _implication(left), _implication(right)
            if first and second and first == (second[1], second[0]):
                return f"({_formula(first[0])} <-> {_formula(first[1])})"
            return f"({_formula(left)} & {_formula(right)})"
        case Box(sub):
            return "[]" + _formula(sub)
        case Aware(arg):
            return f"aware({_argument(arg)})"
        case ConcIs(arg, claim):
            return f"conc({_argument(arg)})={_formula(claim)}"
        case Strict(arg):
            return f"strict({_argument(arg)})"
        case Undercuts(attacker, target):
            return f"undercuts({_argument(attacker)},{_argument(target)})"
        case WellShaped(arg):
            return f"ws({_argument(arg)})"
        case Believes(arg, claim):
            return f"B({_argument(arg)},{_formula(claim)})"
        case Dynamic(action, body):
            return f"[{_action(action)}]{_formula(body)}"
    raise TypeError(f"not a formula: {type(phi).__name__}")


def _argument(arg: Argument) -> str:
    if isinstance(arg, Atomic):
        return f"<{_formula(arg.claim)}>"
    arrow = "->>" if isinstance(arg, StrictStep) else "=>"
    children = ",".join(_argument(child) for child in arg.children)
    return f"<{children} {arrow} {_formula(arg.claim)}>"


def _rule(rule: Rule) -> str:
    antecedents = ",".join(_formula(phi) for phi in rule.antecedents)
    return f"[{antecedents} => {_formula(rule.conclusion)}]"


def _action(action: Action) -> str:
    match action:
        case Acquire(arg):
            return f"+arg {_argument(arg)}"
        case Forget(arg):
            return f"-arg {_argument(arg)}"
        case LearnRule(rule):
            return f"+rule {_rule(rule)}"
        case Announce(phi):
            return f"announce {_formula(phi)}"
    raise TypeError(f"not an action: {type(action).__name__}")
