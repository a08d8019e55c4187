"""Classical propositional consequence over Boolean skeletons.

Every maximal non-Boolean subformula (``[]``, ``aware``, ``conc``, ``strict``,
``undercuts``, ``ws``, ``B``, dynamic modalities) is treated as an opaque
propositional letter; syntactically identical subformulas share a letter.
Entailment is decided by evaluating the skeletons over all valuations at once:
each letter is a bit column of a ``2**n``-bit integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .lang.syntax import BOT, And, Atom, Bot, Formula, Not

MAX_ATOMS = 24


class ResourceError(RuntimeError):
    """The skeleton has more letters than the exhaustive procedure accepts."""


@dataclass(frozen=True)
class BooleanSkeleton:
    """Formulas with opaque subformulas replaced by surrogate atoms ``_s0, _s1, ...``."""

    formulas: tuple[Formula, ...]
    surrogates: dict[str, Formula] = field(default_factory=dict)

    @property
    def letters(self) -> list[str]:
        seen: dict[str, None] = {}
        for phi in self.formulas:
            _letters(phi, seen)
        return list(seen)


def _letters(phi: Formula, seen: dict) -> None:
    match phi:
        case Atom(name):
            seen.setdefault(name)
        case Not(sub):
            _letters(sub, seen)
        case And(left, right):
            _letters(left, seen)
            _letters(right, seen)


def skeleton(formulas: Iterable[Formula]) -> BooleanSkeleton:
    table: dict[Formula, str] = {}

    def walk(phi: Formula) -> Formula:
        match phi:
            case Atom() | Bot():
                return phi
            case Not(sub):
                return Not(walk(sub))
            case And(left, right):
                return And(walk(left), walk(right))
        if phi not in table:
            table[phi] = f"_s{len(table)}"
        return Atom(table[phi])

    skel = tuple(walk(phi) for phi in formulas)
    return BooleanSkeleton(skel, {name: phi for phi, name in table.items()})


def _leaves(phi: Formula, acc: dict) -> None:
    match phi:
        case Bot():
            return
        case Not(sub):
            _leaves(sub, acc)
        case And(left, right):
            _leaves(left, acc)
            _leaves(right, acc)
        case _:
            # atoms and opaque subformulas alike
            acc.setdefault(phi, len(acc))


def _column(index: int, n: int) -> int:
    run = 1 << index
    pattern = ((1 << run) - 1) << run
    width = run << 1
    total = 1 << n
    while width < total:
        pattern |= pattern << width
        width <<= 1
    return pattern


def _table(phi: Formula, columns: dict, full: int) -> int:
    match phi:
        case Bot():
            return 0
        case Not(sub):
            return full ^ _table(sub, columns, full)
        case And(left, right):
            return _table(left, columns, full) & _table(right, columns, full)
    return columns[phi]


@lru_cache(maxsize=200_000)
def _entails(premises: frozenset[Formula], conclusion: Formula) -> bool:
    leaves: dict[Formula, int] = {}
    for phi in premises:
        _leaves(phi, leaves)
    _leaves(conclusion, leaves)
    n = len(leaves)
    if n > MAX_ATOMS:
        raise ResourceError(f"{n} propositional letters exceed the limit of {MAX_ATOMS}")
    full = (1 << (1 << n)) - 1
    columns = {leaf: _column(i, n) for leaf, i in leaves.items()}
    models = full
    for phi in premises:
        models &= _table(phi, columns, full)
        if not models:
            return True
    return models & ~_table(conclusion, columns, full) == 0


def entails(premises: Iterable[Formula], conclusion: Formula) -> bool:
    """Classical consequence between Boolean skeletons."""
    return _entails(frozenset(premises), conclusion)


def consistent(premises: Iterable[Formula]) -> bool:
    return not _entails(frozenset(premises), BOT)


def tautology(phi: Formula) -> bool:
    return _entails(frozenset(), phi)
