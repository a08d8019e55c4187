"""Standard models, their validation, well-shapedness, and the model file format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .lang.structure import subarguments
from .lang.syntax import Argument, Atomic, Rule, StrictStep
from .lang.text import ATOM_RE, RESERVED, ParseError, parse_argument, parse_rule, render
from .prop import consistent, entails


# ------------------------------------------------------------------ violations


class ModelError(ValueError):
    """One violated model constraint."""


class EmptyWorldSet(ModelError):
    def __init__(self):
        super().__init__("the set of worlds is empty")


class EmptyDoxasticSet(ModelError):
    def __init__(self):
        super().__init__("the doxastic set is empty")


class UnknownWorld(ModelError):
    def __init__(self, world, where: str):
        self.world = world
        super().__init__(f"unknown world {world!r} in {where}")


class InconsistentRule(ModelError):
    def __init__(self, rule: Rule):
        self.rule = rule
        super().__init__(f"accepted rule {render(rule)} is inconsistent")


class DeductiveRule(ModelError):
    def __init__(self, rule: Rule):
        self.rule = rule
        super().__init__(f"accepted rule {render(rule)} is deductively valid")


class InvalidModel(ModelError):
    def __init__(self, violations: list[ModelError]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class ModelFormatError(ValueError):
    """A model file could not be read; the message names the location."""


# ----------------------------------------------------------------------- model


@dataclass(frozen=True, eq=False)
class Model:
    """``(W, B, O, D, n, val)``; build through :func:`make_model` to get validation.

    ``worlds`` keeps its given order, which fixes the bit position of each world
    in truth-set masks. Valuation entries that are empty are dropped, since atoms
    absent from the valuation denote the empty set anyway.
    """

    worlds: tuple[str, ...]
    doxastic: frozenset[str]
    awareness: frozenset[Argument] = frozenset()
    rules: frozenset[Rule] = frozenset()
    names: Mapping[Rule, str] = field(default_factory=dict)
    valuation: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "worlds", tuple(dict.fromkeys(self.worlds)))
        set_(self, "doxastic", frozenset(self.doxastic))
        set_(self, "awareness", frozenset(self.awareness))
        set_(self, "rules", frozenset(self.rules))
        set_(self, "names", MappingProxyType(dict(self.names)))
        valuation = {atom: frozenset(ws) for atom, ws in self.valuation.items()}
        set_(self, "valuation", MappingProxyType({a: ws for a, ws in valuation.items() if ws}))

    def __eq__(self, other):
        if not isinstance(other, Model):
            return NotImplemented
        return (
            set(self.worlds) == set(other.worlds)
            and self.doxastic == other.doxastic
            and self.awareness == other.awareness
            and self.rules == other.rules
            and dict(self.names) == dict(other.names)
            and dict(self.valuation) == dict(other.valuation)
        )

    __hash__ = None  # type: ignore[assignment]

    def __reduce__(self):
        return (
            Model,
            (self.worlds, self.doxastic, self.awareness, self.rules, dict(self.names), dict(self.valuation)),
        )

    def replace(self, **changes) -> "Model":
        fields = dict(
            worlds=self.worlds,
            doxastic=self.doxastic,
            awareness=self.awareness,
            rules=self.rules,
            names=self.names,
            valuation=self.valuation,
        )
        fields.update(changes)
        return Model(**fields)

    # world masks -----------------------------------------------------------

    @cached_property
    def bit(self) -> dict[str, int]:
        return {w: 1 << i for i, w in enumerate(self.worlds)}

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.worlds)) - 1

    def mask(self, worlds: Iterable[str]) -> int:
        bit = self.bit
        m = 0
        for w in worlds:
            m |= bit.get(w, 0)
        return m

    def worlds_of(self, mask: int) -> frozenset[str]:
        return frozenset(w for w, b in self.bit.items() if mask & b)

    @cached_property
    def doxastic_mask(self) -> int:
        return self.mask(self.doxastic)

    def atom_mask(self, name: str) -> int:
        cache = self.__dict__.setdefault("_atom_masks", {})
        if name not in cache:
            cache[name] = self.mask(self.valuation.get(name, ()))
        return cache[name]

    def truth_set(self, name: str) -> frozenset[str]:
        return self.valuation.get(name, frozenset())

    # well-shapedness -------------------------------------------------------

    def well_shaped(self, arg: Argument) -> bool:
        memo = self.__dict__.setdefault("_ws", {})
        result = memo.get(arg)
        if result is None:
            result = self._well_shaped(arg)
            memo[arg] = result
        return result

    def _well_shaped(self, arg: Argument) -> bool:
        if isinstance(arg, Atomic):
            return True
        if not all(self.well_shaped(child) for child in arg.children):
            return False
        antecedents = tuple(child.claim for child in arg.children)
        if isinstance(arg, StrictStep):
            return entails(antecedents, arg.claim)
        return Rule(antecedents, arg.claim) in self.rules


def well_shaped(model: Model, arg: Argument) -> bool:
    return model.well_shaped(arg)


def rule_violation(rule: Rule) -> ModelError | None:
    """Why ``rule`` cannot be an accepted defeasible rule, or ``None`` if it can."""
    if not consistent(rule.antecedents + (rule.conclusion,)):
        return InconsistentRule(rule)
    if entails(rule.antecedents, rule.conclusion):
        return DeductiveRule(rule)
    return None


def check(model: Model) -> list[ModelError]:
    found: list[ModelError] = []
    worlds = set(model.worlds)
    if not worlds:
        found.append(EmptyWorldSet())
    if not model.doxastic:
        found.append(EmptyDoxasticSet())
    for w in sorted(model.doxastic - worlds, key=str):
        found.append(UnknownWorld(w, "the doxastic set"))
    for atom, ws in sorted(model.valuation.items()):
        for w in sorted(ws - worlds, key=str):
            found.append(UnknownWorld(w, f"the valuation of {atom}"))
    for rule in sorted(model.rules, key=render):
        problem = rule_violation(rule)
        if problem is not None:
            found.append(problem)
    return found


def validate(model: Model) -> Model:
    """Return ``model`` unchanged, or raise :class:`InvalidModel` listing every violation."""
    problems = check(model)
    if problems:
        raise InvalidModel(problems)
    return model


def make_model(worlds, doxastic, awareness=(), rules=(), names=None, valuation=None) -> Model:
    return validate(
        Model(
            worlds=tuple(worlds),
            doxastic=frozenset(doxastic),
            awareness=frozenset(awareness),
            rules=frozenset(rules),
            names=dict(names or {}),
            valuation={k: frozenset(v) for k, v in (valuation or {}).items()},
        )
    )


def unclosed_awareness(model: Model) -> list[Argument]:
    """Subarguments of aware arguments that are not themselves in the awareness set.

    Informational only: awareness is not required to be closed under subarguments.
    """
    missing = set()
    for arg in model.awareness:
        missing |= subarguments(arg) - model.awareness
    return sorted(missing, key=render)


# ----------------------------------------------------------------- file format

_FIELDS = ("worlds", "b", "o", "d", "names", "val")
_REQUIRED = ("worlds", "b")


def _no_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise ModelFormatError(f"duplicate key {key!r}")
        seen[key] = value
    return seen


def to_dict(model: Model) -> dict:
    order = {w: i for i, w in enumerate(model.worlds)}
    ordered = lambda ws: sorted(ws, key=order.__getitem__)  # noqa: E731
    return {
        "worlds": list(model.worlds),
        "b": ordered(model.doxastic),
        "o": sorted(render(a) for a in model.awareness),
        "d": sorted(render(r) for r in model.rules),
        "names": {render(r): atom for r, atom in sorted(model.names.items(), key=lambda kv: render(kv[0]))},
        "val": {atom: ordered(ws) for atom, ws in sorted(model.valuation.items())},
    }


def dumps(model: Model) -> str:
    return json.dumps(to_dict(model), indent=2, ensure_ascii=False) + "\n"


def save(model: Model, path) -> None:
    Path(path).write_text(dumps(model), encoding="utf-8")


def _world_list(value, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(w, str) for w in value):
        raise ModelFormatError(f"{where}: expected a list of world names")
    return value


def _atom(value, where: str) -> str:
    if not isinstance(value, str) or not ATOM_RE.match(value) or value in RESERVED:
        raise ModelFormatError(f"{where}: {value!r} is not an atom name")
    return value


def _payload(parser, text, where: str):
    if not isinstance(text, str):
        raise ModelFormatError(f"{where}: expected a string")
    try:
        return parser(text)
    except ParseError as err:
        raise ModelFormatError(f"{where}: {err}") from err


def from_dict(data, source: str = "<model>") -> Model:
    """Build and validate a model from the decoded file structure."""
    if not isinstance(data, dict):
        raise ModelFormatError(f"{source}: top level must be an object")
    for key in _REQUIRED:
        if key not in data:
            raise ModelFormatError(f"{source}: missing field {key!r}")
    unknown = set(data) - set(_FIELDS)
    if unknown:
        raise ModelFormatError(f"{source}: unknown field(s) {', '.join(sorted(unknown))}")
    worlds = _world_list(data["worlds"], f"{source}: worlds")
    doxastic = _world_list(data["b"], f"{source}: b")
    o_items = data.get("o", [])
    d_items = data.get("d", [])
    if not isinstance(o_items, list) or not isinstance(d_items, list):
        raise ModelFormatError(f"{source}: o and d must be lists")
    awareness = [_payload(parse_argument, t, f"{source}: o[{i}]") for i, t in enumerate(o_items)]
    rules = [_payload(parse_rule, t, f"{source}: d[{i}]") for i, t in enumerate(d_items)]
    names_raw = data.get("names", {})
    val_raw = data.get("val", {})
    if not isinstance(names_raw, dict) or not isinstance(val_raw, dict):
        raise ModelFormatError(f"{source}: names and val must be objects")
    names: dict[Rule, str] = {}
    for text, atom in names_raw.items():
        rule = _payload(parse_rule, text, f"{source}: names[{text!r}]")
        if rule in names:
            raise ModelFormatError(f"{source}: names: rule {render(rule)} named twice")
        names[rule] = _atom(atom, f"{source}: names[{text!r}]")
    valuation = {
        _atom(atom, f"{source}: val"): frozenset(_world_list(ws, f"{source}: val[{atom!r}]"))
        for atom, ws in val_raw.items()
    }
    return make_model(worlds, doxastic, awareness, rules, names, valuation)


def loads(text: str, source: str = "<model>") -> Model:
    try:
        data = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as err:
        raise ModelFormatError(f"{source}:{err.lineno}:{err.colno}: {err.msg}") from err
    except ModelFormatError as err:
        raise ModelFormatError(f"{source}: {err}") from err
    return from_dict(data, source)


def load(path) -> Model:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), str(path))
