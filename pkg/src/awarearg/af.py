"""Argumentation frameworks induced by models, and grounded semantics."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, NamedTuple, Optional

from .lang.syntax import Argument, Formula
from .lang.text import render
from .model import Model
from .prop import ResourceError
from .semantics import Rebuttal, accepts, defeats, sem_neg

BRUTE_FORCE_LIMIT = 16


@dataclass(frozen=True)
class ArgFramework:
    """Finite attack graph. Nodes are arguments for model frameworks, any hashable otherwise."""

    nodes: tuple
    attacks: frozenset[tuple] = frozenset()
    mode: Rebuttal = Rebuttal.UNRESTRICTED
    _attackers: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nodes = tuple(dict.fromkeys(self.nodes))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        attackers: dict = {n: set() for n in nodes}
        for a, b in self.attacks:
            if a not in attackers or b not in attackers:
                raise ValueError(f"attack ({a!r}, {b!r}) mentions a non-node")
            attackers[b].add(a)
        object.__setattr__(self, "_attackers", {n: frozenset(s) for n, s in attackers.items()})

    def attackers(self, node) -> frozenset:
        return self._attackers[node]


def build_af(model: Model, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> ArgFramework:
    """Nodes: aware, well-shaped, accepted arguments. Edges: defeat between nodes."""
    mode = Rebuttal(mode)
    nodes = sorted(
        (a for a in model.awareness if model.well_shaped(a) and accepts(model, a)),
        key=render,
    )
    attacks = {(a, b) for a in nodes for b in nodes if defeats(model, a, b, mode)}
    return ArgFramework(tuple(nodes), frozenset(attacks), mode)


def is_conflict_free(af: ArgFramework, members: Iterable[Hashable]) -> bool:
    members = set(members)
    return not any(a in members for b in members for a in af.attackers(b))


def defends(af: ArgFramework, members: Iterable[Hashable], node: Hashable) -> bool:
    members = set(members)
    return all(af.attackers(attacker) & members for attacker in af.attackers(node))


def characteristic(af: ArgFramework, members: Iterable[Hashable]) -> frozenset:
    members = frozenset(members)
    return frozenset(n for n in af.nodes if defends(af, members, n))


def grounded(af: ArgFramework) -> frozenset:
    """Least fixed point of the characteristic function, iterated from the empty set."""
    current: frozenset = frozenset()
    while True:
        following = characteristic(af, current)
        if following == current:
            return current
        current = following


def is_complete(af: ArgFramework, members: Iterable[Hashable]) -> bool:
    members = frozenset(members)
    return is_conflict_free(af, members) and characteristic(af, members) == members


def complete_extensions_bruteforce(af: ArgFramework) -> list[frozenset]:
    """Every complete extension, by enumerating all subsets of the nodes."""
    if len(af.nodes) > BRUTE_FORCE_LIMIT:
        raise ResourceError(f"{len(af.nodes)} nodes exceed the brute-force limit of {BRUTE_FORCE_LIMIT}")
    found = []
    for k in range(len(af.nodes) + 1):
        for subset in combinations(af.nodes, k):
            if is_complete(af, subset):
                found.append(frozenset(subset))
    return found


def grounded_extension(model: Model, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> frozenset[Argument]:
    """Grounded extension of the model's framework, memoised on the model."""
    mode = Rebuttal(mode)
    cache = model.__dict__.setdefault("_grounded", {})
    if mode not in cache:
        cache[mode] = grounded(build_af(model, mode))
    return cache[mode]


def arg_belief(model: Model, arg: Argument, phi: Formula, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> bool:
    return arg.claim == phi and arg in grounded_extension(model, mode)


class Witness(NamedTuple):
    alpha: Argument
    beta: Argument
    phi: Formula
    psi: Formula


def check_direct_consistency(model: Model, mode: Rebuttal | str = Rebuttal.UNRESTRICTED) -> Optional[Witness]:
    """A pair of grounded arguments with mutually negating conclusions, or ``None``."""
    believed = sorted(grounded_extension(model, mode), key=render)
    for i, alpha in enumerate(believed):
        for beta in believed[i:]:
            if sem_neg(alpha.claim, beta.claim):
                return Witness(alpha, beta, alpha.claim, beta.claim)
    return None


def to_edge_list(af: ArgFramework) -> str:
    """Node table (``index<TAB>argument``) followed by ``i -> j`` attack lines."""
    index = {node: i for i, node in enumerate(af.nodes)}
    lines = ["# nodes"]
    for node, i in index.items():
        lines.append(f"{i}\t{render(node) if isinstance(node, Argument) else node}")
    lines.append("# attacks")
    for a, b in sorted(af.attacks, key=lambda e: (index[e[0]], index[e[1]])):
        lines.append(f"{index[a]} -> {index[b]}")
    return "\n".join(lines) + "\n"
