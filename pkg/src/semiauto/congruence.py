"""State partitions, automaton congruences and quotient automata."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import Automaton, AutomatonError
from .semigroup import TransitionSemigroup
from .structure import MinimalIdeal, idempotent_image_partition, is_strongly_connected


class CongruenceError(AutomatonError):
    pass


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks of state indices covering ``range(n)``."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise CongruenceError("empty block")
            for s in block:
                if not 0 <= s < self.n:
                    raise CongruenceError(f"state index {s} out of range")
                if s in seen:
                    raise CongruenceError(f"state index {s} in two blocks")
                seen.add(s)
        if len(seen) != self.n:
            raise CongruenceError(f"blocks cover {len(seen)} of {self.n} states")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(n, tuple(tuple(sorted(b)) for b in blocks))

    @classmethod
    def from_names(cls, aut: Automaton, blocks: Iterable[Iterable[str]]) -> "Partition":
        return cls.from_blocks(aut.n_states, ([aut.state_id(s) for s in b] for b in blocks))

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        """Group states by label, blocks ordered by first occurrence."""
        groups: dict = {}
        for s, key in enumerate(labels):
            groups.setdefault(key, []).append(s)
        return cls(len(labels), tuple(tuple(b) for b in groups.values()))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, tuple((s,) for s in range(n)))

    @classmethod
    def full(cls, n: int) -> "Partition":
        return cls(n, (tuple(range(n)),))

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for k, block in enumerate(self.blocks):
            for s in block:
                out[s] = k
        return tuple(out)

    def __len__(self):
        return len(self.blocks)

    def same(self, s: int, t: int) -> bool:
        return self.block_of[s] == self.block_of[t]

    @property
    def is_discrete(self) -> bool:
        return len(self.blocks) == self.n

    def canonical(self) -> frozenset[frozenset[int]]:
        """Order-free form, for comparing partitions."""
        return frozenset(frozenset(b) for b in self.blocks)

    def named_blocks(self, aut: Automaton) -> list[list[str]]:
        return [[aut.states[s] for s in b] for b in self.blocks]

    def to_json(self, aut: Automaton) -> list[list[str]]:
        return sorted(sorted(names, key=_shortlex) for names in self.named_blocks(aut))

    def format(self, aut: Automaton) -> str:
        return " ".join("{" + ",".join(b) + "}" for b in self.to_json(aut))


def _shortlex(name: str):
    return (len(name), name)


def meet(p: Partition, q: Partition) -> Partition:
    return Partition.from_labels([(p.block_of[s], q.block_of[s]) for s in range(p.n)])


def pi_congruence(aut: Automaton, sg: TransitionSemigroup, ideal: MinimalIdeal) -> Partition:
    """States identified when every minimal-ideal element sends them to the same state."""
    if not is_strongly_connected(aut):
        raise CongruenceError("automaton is not strongly connected")
    if not ideal.right_group:
        raise CongruenceError("minimal ideal is not a right group")
    maps = [sg.elements[i].mapping for i in ideal.members]
    return Partition.from_labels([tuple(m[s] for m in maps) for s in range(aut.n_states)])


def rho_congruence(aut: Automaton, ideal: MinimalIdeal, sg: TransitionSemigroup) -> Partition:
    """Blocks are the distinct images of the idempotents of the minimal ideal."""
    part = idempotent_image_partition(aut, ideal, sg)
    if not part.ok:
        raise CongruenceError(f"idempotent images do not partition the states: {part.violation}")
    return Partition(aut.n_states, tuple(tuple(sorted(b)) for b in part.blocks))


def is_congruence(aut: Automaton, partition: Partition) -> bool:
    # Letters suffice: if every letter maps each block into one block, then
    # by induction on length so does every word.
    if partition.n != aut.n_states:
        raise CongruenceError(f"partition of {partition.n} states used with an automaton of {aut.n_states}")
    block_of = partition.block_of
    for row in aut.table:
        for block in partition.blocks:
            if len({block_of[row[s]] for s in block}) != 1:
                return False
    return True


def block_name(aut: Automaton, block: Iterable[int]) -> str:
    return "[" + min((aut.states[s] for s in block), key=_shortlex) + "]"


def quotient(aut: Automaton, congruence: Partition) -> Automaton:
    """The quotient automaton; block k becomes state k, named ``[least member]``."""
    if not is_congruence(aut, congruence):
        raise CongruenceError("partition is not a congruence")
    block_of = congruence.block_of
    names = tuple(block_name(aut, b) for b in congruence.blocks)
    table = tuple(tuple(block_of[row[b[0]]] for b in congruence.blocks) for row in aut.table)
    return Automaton(names, aut.alphabet, table)


def canonical_projection(aut: Automaton, congruence: Partition) -> tuple[int, ...]:
    """State map from ``aut`` onto ``quotient(aut, congruence)``."""
    return congruence.block_of
