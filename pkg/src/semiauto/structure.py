"""Classification of automata and the minimal ideal of S(A).

The quasi-ideal test combines three conditions: the automaton is strongly
connected, the minimal ideal I(A) is a right group, and the images of the
idempotents of I(A) partition the state set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import core
from .core import Automaton, AutomatonError, Transformation, Word
from .semigroup import TransitionSemigroup, semigroup


def _reachable(n: int, succ: list[list[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        s = stack.pop()
        for t in succ[s]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def is_strongly_connected(aut: Automaton) -> bool:
    n = aut.n_states
    forward: list[list[int]] = [[] for _ in range(n)]
    backward: list[list[int]] = [[] for _ in range(n)]
    for row in aut.table:
        for s, t in enumerate(row):
            forward[s].append(t)
            backward[t].append(s)
    return len(_reachable(n, forward, 0)) == n and len(_reachable(n, backward, 0)) == n


def is_permutation(aut: Automaton) -> bool:
    # products of bijections are bijections, so the letters decide it
    return all(len(set(row)) == len(row) for row in aut.table)


def find_reset_word(aut: Automaton, sg: TransitionSemigroup | None = None) -> Word | None:
    """Shortlex-least reset word, or None if the automaton is not synchronizing."""
    if sg is None:
        sg = semigroup(aut)
    for e in sg.elements:
        if e.rank == 1:
            return e.witness
    return None


def is_synchronizing(aut: Automaton, sg: TransitionSemigroup | None = None) -> bool:
    return find_reset_word(aut, sg) is not None


def _shortest_path_word(aut: Automaton, source: int, target: int) -> Word | None:
    parent: dict[int, tuple[int, int] | None] = {source: None}
    queue = deque([source])
    while queue:
        s = queue.popleft()
        if s == target:
            break
        for a, row in enumerate(aut.table):
            t = row[s]
            if t not in parent:
                parent[t] = (s, a)
                queue.append(t)
    if target not in parent:
        return None
    word = []
    node = target
    while parent[node] is not None:
        prev, a = parent[node]
        word.append(aut.alphabet[a])
        node = prev
    return tuple(reversed(word))


def reset_word_to(aut: Automaton, sg: TransitionSemigroup | None, target: str | int) -> Word:
    """A word sending every state to ``target``.

    Any reset word followed by a shortest path from its sink to the target.
    """
    t = aut.state_id(target)
    if not is_strongly_connected(aut):
        raise AutomatonError("automaton is not strongly connected")
    x = find_reset_word(aut, sg)
    if x is None:
        raise AutomatonError("automaton is not synchronizing")
    sink = core.transformation_of_word(aut, x).mapping[0]
    z = _shortest_path_word(aut, sink, t)
    assert z is not None
    return x + z


# -- minimal ideal ---------------------------------------------------------


@dataclass(frozen=True)
class MinimalIdeal:
    members: tuple[int, ...]
    min_rank: int
    idempotents: tuple[int, ...]
    right_simple: bool
    right_group: bool


def minimal_ideal(sg: TransitionSemigroup) -> MinimalIdeal:
    elements = sg.elements
    min_rank = min(e.rank for e in elements)
    members = tuple(i for i, e in enumerate(elements) if e.rank == min_rank)
    member_set = set(members)

    # S(A) is generated by the letters, so closure under letters on both
    # sides is closure under all of S(A).
    for i in members:
        for a in range(sg.automaton.n_letters):
            if sg.generator_map[i][a] not in member_set or sg.left_letter(a, i) not in member_set:
                raise AssertionError(f"minimal-rank elements are not a two-sided ideal (member {elements[i].label})")

    idempotents = tuple(i for i in members if sg.multiply(i, i) == i)
    right_simple = _right_simple(sg, members)
    return MinimalIdeal(members, min_rank, idempotents, right_simple, right_simple and bool(idempotents))


def _right_simple(sg: TransitionSemigroup, members: tuple[int, ...]) -> bool:
    target = set(members)
    for a in members:
        if {sg.multiply(a, x) for x in members} != target:
            return False
    return True


def is_right_simple(ideal: MinimalIdeal, sg: TransitionSemigroup) -> bool:
    return _right_simple(sg, ideal.members)


# -- condition (iii) -------------------------------------------------------


@dataclass(frozen=True)
class ImagePartition:
    """Outcome of checking that idempotent images partition the states.

    On success ``blocks`` holds the distinct images in first-seen order.
    On failure ``violation`` describes what went wrong: either two
    idempotents whose images overlap without being equal (with a state in
    the symmetric difference), or a state no image covers.
    """

    ok: bool
    blocks: tuple[frozenset[int], ...] = ()
    violation: dict | None = None


def idempotent_image_partition(aut: Automaton, ideal: MinimalIdeal, sg: TransitionSemigroup) -> ImagePartition:
    if not ideal.idempotents:
        return ImagePartition(False, violation={"kind": "no_idempotents"})
    blocks: list[frozenset[int]] = []
    owners: list[int] = []
    for e in ideal.idempotents:
        img = sg.elements[e].image
        for other, owner in zip(blocks, owners):
            if img != other and img & other:
                diff = sorted(img ^ other)[0]
                return ImagePartition(
                    False,
                    violation={
                        "kind": "overlap",
                        "idempotents": [sg.elements[owner].label, sg.elements[e].label],
                        "images": [sorted(aut.states[i] for i in other), sorted(aut.states[i] for i in img)],
                        "state": aut.states[diff],
                    },
                )
        if img not in blocks:
            blocks.append(img)
            owners.append(e)
    covered = frozenset().union(*blocks)
    if len(covered) != aut.n_states:
        missing = min(set(range(aut.n_states)) - covered)
        return ImagePartition(False, violation={"kind": "uncovered", "state": aut.states[missing]})
    return ImagePartition(True, tuple(blocks))


@dataclass(frozen=True)
class QuasiIdealReport:
    strongly_connected: bool
    ideal_right_group: bool
    images_partition: bool
    blocks: tuple[frozenset[int], ...]
    violations: tuple[dict, ...]
    # carried so that downstream stages can reuse the work
    semigroup: TransitionSemigroup = field(repr=False, compare=False)
    ideal: MinimalIdeal = field(repr=False, compare=False)

    @property
    def verdict(self) -> bool:
        return self.strongly_connected and self.ideal_right_group and self.images_partition

    @property
    def failure_stage(self) -> str | None:
        if not self.strongly_connected:
            return "strong_connectivity"
        if not self.ideal_right_group:
            return "right_group"
        if not self.images_partition:
            return "image_partition"
        return None


def quasi_ideal_report(aut: Automaton, sg: TransitionSemigroup | None = None) -> QuasiIdealReport:
    """Evaluate all three quasi-ideal conditions; nothing is short-circuited."""
    if sg is None:
        sg = semigroup(aut)
    sc = is_strongly_connected(aut)
    ideal = minimal_ideal(sg)
    part = idempotent_image_partition(aut, ideal, sg)
    violations = []
    if not sc:
        violations.append({"kind": "not_strongly_connected"})
    if not ideal.right_group:
        violations.append({"kind": "ideal_not_right_group"})
    if part.violation is not None:
        violations.append(part.violation)
    return QuasiIdealReport(sc, ideal.right_group, part.ok, part.blocks, tuple(violations), sg, ideal)


def ideal_transformations(sg: TransitionSemigroup, ideal: MinimalIdeal) -> list[Transformation]:
    return [sg.elements[i] for i in ideal.members]
