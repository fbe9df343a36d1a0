"""Transition semigroup S(A) and monoid M(A) of an automaton.

Elements are discovered breadth first: the letters in alphabet order, then
right multiplication of known elements (in discovery order) by letters.
Because a word's class is first reached through its shortest
representative, each element's witness is the shortlex-least nonempty word
inducing it, and element numbering is reproducible.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from functools import cached_property

from . import core
from .core import EPSILON, Automaton, AutomatonError, Transformation, WordLike

CAP_ENV = "SEMIAUTO_SEMIGROUP_CAP"
DEFAULT_CAP = 1_000_000


class SemigroupTooLarge(RuntimeError):
    def __init__(self, cap: int, count: int):
        super().__init__(f"transition semigroup exceeds the size cap of {cap} elements (found {count} so far)")
        self.cap = cap
        self.count = count


def default_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


@dataclass(frozen=True, eq=False)
class TransitionSemigroup:
    automaton: Automaton
    elements: tuple[Transformation, ...]
    # generator_map[i][a]: index of elements[i] followed by letter a
    generator_map: tuple[tuple[int, ...], ...]
    index: dict[tuple[int, ...], int] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity_index(self) -> int | None:
        """Element induced by a nonempty word that acts as the identity, if any."""
        return self.index.get(tuple(range(self.automaton.n_states)))

    @property
    def contains_identity_as_nonempty_word(self) -> bool:
        return self.identity_index is not None

    def find(self, mapping) -> int:
        return self.index[tuple(mapping)]

    def multiply(self, i: int, j: int) -> int:
        """Index of ``elements[i]`` followed by ``elements[j]``."""
        f = self.elements[i].mapping
        g = self.elements[j].mapping
        return self.index[tuple(g[x] for x in f)]

    def left_letter(self, a: int, i: int) -> int:
        """Index of letter ``a`` followed by ``elements[i]``."""
        row = self.automaton.table[a]
        g = self.elements[i].mapping
        return self.index[tuple(g[x] for x in row)]

    def labels(self) -> list[str]:
        return [e.label for e in self.elements]

    @cached_property
    def monoid(self) -> tuple[Transformation, ...]:
        """M(A): the identity (labelled by ε) followed by the non-identity elements.

        When a nonempty word already induces the identity, that element is
        aliased rather than duplicated.
        """
        ident = core.identity(self.automaton.n_states)
        rest = tuple(e for e in self.elements if not e.is_identity)
        return (ident,) + rest


def semigroup(aut: Automaton, cap: int | None = None) -> TransitionSemigroup:
    if cap is None:
        cap = default_cap()
    table = aut.table
    letters = aut.alphabet
    elements: list[Transformation] = []
    index: dict[tuple[int, ...], int] = {}
    for a, row in enumerate(table):
        if row not in index:
            index[row] = len(elements)
            elements.append(Transformation(row, (letters[a],)))
    if len(elements) > cap:
        raise SemigroupTooLarge(cap, len(elements))

    gen_map: list[tuple[int, ...]] = []
    i = 0
    while i < len(elements):
        f = elements[i]
        m = f.mapping
        succ = []
        for a, row in enumerate(table):
            key = tuple([row[x] for x in m])
            j = index.get(key)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise SemigroupTooLarge(cap, j + 1)
                index[key] = j
                elements.append(Transformation(key, f.witness + (letters[a],)))
            succ.append(j)
        gen_map.append(tuple(succ))
        i += 1

    if core.VERIFY_WITNESSES:
        for e in elements:
            core.check_witness(aut, e)
    return TransitionSemigroup(aut, tuple(elements), tuple(gen_map), index)


def class_of(sg: TransitionSemigroup, word: WordLike) -> int:
    """Index of the element induced by a nonempty word."""
    aut = sg.automaton
    w = core.parse_word(aut, word)
    if not w:
        raise AutomatonError("the empty word has no class in S(A); use the monoid view")
    i = sg.index[aut.table[aut.letter_index[w[0]]]]
    for x in w[1:]:
        i = sg.generator_map[i][aut.letter_index[x]]
    return i


def cayley_table(sg: TransitionSemigroup) -> list[list[int]]:
    """``table[i][j]`` is the index of ``elements[i] * elements[j]``."""
    n = len(sg.elements)
    return [[sg.multiply(i, j) for j in range(n)] for i in range(n)]


def monoid_cayley_table(sg: TransitionSemigroup) -> tuple[list[str], list[list[str]]]:
    """Labelled Cayley table of M(A), identity first and labelled ε."""
    elems = sg.monoid
    pos = {e.mapping: k for k, e in enumerate(elems)}
    labels = [EPSILON] + [e.label for e in elems[1:]]
    rows = []
    for f in elems:
        rows.append([labels[pos[f.then(g).mapping]] for g in elems])
    return labels, rows


def labelled_cayley(sg: TransitionSemigroup, monoid: bool = False) -> tuple[list[str], list[list[str]]]:
    if monoid:
        return monoid_cayley_table(sg)
    labels = sg.labels()
    return labels, [[labels[k] for k in row] for row in cayley_table(sg)]


def format_cayley_text(labels: list[str], rows: list[list[str]]) -> str:
    width = max(len(x) for x in labels)
    out = [" " * width + " |" + "".join(" " + x.rjust(width) for x in labels)]
    out.append("-" * (width + 1) + "+" + "-" * ((width + 1) * len(labels)))
    for label, row in zip(labels, rows):
        out.append(label.rjust(width) + " |" + "".join(" " + x.rjust(width) for x in row))
    return "\n".join(out) + "\n"


def format_cayley_csv(labels: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + labels)
    for label, row in zip(labels, rows):
        writer.writerow([label] + row)
    return buf.getvalue()
