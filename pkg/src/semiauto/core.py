"""Automata, words and the transformations they induce.

An :class:`Automaton` is stored with dense indices: ``table[a][i]`` is the
index of the state reached from state ``i`` on letter ``a``.  Storing the
table letter-major means every letter already *is* a transformation of the
state set, which is what nearly every algorithm in the package wants.

Words are tuples of letter identifiers.  Functions that accept a word also
accept a plain string: one letter per character when every letter is a
single character (``"010"``), whitespace-separated tokens otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

EPSILON = "ε"

# Limit used by the exhaustive tools (generators, brute-force oracles);
# library operations impose no limit on |S|.
MAX_EXHAUSTIVE_STATES = 12

#: When true, every Transformation built by the semigroup code is checked
#: by re-evaluating its witness word.  The test suite switches this on.
VERIFY_WITNESSES = False

Word = tuple[str, ...]
WordLike = Union[str, Sequence[str]]


class AutomatonError(ValueError):
    """Malformed automaton, or a state/letter that does not belong to it."""


@dataclass(frozen=True)
class Automaton:
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.states:
            raise AutomatonError("automaton needs at least one state")
        if not self.alphabet:
            raise AutomatonError("automaton needs at least one letter")
        _check_identifiers("state", self.states)
        _check_identifiers("letter", self.alphabet)
        n = len(self.states)
        if len(self.table) != len(self.alphabet):
            raise AutomatonError("table must have one row per letter")
        for letter, row in zip(self.alphabet, self.table):
            if len(row) != n:
                raise AutomatonError(f"letter {letter!r}: expected {n} targets, got {len(row)}")
            for target in row:
                if not (isinstance(target, int) and 0 <= target < n):
                    raise AutomatonError(f"letter {letter!r}: invalid target index {target!r}")

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_letters(self) -> int:
        return len(self.alphabet)

    @cached_property
    def state_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.states)}

    @cached_property
    def letter_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def state_id(self, state: str | int) -> int:
        """Index of ``state``, given either as a name or an index."""
        if isinstance(state, int):
            if 0 <= state < self.n_states:
                return state
            raise AutomatonError(f"state index {state} out of range")
        try:
            return self.state_index[state]
        except KeyError:
            raise AutomatonError(f"unknown state {state!r}") from None

    def letter_id(self, letter: str) -> int:
        try:
            return self.letter_index[letter]
        except KeyError:
            raise AutomatonError(f"unknown letter {letter!r}") from None

    def step(self, state: int, letter: int) -> int:
        return self.table[letter][state]

    def letter_transformation(self, letter: str | int) -> "Transformation":
        a = letter if isinstance(letter, int) else self.letter_id(letter)
        return Transformation(self.table[a], (self.alphabet[a],))

    def entries(self) -> Iterable[tuple[str, str, str]]:
        """Yield ``(state, letter, target)`` triples in state-major order."""
        for i, s in enumerate(self.states):
            for a, letter in enumerate(self.alphabet):
                yield s, letter, self.states[self.table[a][i]]

    def __repr__(self):
        return f"Automaton(states={list(self.states)}, alphabet={list(self.alphabet)})"


def _check_identifiers(kind: str, ids: Sequence[str]) -> None:
    seen = set()
    for x in ids:
        if not isinstance(x, str) or not x or any(c.isspace() for c in x):
            raise AutomatonError(f"{kind} identifier must be a non-empty string without whitespace: {x!r}")
        if x in seen:
            raise AutomatonError(f"duplicate {kind} identifier {x!r}")
        seen.add(x)


def make_automaton(
    states: Sequence[str],
    alphabet: Sequence[str],
    entries: Iterable[tuple[str, str, str]] | Mapping[str, Mapping[str, str]],
) -> Automaton:
    """Build an automaton from ``(state, letter, target)`` entries.

    ``entries`` may also be a nested mapping ``{state: {letter: target}}``.
    Every (state, letter) pair must appear exactly once.
    """
    states = tuple(states)
    alphabet = tuple(alphabet)
    if not states:
        raise AutomatonError("automaton needs at least one state")
    if not alphabet:
        raise AutomatonError("automaton needs at least one letter")
    _check_identifiers("state", states)
    _check_identifiers("letter", alphabet)
    if isinstance(entries, Mapping):
        entries = [(s, a, t) for s, row in entries.items() for a, t in row.items()]

    sidx = {s: i for i, s in enumerate(states)}
    lidx = {a: i for i, a in enumerate(alphabet)}
    table: list[list[int | None]] = [[None] * len(states) for _ in alphabet]
    for s, a, t in entries:
        for kind, x, idx in (("state", s, sidx), ("letter", a, lidx), ("state", t, sidx)):
            if x not in idx:
                raise AutomatonError(f"unknown {kind} {x!r} in entry ({s}, {a}, {t})")
        row = table[lidx[a]]
        if row[sidx[s]] is not None:
            raise AutomatonError(f"duplicate entry for ({s}, {a})")
        row[sidx[s]] = sidx[t]
    for a, row in enumerate(table):
        for i, t in enumerate(row):
            if t is None:
                raise AutomatonError(f"missing entry for ({states[i]}, {alphabet[a]})")
    return Automaton(states, alphabet, tuple(tuple(row) for row in table))


def from_table(table: Sequence[Sequence[int]], states=None, alphabet=None) -> Automaton:
    """Automaton from a letter-major index table, with default names."""
    k = len(table)
    n = len(table[0]) if k else 0
    states = tuple(states) if states is not None else tuple(f"q{i}" for i in range(n))
    alphabet = tuple(alphabet) if alphabet is not None else tuple(str(a) for a in range(k))
    return Automaton(states, alphabet, tuple(tuple(row) for row in table))


# -- words -----------------------------------------------------------------


def parse_word(aut: Automaton, word: WordLike) -> Word:
    if isinstance(word, str):
        if word == EPSILON:
            letters: Sequence[str] = ()
        elif all(len(a) == 1 for a in aut.alphabet) and not any(c.isspace() for c in word):
            letters = tuple(word)
        else:
            letters = word.split()
    else:
        letters = word
    letters = tuple(letters)
    for x in letters:
        if x not in aut.letter_index:
            raise AutomatonError(f"unknown letter {x!r}")
    return letters


def format_word(word: Sequence[str]) -> str:
    if not word:
        return EPSILON
    if all(len(x) == 1 for x in word):
        return "".join(word)
    return " ".join(word)


def apply(aut: Automaton, state: str | int, word: WordLike) -> str:
    """State reached from ``state`` after reading ``word`` left to right."""
    i = aut.state_id(state)
    for x in parse_word(aut, word):
        i = aut.table[aut.letter_index[x]][i]
    return aut.states[i]


# -- transformations -------------------------------------------------------


@dataclass(frozen=True)
class Transformation:
    """A self-map of the state set, ``mapping[i]`` being the image of state i.

    Equality and hashing look at the mapping only; ``witness`` is a word
    known to induce it.
    """

    mapping: tuple[int, ...]
    witness: Word = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.mapping)
        if any(not 0 <= x < n for x in self.mapping):
            raise AutomatonError(f"not a self-map of {n} states: {self.mapping}")

    def __len__(self):
        return len(self.mapping)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    @property
    def rank(self) -> int:
        return len(set(self.mapping))

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.mapping))

    @property
    def is_bijection(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def label(self) -> str:
        return format_word(self.witness)

    def then(self, other: "Transformation") -> "Transformation":
        """``self`` followed by ``other``."""
        m = self.mapping
        g = other.mapping
        return Transformation(tuple(g[x] for x in m), self.witness + other.witness)


def identity(n: int) -> Transformation:
    return Transformation(tuple(range(n)), ())


def transformation_of_word(aut: Automaton, word: WordLike) -> Transformation:
    w = parse_word(aut, word)
    mapping = list(range(aut.n_states))
    for x in w:
        row = aut.table[aut.letter_index[x]]
        mapping = [row[i] for i in mapping]
    return Transformation(tuple(mapping), w)


def compose(aut: Automaton, f: Transformation, g: Transformation) -> Transformation:
    """``f`` then ``g``: the transformation of ``witness(f) ++ witness(g)``."""
    if len(f) != aut.n_states or len(g) != aut.n_states:
        raise AutomatonError(
            f"transformations on {len(f)} and {len(g)} states do not fit an automaton with {aut.n_states}"
        )
    return f.then(g)


def image(aut: Automaton, f: Transformation) -> frozenset[str]:
    return frozenset(aut.states[i] for i in f.image)


def rank(f: Transformation) -> int:
    return f.rank


def check_witness(aut: Automaton, f: Transformation) -> None:
    """Raise if ``f.witness`` does not re-evaluate to ``f.mapping``."""
    if not f.witness and not f.is_identity:
        raise AutomatonError(f"empty witness on a non-identity map {f.mapping}")
    if transformation_of_word(aut, f.witness).mapping != f.mapping:
        raise AutomatonError(f"witness {f.label!r} does not induce {f.mapping}")
