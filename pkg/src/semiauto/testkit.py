"""Generators and brute-force oracles for testing.

Everything here is deliberately naive: the oracles evaluate definitions
directly and share no code paths with the algorithms they check beyond the
Automaton container itself.

PRNG contract: ``gen_random`` draws from ``random.Random(seed)`` (Mersenne
Twister, integer seeding) using ``randrange`` for table entries and
``shuffle`` for permutation letters, filling the table letter by letter,
state by state.  The same (seed, config) yields the same automaton on every
platform for a given CPython version series.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import MAX_EXHAUSTIVE_STATES, Automaton

EXHAUSTIVE_CAP = 10**7
MAX_ATTEMPTS = 10_000
FILTERS = ("strongly_connected", "permutation", "synchronizing")


class GeneratorError(RuntimeError):
    pass


def _automaton(n: int, k: int, table) -> Automaton:
    return Automaton(
        tuple(f"q{i}" for i in range(n)),
        tuple(str(a) for a in range(k)),
        tuple(tuple(row) for row in table),
    )


# -- brute-force predicates ------------------------------------------------
#
# Kept independent of the structure module on purpose.


def bf_strongly_connected(aut: Automaton) -> bool:
    n = aut.n_states
    # Floyd–Warshall style transitive closure
    reach = [[i == j for j in range(n)] for i in range(n)]
    for row in aut.table:
        for s, t in enumerate(row):
            reach[s][t] = True
    for m in range(n):
        for i in range(n):
            if reach[i][m]:
                for j in range(n):
                    if reach[m][j]:
                        reach[i][j] = True
    return all(all(r) for r in reach)


def bf_permutation(aut: Automaton) -> bool:
    return all(sorted(row) == list(range(aut.n_states)) for row in aut.table)


def bf_synchronizing(aut: Automaton) -> bool:
    # pair-collapsing criterion: every pair of states can be merged
    n = aut.n_states
    merged = set()
    pairs = {(i, j) for i in range(n) for j in range(i + 1, n)}
    changed = True
    while changed:
        changed = False
        for i, j in list(pairs - merged):
            for row in aut.table:
                a, b = row[i], row[j]
                if a == b or (min(a, b), max(a, b)) in merged:
                    merged.add((i, j))
                    changed = True
                    break
    return merged == pairs


_PREDICATES = {
    "strongly_connected": bf_strongly_connected,
    "permutation": bf_permutation,
    "synchronizing": bf_synchronizing,
}


# -- generators ------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    k: int
    seed: int | None = 0
    exhaustive: bool = False
    filters: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise GeneratorError("need at least one state and one letter")
        for f in self.filters:
            if f not in FILTERS:
                raise GeneratorError(f"unknown filter {f!r}; choose from {FILTERS}")
        if self.exhaustive and self.n ** (self.n * self.k) > EXHAUSTIVE_CAP:
            raise GeneratorError(f"{self.n}^({self.n}*{self.k}) automata exceed the cap of {EXHAUSTIVE_CAP}")

    def accepts(self, aut: Automaton) -> bool:
        return all(_PREDICATES[f](aut) for f in self.filters)


def gen_random(cfg: GeneratorConfig, rng: random.Random | None = None) -> Automaton:
    """A random automaton satisfying the config's filters.

    Tables are uniform; with the ``permutation`` filter each letter is a
    uniform random permutation instead (the uniform distribution on
    permutation automata).  Rejection sampling handles the other filters.
    """
    if rng is None:
        rng = random.Random(cfg.seed)
    n, k = cfg.n, cfg.k
    for _ in range(MAX_ATTEMPTS):
        if "permutation" in cfg.filters:
            table = []
            for _a in range(k):
                row = list(range(n))
                rng.shuffle(row)
                table.append(row)
        else:
            table = [[rng.randrange(n) for _s in range(n)] for _a in range(k)]
        aut = _automaton(n, k, table)
        if cfg.accepts(aut):
            return aut
    raise GeneratorError(f"no automaton satisfying {cfg.filters} found in {MAX_ATTEMPTS} attempts")


def gen_exhaustive(n: int, k: int) -> Iterator[Automaton]:
    """Every automaton with states q0..q{n-1} and letters 0..k-1.

    Order is lexicographic in the state-major table (row per state,
    column per letter).
    """
    if n > MAX_EXHAUSTIVE_STATES or n ** (n * k) > EXHAUSTIVE_CAP:
        raise GeneratorError(f"{n}^({n}*{k}) automata exceed the cap of {EXHAUSTIVE_CAP}")
    for flat in itertools.product(range(n), repeat=n * k):
        table = [[flat[s * k + a] for s in range(n)] for a in range(k)]
        yield _automaton(n, k, table)


def gen_permutation_automata(n: int, k: int) -> Iterator[Automaton]:
    """Every permutation automaton on n states and k letters."""
    perms = list(itertools.permutations(range(n)))
    for rows in itertools.product(perms, repeat=k):
        yield _automaton(n, k, rows)


# -- oracles ---------------------------------------------------------------


def _word_map(aut: Automaton, word) -> tuple[int, ...]:
    out = []
    for s in range(aut.n_states):
        for a in word:
            s = aut.table[a][s]
        out.append(s)
    return tuple(out)


def oracle_semigroup(aut: Automaton, max_len: int, literal: bool | None = None) -> set[tuple[int, ...]]:
    """Mappings induced by the nonempty words of length <= ``max_len``.

    ``literal=True`` evaluates every word separately (|Σ|^max_len of them).
    Otherwise the words of each length are grouped by the mapping they
    induce, level by level: the set of maps of length L+1 is exactly
    {f then a : f of length L, a a letter}.  This visits every length up
    to ``max_len`` with no early stop.  ``None`` picks literal evaluation
    when it means at most 2^16 words.
    """
    k = aut.n_letters
    if literal is None:
        literal = sum(k**L for L in range(1, max_len + 1)) <= 1 << 16
    if literal:
        found = set()
        for L in range(1, max_len + 1):
            for word in itertools.product(range(k), repeat=L):
                found.add(_word_map(aut, word))
        return found
    level = {tuple(row) for row in aut.table}
    found = set(level)
    for _ in range(max_len - 1):
        level = {tuple(row[x] for x in f) for f in level for row in aut.table}
        found |= level
    return found


def bf_product(a: Automaton, b: Automaton) -> Automaton:
    m = b.n_states
    return Automaton(
        tuple(f"({s},{t})" for s in a.states for t in b.states),
        a.alphabet,
        tuple(
            tuple(ra[i] * m + rb[j] for i in range(a.n_states) for j in range(m)) for ra, rb in zip(a.table, b.table)
        ),
    )


def canonical_form(aut: Automaton) -> tuple:
    """Isomorphism invariant for strongly connected automata.

    For each start state, relabel states in BFS order of first discovery
    (letters in order) and read off the table; the least such table is the
    canonical form.  Two strongly connected automata over the same alphabet
    are isomorphic iff their canonical forms coincide.
    """
    n, k = aut.n_states, aut.n_letters
    best = None
    for start in range(n):
        order = {start: 0}
        queue = [start]
        i = 0
        while i < len(queue):
            s = queue[i]
            i += 1
            for a in range(k):
                t = aut.table[a][s]
                if t not in order:
                    order[t] = len(order)
                    queue.append(t)
        if len(order) < n:
            raise ValueError("canonical_form needs a strongly connected automaton")
        form = tuple(order[aut.table[a][s]] for s in queue for a in range(k))
        if best is None or form < best:
            best = form
    return (n, k, best)


def all_homomorphisms(a: Automaton, b: Automaton) -> Iterator[tuple[int, ...]]:
    """Every state map a -> b commuting with all letters (|T|^|S| candidates)."""
    for cand in itertools.product(range(b.n_states), repeat=a.n_states):
        if all(cand[ra[s]] == rb[cand[s]] for ra, rb in zip(a.table, b.table) for s in range(a.n_states)):
            yield cand


def all_isomorphisms(a: Automaton, b: Automaton) -> Iterator[tuple[int, ...]]:
    if a.n_states != b.n_states:
        return
    for cand in itertools.permutations(range(b.n_states)):
        if all(cand[ra[s]] == rb[cand[s]] for ra, rb in zip(a.table, b.table) for s in range(a.n_states)):
            yield cand


def _divisor_pairs(n: int):
    return [(p, n // p) for p in range(1, n + 1) if n % p == 0]


@lru_cache(maxsize=None)
def _factor_products(n: int, k: int) -> frozenset:
    """Canonical forms of every P × R with |P|·|R| = n, P permutation SC, R synchronizing SC."""
    forms = set()
    for p, r in _divisor_pairs(n):
        perms = [x for x in gen_permutation_automata(p, k) if bf_strongly_connected(x)]
        syncs = [x for x in gen_exhaustive(r, k) if bf_strongly_connected(x) and bf_synchronizing(x)]
        for x in perms:
            for y in syncs:
                forms.add(canonical_form(bf_product(x, y)))
    return frozenset(forms)


def oracle_factorization(aut: Automaton, method: str = "auto") -> bool:
    """Is ``aut`` isomorphic to (permutation SC) × (synchronizing SC)?

    ``method="enumerate"`` builds every candidate product over aut's
    alphabet (factors enumerated exhaustively per divisor pair of |S|) and
    compares isomorphism classes.  ``method="partitions"`` instead searches
    all pairs of state partitions for two congruences whose quotients have
    the required kinds and whose joint map s -> (block, block) is a
    bijection; any factorization arises this way from the kernels of the
    two projections.  ``"auto"`` enumerates up to 4 states.
    """
    n, k = aut.n_states, aut.n_letters
    if n > 8:
        raise GeneratorError("factorization oracle is limited to 8 states")
    if method == "auto":
        method = "enumerate" if n <= 4 else "partitions"
    if method == "enumerate":
        # canonical_form raises on a product that is not strongly connected,
        # so the candidate set itself is checked; an automaton that is not
        # strongly connected is isomorphic to none of them
        if not bf_strongly_connected(aut):
            return False
        relabeled = Automaton(aut.states, tuple(str(a) for a in range(k)), aut.table)
        return canonical_form(relabeled) in _factor_products(n, k)
    if method == "partitions":
        return _partition_factorization(aut)
    raise ValueError(method)


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings: labels[i] <= 1 + max(labels[:i])."""

    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            prefix.append(v)
            yield from rec(prefix, max(top, v))
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from rec([0], 0)


def _quotient_table(aut: Automaton, labels: tuple[int, ...]):
    """Quotient table for a partition given as labels, or None if not a congruence."""
    m = max(labels) + 1
    table = []
    for row in aut.table:
        qrow = [None] * m
        for s in range(aut.n_states):
            b, t = labels[s], labels[row[s]]
            if qrow[b] is None:
                qrow[b] = t
            elif qrow[b] != t:
                return None
        table.append(qrow)
    return table


def _partition_factorization(aut: Automaton) -> bool:
    n, k = aut.n_states, aut.n_letters
    perm_side = []
    sync_side = []
    for labels in set_partitions(n):
        qt = _quotient_table(aut, labels)
        if qt is None:
            continue
        q = _automaton(max(labels) + 1, k, qt)
        if not bf_strongly_connected(q):
            continue
        if bf_permutation(q):
            perm_side.append(labels)
        if bf_synchronizing(q):
            sync_side.append(labels)
    for p in perm_side:
        mp = max(p) + 1
        for r in sync_side:
            if mp * (max(r) + 1) != n:
                continue
            if len({(p[s], r[s]) for s in range(n)}) == n:
                return True
    return False


def shuffle_states(aut: Automaton, rng: random.Random) -> Automaton:
    """An isomorphic copy with state indices permuted at random (names kept per state)."""
    n = aut.n_states
    perm = list(range(n))
    rng.shuffle(perm)  # old index i becomes new index perm[i]
    states = [None] * n
    for i, p in enumerate(perm):
        states[p] = aut.states[i]
    table = []
    for row in aut.table:
        new = [0] * n
        for i in range(n):
            new[perm[i]] = perm[row[i]]
        table.append(tuple(new))
    return Automaton(tuple(states), aut.alphabet, tuple(table))
