"""Direct products, homomorphisms and isomorphisms of automata."""

from __future__ import annotations

from dataclasses import dataclass

from .congruence import Partition, is_congruence, meet, quotient
from .core import Automaton, AutomatonError
from .structure import is_strongly_connected

MAX_BACKTRACK_STATES = 10


def _check_alphabets(a: Automaton, b: Automaton) -> None:
    if a.alphabet != b.alphabet:
        raise AutomatonError(f"alphabets differ: {list(a.alphabet)} vs {list(b.alphabet)}")


def pair_name(s: str, t: str) -> str:
    return f"({s},{t})"


def direct_product(a: Automaton, b: Automaton) -> Automaton:
    """Componentwise product; state (i, j) has index ``i * |B| + j``."""
    _check_alphabets(a, b)
    m = b.n_states
    states = tuple(pair_name(s, t) for s in a.states for t in b.states)
    table = tuple(
        tuple(ra[i] * m + rb[j] for i in range(a.n_states) for j in range(m))
        for ra, rb in zip(a.table, b.table)
    )
    return Automaton(states, a.alphabet, table)


@dataclass(frozen=True)
class StateMap:
    domain: Automaton
    codomain: Automaton
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.domain.n_states:
            raise AutomatonError("state map must be total on the domain")
        if any(not 0 <= t < self.codomain.n_states for t in self.mapping):
            raise AutomatonError("state map has targets outside the codomain")

    def __call__(self, state: str) -> str:
        return self.codomain.states[self.mapping[self.domain.state_id(state)]]

    @property
    def is_bijective(self) -> bool:
        return self.domain.n_states == self.codomain.n_states and len(set(self.mapping)) == len(self.mapping)

    def pairs(self) -> list[tuple[str, str]]:
        return [(self.domain.states[i], self.codomain.states[t]) for i, t in enumerate(self.mapping)]

    def to_json(self) -> list[list[str]]:
        return [list(p) for p in self.pairs()]

    def inverse(self) -> "StateMap":
        if not self.is_bijective:
            raise AutomatonError("only a bijection has an inverse")
        inv = [0] * len(self.mapping)
        for i, t in enumerate(self.mapping):
            inv[t] = i
        return StateMap(self.codomain, self.domain, tuple(inv))


def is_homomorphism(a: Automaton, b: Automaton, mapping) -> bool:
    """True iff ``mapping(s·x) = mapping(s)·x`` for all states and letters."""
    _check_alphabets(a, b)
    if isinstance(mapping, StateMap):
        mapping = mapping.mapping
    if len(mapping) != a.n_states:
        raise AutomatonError("state map must be total on the domain")
    return all(
        mapping[ra[s]] == rb[mapping[s]] for ra, rb in zip(a.table, b.table) for s in range(a.n_states)
    )


def _propagate(a: Automaton, b: Automaton, start: int, image: int) -> list[int] | None:
    """Extend ``start -> image`` along transitions; None on conflict."""
    alpha: list[int | None] = [None] * a.n_states
    alpha[start] = image
    stack = [start]
    while stack:
        s = stack.pop()
        for ra, rb in zip(a.table, b.table):
            s2, t2 = ra[s], rb[alpha[s]]
            if alpha[s2] is None:
                alpha[s2] = t2
                stack.append(s2)
            elif alpha[s2] != t2:
                return None
    if any(x is None for x in alpha):
        return None
    return alpha  # type: ignore[return-value]


def find_isomorphism(a: Automaton, b: Automaton) -> StateMap | None:
    _check_alphabets(a, b)
    if a.n_states != b.n_states:
        return None
    if is_strongly_connected(a):
        if not is_strongly_connected(b):
            return None
        for t0 in range(b.n_states):
            alpha = _propagate(a, b, 0, t0)
            if alpha is not None and len(set(alpha)) == a.n_states and is_homomorphism(a, b, alpha):
                return StateMap(a, b, tuple(alpha))
        return None
    if a.n_states > MAX_BACKTRACK_STATES:
        raise AutomatonError(
            f"isomorphism search for automata that are not strongly connected is limited to {MAX_BACKTRACK_STATES} states"
        )
    alpha = _backtrack(a, b)
    return None if alpha is None else StateMap(a, b, tuple(alpha))


def _profile(aut: Automaton, s: int) -> tuple:
    # isomorphism invariants of a state: self-loops per letter and in-degree per letter
    loops = tuple(row[s] == s for row in aut.table)
    indeg = tuple(sum(1 for t in row if t == s) for row in aut.table)
    return loops, indeg


def _backtrack(a: Automaton, b: Automaton) -> list[int] | None:
    n = a.n_states
    pa = [_profile(a, s) for s in range(n)]
    pb = [_profile(b, t) for t in range(n)]
    if sorted(pa) != sorted(pb):
        return None
    alpha: list[int | None] = [None] * n
    used = [False] * n

    def consistent(s: int) -> bool:
        # every transition whose endpoints are both assigned must commute
        t = alpha[s]
        for ra, rb in zip(a.table, b.table):
            s2 = ra[s]
            if alpha[s2] is not None and alpha[s2] != rb[t]:
                return False
        for ra, rb in zip(a.table, b.table):
            for u in range(n):
                if ra[u] == s and alpha[u] is not None and rb[alpha[u]] != t:
                    return False
        return True

    def extend(s: int) -> bool:
        if s == n:
            return True
        for t in range(n):
            if used[t] or pa[s] != pb[t]:
                continue
            alpha[s] = t
            used[t] = True
            if consistent(s) and extend(s + 1):
                return True
            alpha[s] = None
            used[t] = False
        return False

    return list(alpha) if extend(0) else None  # type: ignore[arg-type]


# -- congruence pairs ------------------------------------------------------


@dataclass(frozen=True)
class FactorPairEvidence:
    """Whether ``pi ∩ rho`` is the identity relation and ``pi ∘ rho`` is everything."""

    meet_trivial: bool
    composition_full: bool
    meet_counterexample: tuple[int, int] | None = None
    composition_counterexample: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.meet_trivial and self.composition_full


def factor_pair_check(aut: Automaton, pi: Partition, rho: Partition) -> FactorPairEvidence:
    n = aut.n_states
    m = meet(pi, rho)
    meet_cx = None
    for block in m.blocks:
        if len(block) > 1:
            meet_cx = (block[0], block[1])
            break

    comp_cx = None
    for s in range(n):
        # rho-blocks reachable from s through its pi-block
        reach = {rho.block_of[u] for u in pi.blocks[pi.block_of[s]]}
        for t in range(n):
            if rho.block_of[t] not in reach:
                comp_cx = (s, t)
                break
        if comp_cx:
            break
    return FactorPairEvidence(meet_cx is None, comp_cx is None, meet_cx, comp_cx)


@dataclass(frozen=True)
class FactorPairIso:
    quotient_pi: Automaton
    quotient_rho: Automaton
    product: Automaton
    iso: StateMap


def factor_pair_iso(aut: Automaton, pi: Partition, rho: Partition) -> FactorPairIso:
    """The isomorphism ``s -> ([s]_pi, [s]_rho)`` onto ``aut/pi × aut/rho``."""
    for name, p in (("pi", pi), ("rho", rho)):
        if not is_congruence(aut, p):
            raise AutomatonError(f"{name} is not a congruence")
    ev = factor_pair_check(aut, pi, rho)
    if not ev.meet_trivial:
        raise AutomatonError(f"pi ∩ rho is not the identity relation: states {ev.meet_counterexample}")
    if not ev.composition_full:
        raise AutomatonError(f"pi ∘ rho misses the pair {ev.composition_counterexample}")
    qp = quotient(aut, pi)
    qr = quotient(aut, rho)
    prod = direct_product(qp, qr)
    m = qr.n_states
    mapping = tuple(pi.block_of[s] * m + rho.block_of[s] for s in range(aut.n_states))
    iso = StateMap(aut, prod, mapping)
    if not (iso.is_bijective and is_homomorphism(aut, prod, mapping)):
        raise AssertionError("congruence-pair map is not an isomorphism")
    return FactorPairIso(qp, qr, prod, iso)
