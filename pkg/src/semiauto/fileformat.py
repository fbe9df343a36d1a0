"""Plain-text automaton files and Graphviz export.

The format is line based::

    # comment
    states s1 s2 s3
    alphabet 0 1
    delta s1 0 s1
    delta s1 1 s2
    ...

``states`` and ``alphabet`` come first, then one ``delta`` line per
(state, letter) pair in any order.  Identifiers containing characters
outside ``[A-Za-z0-9_@%+=:,./-]`` are written shell-quoted, so product
states such as ``(s1,t1)`` survive a round trip.
"""

from __future__ import annotations

import shlex

from .core import Automaton, AutomatonError, make_automaton


class AutomatonFormatError(AutomatonError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_automaton(text: str) -> Automaton:
    states = alphabet = None
    entries: dict[tuple[str, str], tuple[str, int]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        try:
            tokens = shlex.split(line, comments=True)
        except ValueError as exc:
            raise AutomatonFormatError(lineno, str(exc)) from None
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]
        if keyword in ("states", "alphabet"):
            if not args:
                raise AutomatonFormatError(lineno, f"'{keyword}' needs at least one identifier")
            if entries:
                raise AutomatonFormatError(lineno, f"'{keyword}' must come before any delta line")
            if keyword == "states":
                if states is not None:
                    raise AutomatonFormatError(lineno, "states declared twice")
                states = args
            else:
                if alphabet is not None:
                    raise AutomatonFormatError(lineno, "alphabet declared twice")
                alphabet = args
        elif keyword == "delta":
            if states is None or alphabet is None:
                raise AutomatonFormatError(lineno, "delta before states and alphabet are declared")
            if len(args) != 3:
                raise AutomatonFormatError(lineno, "expected 'delta <state> <letter> <state>'")
            s, a, t = args
            if (s, a) in entries:
                prev, prev_line = entries[(s, a)]
                what = "duplicate" if prev == t else "conflicting"
                raise AutomatonFormatError(lineno, f"{what} entry for ({s}, {a}); first given on line {prev_line}")
            entries[(s, a)] = (t, lineno)
        else:
            raise AutomatonFormatError(lineno, f"unknown keyword {keyword!r}")
    if states is None:
        raise AutomatonFormatError(0, "missing 'states' line")
    if alphabet is None:
        raise AutomatonFormatError(0, "missing 'alphabet' line")
    return make_automaton(states, alphabet, [(s, a, t) for (s, a), (t, _) in entries.items()])


def serialize_automaton(aut: Automaton) -> str:
    q = shlex.quote
    lines = [
        "states " + " ".join(q(s) for s in aut.states),
        "alphabet " + " ".join(q(a) for a in aut.alphabet),
    ]
    for s, a, t in aut.entries():
        lines.append(f"delta {q(s)} {q(a)} {q(t)}")
    return "\n".join(lines) + "\n"


def read_automaton(path) -> Automaton:
    with open(path, encoding="utf-8") as f:
        return parse_automaton(f.read())


def write_automaton(aut: Automaton, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_automaton(aut))


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(aut: Automaton, name: str = "automaton") -> str:
    """Graphviz digraph with one node per state and letter-labelled edges.

    Transitions between the same pair of states are merged into one edge
    whose label lists the letters, comma separated, in alphabet order.
    """
    out = [f"digraph {_dot_id(name)} {{", "  rankdir=LR;"]
    for s in aut.states:
        out.append(f"  {_dot_id(s)} [shape=circle];")
    for i, s in enumerate(aut.states):
        edges: dict[int, list[str]] = {}
        for a, row in enumerate(aut.table):
            edges.setdefault(row[i], []).append(aut.alphabet[a])
        for t, letters in edges.items():
            label = ",".join(letters)
            out.append(f"  {_dot_id(s)} -> {_dot_id(aut.states[t])} [label={_dot_id(label)}];")
    out.append("}")
    return "\n".join(out) + "\n"
