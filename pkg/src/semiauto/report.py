"""JSON-ready dictionaries and text renderings of analysis results.

Field names here are a stable interface; the schemas under ``docs/schemas``
describe them.
"""

from __future__ import annotations

from .congruence import Partition
from .core import Automaton, format_word
from .decompose import DecompositionReport
from .product import StateMap
from .semigroup import TransitionSemigroup, format_cayley_text, labelled_cayley
from .structure import (
    QuasiIdealReport,
    find_reset_word,
    is_permutation,
    is_strongly_connected,
    minimal_ideal,
)


def _block_names(aut: Automaton, blocks) -> list[list[str]]:
    return Partition.from_blocks(aut.n_states, blocks).to_json(aut)


def automaton_json(aut: Automaton) -> dict:
    return {
        "states": list(aut.states),
        "alphabet": list(aut.alphabet),
        "delta": {s: {a: aut.states[aut.table[k][i]] for k, a in enumerate(aut.alphabet)} for i, s in enumerate(aut.states)},
    }


def info_json(aut: Automaton, sg: TransitionSemigroup) -> dict:
    ideal = minimal_ideal(sg)
    reset = find_reset_word(aut, sg)
    return {
        "states": aut.n_states,
        "letters": aut.n_letters,
        "strongly_connected": is_strongly_connected(aut),
        "permutation": is_permutation(aut),
        "synchronizing": reset is not None,
        "reset_word": None if reset is None else format_word(reset),
        "semigroup_size": len(sg),
        "ideal_size": len(ideal.members),
        "min_rank": ideal.min_rank,
    }


def format_info(aut: Automaton, sg: TransitionSemigroup) -> str:
    d = info_json(aut, sg)
    rows = [
        ("states", d["states"]),
        ("letters", d["letters"]),
        ("strongly connected", _yn(d["strongly_connected"])),
        ("permutation", _yn(d["permutation"])),
        ("synchronizing", _yn(d["synchronizing"]) + (f" (reset word {d['reset_word']})" if d["reset_word"] else "")),
        ("|S(A)|", d["semigroup_size"]),
        ("|I(A)|", d["ideal_size"]),
        ("min rank", d["min_rank"]),
    ]
    return _kv(rows)


def semigroup_json(sg: TransitionSemigroup, cayley: bool = False) -> dict:
    aut = sg.automaton
    out = {
        "size": len(sg),
        "identity_from_nonempty_word": sg.contains_identity_as_nonempty_word,
        "elements": [
            {
                "witness": e.label,
                "mapping": [aut.states[x] for x in e.mapping],
                "rank": e.rank,
            }
            for e in sg.elements
        ],
    }
    if cayley:
        out["cayley"] = labelled_cayley(sg)[1]
    return out


def format_semigroup(sg: TransitionSemigroup, cayley: bool = False) -> str:
    aut = sg.automaton
    labels = sg.labels()
    width = max(len(x) for x in labels)
    lines = [f"|S(A)| = {len(sg)}"]
    for e in sg.elements:
        images = " ".join(aut.states[x] for x in e.mapping)
        lines.append(f"{e.label.rjust(width)} : {images}  (rank {e.rank})")
    text = "\n".join(lines) + "\n"
    if cayley:
        text += "\n" + format_cayley_text(*labelled_cayley(sg))
    return text


def quasi_ideal_json(aut: Automaton, rep: QuasiIdealReport) -> dict:
    return {
        "strongly_connected": rep.strongly_connected,
        "ideal_right_group": rep.ideal_right_group,
        "images_partition": rep.images_partition,
        "verdict": rep.verdict,
        "blocks": _block_names(aut, rep.blocks) if rep.images_partition else [],
        "violations": list(rep.violations),
    }


def format_quasi_ideal(aut: Automaton, rep: QuasiIdealReport) -> str:
    rows = [
        ("strongly connected", _yn(rep.strongly_connected)),
        ("ideal is a right group", _yn(rep.ideal_right_group)),
        ("idempotent images partition", _yn(rep.images_partition)),
    ]
    if rep.images_partition:
        rows.append(("blocks", Partition.from_blocks(aut.n_states, rep.blocks).format(aut)))
    for v in rep.violations:
        rows.append(("violation", _violation_text(v)))
    rows.append(("verdict", "quasi-ideal" if rep.verdict else "not quasi-ideal"))
    return _kv(rows)


def _violation_text(v: dict) -> str:
    kind = v["kind"]
    if kind == "overlap":
        a, b = v["idempotents"]
        return f"images of idempotents {a} and {b} overlap without being equal (e.g. {v['state']})"
    if kind == "uncovered":
        return f"state {v['state']} lies in no idempotent image"
    return kind.replace("_", " ")


def state_map_json(m: StateMap) -> list[list[str]]:
    return m.to_json()


def format_state_map(m: StateMap) -> str:
    pairs = m.pairs()
    width = max(len(s) for s, _ in pairs)
    return "".join(f"{s.ljust(width)} -> {t}\n" for s, t in pairs)


def decomposition_json(rep: DecompositionReport) -> dict:
    aut = rep.automaton
    out = {
        "quasi_ideal": quasi_ideal_json(aut, rep.quasi_ideal),
        "failure_stage": rep.failure_stage,
        "pi": None,
        "rho": None,
        "quotient_pi": None,
        "quotient_rho": None,
        "quotient_pi_class": None,
        "quotient_rho_class": None,
        "iso": None,
    }
    if rep.ok:
        out.update(
            pi=rep.pi.to_json(aut),
            rho=rep.rho.to_json(aut),
            quotient_pi=automaton_json(rep.quotient_pi),
            quotient_rho=automaton_json(rep.quotient_rho),
            quotient_pi_class={
                "permutation": rep.quotient_pi_permutation,
                "strongly_connected": rep.quotient_pi_strongly_connected,
            },
            quotient_rho_class={
                "synchronizing": rep.quotient_rho_synchronizing,
                "strongly_connected": rep.quotient_rho_strongly_connected,
            },
            iso=state_map_json(rep.iso),
        )
    return out


def format_table(aut: Automaton) -> str:
    cells = [[""] + list(aut.alphabet)]
    for i, s in enumerate(aut.states):
        cells.append([s] + [aut.states[row[i]] for row in aut.table])
    widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
    lines = []
    for k, r in enumerate(cells):
        lines.append(r[0].ljust(widths[0]) + " | " + "  ".join(x.ljust(w) for x, w in zip(r[1:], widths[1:])))
        if k == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(x.rstrip() for x in lines) + "\n"


def format_decomposition(rep: DecompositionReport) -> str:
    aut = rep.automaton
    parts = ["== quasi-ideal check ==", format_quasi_ideal(aut, rep.quasi_ideal).rstrip()]
    if not rep.ok:
        parts.append(f"decomposition stopped: {rep.failure_stage}")
        return "\n".join(parts) + "\n"
    parts += [
        "",
        "== congruences ==",
        _kv([("pi", rep.pi.format(aut)), ("rho", rep.rho.format(aut))]).rstrip(),
        "",
        "== permutation quotient A/pi ==",
        format_table(rep.quotient_pi).rstrip(),
        "",
        "== synchronizing quotient A/rho ==",
        format_table(rep.quotient_rho).rstrip(),
        "",
        "== isomorphism A -> A/pi x A/rho ==",
        format_state_map(rep.iso).rstrip(),
    ]
    return "\n".join(parts) + "\n"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _kv(rows) -> str:
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)} : {v}\n" for k, v in rows)
