"""Command-line interface.

Exit codes: 0 when the property asked about holds, 1 when it does not,
2 on usage or input errors.  The environment variable
``SEMIAUTO_SEMIGROUP_CAP`` overrides the maximum semigroup size
(default 1000000 elements).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report
from .core import AutomatonError
from .decompose import decompose
from .fileformat import read_automaton, serialize_automaton, to_dot, write_automaton
from .product import direct_product, find_isomorphism
from .semigroup import CAP_ENV, SemigroupTooLarge, semigroup
from .structure import quasi_ideal_report

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="semiauto",
        description="Algebra of finite deterministic semiautomata.",
        epilog=f"Exit status: 0 property holds, 1 it does not, 2 usage or input error. "
        f"{CAP_ENV} overrides the semigroup size cap.",
    )
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("info", help="classification summary")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("semigroup", help="transition semigroup elements")
    s.add_argument("file")
    s.add_argument("--cayley", action="store_true", help="include the Cayley table")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("check", help="quasi-ideal report")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("decompose", help="split into permutation and synchronizing quotients")
    s.add_argument("file")
    s.add_argument("--out-pi", metavar="PATH")
    s.add_argument("--out-rho", metavar="PATH")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("product", help="direct product of two automata")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--out", metavar="PATH")

    s = sub.add_parser("iso", help="find an isomorphism")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("dot", help="Graphviz export")
    s.add_argument("file")
    return p


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def run(args, out) -> int:
    cmd = args.command
    if cmd == "info":
        aut = read_automaton(args.file)
        sg = semigroup(aut)
        out.write(_dump(report.info_json(aut, sg)) if args.json else report.format_info(aut, sg))
        return EXIT_OK

    if cmd == "semigroup":
        sg = semigroup(read_automaton(args.file))
        if args.json:
            out.write(_dump(report.semigroup_json(sg, args.cayley)))
        else:
            out.write(report.format_semigroup(sg, args.cayley))
        return EXIT_OK

    if cmd == "check":
        aut = read_automaton(args.file)
        rep = quasi_ideal_report(aut)
        if args.json:
            out.write(_dump(report.quasi_ideal_json(aut, rep)))
        else:
            out.write(report.format_quasi_ideal(aut, rep))
        return EXIT_OK if rep.verdict else EXIT_FAIL

    if cmd == "decompose":
        rep = decompose(read_automaton(args.file))
        if rep.ok:
            if args.out_pi:
                write_automaton(rep.quotient_pi, args.out_pi)
            if args.out_rho:
                write_automaton(rep.quotient_rho, args.out_rho)
        out.write(_dump(report.decomposition_json(rep)) if args.json else report.format_decomposition(rep))
        return EXIT_OK if rep.ok else EXIT_FAIL

    if cmd == "product":
        prod = direct_product(read_automaton(args.file1), read_automaton(args.file2))
        if args.out:
            write_automaton(prod, args.out)
        else:
            out.write(serialize_automaton(prod))
        return EXIT_OK

    if cmd == "iso":
        iso = find_isomorphism(read_automaton(args.file1), read_automaton(args.file2))
        if args.json:
            out.write(_dump(None if iso is None else report.state_map_json(iso)))
        else:
            out.write("none\n" if iso is None else report.format_state_map(iso))
        return EXIT_OK if iso is not None else EXIT_FAIL

    if cmd == "dot":
        out.write(to_dot(read_automaton(args.file)))
        return EXIT_OK
    raise AssertionError(cmd)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args, sys.stdout)
    except (AutomatonError, SemigroupTooLarge, OSError) as exc:
        print(f"semiauto: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
