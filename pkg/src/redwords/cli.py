"""Command-line front end.

Exit codes: 0 on success, 1 on malformed input, 2 when a verification run
reports a failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bijection import tableau_to_word, word_to_tableau
from .diagrams import Filling, permutation_of_diagram, rothe_diagram, super_tableau
from .graphs import (
    DEFAULT_VERTEX_BUDGET,
    bfs_distance,
    build_graph,
    diameter,
    export,
    min_braid_count,
)
from .perms import Permutation
from .tableaux import (
    column_inversions,
    enumerate_sbt,
    flip,
    is_balanced,
    min_inv_w0,
    psi,
    tab_inversions,
    tab_permutation,
)
from .verify import run_suite
from .words import (
    Word,
    enumerate_reduced_words,
    pairing_permutation,
    super_word,
    word_inversions,
    word_to_permutation,
    yang_baxter_count,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; malformed input is 1 here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_tableau(path: str) -> Filling:
    text = Path(path).read_text()
    filling = Filling.from_text(text)
    if len(filling) and not is_balanced(filling):
        raise ValueError(f"tableau in {path} is not balanced")
    permutation_of_diagram(filling.diagram)  # rejects non-Rothe shapes
    return filling


def _emit(payload: dict, lines: list[str], json_mode: bool) -> None:
    if json_mode:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _tableau_payload(f: Filling) -> tuple[dict, list[str]]:
    text = f.to_text()
    display = f.render()
    payload = {"tableau": text, "display": display}
    lines = [text] + (display.splitlines() if display else [])
    return payload, lines


def _cmd_enumerate(args) -> int:
    w = Permutation.from_text(args.w)
    if args.model == "words":
        elements = [str(r) for r in enumerate_reduced_words(w)]
    else:
        elements = [t.to_text() for t in enumerate_sbt(w)]
    payload = {"w": str(w), "model": args.model, "elements": elements}
    _emit(payload, elements, args.json)
    return 0


def _cmd_super(args) -> int:
    w = Permutation.from_text(args.w)
    if args.model == "words":
        element = str(super_word(w))
        _emit({"w": str(w), "model": args.model, "element": element}, [element], args.json)
    else:
        t = super_tableau(w)
        display = t.render()
        payload = {
            "w": str(w),
            "model": args.model,
            "element": t.to_text(),
            "display": display,
        }
        lines = [t.to_text()] + (display.splitlines() if display else [])
        _emit(payload, lines, args.json)
    return 0


def _cmd_inv(args) -> int:
    if args.word is not None:
        rho = Word.from_text(args.word)
        if not rho:
            payload = {"inversions": 0, "permutation": "", "yang_baxter": 0}
        else:
            w = word_to_permutation(rho)
            payload = {
                "inversions": word_inversions(rho),
                "permutation": str(pairing_permutation(rho)),
                "yang_baxter": yang_baxter_count(rho, super_word(w)),
            }
    else:
        t = _read_tableau(args.tableau)
        payload = {
            "inversions": tab_inversions(t),
            "permutation": str(tab_permutation(t)) if len(t) else "",
            "yang_baxter": column_inversions(t),
        }
    lines = [f"{key}: {value}" for key, value in payload.items()]
    _emit(payload, lines, args.json)
    return 0


def _parse_element(text: str, model: str):
    return Word.from_text(text) if model == "words" else Filling.from_text(text)


def _cmd_dist(args) -> int:
    w = Permutation.from_text(args.w)
    g = build_graph(w, args.model, max_vertices=args.budget)
    a = _parse_element(args.src, args.model)
    b = _parse_element(args.dst, args.model)
    payload = {
        "distance": bfs_distance(g, a, b),
        "min_braids": min_braid_count(g, a, b),
    }
    lines = [f"{key}: {value}" for key, value in payload.items()]
    _emit(payload, lines, args.json)
    return 0


def _cmd_diameter(args) -> int:
    if args.formula:
        value = min_inv_w0(args.n)
    else:
        g = build_graph(Permutation.longest(args.n), "words", max_vertices=args.budget)
        value = diameter(g, w0_shortcut=args.shortcut)
    _emit({"diameter": value}, [str(value)], args.json)
    return 0


def _cmd_biject(args) -> int:
    if args.word is not None:
        rho = Word.from_text(args.word)
        payload, lines = _tableau_payload(word_to_tableau(rho))
        _emit(payload, lines, args.json)
    else:
        t = _read_tableau(args.tableau)
        word = str(tableau_to_word(t))
        _emit({"word": word}, [word], args.json)
    return 0


def _cmd_flip(args) -> int:
    t = _read_tableau(args.tableau)
    payload, lines = _tableau_payload(flip(t))
    _emit(payload, lines, args.json)
    return 0


def _cmd_psi(args) -> int:
    t = _read_tableau(args.tableau)
    payload, lines = _tableau_payload(psi(t))
    _emit(payload, lines, args.json)
    return 0


def _cmd_graph(args) -> int:
    w = Permutation.from_text(args.w)
    g = build_graph(w, args.model, max_vertices=args.budget)
    document = export(g, args.format)
    if args.output:
        Path(args.output).write_text(document + "\n")
    else:
        print(document)
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.n)
    ok = all(r.passed for r in results)
    if args.json:
        payload = {
            "n": args.n,
            "passed": ok,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            print(r.line())
        print(f"RESULT: {'PASS' if ok else 'FAIL'} ({len(results)} checks, n={args.n})")
    return 0 if ok else 2


def _build_parser() -> _Parser:
    # SUPPRESS keeps a --json given before the subcommand from being reset
    # by the subparser's default when it parses the remaining arguments.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="machine-readable output",
    )

    parser = _Parser(prog="redwords", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list R(w) or the balanced tableaux of w")
    p.add_argument("-w", required=True, help="permutation, e.g. 4,2,1,5,3")
    p.add_argument("--model", choices=("words", "tableaux"), default="words")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("super", parents=[common], help="the super-Yamanouchi word or tableau")
    p.add_argument("-w", required=True)
    p.add_argument("--model", choices=("words", "tableaux"), default="words")
    p.set_defaults(func=_cmd_super)

    p = sub.add_parser("inv", parents=[common], help="inversion number, permutation, Yang-Baxter count")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="comma-separated letters")
    group.add_argument("--tableau", help="file holding a tableau text form")
    p.set_defaults(func=_cmd_inv)

    p = sub.add_parser("dist", parents=[common], help="BFS distance and minimum braid count")
    p.add_argument("-w", required=True)
    p.add_argument("--model", choices=("words", "tableaux"), default="words")
    p.add_argument("--from", dest="src", required=True, help="start element text form")
    p.add_argument("--to", dest="dst", required=True, help="end element text form")
    p.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("diameter", parents=[common], help="diameter of the move graph of the longest permutation")
    p.add_argument("-n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="build the graph and measure (default)")
    mode.add_argument("--formula", action="store_true", help="closed form, no graph")
    p.add_argument(
        "--shortcut",
        action="store_true",
        help="measure only between the super element and its complement",
    )
    p.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET)
    p.set_defaults(func=_cmd_diameter)

    p = sub.add_parser("biject", parents=[common], help="convert across the word/tableau bijection")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word")
    group.add_argument("--tableau")
    p.set_defaults(func=_cmd_biject)

    p = sub.add_parser("flip", parents=[common], help="transpose-complement involution")
    p.add_argument("--tableau", required=True)
    p.set_defaults(func=_cmd_flip)

    p = sub.add_parser("psi", parents=[common], help="entry complement on the longest permutation")
    p.add_argument("--tableau", required=True)
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("graph", parents=[common], help="export the move graph")
    p.add_argument("-w", required=True)
    p.add_argument("--model", choices=("words", "tableaux"), default="words")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output")
    p.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("verify", parents=[common], help="exhaustive brute-force checks over S_n")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"redwords: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
