"""Command-line front end; every command prints deterministic output.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .decompose import certificate_json, decompose_mzv, decompose_word, unit_fraction_certificate
from .graphs import build_graph, emit_graph
from .lyndon import chen_fox_lyndon, lyndon_basis_decompose
from .numerics import MzvValue, ToleranceError, eval_mzv, eval_word
from .suites import SUITES, run_suite
from .trees import TreeParseError, parse_tree, render, to_words
from .words import Composition, Word, composition_from_word, shuffle, word_from_composition

MIN_TOLERANCE = 1e-12


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvgraphs",
        description="Decompose normalized multiple zeta values into Kontsevich graph weights.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="emit schema-versioned JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("word", help="encode a composition as its binary word")
    s.add_argument("composition", help='comma-separated MZV index, e.g. "1,2,2"')

    s = sub.add_parser("composition", help="decode an admissible word into its MZV index")
    s.add_argument("word", help="admissible 0/1 word")

    s = sub.add_parser("shuffle", help="shuffle product of two words")
    s.add_argument("w1")
    s.add_argument("w2")

    s = sub.add_parser("lyndon", help="Lyndon factorization / basis decomposition")
    lsub = s.add_subparsers(dest="lyndon_command", required=True)
    f = lsub.add_parser("factor", help="Chen-Fox-Lyndon factorization")
    f.add_argument("word")
    d = lsub.add_parser("decomp", help="decomposition into shuffles of Lyndon words")
    d.add_argument("word")

    s = sub.add_parser("tree", help="syntax tree operations")
    tsub = s.add_subparsers(dest="tree_command", required=True)
    te = tsub.add_parser("eval", help="parse a tree expression and print its word expansion")
    te.add_argument("expr", help='tree expression, e.g. "p(e*e)"')

    s = sub.add_parser("graph", help="emit the Kontsevich graph of a tree expression")
    s.add_argument("expr")
    s.add_argument("--format", choices=("dot", "json"), default="dot")

    s = sub.add_parser("eval", help="numeric value of a composition or word")
    s.add_argument("arg", help="composition or 0/1 word")
    s.add_argument("--tol", type=float, default=None, help="absolute tolerance (>= 1e-12)")
    s.add_argument("--as", dest="kind", choices=("composition", "word"), default=None,
                   help="override the composition/word guess")

    s = sub.add_parser("decompose", help="tree combination with the word expansion of the input")
    s.add_argument("arg", help="composition or 0/1 word")
    s.add_argument("--as", dest="kind", choices=("composition", "word"), default=None)

    s = sub.add_parser("certify", help="integer certificate for 1/p")
    s.add_argument("prime", type=int)

    s = sub.add_parser("verify", help="run a named invariant suite")
    s.add_argument("--suite", required=True, choices=sorted(SUITES))

    return parser


def _classify(arg: str, kind: str | None) -> str:
    # A comma or a digit >= 2 means composition; otherwise a 0/1 word.
    if kind is not None:
        return kind
    if "," in arg or any(ch.isdigit() and ch >= "2" for ch in arg):
        return "composition"
    return "word"


def _print_json(payload: dict):
    print(json.dumps({"schema": 1, **payload}, separators=(",", ":")))


def _word_sum_payload(s) -> list[dict]:
    return [{"coeff": str(c), "word": w.bits} for w, c in s.items()]


def _format_complex(z: complex) -> str:
    re, im = z.real + 0.0, z.imag + 0.0  # drop negative zeros
    sign = "+" if im >= 0 else "-"
    return f"{re:.12g} {sign} {abs(im):.12g}i"


def _check_tol(tol: float | None):
    if tol is not None and tol < MIN_TOLERANCE:
        raise ValueError(f"tolerance must be >= {MIN_TOLERANCE}")


def _cmd_word(args) -> int:
    w = word_from_composition(Composition.from_text(args.composition))
    if args.json:
        _print_json({"word": w.bits})
    else:
        print(w)
    return 0


def _cmd_composition(args) -> int:
    c = composition_from_word(Word(args.word))
    if args.json:
        _print_json({"composition": str(c)})
    else:
        print(c)
    return 0


def _cmd_shuffle(args) -> int:
    s = shuffle(Word(args.w1), Word(args.w2))
    if args.json:
        _print_json({"terms": _word_sum_payload(s)})
    else:
        print(s.render())
    return 0


def _cmd_lyndon(args) -> int:
    w = Word(args.word)
    if args.lyndon_command == "factor":
        fact = chen_fox_lyndon(w)
        if args.json:
            _print_json({"factors": [{"word": f.bits, "multiplicity": k} for f, k in fact.factors]})
        else:
            print(fact)
    else:
        decomp = lyndon_basis_decompose(w)
        if args.json:
            _print_json({"terms": [
                {"coeff": str(c), "factors": [f.bits for f in multiset]}
                for multiset, c in decomp.items()
            ]})
        else:
            print(decomp.render())
    return 0


def _cmd_tree(args) -> int:
    expansion = to_words(parse_tree(args.expr))
    if args.json:
        _print_json({"terms": _word_sum_payload(expansion)})
    else:
        print(expansion.render())
    return 0


def _cmd_graph(args) -> int:
    print(emit_graph(build_graph(parse_tree(args.expr)), format=args.format))
    return 0


def _cmd_eval(args) -> int:
    _check_tol(args.tol)
    if _classify(args.arg, args.kind) == "composition":
        c = Composition.from_text(args.arg)
        value = eval_mzv(c, tol=args.tol)
        if args.json:
            _print_json({"zeta": str(c), "value": value, "abs_error_bound": MIN_TOLERANCE})
        else:
            print(f"zeta({c}) = {value:.12g}  (abs error <= {MIN_TOLERANCE:.1g})")
    else:
        w = Word(args.arg)
        result: MzvValue = eval_word(w, tol=args.tol)
        if args.json:
            _print_json({
                "word": w.bits,
                "value": {"re": result.value.real + 0.0, "im": result.value.imag + 0.0},
                "abs_error_bound": result.abs_error_bound,
            })
        else:
            print(f"L({w}) = {_format_complex(result.value)}  (abs error <= {result.abs_error_bound:.1g})")
    return 0


def _cmd_decompose(args) -> int:
    if _classify(args.arg, args.kind) == "composition":
        c = Composition.from_text(args.arg)
    else:
        c = composition_from_word(Word(args.arg))
    result = decompose_mzv(c)
    if args.json:
        _print_json({
            "word": result.word.bits,
            "terms": [{"coeff": str(coeff), "tree": render(t)} for t, coeff in result.trees.items()],
            "identity": result.identity_text(),
        })
    else:
        print(result.trees.render())
        print(f"identity: {result.identity_text()}")
    return 0


def _cmd_certify(args) -> int:
    cert = unit_fraction_certificate(args.prime)
    print(certificate_json(cert))
    if cert.verify():
        print(f"CHECK OK {cert.target}")
        return 0
    print(f"CHECK FAIL {cert.target}")
    return 1


def _cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    failures = 0
    for name, ok, detail in checks:
        if ok:
            print(f"ok: {name}")
        else:
            failures += 1
            suffix = f" ({detail})" if detail else ""
            print(f"FAIL: {name}{suffix}")
    print(f"suite {args.suite}: {len(checks) - failures}/{len(checks)} checks passed")
    return 1 if failures else 0


_COMMANDS = {
    "word": _cmd_word,
    "composition": _cmd_composition,
    "shuffle": _cmd_shuffle,
    "lyndon": _cmd_lyndon,
    "tree": _cmd_tree,
    "graph": _cmd_graph,
    "eval": _cmd_eval,
    "decompose": _cmd_decompose,
    "certify": _cmd_certify,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (TreeParseError, ToleranceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
