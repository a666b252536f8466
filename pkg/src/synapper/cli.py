"""Command-line interface.

One subcommand per operation: validate, linearize, translate, question,
declarativize, compare, canon, dot, prob, orders. Successful output goes
to stdout; failures print a JSON error report to stderr and exit 1; usage
errors exit 2. ``linearize`` and ``translate`` apply the profile's
morpheme rules; ``question`` and ``orders`` operate on the bare
linearization.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from .chance import chance_probability
from .io_formats import (
    MalformedSyntaxError,
    parse_lexicon,
    parse_profile,
    parse_structure,
    to_dot,
)
from .linearize import linearize
from .model import (
    DocumentError,
    StructureValidationError,
    SynapperError,
    WordOrder,
    canonical_form,
    structural_equal,
)
from .profile import LanguageProfile
from .transform import InversionMismatchError, declarativize, interrogativize, wh_token
from .translate import MissingLexemeError, apply_morpheme_rules, translate

_ORDER_SEQUENCE = (
    WordOrder.SVO,
    WordOrder.SOV,
    WordOrder.VSO,
    WordOrder.VOS,
    WordOrder.OSV,
    WordOrder.OVS,
)


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SynapperError as e:
        sys.stderr.write(json.dumps(_error_report(e), indent=2, ensure_ascii=False) + "\n")
        return 1


def main() -> None:
    raise SystemExit(run())


def _error_report(e: SynapperError) -> dict:
    report: dict[str, object] = {"error": type(e).__name__, "message": str(e)}
    if isinstance(e, DocumentError):
        report["path"] = e.path
    if isinstance(e, MalformedSyntaxError):
        report["line"] = e.line
    if isinstance(e, StructureValidationError):
        report["issues"] = [
            {"code": i.code, "path": i.path, "message": i.message} for i in e.issues
        ]
    if isinstance(e, MissingLexemeError):
        report["pairs"] = [[surface, category.value] for surface, category in e.pairs]
    return report


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SynapperError(f"cannot read {path}: {e.strerror or e}") from None


def _load_structure(path: str):
    return parse_structure(_read(path))


def _load_profile(path: str):
    return parse_profile(_read(path))


def _cmd_validate(args) -> int:
    _load_structure(args.structure)
    print("OK")
    return 0


def _cmd_linearize(args) -> int:
    p = _load_profile(args.profile)
    sentence = apply_morpheme_rules(linearize(_load_structure(args.structure), p), p)
    print(sentence.render())
    return 0


def _cmd_translate(args) -> int:
    s = _load_structure(args.structure)
    lex = parse_lexicon(_read(args.lexicon))
    print(translate(s, lex, _load_profile(args.profile)).render())
    return 0


def _cmd_question(args) -> int:
    s = _load_structure(args.structure)
    try:
        wh = wh_token(args.wh)
    except ValueError as exc:
        raise SynapperError(f"invalid wh word {args.wh!r}: must be one non-empty token") from exc
    print(interrogativize(s, wh, _load_profile(args.profile)).render())
    return 0


def _cmd_declarativize(args) -> int:
    skeleton = _load_structure(args.structure)
    p = _load_profile(args.profile)
    q_tokens = args.question.split()
    base = linearize(skeleton, p)
    surface = _extra_token(q_tokens, list(base.surfaces()))
    question = interrogativize(skeleton, wh_token(surface), p)
    if question.render().split() != q_tokens:
        raise InversionMismatchError("question does not match the structure's interrogative form")
    declarativize(question, skeleton, p)
    print(base.render())
    return 0


def _extra_token(q_tokens: list[str], base: list[str]) -> str:
    """The single token the question adds over the declarative.

    The question text was rendered with its first character uppercased, so
    when the plain diff fails the comparison is retried with the leading
    capital undone.
    """
    for candidate in (q_tokens, [q_tokens[0][:1].lower() + q_tokens[0][1:]] + q_tokens[1:] if q_tokens else []):
        if len(candidate) != len(base) + 1:
            continue
        extra = Counter(candidate) - Counter(base)
        if sum(extra.values()) == 1:
            return next(iter(extra))
    raise InversionMismatchError("question does not add exactly one token to the declarative")


def _cmd_compare(args) -> int:
    same = structural_equal(_load_structure(args.a), _load_structure(args.b))
    print("SAME" if same else "DIFFERENT")
    return 0


def _cmd_canon(args) -> int:
    print(canonical_form(_load_structure(args.structure)))
    return 0


def _cmd_dot(args) -> int:
    sys.stdout.write(to_dot(_load_structure(args.structure)))
    return 0


def _cmd_prob(args) -> int:
    result = chance_probability(args.n)
    print(f"{_format_probability(result.probability)} (1/{result.denominator})")
    return 0


def _format_probability(p: float) -> str:
    mantissa, _, exponent = f"{p:.6e}".partition("e")
    sign = exponent[0]
    digits = exponent[1:].lstrip("0") or "0"
    return f"{mantissa}e{sign}{digits}"


def _cmd_orders(args) -> int:
    s = _load_structure(args.structure)
    for order in _ORDER_SEQUENCE:
        bare = LanguageProfile(name=order.value, word_order=order)
        print(f"{order.name}: {linearize(s, bare).render()}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="synapper",
        description="Work with closed-loop sentence structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    cmd = sub.add_parser("validate", help="check a structure file and print OK")
    cmd.add_argument("structure", help="path to a structure JSON file")
    cmd.set_defaults(handler=_cmd_validate)

    cmd = sub.add_parser("linearize", help="render a structure under a profile")
    cmd.add_argument("structure")
    cmd.add_argument("--profile", required=True, help="path to a profile JSON file")
    cmd.set_defaults(handler=_cmd_linearize)

    cmd = sub.add_parser("translate", help="substitute lexemes and render under a profile")
    cmd.add_argument("structure")
    cmd.add_argument("--lexicon", required=True, help="path to a TSV lexicon")
    cmd.add_argument("--profile", required=True)
    cmd.set_defaults(handler=_cmd_translate)

    cmd = sub.add_parser("question", help="render the interrogative form")
    cmd.add_argument("structure")
    cmd.add_argument("--profile", required=True)
    cmd.add_argument("--wh", required=True, help="question word to add")
    cmd.set_defaults(handler=_cmd_question)

    cmd = sub.add_parser("declarativize", help="undo a question against its structure")
    cmd.add_argument("structure")
    cmd.add_argument("--profile", required=True)
    cmd.add_argument("--question", required=True, help="the full question text")
    cmd.set_defaults(handler=_cmd_declarativize)

    cmd = sub.add_parser("compare", help="print SAME or DIFFERENT for two structures")
    cmd.add_argument("a")
    cmd.add_argument("b")
    cmd.set_defaults(handler=_cmd_compare)

    cmd = sub.add_parser("canon", help="print the canonical one-line form")
    cmd.add_argument("structure")
    cmd.set_defaults(handler=_cmd_canon)

    cmd = sub.add_parser("dot", help="print Graphviz source for a structure")
    cmd.add_argument("structure")
    cmd.set_defaults(handler=_cmd_dot)

    cmd = sub.add_parser("prob", help="chance probability that n members line up")
    cmd.add_argument("n", type=int)
    cmd.set_defaults(handler=_cmd_prob)

    cmd = sub.add_parser("orders", help="render a structure in all six word orders")
    cmd.add_argument("structure")
    cmd.set_defaults(handler=_cmd_orders)

    return parser
