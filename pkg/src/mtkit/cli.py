"""Command-line entry point: ``mtkit <command> ...``.

Exit status is 0 on success, 1 when a resource cannot be loaded or is
ill-formed, and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Sequence

from . import composer, evalkit, porter
from .chart import parse_text
from .generator import DEFAULT_DEPTH, generate
from .lingdata import (
    LoadError, load_language, load_manifest, load_pair, read_resources,
    validate_rulesets,
)
from .terms import TermSyntaxError, parse_term, print_term
from .transfer import interlingual_set, load_transfer, translate_sentence

DEFAULT_CONFIG = "mtkit.cfg"


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", default=argparse.SUPPRESS,
                   help=f"resource manifest (default: {DEFAULT_CONFIG})")
    return p


def _pair(text: str):
    if text.count("-") != 1 or text.startswith("-") or text.endswith("-"):
        raise argparse.ArgumentTypeError(f"expected SRC-TGT, got {text!r}")
    return tuple(text.split("-"))


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="mtkit", parents=[common],
                                 description="Rule-based transfer translation toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="print the QLFs of a sentence")
    p.add_argument("--lang", required=True)
    p.add_argument("sentence")

    p = sub.add_parser("generate", parents=[common], help="print sentences realising a QLF")
    p.add_argument("--lang", required=True)
    p.add_argument("--qlf", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)

    p = sub.add_parser("translate", parents=[common], help="translate sentences, one per line")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="tgt", required=True)
    p.add_argument("--n", type=int, default=None, help="keep only the N best transfer candidates")
    p.add_argument("--input", default="-", help="input file, '-' for stdin")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)

    p = sub.add_parser("compose", parents=[common], help="compose two transfer rule sets")
    p.add_argument("--pair", type=_pair, action="append", required=True,
                   help="language pair SRC-TGT; give exactly two, chained")
    p.add_argument("--blocks", default=None)
    p.add_argument("--extra", default=None, help="hand-coded rules appended to the output")
    p.add_argument("--out", required=True)

    p = sub.add_parser("port", parents=[common], help="port a lexicon to a related language")
    psub = p.add_subparsers(dest="port_command", required=True)
    q = psub.add_parser("scaffold", parents=[common], help="blank word-to-word rules from a corpus")
    q.add_argument("--src", required=True)
    q.add_argument("--corpus", required=True, help="plain text, one sentence per line")
    q.add_argument("--out", required=True)
    q.add_argument("--examples", type=int, default=porter.DEFAULT_EXAMPLES)
    q = psub.add_parser("induce", parents=[common], help="target lexicon from filled rules")
    q.add_argument("--src", required=True)
    q.add_argument("--tgt", required=True)
    q.add_argument("--ww", required=True, action="append")
    q.add_argument("--answers", action="append", default=[])
    q.add_argument("--out", required=True)

    p = sub.add_parser("eval", parents=[common], help="coverage report and/or judgment table")
    p.add_argument("--from", dest="src")
    p.add_argument("--to", dest="tgt")
    p.add_argument("--corpus")
    p.add_argument("--judgments")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    args.config = getattr(args, "config", DEFAULT_CONFIG)
    handler = {
        "parse": cmd_parse, "generate": cmd_generate, "translate": cmd_translate,
        "compose": cmd_compose, "port": cmd_port, "eval": cmd_eval,
    }[args.command]
    try:
        return handler(args, ap)
    except (LoadError, TermSyntaxError) as e:
        print(f"mtkit: error: {e}", file=sys.stderr)
        return 1


def _usage(ap: argparse.ArgumentParser, msg: str) -> int:
    ap.print_usage(sys.stderr)
    print(f"mtkit: error: {msg}", file=sys.stderr)
    return 2


def cmd_parse(args, ap) -> int:
    desc = load_language(load_manifest(args.config), args.lang)
    for q in parse_text(args.sentence, desc):
        print(print_term(q))
    return 0


def cmd_generate(args, ap) -> int:
    desc = load_language(load_manifest(args.config), args.lang)
    for s in generate(parse_term(args.qlf), desc, args.depth):
        print(s)
    return 0


def _read_lines(path: str) -> List[str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise LoadError(f"cannot read {path}: {e.strerror}") from None
    return [line.strip() for line in text.splitlines() if line.strip()]


def cmd_translate(args, ap) -> int:
    res = load_transfer(load_manifest(args.config), args.src, args.tgt)
    blocks = [translate_sentence(s, res, args.n, args.depth).render() for s in _read_lines(args.input)]
    if blocks:
        print("\n\n".join(blocks))
    return 0


def cmd_compose(args, ap) -> int:
    if len(args.pair) != 2 or args.pair[0][1] != args.pair[1][0]:
        return _usage(ap, "compose needs two chained pairs, e.g. --pair a-b --pair b-c")
    manifest = load_manifest(args.config)
    (l1, l2), (_, l3) = args.pair
    p12, p23 = load_pair(manifest, l1, l2), load_pair(manifest, l2, l3)
    problems = validate_rulesets(p12.trules) + validate_rulesets(p23.trules)
    if problems:
        raise LoadError("\n".join(problems))
    blocks = list(p12.blocks) + list(p23.blocks)
    if args.blocks:
        blocks += read_resources([args.blocks]).blocks
    extra = read_resources([args.extra]).trules if args.extra else []
    comp = composer.compose_rulesets(p12.trules, p23.trules, blocks)
    prefs = composer.compose_prefs(p12.prefs, p23.prefs, comp.rules)
    files = composer.composition_files(comp, prefs, f"{l1} -> {l3} by way of {l2}", extra)
    _write_files(args.out, files)
    print(f"composed {len(comp.rules)} rule(s) from {comp.pairs} pair(s); "
          f"{len(comp.diagnostics)} skipped, see {os.path.join(args.out, 'diagnostics.txt')}")
    return 0


def cmd_port(args, ap) -> int:
    manifest = load_manifest(args.config)
    src = load_language(manifest, args.src)
    if args.port_command == "scaffold":
        scaffold = porter.scaffold_ww(_read_lines(args.corpus), src, args.examples)
        _write_files(os.path.dirname(os.path.abspath(args.out)),
                     {os.path.basename(args.out): scaffold.render(f"word-to-word rules for {args.src}")})
        print(f"{len(scaffold.templates)} template(s), {len(scaffold.unknown)} unknown word(s)")
        return 0
    # the target's own lexicon may not exist yet: only its morphology is needed
    tgt = load_language(manifest, args.tgt, skip=("fw", "lexicon"))
    ww = read_resources(args.ww).ww
    answers = porter.read_answers(args.answers)
    result = porter.induce_lexicon(src, tgt, ww, answers, interlingual_set(src, tgt))
    _write_files(args.out, result.files())
    for note in result.notes:
        print(f"note: {note}", file=sys.stderr)
    print(f"{len(result.lex)} content word(s), {len(result.fw)} function word(s), "
          f"{len(result.requests)} open request(s)")
    return 0


def cmd_eval(args, ap) -> int:
    if not args.corpus and not args.judgments:
        return _usage(ap, "eval needs --corpus and/or --judgments")
    out: List[str] = []
    if args.corpus:
        if not (args.src and args.tgt):
            return _usage(ap, "--corpus needs --from and --to")
        res = load_transfer(load_manifest(args.config), args.src, args.tgt)
        out.append(evalkit.run_suite(evalkit.read_corpus(args.corpus), res, args.n).render())
    if args.judgments:
        rows = evalkit.judgment_table(evalkit.read_judgments(args.judgments))
        out.append(evalkit.format_judgment_table(rows))
    text = "\n".join(out)
    if args.out:
        _write_files(os.path.dirname(os.path.abspath(args.out)), {os.path.basename(args.out): text})
    else:
        sys.stdout.write(text)
    return 0


def _write_files(out_dir: str, files) -> None:
    os.makedirs(out_dir, exist_ok=True)
    for name, text in files.items():
        with open(os.path.join(out_dir, name), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
