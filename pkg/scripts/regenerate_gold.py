"""Rebuild every generated fixture file from the hand-written resources.

Runs the same CLI commands the tests check for reproducibility. Review the
diff before committing: the gold files are meant to change only when the
resources or the engines change on purpose.
"""
import contextlib
import io
import os
import sys

from mtkit import cli
from mtkit.chart import parse_text
from mtkit.fixtures import LANGUAGES, fixture_suite
from mtkit.generator import generate
from mtkit.lingdata import load_language, load_manifest, quote_text
from mtkit.terms import print_term


def run(*argv: str) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = cli.main(list(argv))
    if status != 0:
        sys.exit(f"command failed ({status}): mtkit {' '.join(argv)}")
    return buf.getvalue()


def analyses_text(lang: str) -> str:
    fx = fixture_suite()
    desc = load_language(load_manifest(fx.manifest_path), lang)
    lines = [f"% analyses of sentences/{lang}.txt: analysis(Sentence, QLF, Generated)."]
    for s in fx.sentences(lang):
        for q in parse_text(s, desc):
            gen = ", ".join(quote_text(g) for g in generate(q, desc))
            lines.append(f"analysis({quote_text(s)}, {print_term(q)}, [{gen}]).")
    return "\n".join(lines) + "\n"


def main():
    fx = fixture_suite()
    cfg = ("--config", fx.manifest_path)
    run("port", "scaffold", *cfg, "--src", "swetoy", "--corpus", fx.path("sentences", "swetoy.txt"),
        "--out", fx.gold("swetoy-dantoy.ww.blank"))
    run("port", "induce", *cfg, "--src", "swetoy", "--tgt", "dantoy", "--ww", fx.ww_filled,
        "--answers", fx.answers, "--out", fx.ported_dir)
    run("compose", *cfg, "--pair", "swetoy-engtoy", "--pair", "engtoy-fretoy",
        "--blocks", fx.blocks, "--out", fx.composed_dir)
    for lang in LANGUAGES:
        with open(fx.gold(f"{lang}.analyses"), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(analyses_text(lang))
    src = fx.path("sentences", "swetoy.txt")
    for tgt in ("engtoy", "dantoy", "fretoy"):
        text = run("translate", *cfg, "--from", "swetoy", "--to", tgt, "--input", src)
        with open(fx.gold(f"swetoy-{tgt}.translations"), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    run("eval", *cfg, "--from", "swetoy", "--to", "dantoy", "--corpus", fx.corpus("swetoy"),
        "--judgments", fx.judgments, "--out", fx.gold("swetoy-dantoy.report"))
    print("regenerated gold files under", os.path.relpath(fx.root))


if __name__ == "__main__":
    main()
