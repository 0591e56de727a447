"""Replay the iterative porting loop on the fixture Swedish -> Danish pair.

The fixture answer file is split into ROUNDS parts, fed back one part per
round, and the number of open requests is printed after each round.

    python scripts/run_porting_loop.py --rounds 3 --out /tmp/port
"""
import argparse
import os
import tempfile

from mtkit import porter
from mtkit.fixtures import fixture_suite
from mtkit.lingdata import load_language, read_resources
from mtkit.transfer import interlingual_set


def split_answers(path: str, rounds: int, work: str):
    with open(path, encoding="utf-8") as fh:
        clauses = [line for line in fh.read().splitlines() if line.startswith("answer(")]
    files = []
    for k in range(rounds):
        part = os.path.join(work, f"answers.{k + 1}")
        with open(part, "w", encoding="utf-8") as fh:
            fh.write("\n".join(clauses[k::rounds]) + "\n")
        files.append([part])
    return files


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--rounds", type=int, default=3)
    ap.add_argument("--out", default=None, help="write the final lexicon, rules and requests here")
    args = ap.parse_args()

    fx = fixture_suite()
    manifest = fx.manifest()
    src = load_language(manifest, "swetoy")
    tgt = load_language(manifest, "dantoy", skip=("fw", "lexicon"))
    ww = read_resources([fx.ww_filled]).ww
    with tempfile.TemporaryDirectory() as work:
        rounds = split_answers(fx.answers, args.rounds, work)
        result, counts = porter.port_fixpoint(src, tgt, ww, rounds, interlingual_set(src, tgt))
    for k, n in enumerate(counts):
        print(f"round {k}: {n} open request(s)")
    print(f"final: {len(result.lex)} content word(s), {len(result.fw)} function word(s), "
          f"{len(result.trules)} transfer rule(s)")
    if args.out:
        for path in porter.write_port_outputs(result, args.out):
            print("wrote", path)


if __name__ == "__main__":
    main()
