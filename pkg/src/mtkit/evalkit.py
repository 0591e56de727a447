"""Corpus-weighted coverage and judgment tables."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .chart import tokenize
from .lingdata import LoadError, format_weight
from .terms import Atom, Compound, Int, parse_clauses, print_term
from .transfer import TransferResources, Translation, translate_sentence

PUNCT = set(".,;:?!")

# Judgment categories, best to worst.
JUDGMENT_CATEGORIES: Tuple[Tuple[str, str], ...] = (
    ("fully-acceptable", "Fully acceptable"),
    ("unnatural-style", "Unnatural style"),
    ("minor-syntactic-errors", "Minor syntactic errors"),
    ("major-syntactic-errors", "Major syntactic errors"),
    ("partial-translation", "Partial translation"),
    ("nonsense", "Nonsense"),
    ("bad-translation", "Bad translation"),
    ("no-translation", "No translation"),
)
_CATEGORY_NAMES = {k for k, _ in JUDGMENT_CATEGORIES}


def word_count(sentence: str) -> int:
    return sum(1 for tok in tokenize(sentence) if not all(ch in PUNCT for ch in tok))


def percent(part, whole) -> Decimal:
    """100 * part / whole, rounded half-up to one decimal."""
    if not whole:
        raise ValueError("percentage of an empty total")
    value = Decimal(part) * 100 / Decimal(whole)
    return value.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    rep: int
    sentence: str
    weight: int


def make_entry(id: str, rep: int, sentence: str) -> CorpusEntry:
    return CorpusEntry(id, rep, sentence, word_count(sentence) * rep)


def read_corpus(path: str) -> List[CorpusEntry]:
    """Clauses ``entry(Id, Rep, "sentence").``"""
    out = []
    for t, line in _clauses(path):
        where = f"{path}:{line}"
        if not (isinstance(t, Compound) and t.functor == "entry" and t.arity == 3):
            raise LoadError(f"{where}: expected entry(Id, Rep, Sentence)")
        rid, rep, sent = t.args
        if not isinstance(rep, Int) or rep.value < 1:
            raise LoadError(f"{where}: repetition count must be a positive integer")
        if not isinstance(sent, Atom):
            raise LoadError(f"{where}: sentence must be quoted text")
        out.append(make_entry(print_term(rid), rep.value, sent.name))
    return out


def weighted_coverage(entries: Sequence[CorpusEntry], covered: Callable[[CorpusEntry], bool]) -> Decimal:
    total = sum(e.weight for e in entries)
    return percent(sum(e.weight for e in entries if covered(e)), total)


# ---------------------------------------------------------------------------
# Judgments

def normalize_category(name: str) -> str:
    return name.replace("_", "-")


def read_judgments(path: str) -> List[Tuple[str, str]]:
    out = []
    for t, line in _clauses(path):
        where = f"{path}:{line}"
        if not (isinstance(t, Compound) and t.functor == "judge" and t.arity == 2
                and isinstance(t.args[1], Atom)):
            raise LoadError(f"{where}: expected judge(Id, Category)")
        cat = normalize_category(t.args[1].name)
        if cat not in _CATEGORY_NAMES:
            raise LoadError(f"{where}: unknown judgment category {t.args[1].name}")
        out.append((print_term(t.args[0]), cat))
    return out


def judgment_table(judgments: Iterable[Tuple[str, str]]) -> List[Tuple[str, int, Decimal]]:
    """(label, count, percent) per category, in fixed order."""
    counts = Counter()
    for _, cat in judgments:
        cat = normalize_category(cat)
        if cat not in _CATEGORY_NAMES:
            raise ValueError(f"unknown judgment category {cat}")
        counts[cat] += 1
    n = sum(counts.values())
    return [(label, counts[key], percent(counts[key], n)) for key, label in JUDGMENT_CATEGORIES]


def format_judgment_table(rows: Sequence[Tuple[str, int, Decimal]]) -> str:
    width = max(len(label) for label, _, _ in rows)
    total = sum(c for _, c, _ in rows)
    lines = [f"{'category'.ljust(width)}  {'count':>5}  {'%':>5}"]
    lines += [f"{label.ljust(width)}  {count:>5}  {pct:>5}" for label, count, pct in rows]
    lines.append(f"{'total'.ljust(width)}  {total:>5}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Suite runs

@dataclass
class SuiteRow:
    entry: CorpusEntry
    translation: Translation

    @property
    def covered(self) -> bool:
        return self.translation.covered

    @property
    def best_complete(self) -> bool:
        cands = self.translation.candidates
        return bool(cands) and cands[0].complete


@dataclass
class SuiteReport:
    source: str
    target: str
    rows: List[SuiteRow]

    def coverage(self) -> Decimal:
        return weighted_coverage([r.entry for r in self.rows], self._pred("covered"))

    def best_coverage(self) -> Decimal:
        return weighted_coverage([r.entry for r in self.rows], self._pred("best_complete"))

    def qlf_coverage(self) -> Decimal:
        return weighted_coverage([r.entry for r in self.rows], self._pred("qlf"))

    def _pred(self, what: str):
        by_id = {r.entry.id: r for r in self.rows}
        if what == "qlf":
            return lambda e: by_id[e.id].translation.route == "qlf"
        return lambda e: getattr(by_id[e.id], what)

    def gap_counts(self) -> List[Tuple[str, int]]:
        counts = Counter()
        for r in self.rows:
            for g in set(r.translation.gaps):
                counts[g] += r.entry.weight
        return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))

    def render(self) -> str:
        yn = {True: "yes", False: "no"}
        lines = [f"# evaluation: {self.source} -> {self.target}",
                 f"{'id':<10}{'rep':>4}{'words':>6}{'weight':>7}  {'any':<4}{'best':<5}"
                 f"{'route':<6}{'score':>6}  target"]
        for r in self.rows:
            e, t = r.entry, r.translation
            lines.append(f"{e.id:<10}{e.rep:>4}{e.weight // e.rep:>6}{e.weight:>7}  "
                         f"{yn[r.covered]:<4}{yn[r.best_complete]:<5}{t.route:<6}"
                         f"{format_weight(t.score):>6}  {t.target}")
        total = sum(r.entry.weight for r in self.rows)
        lines += [
            "",
            f"sentences: {len(self.rows)}",
            f"total weight: {total}",
            f"weighted coverage, any complete candidate: {self.coverage()}%",
            f"weighted coverage, best-ranked candidate complete: {self.best_coverage()}%",
            f"weighted coverage, generated through transfer: {self.qlf_coverage()}%",
        ]
        gaps = self.gap_counts()
        if gaps:
            lines.append("gaps by weight:")
            lines += [f"  {name:<24}{w:>6}" for name, w in gaps]
        return "\n".join(lines) + "\n"


def run_suite(entries: Sequence[CorpusEntry], res: TransferResources,
              limit: Optional[int] = None) -> SuiteReport:
    rows = [SuiteRow(e, translate_sentence(e.sentence, res, limit)) for e in entries]
    src = res.source.lang if res.source else "?"
    tgt = res.target.lang if res.target else "?"
    return SuiteReport(src, tgt, rows)


def _clauses(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise LoadError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_clauses(text, source=path)
    except ValueError as e:
        raise LoadError(str(e)) from None
