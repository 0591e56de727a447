"""Bottom-up active chart parser over a loaded language description."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .lingdata import GrammarRule, LanguageDescription
from .terms import (
    Compound, Term, apply_subst, canonical, fresh_salt, make_list,
    print_term, rename_apart, unify, variant_key,
)

FINAL_PUNCT = ".?!"


def tokenize(text: str) -> List[str]:
    tokens = text.lower().split()
    if tokens:
        last = tokens[-1]
        stripped = last.rstrip(FINAL_PUNCT)
        if stripped and stripped != last:
            tokens[-1:] = [stripped, last[len(stripped):]]
    return tokens


@dataclass(frozen=True)
class Edge:
    start: int
    end: int
    category: Term
    remaining: Tuple[Term, ...]
    rule: str

    @property
    def passive(self) -> bool:
        return not self.remaining


def _key(t: Term) -> Tuple[str, int]:
    if isinstance(t, Compound):
        return (t.functor, t.arity)
    return (print_term(t), 0)


def semantics(category: Term) -> Term:
    if isinstance(category, Compound):
        return category.args[-1]
    return category


class Chart:
    """Agenda-driven chart; one instance per sentence."""

    def __init__(self, tokens: List[str], desc: LanguageDescription):
        self.tokens = tokens
        self.desc = desc
        self.by_first: Dict[Tuple[str, int], List[GrammarRule]] = defaultdict(list)
        for r in desc.rules:
            self.by_first[_key(r.daughters[0])].append(r)
        self.passive_from: Dict[int, List[Edge]] = defaultdict(list)
        self.active_to: Dict[int, List[Edge]] = defaultdict(list)
        self.seen: set = set()
        self.agenda: List[Edge] = []

    def add(self, edge: Edge) -> None:
        body = Compound("$edge", (edge.category, make_list(edge.remaining)))
        key = (edge.start, edge.end, variant_key(body))
        if key in self.seen:
            return
        self.seen.add(key)
        self.agenda.append(edge)

    def run(self) -> List[Edge]:
        for i, tok in enumerate(self.tokens):
            for item in self.desc.words_for(tok):
                self.add(Edge(i, i + 1, item.category, (), f"lex:{item.surface}"))
        while self.agenda:
            edge = self.agenda.pop(0)
            if edge.passive:
                self.passive_from[edge.start].append(edge)
                self._predict(edge)
                for active in list(self.active_to[edge.start]):
                    self._combine(active, edge)
            else:
                self.active_to[edge.end].append(edge)
                for passive in list(self.passive_from[edge.end]):
                    self._combine(edge, passive)
        return [e for edges in self.passive_from.values() for e in edges]

    def _predict(self, edge: Edge) -> None:
        for rule in self.by_first.get(_key(edge.category), ()):
            salt = fresh_salt()
            dtrs = [rename_apart(d, salt) for d in rule.daughters]
            sigma = unify(dtrs[0], edge.category)
            if sigma is None:
                continue
            mother = apply_subst(sigma, rename_apart(rule.mother, salt))
            rest = tuple(apply_subst(sigma, d) for d in dtrs[1:])
            self.add(Edge(edge.start, edge.end, mother, rest, rule.id))

    def _combine(self, active: Edge, passive: Edge) -> None:
        cat = rename_apart(passive.category, fresh_salt())
        sigma = unify(active.remaining[0], cat)
        if sigma is None:
            return
        mother = apply_subst(sigma, active.category)
        rest = tuple(apply_subst(sigma, d) for d in active.remaining[1:])
        self.add(Edge(active.start, passive.end, mother, rest, active.rule))


def parse(tokens: List[str], desc: LanguageDescription) -> List[Term]:
    """QLFs of all complete analyses, deduplicated and sorted by printed form."""
    if not tokens:
        return []
    edges = Chart(tokens, desc).run()
    found = {}
    for e in edges:
        if e.start == 0 and e.end == len(tokens) and _key(e.category)[0] == desc.start:
            q = canonical(semantics(e.category))
            found.setdefault(print_term(q), q)
    return [found[k] for k in sorted(found)]


def parse_text(text: str, desc: LanguageDescription) -> List[Term]:
    return parse(tokenize(text), desc)
