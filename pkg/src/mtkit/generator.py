"""Bounded top-down generation from QLF under the analysis grammar."""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, Iterator, List, Tuple

from .chart import _key
from .lingdata import LanguageDescription
from .terms import (
    Compound, Subst, Term, Var, apply_subst, canonical, fresh_salt,
    rename_apart, unify, variant_key,
)

DEFAULT_DEPTH = 12

Result = Tuple[Tuple[str, ...], Term]


class Generator:
    def __init__(self, desc: LanguageDescription):
        self.desc = desc
        self.rules = defaultdict(list)
        for r in desc.rules:
            self.rules[_key(r.mother)].append(r)
        self.lexical = defaultdict(list)
        for w in desc.words:
            self.lexical[_key(w.category)].append(w)
        self.memo: Dict[Tuple[str, int], List[Result]] = {}

    def start_categories(self, qlf: Term) -> List[Term]:
        arities = sorted({a for (f, a) in self.rules if f == self.desc.start} |
                         {a for (f, a) in self.lexical if f == self.desc.start})
        cats = []
        for arity in arities:
            if arity == 0:
                continue
            args = tuple(Var(f"_S{k}") for k in range(arity - 1)) + (qlf,)
            cats.append(Compound(self.desc.start, args))
        return cats

    def gen(self, cat: Term, depth: int) -> List[Result]:
        """Derivations of ``cat`` no deeper than ``depth``: (tokens, instance)."""
        if depth <= 0:
            return []
        key = (variant_key(cat), depth)
        if key not in self.memo:
            self.memo[key] = self._gen(canonical(cat, prefix="_M"), depth)
        out = []
        for tokens, inst in self.memo[key]:
            sigma = unify(rename_apart(inst, fresh_salt()), cat)
            out.append((tokens, apply_subst(sigma, cat)))
        return out

    def _gen(self, cat: Term, depth: int) -> List[Result]:
        results: List[Result] = []
        for w in self.lexical.get(_key(cat), ()):
            sigma = unify(rename_apart(w.category, fresh_salt()), cat)
            if sigma is not None:
                results.append(((w.surface,), apply_subst(sigma, cat)))
        if depth < 2:
            return results
        for rule in self.rules.get(_key(cat), ()):
            salt = fresh_salt()
            sigma = unify(rename_apart(rule.mother, salt), cat)
            if sigma is None:
                continue
            pending = [(k, rename_apart(d, salt)) for k, d in enumerate(rule.daughters)]
            for parts, s2 in self._expand(pending, sigma, depth - 1):
                tokens = tuple(tok for k in range(len(rule.daughters)) for tok in parts[k])
                results.append((tokens, apply_subst(s2, cat)))
        return results

    def _expand(self, pending, sigma: Subst, depth: int) -> Iterator[Tuple[Dict[int, Tuple[str, ...]], Subst]]:
        if not pending:
            yield {}, sigma
            return
        insts = [(k, apply_subst(sigma, d)) for k, d in pending]
        # expand a daughter whose semantics is already known first
        j = next((i for i, (_, d) in enumerate(insts)
                  if isinstance(d, Compound) and not isinstance(d.args[-1], Var)), 0)
        idx, d = insts[j]
        rest = pending[:j] + pending[j + 1:]
        for tokens, inst in self.gen(d, depth):
            s2 = unify(d, inst, sigma)
            if s2 is None:
                continue
            for parts, s3 in self._expand(rest, s2, depth):
                parts = dict(parts)
                parts[idx] = tokens
                yield parts, s3


def generate(qlf: Term, desc: LanguageDescription, depth: int = DEFAULT_DEPTH) -> List[str]:
    """Sentences whose analysis has semantics unifying with ``qlf``; sorted, unique."""
    g = Generator(desc)
    found = set()
    for cat in g.start_categories(qlf):
        for tokens, _ in g.gen(cat, depth):
            found.add(" ".join(tokens))
    return sorted(found)
