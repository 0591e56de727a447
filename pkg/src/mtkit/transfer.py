"""QLF-to-QLF transfer with word-to-word gap patching and preference ranking."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .chart import parse, tokenize
from .generator import DEFAULT_DEPTH, generate
from .lingdata import (
    LanguageDescription, LoadError, Manifest, PrefModel, TransferRule, WWRule,
    format_weight, head_name, load_language, load_pair, validate_rulesets,
)
from .terms import (
    Atom, Compound, Int, Term, Var, atoms_and_functors, fresh_salt, match,
    print_term, rename_apart,
)

ALWAYS_INTERLINGUAL = frozenset({"$nil", "$cons"})


def interlingual_set(*descs: LanguageDescription) -> FrozenSet[str]:
    """Constants used by grammar rules and function-word categories.

    Category functors themselves are syntax, so only constants occurring
    inside category arguments count.
    """
    out = set(ALWAYS_INTERLINGUAL)
    for desc in descs:
        cats: List[Term] = []
        for r in desc.rules:
            cats.append(r.mother)
            cats.extend(r.daughters)
        cats.extend(e.category for e in desc.fw)
        for c in cats:
            if isinstance(c, Compound):
                for a in c.args:
                    out.update(atoms_and_functors(a))
    return frozenset(out)


@dataclass(frozen=True)
class TransferResult:
    qlf: Term
    score: Fraction
    trace: Tuple[Term, ...]
    gaps: Tuple[str, ...] = ()
    ww_patches: Tuple[Tuple[str, str], ...] = ()

    @property
    def complete(self) -> bool:
        return not self.gaps

    def trace_key(self) -> Tuple[str, ...]:
        return tuple(print_term(t) for t in self.trace)


@dataclass
class TransferResources:
    rules: Sequence[TransferRule]
    prefs: PrefModel = field(default_factory=PrefModel)
    ww: Sequence[WWRule] = ()
    interlingual: FrozenSet[str] = ALWAYS_INTERLINGUAL
    source: Optional[LanguageDescription] = None
    target: Optional[LanguageDescription] = None


def load_transfer(manifest: Manifest, src: str, tgt: str,
                  languages: Optional[Dict[str, LanguageDescription]] = None) -> TransferResources:
    """Transfer resources for a manifest pair; rule-set errors raise LoadError."""
    cache = languages if languages is not None else {}
    for lang in (src, tgt):
        if lang not in cache:
            cache[lang] = load_language(manifest, lang)
    pair = load_pair(manifest, src, tgt)
    problems = validate_rulesets(pair.trules)
    if problems:
        raise LoadError("\n".join(problems))
    return TransferResources(pair.trules, pair.prefs, pair.ww,
                             interlingual_set(cache[src], cache[tgt]), cache[src], cache[tgt])


# partial candidate: (qlf, trace, gaps, patches)
_Cand = Tuple[Term, Tuple[Term, ...], Tuple[str, ...], Tuple[Tuple[str, str], ...]]


class TransferEngine:
    def __init__(self, res: TransferResources):
        self.res = res
        self.atomic: Dict[str, List[TransferRule]] = {}
        self.structural: Dict[Tuple[str, int], List[TransferRule]] = {}
        self.generic: List[TransferRule] = []
        for r in res.rules:
            if isinstance(r.lhs, Atom):
                self.atomic.setdefault(r.lhs.name, []).append(r)
            elif isinstance(r.lhs, Compound):
                self.structural.setdefault((r.lhs.functor, r.lhs.arity), []).append(r)
            else:
                self.generic.append(r)
        self.memo: Dict[Term, List[_Cand]] = {}

    # -- recursive candidate enumeration ---------------------------------

    def candidates(self, t: Term) -> List[_Cand]:
        if t not in self.memo:
            self.memo[t] = self._candidates(t)
        return self.memo[t]

    def _candidates(self, t: Term) -> List[_Cand]:
        if isinstance(t, (Var, Int)):
            return [(t, (), (), ())]
        out: List[_Cand] = []
        key = (t.functor, t.arity) if isinstance(t, Compound) else None
        rules = list(self.structural.get(key, ())) if key else []
        for r in rules + self.generic:
            out.extend(self._apply_rule(r, t))
        if isinstance(t, Atom):
            out.extend(self._atom_options(t.name, allow_fallback=not out, as_functor=False))
            return out
        functor_opts = self._atom_options(t.functor, allow_fallback=False)
        if not functor_opts and not out:
            functor_opts = self._atom_options(t.functor, allow_fallback=True)
        if functor_opts:
            arg_cands = [self.candidates(a) for a in t.args]
            for f, combo in itertools.product(functor_opts, itertools.product(*arg_cands)):
                fq, ftrace, fgaps, fpatch = f
                out.append((
                    Compound(head_name(fq), tuple(c[0] for c in combo)),
                    ftrace + tuple(x for c in combo for x in c[1]),
                    fgaps + tuple(x for c in combo for x in c[2]),
                    fpatch + tuple(x for c in combo for x in c[3]),
                ))
        return out

    def _atom_options(self, name: str, allow_fallback: bool, as_functor: bool = True) -> List[_Cand]:
        """Translations of a bare constant (an atom or a compound's functor)."""
        rules = self.atomic.get(name, [])
        if as_functor:
            rules = [r for r in rules if isinstance(r.rhs, Atom)]
        if rules:
            return [(r.rhs, (r.id,), (), ()) for r in rules]
        if name in self.res.interlingual:
            return [(Atom(name), (), (), ())]
        if not allow_fallback:
            return []
        patched = self.ww_patch(name)
        if patched:
            return patched
        return [(Atom(name), (), (name,), ())]

    def _apply_rule(self, rule: TransferRule, t: Term) -> List[_Cand]:
        salt = fresh_salt()
        lhs = rename_apart(rule.lhs, salt)
        sigma = match(lhs, t)
        if sigma is None:
            return []
        rhs = rename_apart(rule.rhs, salt)
        markers: List[Term] = []
        _collect_markers(rhs, sigma, markers)
        results = []
        for combo in itertools.product(*(self.candidates(m) for m in markers)):
            it = iter(combo)
            q = _fill_markers(rhs, sigma, it)
            results.append((
                q,
                (rule.id,) + tuple(x for c in combo for x in c[1]),
                tuple(x for c in combo for x in c[2]),
                tuple(x for c in combo for x in c[3]),
            ))
        return results

    # -- word-to-word patching ------------------------------------------

    def ww_patch(self, sense: str) -> List[_Cand]:
        src, tgt = self.res.source, self.res.target
        if src is None or tgt is None or not self.res.ww:
            return []
        keys = []
        for w in src.words:
            if w.sense == sense:
                k = (w.surface, src.coarse_tag(w.category))
                if k not in keys:
                    keys.append(k)
        rule = next((r for r in self.res.ww if (r.surface, r.cat) in keys), None)
        if rule is None:
            return []
        out: List[_Cand] = []
        for alt in rule.targets:
            senses = []
            for w in tgt.words_for(alt):
                if tgt.coarse_tag(w.category) == rule.cat and w.sense not in senses:
                    senses.append(w.sense)
            for s in senses:
                out.append((Atom(s), (), (), ((rule.surface, alt),)))
        return out


def _collect_markers(t: Term, sigma, out: List[Term]) -> None:
    if isinstance(t, Compound):
        if t.functor == "tr" and t.arity == 1 and isinstance(t.args[0], Var):
            out.append(sigma.get(t.args[0].name, t.args[0]))
            return
        for a in t.args:
            _collect_markers(a, sigma, out)


def _fill_markers(t: Term, sigma, it) -> Term:
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    if isinstance(t, Compound):
        if t.functor == "tr" and t.arity == 1 and isinstance(t.args[0], Var):
            return next(it)[0]
        return Compound(t.functor, tuple(_fill_markers(a, sigma, it) for a in t.args))
    return t


def score_of(trace: Iterable[Term], prefs: PrefModel) -> Fraction:
    total = Fraction(0)
    for rid in trace:
        total += prefs.weight(rid)
    return total


def rank(candidates: Sequence[TransferResult], prefs: Optional[PrefModel] = None) -> List[TransferResult]:
    """Best first: score descending, then trace in lexicographic order."""
    return sorted(candidates, key=lambda c: (-c.score, c.trace_key()))


def transfer(qlf: Term, res: TransferResources, limit: Optional[int] = None,
             engine: Optional[TransferEngine] = None) -> List[TransferResult]:
    engine = engine or TransferEngine(res)
    seen = set()
    results = []
    for q, trace, gaps, patches in engine.candidates(qlf):
        key = (q, trace)
        if key in seen:
            continue
        seen.add(key)
        results.append(TransferResult(q, score_of(trace, res.prefs), trace, gaps, patches))
    ranked = rank(results)
    return ranked if limit is None else ranked[:limit]


# ---------------------------------------------------------------------------
# Sentence-level pipeline

@dataclass
class Translation:
    source: str
    target: str
    route: str  # "qlf", "ww" or "none"
    score: Fraction = Fraction(0)
    gaps: Tuple[str, ...] = ()
    parses: int = 0
    candidates: List[TransferResult] = field(default_factory=list)

    @property
    def covered(self) -> bool:
        return any(c.complete for c in self.candidates)

    def render(self) -> str:
        lines = [f"src: {self.source}", f"tgt: {self.target}",
                 f"score: {format_weight(self.score)}", f"route: {self.route}"]
        if self.gaps:
            lines.append("gaps: " + " ".join(f"[gap: {g}]" for g in self.gaps))
        return "\n".join(lines)


def ww_surface(tokens: Sequence[str], ww: Sequence[WWRule]) -> str:
    """Word-by-word backup translation; untranslatable tokens become gap markers."""
    out = []
    for tok in tokens:
        rule = next((r for r in ww if r.surface == tok and r.targets), None)
        out.append(rule.targets[0] if rule else f"[gap: {tok}]")
    return " ".join(out)


def translate_sentence(text: str, res: TransferResources, limit: Optional[int] = None,
                       depth: int = DEFAULT_DEPTH) -> Translation:
    assert res.source is not None and res.target is not None
    tokens = tokenize(text)
    qlfs = parse(tokens, res.source)
    engine = TransferEngine(res)
    cands: List[TransferResult] = []
    for q in qlfs:
        cands.extend(transfer(q, res, engine=engine))
    cands = rank(cands)
    if limit is not None:
        cands = cands[:limit]
    for c in cands:
        if not c.complete:
            continue
        sentences = generate(c.qlf, res.target, depth)
        if sentences:
            return Translation(text, sentences[0], "qlf", c.score, (), len(qlfs), cands)
    backup = ww_surface(tokens, res.ww)
    if cands:
        best = cands[0]
        return Translation(text, backup, "ww", best.score, best.gaps, len(qlfs), cands)
    return Translation(text, backup, "ww" if tokens else "none", Fraction(0), (), 0, cands)
