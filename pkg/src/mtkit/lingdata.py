"""Loading and expansion of linguistic resources.

Resource files are clause files in the term syntax. A manifest maps each
language to the files that describe it and each language pair to its
transfer resources. Loading a language filters the shared grammar by the
``languages`` field of each rule, expands ``$macro(Name)`` nodes with the
language's expansion, and inflects every content-word entry through its
paradigm macro.
"""
from __future__ import annotations

import os
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .terms import (
    Atom, Compound, Int, Term, Var, atoms_and_functors,
    list_items, parse_clauses, print_term, term_vars,
)


class LoadError(Exception):
    """A resource file or manifest could not be loaded."""


class InflectionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Domain types

@dataclass(frozen=True)
class GrammarRule:
    id: str
    languages: Optional[Tuple[str, ...]]  # None means all languages
    mother: Term
    daughters: Tuple[Term, ...]
    where: str = ""

    def applies_to(self, lang: str) -> bool:
        return self.languages is None or lang in self.languages


@dataclass(frozen=True)
class LangMacro:
    name: str
    expansions: Mapping[str, Term]


@dataclass(frozen=True)
class FunctionWordEntry:
    lang: str
    surface: str
    category: Term

    @property
    def sense(self) -> str:
        return sense_of(self.category)


@dataclass(frozen=True)
class ParadigmMacro:
    name: str
    lang: str
    templates: Tuple[Term, ...]


@dataclass(frozen=True)
class LexEntry:
    lang: str
    macro: str
    surface: str
    sense: str
    infl_class: str
    where: str = ""


@dataclass(frozen=True)
class SuffixSpec:
    drop: int
    suffix: str

    def apply(self, root: str) -> str:
        if self.drop > len(root):
            raise InflectionError(f"cannot drop {self.drop} characters from {root!r}")
        return root[: len(root) - self.drop] + self.suffix


IRREGULAR = "irregular"


@dataclass(frozen=True)
class InflParadigm:
    name: str
    lang: str
    slots: Mapping[str, object]  # slot -> SuffixSpec | IRREGULAR
    irregular: Mapping[Tuple[str, str], str] = field(default_factory=dict)

    @property
    def irregular_slots(self) -> List[str]:
        return [s for s, spec in self.slots.items() if spec == IRREGULAR]


@dataclass(frozen=True)
class TransferRule:
    id: Term
    lhs: Term
    rhs: Term
    where: str = ""

    @property
    def is_atomic(self) -> bool:
        return isinstance(self.lhs, Atom) and isinstance(self.rhs, Atom)

    def to_clause(self) -> str:
        return f"trule({print_term(self.id)}, {print_term(self.lhs)}, {print_term(self.rhs)})."


@dataclass(frozen=True)
class WWRule:
    surface: str
    cat: str
    targets: Tuple[str, ...]


class PrefModel:
    """Rule id -> weight; unlisted rules weigh 0."""

    def __init__(self, weights: Optional[Mapping[str, Fraction]] = None):
        self.weights: Dict[str, Fraction] = dict(weights or {})

    def weight(self, rule_id: Term) -> Fraction:
        return self.weights.get(print_term(rule_id), Fraction(0))

    def __len__(self) -> int:
        return len(self.weights)

    def scaled(self, factor: Fraction) -> "PrefModel":
        return PrefModel({k: v * factor for k, v in self.weights.items()})


@dataclass(frozen=True)
class BlockDecl:
    kind: str  # "id" or "pair"
    args: Tuple[Term, ...]

    def blocks(self, rule: TransferRule) -> bool:
        if self.kind == "id":
            return rule.id == self.args[0]
        lhs_head, rhs_head = (Atom(head_name(rule.lhs)), Atom(head_name(rule.rhs)))
        return self.args == (lhs_head, rhs_head)


@dataclass(frozen=True)
class LexicalItem:
    """One surface form with one lexical category (what the parser sees)."""
    surface: str
    category: Term
    sense: str
    origin: str  # "fw" or "lex"


def head_name(t: Term) -> str:
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Compound):
        return t.functor
    return print_term(t)


def sense_of(category: Term) -> str:
    """The sense constant sits in the last argument of a category."""
    if isinstance(category, Compound):
        return head_name(category.args[-1])
    return head_name(category)


def format_weight(w: Fraction) -> str:
    """Render a weight as a plain decimal when it has a finite expansion."""
    num, den = w.numerator, w.denominator
    d = den
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d != 1:
        return repr(float(w))
    if den == 1:
        return f"{num}.0"
    digits = 0
    while (w * 10 ** digits).denominator != 1:
        digits += 1
    scaled = abs(num) * 10 ** digits // den
    s = str(scaled).rjust(digits + 1, "0")
    sign = "-" if w < 0 else ""
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def parse_weight(t: Term, where: str = "") -> Fraction:
    if isinstance(t, Int):
        return Fraction(t.value)
    if isinstance(t, Atom):
        try:
            return Fraction(t.name)
        except (ValueError, ZeroDivisionError):
            pass
    raise LoadError(f"{where}: weight must be a number, got {print_term(t)}")


# ---------------------------------------------------------------------------
# Raw resource reading

@dataclass
class Resources:
    rules: List[GrammarRule] = field(default_factory=list)
    macros: List[Tuple[str, str, Term, str]] = field(default_factory=list)
    fw: List[FunctionWordEntry] = field(default_factory=list)
    lexmacros: List[ParadigmMacro] = field(default_factory=list)
    lex: List[LexEntry] = field(default_factory=list)
    paradigms: List[Tuple[str, str, Dict[str, object], str]] = field(default_factory=list)
    irregulars: List[Tuple[str, str, str, str]] = field(default_factory=list)
    trules: List[TransferRule] = field(default_factory=list)
    ww: List[WWRule] = field(default_factory=list)
    prefs: List[Tuple[Term, Fraction]] = field(default_factory=list)
    blocks: List[BlockDecl] = field(default_factory=list)
    tags: Dict[str, str] = field(default_factory=dict)
    categories: Dict[str, List[str]] = field(default_factory=dict)
    other: List[Tuple[Term, str]] = field(default_factory=list)


def _text(t: Term, where: str) -> str:
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Int):
        return str(t.value)
    raise LoadError(f"{where}: expected text, got {print_term(t)}")


def _atom(t: Term, where: str) -> str:
    if isinstance(t, Atom):
        return t.name
    raise LoadError(f"{where}: expected an atom, got {print_term(t)}")


def _items(t: Term, where: str) -> List[Term]:
    try:
        return list_items(t)
    except ValueError as e:
        raise LoadError(f"{where}: {e}") from None


def parse_suffix_spec(t: Term, where: str) -> object:
    if t == Atom(IRREGULAR):
        return IRREGULAR
    if t == Atom("keep"):
        return SuffixSpec(0, "")
    if isinstance(t, Compound) and t.functor == "+" and t.arity == 2:
        base, suffix = t.args
        suffix_text = _text(suffix, where)
        if base == Atom("keep"):
            return SuffixSpec(0, suffix_text)
        if isinstance(base, Compound) and base.functor == "drop" and base.arity == 1 \
                and isinstance(base.args[0], Int) and base.args[0].value >= 0:
            return SuffixSpec(base.args[0].value, suffix_text)
    raise LoadError(f"{where}: bad suffix spec {print_term(t)}")


def read_resources(paths: Iterable[str], into: Optional[Resources] = None,
                   strict: bool = True) -> Resources:
    res = into if into is not None else Resources()
    for path in paths:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise LoadError(f"cannot read {path}: {e.strerror}") from None
        try:
            clauses = parse_clauses(text, source=path)
        except ValueError as e:
            raise LoadError(str(e)) from None
        for term, line in clauses:
            _dispatch(term, f"{path}:{line}", res, strict)
    return res


def _dispatch(t: Term, where: str, res: Resources, strict: bool) -> None:
    name = t.functor if isinstance(t, Compound) else getattr(t, "name", "")
    args = t.args if isinstance(t, Compound) else ()
    sig = (name, len(args))
    if sig == ("rule", 4):
        rid, langs, mother, daughters = args
        if langs == Atom("all"):
            languages = None
        else:
            languages = tuple(_atom(x, where) for x in _items(langs, where))
        dtrs = tuple(_items(daughters, where)) if not _is_macro(daughters) else (daughters,)
        res.rules.append(GrammarRule(_atom(rid, where), languages, mother, dtrs, where))
    elif sig == ("macro", 3):
        res.macros.append((_atom(args[0], where), _atom(args[1], where), args[2], where))
    elif sig == ("fw", 3):
        res.fw.append(FunctionWordEntry(_atom(args[0], where), _text(args[1], where), args[2]))
    elif sig == ("lexmacro", 3):
        res.lexmacros.append(ParadigmMacro(_atom(args[0], where), _atom(args[1], where),
                                           tuple(_items(args[2], where))))
    elif sig == ("lex", 5):
        res.lex.append(LexEntry(_atom(args[0], where), _atom(args[1], where),
                                _text(args[2], where), _atom(args[3], where),
                                _atom(args[4], where), where))
    elif sig == ("paradigm", 3):
        slots: Dict[str, object] = OrderedDict()
        for item in _items(args[2], where):
            if not (isinstance(item, Compound) and item.functor == "=" and item.arity == 2):
                raise LoadError(f"{where}: paradigm slot must be Slot=Spec, got {print_term(item)}")
            slots[_atom(item.args[0], where)] = parse_suffix_spec(item.args[1], where)
        res.paradigms.append((_atom(args[0], where), _atom(args[1], where), slots, where))
    elif sig == ("irregular", 4):
        res.irregulars.append((_atom(args[0], where), _atom(args[1], where),
                               _atom(args[2], where), _text(args[3], where)))
    elif sig == ("trule", 3):
        res.trules.append(TransferRule(args[0], args[1], args[2], where))
    elif sig == ("ww", 3):
        res.ww.append(WWRule(_text(args[0], where), _atom(args[1], where),
                             tuple(_text(x, where) for x in _items(args[2], where))))
    elif sig == ("pref", 2):
        res.prefs.append((args[0], parse_weight(args[1], where)))
    elif sig == ("block_id", 1):
        res.blocks.append(BlockDecl("id", (args[0],)))
    elif sig == ("block_pair", 2):
        res.blocks.append(BlockDecl("pair", (Atom(_atom(args[0], where)), Atom(_atom(args[1], where)))))
    elif sig == ("tag", 2):
        res.tags[_atom(args[0], where)] = _atom(args[1], where)
    elif sig == ("category", 2):
        res.categories[_atom(args[0], where)] = [_atom(x, where) for x in _items(args[1], where)]
    elif strict:
        raise LoadError(f"{where}: unknown directive {name}/{len(args)}")
    else:
        res.other.append((t, where))


def _is_macro(t: Term) -> bool:
    return isinstance(t, Compound) and t.functor == "$macro" and t.arity == 1


# ---------------------------------------------------------------------------
# Manifest

FILE_KEYS = ("grammar", "macros", "morphology", "fw", "lexicon", "trules", "prefs", "ww", "blocks")


@dataclass
class Manifest:
    path: str
    languages: Dict[str, Dict[str, List[str]]]
    pairs: Dict[Tuple[str, str], Dict[str, List[str]]]

    @property
    def base(self) -> str:
        return os.path.dirname(os.path.abspath(self.path))

    def resolve(self, p: str) -> str:
        return p if os.path.isabs(p) else os.path.join(self.base, p)

    def language(self, lang: str) -> Dict[str, List[str]]:
        if lang not in self.languages:
            raise LoadError(f"manifest {self.path} has no language({lang}, ...) entry")
        return self.languages[lang]

    def pair(self, src: str, tgt: str) -> Dict[str, List[str]]:
        if (src, tgt) not in self.pairs:
            raise LoadError(f"manifest {self.path} has no pair({src}, {tgt}, ...) entry")
        return self.pairs[(src, tgt)]

    def files(self, entry: Mapping[str, List[str]], key: str) -> List[str]:
        return [self.resolve(p) for p in entry.get(key, [])]


def load_manifest(path: str) -> Manifest:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise LoadError(f"cannot read manifest {path}: {e.strerror}") from None
    try:
        clauses = parse_clauses(text, source=path)
    except ValueError as e:
        raise LoadError(str(e)) from None
    languages: Dict[str, Dict[str, List[str]]] = {}
    pairs: Dict[Tuple[str, str], Dict[str, List[str]]] = {}
    for t, line in clauses:
        where = f"{path}:{line}"
        if isinstance(t, Compound) and t.functor == "language" and t.arity == 2:
            languages[_atom(t.args[0], where)] = _options(t.args[1], where)
        elif isinstance(t, Compound) and t.functor == "pair" and t.arity == 3:
            key = (_atom(t.args[0], where), _atom(t.args[1], where))
            pairs[key] = _options(t.args[2], where)
        else:
            raise LoadError(f"{where}: unknown manifest directive {print_term(t)}")
    return Manifest(path, languages, pairs)


def _options(t: Term, where: str) -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {}
    for item in _items(t, where):
        if not (isinstance(item, Compound) and item.functor == "=" and item.arity == 2):
            raise LoadError(f"{where}: manifest option must be key=Value, got {print_term(item)}")
        key = _atom(item.args[0], where)
        val = item.args[1]
        values = _items(val, where) if (isinstance(val, Compound) and val.functor == "$cons") else [val]
        out.setdefault(key, []).extend(_text(v, where) for v in values)
    return out


# ---------------------------------------------------------------------------
# Language descriptions

@dataclass
class LanguageDescription:
    lang: str
    tag: str
    start: str
    rules: List[GrammarRule]
    fw: List[FunctionWordEntry]
    lex: List[LexEntry]
    lexmacros: Dict[str, ParadigmMacro]
    paradigms: Dict[str, InflParadigm]
    irregular: Dict[Tuple[str, str], str]
    tags: Dict[str, str]
    categories: Dict[str, List[str]]
    words: List[LexicalItem]
    source_rule_count: int = 0
    _surface_index: Optional[Dict[str, List[LexicalItem]]] = field(default=None, repr=False, compare=False)

    def coarse_tag(self, category: Term) -> str:
        name = head_name(category)
        return self.tags.get(name, name)

    def words_for(self, surface: str) -> List[LexicalItem]:
        return self._by_surface().get(surface, [])

    def _by_surface(self) -> Dict[str, List[LexicalItem]]:
        cache = self._surface_index
        if cache is None:
            cache = {}
            for w in self.words:
                cache.setdefault(w.surface, []).append(w)
            self._surface_index = cache
        return cache

    def senses(self) -> Dict[str, List[LexicalItem]]:
        out: Dict[str, List[LexicalItem]] = {}
        for w in self.words:
            out.setdefault(w.sense, []).append(w)
        return out


def expand_macros(t: Term, table: Mapping[str, LangMacro], lang: str, owner: str) -> Term:
    if isinstance(t, Compound):
        if _is_macro(t):
            name = print_term(t.args[0])
            macro = table.get(name)
            if macro is None or lang not in macro.expansions:
                raise LoadError(f"no expansion of macro {name} for language {lang} (used in {owner})")
            return expand_macros(macro.expansions[lang], table, lang, owner)
        return Compound(t.functor, tuple(expand_macros(a, table, lang, owner) for a in t.args))
    return t


def _macro_table(res: Resources) -> Dict[str, LangMacro]:
    grouped: Dict[str, Dict[str, Term]] = OrderedDict()
    for name, lang, expansion, where in res.macros:
        per = grouped.setdefault(name, {})
        if lang in per:
            raise LoadError(f"{where}: duplicate expansion of macro {name} for {lang}")
        per[lang] = expansion
    return {k: LangMacro(k, v) for k, v in grouped.items()}


def _check_rule(rule: GrammarRule) -> None:
    if not rule.daughters:
        raise LoadError(f"{rule.where}: rule {rule.id} has no daughters")
    mother = rule.mother
    if isinstance(mother, Compound):
        sem_vars = set(term_vars(mother.args[-1]))
        dtr_vars = set()
        for d in rule.daughters:
            dtr_vars.update(term_vars(d))
        missing = sorted(sem_vars - dtr_vars)
        if missing:
            raise LoadError(f"{rule.where}: rule {rule.id}: semantics variable(s) "
                            f"{', '.join(missing)} not bound by any daughter")


BUILTIN_REGULAR = "regular"


def load_language(manifest: Manifest, lang: str, skip: Sequence[str] = ()) -> LanguageDescription:
    entry = manifest.language(lang)
    paths: List[str] = []
    for key in FILE_KEYS:
        if key in skip:
            continue
        paths.extend(manifest.files(entry, key))
    res = read_resources(paths)
    tag = entry.get("tag", [lang])[0]
    start = entry.get("start", ["s"])[0]
    return build_language(res, lang, tag=tag, start=start)


def build_language(res: Resources, lang: str, tag: str = "", start: str = "s") -> LanguageDescription:
    seen = {}
    for r in res.rules:
        if r.id in seen:
            raise LoadError(f"{r.where}: duplicate rule id {r.id} (first at {seen[r.id]})")
        seen[r.id] = r.where
    table = _macro_table(res)
    rules = []
    for r in res.rules:
        if not r.applies_to(lang):
            continue
        mother = expand_macros(r.mother, table, lang, f"rule {r.id}")
        dtrs: List[Term] = []
        for d in r.daughters:
            e = expand_macros(d, table, lang, f"rule {r.id}")
            if _is_macro(d):
                dtrs.extend(_items(e, r.where))
            else:
                dtrs.append(e)
        expanded = GrammarRule(r.id, r.languages, mother, tuple(dtrs), r.where)
        _check_rule(expanded)
        rules.append(expanded)

    fw = [FunctionWordEntry(e.lang, e.surface, expand_macros(e.category, table, lang, f"fw {e.surface}"))
          for e in res.fw if e.lang == lang]
    lexmacros = {}
    for m in res.lexmacros:
        if m.lang == lang:
            lexmacros[m.name] = ParadigmMacro(
                m.name, m.lang,
                tuple(expand_macros(t, table, lang, f"lexmacro {m.name}") for t in m.templates))
    irregular = {(sense, slot): form for lg, sense, slot, form in res.irregulars if lg == lang}
    paradigms = {name: InflParadigm(name, lg, slots, irregular)
                 for name, lg, slots, where in res.paradigms if lg == lang}
    lex = [e for e in res.lex if e.lang == lang]

    desc = LanguageDescription(
        lang=lang, tag=tag or lang, start=start, rules=rules, fw=fw, lex=lex,
        lexmacros=lexmacros, paradigms=paradigms, irregular=irregular,
        tags=dict(res.tags), categories=dict(res.categories), words=[],
        source_rule_count=len(res.rules),
    )
    words = [LexicalItem(e.surface, e.category, e.sense, "fw") for e in fw]
    for e in lex:
        for surface, cat in expand_lex_entry(e, desc.lexmacros, desc.paradigms, irregular):
            words.append(LexicalItem(surface, cat, e.sense, "lex"))
    desc.words = words
    return desc


# ---------------------------------------------------------------------------
# Inflection and lexical expansion

def paradigm_for(name: str, lang: str, paradigms: Mapping[str, InflParadigm],
                 irregular: Optional[Mapping[Tuple[str, str], str]] = None) -> InflParadigm:
    if name in paradigms:
        return paradigms[name]
    if name == BUILTIN_REGULAR:
        # uninflected class: every slot is the base form
        return InflParadigm(BUILTIN_REGULAR, lang, _KeepAll(), irregular or {})
    raise LoadError(f"unknown inflection paradigm {name} for {lang}")


class _KeepAll(dict):
    def __contains__(self, key) -> bool:
        return True

    def __getitem__(self, key):
        return SuffixSpec(0, "")

    def get(self, key, default=None):
        return SuffixSpec(0, "")


def inflect(root: str, paradigm: InflParadigm, slot: str, sense: str) -> str:
    """Surface form of ``root`` in ``slot``; an irregular override always wins."""
    override = paradigm.irregular.get((sense, slot))
    if override is not None:
        return override
    if slot not in paradigm.slots:
        raise InflectionError(f"paradigm {paradigm.name} has no slot {slot}")
    spec = paradigm.slots[slot]
    if spec == IRREGULAR:
        raise InflectionError(f"slot {slot} of {paradigm.name} is irregular and no form "
                              f"is given for {sense}")
    return spec.apply(root)


def template_slots(template: Term) -> List[str]:
    out: List[str] = []

    def walk(t: Term) -> None:
        if isinstance(t, Compound):
            if t.functor == "$surface" and t.arity == 1:
                out.append(print_term(t.args[0]))
            else:
                for a in t.args:
                    walk(a)

    walk(template)
    return out


def _fill(t: Term, root: str, paradigm: InflParadigm, sense: str) -> Term:
    if isinstance(t, Atom) and t.name == "$sense":
        return Atom(sense)
    if isinstance(t, Compound):
        if t.functor == "$surface" and t.arity == 1:
            return Atom(inflect(root, paradigm, print_term(t.args[0]), sense))
        args = tuple(_fill(a, root, paradigm, sense) for a in t.args)
        if t.functor == "$sense":
            return Compound(sense, args)
        return Compound(t.functor, args)
    return t


def expand_lex_entry(e: LexEntry, macros: Mapping[str, ParadigmMacro],
                     paradigms: Mapping[str, InflParadigm],
                     irregular: Optional[Mapping[Tuple[str, str], str]] = None) -> List[Tuple[str, Term]]:
    """Instantiate each template of the entry's paradigm macro.

    Templates have the shape ``word($surface(Slot), Category)``; the result
    is ``(surface, category)`` per template, in template order.
    """
    macro = macros.get(e.macro)
    if macro is None:
        raise LoadError(f"{e.where}: unknown paradigm macro {e.macro} for {e.lang}")
    paradigm = paradigm_for(e.infl_class, e.lang, paradigms, irregular)
    out = []
    for tpl in macro.templates:
        try:
            filled = _fill(tpl, e.surface, paradigm, e.sense)
        except InflectionError as err:
            raise LoadError(f"{e.where}: {e.surface} ({e.sense}): {err}") from None
        if not (isinstance(filled, Compound) and filled.functor == "word" and filled.arity == 2
                and isinstance(filled.args[0], Atom)):
            raise LoadError(f"{e.where}: template of {e.macro} must expand to word(Surface, Category)")
        out.append((filled.args[0].name, filled.args[1]))
    return out


def count_sense(t: Term, sense: str) -> int:
    return sum(1 for name in atoms_and_functors(t) if name == sense)


# ---------------------------------------------------------------------------
# Pair resources and validation

@dataclass
class PairResources:
    src: str
    tgt: str
    trules: List[TransferRule]
    prefs: PrefModel
    ww: List[WWRule]
    blocks: List[BlockDecl]


def load_pair(manifest: Manifest, src: str, tgt: str) -> PairResources:
    entry = manifest.pair(src, tgt)
    res = Resources()
    for key in ("trules", "prefs", "ww", "blocks"):
        read_resources(manifest.files(entry, key), into=res)
    return PairResources(src, tgt, res.trules, prefs_from(res.prefs), res.ww, res.blocks)


def prefs_from(items: Iterable[Tuple[Term, Fraction]]) -> PrefModel:
    return PrefModel({print_term(rid): w for rid, w in items})


def validate_rulesets(rules: Sequence[TransferRule]) -> List[str]:
    """Diagnostics for ill-formed transfer rules (empty list when all is well)."""
    diags = []
    seen: Dict[str, str] = {}
    for r in rules:
        rid = print_term(r.id)
        if rid in seen:
            diags.append(f"{r.where}: duplicate rule id {rid} (first at {seen[rid]})")
        else:
            seen[rid] = r.where
        lhs_vars = set(term_vars(r.lhs))
        marker_vars = set()
        for inner in tr_markers(r.rhs):
            if not isinstance(inner, Var):
                diags.append(f"{r.where}: rule {rid}: tr marker over non-variable {print_term(inner)}")
                continue
            marker_vars.add(inner.name)
            if inner.name not in lhs_vars:
                diags.append(f"{r.where}: rule {rid}: tr-marker variable {inner.name} not in lhs")
        for v in term_vars(r.rhs):
            if v not in lhs_vars and v not in marker_vars:
                diags.append(f"{r.where}: rule {rid}: rhs variable {v} not in lhs (range restriction)")
    return diags


def tr_markers(t: Term) -> List[Term]:
    """Arguments of every ``tr(_)`` marker in ``t``, left to right."""
    out: List[Term] = []

    def walk(x: Term) -> None:
        if isinstance(x, Compound):
            if x.functor == "tr" and x.arity == 1:
                out.append(x.args[0])
            else:
                for a in x.args:
                    walk(a)

    walk(t)
    return out


def write_clauses(path: str, lines: Iterable[str]) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")


def quote_text(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

