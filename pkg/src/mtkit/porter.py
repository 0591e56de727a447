"""Bootstrapping a closely related language from an existing one.

Two steps. ``scaffold_ww`` turns a source-language corpus into blank
word-to-word rules, one per (surface, coarse tag), each with example
sentences as comments. Once a linguist fills in target surfaces,
``induce_lexicon`` derives a target lexicon plus a set of by-product
transfer rules, and asks for whatever it cannot infer (root form,
inflection class, irregular forms) as fill-in-the-blank answer clauses.
Feeding the answers back and re-running converges to an empty request file.
"""
from __future__ import annotations

import os
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .chart import tokenize
from .lingdata import (
    BUILTIN_REGULAR, FunctionWordEntry, LanguageDescription, LexEntry, LoadError,
    TransferRule, WWRule, expand_lex_entry, quote_text, template_slots,
)
from .terms import Atom, Compound, Term, Var, list_items, parse_clauses, print_term

DEFAULT_EXAMPLES = 3


class PortError(LoadError):
    pass


# ---------------------------------------------------------------------------
# Scaffolding

@dataclass
class WWTemplate:
    surface: str
    cat: str
    examples: List[str] = field(default_factory=list)

    def render(self) -> str:
        lines = [f"% {s}" for s in self.examples]
        lines.append(f"ww({quote_text(self.surface)}, {self.cat}, []).")
        return "\n".join(lines)


@dataclass
class Scaffold:
    templates: List[WWTemplate]
    unknown: List[str]

    def render(self, header: str = "") -> str:
        parts = [f"% {header}"] if header else []
        parts.extend(t.render() for t in self.templates)
        if self.unknown:
            parts.append("% words not in the source lexicon:\n"
                         + "\n".join(f"%   {w}" for w in self.unknown))
        return "\n\n".join(parts) + "\n"


def scaffold_ww(sentences: Iterable[str], desc: LanguageDescription,
                examples: int = DEFAULT_EXAMPLES) -> Scaffold:
    """One blank rule per (surface, coarse tag) seen in the corpus, in first-seen order."""
    templates: "OrderedDict[Tuple[str, str], WWTemplate]" = OrderedDict()
    unknown: List[str] = []
    for sent in sentences:
        sent = sent.strip()
        if not sent:
            continue
        for tok in tokenize(sent):
            items = desc.words_for(tok)
            if not items:
                if tok not in unknown:
                    unknown.append(tok)
                continue
            for item in items:
                key = (tok, desc.coarse_tag(item.category))
                tpl = templates.get(key)
                if tpl is None:
                    tpl = templates[key] = WWTemplate(*key)
                if len(tpl.examples) < examples and sent not in tpl.examples:
                    tpl.examples.append(sent)
    return Scaffold(list(templates.values()), unknown)


# ---------------------------------------------------------------------------
# Answers and requests

@dataclass(frozen=True)
class Answer:
    surface: str
    cat: str
    root: Optional[str]
    paradigm: Optional[str]
    forms: Tuple[Tuple[str, Optional[str]], ...] = ()
    where: str = ""

    def form(self, slot: str) -> Optional[str]:
        return dict(self.forms).get(slot)


def _opt_text(t: Term) -> Optional[str]:
    if isinstance(t, Var):
        return None
    return t.name if isinstance(t, Atom) else print_term(t)


def read_answers(paths: Sequence[str]) -> Dict[Tuple[str, str], Answer]:
    """Answer clauses keyed by (target surface, tag); later files win."""
    out: Dict[Tuple[str, str], Answer] = {}
    for path in paths:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise PortError(f"cannot read answers {path}: {e.strerror}") from None
        try:
            clauses = parse_clauses(text, source=path)
        except ValueError as e:
            raise PortError(str(e)) from None
        for t, line in clauses:
            where = f"{path}:{line}"
            if not (isinstance(t, Compound) and t.functor == "answer" and t.arity == 5):
                raise PortError(f"{where}: expected answer(Surface, Tag, Root, Paradigm, Forms)")
            surface, cat, root, paradigm, forms = t.args
            if not isinstance(surface, Atom) or not isinstance(cat, Atom):
                raise PortError(f"{where}: surface and tag must be given")
            pairs = []
            try:
                items = list_items(forms)
            except ValueError as e:
                raise PortError(f"{where}: {e}") from None
            for item in items:
                if not (isinstance(item, Compound) and item.functor == "=" and item.arity == 2
                        and isinstance(item.args[0], Atom)):
                    raise PortError(f"{where}: irregular form must be Slot=Form")
                pairs.append((item.args[0].name, _opt_text(item.args[1])))
            out[(surface.name, cat.name)] = Answer(
                surface.name, cat.name, _opt_text(root), _opt_text(paradigm), tuple(pairs), where)
    return out


@dataclass
class InfoRequest:
    surface: str
    cat: str
    root: Optional[str]
    paradigm: Optional[str]
    missing_forms: List[str]
    sources: List[str]

    def render(self) -> str:
        root = quote_text(self.root) if self.root else "Root"
        paradigm = self.paradigm or "Paradigm"
        forms = ", ".join(f"{s}=Form_{s}" for s in self.missing_forms)
        lines = [f"% {src}" for src in self.sources]
        lines.append(f"answer({quote_text(self.surface)}, {self.cat}, {root}, {paradigm}, [{forms}]).")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Lexicon induction

@dataclass
class PortResult:
    lang: str
    fw: List[FunctionWordEntry]
    lex: List[LexEntry]
    irregular: List[Tuple[str, str, str]]  # (sense, slot, form)
    trules: List[TransferRule]
    requests: List[InfoRequest]
    notes: List[str]

    def lexicon_text(self) -> str:
        lines = ["% function words"]
        lines += [f"fw({self.lang}, {quote_text(e.surface)}, {print_term(e.category)})." for e in self.fw]
        lines.append("% content words")
        lines += [f"lex({self.lang}, {e.macro}, {quote_text(e.surface)}, {e.sense}, {e.infl_class})."
                  for e in self.lex]
        if self.irregular:
            lines.append("% irregular forms")
            lines += [f"irregular({self.lang}, {sense}, {slot}, {quote_text(form)})."
                      for sense, slot, form in self.irregular]
        return "\n".join(lines) + "\n"

    def trules_text(self) -> str:
        return "".join(r.to_clause() + "\n" for r in self.trules)

    def requests_text(self) -> str:
        if not self.requests:
            return ""
        head = (f"% {len(self.requests)} open request(s). Replace each variable with the "
                "answer and pass this file back as an answers file.\n\n")
        return head + "\n\n".join(r.render() for r in self.requests) + "\n"

    def files(self) -> Dict[str, str]:
        return {"lexicon.tgt": self.lexicon_text(), "trules.byproduct": self.trules_text(),
                "requests.txt": self.requests_text()}


def _source_indexes(src: LanguageDescription):
    fw_index: Dict[Tuple[str, str], List[FunctionWordEntry]] = {}
    for e in src.fw:
        fw_index.setdefault((e.surface, src.coarse_tag(e.category)), []).append(e)
    lex_index: Dict[Tuple[str, str], List[LexEntry]] = {}
    for e in src.lex:
        for surface, cat in expand_lex_entry(e, src.lexmacros, src.paradigms, src.irregular):
            bucket = lex_index.setdefault((surface, src.coarse_tag(cat)), [])
            if e not in bucket:
                bucket.append(e)
    return fw_index, lex_index


def _used_slots(macro_name: str, tgt: LanguageDescription) -> List[str]:
    macro = tgt.lexmacros.get(macro_name)
    if macro is None:
        raise PortError(f"target {tgt.lang} has no paradigm macro {macro_name}")
    slots: List[str] = []
    for tpl in macro.templates:
        for s in template_slots(tpl):
            if s not in slots:
                slots.append(s)
    return slots


def _needed_forms(macro_name: str, paradigm: str, tgt: LanguageDescription) -> List[str]:
    if paradigm == BUILTIN_REGULAR:
        return []
    if paradigm not in tgt.paradigms:
        raise PortError(f"unknown target paradigm {paradigm} for {tgt.lang}")
    irregular = set(tgt.paradigms[paradigm].irregular_slots)
    return [s for s in _used_slots(macro_name, tgt) if s in irregular]


def induce_lexicon(src: LanguageDescription, tgt: LanguageDescription, ww: Sequence[WWRule],
                   answers: Mapping[Tuple[str, str], Answer],
                   interlingual: Iterable[str]) -> PortResult:
    """Derive the target lexicon and by-product rules from filled WW rules.

    ``tgt`` supplies the target's paradigm macros and inflection classes; its
    own lexicon is ignored. Function words copy their category; content words
    copy the source paradigm macro and need a root and inflection class.
    """
    fw_index, lex_index = _source_indexes(src)
    fw_out: List[FunctionWordEntry] = []
    fw_seen = set()
    # per source entry: distinct (root, paradigm, forms) in first-seen order
    content: "OrderedDict[LexEntry, List[Tuple[str, str, Tuple[Tuple[str, str], ...]]]]" = OrderedDict()
    requests: "OrderedDict[Tuple[str, str], InfoRequest]" = OrderedDict()
    notes: List[str] = []

    for rule in ww:
        key = (rule.surface, rule.cat)
        fws, lexes = fw_index.get(key, []), lex_index.get(key, [])
        if not fws and not lexes:
            notes.append(f"no source word {rule.surface}/{rule.cat}")
            continue
        for target in rule.targets:
            for e in fws:
                k = (target, print_term(e.category))
                if k not in fw_seen:
                    fw_seen.add(k)
                    fw_out.append(FunctionWordEntry(tgt.lang, target, e.category))
            for e in lexes:
                variant = _resolve(e, target, rule.cat, answers, tgt, requests)
                if variant is None:
                    continue
                bucket = content.setdefault(e, [])
                if variant not in bucket:
                    bucket.append(variant)

    lex_out: List[LexEntry] = []
    irregular: List[Tuple[str, str, str]] = []
    byproduct: List[TransferRule] = []
    for e, variants in content.items():
        for n, (root, paradigm, forms) in enumerate(variants, start=1):
            sense = f"{e.sense}_{tgt.tag}" + (f"_{n}" if n > 1 else "")
            lex_out.append(LexEntry(tgt.lang, e.macro, root, sense, paradigm))
            irregular.extend((sense, slot, form) for slot, form in forms)
            byproduct.append(TransferRule(Compound("port", (Atom(e.sense), Atom(sense))),
                                          Atom(e.sense), Atom(sense)))

    identity = [TransferRule(Compound("ident", (Atom(c),)), Atom(c), Atom(c))
                for c in sorted(interlingual) if not c.startswith("$")]
    return PortResult(tgt.lang, fw_out, lex_out, irregular, identity + byproduct,
                      list(requests.values()), notes)


def _resolve(e: LexEntry, target: str, cat: str, answers: Mapping[Tuple[str, str], Answer],
             tgt: LanguageDescription, requests: Dict[Tuple[str, str], InfoRequest]):
    """(root, paradigm, forms) for one target word, or None after filing a request."""
    if e.infl_class == BUILTIN_REGULAR:
        return (target, BUILTIN_REGULAR, ())
    ans = answers.get((target, cat))
    root = ans.root if ans else None
    paradigm = ans.paradigm if ans else None
    missing: List[str] = []
    forms: List[Tuple[str, str]] = []
    if paradigm is not None:
        try:
            needed = _needed_forms(e.macro, paradigm, tgt)
        except PortError as err:
            where = f"{ans.where}: " if ans and ans.where else ""
            raise PortError(f"{where}{err}") from None
        for slot in needed:
            form = ans.form(slot) if ans else None
            if form is None:
                missing.append(slot)
            else:
                forms.append((slot, form))
    if root is not None and paradigm is not None and not missing:
        return (root, paradigm, tuple(forms))
    req = requests.get((target, cat))
    source = f"{target} ({cat}) translates {e.surface}: {e.macro} {e.sense}"
    if req is None:
        requests[(target, cat)] = InfoRequest(target, cat, root, paradigm, missing, [source])
    elif source not in req.sources:
        req.sources.append(source)
    return None


def port_fixpoint(src: LanguageDescription, tgt: LanguageDescription, ww: Sequence[WWRule],
                  answer_rounds: Sequence[Sequence[str]], interlingual: Iterable[str]
                  ) -> Tuple[PortResult, List[int]]:
    """Re-run induction with answer files accumulated round by round.

    Round ``i`` sees the answer files of rounds ``0..i``. Stops at the first
    round with no open requests; returns the last result and the open-request
    count after each round (starting with the round that has no answers).
    """
    interlingual = frozenset(interlingual)
    counts: List[int] = []
    paths: List[str] = []
    result = induce_lexicon(src, tgt, ww, {}, interlingual)
    counts.append(len(result.requests))
    for files in answer_rounds:
        if not result.requests:
            break
        paths.extend(files)
        result = induce_lexicon(src, tgt, ww, read_answers(paths), interlingual)
        counts.append(len(result.requests))
    return result, counts


def write_port_outputs(result: PortResult, out_dir: str) -> List[str]:
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for name, text in result.files().items():
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        written.append(path)
    return written
