"""Shared test helpers: random terms and independent reference implementations."""
import random
from typing import Dict, Iterable, List, Optional, Set, Tuple

from mtkit.lingdata import LanguageDescription
from mtkit.terms import Atom, Compound, Int, Term, Var

ATOMS = ("a", "b", "c", "d")
FUNCTORS = (("f", 1), ("g", 2), ("h", 3), ("k", 2))
VARS = ("X", "Y", "Z", "W", "U")


def random_term(rng: random.Random, depth: int = 3, vars=VARS) -> Term:
    r = rng.random()
    if depth == 0 or r < 0.3:
        leaf = rng.random()
        if leaf < 0.45:
            return Var(rng.choice(vars))
        if leaf < 0.9:
            return Atom(rng.choice(ATOMS))
        return Int(rng.randint(0, 3))
    name, arity = rng.choice(FUNCTORS)
    return Compound(name, tuple(random_term(rng, depth - 1, vars) for _ in range(arity)))


def instantiate(rng: random.Random, t: Term, depth: int = 2) -> Term:
    """Replace each variable of ``t`` (consistently) by a random term or leave it."""
    table: Dict[str, Term] = {}

    def go(x: Term) -> Term:
        if isinstance(x, Var):
            if x.name not in table:
                table[x.name] = x if rng.random() < 0.3 else random_term(rng, depth, ("P", "Q", "R"))
            return table[x.name]
        if isinstance(x, Compound):
            return Compound(x.functor, tuple(go(a) for a in x.args))
        return x

    return go(t)


# --- textbook unification (Robinson, substitution composition) ------------

def ref_subst(s: Dict[str, Term], t: Term) -> Term:
    if isinstance(t, Var):
        return s.get(t.name, t)
    if isinstance(t, Compound):
        return Compound(t.functor, tuple(ref_subst(s, a) for a in t.args))
    return t


def _occurs(name: str, t: Term) -> bool:
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, Compound):
        return any(_occurs(name, a) for a in t.args)
    return False


def ref_unify(t1: Term, t2: Term) -> Optional[Dict[str, Term]]:
    s: Dict[str, Term] = {}
    todo: List[Tuple[Term, Term]] = [(t1, t2)]
    while todo:
        a, b = todo.pop()
        a, b = ref_subst(s, a), ref_subst(s, b)
        if a == b:
            continue
        if isinstance(b, Var) and not isinstance(a, Var):
            a, b = b, a
        if isinstance(a, Var):
            if _occurs(a.name, b):
                return None
            one = {a.name: b}
            s = {k: ref_subst(one, v) for k, v in s.items()}
            s[a.name] = b
            continue
        if (isinstance(a, Compound) and isinstance(b, Compound)
                and a.functor == b.functor and len(a.args) == len(b.args)):
            todo.extend(zip(a.args, b.args))
            continue
        return None
    return s


# --- relational composition --------------------------------------------------

def relational_compose(r12: Iterable[Tuple[str, str]], r23: Iterable[Tuple[str, str]]) -> Set[Tuple[str, str]]:
    r23 = list(r23)
    return {(a, c) for a, b in r12 for b2, c in r23 if b == b2}


# --- QLF instance enumeration -----------------------------------------------

def content_senses_by_tag(desc: LanguageDescription) -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {}
    for w in desc.words:
        if w.origin != "lex":
            continue
        bucket = out.setdefault(desc.coarse_tag(w.category), [])
        if w.sense not in bucket:
            bucket.append(w.sense)
    return out


def _replace_atom(t: Term, old: str, new: str) -> Term:
    if isinstance(t, Atom):
        return Atom(new) if t.name == old else t
    if isinstance(t, Compound):
        f = new if t.functor == old else t.functor
        return Compound(f, tuple(_replace_atom(a, old, new) for a in t.args))
    return t


def _names(t: Term) -> List[str]:
    if isinstance(t, Atom):
        return [t.name]
    if isinstance(t, Compound):
        return [t.functor] + [n for a in t.args for n in _names(a)]
    return []


def enumerate_instances(seeds: Iterable[Term], desc: LanguageDescription) -> List[Term]:
    """Seeds plus every variant obtained by swapping one content sense for another of the same tag."""
    by_tag = content_senses_by_tag(desc)
    tag_of = {s: tag for tag, senses in by_tag.items() for s in senses}
    out: Dict[Term, None] = {}
    for q in seeds:
        out.setdefault(q, None)
        for name in dict.fromkeys(_names(q)):
            tag = tag_of.get(name)
            if tag is None:
                continue
            for other in by_tag[tag]:
                out.setdefault(_replace_atom(q, name, other), None)
    return list(out)
