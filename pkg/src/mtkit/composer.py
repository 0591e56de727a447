"""Off-line composition of transfer rule sets (L1->L2 with L2->L3 gives L1->L3).

A pair of rules composes when the first rule's output, with every
recursive-translation marker ``tr(X)`` replaced by a fresh placeholder,
unifies with the second rule's input. Each placeholder must stay a plain
variable under the unifier, and the second rule may only use that variable
under a marker; the composed rule then translates ``X`` recursively with the
composed rule set. Pairs that fail any condition are reported, never
silently dropped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from .lingdata import BlockDecl, PrefModel, TransferRule, format_weight
from .terms import (
    Atom, Compound, Term, Var, apply_subst, canonical, fresh_salt,
    print_term, rename_apart, term_vars, unify, variant_key,
)

NO_UNIFY = "no-unify"
OPAQUE = "opaque-intermediate"
RAW_VAR = "raw-intermediate-variable"
BLOCKED = "blocked"
SKIP_REASONS = (NO_UNIFY, OPAQUE, RAW_VAR, BLOCKED)


@dataclass(frozen=True)
class ComposedRule:
    rule: TransferRule
    left: Term
    right: Term

    @property
    def id(self) -> Term:
        return self.rule.id


@dataclass(frozen=True)
class SkipDiagnostic:
    left: Term
    right: Term
    reason: str

    def line(self) -> str:
        return f"{print_term(self.left)}\t{print_term(self.right)}\t{self.reason}"


Outcome = Union[ComposedRule, SkipDiagnostic]


def composed_id(id1: Term, id2: Term) -> Term:
    return Compound("c", (id1, id2))


def _is_marker(t: Term) -> bool:
    return isinstance(t, Compound) and t.functor == "tr" and t.arity == 1


def _replace_markers(t: Term, salt: int, pairs: List[Tuple[Term, Var]]) -> Term:
    if isinstance(t, Compound):
        if _is_marker(t):
            m = Var(f"_M{len(pairs)}_{salt}")
            pairs.append((t.args[0], m))
            return m
        return Compound(t.functor, tuple(_replace_markers(a, salt, pairs) for a in t.args))
    return t


def _rewrite_markers(t: Term, mapping: Dict[str, Term], bad: List[str]) -> Term:
    if isinstance(t, Compound):
        if _is_marker(t):
            inner = t.args[0]
            if isinstance(inner, Var) and inner.name in mapping:
                return Compound("tr", (mapping[inner.name],))
            bad.append(OPAQUE)
            return t
        return Compound(t.functor, tuple(_rewrite_markers(a, mapping, bad) for a in t.args))
    return t


def _raw_vars(t: Term) -> List[str]:
    """Variables of ``t`` occurring outside any tr marker."""
    if isinstance(t, Var):
        return [t.name]
    if isinstance(t, Compound) and not _is_marker(t):
        return [v for a in t.args for v in _raw_vars(a)]
    return []


def _finish(r1: TransferRule, r2: TransferRule, lhs: Term, rhs: Term) -> Outcome:
    if not set(term_vars(rhs)) <= set(term_vars(lhs)):
        return SkipDiagnostic(r1.id, r2.id, RAW_VAR)
    both = canonical(Compound("$rule", (lhs, rhs)), prefix="X")
    rule = TransferRule(composed_id(r1.id, r2.id), both.args[0], both.args[1])
    return ComposedRule(rule, r1.id, r2.id)


def compose_pair(r1: TransferRule, r2: TransferRule) -> Outcome:
    """Compose one rule of the first set with one rule of the second."""
    if r1.is_atomic and r2.is_atomic:
        if r1.rhs == r2.lhs:
            return ComposedRule(TransferRule(composed_id(r1.id, r2.id), r1.lhs, r2.rhs), r1.id, r2.id)
        return SkipDiagnostic(r1.id, r2.id, NO_UNIFY)

    s1, s2 = fresh_salt(), fresh_salt()
    a, b = rename_apart(r1.lhs, s1), rename_apart(r1.rhs, s1)
    c, d = rename_apart(r2.lhs, s2), rename_apart(r2.rhs, s2)

    pairs: List[Tuple[Term, Var]] = []
    b_open = _replace_markers(b, s1, pairs)
    sigma = unify(b_open, c)
    if sigma is None:
        return _compose_congruence(r1, r2, a, b, c, d)

    mapping: Dict[str, Term] = {}
    for x, m in pairs:
        v = sigma.get(m.name, m)
        x_inst = apply_subst(sigma, x)
        if not isinstance(v, Var) or not isinstance(x_inst, Var) or v.name in mapping:
            return SkipDiagnostic(r1.id, r2.id, OPAQUE)
        mapping[v.name] = x_inst
    lhs = apply_subst(sigma, a)
    if set(mapping) & set(term_vars(lhs)):
        return SkipDiagnostic(r1.id, r2.id, RAW_VAR)
    d_inst = apply_subst(sigma, d)
    if set(mapping) & set(_raw_vars(d_inst)):
        return SkipDiagnostic(r1.id, r2.id, RAW_VAR)
    bad: List[str] = []
    rhs = _rewrite_markers(d_inst, mapping, bad)
    if bad:
        return SkipDiagnostic(r1.id, r2.id, bad[0])
    return _finish(r1, r2, lhs, rhs)


def _compose_congruence(r1: TransferRule, r2: TransferRule, a: Term, b: Term,
                        c: Term, d: Term) -> Outcome:
    """Composition through a functor translated by an atomic rule.

    The transfer engine translates ``f(t1..tn)`` by mapping ``f`` with an
    atomic rule and each ``ti`` recursively. Unfolding that step covers two
    cases the plain unification route cannot: the first rule yields
    ``f(tr(X1),...)`` and the second maps ``f`` atomically, or the first maps
    ``f`` atomically and the second consumes ``f(Y1,...,Yn)``.
    """
    if isinstance(b, Compound) and isinstance(c, Atom) and isinstance(d, Atom) and b.functor == c.name:
        if all(_is_marker(x) and isinstance(x.args[0], Var) for x in b.args):
            return _finish(r1, r2, a, Compound(d.name, b.args))
        return SkipDiagnostic(r1.id, r2.id, OPAQUE)
    if isinstance(a, Atom) and isinstance(b, Atom) and isinstance(c, Compound) and c.functor == b.name:
        names = [x.name for x in c.args if isinstance(x, Var)]
        if len(names) != c.arity or len(set(names)) != len(names):
            return SkipDiagnostic(r1.id, r2.id, OPAQUE)
        if set(names) & set(_raw_vars(d)):
            return SkipDiagnostic(r1.id, r2.id, RAW_VAR)
        return _finish(r1, r2, Compound(a.name, c.args), d)
    return SkipDiagnostic(r1.id, r2.id, NO_UNIFY)


@dataclass
class Composition:
    rules: List[ComposedRule]
    diagnostics: List[SkipDiagnostic]
    pairs: int

    @property
    def transfer_rules(self) -> List[TransferRule]:
        return [c.rule for c in self.rules]


def compose_rulesets(r12: Sequence[TransferRule], r23: Sequence[TransferRule],
                     blocks: Sequence[BlockDecl] = ()) -> Composition:
    """Attempt every pair; blocked or failed pairs become diagnostics."""
    rules: List[ComposedRule] = []
    diags: List[SkipDiagnostic] = []
    seen = set()
    for r1 in r12:
        for r2 in r23:
            out = compose_pair(r1, r2)
            if isinstance(out, ComposedRule):
                if any(b.blocks(out.rule) for b in blocks):
                    out = SkipDiagnostic(r1.id, r2.id, BLOCKED)
                else:
                    key = (print_term(out.left), print_term(out.right),
                           variant_key(Compound("$rule", (out.rule.lhs, out.rule.rhs))))
                    if key in seen:
                        continue
                    seen.add(key)
            (rules if isinstance(out, ComposedRule) else diags).append(out)
    return Composition(rules, diags, len(r12) * len(r23))


def compose_prefs(p12: PrefModel, p23: PrefModel, r13: Sequence[ComposedRule]) -> PrefModel:
    weights = {}
    for c in r13:
        weights[print_term(c.id)] = p12.weight(c.left) + p23.weight(c.right)
    return PrefModel(weights)


def composition_files(comp: Composition, prefs: PrefModel, header: str = "",
                      extra: Sequence[TransferRule] = ()) -> Dict[str, str]:
    """Text of ``trules.composed``, ``prefs.composed`` and ``diagnostics.txt``."""
    head = [f"% {line}" for line in header.splitlines()] if header else []
    trules = head + [c.rule.to_clause() for c in comp.rules]
    if extra:
        trules.append("% hand-coded additions")
        trules.extend(r.to_clause() for r in extra)
    pref_lines = head + [f"pref({print_term(c.id)}, {format_weight(prefs.weight(c.id))})."
                         for c in comp.rules]
    diag_lines = [d.line() for d in comp.diagnostics]
    return {
        "trules.composed": "\n".join(trules) + "\n",
        "prefs.composed": "\n".join(pref_lines) + "\n",
        "diagnostics.txt": "\n".join(diag_lines) + ("\n" if diag_lines else ""),
    }

