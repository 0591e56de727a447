import os
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import relational_compose
from mtkit.composer import (
    BLOCKED, NO_UNIFY, OPAQUE, RAW_VAR, ComposedRule, SkipDiagnostic, compose_pair,
    compose_prefs, compose_rulesets, composition_files,
)
from mtkit.lingdata import BlockDecl, PrefModel, TransferRule, load_pair, read_resources
from mtkit.terms import Atom, Compound, match, parse_term, print_term

T = parse_term


def rule(rid, lhs, rhs):
    return TransferRule(T(rid), T(lhs), T(rhs))


def same_rule(got: TransferRule, lhs: str, rhs: str) -> bool:
    a = Compound("r", (got.lhs, got.rhs))
    b = Compound("r", (T(lhs), T(rhs)))
    return match(a, b) is not None and match(b, a) is not None


class TestComposePair:
    def test_atomic(self):
        out = compose_pair(rule("r1", "want_sw", "want_en"), rule("r2", "want_en", "vouloir_fr"))
        assert isinstance(out, ComposedRule)
        assert (out.rule.lhs, out.rule.rhs, out.rule.id) == (T("want_sw"), T("vouloir_fr"), T("c(r1, r2)"))

    def test_atomic_mismatch(self):
        out = compose_pair(rule("r1", "a", "b"), rule("r2", "c", "d"))
        assert out == SkipDiagnostic(T("r1"), T("r2"), NO_UNIFY)

    def test_structural(self):
        out = compose_pair(rule("r1", "want(X)", "desire(tr(X))"), rule("r2", "desire(Y)", "souhaiter(tr(Y))"))
        assert same_rule(out.rule, "want(X)", "souhaiter(tr(X))")
        assert print_term(out.rule.rhs) == "souhaiter(tr(X0))"

    def test_opaque_intermediate(self):
        out = compose_pair(rule("r1", "want(X)", "desire(tr(X))"), rule("r2", "desire(happy)", "content"))
        assert out.reason == OPAQUE

    def test_raw_intermediate_variable(self):
        out = compose_pair(rule("r1", "want(X)", "desire(tr(X))"), rule("r2", "desire(Y)", "souhaiter(Y)"))
        assert out.reason == RAW_VAR

    def test_argument_swap_is_tracked(self):
        out = compose_pair(rule("r1", "like(S, O)", "please(tr(O), tr(S))"),
                           rule("r2", "please(A, B)", "plaire(tr(B), tr(A))"))
        assert same_rule(out.rule, "like(S, O)", "plaire(tr(S), tr(O))")

    def test_structure_inside_rhs(self):
        out = compose_pair(rule("r1", "want(S, have(S, O))", "want_en(tr(S), tr(O))"),
                           rule("r2", "want_en(A, B)", "vouloir(tr(A), tr(B))"))
        assert same_rule(out.rule, "want(S, have(S, O))", "vouloir(tr(S), tr(O))")

    def test_functor_mapped_atomically_by_second_rule(self):
        out = compose_pair(rule("r1", "like_sw(S, O)", "like_en(tr(S), tr(O))"), rule("r2", "like_en", "aimer"))
        assert same_rule(out.rule, "like_sw(S, O)", "aimer(tr(S), tr(O))")

    def test_functor_mapped_atomically_by_first_rule(self):
        out = compose_pair(rule("r1", "like_sw", "like_en"), rule("r2", "like_en(S, O)", "please(tr(O), tr(S))"))
        assert same_rule(out.rule, "like_sw(S, O)", "please(tr(O), tr(S))")

    def test_unrelated_structures(self):
        out = compose_pair(rule("r1", "f(X)", "g(tr(X))"), rule("r2", "h(Y)", "k(tr(Y))"))
        assert out.reason == NO_UNIFY


class TestComposeRulesets:
    def test_small_relational(self):
        r12 = [rule("p1", "a", "b"), rule("p2", "a2", "b2")]
        r23 = [rule("q1", "b", "c"), rule("q2", "b2", "c2")]
        comp = compose_rulesets(r12, r23)
        assert {(r.rule.lhs.name, r.rule.rhs.name) for r in comp.rules} == {("a", "c"), ("a2", "c2")}
        assert len(comp.diagnostics) == 2

    def test_block_pair(self):
        comp = compose_rulesets([rule("r1", "want_sw", "want_en")], [rule("r2", "want_en", "vouloir_fr")],
                                [BlockDecl("pair", (Atom("want_sw"), Atom("vouloir_fr")))])
        assert comp.rules == [] and comp.diagnostics[0].reason == BLOCKED

    def test_block_id(self):
        comp = compose_rulesets([rule("r1", "a", "b")], [rule("r2", "b", "c")], [BlockDecl("id", (T("c(r1, r2)"),))])
        assert comp.rules == [] and comp.diagnostics[0].reason == BLOCKED

    def test_empty_second_set(self):
        comp = compose_rulesets([rule("r1", "a", "b")], [])
        assert comp.rules == [] and comp.diagnostics == [] and comp.pairs == 0

    def test_order_is_by_provenance(self):
        r12 = [rule("p1", "a", "b"), rule("p2", "a", "b")]
        r23 = [rule("q1", "b", "c"), rule("q2", "b", "d")]
        ids = [print_term(r.id) for r in compose_rulesets(r12, r23).rules]
        assert ids == ["c(p1, q1)", "c(p1, q2)", "c(p2, q1)", "c(p2, q2)"]


class TestPrefs:
    def test_additive(self):
        comp = compose_rulesets([rule("r1", "a", "b")], [rule("r2", "b", "c")])
        p = compose_prefs(PrefModel({"r1": Fraction(2)}), PrefModel({"r2": Fraction(3, 2)}), comp.rules)
        assert p.weight(T("c(r1, r2)")) == Fraction(7, 2)

    def test_defaults(self):
        comp = compose_rulesets([rule("r1", "a", "b")], [rule("r2", "b", "c")])
        assert compose_prefs(PrefModel(), PrefModel(), comp.rules).weight(T("c(r1, r2)")) == 0

    def test_same_rule_via_two_provenances(self):
        r12 = [rule("r1", "a", "b"), rule("r1b", "a", "b2")]
        r23 = [rule("s1", "b", "c"), rule("s2", "b2", "c")]
        comp = compose_rulesets(r12, r23)
        p = compose_prefs(PrefModel({"r1": Fraction(1)}), PrefModel({"s2": Fraction(4)}), comp.rules)
        assert [(print_term(r.id), p.weight(r.id)) for r in comp.rules] == [
            ("c(r1, s1)", Fraction(1)), ("c(r1b, s2)", Fraction(4))]


def test_output_files_format():
    comp = compose_rulesets([rule("r1", "a", "b"), rule("r2", "x", "y")], [rule("s1", "b", "c")])
    prefs = compose_prefs(PrefModel({"r1": Fraction(1, 2)}), PrefModel(), comp.rules)
    files = composition_files(comp, prefs, "demo")
    assert files["trules.composed"] == "% demo\ntrule(c(r1, s1), a, c).\n"
    assert files["prefs.composed"] == "% demo\npref(c(r1, s1), 0.5).\n"
    assert files["diagnostics.txt"] == "r2\ts1\tno-unify\n"


def test_fixture_composition_matches_checked_in_files(fx, manifest):
    p12 = load_pair(manifest, "swetoy", "engtoy")
    p23 = load_pair(manifest, "engtoy", "fretoy")
    blocks = read_resources([fx.blocks]).blocks
    comp = compose_rulesets(p12.trules, p23.trules, blocks)
    prefs = compose_prefs(p12.prefs, p23.prefs, comp.rules)
    files = composition_files(comp, prefs, "swetoy -> fretoy by way of engtoy")
    for name, text in files.items():
        with open(os.path.join(fx.composed_dir, name), encoding="utf-8") as fh:
            assert fh.read() == text, name
    ids = {print_term(r.id) for r in comp.rules}
    assert {"c(t_like, f_like)", "c(t_want_have, f_want)"} <= ids
    reasons = [d.reason for d in comp.diagnostics]
    assert reasons.count(BLOCKED) == 2 and reasons.count(OPAQUE) == 1


def test_composed_rules_reload_and_validate(fx):
    from mtkit.lingdata import validate_rulesets
    res = read_resources([os.path.join(fx.composed_dir, "trules.composed"),
                          os.path.join(fx.composed_dir, "prefs.composed")])
    assert res.trules and validate_rulesets(res.trules) == []
    assert len(res.prefs) == len(res.trules)


# --- properties -------------------------------------------------------------

names = st.sampled_from(["a", "b", "c", "d"])


def atomic_set(prefix, left, right):
    return st.lists(st.tuples(left, right), max_size=12, unique=True).map(
        lambda ps: [TransferRule(Atom(f"{prefix}{k}"), Atom(a), Atom(b)) for k, (a, b) in enumerate(ps)])


@given(atomic_set("p", names, names.map(lambda x: x + "2")),
       atomic_set("q", names.map(lambda x: x + "2"), names.map(lambda x: x + "3")))
def test_atomic_exactness(r12, r23):
    comp = compose_rulesets(r12, r23)
    got = {(r.rule.lhs.name, r.rule.rhs.name) for r in comp.rules}
    assert got == relational_compose([(r.lhs.name, r.rhs.name) for r in r12],
                                     [(r.lhs.name, r.rhs.name) for r in r23])


structural = st.sampled_from([
    ("f(X)", "g(tr(X))"), ("g(X)", "h(tr(X))"), ("g(a)", "k"), ("f(X, Y)", "g(tr(Y), tr(X))"),
    ("g(X, Y)", "m(tr(X), tr(Y))"), ("a", "b"), ("b", "c"), ("g", "h"), ("g(X)", "n(X)"),
    ("h(X)", "p(tr(X), z)"),
])


@settings(max_examples=100)
@given(st.lists(structural, max_size=6), st.lists(structural, max_size=6),
       st.lists(st.tuples(st.sampled_from("fgab"), st.sampled_from("ghkmnpbc")), max_size=3))
def test_conservation_and_blocking(r12, r23, pairs):
    r12 = [rule(f"p{k}", l, r) for k, (l, r) in enumerate(r12)]
    r23 = [rule(f"q{k}", l, r) for k, (l, r) in enumerate(r23)]
    base = compose_rulesets(r12, r23)
    assert base.pairs == len(base.rules) + len(base.diagnostics)
    blocks = [BlockDecl("pair", (Atom(a), Atom(b))) for a, b in pairs]
    blocked = compose_rulesets(r12, r23, blocks)
    assert blocked.pairs == len(blocked.rules) + len(blocked.diagnostics)
    before = {print_term(r.id): r.rule for r in base.rules}
    assert all(before[print_term(r.id)] == r.rule for r in blocked.rules)
    assert len(blocked.rules) <= len(base.rules)
