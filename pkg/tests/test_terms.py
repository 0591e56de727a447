import pytest
from hypothesis import given
from hypothesis import strategies as st

from mtkit.terms import (
    NIL, Atom, Compound, Int, TermSyntaxError, Var, apply_subst, canonical, fresh_salt,
    list_items, make_list, match, parse_clauses, parse_term, print_term, rename_apart,
    term_vars, unify, variant_key,
)
from strategies import small_terms, terms


def T(s):
    return parse_term(s)


class TestParse:
    def test_compound(self):
        assert T("f(X, a)") == Compound("f", (Var("X"), Atom("a")))

    def test_list_sugar(self):
        assert T("[a,b]") == Compound("$cons", (Atom("a"), Compound("$cons", (Atom("b"), NIL))))

    def test_atom(self):
        assert T("flight") == Atom("flight")

    def test_whitespace_insensitive(self):
        assert T(" f (  X ,a ) ") == T("f(X,a)")

    def test_comments_ignored(self):
        assert T("f(a, % note\n b)") == T("f(a,b)")

    def test_tail_and_integers(self):
        t = T("[1, -2 | T]")
        assert t == Compound("$cons", (Int(1), Compound("$cons", (Int(-2), Var("T")))))

    def test_quoted_atoms(self):
        assert T("'Hello world'") == Atom("Hello world")
        assert T('"vill"') == Atom("vill")

    def test_infix_operators(self):
        assert T("keep+\"en\"") == Compound("+", (Atom("keep"), Atom("en")))
        assert T("pl=drop(1)+\"or\"").functor == "="

    @pytest.mark.parametrize("text", ["f(a", "f(,a)", "[a,", "f(a))", "'open", "f()"])
    def test_syntax_errors(self, text):
        with pytest.raises(TermSyntaxError):
            T(text)

    def test_error_position(self):
        with pytest.raises(TermSyntaxError) as err:
            parse_clauses("a.\nb(c,.\n", source="demo.pl")
        msg = str(err.value)
        assert "demo.pl" in msg and ":2:" in msg

    def test_clause_lines(self):
        clauses = parse_clauses("a.\n\n% c\nb(X).\n")
        assert [line for _, line in clauses] == [1, 4]

    def test_anonymous_variables_are_distinct(self):
        (t, _), = parse_clauses("f(_, _).")
        assert t.args[0] != t.args[1]


class TestPrint:
    def test_atom(self):
        assert print_term(Atom("a")) == "a"

    def test_list(self):
        assert print_term(Compound("$cons", (Atom("a"), NIL))) == "[a]"

    def test_var(self):
        assert print_term(Compound("f", (Var("X"),))) == "f(X)"

    def test_operators_without_spaces(self):
        assert print_term(T("pl = drop(1) + \"or\"")) == "pl=drop(1)+or"

    def test_quotes_when_needed(self):
        assert print_term(Atom("Hello")) == "'Hello'"
        assert print_term(Atom("it's")) == "'it\\'s'"


class TestUnify:
    def test_textbook(self):
        assert unify(T("f(X,a)"), T("f(b,Y)")) == {"X": Atom("b"), "Y": Atom("a")}

    def test_identical(self):
        assert unify(Atom("a"), Atom("a")) == {}

    def test_occurs_check(self):
        assert unify(Var("X"), T("f(X)")) is None
        assert unify(T("f(X, Y)"), T("f(Y, g(X))")) is None

    def test_integers(self):
        assert unify(Int(3), Int(3)) == {}
        assert unify(Int(3), Int(4)) is None
        assert unify(Int(3), Atom("3")) is None

    def test_clash(self):
        assert unify(T("f(a)"), T("g(a)")) is None
        assert unify(T("f(a)"), T("f(a, b)")) is None

    def test_chain_is_resolved(self):
        s = unify(T("f(X, Y, Z)"), T("f(Y, Z, a)"))
        assert s == {"X": Atom("a"), "Y": Atom("a"), "Z": Atom("a")}


class TestApplyAndRename:
    def test_apply(self):
        assert apply_subst({"X": Atom("b")}, T("f(X,Y)")) == T("f(b,Y)")
        assert apply_subst({}, T("f(X)")) == T("f(X)")
        assert apply_subst({"X": T("g(Z)")}, T("f(X,X)")) == T("f(g(Z),g(Z))")

    def test_rename(self):
        assert rename_apart(T("f(X,X)"), 7) == T("f(X_7,X_7)")
        assert rename_apart(Atom("a"), 3) == Atom("a")
        r = rename_apart(T("f(X,Y)"), 1)
        assert r == T("f(X_1,Y_1)") and r.args[0] != r.args[1]

    def test_fresh_salts_differ(self):
        assert fresh_salt() != fresh_salt()

    def test_match_is_one_way(self):
        assert match(T("f(X)"), T("f(a)")) == {"X": Atom("a")}
        assert match(T("f(a)"), T("f(X)")) is None
        assert match(T("f(X, X)"), T("f(a, b)")) is None

    def test_canonical_and_variant_key(self):
        assert canonical(T("f(B, A, B)")) == T("f(V0, V1, V0)")
        assert variant_key(T("f(X,Y)")) == variant_key(T("f(P,Q)"))
        assert variant_key(T("f(X,X)")) != variant_key(T("f(X,Y)"))

    def test_lists(self):
        t = make_list([Atom("a"), Int(1)])
        assert list_items(t) == [Atom("a"), Int(1)]
        with pytest.raises(ValueError):
            list_items(T("[a|T]"))


# --- properties ---------------------------------------------------------

@given(terms())
def test_print_parse_round_trip(t):
    assert parse_term(print_term(t)) == t


@given(small_terms, small_terms)
def test_mgu_law(t1, t2):
    s = unify(t1, t2)
    if s is not None:
        assert apply_subst(s, t1) == apply_subst(s, t2)


@given(small_terms, small_terms)
def test_unifier_is_idempotent(t1, t2):
    s = unify(t1, t2)
    if s is not None:
        for v in s.values():
            assert apply_subst(s, v) == v
            assert not set(term_vars(v)) & set(s)


@given(small_terms, small_terms)
def test_unify_is_symmetric_in_success(t1, t2):
    assert (unify(t1, t2) is None) == (unify(t2, t1) is None)


@given(small_terms, st.integers(1, 10_000))
def test_term_unifies_with_its_renaming(t, salt):
    assert unify(t, rename_apart(t, salt)) is not None


@given(small_terms)
def test_variable_never_unifies_with_proper_superterm(t):
    assert unify(Var("X"), Compound("f", (t, Var("X")))) is None
