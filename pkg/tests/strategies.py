"""Hypothesis strategies for terms."""
from hypothesis import strategies as st

from mtkit.terms import Atom, Compound, Int, Var, make_list

atom_names = st.one_of(
    st.sampled_from(["a", "b", "flight", "q", "x1", "c_d"]),
    st.text(alphabet="abcXY _'\\\"é1", min_size=1, max_size=5),
)
var_names = st.sampled_from(["X", "Y", "Z", "W", "_G", "Long_name"])
functors = st.sampled_from(["f", "g", "h", "=", "+", "tr", "Weird f", "$x"])


def terms(max_leaves: int = 12, atoms=atom_names):
    leaves = st.one_of(
        atoms.map(Atom),
        var_names.map(Var),
        st.integers(-50, 50).map(Int),
    )

    def extend(children):
        compound = st.builds(
            lambda f, args: Compound(f, tuple(args)),
            functors, st.lists(children, min_size=1, max_size=3),
        ).filter(lambda t: t.functor not in ("=", "+") or len(t.args) == 2)
        lists = st.builds(lambda xs: make_list(xs), st.lists(children, min_size=1, max_size=3))
        return st.one_of(compound, lists)

    return st.recursive(leaves, extend, max_leaves=max_leaves)


# small vocabulary so that random pairs unify reasonably often
small_terms = st.recursive(
    st.one_of(st.sampled_from("abc").map(Atom), st.sampled_from("XYZ").map(Var)),
    lambda ch: st.builds(lambda f, xs: Compound(f, tuple(xs)), st.sampled_from("fg"),
                         st.lists(ch, min_size=1, max_size=2)),
    max_leaves=8,
)
