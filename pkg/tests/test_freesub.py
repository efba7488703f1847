"""Stallings foldings, coset tables, Schreier generators."""

from hypothesis import given, settings, strategies as st

from braidkit.freesub import (
    contains,
    coset_table,
    express,
    fold,
    membership,
    rank,
    schreier_basis,
    z_kernel_basis,
)
from braidkit.models import FiniteTable
from braidkit.words import Gen, free_reduce, multiply, parse_word, substitute

A, B = Gen("a"), Gen("b")


def klein_four():
    elems = ("e", "p", "q", "pq")

    def prod(x, y):
        sx = set(x.replace("e", "")) ^ set(y.replace("e", ""))
        return "".join(c for c in "pq" if c in sx) or "e"

    return FiniteTable(elems, tuple(tuple(prod(x, y) for y in elems) for x in elems))


def words(max_runs=6):
    run = st.tuples(st.sampled_from((A, B)),
                    st.integers(-2, 2).filter(bool))
    return st.lists(run, max_size=max_runs).map(free_reduce)


def test_fold_rank_of_commutator_kernel():
    # ker(F2 -> Z2 x Z2) has index 4, hence rank 5
    gens = [parse_word(t) for t in
            ("a^2", "b^2", "a b a b", "b a^2 b^-1", "a b^2 a^-1")]
    g = fold(gens)
    assert rank(g) == 5


def test_membership_in_squares_subgroup():
    g = fold([parse_word("a^2"), parse_word("b")])
    assert contains(g, parse_word("a^2 b a^-2"))
    assert contains(g, parse_word("b a^4"))
    assert not contains(g, parse_word("a"))
    assert not contains(g, parse_word("a b a^2"))
    assert membership is contains or membership(g, parse_word("b"))


@settings(max_examples=50)
@given(st.lists(words(), min_size=1, max_size=4))
def test_products_of_generators_are_members(gens):
    from braidkit.words import invert

    g = fold(gens)
    assert contains(g, multiply(gens[0], gens[-1]))
    assert contains(g, multiply(gens[-1], invert(gens[0]), gens[-1]))


def test_express_round_trip():
    basis = [parse_word(t) for t in
             ("a^2", "b^2", "a b a b", "b a^2 b^-1", "a b^2 a^-1")]
    g = fold(basis)
    mapping = {Gen("z", (i + 1,)): basis[i] for i in range(5)}
    for text in ("a^2 b^2", "a b a b b^2", "b a^2 b^-1 a^2", "a b^2 a^-1 a^2 b^2"):
        w = parse_word(text)
        zw = express(g, basis, w)
        assert substitute(zw, mapping) == w


def test_coset_table_klein_four():
    t = klein_four()
    table = coset_table([A, B], t, {A: "p", B: "q"})
    assert len(table.cosets) == 4
    # tracing a word lands on its image in the quotient
    assert table.trace(t.identity(), parse_word("a b")) == "pq"
    assert table.trace(t.identity(), parse_word("a^2")) == "e"


def test_schreier_basis_klein_four():
    t = klein_four()
    transversal = [parse_word(x) for x in ("1", "a", "a b", "a b a^-1")]
    basis = schreier_basis([A, B], t, {A: "p", B: "q"}, transversal)
    assert len(basis) == 5
    g = fold(basis)
    assert rank(g) == 5
    # every basis word maps to the identity of the quotient
    for w in basis:
        img = t.identity()
        for gen, sign in w.letters():
            v = {A: "p", B: "q"}[gen]
            img = t.mul(img, v if sign > 0 else t.inv(v))
        assert img == t.identity()


def test_z_kernel_basis_weights_zero():
    rows = z_kernel_basis([A, B], {A: 1, B: -1}, A, window=2)
    assert rows
    for _coset, _gen, w in rows:
        total = sum(sign * {A: 1, B: -1}[g] for g, sign in w.letters())
        assert total == 0
