"""Abelianization, central-series quotients and rank formulas."""

from fractions import Fraction

from braidkit.models import automorphism_from_images, q8
from braidkit.presentations import (
    b3_punctured_gamma2_ab,
    gamma2_annulus,
    gamma2_b4,
    parse_presentation,
    sphere_braid,
)
from braidkit.series import (
    AbelianInvariants,
    abelianization,
    alpha_k,
    gamma2_mod_gamma3,
    hat_subgroup,
    lcs_rank_torus,
    lcs_rank_z2_free,
    nilpotent_class2_gamma2,
    shifted_z_family_system,
    windowed_coinvariants,
)
from braidkit.words import Gen, parse_word


def test_invariants_str():
    assert str(AbelianInvariants(0, ())) == "1"
    assert str(AbelianInvariants(2, ())) == "Z^2"
    assert str(AbelianInvariants(0, (6,))) == "Z/6"
    assert str(AbelianInvariants(1, (2, 4))) == "Z x Z/2 x Z/4"


def test_sphere_abelianization_cyclic():
    for n in range(3, 9):
        assert abelianization(sphere_braid(n)) == AbelianInvariants(0, (2 * (n - 1),))


def test_abelianization_of_free_and_finite():
    assert abelianization(parse_presentation("group F2\ngens: a b\n")) == \
        AbelianInvariants(2, ())
    assert abelianization(parse_presentation("group C4\ngens: a\nrel: a^4\n")) == \
        AbelianInvariants(0, (4,))


def test_gamma2_mod_gamma3_of_sphere4():
    # central quotient of the commutator subgroup of the 4-strand sphere
    # braid group, computed through the finite-cyclic rewriting
    inv = gamma2_mod_gamma3(sphere_braid(4), Gen("s", (1,)))
    assert isinstance(inv, AbelianInvariants)


def test_alpha_values():
    assert alpha_k(2) == 1
    assert alpha_k(3) == 1
    assert alpha_k(4) == Fraction(3, 2)
    assert alpha_k(5) == 2


def test_mobius_increments_are_integral():
    # the per-class increments of the rank formula are integers even though
    # the alpha values themselves need not be
    from sympy import mobius

    for i in range(2, 21):
        inc = sum(Fraction(mobius(i // k)) * k * alpha_k(k) / i
                  for k in range(2, i + 1) if i % k == 0)
        assert inc.denominator == 1


def test_z2_free_ranks():
    assert [lcs_rank_z2_free(i).rank for i in range(2, 7)] == [1, 2, 3, 5, 7]


def test_torus_ranks():
    r = [lcs_rank_torus(i).rank for i in (2, 3)]
    assert r == [0, 3]


def test_rank2_nilpotent_quotient_of_gamma2_b4():
    inv = abelianization(gamma2_b4())
    assert inv == AbelianInvariants(2, ())
    n2 = nilpotent_class2_gamma2(gamma2_b4())
    assert isinstance(n2, AbelianInvariants)


def test_windowed_coinvariants_stability():
    res = windowed_coinvariants(gamma2_annulus(3), window=4, identify=())
    assert res.stable
    assert res.invariants == AbelianInvariants(4, ())
    res = windowed_coinvariants(b3_punctured_gamma2_ab(), window=4)
    assert res.stable
    assert res.invariants == AbelianInvariants(4, ())


def test_shifted_z_system_gives_order_two():
    res = windowed_coinvariants(shifted_z_family_system(), window=4, identify=())
    assert res.stable
    assert res.invariants == AbelianInvariants(0, (2,))


def test_hat_subgroup_of_q8():
    t = q8()
    a = automorphism_from_images(t, {"x": "y", "y": "xy"})
    b = automorphism_from_images(t, {"x": t.mul("y", "x"), "y": "x"})
    acts = {Gen("a"): a, Gen("b"): b}
    full = hat_subgroup(t, acts, [parse_word("a"), parse_word("b")])
    assert len(full) == 8
    centre = hat_subgroup(t, acts, [parse_word("a b a^-1 b^-1")])
    assert sorted(centre) == ["-1", "1"]
