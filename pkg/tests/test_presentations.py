"""Presentation builders and the text format."""

import pytest

from braidkit.presentations import (
    IndexedPresentation,
    ParseError,
    affine_A,
    affine_C,
    artin_braid,
    b22_two_generator,
    b3_punctured_gamma2_ab,
    fullpres,
    gamma2_annulus,
    gamma2_b4,
    gamma2_b5,
    gamma2_b6plus,
    kent_peifer,
    parse_presentation,
    punctured_sphere,
    s,
    serialize,
    sphere_braid,
    surface_relator,
)
from braidkit.series import abelianization
from braidkit.words import Gen, exponent_sum, parse_word


def test_artin_braid_counts():
    for n in range(2, 7):
        p = artin_braid(n)
        assert len(p.generators) == n - 1
        # (n-2) braid relators plus C(n-2, 2)... commuting pairs |i-j| >= 2
        commuting = (n - 2) * (n - 3) // 2
        assert len(p.relators) == (n - 2) + commuting


def test_sphere_braid_adds_surface_relator():
    p = sphere_braid(4)
    assert p.relators[-1] == surface_relator(4)
    assert surface_relator(3) == parse_word("s[1] s[2]^2 s[1]")
    assert surface_relator(4) == parse_word("s[1] s[2] s[3]^2 s[2] s[1]")


def test_punctured_sphere_small():
    p = punctured_sphere(2, 1)
    assert Gen("A", (1, 2)) in p.generators
    assert s(1) in p.generators
    # every relator has zero total exponent sum in the sigma generators mod
    # nothing in particular, but the presentation must at least parse back
    assert parse_presentation(serialize(p)) == p


def test_punctured_sphere_abelianization_rank():
    # rank n free abelian for m >= 2
    for m in (2, 3):
        for n in (1, 2, 3):
            assert abelianization(punctured_sphere(m, n)).free_rank == n


def test_b22_two_generator():
    p = b22_two_generator()
    assert len(p.generators) == 2
    assert p.relators == (parse_word("s D^2 s^-1 D^-2"),)
    inv = abelianization(p)
    assert (inv.free_rank, inv.torsion) == (2, ())


def test_kent_peifer_and_affine():
    kp = kent_peifer(4)
    assert Gen("t") in kp.generators
    assert len(kp.generators) == 5
    a3 = affine_A(4)
    assert len(a3.generators) == 4
    c3 = affine_C(3)
    assert len(c3.generators) >= 3


def test_gamma2_family_generator_counts():
    assert len(gamma2_b4().generators) == 3
    g5 = gamma2_b5()
    assert len(g5.generators) == 11
    assert len(fullpres(4).generators) == 8
    g6 = gamma2_b6plus(6)
    assert len(g6.generators) > 0


def test_indexed_presentations_instantiate():
    ip = gamma2_annulus(3)
    assert isinstance(ip, IndexedPresentation)
    p = ip.instantiate(2)
    assert len(p.generators) > 0 and len(p.relators) > 0
    ip2 = b3_punctured_gamma2_ab()
    assert isinstance(ip2, IndexedPresentation)


def test_gamma2_annulus_rejects_small_m():
    with pytest.raises(ValueError):
        gamma2_annulus(2)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_presentation("gens: a b\nrel: a b\n")  # missing header
    with pytest.raises(ParseError):
        parse_presentation("group X\ngens: a\nrel: a b\n")  # undeclared gen


def test_serialize_round_trip_families():
    for p in (artin_braid(4), sphere_braid(5), gamma2_b4(), kent_peifer(3)):
        assert parse_presentation(serialize(p)) == p
