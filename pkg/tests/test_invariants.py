from fractions import Fraction as F

import pytest

from plumbkit.errors import EnumerationCapExceeded, NotInLprime, NotRational
from plumbkit.graph import chain
from plumbkit.invariants import (
    conjecture_rhs,
    h1_rational,
    is_rational_graph,
    sw_rational,
    verify_equality_suite,
)
from plumbkit.lattice import Cycle, Lattice
from plumbkit.lifting import anti_nef_lift, laufer_reduce, nef_lift, unit_cube_rep

from oracles import artin_min_chi, seeded_graphs

L_STAR = Cycle([1, F(2, 3), F(2, 3), F(2, 3)])
RATIONAL = [lat for _, lat in seeded_graphs(31, 12, max_vertices=5, max_det=50, rational=True)]


def test_rationality(a4, star, brieskorn1):
    rep = is_rational_graph(a4)
    assert rep.is_rational and rep.fundamental_cycle == Cycle([1, 1, 1]) and rep.chi_zmin == 1
    assert is_rational_graph(star).is_rational
    rep = is_rational_graph(brieskorn1)
    assert not rep.is_rational and rep.chi_zmin <= 0
    single = is_rational_graph(Lattice(chain([-7])))
    assert single.fundamental_cycle == Cycle([1]) and single.is_rational


@pytest.mark.parametrize("lat", [lat for _, lat in seeded_graphs(3, 30, max_vertices=4)])
def test_rationality_vs_artin_enumeration(lat):
    rep = is_rational_graph(lat)
    z = rep.fundamental_cycle
    assert lat.is_anti_nef(z) and z.is_integral() and z.is_effective() and not z.is_zero()
    bound = [2 * int(c) for c in z]
    assert (artin_min_chi(lat, bound) >= 1) == rep.is_rational


def test_h1_examples(a4, star):
    assert h1_rational(a4, a4.E(1)) == 1
    assert h1_rational(a4, a4.dual_cycle(0)) == 0
    assert h1_rational(star, -Cycle([0, F(2, 3), F(2, 3), F(2, 3)])) == 1


def test_h1_preconditions(a4, brieskorn1):
    with pytest.raises(NotRational):
        h1_rational(brieskorn1, brieskorn1.zero())
    with pytest.raises(NotInLprime):
        h1_rational(a4, Cycle([F(1, 3), 0, 0]))


def test_sw_examples(a4, e8):
    G = e8.class_group()
    data = sw_rational(e8, G.identity)
    # -sw = d/2 = (k_r^2 + s)/8 with k_r = 0, s = 8
    assert (data.sw, data.d) == (-1, 2)
    A = a4.class_group()
    assert sw_rational(a4, A.identity).sw == F(-3, 8)
    assert sw_rational(a4, A.class_of(-a4.dual_cycle(1))).sw == F(1, 8)


def test_sw_refuses_non_rational(brieskorn1):
    G = brieskorn1.class_group()
    with pytest.raises(NotRational):
        sw_rational(brieskorn1, G.identity)


def test_conjecture_rhs_examples(star, e8, a4):
    S = star.class_group()
    for h in S:
        assert conjecture_rhs(star, S, nef_lift(star, S, h)) == 0
    assert conjecture_rhs(star, S, -Cycle([0, F(2, 3), F(2, 3), F(2, 3)])) == 1
    assert conjecture_rhs(e8, e8.class_group(), e8.zero()) == 0
    with pytest.raises(NotInLprime):
        conjecture_rhs(a4, a4.class_group(), Cycle([F(1, 2), 0, 0]))


@pytest.mark.parametrize("lat", RATIONAL)
def test_rhs_equals_closed_form(lat):
    G = lat.class_group()
    for h in G:
        lp = -unit_cube_rep(lat, h)
        k = lat.canonical_cycle - 2 * lp
        k_r = sw_rational(lat, G.class_of(-lp)).k_r
        assert conjecture_rhs(lat, G, lp) == (lat.square(k_r) - lat.square(k)) / 8
        # representative independence of the orbit data
        assert sw_rational(lat, G.class_of(h.representative + lat.E(0))).k_r == sw_rational(lat, h).k_r


@pytest.mark.parametrize("lat", RATIONAL)
def test_shift_identity(lat):
    """RHS and h^1 shift identically; both match the Laufer correction term."""
    G = lat.class_group()
    for h in G:
        lp = h.representative + lat.E(0) - 2 * lat.E(lat.s - 1)
        red = laufer_reduce(lat, lp)
        corr = -lat.pair(red.reduced, lp) - lat.chi(red.reduced)
        assert conjecture_rhs(lat, G, lp) - conjecture_rhs(lat, G, red.remainder) == corr
        assert h1_rational(lat, lp) - h1_rational(lat, red.remainder) == corr
        for j in range(lat.s):
            b = lp - lat.E(j)
            assert h1_rational(lat, b) <= conjecture_rhs(lat, G, b)


@pytest.mark.parametrize("lat", RATIONAL)
def test_eigengenus_as_h1(lat):
    G = lat.class_group()
    for h in G:
        cube = unit_cube_rep(lat, h)
        assert h1_rational(lat, -cube) == lat.chi(cube) - lat.chi(anti_nef_lift(lat, h))


def test_equality_suite_fixtures(a4, star, e8, brieskorn1):
    for lat in (a4, star, e8):
        report = verify_equality_suite(lat, lat.class_group())
        assert report.passed
        assert len(report.classes) == abs(lat.det)
        assert sum(c.members_checked for c in report.classes) > 0
        assert sum(c.nonmembers_checked for c in report.classes) > 0
    with pytest.raises(NotRational):
        verify_equality_suite(brieskorn1, brieskorn1.class_group())
    with pytest.raises(EnumerationCapExceeded):
        verify_equality_suite(star, star.class_group(cap=5))


def test_equality_suite_is_seeded(star):
    G = star.class_group()
    a = verify_equality_suite(star, G, seed=7).to_dict()
    b = verify_equality_suite(star, G, seed=7).to_dict()
    assert a == b
