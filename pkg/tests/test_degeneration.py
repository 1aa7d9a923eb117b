import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollcalc.degeneration import (
    EpsilonConfig,
    dim_ext1_eps_piecewise,
    epsilon_classes,
    epsilon_config,
    epsilon_invariance,
    h0_end_eps,
    join_spans,
    pushforward_type,
    pushforward_type_eps,
    specialization_certificate,
    translate,
    translated_bounds_hold,
    xi_eta_parts,
)
from scrollcalc.divisors import DivisorClass, cohomology
from scrollcalc.extensions import OutsideRegime, ScrollConfig
from scrollcalc.p1 import SplittingType, specializes_by_twists

from conftest import box


def cfg(e, b, k):
    return ScrollConfig(e, b, k)


@pytest.mark.parametrize(
    "c,expected", [((2, 11, 11), (0, 8, 11)), ((4, 18, 18), (0, 12, 18)), ((3, 15, 15), (1, 12, 15))]
)
def test_epsilon_config(c, expected):
    ec = epsilon_config(cfg(*c))
    assert (ec.eps, ec.b_eps, ec.k_eps) == expected
    assert ec.to_json() == dict(zip(("eps", "b", "k"), expected))


def test_translate_is_identity_on_small_e():
    assert translate(0, 8, 11) == (0, 8, 11)
    assert translate(1, 12, 15) == (1, 12, 15)


def test_epsilon_config_rejects_inadmissible_parent():
    with pytest.raises(OutsideRegime):
        epsilon_config(cfg(2, 11, 14))


def test_epsilon_config_validates_fields():
    parent = cfg(2, 11, 11)
    with pytest.raises(ValueError):
        EpsilonConfig(1, 8, 11, parent)
    with pytest.raises(ValueError):
        EpsilonConfig(0, 9, 11, parent)
    with pytest.raises(ValueError):
        EpsilonConfig(0, 8, 12, parent)


@pytest.mark.parametrize(
    "c,A,B",
    [((2, 11, 11), (2, 5), (1, 3)), ((4, 18, 18), (2, 6), (1, 6)), ((3, 15, 15), (2, 7), (1, 5))],
)
def test_epsilon_classes(c, A, B):
    ec = epsilon_config(cfg(*c))
    pair = epsilon_classes(ec)
    assert pair.A == DivisorClass(ec.eps, *A)
    assert pair.B == DivisorClass(ec.eps, *B)
    assert pair.c2 == c[2]


def test_epsilon_side_ext_and_end():
    ec = epsilon_config(cfg(4, 18, 18))
    pair = epsilon_classes(ec)
    assert dim_ext1_eps_piecewise(ec) == cohomology(pair.A - pair.B).h1 == 0
    assert h0_end_eps(ec) == 2 + cohomology(pair.A - pair.B).h0


@pytest.mark.parametrize("c", [(2, 11, 11), (4, 18, 18), (3, 15, 15)])
def test_invariance_examples(c):
    inv = epsilon_invariance(cfg(*c))
    assert (inv.deg_match, inv.h0_match, inv.dim_match) == (True, True, True)


@pytest.mark.parametrize(
    "c,t_e,t_eps",
    [
        ((2, 11, 11), "7,5,4,3,2", "5,5,5,3,3"),
        ((4, 18, 18), "10,8,6,4,2", "6,6,6,6,6"),
        ((3, 15, 15), "9,6,6,3,3", "7,6,5,5,4"),
    ],
)
def test_pushforward_types(c, t_e, t_eps):
    assert str(pushforward_type(cfg(*c))) == t_e
    assert str(pushforward_type_eps(cfg(*c))) == t_eps
    assert pushforward_type_eps(cfg(*c)) == xi_eta_parts(cfg(*c))


def test_certificate_example():
    cert = specialization_certificate(cfg(2, 11, 11))
    assert cert.dominates
    data = cert.to_json()
    assert set(data) == {"cfg", "eps_cfg", "type_e", "type_eps", "dominates", "gap_profile"}
    assert data["type_e"] == [7, 5, 4, 3, 2]
    assert data["type_eps"] == [5, 5, 5, 3, 3]
    # h0 never drops along the specialization
    assert all(special >= general for _, general, special in cert.gap_profile)


def test_join_spans():
    assert join_spans(cfg(2, 11, 11)) == (17, 7)


def test_whole_box():
    for c in box(range(2, 7), 30):
        ec = epsilon_config(c)
        assert translated_bounds_hold(ec)
        assert epsilon_invariance(c).all(), c
        cert = specialization_certificate(c)
        assert cert.dominates, c
        assert specializes_by_twists(cert.balanced_side, cert.special_side), c
        assert pushforward_type_eps(c) == xi_eta_parts(c), c


@given(st.integers(2, 12), st.integers(0, 200), st.integers(-50, 250))
def test_translated_bounds_match_parent(e, b, k):
    eps, b_eps, k_eps = translate(e, b, k)
    parent_ok = b >= 3 * e + 1 and b - e < k < 2 * b - 4 * e
    translated_ok = (
        2 * b_eps >= 3 * (e + eps) + 2 and 2 * b_eps + e - 3 * eps < 2 * k_eps < 2 * (2 * b_eps - 3 * eps - e)
    )
    assert parent_ok == translated_ok


def test_xi_eta_is_a_splitting_type():
    assert isinstance(xi_eta_parts(cfg(2, 11, 11)), SplittingType)


def test_eps_side_identities_on_box():
    from scrollcalc.extensions import cohomology_E
    from scrollcalc.p1 import splitting_cohomology

    for c in box():
        ec = epsilon_config(c)
        pair = epsilon_classes(ec)
        diff = cohomology(pair.A - pair.B)
        assert dim_ext1_eps_piecewise(ec) == diff.h1, c
        if diff.h1 == 0:
            assert h0_end_eps(ec) == 2 + diff.h0, c
        assert cohomology(pair.A).h1 == cohomology(pair.B).h1 == 0
        t_e, t_eps = pushforward_type(c), pushforward_type_eps(c)
        assert splitting_cohomology(t_e, 0)[0] == cohomology_E(c)[0]
        assert splitting_cohomology(t_eps, 0)[0] == cohomology_E(c)[0]
        # the A-parts are xi2 + eps, xi2, xi2 - eps and the two B-parts differ by eps
        xi2 = 2 * c.b - c.k - 3 * c.e
        a_parts = [xi2 + ec.eps, xi2, xi2 - ec.eps]
        b_parts = [c.k - c.b + (3 * c.e + s * ec.eps) // 2 for s in (1, -1)]
        assert b_parts[0] - b_parts[1] == ec.eps
        assert t_eps == SplittingType(tuple(a_parts + b_parts)), c
