from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollcalc import hrr, scroll
from scrollcalc.divisors import InternalInconsistency
from scrollcalc.extensions import OutsideRegime, ScrollConfig, dim_ext1_direct

from conftest import box


class SurfaceClass:
    """r + D + p*pt in the Chow ring of F_e, with D = a C + b f."""

    def __init__(self, e, r=0, a=0, b=0, p=0):
        self.e, self.r, self.a, self.b, self.p = e, r, a, b, p

    def __add__(self, o):
        return SurfaceClass(self.e, self.r + o.r, self.a + o.a, self.b + o.b, self.p + o.p)

    def __mul__(self, o):
        if isinstance(o, int):
            return SurfaceClass(self.e, o * self.r, o * self.a, o * self.b, o * self.p)
        dd = -self.e * self.a * o.a + self.a * o.b + o.a * self.b
        return SurfaceClass(
            self.e,
            self.r * o.r,
            self.r * o.a + o.r * self.a,
            self.r * o.b + o.r * self.b,
            self.r * o.p + o.r * self.p + dd,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1


class ScrollChow:
    """alpha + beta * xi on P(E), with xi^2 = c1 xi - c2."""

    def __init__(self, c1, c2, alpha, beta):
        self.c1, self.c2, self.alpha, self.beta = c1, c2, alpha, beta

    def _new(self, alpha, beta):
        return ScrollChow(self.c1, self.c2, alpha, beta)

    def __add__(self, o):
        return self._new(self.alpha + o.alpha, self.beta + o.beta)

    def __mul__(self, o):
        bb = self.beta * o.beta
        alpha = self.alpha * o.alpha + -(self.c2 * bb)
        beta = self.alpha * o.beta + o.alpha * self.beta + self.c1 * bb
        return self._new(alpha, beta)

    def degree(self):
        return self.beta.p


def chow_table(e, b, k):
    """Intersection numbers of P(E) from its Chow ring, independent of the closed forms."""
    S = lambda **kw: SurfaceClass(e, **kw)  # noqa: E731
    c1 = S(a=3, b=b)
    c2 = S(p=k)
    c1S = S(a=2, b=e + 2)
    X = lambda alpha, beta: ScrollChow(c1, c2, alpha, beta)  # noqa: E731
    zero = S()
    L = X(zero, S(r=1))
    # c(T_X) = (1 + 2 xi - c1)(1 + c1S + 4 pt)
    K = X(c1 + -c1S, S(r=-2))
    c2X = X(-(c1 * c1S) + S(p=4), c1S * 2)
    c3X = X(zero, S(p=8))
    one = X(S(r=1), zero)
    return {
        "K3": (K * K * K).degree(),
        "K2L": (K * K * L).degree(),
        "KL2": (K * L * L).degree(),
        "L3": (L * L * L).degree(),
        "c2L": (c2X * L).degree(),
        "c2K": (c2X * K).degree(),
        "c3": (c3X * one).degree(),
    }


def cfg(e, b, k):
    return ScrollConfig(e, b, k)


@pytest.mark.parametrize(
    "c,n,d,g", [((2, 11, 11), 25, 37, 14), ((4, 18, 18), 34, 54, 22), ((3, 15, 15), 31, 48, 19)]
)
def test_invariants(c, n, d, g):
    assert scroll.invariants(cfg(*c)) == scroll.ScrollInvariants(n, d, g)


def test_invariants_refuse_inadmissible():
    with pytest.raises(OutsideRegime):
        scroll.invariants(cfg(2, 11, 14))


def test_intersection_table_example():
    t = scroll.intersection_table(cfg(2, 11, 11))
    assert t.as_dict() == {"K3": -56, "K2L": 56, "KL2": -48, "L3": 37, "c2L": 26, "c2K": -24, "c3": 8}


def test_intersection_table_against_chow_ring():
    for e in range(0, 7):
        for b in range(3 * e + 1, 3 * e + 12):
            for k in range(b - e - 3, 2 * b - 4 * e + 3):
                assert scroll.table_for(e, b, k).as_dict() == chow_table(e, b, k), (e, b, k)


def test_hilbert_polynomial_example():
    hp = scroll.hilbert_polynomial(cfg(2, 11, 11))
    assert hp.coeffs == (Fraction(1), Fraction(41, 6), Fraction(12), Fraction(37, 6))
    assert hp(0) == 1 and hp(1) == 26


def test_hilbert_polynomial_against_riemann_roch():
    # chi(O(m)) on the threefold, with the intersection numbers from the Chow ring
    for c in [cfg(2, 11, 11), cfg(3, 15, 15), cfg(4, 18, 18), cfg(5, 20, 17)]:
        t = chow_table(c.e, c.b, c.k)
        hp = scroll.hilbert_polynomial(c)
        for m in range(-5, 6):
            rr = (
                Fraction(m**3 * t["L3"], 6)
                - Fraction(m**2 * t["KL2"], 4)
                + Fraction(m * (t["K2L"] + t["c2L"]), 12)
                - Fraction(t["c2K"], 24)
            )
            assert hp(m) == rr


@pytest.mark.parametrize("c,dim", [((2, 11, 11), 662), ((3, 15, 15), 1011), ((4, 18, 18), 1215)])
def test_component_dimension(c, dim):
    assert scroll.dim_component_closed(cfg(*c)) == dim
    assert scroll.dim_component_hrr(cfg(*c)) == dim


def test_normal_bundle_chern_classes_multiply_out():
    # c(T_X) c(N) = (1 + L)^(n+1) through degree 3
    n = 11
    n1, n2, n3 = hrr.normal_bundle_chern(n)
    t1, t2, t3 = -hrr.K, hrr.C2, hrr.C3
    total = (1 + t1 + t2 + t3) * (1 + n1 + n2 + n3)
    expected = (1 + hrr.L) ** (n + 1)
    for deg in range(4):
        assert total.part(deg).terms == expected.part(deg).terms


def test_tangent_cohomology():
    assert scroll.tangent_cohomology(cfg(2, 11, 11)) == (13, 14, 1)
    assert scroll.tangent_cohomology(cfg(4, 18, 18)) == (9, None, None)


def test_codim_exact_case():
    rec = scroll.codim_scroll_locus(cfg(2, 11, 11))
    assert (rec.kind, rec.value, rec.tau) == ("exact", 1, -1)
    assert scroll.dim_component_closed(cfg(2, 11, 11)) - rec.dimY_lower_bound == 1


def test_codim_upper_bound_case():
    rec = scroll.codim_scroll_locus(cfg(4, 18, 18))
    assert (rec.kind, rec.value, rec.tau, rec.h0End_generic) == ("upper_bound", 3, 0, 4)
    assert rec.dimY_lower_bound == 1212
    assert scroll.dim_component_closed(cfg(4, 18, 18)) - rec.dimY_lower_bound == 3


def test_codim_difference_is_e_minus_one_on_box():
    for c in box(range(2, 7), 32):
        rec = scroll.codim_scroll_locus(c)
        assert scroll.dim_component_closed(c) - rec.dimY_lower_bound == c.e - 1, c
        assert (rec.kind == "exact") == (dim_ext1_direct(c) == 0)


def test_component_report_flags_and_json():
    report = scroll.component_report(cfg(2, 11, 11))
    assert report.consistent
    data = report.to_json()
    assert set(data) == {
        "cfg", "n", "d", "g", "dim_component", "dim_component_hrr",
        "chi_T", "h0_T", "h1_T", "codim", "flags",
    }
    assert data["dim_component"] == 662
    generic = scroll.component_report(cfg(4, 18, 18))
    assert any(f.startswith("generic:") for f in generic.flags)


def test_report_marks_disagreeing_routes():
    good = scroll.component_report(cfg(2, 11, 11))
    bad = scroll.ComponentReport(
        good.cfg, good.invariants, 662, 663, good.chi_T, good.h0_T, good.h1_T, good.codim_scroll_locus
    )
    assert not bad.consistent


def test_hrr_rejects_fractional_result(monkeypatch):
    monkeypatch.setattr(hrr, "chi_normal_bundle", lambda *a, **k: Fraction(1, 2))
    with pytest.raises(InternalInconsistency):
        scroll.dim_hrr_for(2, 11, 11)


configs = st.builds(
    lambda e, b, dk: (e, b, b - e + 1 + dk), st.integers(2, 30), st.integers(0, 400), st.integers(0, 800)
).filter(lambda t: t[1] >= 3 * t[0] + 1 and t[2] < 2 * t[1] - 4 * t[0])


@given(configs)
def test_closed_form_equals_hrr_large(t):
    c = cfg(*t)
    assert scroll.dim_component_closed(c) == scroll.dim_component_hrr(c)
    hp = scroll.hilbert_polynomial(c)
    assert hp(1) == scroll.invariants(c).n + 1


def test_tangent_and_degree_identities_on_box():
    from scrollcalc.divisors import intersect
    from scrollcalc.extensions import bundle_pair

    for c in box():
        n = scroll.invariants(c).n
        chi_T, h0_T, _ = scroll.tangent_cohomology(c)
        assert chi_T == (n + 1) ** 2 - 1 - scroll.dim_component_closed(c)
        pair = bundle_pair(c)
        assert scroll.invariants(c).d == intersect(pair.c1, pair.c1) - c.k
        if h0_T is not None:
            rec = scroll.codim_scroll_locus(c)
            assert rec.dimY_lower_bound + c.e - 1 == scroll.dim_component_closed(c)
