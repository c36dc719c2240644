import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from h5twistor import twistor
from h5twistor.exactalg import CRational
from h5twistor.heisenberg import GroupPoint


def cr(num, den=1):
    return CRational(Fraction(num, den))


def crationals():
    fr = st.fractions(min_value=-8, max_value=8, max_denominator=6)
    return st.builds(CRational, fr, fr)


def nonzero_crationals():
    return crationals().filter(lambda z: not z.is_zero())


class TestIncidence:
    def test_eta_golden(self):
        x = GroupPoint(cr(1), cr(1, 2), cr(-1, 3), cr(2), CRational(Fraction(1, 4), Fraction(1)))
        p = twistor.eta(x, cr(1, 2))
        assert p.chart == twistor.CHART_W
        assert p.w0 == cr(5, 6)
        assert p.w1 == cr(3, 2)
        assert p.w2 == CRational(Fraction(-11, 12), Fraction(1))

    def test_eta_tilde_golden(self):
        x = GroupPoint(cr(1), cr(1, 2), cr(-1, 3), cr(2), cr(0))
        p = twistor.eta_tilde(x, cr(2))
        # w0 = zt*y00 + y01, w1 = zt*y10 + y11
        assert p.w0 == cr(5, 3)
        assert p.w1 == cr(3)
        # w2 = t + 2*zt*y00*y10 + y01*y10 + y00*y11
        assert p.w2 == cr(23, 6)

    @given(*(crationals() for _ in range(5)), crationals())
    @settings(max_examples=30, deadline=None)
    def test_eta_constant_on_alpha_planes(self, a, b, c, d, e, z):
        p = twistor.TwistorPoint(twistor.CHART_W, a, b, c, z)
        x = twistor.alpha_plane_point(p, d, e)
        assert twistor.eta(x, z) == p


class TestChartTransition:
    def test_golden(self):
        p = twistor.TwistorPoint(twistor.CHART_W, cr(1), cr(1), cr(0), cr(2))
        q = twistor.chart_transition(p)
        assert q.chart == twistor.CHART_WT
        assert (q.w0, q.w1, q.w2, q.zeta) == (cr(1, 2), cr(1, 2), cr(1), cr(1, 2))

    @given(crationals(), crationals(), crationals(), nonzero_crationals())
    @settings(max_examples=30, deadline=None)
    def test_roundtrip(self, a, b, c, z):
        p = twistor.TwistorPoint(twistor.CHART_W, a, b, c, z)
        assert twistor.chart_transition_inverse(twistor.chart_transition(p)) == p

    def test_json_roundtrip(self):
        p = twistor.TwistorPoint(twistor.CHART_W, cr(1), cr(-2, 3), cr(0), cr(5))
        assert twistor.TwistorPoint.from_json(p.to_json()) == p


class TestCertificates:
    def test_tangency(self):
        assert twistor.tangency_certificate()

    def test_commuting_fields(self):
        assert twistor.commuting_certificate()

    def test_diagram(self):
        assert twistor.diagram_check()

    def test_diagram_misprint_rejected(self):
        assert not twistor.diagram_check(use_erratum_variant=True)

    def test_alpha_roundtrip(self):
        assert twistor.alpha_roundtrip_certificate()

    def test_parametrization_agreement(self):
        assert twistor.parametrization_agreement_certificate()


class TestFibers:
    def test_fiber_points_map_back(self):
        rng = random.Random(7)

        def rnd():
            return CRational(
                Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
            )

        for _ in range(20):
            p = twistor.TwistorPoint(twistor.CHART_WT, rnd(), rnd(), rnd(), rnd())
            x = twistor.alpha_plane_point_tilde(p, rnd(), rnd())
            assert twistor.eta_tilde(x, p.zeta) == p
