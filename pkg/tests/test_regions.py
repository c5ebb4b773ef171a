import numpy as np
import pytest

from varistar import (
    Disc,
    PoleParams,
    SchwarzCoeffs,
    a2_closed_form,
    disc_contains,
    disc_exact,
    disc_miller72,
    disc_miller80,
    disc_theorem2,
    expected_tangency_offset,
    tangency_check,
    w0_from_c1,
)


def random_admissible_params(rng, p_lo=0.05, p_hi=0.95):
    while True:
        p = rng.uniform(p_lo, p_hi)
        c1 = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        if abs(c1) <= 1:
            return PoleParams(p, w0_from_c1(p, c1)), c1


class TestA2ClosedForm:
    def test_center_value(self):
        rep = a2_closed_form(0.5, SchwarzCoeffs(0, 0))
        assert rep.a2 == pytest.approx(2.1)
        # matches the c1 = 0 coincidence center (1 + p^2 + p^4)/(p(1 + p^2))
        p = 0.5
        assert rep.a2 == pytest.approx((1 + p**2 + p**4) / (p * (1 + p**2)))

    @pytest.mark.parametrize("p", [0.2, 0.5, 0.8])
    def test_sharp_pair(self, p):
        rep = a2_closed_form(p, SchwarzCoeffs(p, p * p - 1))
        assert rep.a2 == pytest.approx(p + 1 / p)
        assert rep.M == pytest.approx(1.0)

    def test_mixed_pair(self):
        rep = a2_closed_form(0.5, SchwarzCoeffs(0.2, 0.3))
        assert rep.a2 == pytest.approx(1.9)
        assert rep.M == pytest.approx(-0.2)
        assert rep.denominator == pytest.approx(1.05)

    def test_decomposition_invariants(self):
        rng = np.random.default_rng(6)
        for _ in range(300):
            p = rng.uniform(0.05, 0.95)
            c1 = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
            if abs(c1) > 1:
                continue
            c2 = (1 - abs(c1) ** 2) * rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 7))
            rep = a2_closed_form(p, SchwarzCoeffs(c1, c2))
            assert abs(rep.a2 - (1 / p + p * rep.M)) < 1e-12
            assert abs(rep.M) <= 1 + 1e-12
            assert rep.route == "closed-form"

    def test_invalid_pair(self):
        with pytest.raises(ValueError, match="Schwarz pair"):
            a2_closed_form(0.5, SchwarzCoeffs(0.9, 0.5))


class TestDiscs:
    @pytest.mark.parametrize(
        "w0,m72,m80,exact",
        [
            (-0.4, (2.1, 0.4), (2.1, 0.4), (2.1, 0.4)),
            (-2 / 3, (13 / 6, 2 / 3), (11 / 6, 2 / 3), (2.0, 0.5)),
        ],
    )
    def test_spot_values(self, w0, m72, m80, exact):
        params = PoleParams(0.5, w0)
        for disc, (c, r) in [
            (disc_miller72(params), m72),
            (disc_miller80(params), m80),
            (disc_exact(params), exact),
        ]:
            assert disc.center == pytest.approx(c, abs=1e-12)
            assert disc.radius == pytest.approx(r, abs=1e-12)

    def test_degenerate_point(self):
        d = disc_exact(PoleParams(0.5, -2.0))
        assert d.center == pytest.approx(2.5, abs=1e-12)
        assert d.radius == pytest.approx(0.0, abs=1e-12)

    def test_miller_discs_at_degenerate_pair(self):
        params = PoleParams(0.5, -2.0)
        assert disc_miller72(params).radius == pytest.approx(2.0)
        assert disc_miller80(params).center == pytest.approx(0.5)
        assert disc_miller80(params).radius == pytest.approx(2.0)

    @pytest.mark.parametrize("p,center,radius", [(0.5, 2.0, 0.5), (0.9, 10 / 9, 0.9)])
    def test_theorem2(self, p, center, radius):
        d = disc_theorem2(p)
        assert d.center == pytest.approx(center)
        assert d.radius == pytest.approx(radius)

    def test_exact_equals_theorem2_at_c1_p(self):
        # c1 = p <=> w0 = -p/(1-p^2)
        for p in (0.2, 0.5, 0.8):
            d = disc_exact(PoleParams(p, -p / (1 - p * p)))
            t = disc_theorem2(p)
            assert abs(d.center - t.center) < 1e-12
            assert abs(d.radius - t.radius) < 1e-12

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            Disc(center=0, radius=-0.1)

    def test_inadmissible_params(self):
        with pytest.raises(ValueError, match="inadmissible"):
            disc_exact(PoleParams(0.5, -10.0))


class TestContainment:
    def test_origin(self):
        assert disc_contains(Disc(0, 1), 0)

    def test_boundary_point(self):
        assert disc_contains(Disc(2.1, 0.4), 1.7)

    def test_outside(self):
        assert not disc_contains(Disc(2.1, 0.4), 2.6)


class TestTangency:
    def test_coincident_discs(self):
        d = Disc(2.1, 0.4)
        rep = tangency_check(d, d)
        assert rep.delta_center == 0 and rep.radius_gap == 0
        assert rep.internally_tangent

    def test_exact_in_miller80(self):
        params = PoleParams(0.5, -2 / 3)
        rep = tangency_check(disc_exact(params), disc_miller80(params))
        assert rep.delta_center == pytest.approx(1 / 6, abs=1e-12)
        assert rep.radius_gap == pytest.approx(1 / 6, abs=1e-12)
        assert rep.internally_tangent

    def test_exact_in_miller72(self):
        params = PoleParams(0.5, -2 / 3)
        rep = tangency_check(disc_exact(params), disc_miller72(params))
        assert rep.delta_center == pytest.approx(1 / 6, abs=1e-12)
        assert rep.radius_gap == pytest.approx(1 / 6, abs=1e-12)
        assert rep.internally_tangent

    def test_tangency_identity_random(self):
        rng = np.random.default_rng(77)
        for _ in range(300):
            params, c1 = random_admissible_params(rng)
            inner = disc_exact(params)
            offset = expected_tangency_offset(params)
            assert abs(offset - abs(params.w0) * abs(c1) ** 2) < 1e-11
            for outer in (disc_miller72(params), disc_miller80(params)):
                rep = tangency_check(inner, outer, tol=1e-11)
                assert rep.internally_tangent
                assert abs(rep.delta_center - offset) < 1e-12
                assert abs(rep.radius_gap - offset) < 1e-12

    def test_exact_inside_theorem2(self):
        rng = np.random.default_rng(78)
        for _ in range(300):
            params, _ = random_admissible_params(rng)
            inner = disc_exact(params)
            outer = disc_theorem2(params.p)
            assert abs(inner.center - outer.center) <= outer.radius - inner.radius + 1e-12

    def test_positivity_floor(self):
        for p in (0.1, 0.5, 0.9):
            d = disc_theorem2(p)
            min_re = d.center.real - d.radius
            assert min_re == pytest.approx(1 / p - p)
            assert min_re > 0


class TestBoundaryAttainment:
    def test_a2_in_own_exact_disc_with_boundary_condition(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            p = rng.uniform(0.1, 0.9)
            c1 = 0.95 * (rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1))
            if abs(c1) > 1:
                continue
            slack = rng.uniform(0, 1)
            c2 = c1 * c1 + slack * (1 - abs(c1) ** 2) * np.exp(1j * rng.uniform(0, 7))
            if abs(c2) > 1 - abs(c1) ** 2:
                continue
            d = disc_exact(PoleParams(p, w0_from_c1(p, c1)))
            a2 = a2_closed_form(p, SchwarzCoeffs(c1, c2)).a2
            dist = abs(a2 - d.center)
            assert dist <= d.radius + 1e-9
            on_boundary = abs(abs(c2 - c1 * c1) - (1 - abs(c1) ** 2)) < 1e-13
            assert (abs(dist - d.radius) < 1e-9) == on_boundary
