from fractions import Fraction

import pytest

from h5twistor import ansatz, heisenberg, realslice as R
from h5twistor.exactalg import CR_I, CRational, RationalFunction
from h5twistor.heisenberg import FieldId


def rv(name):
    return RationalFunction.var(R.RCTX, name)


def dy(k):
    return R.RealForm.covector(R.RCTX, k)


class TestEmbedding:
    def test_embed_golden(self):
        p = R.RealPoint(
            CRational(1), CRational(2), CRational(3), CRational(4), CRational(5)
        )
        g = R.embed(p)
        assert g.y00p == CRational(Fraction(1), Fraction(2))
        assert g.y10p == CRational(Fraction(3), Fraction(4))
        assert g.y01p == CRational(Fraction(-3), Fraction(4))
        assert g.y11p == CRational(Fraction(1), Fraction(-2))
        assert g.t == CRational(Fraction(0), Fraction(-5))

    def test_group_mul_compatible(self):
        a = R.RealPoint(*(CRational(k) for k in (1, 0, 2, -1, 3)))
        b = R.RealPoint(*(CRational(k) for k in (0, 1, -2, 1, -1)))
        lhs = R.embed(R.real_group_mul(a, b))
        rhs = heisenberg.group_mul(R.embed(a), R.embed(b))
        assert lhs == rhs

    def test_field_consistency(self):
        f = heisenberg.phi_inst()
        for fid in FieldId:
            lhs = R.real_field(fid, R.pullback(f))
            rhs = R.pullback(heisenberg.apply_field(fid, f))
            assert lhs == rhs, fid


class TestRealFields:
    def test_sub_laplacian_goldens(self):
        assert R.real_sub_laplacian(rv("y1") * rv("y1")) == RationalFunction.const(
            R.RCTX, CRational(Fraction(1, 2))
        )
        assert R.real_sub_laplacian(rv("s")).is_zero()

    def test_x_field_bracket_golden(self):
        lhs = R.x_field(1, R.x_field(2, rv("s"))) - R.x_field(2, R.x_field(1, rv("s")))
        assert lhs == RationalFunction.const(R.RCTX, -1)

    def test_sum_of_squares(self):
        f = rv("y1") ** 2 * rv("y3") + rv("s") * rv("y2")
        total = RationalFunction.zero(R.RCTX)
        for k in range(1, 5):
            total = total + R.x_field(k, R.x_field(k, f))
        assert total == R.real_sub_laplacian(f)

    def test_phi_real_harmonic(self):
        assert R.real_sub_laplacian(R.phi_real()).is_zero()


class TestForms:
    def test_wedge_antisymmetry(self):
        assert (dy(0).wedge(dy(1)) + dy(1).wedge(dy(0))).is_zero()
        assert dy(2).wedge(dy(2)).is_zero()

    def test_d_squared_zero(self):
        f = R.RealForm.function(rv("y1") * rv("s") + rv("y3") ** 2)
        assert f.d().d().is_zero()

    def test_hodge_goldens(self):
        assert dy(0).wedge(dy(1)).hodge_star() == dy(2).wedge(dy(3)).wedge(dy(4))
        assert dy(0).wedge(dy(2)).hodge_star() == dy(1).wedge(dy(3)).wedge(dy(4)).scale(
            CRational(-1)
        )

    def test_contract_golden(self):
        omega = dy(0).wedge(dy(4))
        got = omega.contract(R.R_VECTOR)
        assert got == dy(0).scale(CRational(-1))

    def test_dtheta(self):
        assert R.dtheta_certificate()

    def test_theta_normalized(self):
        theta = R.coframe()["theta"]
        paired = theta.contract(R.T_VECTOR)
        one = R.RealForm.function(RationalFunction.one(R.RCTX))
        assert paired == one


class TestSplits:
    def test_hv_reconstructs(self):
        mixed = dy(0).wedge(dy(4)) + dy(1).wedge(dy(2)).scale(CRational(3))
        h, v = R.hv_split(mixed)
        assert h + v == mixed

    def test_hv_idempotent(self):
        mixed = dy(0).wedge(dy(4)) + dy(2).wedge(dy(3))
        h, v = R.hv_split(mixed)
        h2, v2 = R.hv_split(h)
        assert h2 == h and v2.is_zero()

    def test_eigenvalues(self):
        assert R.eigenvalue_certificate()

    def test_star_involution(self):
        assert R.star_involution_certificate()

    def test_s_basis_rank(self):
        assert R.s_basis_rank_certificate()

    def test_sd_asd_projection(self):
        basis = R.s_basis()
        for name in ("S00", "S01", "S11"):
            sd, asd = R.sd_asd_split(basis[name])
            assert sd.is_zero() and asd == basis[name]
        for name in ("S00p", "S01p", "S11p"):
            sd, asd = R.sd_asd_split(basis[name])
            assert asd.is_zero() and sd == basis[name]

    def test_expand_in_s_basis_roundtrip(self):
        basis = R.s_basis()
        omega = basis["S01"].scale(CRational(2)) + basis["S11p"].scale(CR_I)
        coeffs = R.expand_in_s_basis(omega)
        assert coeffs["S01"] == RationalFunction.const(R.RCTX, 2)
        assert coeffs["S11p"] == RationalFunction.const(R.RCTX, CR_I)
        assert coeffs["S00"].is_zero()


class TestCurvatureSplit:
    @pytest.mark.parametrize("name", ["t", "lin:y00p"])
    def test_two_paths_agree(self, name):
        rc = R.pullback_connection(ansatz.build_connection(ansatz.seed_catalog(name)))
        fh, _ = R.real_curvature_split(rc)
        fh2 = R.real_curvature_split_projector(rc)
        assert all(a == b for a, b in zip(fh, fh2))

    def test_instanton_contact(self):
        rc = R.pullback_connection(ansatz.build_connection(ansatz.seed_catalog("inst")))
        fh, _ = R.real_curvature_split(rc)
        assert all(m.is_zero() for m in fh)

    def test_asd_residuals_pull_back(self):
        from h5twistor import gauge

        conn = ansatz.build_connection(ansatz.seed_catalog("t"))
        rc = R.pullback_connection(conn)
        fh = R.fh_plus_coefficients(rc)
        r1, r2, r3 = gauge.asd_residuals(conn)
        half = CRational(Fraction(1, 2))
        assert fh[0] == r1.map(R.pullback)
        assert fh[1] == r2.map(R.pullback).scale(
            RationalFunction.const(R.RCTX, half)
        )
        assert fh[2] == r3.map(R.pullback)


class TestCertificates:
    def test_fiber_uniqueness(self):
        assert R.fiber_uniqueness_certificate()

    def test_real_eta(self):
        assert R.real_eta_certificate()
