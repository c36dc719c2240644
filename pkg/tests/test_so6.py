from fractions import Fraction

import pytest

from h5twistor import so6model as S
from h5twistor.exactalg import CRational, MatRF, RationalFunction, make_context


def cr(num, den=1):
    return CRational(Fraction(num, den))


def consts(ctx, *vals):
    return [RationalFunction.const(ctx, cr(v)) for v in vals]


class TestMatrixModel:
    def test_suite_all_exact(self):
        results = S.verify_all()
        assert len(results) == 7
        assert all(results.values()), results

    def test_homomorphism_golden(self):
        ctx = make_context("dummy")
        a = S.h_matrix(*consts(ctx, 1, 0, 0, 0, 0))
        b = S.h_matrix(*consts(ctx, 0, 0, 0, 1, 0))
        prod = a @ b
        # central coordinate of the product is B(e00, e11) = 1
        want = S.h_matrix(*consts(ctx, 1, 0, 0, 1, 1))
        assert prod == want

    def test_h_orthogonal(self):
        m = S.h_matrix_point()
        assert S.orthogonality_check(m)

    def test_p_zeta_orthogonal(self):
        ctx = make_context("z")
        z = RationalFunction.var(ctx, "z")
        assert S.orthogonality_check(S.p_zeta(z))

    def test_coset_factor_in_q_mask(self):
        ctx = make_context("a", "b")
        zero = RationalFunction.zero(ctx)
        a = RationalFunction.var(ctx, "a")
        b = RationalFunction.var(ctx, "b")
        assert S.mask_membership(S.h_matrix(zero, zero, a, b, zero), "Q")

    def test_p_zeta_in_torus_mask(self):
        ctx = make_context("z")
        z = RationalFunction.var(ctx, "z")
        assert S.mask_membership(S.p_zeta(z), "P")

    def test_h_not_in_torus_mask(self):
        assert not S.mask_membership(S.h_matrix_point(), "P")

    def test_nilpotent_log_inverse_of_exp(self):
        m = S.h_matrix_point()
        ident = MatRF.identity(6, m.ctx)
        x = S.nilpotent_log(m)
        # for step-2 nilpotency exp truncates: I + x + x^2/2
        half = RationalFunction.const(m.ctx, CRational(Fraction(1, 2)))
        back = ident + x + (x @ x).scale(half)
        assert back == m

    def test_nilpotent_log_rejects_nonnilpotent(self):
        ctx = make_context("u")
        two = RationalFunction.const(ctx, 2)
        m = MatRF.identity(6, ctx).scale(two)
        with pytest.raises(S.So6Error):
            S.nilpotent_log(m)

    def test_individual_checks(self):
        assert S.homomorphism_check()
        assert S.decomposition_check()
        assert S.azeta_pattern_check()
        assert S.conjugation_check()
        assert S.coset_eta_check()
        assert S.psi_chart_transition_check()
