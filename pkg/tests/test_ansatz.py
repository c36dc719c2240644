import pytest

from h5twistor import ansatz, gauge, heisenberg
from h5twistor.exactalg import MatRF, MultiPoly, RationalFunction, make_context
from h5twistor.heisenberg import CTX5, FieldId


def rf(name):
    return RationalFunction.var(CTX5, name)


class TestSeeds:
    def test_catalog(self):
        assert ansatz.seed_catalog("inst").phi == heisenberg.phi_inst()
        assert ansatz.seed_catalog("t").phi == rf("t")
        assert ansatz.seed_catalog("lin:y10p").phi == rf("y10p")

    def test_unknown_name(self):
        with pytest.raises(ansatz.AnsatzError):
            ansatz.seed_catalog("nope")

    def test_non_harmonic_rejected(self):
        with pytest.raises(ansatz.AnsatzError):
            ansatz.HarmonicSeed.create(rf("y00p") * rf("y11p"))

    def test_zero_rejected(self):
        with pytest.raises(ansatz.AnsatzError):
            ansatz.HarmonicSeed.create(RationalFunction.zero(CTX5))


class TestLogDerivative:
    def test_matches_direct_quotient(self):
        phi = heisenberg.phi_inst()
        for fid in FieldId:
            direct = heisenberg.apply_field(fid, phi) / phi
            assert ansatz.log_derivative(fid, phi) == direct

    def test_leibniz(self):
        f = rf("t")
        g = rf("y00p") + 1
        lhs = ansatz.log_derivative(FieldId.V11, f * g)
        rhs = ansatz.log_derivative(FieldId.V11, f) + ansatz.log_derivative(FieldId.V11, g)
        assert lhs == rhs


class TestConnection:
    @pytest.mark.parametrize("name", ["inst", "t", "lin:y00p", "lin:y11p"])
    def test_asd(self, name):
        conn = ansatz.build_connection(ansatz.seed_catalog(name))
        assert gauge.is_asd(conn)

    def test_quadratic_seed_asd(self):
        seed = ansatz.HarmonicSeed.create(rf("y00p") * rf("y10p"))
        assert gauge.is_asd(ansatz.build_connection(seed))

    def test_block_structure(self):
        conn = ansatz.build_connection(ansatz.seed_catalog("t"))
        half = RationalFunction.const(CTX5, 1) / RationalFunction.const(CTX5, 2)
        l00 = ansatz.log_derivative(FieldId.V00, rf("t"))
        l01 = ansatz.log_derivative(FieldId.V01, rf("t"))
        assert conn.phi00[0, 0] == half * l00
        assert conn.phi00[0, 1] == l01
        assert conn.phi00[1, 0].is_zero()
        assert conn.phi00[1, 1] == -half * l00
        assert conn.phi01[1, 0] == l00
        assert conn.phi01[0, 0] == -half * l01


class TestPoincare:
    def test_psi_maps_invert(self):
        for direction in (ansatz.D0, ansatz.D1):
            pm = ansatz.psi_transform(direction)
            f = rf("t") * rf("y00p") + rf("y01p")
            fwd = f.substitute(pm.forward)
            assert fwd.substitute(pm.inverse) == f

    def test_gradient_roundtrip(self):
        # integrating the two 0'-derivatives of F recovers F (up to the
        # normalization fixed by the integration map)
        f = rf("y00p") ** 2 * rf("y10p") + rf("t") * rf("y10p")
        g0 = heisenberg.apply_field(FieldId.V00, f)
        g1 = heisenberg.apply_field(FieldId.V10, f)
        out = ansatz.poincare_integrate(g0, g1, ansatz.D0)
        d = out - f
        assert heisenberg.apply_field(FieldId.V00, d).is_zero()
        assert heisenberg.apply_field(FieldId.V10, d).is_zero()

    def test_closedness_guard(self):
        with pytest.raises(ansatz.AnsatzError):
            ansatz.poincare_integrate(rf("y10p"), RationalFunction.zero(CTX5), ansatz.D0)


class TestGammaChain:
    def test_golden_t(self):
        chain = ansatz.gamma_recursion(ansatz.seed_catalog("t"), 1)
        assert chain.gamma(0) == rf("t")
        assert chain.gamma(1) == rf("y00p") * rf("y10p")
        assert chain.gamma(-1) == -rf("y01p") * rf("y11p")

    def test_golden_y00p(self):
        chain = ansatz.gamma_recursion(ansatz.seed_catalog("lin:y00p"), 1)
        assert chain.gamma(1).is_zero()
        assert chain.gamma(-1) == rf("y01p")

    @pytest.mark.parametrize("name", ["t", "lin:y00p"])
    def test_depth_two_verifies(self, name):
        chain = ansatz.gamma_recursion(ansatz.seed_catalog(name), 2)
        assert chain.depth >= 2
        assert chain.verify()


class TestLoopGroup:
    def test_birkhoff_identities(self):
        ok, failures = ansatz.birkhoff_identity_check()
        assert ok, failures

    @pytest.mark.parametrize("name", ["t", "lin:y00p"])
    def test_h_connection(self, name):
        assert ansatz.h_connection_check(ansatz.seed_catalog(name))


class TestLambdaClosedness:
    def test_generic_quadratic(self):
        names = tuple(f"c{k}" for k in range(15))
        ctx = make_context(*(heisenberg.COMPLEX_VARS + names))
        vs = [MultiPoly.var(ctx, n) for n in heisenberg.COMPLEX_VARS]
        quad = MultiPoly.zero(ctx)
        k = 0
        for i in range(5):
            for j in range(i, 5):
                quad = quad + MultiPoly.var(ctx, names[k]) * vs[i] * vs[j]
                k += 1
        a, b = ansatz.lambda_closedness(RationalFunction(quad))
        assert a and b
