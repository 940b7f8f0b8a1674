import pytest

from lgrass import (CertificateError, IsotropicIndex, LaurentPolynomial,
                    enumerate_isotropic, length, positive_roots,
                    positivity_certificate, restrict, restrict_h, restrict_k,
                    restriction_table, root_for_entry, sigma)

ALPHA = IsotropicIndex(3, (1, 3, 5))
BETA = IsotropicIndex(3, (3, 5, 6))


def mono(exps, n=3):
    return LaurentPolynomial.monomial(n, exps)


def t(i, n=3):
    return LaurentPolynomial.var(n, i)


# the five products, from factors 1/t1^2-1, 1/(t1 t2)-1, t3/t2-1, 1/t2^2-1
A = mono((-2, 0, 0)) - 1
B = mono((-1, -1, 0)) - 1
C = mono((0, -1, 1)) - 1
D = mono((0, -2, 0)) - 1
K_EXPECTED = A * B + A * C + D * C + A * D * C + A * B * C
H_EXPECTED = ((-2 * t(1)) * (-t(1) - t(2)) + (-2 * t(1)) * (-t(2) + t(3))
              + (-2 * t(2)) * (-t(2) + t(3)))


class TestRestrictK:
    def test_worked_example(self):
        got = restrict_k(ALPHA, BETA)
        assert got.value == K_EXPECTED
        assert got.term_count == 5

    def test_identity_class(self):
        for n in (1, 2, 3):
            ident = IsotropicIndex(n, range(1, n + 1))
            for beta in enumerate_isotropic(n):
                res = restrict_k(ident, beta)
                assert res.value == LaurentPolynomial.one(n)
                assert res.term_count == 1

    def test_vanishing(self):
        res = restrict_k(IsotropicIndex(2, (3, 4)), IsotropicIndex(2, (1, 3)))
        assert res.value.is_zero()
        assert res.term_count == 0

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            restrict_k(IsotropicIndex(2, (1, 2)), IsotropicIndex(3, (1, 2, 3)))

    def test_sign_free_sum_of_products(self):
        # the value is (-1)^l times a sum of per-tableau products, each a
        # product of (e^theta - 1) over the certified roots
        for alpha in enumerate_isotropic(3):
            certs = positivity_certificate(alpha, BETA, "K")
            total = LaurentPolynomial.zero(3)
            for roots in certs:
                prod = LaurentPolynomial.one(3)
                for root in roots:
                    prod = prod * (root.exp_k(3) - 1)
                total = total + prod
            if length(alpha) % 2:
                total = -total
            assert total == restrict_k(alpha, BETA).value


class TestRestrictH:
    def test_worked_example(self):
        got = restrict_h(ALPHA, BETA)
        assert got.value == H_EXPECTED
        assert got.term_count == 3

    def test_identity_class(self):
        ident = IsotropicIndex(3, (1, 2, 3))
        assert restrict_h(ident, BETA).value == LaurentPolynomial.one(3)

    def test_vanishing(self):
        res = restrict_h(IsotropicIndex(2, (3, 4)), IsotropicIndex(2, (1, 3)))
        assert res.value.is_zero()

    def test_homogeneous_of_degree_length(self):
        for n in (2, 3):
            for alpha in enumerate_isotropic(n):
                for beta in enumerate_isotropic(n):
                    value = restrict_h(alpha, beta).value
                    assert value.is_homogeneous(length(alpha)) or value.is_zero()
                    assert not value.has_negative_exponent()

    def test_diagonal_nonzero(self):
        for n in (1, 2, 3):
            for alpha in enumerate_isotropic(n):
                assert not restrict_h(alpha, alpha).value.is_zero()
                assert not restrict_k(alpha, alpha).value.is_zero()

    def test_restrict_dispatcher(self):
        assert restrict(ALPHA, BETA, "K") == restrict_k(ALPHA, BETA)
        assert restrict(ALPHA, BETA, "H") == restrict_h(ALPHA, BETA)
        with pytest.raises(ValueError):
            restrict(ALPHA, BETA, "HH")


class TestVanishingPattern:
    def contained(self, lam, mu):
        return len(lam) <= len(mu) and all(a <= b for a, b in zip(lam, mu))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_support_is_sigma_containment(self, n):
        for alpha in enumerate_isotropic(n):
            for beta in enumerate_isotropic(n):
                expect = self.contained(sigma(alpha), sigma(beta))
                assert (not restrict_h(alpha, beta).value.is_zero()) == expect
                assert (not restrict_k(alpha, beta).value.is_zero()) == expect


class TestPositiveRoots:
    def test_count(self):
        assert len(positive_roots(3)) == 9  # n^2 roots in type C_n

    def test_example_factors(self):
        # the factor -2t1 comes from entry x=1, z=1
        root = root_for_entry(1, 1, BETA)
        assert root.kind == "double" and root.i == 1
        assert root.factor_h(3) == -2 * t(1)
        # the factor -t2+t3 comes from x=2, z=3
        root = root_for_entry(2, 3, BETA)
        assert (root.kind, root.i, root.j) == ("diff", 2, 3)
        assert root.factor_h(3) == -t(2) + t(3)

    def test_exp_k(self):
        root = root_for_entry(1, 2, BETA)  # factor -t1-t2, e^theta = 1/(t1 t2)
        assert root.exp_k(3) == mono((-1, -1, 0))

    def test_certificates_exhaustive(self):
        allowed = set(positive_roots(3))
        for alpha in enumerate_isotropic(3):
            for beta in enumerate_isotropic(3):
                for theory in ("K", "H"):
                    for roots in positivity_certificate(alpha, beta, theory):
                        for root in roots:
                            assert root in allowed

    def test_certificate_shape(self):
        certs = positivity_certificate(ALPHA, BETA, "H")
        assert len(certs) == 3
        assert all(len(roots) == length(ALPHA) for roots in certs)

    def test_invalid_entry_rejected(self):
        with pytest.raises(CertificateError):
            root_for_entry(1, 4, BETA)  # z exceeds the rank


class TestTable:
    def test_shape_and_determinism(self):
        table = restriction_table(2, "H")
        assert len(table) == 16
        assert table == restriction_table(2, "H")

    def test_rank_one_h_table(self):
        table = restriction_table(1, "H")
        one_pt = IsotropicIndex(1, (1,))
        bar_pt = IsotropicIndex(1, (2,))
        one = LaurentPolynomial.one(1)
        assert table[(one_pt, one_pt)] == one
        assert table[(one_pt, bar_pt)] == one
        assert table[(bar_pt, one_pt)].is_zero()
        assert table[(bar_pt, bar_pt)] == -2 * LaurentPolynomial.var(1, 1)
