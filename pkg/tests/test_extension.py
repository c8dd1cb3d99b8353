"""Simple extensions, traces, local algebras."""

import random

import pytest

from char2sym import (
    LocalAlgebra,
    Poly,
    SimpleExtension,
    local_reduce_power,
    parse_poly,
    trace_orthonormal_basis,
    x_power_mod,
)
from char2sym.errors import (
    NotInvertibleError,
    NotIrreducibleError,
    ReductionFailedError,
)
from char2sym.fields import Scalar


@pytest.fixture(scope="module")
def art_ext(f2t):
    # Artin-Schreier extension L = F2(t)[a], a^2 + a = t
    return SimpleExtension(parse_poly(f2t, "x^2+x+t"))


class TestExtensionArithmetic:
    def test_generator_relation(self, art_ext, f2t):
        a = art_ext.gen()
        t = art_ext.embed(f2t.t())
        assert a * a == a + t  # a^2 = a + t

    def test_char_two(self, art_ext):
        a = art_ext.gen()
        assert (a + a).raw == art_ext.zero

    def test_inverse_of_generator(self, art_ext, f2t):
        a = art_ext.gen()
        t = art_ext.embed(f2t.t())
        # a(a+1) = a^2 + a = t, so 1/a = (a+1)/t
        assert a * (a + 1) == t
        assert a.inverse() == (a + 1) * t.inverse()
        assert a * a.inverse() == art_ext.embed(1)

    def test_zero_not_invertible(self, art_ext):
        with pytest.raises(ZeroDivisionError):
            art_ext.inv(art_ext.zero)

    def test_reducible_modulus_not_field(self, f2t):
        ext = SimpleExtension(parse_poly(f2t, "(x+t)*(x+1)"), check=False)
        bad = ext.gen() + ext.embed(f2t.t())  # a + t is a zero divisor
        with pytest.raises(NotInvertibleError):
            bad.inverse()

    def test_reducible_modulus_rejected_over_finite(self, gf2):
        with pytest.raises(NotIrreducibleError):
            SimpleExtension(parse_poly(gf2, "x^2+1"))


class TestTrace:
    def test_paper_values(self, art_ext):
        assert art_ext.trace(art_ext.one) == art_ext.base.zero
        assert art_ext.trace(art_ext.coerce(art_ext.gen())) == art_ext.base.one

    def test_trace_of_square_is_square_of_trace(self, art_ext, f2t):
        rng = random.Random(6)
        t = f2t.t()
        for _ in range(40):
            x = art_ext.gen() * (t ** rng.randrange(3)) + art_ext.embed(
                rng.randrange(2)
            )
            lhs = Scalar(f2t, art_ext.trace(art_ext.coerce(x * x)))
            rhs = Scalar(f2t, art_ext.trace(art_ext.coerce(x))).frobenius()
            assert lhs == rhs

    def test_trace_linear(self, art_ext, f2t):
        t = f2t.t()
        x = art_ext.gen()
        y = art_ext.gen() * t + art_ext.embed(1)
        sx = Scalar(f2t, art_ext.trace(art_ext.coerce(x)))
        sy = Scalar(f2t, art_ext.trace(art_ext.coerce(y)))
        sxy = Scalar(f2t, art_ext.trace(art_ext.coerce(x + y)))
        assert sxy == sx + sy

    def test_degree_one_trace_is_identity(self, f2t):
        ext = SimpleExtension(parse_poly(f2t, "x+t"))
        val = ext.embed(f2t.t() + 1)
        assert ext.trace(ext.coerce(val)) == f2t.coerce(f2t.t() + 1)

    def test_trace_gram_nondegenerate_for_separable(self, gf2):
        from char2sym.linalg import det

        for text in ("x^2+x+1", "x^3+x+1", "x^4+x+1"):
            pi = parse_poly(gf2, text)
            ext = SimpleExtension(pi)
            d = ext.degree
            gen = ext.coerce(ext.gen())
            powers = [ext.one]
            for _ in range(2 * d - 2):
                powers.append(ext.mul(powers[-1], gen))
            gram = [
                [Scalar(gf2, ext.trace(powers[i + j])) for j in range(d)]
                for i in range(d)
            ]
            assert det(gram).raw != 0


class TestLocalAlgebra:
    def test_binomial_reduction(self, art_ext):
        # gamma^3 in the (gamma-a)^j basis: coefficients a^3, a^2, a
        alg = LocalAlgebra(art_ext, art_ext.gen(), 0, 3)
        p = local_reduce_power(3, alg)
        a = art_ext.gen()
        shift = Poly(art_ext, (art_ext.coerce(a), art_ext.one))
        expected = (
            Poly.constant(a**3)
            + shift.scale(a**2)
            + (shift * shift).scale(a)
        )
        assert p == expected

    def test_m_one_collapses_to_powers(self, art_ext):
        alg = LocalAlgebra(art_ext, art_ext.gen(), 0, 1)
        a = art_ext.gen()
        for i in range(6):
            assert alg.reduce_power(i) == Poly.constant(a**i)

    def test_depth_one_square(self, f2t):
        # gamma^4 = t^2 in F2(t)[X]/((X^2+t)^2)
        alg = LocalAlgebra(f2t, f2t.t(), 1, 2)
        assert alg.reduce_power(4) == Poly.constant(f2t.t() ** 2)

    def test_matches_long_division_oracle(self, f2t):
        for n, m in [(0, 3), (1, 2), (1, 3), (2, 2)]:
            alg = LocalAlgebra(f2t, f2t.t(), n, m)
            for i in range(4 * alg.dim + 1):
                direct = Poly.monomial(f2t, i) % alg.modulus
                assert alg.reduce_power(i) == direct

    def test_matches_oracle_over_extension(self, art_ext):
        alg = LocalAlgebra(art_ext, art_ext.gen(), 1, 2)
        for i in range(4 * alg.dim + 1):
            assert alg.reduce_power(i) == Poly.monomial(art_ext, i) % alg.modulus


class TestTraceOrthonormalBasis:
    def test_paper_basis(self, f2t):
        basis = trace_orthonormal_basis(parse_poly(f2t, "x^2+x+t"))
        assert [str(b) for b in basis] == ["a", "a+1"]

    def test_degree_one(self, f2t):
        basis = trace_orthonormal_basis(parse_poly(f2t, "x+t"))
        assert len(basis) == 1
        assert basis[0].raw == basis[0].field.one

    def test_gram_is_identity(self, gf2):
        pi = parse_poly(gf2, "x^2+x+1")
        basis = trace_orthonormal_basis(pi)
        ext = basis[0].field
        for i, bi in enumerate(basis):
            for j, bj in enumerate(basis):
                tr = ext.trace(ext.coerce(bi * bj))
                assert tr == (gf2.one if i == j else gf2.zero)

    def test_inseparable_modulus_fails(self, f2t):
        with pytest.raises(ReductionFailedError):
            trace_orthonormal_basis(parse_poly(f2t, "x^2+t"))
