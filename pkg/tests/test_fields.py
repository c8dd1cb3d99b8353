"""Field arithmetic: GF(2^m) and GF(2^m)(t)."""

import random

import pytest

from char2sym import BinaryField, RationalFunctionField, Scalar, field_from_spec
from char2sym.errors import (
    FieldMismatchError,
    NotASquareError,
    NotIrreducibleError,
    ParseError,
)


def naive_gf_mul(a, b, modulus, m):
    """Oracle: schoolbook carry-less product, then long division."""
    prod = 0
    for i in range(m):
        if (a >> i) & 1:
            prod ^= b << i
    for shift in range(2 * m, m - 1, -1):
        if (prod >> shift) & 1:
            prod ^= modulus << (shift - m)
    return prod


def random_f2t(field, rng, deg=4):
    num = rng.randrange(1, 1 << (deg + 1))
    den = rng.randrange(1, 1 << (deg + 1))
    t = field.t()
    num_s = field.from_t_coeffs([(num >> i) & 1 for i in range(num.bit_length())])
    den_s = field.from_t_coeffs([(den >> i) & 1 for i in range(den.bit_length())])
    return num_s / den_s


class TestBinaryField:
    def test_char_two_addition(self, gf2):
        one = gf2.scalar(1)
        assert (one + one).raw == 0

    def test_gf4_add_is_xor(self, gf4):
        assert (gf4.scalar(0b10) + gf4.scalar(0b11)).raw == 0b01

    def test_gf4_generator_square(self, gf4):
        g = gf4.scalar(0b10)
        assert (g * g).raw == naive_gf_mul(0b10, 0b10, gf4.modulus, 2) == 0b11

    def test_mul_matches_naive_oracle(self):
        rng = random.Random(11)
        for m in (2, 3, 4, 8):
            field = BinaryField(m)
            for _ in range(200):
                a, b = rng.randrange(field.order), rng.randrange(field.order)
                assert field.mul(a, b) == naive_gf_mul(a, b, field.modulus, m)

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 8])
    def test_field_axioms_random(self, m):
        field = BinaryField(m)
        rng = random.Random(m)
        for _ in range(100):
            x, y, z = (field.scalar(rng.randrange(field.order)) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + x == field.scalar(0)
            if y.raw:
                assert y * y.inverse() == field.scalar(1)

    def test_frobenius_is_homomorphism(self, gf8):
        rng = random.Random(3)
        for _ in range(100):
            x = gf8.scalar(rng.randrange(8))
            y = gf8.scalar(rng.randrange(8))
            assert (x + y).frobenius() == x.frobenius() + y.frobenius()
            assert (x * y).frobenius() == x.frobenius() * y.frobenius()

    def test_gf8_sqrt_is_fourth_power(self, gf8):
        for x in gf8.elements():
            assert x.sqrt() == x**4
            assert x.sqrt() * x.sqrt() == x

    def test_sqrt_inverts_frobenius(self):
        for m in (1, 2, 3, 4, 8):
            field = BinaryField(m)
            for x in field.elements():
                assert x.frobenius().sqrt() == x

    def test_frobenius_fixes_gf2(self, gf2):
        assert gf2.scalar(1).frobenius() == gf2.scalar(1)

    def test_default_moduli_are_irreducible(self):
        for m in range(1, 17):
            BinaryField(m)  # constructor re-checks irreducibility

    def test_reducible_modulus_rejected(self):
        with pytest.raises(NotIrreducibleError):
            BinaryField(2, 0b101)  # Y^2 + 1 = (Y+1)^2

    def test_descriptor_mismatch(self, gf2, gf4):
        with pytest.raises(FieldMismatchError):
            gf2.scalar(1) + gf4.scalar(1)

    def test_render_parse_round_trip(self, gf8):
        for x in gf8.elements():
            assert gf8.parse(str(x)) == x


class TestRationalFunctionField:
    def test_cancellation(self, f2t):
        t = f2t.t()
        assert t + (t + 1) == f2t.scalar(1)

    def test_inverse_of_t(self, f2t):
        t = f2t.t()
        assert str(t.inverse()) == "(1)/(t)"
        assert t.inverse() * t == f2t.scalar(1)

    def test_fraction_cancels(self, f2t):
        t = f2t.t()
        assert (t * t + t) / t == t + 1

    def test_frobenius(self, f2t):
        t = f2t.t()
        assert (t + 1).frobenius() == t * t + 1

    def test_t_is_not_a_square(self, f2t):
        assert not f2t.t().is_square()

    def test_sqrt(self, f2t):
        t = f2t.t()
        assert (t * t + 1).sqrt() == t + 1
        with pytest.raises(NotASquareError):
            t.sqrt()

    def test_square_round_trip_random(self, f2t):
        rng = random.Random(5)
        for _ in range(50):
            x = random_f2t(f2t, rng)
            sq = x * x
            assert sq.is_square()
            assert sq.sqrt() == x

    def test_field_axioms_random(self, f2t):
        rng = random.Random(17)
        for _ in range(40):
            x, y, z = (random_f2t(f2t, rng, 3) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + x == f2t.scalar(0)
            assert x / y * y == x

    def test_render_parse_round_trip(self, f2t):
        rng = random.Random(23)
        for _ in range(50):
            x = random_f2t(f2t, rng)
            assert f2t.parse(str(x)) == x

    def test_larger_base_field(self):
        field = RationalFunctionField(BinaryField(2))
        t = field.t()
        g = field.scalar(0b10)
        x = (g * t + 1) / (t + g)
        assert field.parse(str(x)) == x
        assert x * (t + g) == g * t + 1

    def test_zero_denominator(self, f2t):
        with pytest.raises(ZeroDivisionError):
            f2t.scalar(1) / f2t.scalar(0)


class TestFieldSpec:
    @pytest.mark.parametrize(
        "spec,expect",
        [
            ("gf2", "GF(2)"),
            ("gf(2^3)", "GF(2^3)"),
            ("gf(2^8):283", "GF(2^8)"),
            ("f2(t)", "F2(t)"),
            ("gf(2^2)(t)", "GF(2^2)(t)"),
        ],
    )
    def test_parse(self, spec, expect):
        assert repr(field_from_spec(spec)) == expect

    def test_spec_round_trip(self):
        for spec in ("gf2", "gf(2^4)", "f2(t)", "gf(2^2)(t)"):
            field = field_from_spec(spec)
            assert field_from_spec(field.spec_string()) == field

    def test_bad_specs(self):
        for spec in ("gf3", "gf(2^0)", "f3(t)", "gf(2^2):6", ""):
            with pytest.raises(ParseError):
                field_from_spec(spec)
