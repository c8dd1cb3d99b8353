"""Factorization over GF(2^m) and factored-input validation."""

from itertools import product as iproduct

import pytest

from char2sym import (
    FactorDecomposition,
    Poly,
    factor,
    is_irreducible,
    parse_factored,
    parse_poly,
    squarefree_decomposition,
    validate_factored_input,
)
from char2sym.errors import (
    NotCoprimeError,
    NotIrreducibleError,
    NotMonicError,
    ProductMismatchError,
    UnsupportedFieldError,
)


def monic_polys(field, deg):
    for tail in iproduct(range(field.order), repeat=deg):
        yield Poly(field, list(tail) + [1])


def brute_force_factor(f):
    """Oracle: trial division by monic polynomials of increasing degree."""
    out = {}
    g = f
    d = 1
    while g.degree > 0 and d <= f.degree:
        for cand in monic_polys(f.field, d):
            mult = 0
            while True:
                q, r = divmod(g, cand)
                if not r.is_zero:
                    break
                g = q
                mult += 1
            if mult:
                out[cand] = mult
        d += 1
    return out


class TestFactor:
    def test_irreducible_quadratic(self, gf2):
        fd = factor(parse_poly(gf2, "x^2+x+1"))
        assert str(fd) == "(x^2+x+1)^1"
        assert fd.entries[0].depth == 0

    def test_x4_plus_x2(self, gf2):
        fd = factor(parse_poly(gf2, "x^4+x^2"))
        assert str(fd) == "(x)^2 * (x+1)^2"

    def test_cube(self, gf2):
        fd = factor(parse_poly(gf2, "(x^2+x+1)^3"))
        assert str(fd) == "(x^2+x+1)^3"

    def test_exhaustive_gf2_deg6(self, gf2):
        for deg in range(1, 7):
            for f in monic_polys(gf2, deg):
                fd = factor(f)
                assert fd.product() == f
                got = {e.rho: e.multiplicity for e in fd.entries}
                assert got == brute_force_factor(f)
                for e in fd.entries:
                    assert e.depth == 0  # perfect field: all separable
                    pi_der = e.pi.derivative()
                    assert not pi_der.is_zero

    def test_exhaustive_gf4_deg4(self, gf4):
        for deg in range(1, 5):
            for f in monic_polys(gf4, deg):
                fd = factor(f)
                assert fd.product() == f
                assert {e.rho: e.multiplicity for e in fd.entries} == (
                    brute_force_factor(f)
                )

    def test_deterministic_given_seed(self, gf4):
        f = parse_poly(gf4, "x^6+x^3+x+2")
        assert str(factor(f, seed=1)) == str(factor(f, seed=1))

    def test_function_field_rejected(self, f2t):
        with pytest.raises(UnsupportedFieldError):
            factor(parse_poly(f2t, "x^2+t"))

    def test_non_monic_rejected(self, gf4):
        with pytest.raises(NotMonicError):
            factor(parse_poly(gf4, "2*x^2+1"))


class TestSquarefree:
    def test_perfect_square(self, gf2):
        f = parse_poly(gf2, "(x^2+x+1)^2")
        assert squarefree_decomposition(f) == {2: parse_poly(gf2, "x^2+x+1")}

    def test_mixed(self, gf2):
        f = parse_poly(gf2, "(x+1)^3*(x^2+x+1)^2*x")
        parts = squarefree_decomposition(f)
        assert parts == {
            1: parse_poly(gf2, "x"),
            2: parse_poly(gf2, "x^2+x+1"),
            3: parse_poly(gf2, "x+1"),
        }


class TestIsIrreducible:
    def test_known_values(self, gf2):
        assert is_irreducible(parse_poly(gf2, "x^2+x+1"))
        assert not is_irreducible(parse_poly(gf2, "x^2+1"))
        assert is_irreducible(parse_poly(gf2, "x^5+x^2+1"))
        assert not is_irreducible(parse_poly(gf2, "x^4+x^2"))

    def test_matches_factor_exhaustively(self, gf4):
        for deg in range(1, 4):
            for f in monic_polys(gf4, deg):
                expected = (
                    len(factor(f).entries) == 1
                    and factor(f).entries[0].multiplicity == 1
                )
                assert is_irreducible(f) == expected


class TestValidateFactoredInput:
    def test_example_separable(self, f2t):
        f = parse_poly(f2t, "(x^2+x+t)^3")
        fd = validate_factored_input(f, parse_factored(f2t, "(x^2+x+t)^3"))
        entry = fd.entries[0]
        assert (entry.depth, entry.multiplicity) == (0, 3)

    def test_example_inseparable(self, f2t):
        f = parse_poly(f2t, "(x^2+t)^3")
        fd = validate_factored_input(f, parse_factored(f2t, "(x^2+t)^3"))
        entry = fd.entries[0]
        assert (str(entry.pi), entry.depth) == ("x+t", 1)

    def test_product_mismatch(self, f2t):
        # (x+t)^2 = x^2+t^2, not x^2+t
        with pytest.raises(ProductMismatchError):
            validate_factored_input(
                parse_poly(f2t, "x^2+t"), parse_factored(f2t, "(x+t)^2")
            )

    def test_not_coprime(self, f2t):
        f = parse_poly(f2t, "(x+t)^2")
        with pytest.raises(NotCoprimeError):
            validate_factored_input(
                f, [(parse_poly(f2t, "x+t"), 1), (parse_poly(f2t, "x+t"), 1)]
            )

    def test_not_monic(self, f2t):
        f = parse_poly(f2t, "t*x+1").monic()
        with pytest.raises(NotMonicError):
            validate_factored_input(f, [(parse_poly(f2t, "t*x+1"), 1)])

    def test_depths_rederived(self, f2t):
        f = parse_poly(f2t, "(x^4+t)^2*(x^2+x+t)")
        fd = validate_factored_input(
            f, parse_factored(f2t, "(x^4+t)^2*(x^2+x+t)^1")
        )
        by_depth = {e.depth: e for e in fd.entries}
        assert by_depth[2].multiplicity == 2
        assert str(by_depth[2].pi) == "x+t"
        assert by_depth[0].multiplicity == 1

    def test_reducible_claim_over_finite_field(self, gf2):
        f = parse_poly(gf2, "x^2+1")
        with pytest.raises(NotIrreducibleError):
            validate_factored_input(f, [(f, 1)])

    def test_accepts_decomposition_object(self, gf2):
        f = parse_poly(gf2, "x^3+x+1")
        fd = factor(f)
        assert isinstance(validate_factored_input(f, fd), FactorDecomposition)
