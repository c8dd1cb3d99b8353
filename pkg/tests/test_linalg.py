"""Exact matrix algebra: companions, inverses, char/min polynomials."""

import random

from char2sym import (
    Poly,
    block_companion,
    char_poly,
    companion,
    identity,
    is_symmetric,
    mat_inv,
    mat_mul,
    matrix_from_strings,
    min_poly,
    parse_poly,
    render_matrix,
    transpose,
)
from char2sym.fields import Scalar
from char2sym.fixtures import load_matrix


def random_matrix(field, rng, n):
    return [
        [Scalar(field, rng.randrange(field.order)) for _ in range(n)]
        for _ in range(n)
    ]


class TestCompanion:
    def test_companion_of_x2_plus_t(self, f2t):
        c = companion(parse_poly(f2t, "x^2+t"))
        assert render_matrix(c) == [["0", "t"], ["1", "0"]]

    def test_degree_one(self, f2t):
        c = companion(parse_poly(f2t, "x+t"))
        assert render_matrix(c) == [["t"]]

    def test_block_companion(self, f2t):
        c = block_companion(
            [parse_poly(f2t, "x"), parse_poly(f2t, "x^2+t")]
        )
        assert render_matrix(c) == [
            ["0", "0", "0"],
            ["0", "0", "t"],
            ["0", "1", "0"],
        ]

    def test_char_poly_of_companion_random(self, gf4):
        rng = random.Random(4)
        for _ in range(30):
            coeffs = [rng.randrange(4) for _ in range(rng.randrange(1, 7))]
            f = Poly(gf4, coeffs + [1])
            assert char_poly(companion(f)) == f
            assert min_poly(companion(f)) == f


class TestCharMinPoly:
    def test_identity(self, gf2):
        m = identity(gf2, 3)
        assert str(min_poly(m)) == "x+1"
        assert str(char_poly(m)) == "x^3+x^2+x+1"

    def test_paper_matrix_min_poly(self, f2t):
        m = load_matrix(f2t, "example1_M.json")
        f = parse_poly(f2t, "(x^2+x+t)^3")
        assert min_poly(m) == f
        assert char_poly(m) == f

    def test_min_divides_char_random(self, gf4):
        rng = random.Random(8)
        for _ in range(40):
            n = rng.randrange(1, 6)
            m = random_matrix(gf4, rng, n)
            mu = min_poly(m)
            chi = char_poly(m)
            assert chi.degree == n
            assert mu.is_monic and chi.is_monic
            assert (chi % mu).is_zero

    def test_min_poly_annihilates(self, gf8):
        rng = random.Random(12)
        for _ in range(20):
            n = rng.randrange(1, 5)
            mat = random_matrix(gf8, rng, n)
            mu = min_poly(mat)
            acc = [[Scalar(gf8, 0) for _ in range(n)] for _ in range(n)]
            power = identity(gf8, n)
            for i in range(mu.degree + 1):
                c = mu.coeff(i)
                acc = [
                    [acc[r][s] + c * power[r][s] for s in range(n)]
                    for r in range(n)
                ]
                power = mat_mul(power, mat)
            assert all(cell.raw == 0 for row in acc for cell in row)


class TestInverse:
    def test_inverse_round_trip(self, f2t):
        m = load_matrix(f2t, "example1_Q.json")
        inv = mat_inv(m)
        assert render_matrix(mat_mul(m, inv)) == render_matrix(
            identity(f2t, 6)
        )

    def test_transpose_symmetry(self, f2t):
        s = load_matrix(f2t, "example1_S.json")
        assert is_symmetric(s)
        assert render_matrix(transpose(s)) == render_matrix(s)

    def test_matrix_json_round_trip(self, f2t):
        m = load_matrix(f2t, "example2_M.json")
        again = matrix_from_strings(f2t, render_matrix(m))
        assert all(ra == rb for ra, rb in zip(m, again))
