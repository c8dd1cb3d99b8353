"""Classification and Gauss reduction of symmetric forms."""

import random

import pytest

from char2sym import (
    classify,
    congruence_check,
    gauss_reduce,
    identity,
    is_unit_certifiable,
    mat_mul,
    matrix_from_strings,
    render_matrix,
    transpose,
)
from char2sym.errors import (
    AlternatingFormError,
    NonSquarePivotError,
    NotSymmetricError,
)
from char2sym.fields import Scalar
from char2sym.fixtures import load_matrix
from char2sym.linalg import block_diagonal, det


def hyperbolic_plane(field):
    return matrix_from_strings(field, [["0", "1"], ["1", "0"]])


def random_congruent_to_identity(field, rng, n):
    while True:
        a = [
            [Scalar(field, rng.randrange(field.order)) for _ in range(n)]
            for _ in range(n)
        ]
        if det(a).raw != field.zero:
            return mat_mul(transpose(a), a)


class TestClassify:
    def test_hyperbolic_plane(self, gf2):
        c = classify(hyperbolic_plane(gf2))
        assert c.alternating and c.nondegenerate

    def test_identity(self, gf4):
        c = classify(identity(gf4, 4))
        assert not c.alternating
        assert c.nondegenerate and c.diagonal_all_squares

    def test_example1_gram(self, f2t):
        s = load_matrix(f2t, "example1_S.json")
        c = classify(s)
        # diagonal: 0, 1, 1, t^2, 1, t^4+t^2 — all squares, not all zero
        assert not c.alternating
        assert c.nondegenerate and c.diagonal_all_squares

    def test_requires_symmetry(self, gf2):
        m = matrix_from_strings(gf2, [["0", "1"], ["0", "0"]])
        with pytest.raises(NotSymmetricError):
            classify(m)


class TestUnitCertifiable:
    def test_paper_block(self, gf2):
        b = matrix_from_strings(
            gf2, [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
        )
        assert is_unit_certifiable(b)

    def test_hyperbolic_not(self, gf2):
        assert not is_unit_certifiable(hyperbolic_plane(gf2))

    def test_non_square_diagonal_not(self, f2t):
        s = matrix_from_strings(f2t, [["t", "0"], ["0", "1"]])
        assert not is_unit_certifiable(s)

    def test_zero_not(self, gf2):
        z = matrix_from_strings(gf2, [["0"]])
        assert not is_unit_certifiable(z)


class TestGaussReduce:
    def test_identity_is_fixed_point(self, gf2):
        red = gauss_reduce(identity(gf2, 4))
        assert render_matrix(red.u) == render_matrix(identity(gf2, 4))
        assert red.rank == 4

    def test_paper_block_congruence(self, gf2):
        b = matrix_from_strings(
            gf2, [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
        )
        red = gauss_reduce(b)
        assert red.rank == 3
        assert congruence_check(b, red.q, "qtq")
        assert congruence_check(b, red.p, "qtsq")

    def test_example1_reduction(self, f2t):
        s = load_matrix(f2t, "example1_S.json")
        red = gauss_reduce(s)
        assert red.rank == 6
        assert congruence_check(s, red.q, "qtq")

    def test_example2_reduction(self, f2t):
        s = load_matrix(f2t, "example2_S.json")
        red = gauss_reduce(s)
        assert red.rank == 6
        assert congruence_check(s, red.q, "qtq")

    def test_deterministic(self, f2t):
        s = load_matrix(f2t, "example2_S.json")
        u1 = render_matrix(gauss_reduce(s).u)
        u2 = render_matrix(gauss_reduce(s).u)
        assert u1 == u2

    def test_degenerate_rank(self, gf2):
        s = matrix_from_strings(
            gf2, [["1", "0", "1"], ["0", "0", "0"], ["1", "0", "1"]]
        )
        red = gauss_reduce(s)
        assert red.rank == 1
        psp = mat_mul(mat_mul(transpose(red.p), s), red.p)
        assert render_matrix(psp) == [
            ["1", "0", "0"],
            ["0", "0", "0"],
            ["0", "0", "0"],
        ]

    def test_alternating_start_rejected(self, gf2):
        with pytest.raises(AlternatingFormError):
            gauss_reduce(hyperbolic_plane(gf2))

    def test_non_square_pivot_rejected(self, f2t):
        with pytest.raises(NonSquarePivotError):
            gauss_reduce(matrix_from_strings(f2t, [["t"]]))

    def test_unit_block_plus_hyperbolics(self, gf4):
        # orthogonal-sum law: unit + hyperbolic blocks reduce fully
        blocks = [identity(gf4, 1), hyperbolic_plane(gf4), hyperbolic_plane(gf4)]
        s = block_diagonal(blocks, gf4)
        assert is_unit_certifiable(s)
        red = gauss_reduce(s)
        assert red.rank == 5
        assert congruence_check(s, red.q, "qtq")
        assert congruence_check(s, red.p, "qtsq")

    def test_hyperbolic_sum_is_alternating(self, gf2):
        s = block_diagonal(
            [hyperbolic_plane(gf2), hyperbolic_plane(gf2)], gf2
        )
        assert classify(s).alternating
        assert not is_unit_certifiable(s)

    def test_fuzz_gf4(self, gf4):
        rng = random.Random(99)
        for _ in range(150):
            n = rng.randrange(1, 9)
            s = random_congruent_to_identity(gf4, rng, n)
            assert is_unit_certifiable(s)
            red = gauss_reduce(s)
            assert red.rank == n
            assert congruence_check(s, red.q, "qtq")
            assert congruence_check(s, red.p, "qtsq")

    def test_fuzz_f2t_small(self, f2t):
        rng = random.Random(5)
        t = f2t.t()
        pool = [f2t.scalar(0), f2t.scalar(1), t, t + 1, t * t, t.inverse()]
        for _ in range(40):
            n = rng.randrange(1, 5)
            while True:
                a = [[rng.choice(pool) for _ in range(n)] for _ in range(n)]
                if det(a).raw != f2t.zero:
                    break
            s = mat_mul(transpose(a), a)
            red = gauss_reduce(s)
            assert red.rank == n
            assert congruence_check(s, red.q, "qtq")


class TestCongruenceCheck:
    def test_paper_p_matrix(self, gf2):
        b = matrix_from_strings(
            gf2, [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
        )
        p = matrix_from_strings(
            gf2, [["1", "1", "1"], ["1", "0", "1"], ["0", "1", "1"]]
        )
        assert congruence_check(b, p, "qtsq")

    def test_identity_trivial(self, gf2):
        i2 = identity(gf2, 2)
        assert congruence_check(i2, i2, "qtq")
        assert congruence_check(i2, i2, "qtsq")

    def test_example1_q_against_s(self, f2t):
        s = load_matrix(f2t, "example1_S.json")
        q = load_matrix(f2t, "example1_Q.json")
        assert congruence_check(s, q, "qtq")

    def test_example2_q_against_s(self, f2t):
        s = load_matrix(f2t, "example2_S.json")
        q = load_matrix(f2t, "example2_Q.json")
        assert congruence_check(s, q, "qtq")

    def test_failing_check(self, gf2):
        i2 = identity(gf2, 2)
        h = hyperbolic_plane(gf2)
        assert not congruence_check(h, i2, "qtq")
