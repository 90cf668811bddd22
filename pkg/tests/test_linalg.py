"""Exact matrix arithmetic: spec examples, invariants, format round-trips."""

import random

import pytest

from sgdgs import _kernels_py
from sgdgs.errors import DimensionError, SingularMatrixError
from sgdgs.intpoly import IntPolynomial
from sgdgs.linalg import (
    IntMatrix,
    RatMatrix,
    charpoly,
    complement_matrix,
    det,
    format_matrix,
    parse_matrix,
    rat_inverse,
)
from sgdgs.datasets import REMARK1_CHARPOLY, remark1_pair
from sgdgs.sgraph import SignedGraph, permutation_matrix
from sgdgs.spectra import walk_matrix

from oracles import cofactor_charpoly, fraction_det


def path_graph(n, sign=1):
    return SignedGraph(n, tuple((i, i + 1, sign) for i in range(1, n)))


def test_det_examples():
    assert det(IntMatrix([[0, 1], [1, 0]])) == -1
    assert det(IntMatrix.identity(5)) == 1
    # the end-swapping automorphism of the 4-path fixes e, forcing det W = 0
    assert det(walk_matrix(path_graph(4).adjacency())) == 0


def test_det_requires_square():
    with pytest.raises(DimensionError):
        det(IntMatrix([[1, 2, 3], [4, 5, 6]]))


def test_charpoly_examples():
    assert charpoly(IntMatrix([[0, 1], [1, 0]])) == IntPolynomial([-1, 0, 1])
    assert charpoly(IntMatrix.zeros(4, 4)) == IntPolynomial([0, 0, 0, 0, 1])
    g, _ = remark1_pair()
    assert charpoly(g.adjacency()) == REMARK1_CHARPOLY


def test_charpoly_against_cofactor_oracle():
    rng = random.Random(101)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        assert list(charpoly(m).coeffs) == cofactor_charpoly(m.to_lists())


def test_det_against_fraction_elimination_oracle():
    rng = random.Random(202)
    for _ in range(60):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert det(IntMatrix(rows)) == fraction_det(rows)


def test_det_transpose_invariant():
    rng = random.Random(303)
    for _ in range(25):
        n = rng.randint(1, 12)
        m = IntMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
        assert det(m) == det(m.T)


def test_charpoly_conjugation_and_trace_invariants():
    rng = random.Random(404)
    for _ in range(25):
        n = rng.randint(2, 8)
        m = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        pi = list(range(1, n + 1))
        rng.shuffle(pi)
        p = permutation_matrix(pi)
        assert charpoly(p.T @ m @ p) == charpoly(m)
        trace = sum(m[i, i] for i in range(n))
        assert charpoly(m).coefficient(n - 1) == -trace


def test_rat_inverse_examples():
    i3 = RatMatrix.identity(3)
    assert rat_inverse(i3) == i3
    half = rat_inverse(RatMatrix([[2, 0], [0, 4]]))
    assert half == parse_matrix("2 2\n1/2 0\n0 1/4")
    g, _ = remark1_pair()
    w = walk_matrix(g.adjacency()).to_rational()
    assert w @ rat_inverse(w) == RatMatrix.identity(18)


def test_rat_inverse_singular():
    with pytest.raises(SingularMatrixError) as info:
        rat_inverse(RatMatrix([[1, 1], [1, 1]]))
    assert info.value.determinant == 0


def test_rat_inverse_involution():
    rng = random.Random(505)
    from fractions import Fraction

    done = 0
    while done < 15:
        n = rng.randint(1, 6)
        m = RatMatrix(
            [
                [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
                for _ in range(n)
            ]
        )
        try:
            inv = rat_inverse(m)
        except SingularMatrixError:
            continue
        assert rat_inverse(inv) == m
        done += 1


def test_complement_matrix_examples():
    assert complement_matrix(IntMatrix.zeros(2, 2)) == IntMatrix([[0, 1], [1, 0]])
    j_minus_i = IntMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert complement_matrix(j_minus_i) == IntMatrix.zeros(3, 3)


def test_remark1_conjugation_by_printed_q():
    from sgdgs.datasets import remark1_printed_q

    g, h = remark1_pair()
    q = remark1_printed_q()
    assert q.T @ g.adjacency().to_rational() @ q == h.adjacency().to_rational()


def test_matmul_dimension_error():
    with pytest.raises(DimensionError):
        IntMatrix([[1, 2]]) @ IntMatrix([[1, 2]])


def test_matrix_text_roundtrip():
    m = IntMatrix([[1, -2, 3], [0, 5, -6]])
    assert parse_matrix(format_matrix(m)) == m
    r = RatMatrix([["1/2", "-3/4"], ["5", "0"]])
    assert parse_matrix(format_matrix(r)) == r


def test_kernel_backends_agree():
    rng = random.Random(606)
    from sgdgs import kernels

    for _ in range(30):
        n = rng.randint(1, 8)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert kernels.charpoly_coeffs(rows) == _kernels_py.charpoly_coeffs(rows)
        assert kernels.det_int(rows) == _kernels_py.det_int(rows)
