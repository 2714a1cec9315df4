"""End-to-end smoke tests for the python module."""

from fractions import Fraction

import pytest

import signpoly

SHAPE_22_3 = {"variant": "shape", "shape": [2, 2], "n": 3}
MN_2_3 = {"variant": "mn", "m": 2, "n": 3}


def test_partition_helpers():
    assert signpoly.conjugate([6, 3, 3, 1]) == [4, 3, 3, 1, 1, 1]
    assert signpoly.frequency_rep([3, 3, 1, 1, 1]) == [3, 0, 2]


def test_counting():
    assert signpoly.hook_content_count([2, 2], 3) == 6
    assert signpoly.gordon_count(2, 2) == 10
    assert len(signpoly.enumerate_ssyt([2, 2], 3)) == 6
    assert len(signpoly.enumerate_ssyt_first_column([1, 2], [2, 2], 3)) == 3


def test_bijection_round_trip():
    family = signpoly.enumerate_family(MN_2_3)
    assert len(family) == 35
    for matrix in family:
        rows = signpoly.to_tableau(matrix)
        back = signpoly.to_sign_matrix(rows, 3, rows_count=2) if rows else [[0] * 3] * 2
        assert signpoly.pad_embed(back, 2) == matrix


def test_membership_and_decompose():
    point = [
        ["9/10", "0", "3/10", "4/5"],
        ["0", "1/10", "3/5", "-7/10"],
        ["0", "9/10", "-1/10", "1/5"],
    ]
    family = {"variant": "shape", "shape": [3, 3, 1], "n": 4}
    ok, violation = signpoly.membership(point, family)
    assert ok, violation

    terms = signpoly.decompose(point, family)
    weights = [Fraction(w) for w, _ in terms]
    assert sum(weights) == 1
    recombined = [[Fraction(0)] * 4 for _ in range(3)]
    for weight, matrix in terms:
        assert signpoly.in_family(matrix, family)
        for i in range(3):
            for j in range(4):
                recombined[i][j] += Fraction(weight) * matrix[i][j]
    expected = [[Fraction(x) for x in row] for row in point]
    assert recombined == expected


def test_membership_rejects_outsiders():
    ok, violation = signpoly.membership([[2]], {"variant": "mn", "m": 1, "n": 1})
    assert not ok
    assert "column partial sum" in violation


def test_certificates():
    matrix = [[1, 0, 1], [0, 1, -1]]
    assert signpoly.verify_vertex(matrix, SHAPE_22_3)
    cert = signpoly.vertex_certificate(matrix, SHAPE_22_3)
    assert cert["threshold"] == "7/2"


def test_facets():
    assert signpoly.facet_count({"variant": "mn", "m": 2, "n": 3}) == 13
    assert len(signpoly.facet_equalities(SHAPE_22_3)) == 6
    report = signpoly.verify_facets({"variant": "mn", "m": 2, "n": 2})
    assert report["pass"]


def test_face_lattice_dims():
    dims = signpoly.face_lattice_dims({"variant": "mn", "m": 1, "n": 1})
    assert dims == [-1, 0, 0, 1]


def test_asm_and_integer_points():
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert signpoly.is_asm(identity)
    staircase = {"variant": "shape", "shape": [3, 2, 1], "n": 3}
    points = signpoly.integer_points(staircase)
    assert points == signpoly.enumerate_family(staircase)
    assert sum(signpoly.is_asm(m) for m in points) == 7


def test_transportation_spec():
    y, z = signpoly.transportation_spec([1, 2, 3, 6], [6, 3, 3, 1], 7)
    assert y == [1, 0, 0, 2, 0, 1]
    assert z == [1, 1, 1, 0, 0, 1, 0]


def test_invalid_input_raises():
    with pytest.raises(Exception):
        signpoly.enumerate_family({"variant": "bogus"})
    ok, message = signpoly.check_sign_matrix([[-1]])
    assert not ok and "column" in message


def test_run_suite():
    passed, checks = signpoly.run_suite("counts")
    assert passed
    assert all(ok for _, ok, _ in checks)
