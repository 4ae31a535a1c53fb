import itertools

import pytest

from mcgv.homology import (SpMatrix, standard_form, check_symplectic,
                           element_order, lemma_order_transfer,
                           fast_signed_intersection)
from mcgv.words import word


def test_standard_form_blocks():
    J = standard_form(6)
    assert J[0][1] == 1 and J[1][0] == -1 and J[2][3] == 1
    assert sum(abs(x) for row in J for x in row) == 6


def test_identity_and_multiplication():
    I = SpMatrix.identity(4)
    assert I.is_identity()
    assert (I * I) == I


def test_gram_matches_basis(hom3):
    # the basis produced is symplectic: checked at construction; classes of
    # the named curves pair like their signed intersections
    m = hom3.model
    keys = m.curve_keys()
    for k1, k2 in itertools.combinations(keys, 2):
        alg = hom3.pair_classes(hom3.class_of_key(k1), hom3.class_of_key(k2))
        raw = fast_signed_intersection(m.curves[k1], m.curves[k2])
        assert alg == raw


def test_classes_primitive(hom3):
    import math
    for key in hom3.model.curve_keys():
        v = hom3.class_of_key(key)
        assert math.gcd(*[abs(x) for x in v]) == 1


def test_meridian_relation(hom5):
    # the g+1 meridian classes satisfy exactly one linear relation
    g = hom5.model.genus
    total = [0] * hom5.dim
    for i in range(1, g + 2):
        c = hom5.class_of_key(("B", i))
        total = [a + b for a, b in zip(total, c)]
    assert all(x == 0 for x in total)


def test_twist_matrix_is_transvection(hom3):
    key = ("B", 2)
    c = hom3.class_of_key(key)
    M = hom3.twist_matrix(key, 1)
    assert check_symplectic(M) == 1
    # fixes c, translates a dual vector by c
    assert M.apply(c) == c
    for other in (("A", 1), ("E", 1)):
        v = hom3.class_of_key(other)
        pairing = hom3.pair_classes(v, c)
        img = M.apply(v)
        assert img == tuple(x + pairing * y for x, y in zip(v, c))


def test_twist_matrices_commute_when_disjoint(hom14):
    m1 = hom14.twist_matrix(("B", 3), 1)
    m2 = hom14.twist_matrix(("B", 5), 1)
    assert m1 * m2 == m2 * m1


def test_symmetry_matrices(hom3):
    S = hom3.symmetry_matrix("S")
    R = hom3.symmetry_matrix("R")
    T = hom3.symmetry_matrix("T")
    assert S.multiplier == 1 and check_symplectic(S) == 1
    assert R.multiplier == -1 and check_symplectic(R) == -1
    assert T == S * R
    assert element_order(S) == 4
    assert element_order(R) == 2


def test_conjugation_compatibility(hom14):
    # W(S) M(A_g) W(S)^-1 = M(A_1)
    S = hom14.symmetry_matrix("S")
    assert S * hom14.twist_matrix(("A", "g"), 1) * S.inverse() \
        == hom14.twist_matrix(("A", 1), 1)
    # conjugating by the reflection inverts the twist
    R = hom14.symmetry_matrix("R")
    assert R * hom14.twist_matrix(("A", 1), 1) * R.inverse() \
        == hom14.twist_matrix(("A", 1), -1)


def test_word_matrix_functional_order(hom3):
    # S*A[1] applies the twist first
    w1 = hom3.word_matrix("S*A[1]")
    assert w1 == hom3.symmetry_matrix("S") * hom3.twist_matrix(("A", 1), 1)


def test_element_order_examples(hom14):
    assert element_order(hom14.word_matrix("S")) == 15
    assert element_order(hom14.word_matrix("R*R")) == 1
    assert element_order(SpMatrix.identity(28)) == 1
    assert element_order(hom14.word_matrix("S"), bound=5) == "exceeds-bound"


def test_lemma_order_transfer(hom14):
    ok, k = lemma_order_transfer(
        hom14, "S^2", "A[g]*B[6]*A[2]", "C[1]*B[8]*E[2]")
    assert ok and k == 15
    # hypothesis failure is reported, not raised
    ok, k = lemma_order_transfer(hom14, "S^2", "A[1]", "A[1]")
    assert not ok and k is None
    # trivial conjugator
    ok, k = lemma_order_transfer(hom14, "S^15", "A[1]", "A[1]")
    assert ok and k == 1


def test_matrix_json(hom3):
    M = hom3.word_matrix("S")
    data = M.to_json()
    assert data["multiplier"] == 1
    assert len(data["rows"]) == 6
    assert all(isinstance(x, str) for row in data["rows"] for x in row)


def test_inverse_exact(hom14):
    M = hom14.word_matrix("S^2*A[g]*B[6]^-1*R")
    assert (M * M.inverse()).is_identity()
    assert M.inverse().multiplier == M.multiplier
