import pytest

from mcgv.words import MappingWord, WordError, word


def test_parse_simple_letters():
    w = word("S^2*A[g]*B[6]*A[2]*E[2]^-1*B[8]^-1*C[1]^-1")
    assert len(w.letters) == 7
    assert str(w) == "S^2*A[g]*B[6]*A[2]*E[2]^-1*B[8]^-1*C[1]^-1"


def test_index_expressions():
    w = word("C[g-1]*B[g+1]*E[0]")
    idx = [l.index for l in w.letters]
    assert idx[0].resolve(14) == 13
    assert idx[1].resolve(14) == 15
    assert idx[2].resolve(14) == 0


def test_parenthesized_powers():
    w = word("(S^2*A[1])^3")
    assert len(list(w.atoms())) == 9
    v = word("(A[1]*B[1])^-1")
    assert str(v) == "B[1]^-1*A[1]^-1"


def test_inverse_and_power():
    w = word("A[1]*B[2]^-1")
    assert str(w.inverse()) == "B[2]*A[1]^-1"
    assert str(w ** 0) == "1"
    assert len(list((w ** -2).atoms())) == 4


def test_atoms_functional_order():
    w = word("S*A[1]^2")
    atoms = list(w.atoms())
    assert atoms[0][0] == "S"
    assert atoms[1][0] == "A" and atoms[1][2] == 1
    assert len(atoms) == 3


def test_free_reduce():
    w = word("A[1]*A[1]^-1*B[2]")
    assert str(w.free_reduce()) == "B[2]"


def test_parse_errors():
    with pytest.raises(WordError):
        word("Q")
    with pytest.raises(WordError):
        word("A[]")
    with pytest.raises(WordError):
        word("(A[1]")
    with pytest.raises(WordError):
        word("A[2g]")


def test_empty_word():
    assert word("").letters == ()
