import itertools
from fractions import Fraction

import pytest

from parafock import DomainError, RadicalNumber, ReducedMETable, StateVector
from parafock import apply_word, indices, inner_product
from parafock.oracle import (
    adjoint,
    annihilation,
    creation,
    creation_word,
    gl,
    gram_matrix,
    leading_principal_minors,
    vev,
)


def rad(q):
    return RadicalNumber.from_rational(q)


def test_pair_contraction():
    for p in (1, 2, 3):
        for j in (-2, -1, 1, 2):
            for k in (-2, -1, 1, 2):
                value = vev((annihilation(j), creation(k)), p)
                assert value == rad(p if j == k else 0)


def test_crossed_parafermion_pair():
    for p in (1, 2, 3):
        word = (annihilation(-2), annihilation(-3), creation(-3), creation(-2))
        assert vev(word, p) == rad(p * p)


def test_boson_double_mode():
    for p in (1, 2, 3):
        word = (annihilation(1), annihilation(1), creation(1), creation(1))
        assert vev(word, p) == rad(2 * p)


def test_fermion_double_mode():
    for p in (1, 2, 3):
        word = (annihilation(-1), annihilation(-1), creation(-1), creation(-1))
        assert vev(word, p) == rad(2 * p * (p - 1))


def test_weight_selection_zero():
    for word in [
        (creation(1),),
        (creation(1), creation(-1)),
        (annihilation(2), creation(1)),
        (gl(1, 2),),
        (annihilation(1), gl(1, -1), creation(2)),
    ]:
        assert vev(word, 2).is_zero()


def test_gl_letters():
    # diagonal letters read the vacuum weight, off-diagonal ones vanish on it
    assert vev((gl(1, 1),), 4) == rad(Fraction(4, 2))
    assert vev((gl(-1, -1),), 4) == rad(Fraction(-4, 2))
    assert vev((annihilation(2), gl(2, 1), creation(1)), 3) == rad(3)


def test_adjoint():
    word = (creation(-2), creation(1))
    assert adjoint(word) == (annihilation(1), annihilation(-2))
    with pytest.raises(DomainError):
        adjoint((gl(1, 1),))


def test_gram_trivial_cases():
    assert gram_matrix([()], 3) == [[rad(1)]]
    words = [(j,) for j in (-2, -1, 1, 2)]
    gram = gram_matrix(words, 3)
    for a in range(4):
        for b in range(4):
            assert gram[a][b] == rad(3 if a == b else 0)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_gram_positive_semidefinite(p):
    words = []
    for length in range(3):
        words.extend(itertools.product(indices(2), repeat=length))
    gram = gram_matrix(words, p)
    for minor in leading_principal_minors(gram):
        assert minor >= 0


@pytest.mark.parametrize("p", [1, 2])
def test_oracle_matches_engine_degree_two(p):
    n = 2
    table = ReducedMETable(n, p)
    vac = StateVector.vacuum_state(n, p)
    words = []
    for length in range(3):
        words.extend(itertools.product(indices(n), repeat=length))
    states = {w: apply_word([(1, i) for i in w], vac, table) for w in words}
    for wa in words:
        for wb in words:
            lhs = inner_product(states[wa], states[wb])
            rhs = vev(adjoint(creation_word(wa)) + creation_word(wb), p)
            assert lhs == rhs
