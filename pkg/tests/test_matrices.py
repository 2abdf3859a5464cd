import itertools

import pytest

from parafock import (
    DomainError,
    RadicalNumber,
    SparseSuperMatrix,
    build_B,
    build_generator,
    cartan_element,
    indices,
    is_member,
    super_bracket,
    verify_relations,
)
from parafock.matrices import matrix_degree, triple_defect_matrix


def test_form_structure_rank_one():
    B = build_B(1)
    one = RadicalNumber.one()
    assert B.entries[(-2, -1)] == one and B.entries[(-1, -2)] == one
    assert B.entries[(0, 0)] == one
    assert B.entries[(1, 2)] == one and B.entries[(2, 1)] == -one
    assert len(B.entries) == 5


def test_form_blocks_symmetry():
    B = build_B(2)
    for (r, c), v in B.entries.items():
        if r <= 0 and c <= 0:
            assert B.entries[(c, r)] == v  # symmetric part
        if r > 0 and c > 0:
            assert B.entries[(c, r)] == -v  # antisymmetric part


def test_generators_are_members():
    for n in (1, 2):
        for sign in (1, -1):
            for i in indices(n):
                assert is_member(build_generator(sign, i, n))
    for i in (-7, -1, 1, 9):
        assert is_member(build_generator(1, i, None))


def test_parity_of_generators():
    for i in (1, 2):
        assert build_generator(1, i, 2).parity == "odd"
        assert build_generator(1, -i, 2).parity == "even"


def test_center_entry_not_member():
    assert not is_member(SparseSuperMatrix.unit(0, 0, 1))


def test_random_violation_not_member():
    assert not is_member(SparseSuperMatrix.unit(-2, -1, 1))


def test_mixed_parity_rejected():
    mixed = SparseSuperMatrix({(0, 1): RadicalNumber.one(), (-1, -1): RadicalNumber.one()})
    with pytest.raises(DomainError):
        is_member(mixed)
    with pytest.raises(DomainError):
        matrix_degree(mixed)


def test_generator_matrix_entries():
    sqrt2 = RadicalNumber.from_sqrt_rational(2)
    g = build_generator(1, -1, 1)
    assert g.entries == {(-2, 0): sqrt2, (0, -1): -sqrt2}
    g = build_generator(1, 1, 1)
    assert g.entries == {(0, 2): sqrt2, (1, 0): sqrt2}


def test_cartan_brackets():
    for n in (1, 2):
        for i in indices(n):
            up = build_generator(1, i, n)
            down = build_generator(-1, i, n)
            assert super_bracket(up, down) == cartan_element(i, n).scale(2)


def test_bracket_closure_and_membership():
    n = 2
    for i in indices(n):
        for j in indices(n):
            br = super_bracket(build_generator(1, i, n), build_generator(-1, j, n))
            assert is_member(br) or br.is_zero()


def test_bracket_parity_bookkeeping():
    n = 2
    for i in indices(n):
        for j in indices(n):
            x = build_generator(1, i, n)
            y = build_generator(-1, j, n)
            br = super_bracket(x, y)
            if br.is_zero():
                continue
            assert matrix_degree(br) == (matrix_degree(x) + matrix_degree(y)) % 2


def test_bracket_span_independent():
    # the brackets of raising with lowering generators span a space of the
    # full dimension 4 n^2
    n = 2
    mats = []
    for i in indices(n):
        for j in indices(n):
            mats.append(super_bracket(build_generator(1, i, n), build_generator(-1, j, n)))
    positions = sorted({pos for m in mats for pos in m.entries})
    zero = RadicalNumber.zero()
    rows = [
        [m.entries.get(pos, zero).as_fraction() for pos in positions] for m in mats
    ]  # bracket entries are rational: sqrt2 * sqrt2
    assert _rank(rows) == 4 * n * n


def _rank(rows):
    rows = [row[:] for row in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def test_graded_jacobi_samples():
    n = 2
    gens = [build_generator(s, i, n) for s in (1, -1) for i in indices(n)]
    picks = [(0, 1, 2), (3, 4, 5), (0, 4, 7), (2, 5, 6), (1, 3, 7)]
    for a, b, c in picks:
        x, y, z = gens[a], gens[b], gens[c]
        dx, dy = matrix_degree(x), matrix_degree(y)
        lhs = super_bracket(x, super_bracket(y, z))
        rhs = super_bracket(super_bracket(x, y), z) + super_bracket(
            y, super_bracket(x, z)
        ).scale((-1) ** (dx * dy))
        assert lhs == rhs


def test_relations_finite():
    for n in (1, 2):
        report = verify_relations(n)
        assert report.ok
        assert report.checked == 8 * (2 * n) ** 3


def test_relations_infinite_sample():
    report = verify_relations(None, index_bound=3)
    assert report.ok


def test_relations_need_bound_for_infinite():
    with pytest.raises(DomainError):
        verify_relations(None)


def test_mutation_detected():
    # flipping one sign in a generator breaks the relations
    sqrt2 = RadicalNumber.from_sqrt_rational(2)
    good = build_generator(1, 1, 1)
    bad = SparseSuperMatrix({(0, 2): sqrt2, (1, 0): -sqrt2}, 1)  # sign flipped
    defect = super_bracket(super_bracket(bad, build_generator(-1, 1, 1)), bad) - bad.scale(2)
    good_defect = super_bracket(
        super_bracket(good, build_generator(-1, 1, 1)), good
    ) - good.scale(2)
    assert good_defect.is_zero()
    assert not defect.is_zero()


def test_triple_defect_matrix_zero_everywhere():
    for xi, eta, eps in itertools.product((1, -1), repeat=3):
        assert triple_defect_matrix(xi, eta, eps, -1, 1, 1, 1).is_zero()


def test_matrix_json():
    g = build_generator(1, -2, 2)
    data = g.to_json()
    assert all(set(rec) == {"row", "col", "value"} for rec in data)
    assert len(data) == 2
