import itertools

import pytest

from parafock import (
    DomainError,
    RadicalNumber,
    ReducedMETable,
    StateVector,
    TableDepthError,
    TopRow,
    apply_annihilation,
    apply_creation,
    apply_word,
    basis_through_degree,
    cartan_eigenvalue,
    derive_reduced_mes,
    gl_generator,
    indices,
    inner_product,
    parse_word,
    triple_residual,
    vacuum,
)


def rad(q):
    return RadicalNumber.from_rational(q)


def sqrt(q):
    return RadicalNumber.from_sqrt_rational(q)


def test_reduced_me_base_case():
    for n in (1, 2, 3):
        for p in (1, 2):
            table = derive_reduced_mes(n, p, 1)
            entries = list(table.entries())
            assert len(entries) == 1
            top, k, g2 = entries[0]
            assert top == TopRow(n, (0,) * n, (0,) * n)
            assert k == -n and g2 == p


def test_reduced_me_rank_one_values():
    # frozen from the bracket-diagonal derivation; cross-checked by the
    # relation oracle: squared norms 2p (boson) and 2p(p-1) (fermion)
    for p in (1, 2, 3):
        table = derive_reduced_mes(1, p, 2)
        got = {(tuple(top.neg), tuple(top.pos), k): g2 for top, k, g2 in table.entries()}
        assert got[((0,), (0,), -1)] == p
        assert got[((1,), (0,), 1)] == 2
        if p > 1:
            assert got[((1,), (0,), -1)] == 2 * p - 2
        else:
            assert ((1,), (0,), -1) not in got


def test_order_bound_excludes_target():
    table = derive_reduced_mes(2, 1, 2)
    keys = {(t.neg, k) for t, k, _ in table.entries()}
    assert ((1, 0), -2) not in keys  # would exceed the order bound


def test_golden_single_creation(single_quantum):
    for p in (1, 2, 5):
        table = ReducedMETable(3, p)
        state = apply_creation(-2, StateVector.vacuum_state(3, p), table)
        assert state.terms == {single_quantum: sqrt(p)}


def test_golden_double_creation(two_quanta_stacked, two_quanta_split):
    from parafock import oracle

    for p in (1, 2, 3):
        table = ReducedMETable(3, p)
        state = apply_word(
            [(1, -3), (1, -2)], StateVector.vacuum_state(3, p), table
        )
        expected_support = {two_quanta_split} if p == 1 else {two_quanta_split, two_quanta_stacked}
        assert set(state.terms) == expected_support
        norm2 = inner_product(state, state)
        vev = oracle.vev(
            (
                oracle.annihilation(-2),
                oracle.annihilation(-3),
                oracle.creation(-3),
                oracle.creation(-2),
            ),
            p,
        )
        assert norm2 == vev == rad(p * p)


def test_annihilation_on_vacuum():
    for n, p in [(1, 1), (2, 2), (3, 1)]:
        table = ReducedMETable(n, p)
        vac = StateVector.vacuum_state(n, p)
        for j in indices(n):
            assert apply_annihilation(j, vac, table).is_zero()


def test_vacuum_bracket_is_order():
    n = 2
    for p in (1, 2, 3):
        table = ReducedMETable(n, p)
        vac = StateVector.vacuum_state(n, p)
        for j in indices(n):
            for k in indices(n):
                # the up-then-down term kills the vacuum, so the bracket on it
                # is the plain composition
                down_up = apply_annihilation(j, apply_creation(k, vac, table), table)
                expect = vac.scale(rad(p)) if j == k else StateVector.zero(n, p)
                assert down_up == expect


def test_word_identity_and_norms():
    table = ReducedMETable(2, 2)
    vac = StateVector.vacuum_state(2, 2)
    assert apply_word([], vac, table) == vac
    state = apply_word([(-1, 1), (1, 1)], vac, table)
    assert state == vac.scale(rad(2))  # annihilate after create gives p


def test_inner_product_orthonormal():
    p = 2
    basis = basis_through_degree(2, p, 2)
    for a in basis:
        for b in basis:
            expect = rad(1 if a == b else 0)
            assert inner_product(StateVector.basis(a, p), StateVector.basis(b, p)) == expect


def test_inner_product_mismatch():
    with pytest.raises(DomainError):
        inner_product(StateVector.vacuum_state(1, 1), StateVector.vacuum_state(1, 2))


def test_table_too_shallow():
    # a cap at degree d supports creation out of degree-d states and no further
    table = ReducedMETable(2, 2, max_degree=1)
    vac = StateVector.vacuum_state(2, 2)
    two = apply_creation(-2, apply_creation(-2, vac, table), table)
    assert two.degree == 2
    with pytest.raises(TableDepthError):
        apply_creation(-2, two, table)


def test_triple_residual_samples():
    n, p = 2, 2
    table = ReducedMETable(n, p)
    vac = StateVector.vacuum_state(n, p)
    for xi, eta, eps in itertools.product((1, -1), repeat=3):
        for j, k, l in [(-1, -2, 1), (1, 1, 1), (-2, 2, -2), (2, -1, 1)]:
            assert triple_residual(xi, eta, eps, j, k, l, vac, table).is_zero()
    state = apply_word([(1, 2), (1, -1)], vac, table)
    for j in indices(n):
        assert triple_residual(-1, 1, 1, j, j, j, state, table).is_zero()


def test_gl_embedding_brackets():
    # E[j,k] built from ladder brackets satisfies the gl product rule on states
    n, p = 2, 2
    table = ReducedMETable(n, p)
    states = [
        StateVector.vacuum_state(n, p),
        apply_word([(1, -2)], StateVector.vacuum_state(n, p), table),
        apply_word([(1, 1), (1, -2)], StateVector.vacuum_state(n, p), table),
    ]
    idx = indices(n)
    pairs = [(-2, -1), (-1, 1), (1, 2), (2, -2), (-1, -1), (1, 1)]
    for state in states:
        for (a, b), (c, d) in itertools.product(pairs, repeat=2):
            deg_ab = (int(a > 0) + int(b > 0)) % 2
            deg_cd = (int(c > 0) + int(d > 0)) % 2
            sign = (-1) ** (deg_ab * deg_cd)
            lhs = gl_generator(a, b, gl_generator(c, d, state, table), table) - (
                gl_generator(c, d, gl_generator(a, b, state, table), table).scale(rad(sign))
            )
            rhs = StateVector.zero(n, p)
            if b == c:
                rhs = rhs + gl_generator(a, d, state, table)
            if d == a:
                rhs = rhs - gl_generator(c, b, state, table).scale(rad(sign))
            assert lhs == rhs


def test_gl_diagonal_matches_cartan():
    n, p = 2, 3
    table = ReducedMETable(n, p)
    for pat in basis_through_degree(n, p, 2):
        state = StateVector.basis(pat, p)
        for i in indices(n):
            expect = state.scale(rad(cartan_eigenvalue(pat, i, p)))
            assert gl_generator(i, i, state, table) == expect


def test_cyclicity_every_pattern_reachable():
    n, p, degree = 2, 2, 3
    table = ReducedMETable(n, p)
    reached = set()
    frontier = [StateVector.vacuum_state(n, p)]
    reached.add(vacuum(n))
    for _ in range(degree):
        new = []
        for state in frontier:
            for i in indices(n):
                nxt = apply_creation(i, state, table)
                if not nxt.is_zero():
                    new.append(nxt)
                    reached.update(nxt.terms)
        frontier = new
    expected = set(basis_through_degree(n, p, degree))
    assert reached == expected


def test_creation_support_rule():
    # outputs agree below the operator's row and gain exactly one unit per
    # row from there up
    from parafock import rho

    n, p = 2, 2
    table = ReducedMETable(n, p)
    for pat in basis_through_degree(n, p, 2):
        for i in indices(n):
            out = apply_creation(i, StateVector.basis(pat, p), table)
            for dst in out.terms:
                for r in range(1, 2 * n + 1):
                    old, new = pat.row(r), dst.row(r)
                    if r < rho(i):
                        assert old == new
                    else:
                        diff = [
                            b - a
                            for a, b in zip(old[0] + old[1], new[0] + new[1])
                        ]
                        assert sorted(diff) == [0] * (len(diff) - 1) + [1]


def test_enumerate_rejects_invalid_top():
    from parafock import enumerate_patterns

    with pytest.raises(DomainError):
        enumerate_patterns(TopRow(2, (0, 1), (0, 0)))


def test_state_json_round_trip():
    table = ReducedMETable(2, 2)
    state = apply_word(parse_word("c+(-1),c+(-2)"), StateVector.vacuum_state(2, 2), table)
    assert StateVector.from_json(state.to_json()) == state


def test_parse_word():
    assert parse_word("c+(-2),c-(1)") == [(1, -2), (-1, 1)]
    with pytest.raises(DomainError):
        parse_word("c+(0)")
    with pytest.raises(DomainError):
        parse_word("nonsense")
