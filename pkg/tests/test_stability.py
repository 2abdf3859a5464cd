import itertools

import pytest

from parafock import (
    DomainError,
    GZPattern,
    InfinitePattern,
    InfiniteState,
    RadicalNumber,
    ReducedMETable,
    StateVector,
    TableFamily,
    apply_creation,
    apply_annihilation,
    apply_infinite,
    apply_infinite_word,
    apply_word,
    extend,
    generator_pattern,
    indices,
    infinite_vacuum,
    phi_up,
    rho,
    stability_index,
    triple_residual_infinite,
    truncate,
    vacuum,
    validate_pattern,
)


@pytest.fixture
def tall_example():
    # eight explicit rows settling into the partition (4, 3, 1)
    return GZPattern(
        [
            ((1,), ()),
            ((2,), (2,)),
            ((3, 2), (1,)),
            ((3, 3), (1, 0)),
            ((4, 3, 1), (0, 0)),
            ((4, 3, 1), (0, 0, 0)),
            ((4, 3, 1, 0), (0, 0, 0)),
            ((4, 3, 1, 0), (0, 0, 0, 0)),
        ]
    )


def test_stability_indices(single_quantum, two_quanta_stacked, two_quanta_split, tall_example):
    assert stability_index(single_quantum) == 3
    assert stability_index(two_quanta_stacked) == 5
    assert stability_index(two_quanta_split) == 5
    assert validate_pattern(tall_example, 4).ok
    assert stability_index(tall_example) == 7
    assert stability_index(vacuum(2)) == 1
    # a full negative row leaves no padding zero, so no stability index
    full = GZPattern([((1,), ()), ((1,), (0,))])
    assert stability_index(full) is None


def test_phi_up(single_quantum):
    up = phi_up(single_quantum)
    assert up.n == 4
    assert validate_pattern(up, 2).ok
    assert up.row(7) == ((1, 0, 0, 0), (0, 0, 0))
    assert up.row(8) == ((1, 0, 0, 0), (0, 0, 0, 0))
    assert phi_up(vacuum(1)) == vacuum(2)
    with_pos = GZPattern([((0,), ()), ((1,), (1,))])
    with pytest.raises(DomainError):
        phi_up(with_pos)


def test_extend_truncate_round_trip(single_quantum, two_quanta_stacked, tall_example):
    inf = extend(single_quantum, 2)
    assert inf.tail == (1,)
    assert truncate(inf, 6) == single_quantum
    assert truncate(inf, 10).n == 5
    big = extend(tall_example, 4)
    assert big.tail == (4, 3, 1)
    assert big.stable_rows == 8
    assert truncate(big, 8) == tall_example
    with pytest.raises(DomainError):
        truncate(big, 4)
    for pat in (single_quantum, two_quanta_stacked):
        assert truncate(extend(pat, 2), 6) == pat


def test_extend_requires_zero_positive_part():
    with_pos = GZPattern([((0,), ()), ((1,), (1,))])
    with pytest.raises(DomainError):
        extend(with_pos, 2)


def test_infinite_vacuum():
    iv = infinite_vacuum(3)
    assert iv.tail == ()
    assert truncate(iv, 6) == vacuum(3)


def test_infinite_pattern_json_round_trip(tall_example):
    inf = extend(tall_example, 4)
    assert InfinitePattern.from_json(inf.to_json()) == inf


def test_apply_infinite_matches_finite(single_quantum):
    for p in (1, 2, 3):
        tables = TableFamily(p)
        state = apply_infinite(1, -2, InfiniteState.vacuum_state(p), tables)
        assert state.terms == {
            extend(single_quantum, p): RadicalNumber.from_sqrt_rational(p)
        }
        for j in (-3, -1, 1, 2, 5):
            assert apply_infinite(-1, j, InfiniteState.vacuum_state(p), tables).is_zero()


def test_infinite_state_json_round_trip():
    tables = TableFamily(2)
    state = apply_infinite_word(
        [(1, 2), (1, -1)], InfiniteState.vacuum_state(2), tables
    )
    assert InfiniteState.from_json(state.to_json()) == state


def test_infinite_high_index_action():
    # indices beyond any finite test rank still act
    tables = TableFamily(2)
    state = apply_infinite(1, -5, InfiniteState.vacuum_state(2), tables)
    (pat, coeff), = state.sorted_terms()
    assert coeff == RadicalNumber.from_sqrt_rational(2)
    assert truncate(pat, 10) == generator_pattern(-5, 5)


def test_truncation_choice_is_irrelevant():
    p = 2
    tables = TableFamily(p)
    state = apply_infinite_word(
        [(1, 1), (1, -2)], InfiniteState.vacuum_state(p), tables
    )
    for sign, i in [(1, -1), (1, 3), (-1, 1), (-1, -2)]:
        default = apply_infinite(sign, i, state, tables)
        deeper = InfiniteState.zero(p)
        for pat, coeff in state.terms.items():
            need = max(pat.stable_rows, rho(i))
            rows = (need + 2 if need % 2 == 0 else need + 1) + 2
            deeper = deeper + apply_infinite(
                sign, i, InfiniteState(p, {pat: coeff}), tables, rows=rows
            )
        assert default == deeper


def test_infinite_triple_residual_margin():
    p = 2
    tables = TableFamily(p)
    state = apply_infinite_word(
        [(1, -1), (1, 2)], InfiniteState.vacuum_state(p), tables
    )
    for xi, eta, eps in itertools.product((1, -1), repeat=3):
        for j, k, l in [(1, 1, 1), (-2, 1, -2), (3, -3, 2), (-1, -1, -1)]:
            res = triple_residual_infinite(xi, eta, eps, j, k, l, state, tables)
            assert res.is_zero()


def creation_outputs(n, p, word):
    table = ReducedMETable(n, p)
    return apply_word([(1, i) for i in word], StateVector.vacuum_state(n, p), table)


def test_short_words_are_row_stable():
    n, p = 3, 2
    for length in (1, 2):
        for word in itertools.product(indices(n), repeat=length):
            for pat in creation_outputs(n, p, word).terms:
                assert stability_index(pat) is not None


def test_creation_growth_bound():
    n, p = 3, 2
    table = ReducedMETable(n, p)
    seeds = [generator_pattern(i, n) for i in indices(n)]
    for pat in seeds:
        s = stability_index(pat)
        if s is None or s >= 2 * n - 1:
            continue
        for i in indices(n):
            grown = apply_creation(i, StateVector.basis(pat, p), table)
            for out in grown.terms:
                s_out = stability_index(out)
                assert s_out is not None and s_out <= max(s + 2, rho(i) + 1)


def test_annihilation_preserves_stability_and_cutoff():
    n, p = 3, 3
    table = ReducedMETable(n, p)
    state = creation_outputs(n, p, (-2, -2))
    for pat in state.terms:
        s = stability_index(pat)
        base = StateVector.basis(pat, p)
        for i in indices(n):
            shrunk = apply_annihilation(i, base, table)
            if rho(i) > s:
                assert shrunk.is_zero()
            for out in shrunk.terms:
                assert stability_index(out) <= s


def test_embedding_coefficients_both_signs():
    # ladder coefficients on padded patterns equal the unpadded ones
    p = 2
    small = ReducedMETable(2, p)
    big = ReducedMETable(3, p)
    pats = [vacuum(2), generator_pattern(-2, 2), generator_pattern(2, 2)]
    two = apply_word([(1, -2), (1, -2)], StateVector.vacuum_state(2, p), small)
    pats.extend(two.terms)
    for pat in pats:
        if any(pat.row(4)[1]) or pat.row(4)[0][-1] != 0:
            continue
        for sign in (1, -1):
            for i in indices(2):
                before = (
                    apply_creation(i, StateVector.basis(pat, p), small)
                    if sign > 0
                    else apply_annihilation(i, StateVector.basis(pat, p), small)
                )
                after = (
                    apply_creation(i, StateVector.basis(phi_up(pat), p), big)
                    if sign > 0
                    else apply_annihilation(i, StateVector.basis(phi_up(pat), p), big)
                )
                assert after.terms == {phi_up(out): c for out, c in before.terms.items()}


def test_tail_weight_matches_signed_letter_count():
    n, p = 3, 2
    table = ReducedMETable(n, p)
    vac = StateVector.vacuum_state(n, p)
    letters = [(s, i) for s in (1, -1) for i in indices(n)]
    for word in itertools.product(letters, repeat=2):
        signed = sum(s for s, _ in word)
        if not 0 <= signed < n:
            continue
        for pat in apply_word(word, vac, table).terms:
            assert sum(pat.row(2 * n)[0]) == signed
            assert stability_index(pat) is not None
