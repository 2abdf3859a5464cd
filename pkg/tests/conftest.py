"""Shared fixtures: the displayed rank-3 example patterns."""

import pytest

from parafock import GZPattern, vacuum


@pytest.fixture
def vac3():
    return vacuum(3)


@pytest.fixture
def single_quantum():
    # result of the lowest parafermion creation operator on the rank-3 vacuum
    return GZPattern(
        [
            ((0,), ()),
            ((0,), (0,)),
            ((1, 0), (0,)),
            ((1, 0), (0, 0)),
            ((1, 0, 0), (0, 0)),
            ((1, 0, 0), (0, 0, 0)),
        ]
    )


@pytest.fixture
def two_quanta_stacked():
    # the two-quanta pattern with both units in the leftmost column
    return GZPattern(
        [
            ((0,), ()),
            ((0,), (0,)),
            ((1, 0), (0,)),
            ((1, 0), (0, 0)),
            ((2, 0, 0), (0, 0)),
            ((2, 0, 0), (0, 0, 0)),
        ]
    )


@pytest.fixture
def two_quanta_split():
    # the two-quanta pattern with units in the two leftmost columns
    return GZPattern(
        [
            ((0,), ()),
            ((0,), (0,)),
            ((1, 0), (0,)),
            ((1, 0), (0, 0)),
            ((1, 1, 0), (0, 0)),
            ((1, 1, 0), (0, 0, 0)),
        ]
    )
