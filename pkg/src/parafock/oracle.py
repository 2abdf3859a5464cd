"""Relation-level oracle for vacuum expectation values.

Evaluates <0| word |0> for words in creation, annihilation and gl letters
using nothing but the defining relations: the bracket of an annihilation
with a creation letter rewrites to gl letters, gl letters move right by
the tensor-operator rule, and the vacuum kills annihilation letters and is
an eigenvector of the diagonal gl letters.  No pattern machinery enters,
which is what makes this a ground truth for the engine.

Letters are tuples: ``("+", i)``, ``("-", i)`` and ``("E", j, k)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Sequence

from .errors import DomainError
from .radicals import RadicalNumber

Letter = tuple
Word = tuple[Letter, ...]


def creation(i: int) -> Letter:
    if i == 0:
        raise DomainError("index 0 does not exist")
    return ("+", i)


def annihilation(i: int) -> Letter:
    if i == 0:
        raise DomainError("index 0 does not exist")
    return ("-", i)


def gl(j: int, k: int) -> Letter:
    if j == 0 or k == 0:
        raise DomainError("index 0 does not exist")
    return ("E", j, k)


def letter_degree(letter: Letter) -> int:
    """Z2 degree: ladder letters are odd for positive indices, gl letters add."""
    if letter[0] == "E":
        return (int(letter[1] > 0) + int(letter[2] > 0)) % 2
    return int(letter[1] > 0)


def _weight(word: Word) -> dict[int, int]:
    wt: dict[int, int] = {}

    def bump(i: int, delta: int) -> None:
        new = wt.get(i, 0) + delta
        if new:
            wt[i] = new
        else:
            wt.pop(i, None)

    for letter in word:
        if letter[0] == "+":
            bump(letter[1], 1)
        elif letter[0] == "-":
            bump(letter[1], -1)
        else:
            bump(letter[1], 1)
            bump(letter[2], -1)
    return wt


def creation_word(idxs: Sequence[int]) -> Word:
    return tuple(creation(i) for i in idxs)


def adjoint(word: Word) -> Word:
    """Reverse the word and flip ladder signs; gl letters are not supported."""
    out = []
    for letter in reversed(word):
        if letter[0] == "+":
            out.append(annihilation(letter[1]))
        elif letter[0] == "-":
            out.append(creation(letter[1]))
        else:
            raise DomainError("adjoint is defined for ladder words only")
    return tuple(out)


@cache
def _vev(word: Word, p: int) -> Fraction:
    if not word:
        return Fraction(1)
    if _weight(word):
        return Fraction(0)
    # move the leftmost non-creation letter across a creation letter to its right
    for idx in range(len(word) - 1):
        x, y = word[idx], word[idx + 1]
        if x[0] == "+" or y[0] != "+":
            continue
        swap_sign = (-1) ** (letter_degree(x) * letter_degree(y))
        swapped = word[:idx] + (y, x) + word[idx + 2 :]
        total = swap_sign * _vev(swapped, p)
        if x[0] == "-":
            # bracket(c_i^-, c_j^+) = -swap_sign * 2 E[j, i]
            contracted = word[:idx] + (gl(y[1], x[1]),) + word[idx + 2 :]
            total -= swap_sign * 2 * _vev(contracted, p)
        else:
            # bracket(E[j,k], c_l^+) = delta(k, l) c_j^+
            if x[2] == y[1]:
                produced = word[:idx] + (creation(x[1]),) + word[idx + 2 :]
                total += _vev(produced, p)
        return total
    # word is (creations)* (non-creations)*; act on the vacuum from the right
    last = word[-1]
    if last[0] == "-":
        return Fraction(0)
    if last[0] == "E":
        if last[1] != last[2]:
            return Fraction(0)
        eigen = Fraction(p, 2) if last[1] > 0 else Fraction(-p, 2)
        return eigen * _vev(word[:-1], p)
    # all-creation words have nonzero weight, caught above
    raise AssertionError("unreachable")


def vev(word: Sequence[Letter], p: int) -> RadicalNumber:
    """Vacuum expectation value of the word at order ``p``; exact and total."""
    if p < 1:
        raise DomainError("order must be a positive integer")
    return RadicalNumber.from_rational(_vev(tuple(word), p))


def gram_matrix(words: Sequence[Sequence[int]], p: int) -> list[list[RadicalNumber]]:
    """Gram matrix of creation words given as index sequences.

    Entry (a, b) is <0| adjoint(w_a) w_b |0>; positive semidefinite for
    every positive integer order.
    """
    built = [creation_word(w) for w in words]
    return [[vev(adjoint(wa) + wb, p) for wb in built] for wa in built]


def leading_principal_minors(matrix: list[list[RadicalNumber]]) -> list[Fraction]:
    """Exact leading principal minors (entries must be rational)."""
    size = len(matrix)
    rows = [[matrix[i][j].as_fraction() for j in range(size)] for i in range(size)]
    minors = []
    for m in range(1, size + 1):
        sub = [row[:m] for row in rows[:m]]
        minors.append(_det(sub))
    return minors


def _det(rows: list[list[Fraction]]) -> Fraction:
    rows = [row[:] for row in rows]
    size = len(rows)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            f = rows[r][col] / rows[col][col]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return det
