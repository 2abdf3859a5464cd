"""Odd Gelfand-Tsetlin patterns for covariant gl(n|n) modules.

A pattern has ``2n`` integer rows counted from the bottom.  Row ``2k`` holds
negative-column entries ``m[-k..-1]`` followed by positive-column entries
``m[1..k]``; row ``2k-1`` holds ``m[-k..-1]`` and ``m[1..k-1]`` (row 1 has a
single entry).  Adjacent rows are tied alternately by 0/1-difference
("theta") constraints and by classical betweenness constraints, plus a
counting inequality making every row a covariant highest weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DomainError, ShapeError

Half = tuple[int, ...]
Row = tuple[Half, Half]


def neg_len(r: int) -> int:
    """Number of negative-column entries in row ``r``."""
    return (r + 1) // 2


def pos_len(r: int) -> int:
    """Number of positive-column entries in row ``r``."""
    return r // 2


def rho(i: int) -> int:
    """Row function attaching a bottom row index to the operator index ``i``."""
    if i == 0:
        raise DomainError("operator index 0 does not exist")
    return 2 * i if i > 0 else -2 * i - 1


def indices(n: int) -> list[int]:
    """The index set [-n, n] without 0, in increasing order."""
    return list(range(-n, 0)) + list(range(1, n + 1))


class GZPattern:
    """Immutable odd GZ pattern; hashable, usable as a dict key."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Sequence[Sequence[Sequence[int]]]):
        rows = tuple((tuple(neg), tuple(pos)) for neg, pos in rows)
        if not rows or len(rows) % 2:
            raise ShapeError(f"need a positive even number of rows, got {len(rows)}")
        for idx, (neg, pos) in enumerate(rows):
            r = idx + 1
            if len(neg) != neg_len(r) or len(pos) != pos_len(r):
                raise ShapeError(
                    f"row {r}: expected {neg_len(r)}+{pos_len(r)} entries, "
                    f"got {len(neg)}+{len(pos)}"
                )
        self.rows = rows
        self._hash: int | None = None

    @property
    def n(self) -> int:
        return len(self.rows) // 2

    def row(self, r: int) -> Row:
        """Row ``r`` (1-based from the bottom)."""
        return self.rows[r - 1]

    def m(self, col: int, r: int) -> int:
        """Entry in column ``col`` (negative or positive, never 0) of row ``r``."""
        neg, pos = self.rows[r - 1]
        if col < 0:
            return neg[col + len(neg)]
        return pos[col - 1]

    def row_weight(self, r: int) -> int:
        neg, pos = self.rows[r - 1]
        return sum(neg) + sum(pos)

    @property
    def degree(self) -> int:
        """Total particle number: the weight of the top row."""
        return self.row_weight(2 * self.n)

    @property
    def top(self) -> "TopRow":
        neg, pos = self.rows[-1]
        return TopRow(self.n, neg, pos)

    def sort_key(self):
        """Lexicographic on rows read top-down; fixes all emitted orderings."""
        return tuple(self.rows[::-1])

    def __eq__(self, other) -> bool:
        return isinstance(other, GZPattern) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        body = " / ".join(
            ",".join(map(str, neg)) + ";" + ",".join(map(str, pos))
            for neg, pos in self.rows[::-1]
        )
        return f"GZPattern({body})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [{"neg": list(neg), "pos": list(pos)} for neg, pos in self.rows],
        }

    @staticmethod
    def from_json(data: dict) -> "GZPattern":
        rows = [(row["neg"], row["pos"]) for row in data["rows"]]
        pat = GZPattern(rows)
        if pat.n != data.get("n", pat.n):
            raise ShapeError(f"rank field {data['n']} disagrees with {len(rows)} rows")
        return pat

    def render(self) -> str:
        """Aligned text triangle, rows top-down, dashed column separator."""
        width = max(
            (len(str(e)) for neg, pos in self.rows for e in neg + pos), default=1
        )
        n = self.n
        lines = []
        for r in range(2 * n, 0, -1):
            neg, pos = self.row(r)
            cells = [" " * width] * (n - len(neg)) + [str(e).rjust(width) for e in neg]
            cells.append(":")
            cells += [str(e).rjust(width) for e in pos]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def vacuum(n: int) -> GZPattern:
    """The all-zero pattern."""
    return GZPattern([((0,) * neg_len(r), (0,) * pos_len(r)) for r in range(1, 2 * n + 1)])


def row_weight(pat: GZPattern, k: int) -> int:
    """Sum of all entries of row ``k``; weakly increasing in ``k`` on valid
    patterns reachable from the vacuum."""
    if not 1 <= k <= 2 * pat.n:
        raise DomainError(f"row {k} out of range")
    return pat.row_weight(k)


def generator_pattern(i: int, n: int) -> GZPattern:
    """The 0/1 pattern attached to the creation operator with index ``i``.

    Rows ``rho(i)..2n`` have a single 1 in the leftmost column, lower rows
    are zero.
    """
    if not (-n <= i <= n) or i == 0:
        raise DomainError(f"index {i} out of range for rank {n}")
    start = rho(i)
    rows = []
    for r in range(1, 2 * n + 1):
        neg = [0] * neg_len(r)
        if r >= start:
            neg[0] = 1
        rows.append((tuple(neg), (0,) * pos_len(r)))
    return GZPattern(rows)


# ---------------------------------------------------------------------------
# Top rows and partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TopRow:
    """Highest weight of a covariant gl(n|n) module, split at the dashed line."""

    n: int
    neg: Half
    pos: Half

    def is_valid(self) -> bool:
        """Both halves weakly decreasing and the counting inequality holds."""
        if len(self.neg) != self.n or len(self.pos) != self.n:
            return False
        if any(e < 0 for e in self.neg + self.pos):
            return False
        if any(a < b for a, b in zip(self.neg, self.neg[1:])):
            return False
        if any(a < b for a, b in zip(self.pos, self.pos[1:])):
            return False
        return self.neg[-1] >= sum(1 for e in self.pos if e > 0)

    @property
    def degree(self) -> int:
        return sum(self.neg) + sum(self.pos)

    @staticmethod
    def from_partition(lam: Sequence[int], n: int) -> "TopRow":
        lam = tuple(lam)
        if any(a < b for a, b in zip(lam, lam[1:])) or any(e < 0 for e in lam):
            raise DomainError(f"{lam} is not a partition")
        if len(lam) > n and lam[n] > n:
            raise DomainError(f"{lam} violates the (n|n) hook condition for n={n}")
        neg = tuple(lam[i] if i < len(lam) else 0 for i in range(n))
        conj = conjugate(lam)
        pos = tuple(max(0, (conj[i] if i < len(conj) else 0) - n) for i in range(n))
        return TopRow(n, neg, pos)

    def partition(self) -> tuple[int, ...]:
        """The labelling partition: the negative half extended by the conjugate
        of the positive half."""
        tail = conjugate(self.pos)
        lam = list(self.neg) + list(tail)
        while lam and lam[-1] == 0:
            lam.pop()
        return tuple(lam)

    def increment(self, k: int) -> "TopRow":
        return self._shift(k, 1)

    def decrement(self, k: int) -> "TopRow":
        return self._shift(k, -1)

    def _shift(self, k: int, delta: int) -> "TopRow":
        if not (-self.n <= k <= self.n) or k == 0:
            raise DomainError(f"column {k} out of range for rank {self.n}")
        if k < 0:
            neg = list(self.neg)
            neg[k + self.n] += delta
            return TopRow(self.n, tuple(neg), self.pos)
        pos = list(self.pos)
        pos[k - 1] += delta
        return TopRow(self.n, self.neg, tuple(pos))

    def as_row(self) -> Row:
        return (self.neg, self.pos)

    def to_json(self) -> dict:
        return {"neg": list(self.neg), "pos": list(self.pos)}

    @staticmethod
    def from_json(data: dict) -> "TopRow":
        neg = tuple(data["neg"])
        return TopRow(len(neg), neg, tuple(data["pos"]))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = [e for e in lam if e > 0]
    if not lam:
        return ()
    return tuple(sum(1 for e in lam if e > j) for j in range(max(lam)))


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` with parts bounded by ``max_part``."""
    if total == 0:
        yield ()
        return
    cap = total if max_part is None else min(max_part, total)
    for first in range(cap, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def enumerate_top_rows(n: int, p: int, degree: int) -> list[TopRow]:
    """Top rows of all admissible modules of total size at most ``degree``.

    Admissible means the labelling partition has first part at most ``p``
    and fits the (n|n) hook.
    """
    if degree < 0:
        raise DomainError("degree must be nonnegative")
    out = []
    for total in range(degree + 1):
        for lam in partitions(total, max_part=p):
            if len(lam) > n and lam[n] > n:
                continue
            out.append(TopRow.from_partition(lam, n))
    return out


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[tuple[str, tuple[int, int]], ...]

    def __bool__(self) -> bool:
        return self.ok


def _counting_ok(row: Row) -> bool:
    neg, pos = row
    return neg[-1] >= sum(1 for e in pos if e > 0)


def validate_pattern(pat: GZPattern, p: int) -> ValidationReport:
    """Check the seven defining conditions plus the order bound ``m[-n,2n] <= p``.

    Violations carry the condition label (``"1"``..``"7"``, ``"p-bound"`` or
    ``"nonneg"``) and the (column, row) coordinates of the offending entry.
    """
    n = pat.n
    bad: list[tuple[str, tuple[int, int]]] = []

    for r in range(1, 2 * n + 1):
        neg, pos = pat.row(r)
        for c, e in enumerate(neg):
            if e < 0:
                bad.append(("nonneg", (c - len(neg), r)))
        for c, e in enumerate(pos):
            if e < 0:
                bad.append(("nonneg", (c + 1, r)))

    if pat.m(-n, 2 * n) > p:
        bad.append(("p-bound", (-n, 2 * n)))

    # condition 1: the top row is a covariant highest weight
    top = pat.row(2 * n)
    for j in range(-n, -1):
        if pat.m(j, 2 * n) < pat.m(j + 1, 2 * n):
            bad.append(("1", (j, 2 * n)))
    for j in range(1, n):
        if pat.m(j, 2 * n) < pat.m(j + 1, 2 * n):
            bad.append(("1", (j, 2 * n)))
    if not _counting_ok(top):
        bad.append(("1", (-1, 2 * n)))

    # condition 2: theta constraints on negative columns, rows (2s, 2s-1)
    for s in range(1, n + 1):
        for i in range(1, s + 1):
            if pat.m(-i, 2 * s) - pat.m(-i, 2 * s - 1) not in (0, 1):
                bad.append(("2", (-i, 2 * s - 1)))

    # condition 3: theta constraints on positive columns, rows (2s, 2s+1)
    for s in range(1, n):
        for i in range(1, s + 1):
            if pat.m(i, 2 * s) - pat.m(i, 2 * s + 1) not in (0, 1):
                bad.append(("3", (i, 2 * s)))

    # condition 4: counting bound on even rows
    for s in range(1, n + 1):
        if not _counting_ok(pat.row(2 * s)):
            bad.append(("4", (-1, 2 * s)))

    # condition 5: counting bound tying an odd row to the even row below it
    # (the rows branch by a horizontal strip; the bound on the odd row's own
    # positive entries follows from this one and condition 3)
    for s in range(2, n + 1):
        neg_above = pat.row(2 * s - 1)[0]
        pos_below = pat.row(2 * s - 2)[1]
        if neg_above[-1] < sum(1 for e in pos_below if e > 0):
            bad.append(("5", (-1, 2 * s - 1)))

    # condition 6: betweenness on positive columns, rows (2s, 2s-1)
    for s in range(1, n + 1):
        for i in range(1, s):
            if pat.m(i, 2 * s) < pat.m(i, 2 * s - 1):
                bad.append(("6", (i, 2 * s - 1)))
            if pat.m(i, 2 * s - 1) < pat.m(i + 1, 2 * s):
                bad.append(("6", (i, 2 * s - 1)))

    # condition 7: betweenness on negative columns, rows (2s+1, 2s)
    for s in range(1, n):
        for i in range(1, s + 1):
            if pat.m(-i - 1, 2 * s + 1) < pat.m(-i, 2 * s):
                bad.append(("7", (-i, 2 * s)))
            if pat.m(-i, 2 * s) < pat.m(-i, 2 * s + 1):
                bad.append(("7", (-i, 2 * s)))

    return ValidationReport(not bad, tuple(bad))


def is_valid_pattern(pat: GZPattern, p: int) -> bool:
    return validate_pattern(pat, p).ok


def _rows_compatible(upper_index: int, upper: Row, lower: Row) -> bool:
    """Conditions linking row ``upper_index`` with the row below, plus the
    counting bound on the lower row."""
    uneg, upos = upper
    lneg, lpos = lower
    if upper_index % 2 == 0:
        # (2s, 2s-1): thetas on negative columns, betweenness on positive
        if any(u - l not in (0, 1) for u, l in zip(uneg, lneg)):
            return False
        for i in range(len(lpos)):
            if not (upos[i] >= lpos[i] >= upos[i + 1]):
                return False
    else:
        # (2s+1, 2s): betweenness on negative columns, thetas on positive
        for i in range(len(lneg)):
            # columns -i-1, -i of the upper row bracket column -i below
            if not (uneg[i] >= lneg[i] >= uneg[i + 1]):
                return False
        if any(l - u not in (0, 1) for u, l in zip(upos, lpos)):
            return False
        # horizontal-strip boundary: the odd row's innermost negative entry
        # bounds the positive support of the even row below
        if uneg[-1] < sum(1 for e in lpos if e > 0):
            return False
    if lneg and lneg[-1] < sum(1 for e in lpos if e > 0):
        return False
    return True


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _rows_below(upper_index: int, upper: Row) -> Iterator[Row]:
    """All rows that may sit directly below ``upper`` in a valid pattern."""
    uneg, upos = upper
    r = upper_index - 1
    nl, pl = neg_len(r), pos_len(r)
    if upper_index % 2 == 0:
        neg_choices = [
            [u - 1, u] if u > 0 else [0] for u in uneg[:nl]
        ]
        pos_choices = [list(range(upos[i + 1], upos[i] + 1)) for i in range(pl)]
    else:
        neg_choices = [list(range(uneg[i + 1], uneg[i] + 1)) for i in range(nl)]
        pos_choices = [[u, u + 1] for u in upos[:pl]]
    for neg in itertools.product(*neg_choices):
        for pos in itertools.product(*pos_choices):
            row = (neg, pos)
            if _rows_compatible(upper_index, upper, row):
                yield row


def enumerate_patterns(top: TopRow) -> list[GZPattern]:
    """All valid patterns with the given top row, sorted deterministically."""
    if not top.is_valid():
        raise DomainError(f"{top} is not a valid top row")
    out: list[GZPattern] = []
    stack = [top.as_row()]

    def descend(r: int) -> None:
        if r == 1:
            out.append(GZPattern(stack[::-1]))
            return
        for row in _rows_below(r, stack[-1]):
            stack.append(row)
            descend(r - 1)
            stack.pop()

    descend(2 * top.n)
    out.sort(key=GZPattern.sort_key)
    return out


def dimension_covariant(lam: Sequence[int], n: int) -> int:
    """Dimension of the covariant module: the number of (n|n) semistandard
    supertableaux of shape ``lam``, counted by direct filling.

    Alphabet: unprimed ``1..n`` before primed ``1..n``.  Rows and columns
    weakly increase; unprimed letters are strict down columns, primed
    letters strict along rows.  Independent of the GZ machinery above.
    """
    lam = tuple(e for e in lam if e > 0)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"{lam} is not a partition")
    if len(lam) > n and lam[n] > n:
        raise DomainError(f"{lam} violates the (n|n) hook condition")
    if not lam:
        return 1
    # letters 0..n-1 unprimed, n..2n-1 primed
    rows = len(lam)
    count = 0
    grid: list[list[int]] = [[-1] * lam[i] for i in range(rows)]

    def fill(i: int, j: int) -> None:
        nonlocal count
        if i == rows:
            count += 1
            return
        ni, nj = (i, j + 1) if j + 1 < lam[i] else (i + 1, 0)
        lo = 0
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0 and j < lam[i - 1]:
            lo = max(lo, grid[i - 1][j])
        for letter in range(lo, 2 * n):
            if j > 0 and letter == grid[i][j - 1] and letter >= n:
                continue  # primed letters strict along rows
            if i > 0 and j < lam[i - 1] and letter == grid[i - 1][j] and letter < n:
                continue  # unprimed letters strict down columns
            grid[i][j] = letter
            fill(ni, nj)
        grid[i][j] = -1

    fill(0, 0)
    return count


# ---------------------------------------------------------------------------
# Cartan actions
# ---------------------------------------------------------------------------


def cartan_eigenvalue(pat: GZPattern, i: int, p: int, check: bool = True) -> Fraction:
    """Eigenvalue of the Cartan element with index ``i`` on the pattern.

    ``-p/2 + |row(2|i|-1)| - |row(2|i|-2)|`` for negative ``i`` and
    ``p/2 + |row(2i)| - |row(2i-1)|`` for positive ``i`` (row 0 sums to 0).
    """
    n = pat.n
    if i == 0 or not (-n <= i <= n):
        raise DomainError(f"index {i} out of range for rank {n}")
    if check and not is_valid_pattern(pat, p):
        raise DomainError("pattern is not valid for the given order")
    if i < 0:
        a = pat.row_weight(-2 * i - 1)
        b = pat.row_weight(-2 * i - 2) if -2 * i - 2 >= 1 else 0
        return Fraction(-p, 2) + a - b
    return Fraction(p, 2) + pat.row_weight(2 * i) - pat.row_weight(2 * i - 1)


@dataclass(frozen=True)
class WeightVector:
    """Full weight of a basis vector: one Cartan eigenvalue per index."""

    p: int
    eigenvalues: tuple[tuple[int, Fraction], ...]

    def __getitem__(self, i: int) -> Fraction:
        return dict(self.eigenvalues)[i]


def weight_vector(pat: GZPattern, p: int) -> WeightVector:
    eig = tuple((i, cartan_eigenvalue(pat, i, p, check=False)) for i in indices(pat.n))
    return WeightVector(p, eig)
