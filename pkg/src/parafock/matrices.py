"""Sparse graded matrix realization of the orthosymplectic superalgebra.

Finite rank n uses (4n+1) x (4n+1) matrices indexed by [-2n, 2n]; the
infinite-rank version drops the index bound and keeps finite support.  The
defining bilinear form pairs index 2i-1 with 2i on the positive side,
-2i with -2i+1 on the negative side, and fixes index 0.  Membership splits
into an even condition (ordinary transpose) and an odd one (supertranspose).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .patterns import indices
from .radicals import RadicalNumber, ZERO

Entry = tuple[int, int]

_SQRT2 = RadicalNumber.from_sqrt_rational(2)


def _partner(a: int) -> int:
    """Index paired with ``a`` by the defining form."""
    if a == 0:
        return 0
    if a < 0:
        return a + 1 if a % 2 == 0 else a - 1
    return a + 1 if a % 2 == 1 else a - 1


def _form_entry(a: int, b: int) -> int:
    """Value of the defining form at (a, b); zero unless b pairs with a."""
    if b != _partner(a):
        return 0
    if a == 0:
        return 1
    if a < 0:
        return 1
    return 1 if a % 2 == 1 else -1


class SparseSuperMatrix:
    """Finitely supported matrix over the radical ring with Z2 block grading."""

    __slots__ = ("entries", "n")

    def __init__(self, entries: dict[Entry, RadicalNumber] | None = None, n: int | None = None):
        self.entries = {
            pos: val for pos, val in (entries or {}).items() if not val.is_zero()
        }
        self.n = n
        if n is not None:
            for (r, c) in self.entries:
                if not (-2 * n <= r <= 2 * n and -2 * n <= c <= 2 * n):
                    raise DomainError(f"entry {(r, c)} outside rank-{n} index range")

    @staticmethod
    def unit(r: int, c: int, n: int | None = None, value=None) -> "SparseSuperMatrix":
        val = RadicalNumber.one() if value is None else value
        return SparseSuperMatrix({(r, c): val}, n)

    @staticmethod
    def zero(n: int | None = None) -> "SparseSuperMatrix":
        return SparseSuperMatrix({}, n)

    @property
    def parity(self) -> str:
        """'even', 'odd' or 'mixed' from the block pattern; zero counts as even."""
        has_even = any((r <= 0) == (c <= 0) for r, c in self.entries)
        has_odd = any((r <= 0) != (c <= 0) for r, c in self.entries)
        if has_even and has_odd:
            return "mixed"
        if has_odd:
            return "odd"
        return "even"

    def is_zero(self) -> bool:
        return not self.entries

    def _merge_rank(self, other: "SparseSuperMatrix") -> int | None:
        if self.n is not None and other.n is not None and self.n != other.n:
            raise DomainError("rank bound mismatch")
        return self.n if self.n is not None else other.n

    def __add__(self, other: "SparseSuperMatrix") -> "SparseSuperMatrix":
        entries = dict(self.entries)
        for pos, val in other.entries.items():
            entries[pos] = entries.get(pos, ZERO) + val
        return SparseSuperMatrix(entries, self._merge_rank(other))

    def __sub__(self, other: "SparseSuperMatrix") -> "SparseSuperMatrix":
        return self + other.scale(-1)

    def scale(self, coeff) -> "SparseSuperMatrix":
        if isinstance(coeff, int):
            coeff = RadicalNumber.from_rational(coeff)
        return SparseSuperMatrix(
            {pos: val * coeff for pos, val in self.entries.items()}, self.n
        )

    def __matmul__(self, other: "SparseSuperMatrix") -> "SparseSuperMatrix":
        by_row: dict[int, list[tuple[int, RadicalNumber]]] = {}
        for (r, c), val in other.entries.items():
            by_row.setdefault(r, []).append((c, val))
        out: dict[Entry, RadicalNumber] = {}
        for (r, c), val in self.entries.items():
            for c2, val2 in by_row.get(c, ()):
                pos = (r, c2)
                out[pos] = out.get(pos, ZERO) + val * val2
        return SparseSuperMatrix(out, self._merge_rank(other))

    def transpose(self) -> "SparseSuperMatrix":
        return SparseSuperMatrix(
            {(c, r): val for (r, c), val in self.entries.items()}, self.n
        )

    def supertranspose(self) -> "SparseSuperMatrix":
        """Supertranspose of an odd matrix: transpose with a sign on the
        upper-right block."""
        if self.parity != "odd":
            raise DomainError("supertranspose is defined here for odd matrices")
        out = {}
        for (r, c), val in self.entries.items():
            sign = 1 if r > 0 else -1  # entries with r <= 0 < c pick up -1
            out[(c, r)] = val * sign if sign == 1 else -val
        return SparseSuperMatrix(out, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseSuperMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        if not self.entries:
            return "SparseSuperMatrix(0)"
        body = ", ".join(
            f"({r},{c})={val}" for (r, c), val in sorted(self.entries.items())
        )
        return f"SparseSuperMatrix({body})"

    def support_indices(self) -> set[int]:
        out = set()
        for r, c in self.entries:
            out.add(r)
            out.add(c)
        return out

    def to_json(self) -> list[dict]:
        return [
            {"row": r, "col": c, "value": val.to_json()}
            for (r, c), val in sorted(self.entries.items())
        ]


def build_B(n: int) -> SparseSuperMatrix:
    """The defining form as an explicit matrix at finite rank."""
    if n < 1:
        raise DomainError("rank must be positive")
    entries: dict[Entry, RadicalNumber] = {}
    one = RadicalNumber.one()
    for a in range(-2 * n, 2 * n + 1):
        if a == 0:
            entries[(0, 0)] = one
        else:
            entries[(a, _partner(a))] = RadicalNumber.from_rational(
                _form_entry(a, _partner(a))
            )
    return SparseSuperMatrix(entries, n)


def _local_form(support: Iterable[int]) -> SparseSuperMatrix:
    entries: dict[Entry, RadicalNumber] = {}
    for a in set(support):
        if a == 0:
            entries[(0, 0)] = RadicalNumber.one()
        else:
            entries[(a, _partner(a))] = RadicalNumber.from_rational(
                _form_entry(a, _partner(a))
            )
    return SparseSuperMatrix(entries, None)


def is_member(X: SparseSuperMatrix) -> bool:
    """Membership of a homogeneous matrix in the superalgebra.

    Even: X^T B + B X = 0 with the even block pattern.
    Odd:  X^ST B - B X = 0 with the odd block pattern.
    """
    parity = X.parity
    if parity == "mixed":
        raise DomainError("split a mixed matrix into homogeneous parts first")
    support = X.support_indices()
    support |= {_partner(a) for a in support}
    B = _local_form(support)
    if parity == "even":
        defect = X.transpose() @ B + B @ X
    else:
        defect = X.supertranspose() @ B - B @ X
    return defect.is_zero()


def build_generator(sign: int, i: int, n: int | None = None) -> SparseSuperMatrix:
    """Ladder operator as a matrix; even for negative ``i``, odd for positive."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if i == 0 or (n is not None and abs(i) > n):
        raise DomainError(f"index {i} out of range")
    if i < 0:
        u = -i
        if sign > 0:
            pairs = {(-2 * u, 0): 1, (0, -2 * u + 1): -1}
        else:
            pairs = {(0, -2 * u): 1, (-2 * u + 1, 0): -1}
    else:
        if sign > 0:
            pairs = {(0, 2 * i): 1, (2 * i - 1, 0): 1}
        else:
            pairs = {(0, 2 * i - 1): 1, (2 * i, 0): -1}
    entries = {pos: _SQRT2 * v for pos, v in pairs.items()}
    return SparseSuperMatrix(entries, n)


def cartan_element(i: int, n: int | None = None) -> SparseSuperMatrix:
    """Diagonal Cartan basis element attached to index ``i``."""
    if i == 0:
        raise DomainError("index 0 does not exist")
    one = RadicalNumber.one()
    if i > 0:
        return SparseSuperMatrix(
            {(2 * i - 1, 2 * i - 1): one, (2 * i, 2 * i): -one}, n
        )
    return SparseSuperMatrix({(2 * i, 2 * i): one, (2 * i + 1, 2 * i + 1): -one}, n)


def matrix_degree(X: SparseSuperMatrix) -> int:
    parity = X.parity
    if parity == "mixed":
        raise DomainError("degree of a mixed matrix is undefined")
    return 1 if parity == "odd" else 0


def super_bracket(X: SparseSuperMatrix, Y: SparseSuperMatrix) -> SparseSuperMatrix:
    """Graded commutator XY - (-1)^(deg X * deg Y) YX of homogeneous matrices."""
    sign = (-1) ** (matrix_degree(X) * matrix_degree(Y))
    return X @ Y - (Y @ X).scale(sign)


@dataclass(frozen=True)
class RelationReport:
    checked: int
    failures: tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def triple_defect_matrix(
    xi: int, eta: int, eps: int, j: int, k: int, l: int, n: int | None = None
) -> SparseSuperMatrix:
    """Left side minus right side of the defining triple relation, as matrices."""
    cj = build_generator(xi, j, n)
    ck = build_generator(eta, k, n)
    cl = build_generator(eps, l, n)
    lhs = super_bracket(super_bracket(cj, ck), cl)
    dj, dk, dl = int(j > 0), int(k > 0), int(l > 0)
    eps_pow = eps if dl else 1
    rhs = SparseSuperMatrix.zero(n)
    if j == l and eps == -xi:
        rhs = rhs + ck.scale(-2 * eps_pow * ((-1) ** (dk * dl)))
    if k == l and eps == -eta:
        rhs = rhs + cj.scale(2 * eps_pow)
    return lhs - rhs


def verify_relations(n: int | None, index_bound: int | None = None) -> RelationReport:
    """Check the defining triple relations for all sign and index triples.

    Finite rank: indices run over the full range.  Infinite rank: supply
    ``index_bound`` to bound absolute index values.
    """
    if n is not None:
        idx = indices(n)
    else:
        if index_bound is None:
            raise DomainError("infinite rank needs an index bound")
        idx = indices(index_bound)
    failures = []
    checked = 0
    for xi, eta, eps in itertools.product((1, -1), repeat=3):
        for j, k, l in itertools.product(idx, repeat=3):
            checked += 1
            if not triple_defect_matrix(xi, eta, eps, j, k, l, n).is_zero():
                failures.append((xi, eta, eps, j, k, l))
    return RelationReport(checked, tuple(failures))
