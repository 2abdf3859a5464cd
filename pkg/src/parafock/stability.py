"""Row-stable patterns, rank-raising embeddings and the infinite-rank action.

A pattern is row-stable with respect to row ``s`` when rows ``s`` and above
all carry one partition in the negative half, padded by at least one zero,
with a zero positive half.  Such patterns determine infinite patterns (a
finite prefix plus a constant tail partition), and ladder operators act on
those by truncating to a large enough finite rank, acting there, and
re-extending; the answer does not depend on the truncation rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .engine import (
    StateVector,
    TableFamily,
    apply_letter,
    triple_residual,
)
from .errors import DomainError, InternalConsistencyError
from .patterns import GZPattern, Row, neg_len, pos_len, rho, validate_pattern, vacuum
from .radicals import RadicalNumber, ZERO


def stable_row_partition(row: Row) -> tuple[int, ...] | None:
    """The tail partition carried by a stable-form row, or None.

    Stable form means the positive half is zero and the negative half is a
    partition followed by at least one padding zero.
    """
    neg, pos = row
    if any(e for e in pos):
        return None
    if neg[-1] != 0:
        return None
    nu = list(neg)
    while nu and nu[-1] == 0:
        nu.pop()
    return tuple(nu)


def stability_index(pat: GZPattern) -> int | None:
    """Smallest row from which all higher rows carry one constant partition."""
    nu = stable_row_partition(pat.row(2 * pat.n))
    if nu is None:
        return None
    s = 2 * pat.n
    for r in range(2 * pat.n - 1, 0, -1):
        if stable_row_partition(pat.row(r)) != nu:
            break
        s = r
    return s


def _padded_row(nu: tuple[int, ...], r: int) -> Row:
    nl, pl = neg_len(r), pos_len(r)
    if len(nu) >= nl:
        raise DomainError(f"partition {nu} does not fit row {r} with a padding zero")
    return (nu + (0,) * (nl - len(nu)), (0,) * pl)


def phi_up(pat: GZPattern) -> GZPattern:
    """Embed into rank n+1 by repeating the top row twice with padding zeros.

    Requires the top row to have a zero positive half.
    """
    n = pat.n
    neg, pos = pat.row(2 * n)
    if any(pos):
        raise DomainError("top row must have a zero positive half")
    row_up = (neg + (0,), (0,) * n)
    row_top = (neg + (0,), (0,) * (n + 1))
    return GZPattern(pat.rows + (row_up, row_top))


@dataclass(frozen=True)
class InfinitePattern:
    """Row-stable pattern with infinitely many rows.

    ``prefix`` holds rows 1..2s where 2s is the smallest even stability
    index; every row above repeats the tail partition with padding zeros.
    """

    p: int
    prefix: tuple[Row, ...]
    tail: tuple[int, ...]

    @property
    def stable_rows(self) -> int:
        return len(self.prefix)

    def row(self, r: int) -> Row:
        if r <= len(self.prefix):
            return self.prefix[r - 1]
        return _padded_row(self.tail, r)

    def sort_key(self):
        return (len(self.prefix), tuple(self.prefix[::-1]), self.tail)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "prefix": [{"neg": list(neg), "pos": list(pos)} for neg, pos in self.prefix],
            "tail": list(self.tail),
        }

    @staticmethod
    def from_json(data: dict) -> "InfinitePattern":
        rows = tuple((tuple(r["neg"]), tuple(r["pos"])) for r in data["prefix"])
        return _canonical(data["p"], rows, tuple(data["tail"]))

    def __repr__(self) -> str:
        body = " / ".join(
            ",".join(map(str, neg)) + ";" + ",".join(map(str, pos))
            for neg, pos in self.prefix[::-1]
        )
        return f"InfinitePattern(tail={list(self.tail)} | {body})"


def _canonical(p: int, rows: tuple[Row, ...], tail: tuple[int, ...]) -> InfinitePattern:
    """Canonicalize explicit rows plus a tail to the minimal even prefix."""
    if tail and tail[0] > p:
        raise DomainError(f"tail partition {tail} exceeds the order bound {p}")
    # find the smallest row index from which everything matches the tail
    smallest = len(rows) + 1
    for r in range(len(rows), 0, -1):
        if stable_row_partition(rows[r - 1]) != tail:
            break
        smallest = r
    stable_even = smallest + 1 if smallest % 2 else smallest
    if stable_even > len(rows):
        rows = rows + tuple(
            _padded_row(tail, r) for r in range(len(rows) + 1, stable_even + 1)
        )
    prefix = rows[:stable_even]
    pat = GZPattern(prefix)
    report = validate_pattern(pat, p)
    if not report.ok:
        raise DomainError(f"invalid prefix rows: {report.violations}")
    return InfinitePattern(p, prefix, tail)


def extend(pat: GZPattern, p: int) -> InfinitePattern:
    """Infinite pattern whose rows above ``2n`` repeat the top row's partition."""
    neg, pos = pat.row(2 * pat.n)
    if any(pos):
        raise DomainError("top row must have a zero positive half")
    report = validate_pattern(pat, p)
    if not report.ok:
        raise DomainError(f"invalid pattern: {report.violations}")
    nu = list(neg)
    while nu and nu[-1] == 0:
        nu.pop()
    return _canonical(p, pat.rows, tuple(nu))


def truncate(ipat: InfinitePattern, rows: int) -> GZPattern:
    """Finite pattern of ``rows`` rows agreeing with the infinite one."""
    if rows % 2 or rows <= 0:
        raise DomainError("row count must be a positive even number")
    if rows < ipat.stable_rows:
        raise DomainError(
            f"cannot truncate to {rows} rows below the stability index {ipat.stable_rows}"
        )
    return GZPattern([ipat.row(r) for r in range(1, rows + 1)])


def infinite_vacuum(p: int) -> InfinitePattern:
    return extend(vacuum(1), p)


class InfiniteState:
    """Finite linear combination of infinite patterns with exact coefficients."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict[InfinitePattern, RadicalNumber] | None = None):
        self.p = p
        self.terms = {
            pat: coeff for pat, coeff in (terms or {}).items() if not coeff.is_zero()
        }

    @staticmethod
    def zero(p: int) -> "InfiniteState":
        return InfiniteState(p)

    @staticmethod
    def basis(pat: InfinitePattern) -> "InfiniteState":
        return InfiniteState(pat.p, {pat: RadicalNumber.one()})

    @staticmethod
    def vacuum_state(p: int) -> "InfiniteState":
        return InfiniteState.basis(infinite_vacuum(p))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "InfiniteState") -> "InfiniteState":
        if self.p != other.p:
            raise DomainError("order mismatch between states")
        terms = dict(self.terms)
        for pat, coeff in other.terms.items():
            terms[pat] = terms.get(pat, ZERO) + coeff
        return InfiniteState(self.p, terms)

    def __sub__(self, other: "InfiniteState") -> "InfiniteState":
        return self + other.scale(RadicalNumber.from_rational(-1))

    def scale(self, coeff) -> "InfiniteState":
        return InfiniteState(self.p, {pat: c * coeff for pat, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InfiniteState)
            and self.p == other.p
            and self.terms == other.terms
        )

    def sorted_terms(self) -> list[tuple[InfinitePattern, RadicalNumber]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{pat!r}" for pat, c in self.sorted_terms())

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "terms": [
                {"pattern": pat.to_json(), "coeff": coeff.to_json()}
                for pat, coeff in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "InfiniteState":
        terms = {
            InfinitePattern.from_json(entry["pattern"]): RadicalNumber.from_json(
                entry["coeff"]
            )
            for entry in data["terms"]
        }
        return InfiniteState(data["p"], terms)


def inner_product_infinite(a: InfiniteState, b: InfiniteState) -> RadicalNumber:
    if a.p != b.p:
        raise DomainError("order mismatch between states")
    total = ZERO
    for pat, coeff in a.terms.items():
        other = b.terms.get(pat)
        if other is not None:
            total = total + coeff * other
    return total


def _even_above(bound: int) -> int:
    """Smallest even integer strictly greater than ``bound``."""
    return bound + 2 if bound % 2 == 0 else bound + 1


def apply_infinite(
    sign: int,
    i: int,
    state: InfiniteState,
    tables: TableFamily,
    rows: int | None = None,
) -> InfiniteState:
    """Act with one ladder operator on an infinite state by truncation.

    Per pattern the truncation uses the smallest even row count exceeding
    both the stability index and the operator's row; ``rows`` overrides it
    (used to exercise truncation independence).
    """
    if i == 0:
        raise DomainError("operator index 0 does not exist")
    if state.p != tables.p:
        raise DomainError("state and tables disagree on the order")
    out = InfiniteState.zero(state.p)
    for ipat, coeff in state.terms.items():
        need = max(ipat.stable_rows, rho(i))
        use = _even_above(need) if rows is None else rows
        if use % 2 or use <= need:
            raise DomainError(
                f"truncation to {use} rows is not above the required {need}"
            )
        finite = truncate(ipat, use)
        table = tables.for_rank(use // 2)
        result = apply_letter((sign, i), StateVector.basis(finite, state.p), table)
        terms: dict[InfinitePattern, RadicalNumber] = {}
        for pat, c in result.terms.items():
            if any(pat.row(2 * pat.n)[1]):
                raise InternalConsistencyError(
                    "truncation margin violated: result top row has positive entries"
                )
            ext = extend(pat, state.p)
            terms[ext] = terms.get(ext, ZERO) + c
        out = out + InfiniteState(state.p, terms).scale(coeff)
    return out


def apply_infinite_word(
    word: Sequence[tuple[int, int]], state: InfiniteState, tables: TableFamily
) -> InfiniteState:
    for sign, i in reversed(list(word)):
        state = apply_infinite(sign, i, state, tables)
    return state


def triple_residual_infinite(
    xi: int,
    eta: int,
    eps: int,
    j: int,
    k: int,
    l: int,
    state: InfiniteState,
    tables: TableFamily,
) -> InfiniteState:
    """Triple-relation defect on an infinite state, via one shared truncation.

    The margin of six rows covers the three ladder actions, each of which
    can raise the stability index by at most two.
    """
    out = InfiniteState.zero(state.p)
    for ipat, coeff in state.terms.items():
        need = max(ipat.stable_rows, rho(j), rho(k), rho(l)) + 6
        use = need if need % 2 == 0 else need + 1
        finite = truncate(ipat, use)
        table = tables.for_rank(use // 2)
        residual = triple_residual(
            xi, eta, eps, j, k, l, StateVector.basis(finite, state.p), table
        )
        terms: dict[InfinitePattern, RadicalNumber] = {}
        for pat, c in residual.terms.items():
            if any(pat.row(2 * pat.n)[1]):
                raise InternalConsistencyError(
                    "truncation margin violated: residual top row has positive entries"
                )
            ext = extend(pat, state.p)
            terms[ext] = terms.get(ext, ZERO) + c
        out = out + InfiniteState(state.p, terms).scale(coeff)
    return out
