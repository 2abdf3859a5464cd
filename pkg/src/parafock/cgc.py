"""Clebsch-Gordan coefficients for standard (x) covariant gl(n|n) modules.

A coefficient factorizes along the subalgebra chain
gl(n|n) > gl(n|n-1) > gl(n-1|n-1) > ... into one isoscalar factor per
adjacent row pair.  Each factor depends only on the two rows it straddles
together with the changed column in each row, which is what the memo keys
record.  Twelve closed forms cover the sign combinations of the changed
columns; 0/1-difference ("theta") selection factors kill transitions whose
target would violate a pattern condition, so vanishing is a value, not an
error.

Theta symbols inside sign exponents are always evaluated on the unchanged
(source) rows; the composite convention is pinned down by the unitarity and
triple-relation gates in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .errors import DomainError, InternalConsistencyError
from .patterns import (
    GZPattern,
    Row,
    TopRow,
    _rows_compatible,
    neg_len,
    pos_len,
)
from .radicals import RadicalNumber, ZERO

_ONE = RadicalNumber.one()


def sign_S(k: int, q: int) -> int:
    """+1 if k <= q, else -1."""
    return 1 if k <= q else -1


def _sgn(e: int) -> int:
    return -1 if e & 1 else 1


def _l(row: Row, col: int) -> int:
    """Shifted label: m - col on negative columns, -m + col on positive ones."""
    neg, pos = row
    if col < 0:
        return neg[col + len(neg)] - col
    return -pos[col - 1] + col


def _value(sign: int, outer: Fraction, radicand: Fraction) -> RadicalNumber:
    if radicand < 0:
        raise InternalConsistencyError(f"negative radicand {radicand}")
    if radicand == 0 or outer == 0:
        return ZERO
    return RadicalNumber.from_sqrt_rational(radicand, 1 if sign > 0 else -1) * outer


def _ratio(num_terms, den_terms) -> Fraction:
    """Exact product ratio with zero-factor cancellation.

    Padding zeros in a row make identical linear factors appear in both
    products, always in matching pairs, so equal counts of vanishing factors
    cancel; an unmatched vanishing denominator signals a convention fault.
    """
    num = 1
    num_zeros = 0
    for t in num_terms:
        if t == 0:
            num_zeros += 1
        else:
            num *= t
    den = 1
    den_zeros = 0
    for t in den_terms:
        if t == 0:
            den_zeros += 1
        else:
            den *= t
    if num_zeros > den_zeros:
        return Fraction(0)
    if num_zeros < den_zeros:
        raise InternalConsistencyError("vanishing denominator in an isoscalar factor")
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# gl(t|t) > gl(t|t-1) factors: rows (2t, 2t-1), change at column k of the
# upper row and column q of the lower row (q None when the lower row keeps).
# ---------------------------------------------------------------------------


@cache
def isoscalar_even(t: int, upper: Row, lower: Row, k: int, q: int | None = None) -> RadicalNumber:
    if not (-t <= k <= t) or k == 0:
        raise DomainError(f"upper column {k} out of range at level {t}")
    if q is not None and (q == 0 or q < -t or q > t - 1):
        raise DomainError(f"lower column {q} out of range at level {t}")

    def lu(c: int) -> int:
        return _l(upper, c)

    def ll(c: int) -> int:
        return _l(lower, c)

    def th(i: int) -> int:
        # theta on a negative column between rows 2t and 2t-1
        return upper[0][i + t] - lower[0][i + t]

    if q is None and k < 0:
        if th(k) == 1:
            return ZERO
        sign = _sgn(t + k) * _sgn(sum(th(i) for i in range(k, 0)))
        rad = _ratio(
            [lu(k) - lu(i) + 1 for i in range(-t, 0) if i != k]
            + [lu(k) - ll(s) for s in range(1, t)],
            [lu(k) - ll(i) for i in range(-t, 0) if i != k]
            + [lu(k) - lu(s) + 1 for s in range(1, t + 1)],
        )
        return _value(sign, Fraction(1), rad)

    if q is None and k > 0:
        if t == 1:
            # single-column case; its theta sign is the slot sign, applied
            # once by the assembly rather than here
            rad = _ratio([lu(-1) - lu(1)], [ll(-1) - lu(1) + 1])
            return _value(1, Fraction(1), rad)
        rad = _ratio(
            [lu(i) - lu(k) for i in range(-t, 0)]
            + [ll(s) - lu(k) + 1 for s in range(1, t)],
            [ll(i) - lu(k) + 1 for i in range(-t, 0)]
            + [lu(s) - lu(k) for s in range(1, t + 1) if s != k],
        )
        return _value(1, Fraction(1), rad)

    if k < 0 and q < 0:
        delta = 1 if k == q else 0
        if not delta and not (th(q) == 1 and th(k) == 0):
            return ZERO
        sign = _sgn(k + q) * _sgn(sum(th(i) for i in range(min(k, q) + 1, max(k, q))))
        outer = Fraction(1) if delta else Fraction(1, lu(k) - lu(q))
        if th(q) == 0:
            return _value(sign, outer, Fraction(1))
        rad = _ratio(
            [
                (ll(i) - ll(k) - 1 - delta + 2 * th(i)) * (ll(i) - ll(q))
                for i in range(-t, 0)
                if i not in (k, q)
            ]
            + [lu(q) - lu(s) for s in range(1, t + 1)]
            + [lu(k) - ll(s) for s in range(1, t)],
            [
                (lu(i) - lu(k)) * (lu(i) - lu(q))
                for i in range(-t, 0)
                if i not in (k, q)
            ]
            + [lu(k) - lu(s) + 1 for s in range(1, t + 1)]
            + [ll(q) - ll(s) for s in range(1, t)],
        )
        return _value(sign, outer, rad)

    if k < 0 and q > 0:
        if th(k) == 1:
            return ZERO
        sign = _sgn(k + t + 1) * _sgn(sum(th(i) for i in range(-t, k)))
        rad = _ratio(
            [
                (ll(i) - ll(k) - 1 + 2 * th(i)) * (ll(i) - ll(q) + 1)
                for i in range(-t, 0)
                if i != k
            ]
            + [abs(lu(s) - ll(q)) for s in range(1, t + 1)]
            + [lu(k) - ll(s) for s in range(1, t) if s != q],
            [lu(k) - ll(q)]
            + [
                (lu(i) - lu(k)) * (lu(i) - ll(q))
                for i in range(-t, 0)
                if i != k
            ]
            + [lu(k) - lu(s) + 1 for s in range(1, t + 1)]
            + [abs(ll(s) - ll(q) + 1) for s in range(1, t) if s != q],
        )
        return _value(sign, Fraction(1), rad)

    if k > 0 and q < 0:
        if th(q) == 0:
            return ZERO
        sign = _sgn(q + t + 1) * _sgn(sum(th(i) for i in range(q + 1, 0)))
        rad = _ratio(
            [lu(i) - lu(k) for i in range(-t, 0)]
            + [abs(ll(q) - ll(i)) for i in range(-t, 0) if i != q]
            + [abs(lu(q) - lu(s)) for s in range(1, t + 1) if s != k]
            + [abs(ll(s) - lu(k) + 1) for s in range(1, t)],
            [lu(q) - lu(k) + 1]
            + [ll(i) - lu(k) + 1 for i in range(-t, 0)]
            + [abs(lu(q) - lu(i)) for i in range(-t, 0) if i != q]
            + [abs(lu(s) - lu(k)) for s in range(1, t + 1) if s != k]
            + [abs(lu(q) - ll(s) - 1) for s in range(1, t)],
        )
        return _value(sign, Fraction(1), rad)

    # k > 0 and q > 0
    sign = sign_S(k, q) * _sgn(sum(th(i) for i in range(-t, 0)))
    rad = _ratio(
        [
            (lu(i) - lu(k)) * (ll(i) - ll(q) + 1)
            for i in range(-t, 0)
        ]
        + [abs(lu(s) - ll(q)) for s in range(1, t + 1) if s != k]
        + [abs(ll(s) - lu(k) + 1) for s in range(1, t) if s != q],
        [
            (ll(i) - lu(k) + 1) * (lu(i) - ll(q))
            for i in range(-t, 0)
        ]
        + [abs(lu(s) - lu(k)) for s in range(1, t + 1) if s != k]
        + [abs(ll(s) - ll(q) + 1) for s in range(1, t) if s != q],
    )
    return _value(sign, Fraction(1), rad)


# ---------------------------------------------------------------------------
# gl(t|t-1) > gl(t-1|t-1) factors: rows (2t-1, 2t-2).
# ---------------------------------------------------------------------------


@cache
def isoscalar_odd(t: int, upper: Row, lower: Row, k: int, q: int | None = None) -> RadicalNumber:
    if not (-t <= k <= t - 1) or k == 0:
        raise DomainError(f"upper column {k} out of range at level {t}")
    if q is not None and (q == 0 or not (-(t - 1) <= q <= t - 1)):
        raise DomainError(f"lower column {q} out of range at level {t}")

    def lu(c: int) -> int:
        return _l(upper, c)

    def ll(c: int) -> int:
        return _l(lower, c)

    def th(s: int) -> int:
        # theta on a positive column between rows 2t-2 and 2t-1
        return lower[1][s - 1] - upper[1][s - 1]

    if q is None and k < 0:
        sign = _sgn(t + k)
        rad = _ratio(
            [lu(k) - ll(s) for s in range(-(t - 1), 0)]
            + [lu(k) - lu(i) for i in range(1, t)],
            [lu(k) - lu(s) for s in range(-t, 0) if s != k]
            + [lu(k) - ll(i) for i in range(1, t)],
        )
        return _value(sign, Fraction(1), rad)

    if q is None and k > 0:
        if th(k) == 0:
            return ZERO
        sign = _sgn(k) * _sgn(sum(th(i) for i in range(k + 1, t)))
        rad = _ratio(
            [ll(s) - lu(k) + 1 for s in range(-(t - 1), 0)]
            + [lu(i) - lu(k) + 1 for i in range(1, t) if i != k],
            [lu(s) - lu(k) + 1 for s in range(-t, 0)]
            + [ll(i) - lu(k) + 1 for i in range(1, t) if i != k],
        )
        return _value(sign, Fraction(1), rad)

    if k < 0 and q < 0:
        sign = _sgn(k + q) * sign_S(-k, -q)
        rad = _ratio(
            [ll(q) - lu(i) + 1 for i in range(-t, 0) if i != k]
            + [lu(k) - ll(i) for i in range(-(t - 1), 0) if i != q]
            + [
                (lu(k) - lu(s)) * (ll(q) - ll(s) + 1)
                for s in range(1, t)
            ],
            [lu(k) - lu(i) for i in range(-t, 0) if i != k]
            + [ll(q) - ll(i) + 1 for i in range(-(t - 1), 0) if i != q]
            + [
                (lu(k) - ll(s)) * (ll(q) - lu(s) + 1)
                for s in range(1, t)
            ],
        )
        return _value(sign, Fraction(1), rad)

    if k < 0 and q > 0:
        if th(q) == 1:
            return ZERO
        sign = _sgn(k + t) * _sgn(sum(th(i) for i in range(1, q)))
        rad = _ratio(
            [lu(i) - ll(q) for i in range(-t, 0) if i != k]
            + [lu(k) - ll(i) for i in range(-(t - 1), 0)]
            + [
                (lu(k) - lu(s)) * (ll(s) - ll(q))
                for s in range(1, t)
                if s != q
            ],
            [lu(k) - ll(q) + 1]
            + [lu(k) - lu(i) for i in range(-t, 0) if i != k]
            + [ll(i) - ll(q) for i in range(-(t - 1), 0)]
            + [
                (lu(k) - ll(s)) * (lu(s) - ll(q))
                for s in range(1, t)
                if s != q
            ],
        )
        return _value(sign, Fraction(1), rad)

    if k > 0 and q < 0:
        if th(k) == 0:
            return ZERO
        sign = _sgn(k + q + t) * _sgn(sum(th(i) for i in range(k + 1, t)))
        rad = _ratio(
            [abs(lu(i) - ll(q) - 1) for i in range(-t, 0)]
            + [ll(i) - lu(k) + 1 for i in range(-(t - 1), 0) if i != q]
            + [
                (ll(q) - ll(s) + 1) * (lu(s) - lu(k) + 1)
                for s in range(1, t)
                if s != k
            ],
            [ll(q) - lu(k) + 1]
            + [lu(i) - lu(k) + 1 for i in range(-t, 0)]
            + [abs(ll(i) - ll(q) - 1) for i in range(-(t - 1), 0) if i != q]
            + [
                (ll(q) - lu(s) + 1) * (ll(s) - lu(k) + 1)
                for s in range(1, t)
                if s != k
            ],
        )
        return _value(sign, Fraction(1), rad)

    # k > 0 and q > 0
    delta = 1 if k == q else 0
    if not delta and not (th(k) == 1 and th(q) == 0):
        return ZERO
    sign = _sgn(k - 1) * _sgn(sum(th(i) for i in range(1, t)))
    outer = Fraction(1) if delta else Fraction(1, lu(k) - lu(q))
    if th(q) == 1:
        return _value(sign, outer, Fraction(1))
    rad = _ratio(
        [lu(i) - ll(q) for i in range(-t, 0)]
        + [ll(i) - lu(k) + 1 for i in range(-(t - 1), 0)]
        + [
            (ll(s) - ll(q) + 1 - delta + 2 * th(s)) * (ll(s) - ll(q))
            for s in range(1, t)
            if s not in (k, q)
        ],
        [lu(i) - lu(k) + 1 for i in range(-t, 0)]
        + [ll(i) - ll(q) for i in range(-(t - 1), 0)]
        + [
            (lu(s) - lu(k)) * (lu(s) - ll(q))
            for s in range(1, t)
            if s not in (k, q)
        ],
    )
    return _value(sign, outer, rad)


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------


def _changed_column(old: Row, new: Row, delta: int) -> int | None:
    """The single column where ``new`` exceeds ``old`` by ``delta``, or None."""
    found = None
    oneg, opos = old
    nneg, npos = new
    for idx, (a, b) in enumerate(zip(oneg, nneg)):
        if a == b:
            continue
        if b - a != delta or found is not None:
            return None
        found = idx - len(oneg)
    for idx, (a, b) in enumerate(zip(opos, npos)):
        if a == b:
            continue
        if b - a != delta or found is not None:
            return None
        found = idx + 1
    return found


def _slot_sign(src: GZPattern, j: int) -> int:
    """Sign attached to an even slot ``j``: parity of thetas in rows <= j.

    The chain factorization bottoms out at the top row of a lower-rank
    pattern exactly when the slot is even, and that bottom factor carries
    the theta parity of everything below it.  Odd slots carry no sign.
    For the top slot this is the parity of every theta in the pattern;
    rows appended by the rank-raising embedding contribute nothing, which
    makes coefficients independent of the ambient rank.
    """
    if j % 2:
        return 1
    n = src.n
    total = 0
    for s in range(1, n + 1):
        if 2 * s > j:
            break
        for i in range(1, s + 1):
            total += src.m(-i, 2 * s) - src.m(-i, 2 * s - 1)
    for s in range(1, n):
        if 2 * s + 1 > j:
            break
        for i in range(1, s + 1):
            total += src.m(i, 2 * s) - src.m(i, 2 * s + 1)
    return _sgn(total)


def _level_factor(r: int, upper: Row, lower: Row, k: int, q: int | None) -> RadicalNumber:
    if r % 2 == 0:
        return isoscalar_even(r // 2, upper, lower, k, q)
    return isoscalar_odd((r + 1) // 2, upper, lower, k, q)


def cgc(j: int, src: GZPattern, dst: GZPattern) -> RadicalNumber:
    """Coupling coefficient for standard-module slot ``j`` taking ``src`` to ``dst``.

    Nonzero only when rows below ``j`` agree and every row from ``j`` up gains
    exactly one unit in one column; the top rows must differ by one unit (a
    structural requirement on the caller, hence an error when violated).
    """
    n = src.n
    if dst.n != n:
        raise DomainError("rank mismatch between source and destination")
    if not 1 <= j <= 2 * n:
        raise DomainError(f"slot {j} out of range for rank {n}")
    if _changed_column(src.rows[-1], dst.rows[-1], 1) is None:
        raise DomainError("top rows must differ by one unit in one column")

    changed: dict[int, int] = {}
    for r in range(1, 2 * n + 1):
        old, new = src.row(r), dst.row(r)
        if r < j:
            if old != new:
                return ZERO
        else:
            col = _changed_column(old, new, 1)
            if col is None:
                return ZERO
            changed[r] = col

    value = _ONE
    for r in range(2 * n, j, -1):
        value = value * _level_factor(
            r, src.row(r), src.row(r - 1), changed[r], changed[r - 1]
        )
        if value.is_zero():
            return ZERO
    lower = src.row(j - 1) if j > 1 else ((), ())
    value = value * _level_factor(j, src.row(j), lower, changed[j], None)
    return value * _slot_sign(src, j)


def candidate_targets(top: TopRow, p: int | None = None) -> list[int]:
    """Columns whose increment keeps the top row a covariant highest weight.

    With ``p`` supplied the order bound on the leftmost column is enforced.
    """
    out = []
    for k in [*range(-top.n, 0), *range(1, top.n + 1)]:
        new = top.increment(k)
        if not new.is_valid():
            continue
        if p is not None and k == -top.n and new.neg[0] > p:
            continue
        out.append(k)
    return out


# ---------------------------------------------------------------------------
# Pattern moves used when applying ladder operators
# ---------------------------------------------------------------------------


def _shift_row(row: Row, col: int, delta: int) -> Row:
    neg, pos = row
    if col < 0:
        lst = list(neg)
        lst[col + len(neg)] += delta
        return (tuple(lst), pos)
    lst = list(pos)
    lst[col - 1] += delta
    return (neg, tuple(lst))


def _paths(pat: GZPattern, j: int, k: int, delta: int) -> list[GZPattern]:
    """Patterns obtained by shifting one entry by ``delta`` in every row from
    ``2n`` down to ``j`` (column ``k`` in the top row), keeping validity."""
    n = pat.n
    top = _shift_row(pat.row(2 * n), k, delta)
    if min(top[0] + top[1], default=0) < 0:
        return []
    if j == 2 * n and not _rows_compatible(2 * n, top, pat.row(2 * n - 1)):
        return []
    results: list[GZPattern] = []
    stack: list[Row] = [top]

    def descend(r: int) -> None:
        if r < j:
            new_rows = pat.rows[: j - 1] + tuple(stack[::-1])
            results.append(GZPattern(new_rows))
            return
        below = pat.row(r - 1) if r > 1 else None
        for col in [*range(-neg_len(r), 0), *range(1, pos_len(r) + 1)]:
            cand = _shift_row(pat.row(r), col, delta)
            if min(cand[0] + cand[1], default=0) < 0:
                continue
            if not _rows_compatible(r + 1, stack[-1], cand):
                continue
            if r == j and below is not None and not _rows_compatible(r, cand, below):
                continue
            stack.append(cand)
            descend(r - 1)
            stack.pop()

    descend(2 * n - 1)
    results.sort(key=GZPattern.sort_key)
    return results


def increment_paths(pat: GZPattern, j: int, k: int) -> list[GZPattern]:
    """All valid destinations reachable from ``pat`` at slot ``j`` with the
    top row incremented at column ``k``."""
    return _paths(pat, j, k, 1)


def decrement_paths(pat: GZPattern, j: int, k: int) -> list[GZPattern]:
    """All valid sources that reach ``pat`` at slot ``j`` with the top row
    incremented at column ``k`` (i.e. ``pat`` with units removed)."""
    return _paths(pat, j, k, -1)


def cgc_table(top: TopRow, p: int | None = None) -> list[dict]:
    """All nonzero coefficients out of one covariant module, as JSON records."""
    from .patterns import enumerate_patterns

    records = []
    for k in candidate_targets(top, p):
        for src in enumerate_patterns(top):
            for j in range(1, 2 * top.n + 1):
                for dst in increment_paths(src, j, k):
                    value = cgc(j, src, dst)
                    if not value.is_zero():
                        records.append(
                            {
                                "j": j,
                                "src": src.to_json(),
                                "dst": dst.to_json(),
                                "k": k,
                                "value": value.to_json(),
                            }
                        )
    return records
