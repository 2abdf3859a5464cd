"""States of the order-p Fock representation and the ladder-operator actions.

A matrix element of a creation operator factorizes into a coupling
coefficient times a reduced matrix element G that depends only on the top
rows involved.  The G values are not transcribed from anywhere: they are
derived degree by degree from the requirement that the (anti)commutator
of a creation operator with its annihilation partner acts diagonally with
the Cartan eigenvalues, starting from ``G = sqrt(p)`` out of the vacuum.
Signs are fixed nonnegative.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .cgc import candidate_targets, cgc, decrement_paths, increment_paths
from .errors import DomainError, InternalConsistencyError, TableDepthError
from .patterns import (
    GZPattern,
    TopRow,
    cartan_eigenvalue,
    enumerate_patterns,
    enumerate_top_rows,
    indices,
    rho,
    vacuum,
)
from .radicals import RadicalNumber, ZERO

Letter = tuple[int, int]  # (sign, index); sign is +1 or -1
Word = Sequence[Letter]


def degree_of(i: int) -> int:
    """Z2 grading of the ladder operators: odd exactly for positive indices."""
    return 1 if i > 0 else 0


class StateVector:
    """Finite linear combination of basis patterns with exact coefficients."""

    __slots__ = ("n", "p", "terms")

    def __init__(self, n: int, p: int, terms: dict[GZPattern, RadicalNumber] | None = None):
        self.n = n
        self.p = p
        self.terms = {
            pat: coeff for pat, coeff in (terms or {}).items() if not coeff.is_zero()
        }

    @staticmethod
    def zero(n: int, p: int) -> "StateVector":
        return StateVector(n, p)

    @staticmethod
    def basis(pat: GZPattern, p: int) -> "StateVector":
        return StateVector(pat.n, p, {pat: RadicalNumber.one()})

    @staticmethod
    def vacuum_state(n: int, p: int) -> "StateVector":
        return StateVector.basis(vacuum(n), p)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, pat: GZPattern) -> RadicalNumber:
        return self.terms.get(pat, ZERO)

    def _check_like(self, other: "StateVector") -> None:
        if (self.n, self.p) != (other.n, other.p):
            raise DomainError("rank/order mismatch between states")

    def __add__(self, other: "StateVector") -> "StateVector":
        self._check_like(other)
        terms = dict(self.terms)
        for pat, coeff in other.terms.items():
            terms[pat] = terms.get(pat, ZERO) + coeff
        return StateVector(self.n, self.p, terms)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + other.scale(RadicalNumber.from_rational(-1))

    def scale(self, coeff) -> "StateVector":
        return StateVector(
            self.n, self.p, {pat: c * coeff for pat, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StateVector)
            and (self.n, self.p) == (other.n, other.p)
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({coeff})*{pat!r}" for pat, coeff in self.sorted_terms()
        )

    def sorted_terms(self) -> list[tuple[GZPattern, RadicalNumber]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    @property
    def degree(self) -> int:
        return max((pat.degree for pat in self.terms), default=0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "terms": [
                {"pattern": pat.to_json(), "coeff": coeff.to_json()}
                for pat, coeff in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "StateVector":
        terms = {
            GZPattern.from_json(entry["pattern"]): RadicalNumber.from_json(entry["coeff"])
            for entry in data["terms"]
        }
        return StateVector(data["n"], data["p"], terms)


def inner_product(a: StateVector, b: StateVector) -> RadicalNumber:
    """Sum of coefficient products over shared patterns (coefficients are real)."""
    a._check_like(b)
    small, large = (a.terms, b.terms) if len(a.terms) <= len(b.terms) else (b.terms, a.terms)
    total = ZERO
    for pat, coeff in small.items():
        other = large.get(pat)
        if other is not None:
            total = total + coeff * other
    return total


# ---------------------------------------------------------------------------
# Reduced matrix elements
# ---------------------------------------------------------------------------


class ReducedMETable:
    """Reduced matrix elements G(top, k) for one (rank, order) pair.

    Values are derived lazily degree by degree; ``max_degree`` caps the
    derivation so callers can opt into explicit shallow-table errors.
    Readers only ever see fully derived degrees.
    """

    def __init__(self, n: int, p: int, max_degree: int | None = None):
        if n < 1 or p < 1:
            raise DomainError("rank and order must be positive")
        self.n = n
        self.p = p
        self.max_degree = max_degree
        self._g2: dict[tuple[TopRow, int], Fraction] = {}
        self._g: dict[tuple[TopRow, int], RadicalNumber] = {}
        self._derived = -1
        self._creation_cache: dict[tuple[int, GZPattern], tuple] = {}
        self._annihilation_cache: dict[tuple[int, GZPattern], tuple] = {}

    # -- derivation ----------------------------------------------------

    def ensure_degree(self, degree: int) -> None:
        if degree > (self.max_degree if self.max_degree is not None else degree):
            raise TableDepthError(
                f"table too shallow: degree {degree} requested, cap {self.max_degree}"
            )
        while self._derived < degree:
            self._derive_degree(self._derived + 1)
            self._derived += 1

    def _derive_degree(self, d: int) -> None:
        tops = [w for w in enumerate_top_rows(self.n, self.p, d) if w.degree == d]
        for top in tops:
            self._solve_top(top)

    def _solve_top(self, top: TopRow) -> None:
        targets = candidate_targets(top, self.p)
        if not targets:
            return
        m_targets = len(targets)
        col = {k: idx for idx, k in enumerate(targets)}
        # echelon rows: (lead index, coefficient vector, rhs)
        echelon: list[tuple[int, list[Fraction], Fraction]] = []

        def add_equation(coeffs: list[Fraction], rhs: Fraction) -> None:
            vec = list(coeffs)
            for lead, lvec, lrhs in echelon:
                if vec[lead]:
                    f = vec[lead] / lvec[lead]
                    vec = [a - f * b for a, b in zip(vec, lvec)]
                    rhs = rhs - f * lrhs
            lead = next((idx for idx, a in enumerate(vec) if a), None)
            if lead is None:
                if rhs:
                    raise InternalConsistencyError(
                        f"inconsistent matrix-element system at top row {top}"
                    )
                return
            echelon.append((lead, vec, rhs))

        for pat in enumerate_patterns(top):
            for i in indices(self.n):
                j = rho(i)
                coeffs = [Fraction(0)] * m_targets
                for k in targets:
                    total = Fraction(0)
                    for dst in increment_paths(pat, j, k):
                        c = cgc(j, pat, dst)
                        if not c.is_zero():
                            total += (c * c).as_fraction()
                    coeffs[col[k]] = total
                inflow = Fraction(0)
                for kk in self._down_columns(top):
                    src_top = top.decrement(kk)
                    g2 = self._g2.get((src_top, kk))
                    if g2 is None:
                        raise InternalConsistencyError(
                            "derivation order violated: missing lower-degree entry"
                        )
                    for src in decrement_paths(pat, j, kk):
                        c = cgc(j, src, pat)
                        if not c.is_zero():
                            inflow += (c * c).as_fraction() * g2
                cart = 2 * cartan_eigenvalue(pat, i, self.p, check=False)
                # diagonal of the bracket: inflow -/+ outflow = 2 * eigenvalue
                rhs = (inflow - cart) if i < 0 else (cart - inflow)
                add_equation(coeffs, rhs)
                if len(echelon) == m_targets:
                    break
            if len(echelon) == m_targets:
                break
        if len(echelon) < m_targets:
            raise InternalConsistencyError(
                f"matrix-element system underdetermined at top row {top}"
            )
        solution = self._back_substitute(echelon, m_targets)
        for k in targets:
            g2 = solution[col[k]]
            if g2 < 0:
                raise InternalConsistencyError(
                    f"negative squared matrix element {g2} at {top}, column {k}"
                )
            self._g2[(top, k)] = g2
            self._g[(top, k)] = RadicalNumber.from_sqrt_rational(g2)

    @staticmethod
    def _back_substitute(
        echelon: list[tuple[int, list[Fraction], Fraction]], size: int
    ) -> list[Fraction]:
        solution = [Fraction(0)] * size
        for lead, vec, rhs in sorted(echelon, key=lambda row: -row[0]):
            acc = rhs
            for idx in range(lead + 1, size):
                acc -= vec[idx] * solution[idx]
            solution[lead] = acc / vec[lead]
        return solution

    def _down_columns(self, top: TopRow) -> list[int]:
        out = []
        for k in indices(self.n):
            if (k < 0 and top.neg[k + self.n] > 0) or (k > 0 and top.pos[k - 1] > 0):
                if top.decrement(k).is_valid():
                    out.append(k)
        return out

    # -- lookup ----------------------------------------------------------

    def reduced_element(self, top: TopRow, k: int) -> RadicalNumber:
        self.ensure_degree(top.degree)
        try:
            return self._g[(top, k)]
        except KeyError:
            raise DomainError(f"no admissible target {k} from top row {top}") from None

    def entries(self) -> Iterator[tuple[TopRow, int, Fraction]]:
        """Derived entries as (top row, target column, G squared)."""
        for (top, k), g2 in sorted(
            self._g2.items(), key=lambda kv: (kv[0][0].degree, kv[0][0].neg, kv[0][0].pos, kv[0][1])
        ):
            yield top, k, g2

    # -- cached single-pattern actions ------------------------------------

    def creation(self, i: int, pat: GZPattern) -> tuple[tuple[GZPattern, RadicalNumber], ...]:
        key = (i, pat)
        hit = self._creation_cache.get(key)
        if hit is not None:
            return hit
        self.ensure_degree(pat.degree)
        j = rho(i)
        top = pat.top
        out = []
        for k in candidate_targets(top, self.p):
            g = self._g[(top, k)]
            if g.is_zero():
                continue
            for dst in increment_paths(pat, j, k):
                c = cgc(j, pat, dst)
                if not c.is_zero():
                    out.append((dst, c * g))
        result = tuple(out)
        self._creation_cache[key] = result
        return result

    def annihilation(self, i: int, pat: GZPattern) -> tuple[tuple[GZPattern, RadicalNumber], ...]:
        key = (i, pat)
        hit = self._annihilation_cache.get(key)
        if hit is not None:
            return hit
        if pat.degree > 0:
            self.ensure_degree(pat.degree - 1)
        j = rho(i)
        top = pat.top
        out = []
        for k in self._down_columns(top):
            g = self._g.get((top.decrement(k), k))
            if g is None or g.is_zero():
                continue
            for src in decrement_paths(pat, j, k):
                c = cgc(j, src, pat)
                if not c.is_zero():
                    out.append((src, c * g))
        result = tuple(out)
        self._annihilation_cache[key] = result
        return result


def derive_reduced_mes(n: int, p: int, degree: int) -> ReducedMETable:
    """Table of reduced matrix elements for all top rows of size below ``degree``."""
    if degree < 1:
        raise DomainError("degree must be at least 1")
    table = ReducedMETable(n, p)
    table.ensure_degree(degree - 1)
    return table


class TableFamily:
    """Reduced-matrix-element tables of one order, shared across ranks."""

    def __init__(self, p: int):
        self.p = p
        self._tables: dict[int, ReducedMETable] = {}

    def for_rank(self, n: int) -> ReducedMETable:
        table = self._tables.get(n)
        if table is None:
            table = ReducedMETable(n, self.p)
            self._tables[n] = table
        return table


# ---------------------------------------------------------------------------
# Operator application
# ---------------------------------------------------------------------------


def apply_creation(i: int, state: StateVector, table: ReducedMETable) -> StateVector:
    _check_table(state, table, i)
    terms: dict[GZPattern, RadicalNumber] = {}
    for pat, coeff in state.terms.items():
        for dst, c in table.creation(i, pat):
            terms[dst] = terms.get(dst, ZERO) + coeff * c
    return StateVector(state.n, state.p, terms)


def apply_annihilation(i: int, state: StateVector, table: ReducedMETable) -> StateVector:
    _check_table(state, table, i)
    terms: dict[GZPattern, RadicalNumber] = {}
    for pat, coeff in state.terms.items():
        for src, c in table.annihilation(i, pat):
            terms[src] = terms.get(src, ZERO) + coeff * c
    return StateVector(state.n, state.p, terms)


def apply_letter(letter: Letter, state: StateVector, table: ReducedMETable) -> StateVector:
    sign, i = letter
    if sign > 0:
        return apply_creation(i, state, table)
    return apply_annihilation(i, state, table)


def apply_word(word: Word, state: StateVector, table: ReducedMETable) -> StateVector:
    """Apply a product of ladder operators, rightmost letter first."""
    for letter in reversed(list(word)):
        state = apply_letter(letter, state, table)
    return state


def _check_table(state: StateVector, table: ReducedMETable, i: int) -> None:
    if (state.n, state.p) != (table.n, table.p):
        raise DomainError("state and table disagree on rank or order")
    if i == 0 or abs(i) > state.n:
        raise DomainError(f"index {i} out of range for rank {state.n}")


def gl_generator(j: int, k: int, state: StateVector, table: ReducedMETable) -> StateVector:
    """Action of the gl(n|n) element E[j,k] = (1/2) bracket(c_j^+, c_k^-)."""
    a = apply_creation(j, apply_annihilation(k, state, table), table)
    b = apply_annihilation(k, apply_creation(j, state, table), table)
    sign = (-1) ** (degree_of(j) * degree_of(k))
    half = RadicalNumber.from_rational(Fraction(1, 2))
    return (a - b.scale(RadicalNumber.from_rational(sign))).scale(half)


def triple_residual(
    xi: int,
    eta: int,
    eps: int,
    j: int,
    k: int,
    l: int,
    state: StateVector,
    table: ReducedMETable,
) -> StateVector:
    """Defect of the defining triple relation on ``state``; zero when it holds.

    Computes bracket(bracket(c_j^xi, c_k^eta), c_l^eps) minus its closed form,
    with graded signs from the Z2 degrees of the three letters.
    """
    for sign in (xi, eta, eps):
        if sign not in (1, -1):
            raise DomainError("signs must be +1 or -1")
    x, y, z = degree_of(j), degree_of(k), degree_of(l)

    def app(sign: int, idx: int, s: StateVector) -> StateVector:
        return apply_letter((sign, idx), s, table)

    def word(seq: list[tuple[int, int]]) -> StateVector:
        s = state
        for sign, idx in reversed(seq):
            s = app(sign, idx, s)
        return s

    X, Y, Z = (xi, j), (eta, k), (eps, l)
    s_xy = (-1) ** (x * y)
    s_xyz = (-1) ** ((x + y) * z)
    nested = (
        word([X, Y, Z])
        - word([Y, X, Z]).scale(RadicalNumber.from_rational(s_xy))
        - word([Z, X, Y]).scale(RadicalNumber.from_rational(s_xyz))
        + word([Z, Y, X]).scale(RadicalNumber.from_rational(s_xy * s_xyz))
    )
    eps_pow = eps if z else 1
    residual = nested
    if j == l and eps == -xi:
        coeff = 2 * eps_pow * ((-1) ** (y * z))
        residual = residual + app(eta, k, state).scale(RadicalNumber.from_rational(coeff))
    if k == l and eps == -eta:
        coeff = -2 * eps_pow
        residual = residual + app(xi, j, state).scale(RadicalNumber.from_rational(coeff))
    return residual


# ---------------------------------------------------------------------------
# Basis iteration helpers
# ---------------------------------------------------------------------------


def basis_through_degree(n: int, p: int, degree: int) -> list[GZPattern]:
    """All basis patterns of total size at most ``degree``, in emitted order."""
    out: list[GZPattern] = []
    for top in enumerate_top_rows(n, p, degree):
        out.extend(enumerate_patterns(top))
    out.sort(key=lambda pat: (pat.degree, pat.sort_key()))
    return out


def parse_word(text: str) -> list[Letter]:
    """Parse a word like ``c+(-2),c-(1)`` into letters, left to right."""
    import re

    letters: list[Letter] = []
    for token in text.split(","):
        token = token.strip()
        match = re.fullmatch(r"c([+-])\((-?\d+)\)", token)
        if not match:
            raise DomainError(f"cannot parse operator token {token!r}")
        sign = 1 if match.group(1) == "+" else -1
        idx = int(match.group(2))
        if idx == 0:
            raise DomainError("operator index 0 does not exist")
        letters.append((sign, idx))
    return letters
