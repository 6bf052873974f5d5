"""Exact arithmetic kernel: weighted multivariate polynomials over Q and
exact row reduction.

All values are immutable after construction and every operation is exact
rational arithmetic; there is no floating point anywhere in this package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

# The coefficient field everywhere.  fractions.Fraction already guarantees
# lowest terms, positive denominator, and exact arithmetic.
Rational = Fraction

RationalLike = int | Fraction


def rat(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class TableMismatchError(ValueError):
    """Raised when combining polynomials over different variable tables."""


@dataclass(frozen=True)
class VariableTable:
    """Ordered variables with positive integer weights (graded degrees)."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be >= 1")

    @staticmethod
    def make(pairs: Sequence[tuple[str, int]]) -> "VariableTable":
        return VariableTable(tuple(n for n, _ in pairs), tuple(w for _, w in pairs))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def degree(self, exponents: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exponents, self.weights))


@lru_cache(maxsize=None)
def monomial_basis(table: VariableTable, d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of weighted degree exactly d, graded-lex descending.

    The first variable's exponent decreases first, so for weights (1, 2) and
    d = 4 the order is (4,0), (2,1), (0,2).
    """
    if d < 0:
        raise ValueError("degree must be >= 0")

    out: list[tuple[int, ...]] = []

    def go(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == len(table.weights):
            if remaining == 0:
                out.append(prefix)
            return
        w = table.weights[i]
        for e in range(remaining // w, -1, -1):
            go(i + 1, remaining - e * w, prefix + (e,))

    go(0, d, ())
    return tuple(out)


def _grlex_key(table: VariableTable, exps: tuple[int, ...]) -> tuple:
    return (table.degree(exps), exps)


class GradedPoly:
    """Multivariate polynomial with rational coefficients over a VariableTable.

    Terms map exponent tuples to nonzero Fractions; zero coefficients are
    never stored.  Instances are treated as immutable.
    """

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[tuple[int, ...], RationalLike]):
        cleaned: dict[tuple[int, ...], Fraction] = {}
        nvars = len(table)
        for exps, c in terms.items():
            q = rat(c)
            if q == 0:
                continue
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for table {table.names}")
            cleaned[tuple(exps)] = q
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_terms", cleaned)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(table: VariableTable) -> "GradedPoly":
        return GradedPoly(table, {})

    @staticmethod
    def constant(table: VariableTable, c: RationalLike) -> "GradedPoly":
        return GradedPoly(table, {(0,) * len(table): rat(c)})

    @staticmethod
    def one(table: VariableTable) -> "GradedPoly":
        return GradedPoly.constant(table, 1)

    @staticmethod
    def variable(table: VariableTable, name: str) -> "GradedPoly":
        i = table.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(table)))
        return GradedPoly(table, {exps: 1})

    @staticmethod
    def monomial(table: VariableTable, exps: Sequence[int], c: RationalLike = 1) -> "GradedPoly":
        return GradedPoly(table, {tuple(exps): rat(c)})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterable[tuple[tuple[int, ...], Fraction]]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * len(self.table))

    def as_scalar(self) -> Fraction:
        """The value of a constant polynomial; error if non-constant."""
        if any(any(exps) for exps in self._terms):
            raise ValueError("polynomial is not constant")
        return self.constant_term()

    def is_homogeneous(self) -> bool:
        degs = {self.table.degree(e) for e in self._terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Weighted degree of a nonzero homogeneous polynomial."""
        degs = {self.table.degree(e) for e in self._terms}
        if len(degs) != 1:
            raise ValueError("degree undefined (zero or inhomogeneous polynomial)")
        return degs.pop()

    def max_degree(self) -> int:
        return max((self.table.degree(e) for e in self._terms), default=0)

    def homogeneous_component(self, d: int) -> "GradedPoly":
        return GradedPoly(
            self.table, {e: c for e, c in self._terms.items() if self.table.degree(e) == d}
        )

    def truncate(self, max_degree: int) -> "GradedPoly":
        return GradedPoly(
            self.table,
            {e: c for e, c in self._terms.items() if self.table.degree(e) <= max_degree},
        )

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Graded-lex leading term (highest degree, then lex-largest exponents)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms, key=lambda e: _grlex_key(self.table, e))
        return exps, self._terms[exps]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(self.table, t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "GradedPoly") -> None:
        if self.table != other.table:
            raise TableMismatchError(
                f"variable tables differ: {self.table.names} vs {other.table.names}"
            )

    def __add__(self, other: "GradedPoly | RationalLike") -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(self.table, other)
        self._check(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return GradedPoly(self.table, terms)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.table, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "GradedPoly | RationalLike") -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(self.table, other)
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> "GradedPoly":
        return GradedPoly.constant(self.table, other) - self

    def __mul__(self, other: "GradedPoly | RationalLike") -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            q = rat(other)
            return GradedPoly(self.table, {e: c * q for e, c in self._terms.items()})
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return GradedPoly(self.table, terms)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "GradedPoly":
        q = rat(other)
        if q == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        return self * (1 / q)

    def __pow__(self, k: int) -> "GradedPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = GradedPoly.one(self.table)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(self.table, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.table == other.table and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.table, tuple(sorted(self._terms.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    # -- structural operations ----------------------------------------------

    def substitute(
        self, mapping: Mapping[str, "GradedPoly"], target: VariableTable | None = None
    ) -> "GradedPoly":
        """Evaluate by sending each variable to a polynomial over `target`.

        Every variable that actually occurs must be mapped; images must all
        share one table.
        """
        if target is None:
            for img in mapping.values():
                target = img.table
                break
            if target is None:
                raise ValueError("cannot infer target table from an empty mapping")
        images: list[GradedPoly | None] = [mapping.get(n) for n in self.table.names]
        out = GradedPoly.zero(target)
        for exps, c in self._terms.items():
            term = GradedPoly.constant(target, c)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                img = images[i]
                if img is None:
                    raise KeyError(f"no substitution for variable {self.table.names[i]!r}")
                term = term * img**e
            out = out + term
        return out

    def __repr__(self) -> str:
        return f"GradedPoly({format_poly(self)})"


def mul_trunc(a: GradedPoly, b: GradedPoly, max_degree: int) -> GradedPoly:
    """Product with all terms of weighted degree > max_degree dropped."""
    a._check(b)
    table = a.table
    terms: dict[tuple[int, ...], Fraction] = {}
    bdegs = [(e2, c2, table.degree(e2)) for e2, c2 in b.items()]
    for e1, c1 in a.items():
        d1 = table.degree(e1)
        for e2, c2, d2 in bdegs:
            if d1 + d2 > max_degree:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            terms[e] = terms.get(e, Fraction(0)) + c1 * c2
    return GradedPoly(table, terms)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_poly(p: GradedPoly) -> str:
    """Render in the CLI expression grammar, e.g. ``36864/113 * k2^2``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for exps, coeff in p.sorted_terms():
        factors = []
        for name, e in zip(p.table.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = " * ".join(factors)
        else:
            body = " * ".join([format_rational(mag)] + factors)
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class RowReduction:
    rank: int
    rref: "ExactMatrix"
    pivot_columns: tuple[int, ...]


class ExactMatrix:
    """Dense matrix of Fractions with deterministic exact row reduction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[RationalLike]], cols: int | None = None):
        rows = [tuple(rat(x) for x in row) for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = cols or 0
        if cols is not None and rows and cols != width:
            raise ValueError("cols does not match row width")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", tuple(rows))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def row_reduce(self) -> RowReduction:
        """Reduced row echelon form.

        Pivot rule: scan columns left to right and take the first row (in
        current order) with a nonzero entry; exact arithmetic needs no
        magnitude heuristics.
        """
        m = [list(row) for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return RowReduction(rank=r, rref=ExactMatrix(m, cols=self.cols), pivot_columns=tuple(pivots))

    def rank(self) -> int:
        return self.row_reduce().rank

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def determinant(self) -> Fraction:
        """Exact determinant by fraction-free-ish Gaussian elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        det = Fraction(1)
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det

    def __repr__(self) -> str:
        body = "; ".join(", ".join(format_rational(x) for x in row) for row in self.entries)
        return f"ExactMatrix[{body}]"


def row_reduce(m: ExactMatrix) -> tuple[int, ExactMatrix]:
    """Convenience wrapper returning (rank, reduced echelon form)."""
    red = m.row_reduce()
    return red.rank, red.rref


def poly_to_vector(p: GradedPoly, basis: Sequence[tuple[int, ...]]) -> list[Fraction]:
    """Coefficient vector of a polynomial along an explicit monomial basis."""
    index = {exps: i for i, exps in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for exps, c in p.items():
        if exps not in index:
            raise ValueError(f"monomial {exps} not in the given basis")
        vec[index[exps]] = c
    return vec


def vector_to_poly(
    vec: Sequence[RationalLike], basis: Sequence[tuple[int, ...]], table: VariableTable
) -> GradedPoly:
    return GradedPoly(table, {exps: rat(c) for exps, c in zip(basis, vec)})
