"""Finitely presented weighted-graded commutative Q-algebras.

Everything is computed degree by degree with exact linear algebra: the
degree-d piece of the ideal is spanned by monomial multiples of the
relations, so Hilbert functions, normal forms, socles and multiplication
pairings reduce to row reduction over Q.  No Groebner bases are needed
because every verification has a known top degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    ExactMatrix,
    GradedPoly,
    VariableTable,
    monomial_basis,
    poly_to_vector,
    vector_to_poly,
)


@dataclass(frozen=True)
class RingPresentation:
    """Weighted polynomial ring modulo homogeneous relations."""

    table: VariableTable
    relations: tuple[GradedPoly, ...]
    label: str = ""

    def __post_init__(self) -> None:
        for r in self.relations:
            if r.table != self.table:
                raise ValueError("relation over a different variable table")
            if r.is_zero():
                raise ValueError("zero relation")
            if not r.is_homogeneous():
                raise ValueError("relations must be homogeneous")


@dataclass(frozen=True)
class GradedPiece:
    """Degree-d data: monomials, the reduced ideal matrix, and a chosen
    complement (non-pivot monomials) representing the quotient."""

    degree: int
    monomials: tuple[tuple[int, ...], ...]
    ideal_rank: int
    pivot_columns: tuple[int, ...]
    quotient_basis: tuple[tuple[int, ...], ...]
    reduced: ExactMatrix

    @property
    def dim(self) -> int:
        return len(self.monomials) - self.ideal_rank


def ideal_degree_piece(pres: RingPresentation, d: int) -> ExactMatrix:
    """Matrix whose rows are all monomial multiples of relations in degree d,
    written in the monomial_basis(d) coordinate order."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    basis = monomial_basis(pres.table, d)
    rows = []
    for rel in pres.relations:
        deg = rel.degree()
        if deg > d:
            continue
        for mult in monomial_basis(pres.table, d - deg):
            prod = GradedPoly.monomial(pres.table, mult) * rel
            rows.append(poly_to_vector(prod, basis))
    return ExactMatrix(rows, cols=len(basis))


@lru_cache(maxsize=None)
def graded_piece(pres: RingPresentation, d: int) -> GradedPiece:
    basis = monomial_basis(pres.table, d)
    red = ideal_degree_piece(pres, d).row_reduce()
    pivots = set(red.pivot_columns)
    quotient = tuple(m for i, m in enumerate(basis) if i not in pivots)
    return GradedPiece(
        degree=d,
        monomials=basis,
        ideal_rank=red.rank,
        pivot_columns=red.pivot_columns,
        quotient_basis=quotient,
        reduced=red.rref,
    )


def hilbert_function(pres: RingPresentation, max_d: int) -> tuple[int, ...]:
    """Dimensions of the graded pieces in degrees 0..max_d."""
    if max_d < 0:
        raise ValueError("max degree must be >= 0")
    return tuple(graded_piece(pres, d).dim for d in range(max_d + 1))


def total_dimension(pres: RingPresentation, through: int) -> int:
    return sum(hilbert_function(pres, through))


def normal_form(x: GradedPoly, pres: RingPresentation) -> GradedPoly:
    """Coset representative supported on the quotient basis of x's degree."""
    if x.table != pres.table:
        raise ValueError("polynomial over a different variable table")
    if x.is_zero():
        return x
    if not x.is_homogeneous():
        raise ValueError("normal form requires a homogeneous input")
    piece = graded_piece(pres, x.degree())
    vec = poly_to_vector(x, piece.monomials)
    for row_idx, col in enumerate(piece.pivot_columns):
        f = vec[col]
        if f != 0:
            row = piece.reduced.entries[row_idx]
            vec = [a - f * b for a, b in zip(vec, row)]
    return vector_to_poly(vec, piece.monomials, pres.table)


class SocleError(ValueError):
    """The requested top graded piece is not 1-dimensional."""


def socle_monomial(pres: RingPresentation, top: int) -> tuple[int, ...]:
    piece = graded_piece(pres, top)
    if piece.dim != 1:
        raise SocleError(f"degree-{top} piece has dimension {piece.dim}, expected 1")
    return piece.quotient_basis[0]


def pairing_matrix(pres: RingPresentation, i: int, top: int) -> ExactMatrix:
    """Multiplication pairing R^i x R^(top-i) -> R^top = Q·socle.

    Entry (a, b) is the socle coefficient of the normal form of the product
    of the a-th degree-i and b-th degree-(top-i) quotient basis monomials.
    """
    if not 0 <= i <= top:
        raise ValueError("need 0 <= i <= top")
    socle = socle_monomial(pres, top)
    left = graded_piece(pres, i).quotient_basis
    right = graded_piece(pres, top - i).quotient_basis
    rows = []
    for a in left:
        row = []
        for b in right:
            prod = GradedPoly.monomial(pres.table, a) * GradedPoly.monomial(pres.table, b)
            row.append(normal_form(prod, pres).coefficient(socle))
        rows.append(row)
    return ExactMatrix(rows, cols=len(right))


@dataclass(frozen=True)
class PoincareReport:
    """Outcome of the Gorenstein / Poincare-duality test on a presentation."""

    top: int
    hilbert: tuple[int, ...]
    symmetric: bool
    vanishes_beyond_top: bool
    socle_dimension: int
    pairing_ranks: tuple[tuple[int, int, int], ...]  # (i, rank, expected)
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def is_poincare_duality(
    pres: RingPresentation, top: int, check_through: int | None = None
) -> PoincareReport:
    """True iff the Hilbert function is symmetric on 0..top and zero after,
    the top piece is 1-dimensional, and all pairings into it are perfect."""
    if check_through is None:
        check_through = max(2 * top, top + 4)
    h = hilbert_function(pres, check_through)
    symmetric = all(h[i] == h[top - i] for i in range(top + 1))
    vanishes = all(h[d] == 0 for d in range(top + 1, check_through + 1))
    socle_dim = h[top]
    ranks = []
    pairings_ok = socle_dim == 1
    if socle_dim == 1:
        for i in range(top + 1):
            mat = pairing_matrix(pres, i, top)
            expected = min(mat.rows, mat.cols)
            rank = mat.rank()
            ranks.append((i, rank, expected))
            if rank < expected or mat.rows != mat.cols:
                pairings_ok = False
    holds = symmetric and vanishes and socle_dim == 1 and pairings_ok
    return PoincareReport(
        top=top,
        hilbert=h,
        symmetric=symmetric,
        vanishes_beyond_top=vanishes,
        socle_dimension=socle_dim,
        pairing_ranks=tuple(ranks),
        holds=holds,
    )


# -- stock presentations -----------------------------------------------------

KAPPA_M6_COEFFS = (127, -2304, 113, -36864)


def kappa_table() -> VariableTable:
    return VariableTable(("k1", "k2"), (1, 2))


def m6_presentation(
    coeffs: tuple[int, int, int, int] = KAPPA_M6_COEFFS, label: str = "m6"
) -> RingPresentation:
    """Q[k1,k2]/(c0*k1^3 + c1*k1*k2, c2*k1^4 + c3*k2^2) with k1, k2 of
    weights 1, 2; the default coefficients give the genus-6 kappa ring."""
    t = kappa_table()
    c0, c1, c2, c3 = coeffs
    k1 = GradedPoly.variable(t, "k1")
    k2 = GradedPoly.variable(t, "k2")
    r1 = c0 * k1**3 + c1 * k1 * k2
    r2 = c2 * k1**4 + c3 * k2**2
    return RingPresentation(t, (r1, r2), label=label)


def kappa1_power_presentation(g: int) -> RingPresentation:
    """Q[k1]/(k1^(g-1)), the kappa ring in genus 2..5."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    t = VariableTable(("k1",), (1,))
    k1 = GradedPoly.variable(t, "k1")
    return RingPresentation(t, (k1 ** (g - 1),), label=f"kappa1-genus-{g}")
