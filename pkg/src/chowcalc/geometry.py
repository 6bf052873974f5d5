"""Intersection rings of Hirzebruch surfaces and Grassmannians, section
counts, genus by adjunction, Pluecker degrees, and the dimension
bookkeeping for the strata of moduli of curves in genus 4..6.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import (
    GradedPoly,
    RationalLike,
    VariableTable,
    rat,
)
from .quotient import RingPresentation, normal_form, socle_monomial
from .schur import Partition


# -- Hirzebruch surfaces -------------------------------------------------------


@dataclass(frozen=True)
class HirzebruchSurfaceHandle:
    """The surface F_n itself (used by the CLI to scope E, S, F classes)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("Hirzebruch index must be >= 0")


@dataclass(frozen=True)
class HirzebruchClass:
    """Divisor class a*E + b*F on the Hirzebruch surface F_n, where E is the
    section of self-intersection -n, F the fiber, and S := E + n*F the
    disjoint section of self-intersection +n."""

    n: int
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("Hirzebruch index must be >= 0")
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))

    def __add__(self, other: "HirzebruchClass") -> "HirzebruchClass":
        self._check(other)
        return HirzebruchClass(self.n, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "HirzebruchClass") -> "HirzebruchClass":
        self._check(other)
        return HirzebruchClass(self.n, self.a - other.a, self.b - other.b)

    def __rmul__(self, c: RationalLike) -> "HirzebruchClass":
        return HirzebruchClass(self.n, rat(c) * self.a, rat(c) * self.b)

    __mul__ = __rmul__

    def __neg__(self) -> "HirzebruchClass":
        return HirzebruchClass(self.n, -self.a, -self.b)

    def _check(self, other: "HirzebruchClass") -> None:
        if self.n != other.n:
            raise ValueError(f"classes live on different surfaces F_{self.n} and F_{other.n}")

    def __str__(self) -> str:
        return f"{self.a}*E + {self.b}*F on F_{self.n}"


def section_E(n: int) -> HirzebruchClass:
    return HirzebruchClass(n, Fraction(1), Fraction(0))


def fiber_F(n: int) -> HirzebruchClass:
    return HirzebruchClass(n, Fraction(0), Fraction(1))


def section_S(n: int) -> HirzebruchClass:
    """The section disjoint from E: S = E + n*F, with S^2 = +n."""
    return HirzebruchClass(n, Fraction(1), Fraction(n))


def canonical_class(n: int) -> HirzebruchClass:
    return HirzebruchClass(n, Fraction(-2), Fraction(-(n + 2)))


def intersect(x: HirzebruchClass, y: HirzebruchClass) -> Fraction:
    """Intersection form: E^2 = -n, E.F = 1, F^2 = 0."""
    x._check(y)
    return -x.n * x.a * y.a + x.a * y.b + x.b * y.a


def genus_of_class(c: HirzebruchClass) -> Fraction:
    """Arithmetic genus by adjunction: 2g - 2 = C.(C + K)."""
    return 1 + (intersect(c, c) + intersect(c, canonical_class(c.n))) / 2


def h0_hirzebruch(c: HirzebruchClass) -> int:
    """h^0(F_n, O(aE + bF)) = sum_j max(0, b - j*n + 1) over j = 0..a.

    Pushing forward to the base splits the sections into line-bundle pieces
    of degrees b, b-n, ..., b-a*n.  Only a >= 0 with integral coefficients
    is supported; anything else raises.
    """
    if c.a.denominator != 1 or c.b.denominator != 1:
        raise ValueError("section count needs an integral class")
    a, b = int(c.a), int(c.b)
    if a < 0:
        raise ValueError("section count unsupported for a < 0")
    return sum(max(0, b - j * c.n + 1) for j in range(a + 1))


def maroni_k(g: int, n: int) -> Fraction:
    """Solve genus(3S + kF on F_n) = g for k; equals (g - 3n + 2)/2.

    Non-integrality of the result is exactly the parity obstruction for a
    trigonal genus-g curve with Maroni invariant n.
    """
    return Fraction(g - 3 * n + 2, 2)


def maroni_admissible(g: int, n: int) -> bool:
    return n >= 0 and (g - n) % 2 == 0 and 3 * n <= g + 2


def trigonal_class(g: int, n: int) -> HirzebruchClass:
    k = maroni_k(g, n)
    if k.denominator != 1:
        raise ValueError(f"no integral class: parity of Maroni invariant {n} fails for genus {g}")
    return 3 * section_S(n) + int(k) * fiber_F(n)


def hirzebruch_aut_dim(n: int) -> int:
    """dim Aut(F_n): 6 = 2*dim PGL(2) for F_0 = P1 x P1, and n + 5 for n >= 1
    (fiberwise affine substitutions plus the base PGL(2) and the torus)."""
    return 6 if n == 0 else n + 5


# -- Grassmannians ------------------------------------------------------------


@dataclass(frozen=True)
class Grassmannian:
    """G(k, n): k-dimensional subspaces of an n-dimensional space."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.n:
            raise ValueError("need 1 <= k < n")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def table(self) -> VariableTable:
        return _grass_table(self.k)

    def presentation(self) -> RingPresentation:
        return _grass_presentation(self.k, self.n)

    def chern_sub(self, i: int) -> GradedPoly:
        """c_i of the tautological subbundle."""
        if not 0 <= i <= self.k:
            raise ValueError("index out of range")
        if i == 0:
            return GradedPoly.one(self.table())
        return GradedPoly.variable(self.table(), f"c{i}")

    def sigma1(self) -> GradedPoly:
        """The hyperplane Schubert class = c_1 of the dual subbundle."""
        return -self.chern_sub(1)

    def schubert_class(self, lam: Partition) -> GradedPoly:
        """Giambelli: the Schubert class as the Schur polynomial of the dual
        subbundle's Chern roots, written via the dual Jacobi-Trudi
        determinant in e_i = (-1)^i c_i."""
        if lam.length > self.k or (lam.parts and lam.parts[0] > self.n - self.k):
            raise ValueError(f"partition {lam} does not fit in G({self.k},{self.n})")
        conj = lam.conjugate()
        m = conj.length
        if m == 0:
            return GradedPoly.one(self.table())

        def e(i: int) -> GradedPoly:
            if i < 0 or i > self.k:
                return GradedPoly.zero(self.table())
            if i == 0:
                return GradedPoly.one(self.table())
            return Fraction((-1) ** i) * self.chern_sub(i)

        rows = [[e(conj.parts[i] - (i + 1) + (j + 1)) for j in range(m)] for i in range(m)]
        return _poly_det(rows)

    def integrate(self, x: GradedPoly) -> Fraction:
        """Degree against the fundamental class: x must be homogeneous of the
        top degree; the class of a point integrates to 1."""
        pres = self.presentation()
        if x.table != pres.table:
            raise ValueError("class over a different table")
        if x.is_zero():
            return Fraction(0)
        if x.degree() != self.dim:
            raise ValueError(
                f"integrand degree {x.degree()} is not the dimension {self.dim}"
            )
        socle = socle_monomial(pres, self.dim)
        point = self.schubert_class(Partition(((self.n - self.k),) * self.k))
        unit = normal_form(point, pres).coefficient(socle)
        if unit == 0:
            raise ArithmeticError("point class vanished; presentation is inconsistent")
        return normal_form(x, pres).coefficient(socle) / unit

    def plucker_degree(self) -> int:
        """Degree in the Pluecker embedding: the top self-intersection of the
        hyperplane class."""
        val = self.integrate(self.sigma1() ** self.dim)
        assert val.denominator == 1
        return int(val)


@lru_cache(maxsize=None)
def _grass_table(k: int) -> VariableTable:
    return VariableTable(tuple(f"c{i}" for i in range(1, k + 1)), tuple(range(1, k + 1)))


@lru_cache(maxsize=None)
def _grass_presentation(k: int, n: int) -> RingPresentation:
    """Chern classes of the rank-k tautological subbundle modulo the
    vanishing of the quotient's classes in degrees n-k+1..n (the degreewise
    form of c(S) * c(Q) = 1)."""
    table = _grass_table(k)
    c = [GradedPoly.one(table)] + [GradedPoly.variable(table, f"c{i}") for i in range(1, k + 1)]
    inv = [GradedPoly.one(table)]
    for d in range(1, n + 1):
        acc = GradedPoly.zero(table)
        for i in range(1, min(d, k) + 1):
            acc = acc + c[i] * inv[d - i]
        inv.append(-acc)
    relations = tuple(inv[d] for d in range(n - k + 1, n + 1))
    return RingPresentation(table, relations, label=f"grassmannian-{k}-{n}")


def _poly_det(rows: list[list[GradedPoly]]) -> GradedPoly:
    n = len(rows)
    table = rows[0][0].table
    if n == 1:
        return rows[0][0]
    out = GradedPoly.zero(table)
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _poly_det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def grass_dim(k: int, n: int) -> int:
    return Grassmannian(k, n).dim


def plucker_degree(k: int, n: int) -> int:
    return Grassmannian(k, n).plucker_degree()


def grass_betti(k: int, n: int, d: int) -> int:
    """Independent count of the degree-d Betti number: partitions inside a
    k x (n-k) box of size d."""

    def count(remaining: int, max_part: int, rows_left: int) -> int:
        if remaining == 0:
            return 1
        if rows_left == 0:
            return 0
        return sum(
            count(remaining - p, p, rows_left - 1) for p in range(min(max_part, remaining), 0, -1)
        )

    return count(d, n - k, k)


# -- linear systems and stratum dimensions ------------------------------------


def forms_dim(m: int, d: int) -> int:
    """h^0(P^m, O(d)) = C(m + d, d)."""
    if m < 0 or d < 0:
        raise ValueError("need m, d >= 0")
    return comb(m + d, d)


def canonical_quadrics(g: int) -> int:
    """Number of independent quadrics through a canonical genus-g curve:
    g(g+1)/2 - (3g-3) = (g-2)(g-3)/2."""
    if g < 3:
        raise ValueError("need genus >= 3")
    return (g - 2) * (g - 3) // 2


def gl_dim(n: int) -> int:
    return n * n


def pgl_dim(n: int) -> int:
    return n * n - 1


def sl_dim(n: int) -> int:
    return n * n - 1


# Hyperelliptic curves are presented by binary forms: the ambient parameter
# count used here is 2g+3 (the printed convention for the affine family of
# branch data), minus dim GL(2).
def hyperelliptic_dim(g: int) -> int:
    return (2 * g + 3) - gl_dim(2)


def bielliptic_dim(g: int) -> int:
    """Double covers of elliptic curves: 2g - 2 branch points moving."""
    return 2 * g - 2


def trigonal_stratum_dim(g: int, n: int) -> int:
    """Projectivised linear system on F_n modulo the surface automorphisms."""
    return h0_hirzebruch(trigonal_class(g, n)) - 1 - hirzebruch_aut_dim(n)


def plane_quintic_dim() -> int:
    return forms_dim(2, 5) - 1 - pgl_dim(3)


def stratum_dimensions(g: int) -> tuple[int, ...]:
    """Dimensions of the standard strata, recomputed from their quotient
    presentations.

    genus 6: (Brill-Noether general, trigonal, plane quintics,
              hyperelliptic, bi-elliptic) = (15, 13, 12, 11, 10)
    genus 5: (complete intersections of three quadrics, trigonal,
              hyperelliptic) = (12, 11, 9)
    """
    if g == 6:
        return (
            3 * g - 3,
            trigonal_stratum_dim(6, 0),
            plane_quintic_dim(),
            hyperelliptic_dim(6),
            bielliptic_dim(6),
        )
    if g == 5:
        return (
            grass_dim(3, forms_dim(4, 2)) - sl_dim(5),
            trigonal_stratum_dim(5, 1),
            hyperelliptic_dim(5),
        )
    raise ValueError("stratum table available for genus 5 and 6 only")


def maroni_divisor_dim(g: int = 6) -> int:
    """The locus of trigonal curves with the next Maroni invariant (n = 2
    in genus 6)."""
    return trigonal_stratum_dim(g, 2)
