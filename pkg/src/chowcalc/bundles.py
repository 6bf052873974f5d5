"""Formal vector bundles with truncated total Chern classes.

Operations (dual, twist, symmetric and exterior powers, direct sum, exact
sequence quotients, Chern character) are computed by the splitting
principle: a universal formula is derived once with generic Chern roots as
auxiliary degree-1 variables, re-expressed in elementary symmetric
polynomials by exact leading-term reduction, and then specialised to the
actual Chern classes of the bundle.  Everything is exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import (
    GradedPoly,
    RationalLike,
    VariableTable,
    mul_trunc,
    rat,
)

SYM_ROOT_GUARD = 10**6


class BundleError(ValueError):
    pass


class ExactnessError(BundleError):
    """A quotient's Chern series has nonzero terms beyond its asserted rank."""


@dataclass(frozen=True)
class LineClass:
    """A line bundle, recorded by its first Chern class (degree 1)."""

    c1: GradedPoly

    def __post_init__(self) -> None:
        if not self.c1.is_zero() and self.c1.degree() != 1:
            raise BundleError("a line class must be homogeneous of degree 1")


class FormalBundle:
    """Rank plus Chern classes c_1..c_D over some variable table.

    If rank < D the classes above the rank must vanish identically unless
    the bundle is built with exact_rank=False (used for formal models whose
    higher classes encode relations rather than zero).  Root-based
    operations (sym, wedge, twist) work from c_1..c_rank only, so they are
    faithful exactly on bundles whose classes above the rank vanish.
    """

    __slots__ = ("rank", "chern", "table", "exact_rank")

    def __init__(
        self,
        rank: int,
        chern: tuple[GradedPoly, ...] | list[GradedPoly],
        table: VariableTable | None = None,
        exact_rank: bool = True,
    ):
        chern = tuple(chern)
        if table is None:
            if not chern:
                raise BundleError("need a table for a bundle with no recorded classes")
            table = chern[0].table
        if rank < 0:
            raise BundleError("rank must be >= 0")
        for i, c in enumerate(chern, start=1):
            if c.table != table:
                raise BundleError("chern classes over different tables")
            if not c.is_zero() and c.degree() != i:
                raise BundleError(f"c_{i} must be homogeneous of degree {i}")
        if exact_rank and rank < len(chern):
            for i in range(rank + 1, len(chern) + 1):
                if not chern[i - 1].is_zero():
                    raise ExactnessError(
                        f"rank-{rank} bundle has nonzero c_{i}; "
                        "exactness/rank assertion violated"
                    )
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "chern", chern)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "exact_rank", exact_rank)

    @property
    def truncation(self) -> int:
        return len(self.chern)

    def c(self, i: int) -> GradedPoly:
        """c_i as a polynomial; c_0 = 1, and 0 beyond the truncation order."""
        if i == 0:
            return GradedPoly.one(self.table)
        if 1 <= i <= len(self.chern):
            return self.chern[i - 1]
        return GradedPoly.zero(self.table)

    def total_chern(self) -> list[GradedPoly]:
        return [self.c(i) for i in range(self.truncation + 1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalBundle):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.table == other.table
            and self.chern == other.chern
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.table, self.chern))

    def __repr__(self) -> str:
        from .algebra import format_poly

        cs = ", ".join(format_poly(c) for c in self.chern)
        return f"FormalBundle(rank {self.rank}; {cs})"


def trivial_bundle(table: VariableTable, rank: int, trunc: int) -> FormalBundle:
    return FormalBundle(rank, tuple(GradedPoly.zero(table) for _ in range(trunc)), table)


def bundle_from_line_classes(classes: list[GradedPoly], trunc: int) -> FormalBundle:
    """The direct sum of line bundles with the given first Chern classes."""
    if not classes:
        raise BundleError("need at least one line class")
    table = classes[0].table
    cs = _elementary_symmetric_classes(classes, trunc)
    return FormalBundle(len(classes), cs, table, exact_rank=False)


def _elementary_symmetric_classes(roots: list[GradedPoly], trunc: int) -> tuple[GradedPoly, ...]:
    table = roots[0].table
    es = [GradedPoly.one(table)] + [GradedPoly.zero(table) for _ in range(trunc)]
    for r in roots:
        for i in range(trunc, 0, -1):
            es[i] = es[i] + mul_trunc(es[i - 1], r, trunc)
    return tuple(es[1:])


# -- universal splitting-principle formulas ----------------------------------


@lru_cache(maxsize=None)
def _root_table(r: int, with_t: bool) -> VariableTable:
    names = tuple(f"x{i+1}" for i in range(r)) + (("t",) if with_t else ())
    return VariableTable(names, (1,) * len(names))


@lru_cache(maxsize=None)
def _e_table(r: int, with_t: bool) -> VariableTable:
    names = tuple(f"e{i+1}" for i in range(r)) + (("t",) if with_t else ())
    weights = tuple(range(1, r + 1)) + ((1,) if with_t else ())
    return VariableTable(names, weights)


@lru_cache(maxsize=None)
def _elementary_in_roots(r: int, i: int, with_t: bool) -> GradedPoly:
    """e_i(x_1..x_r) expanded in the root table."""
    table = _root_table(r, with_t)
    terms = {}
    for subset in itertools.combinations(range(r), i):
        exps = tuple(1 if j in subset else 0 for j in range(r))
        if with_t:
            exps = exps + (0,)
        terms[exps] = 1
    return GradedPoly(table, terms)


def symmetric_to_elementary(p: GradedPoly, r: int, with_t: bool) -> GradedPoly:
    """Rewrite a polynomial over the root table, symmetric in x_1..x_r
    (coefficients may involve t), in terms of e_1..e_r and t.

    Classic leading-term subtraction: the graded-lex leading x-exponent of a
    symmetric polynomial is weakly decreasing, and subtracting the matching
    product of elementary symmetric polynomials strictly lowers it.
    """
    e_table = _e_table(r, with_t)
    out = GradedPoly.zero(e_table)
    work = p
    while not work.is_zero():
        exps, coeff = work.leading_term()
        xpart, tpow = (exps[:r], exps[r]) if with_t else (exps, 0)
        if any(a < b for a, b in zip(xpart, xpart[1:])):
            raise ValueError("polynomial is not symmetric in the root variables")
        e_exps = [xpart[i] - (xpart[i + 1] if i + 1 < r else 0) for i in range(r)]
        out_exps = tuple(e_exps) + ((tpow,) if with_t else ())
        out = out + GradedPoly.monomial(e_table, out_exps, coeff)
        expansion = GradedPoly.constant(work.table, coeff)
        for i, m in enumerate(e_exps, start=1):
            if m:
                expansion = expansion * _elementary_in_roots(r, i, with_t) ** m
        if tpow:
            expansion = expansion * GradedPoly.variable(work.table, "t") ** tpow
        work = work - expansion
    return out


@lru_cache(maxsize=None)
def universal_chern(op: str, r: int, k: int, trunc: int) -> tuple[GradedPoly, ...]:
    """c_1..c_trunc of sym^k / wedge^k / twist applied to a generic rank-r
    bundle, as polynomials in e_1..e_r (and t for twist)."""
    with_t = op == "twist"
    table = _root_table(r, with_t)
    xs = [GradedPoly.variable(table, f"x{i+1}") for i in range(r)]
    if op == "sym":
        if comb(r + k - 1, k) > SYM_ROOT_GUARD:
            raise BundleError("symmetric power root guard exceeded")
        roots = [
            sum(xs[i] for i in multiset) if multiset else GradedPoly.zero(table)
            for multiset in itertools.combinations_with_replacement(range(r), k)
        ]
    elif op == "wedge":
        roots = [
            sum(xs[i] for i in subset) if subset else GradedPoly.zero(table)
            for subset in itertools.combinations(range(r), k)
        ]
    elif op == "twist":
        t = GradedPoly.variable(table, "t")
        roots = [x + t for x in xs]
    else:
        raise ValueError(f"unknown operation {op!r}")
    es = _elementary_symmetric_classes(roots, trunc)
    return tuple(symmetric_to_elementary(e, r, with_t) for e in es)


def _apply_universal(
    formulas: tuple[GradedPoly, ...],
    b: FormalBundle,
    t: GradedPoly | None = None,
) -> tuple[GradedPoly, ...]:
    # e_i for i > truncation cannot occur in a formula of degree <= truncation,
    # and b.c(i) is zero there anyway.
    mapping = {f"e{i}": b.c(i) for i in range(1, b.rank + 1)}
    if t is not None:
        mapping["t"] = t
    return tuple(f.substitute(mapping, b.table) for f in formulas)


# -- bundle operations --------------------------------------------------------


def dual(b: FormalBundle) -> FormalBundle:
    """c_i -> (-1)^i c_i; an involution."""
    cs = tuple(c if i % 2 == 0 else -c for i, c in enumerate(b.chern, start=1))
    return FormalBundle(b.rank, cs, b.table, exact_rank=b.exact_rank)


def twist(b: FormalBundle, t: LineClass | GradedPoly) -> FormalBundle:
    """Tensor with a line bundle: roots x_i -> x_i + t."""
    t1 = t.c1 if isinstance(t, LineClass) else t
    if t1.table != b.table:
        raise BundleError("twist class over a different table")
    if t1.is_zero():
        return b
    formulas = universal_chern("twist", b.rank, 1, b.truncation)
    cs = _apply_universal(formulas, b, t=t1)
    return FormalBundle(b.rank, cs, b.table, exact_rank=b.exact_rank)


def sym_power(b: FormalBundle, k: int) -> FormalBundle:
    """Symmetric power; rank C(r+k-1, k), roots are degree-k multiset sums."""
    if k < 0:
        raise BundleError("symmetric power exponent must be >= 0")
    rank = comb(b.rank + k - 1, k)
    formulas = universal_chern("sym", b.rank, k, b.truncation)
    cs = _apply_universal(formulas, b)
    return FormalBundle(rank, cs, b.table, exact_rank=b.exact_rank)


def wedge_power(b: FormalBundle, k: int) -> FormalBundle:
    """Exterior power; rank C(r, k), roots are k-subset sums."""
    if not 0 <= k <= b.rank:
        raise BundleError(f"wedge exponent {k} out of range for rank {b.rank}")
    rank = comb(b.rank, k)
    formulas = universal_chern("wedge", b.rank, k, b.truncation)
    cs = _apply_universal(formulas, b)
    return FormalBundle(rank, cs, b.table, exact_rank=b.exact_rank)


def determinant_line(b: FormalBundle) -> LineClass:
    return LineClass(b.c(1))


def direct_sum(a: FormalBundle, b: FormalBundle) -> FormalBundle:
    """Whitney sum: total Chern classes multiply."""
    if a.table != b.table:
        raise BundleError("direct sum over different tables")
    trunc = min(a.truncation, b.truncation)
    total = _series_mul(a.total_chern(), b.total_chern(), trunc)
    return FormalBundle(a.rank + b.rank, tuple(total[1:]), a.table, exact_rank=False)


def _series_mul(a: list[GradedPoly], b: list[GradedPoly], trunc: int) -> list[GradedPoly]:
    table = a[0].table
    out = [GradedPoly.zero(table) for _ in range(trunc + 1)]
    for i, ai in enumerate(a[: trunc + 1]):
        for j, bj in enumerate(b[: trunc + 1]):
            if i + j <= trunc:
                out[i + j] = out[i + j] + ai * bj
    return out


def _series_inverse(a: list[GradedPoly], trunc: int) -> list[GradedPoly]:
    table = a[0].table
    if a[0] != GradedPoly.one(table):
        raise ValueError("series inverse needs constant term 1")
    inv = [GradedPoly.one(table)] + [GradedPoly.zero(table) for _ in range(trunc)]
    for d in range(1, trunc + 1):
        acc = GradedPoly.zero(table)
        for i in range(1, d + 1):
            if i < len(a):
                acc = acc + a[i] * inv[d - i]
        inv[d] = -acc
    return inv


def sequence_quotient(
    total: FormalBundle, sub: FormalBundle, assert_rank: bool = True
) -> FormalBundle:
    """Quotient bundle of an exact sequence 0 -> sub -> total -> Q -> 0,
    via the Whitney formula c(Q) = c(total) / c(sub).

    With assert_rank=True, nonzero series terms beyond the quotient's rank
    are reported as an exactness inconsistency.
    """
    if total.table != sub.table:
        raise BundleError("bundles over different tables")
    if sub.rank > total.rank:
        raise BundleError("subbundle rank exceeds total rank")
    trunc = min(total.truncation, sub.truncation)
    q = _series_mul(total.total_chern(), _series_inverse(sub.total_chern(), trunc), trunc)
    rank = total.rank - sub.rank
    return FormalBundle(rank, tuple(q[1:]), total.table, exact_rank=assert_rank)


# -- Chern character ----------------------------------------------------------


def chern_character(b: FormalBundle, trunc: int | None = None) -> list[GradedPoly]:
    """ch_0..ch_trunc via Newton's identities; ch_0 is the rank."""
    D = b.truncation if trunc is None else min(trunc, b.truncation)
    table = b.table
    p = [GradedPoly.zero(table) for _ in range(D + 1)]  # power sums
    for k in range(1, D + 1):
        acc = GradedPoly.constant(table, (-1) ** (k - 1) * k) * b.c(k)
        for i in range(1, k):
            acc = acc + Fraction((-1) ** (i - 1)) * b.c(i) * p[k - i]
        p[k] = acc
    ch = [GradedPoly.constant(table, b.rank)]
    for k in range(1, D + 1):
        ch.append(p[k] / factorial(k))
    return ch


def chern_from_character(
    ch: list[GradedPoly], rank: int, trunc: int | None = None
) -> FormalBundle:
    """Inverse of chern_character: recover c_1..c_trunc from ch_0..ch_D."""
    table = ch[0].table
    if ch[0].as_scalar() != rank:
        raise BundleError("ch_0 must equal the rank")
    D = len(ch) - 1 if trunc is None else min(trunc, len(ch) - 1)
    p = [GradedPoly.zero(table)] + [ch[k] * factorial(k) for k in range(1, D + 1)]
    e = [GradedPoly.one(table)] + [GradedPoly.zero(table) for _ in range(D)]
    for k in range(1, D + 1):
        acc = GradedPoly.zero(table)
        for i in range(1, k + 1):
            acc = acc + Fraction((-1) ** (i - 1)) * e[k - i] * p[i]
        e[k] = acc / k
    return FormalBundle(rank, tuple(e[1:]), table, exact_rank=False)


# -- twist solvers for the canonical-embedding models -------------------------


@dataclass(frozen=True)
class HyperellipticTwist:
    """Solution of Sym^(g-1) W = Hodge for a rank-2 W: w1 = coefficient * lambda1."""

    genus: int
    coefficient: Fraction  # w1 = coefficient * lambda1

    def __str__(self) -> str:
        from .algebra import format_rational

        return f"w1 = {format_rational(self.coefficient)} * lambda1"


def solve_hyperelliptic_twist(g: int) -> HyperellipticTwist:
    """Equate first Chern classes in Sym^(g-1) W = E for rank-2 W.

    The degree-1 coefficient of Sym^(g-1) on rank 2 is read off the
    universal formula, so the binomial C(g,2) is derived, not assumed.
    """
    if g < 2:
        raise BundleError("genus must be >= 2")
    if comb(g, 1) != g:  # rank Sym^(g-1)(rank 2) = g
        raise AssertionError
    c1_formula = universal_chern("sym", 2, g - 1, 1)[0]
    e_table = c1_formula.table
    lead = c1_formula.coefficient((1, 0))  # coefficient of e1
    if c1_formula != GradedPoly.monomial(e_table, (1, 0), lead):
        raise BundleError("unexpected degree-1 symmetric power formula")
    if lead != Fraction(g * (g - 1), 2):
        raise BundleError("symmetric power coefficient disagrees with root-sum count")
    return HyperellipticTwist(genus=g, coefficient=Fraction(1) / lead)


@dataclass(frozen=True)
class UnimodularTwist:
    """Solution of V (x) L = Hodge with det V trivial: c1(L) = lambda1 / rank."""

    rank: int
    coefficient: Fraction

    def __str__(self) -> str:
        from .algebra import format_rational

        return f"c1(L) = {format_rational(self.coefficient)} * lambda1"


def solve_unimodular_twist(rank: int) -> UnimodularTwist:
    """For rank-r V with c1(V) = 0 and V (x) L = E: r * c1(L) = lambda1."""
    if rank < 1:
        raise BundleError("rank must be >= 1")
    table = VariableTable(("l1",), (1,))
    lam1 = GradedPoly.variable(table, "l1")
    v = trivial_bundle(table, rank, 1)  # c1 = 0 is all that matters in degree 1
    coeff = Fraction(1, rank)
    twisted = twist(v, LineClass(lam1 * coeff))
    if twisted.c(1) != lam1:
        raise BundleError("twist solution failed verification")
    return UnimodularTwist(rank=rank, coefficient=coeff)


@dataclass(frozen=True)
class TrigonalTwist:
    """Chern-class comparison data for the scroll decomposition of a trigonal
    canonical embedding: Hodge (x) M = Sym^a V + L (x) Sym^b V with rank-2 V,
    c1(V) = 0.

    The line M is an unknown the comparison cannot pin down; it is carried as
    the convention c1(M) = t * lambda1, and the returned scalars q, r, s are
    the solution at the recorded t.  q_family/r_family give the coefficients
    of (1, t, t^2) of the full one-parameter solution, with
    alpha1 = q * lambda1 and beta2 = r * lambda1^2 + s * lambda2.
    """

    genus: int
    maroni: int
    k: int
    a: int
    b: int
    t: Fraction
    q: Fraction
    r: Fraction
    s: Fraction
    q_family: tuple[Fraction, Fraction]
    r_family: tuple[Fraction, Fraction, Fraction]
    convention: str

    def __str__(self) -> str:
        from .algebra import format_rational as fr

        return (
            f"alpha1 = {fr(self.q)} * lambda1, "
            f"beta2 = {fr(self.r)} * lambda1^2 + {fr(self.s)} * lambda2  ({self.convention})"
        )


def maroni_split_degrees(g: int, n: int) -> tuple[int, int, int]:
    """(k, a, b) with k = (g - 3n + 2)/2, a = 2n + k - 2, b = n + k - 2."""
    if g < 4:
        raise BundleError("trigonal model needs genus >= 4")
    if n < 0 or (g - n) % 2 != 0 or 3 * n > g + 2:
        raise BundleError(f"Maroni invariant {n} not admissible for genus {g}")
    k = (g - 3 * n + 2) // 2
    return k, 2 * n + k - 2, n + k - 2


def _sym2_rank2_coefficient(j: int) -> Fraction:
    """Coefficient N_j with c2(Sym^j of rank 2) = N_j * c2 when c1 = 0."""
    if j == 0:
        return Fraction(0)
    c2_formula = universal_chern("sym", 2, j, 2)[1]
    # substitute e1 -> 0, keep e2
    table = c2_formula.table
    out = Fraction(0)
    for exps, coeff in c2_formula.items():
        if exps[0] == 0:
            if exps[1] != 1:
                raise BundleError("unexpected c2 structure for a rank-2 symmetric power")
            out += coeff
    return out


def solve_trigonal_twist(g: int, n: int, t: RationalLike = 0) -> TrigonalTwist:
    """Solve the degree-1 and degree-2 Chern-class comparisons of the scroll
    decomposition for (q, r, s); the system is triangular once c1(M) = t *
    lambda1 is fixed, and the solution is verified by rebuilding both sides.
    """
    t = rat(t)
    k, a, b = maroni_split_degrees(g, n)
    if (a + 1) + (b + 1) != g:
        raise BundleError("rank bookkeeping failed: (a+1)+(b+1) != g")
    na, nb = _sym2_rank2_coefficient(a), _sym2_rank2_coefficient(b)
    if na + nb == 0:
        raise BundleError("degenerate second-Chern-class comparison")
    # degree 1: 1 + g t = (b+1) q
    q0, q1 = Fraction(1, b + 1), Fraction(g, b + 1)
    q = q0 + q1 * t
    # degree 2, lambda2 coefficient: 1 = (na + nb) s
    s = 1 / (na + nb)
    # degree 2, lambda1^2 coefficient: (g-1) t + C(g,2) t^2 = (na+nb) r + C(b+1,2) q^2
    cb = Fraction(comb(b + 1, 2))
    r0 = (-cb * q0 * q0) / (na + nb)
    r1 = (Fraction(g - 1) - cb * 2 * q0 * q1) / (na + nb)
    r2 = (Fraction(comb(g, 2)) - cb * q1 * q1) / (na + nb)
    r = r0 + r1 * t + r2 * t * t

    _verify_trigonal(g, a, b, t, q, r, s)
    return TrigonalTwist(
        genus=g,
        maroni=n,
        k=k,
        a=a,
        b=b,
        t=t,
        q=q,
        r=r,
        s=s,
        q_family=(q0, q1),
        r_family=(r0, r1, r2),
        convention=f"c1(M) = {t} * lambda1",
    )


def _verify_trigonal(
    g: int, a: int, b: int, t: Fraction, q: Fraction, r: Fraction, s: Fraction
) -> None:
    table = VariableTable(("l1", "l2"), (1, 2))
    l1 = GradedPoly.variable(table, "l1")
    l2 = GradedPoly.variable(table, "l2")
    hodge = FormalBundle(g, (l1, l2), table, exact_rank=False)
    lhs = twist(hodge, LineClass(l1 * t))
    beta2 = r * l1 * l1 + s * l2
    v = FormalBundle(2, (GradedPoly.zero(table), beta2), table, exact_rank=False)
    rhs = direct_sum(sym_power(v, a), twist(sym_power(v, b), LineClass(l1 * q)))
    if rhs.rank != g or lhs.c(1) != rhs.c(1) or lhs.c(2) != rhs.c(2):
        raise BundleError("trigonal twist solution failed verification")
