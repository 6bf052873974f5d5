"""Partitions, GL(n) representation dimensions, Littlewood-Richardson
products, and the one plethysm this project needs: Sym^2 of a second
exterior power, decomposed by brute-force symmetric-polynomial subtraction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import GradedPoly, VariableTable

PARTITION_SIZE_CAP = 12


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")
        if self.size > PARTITION_SIZE_CAP:
            raise ValueError(f"partition size {self.size} exceeds cap {PARTITION_SIZE_CAP}")

    @staticmethod
    def of(*parts: int) -> "Partition":
        return Partition(tuple(p for p in parts if p != 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        cols = [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]
        return Partition(tuple(cols))

    def contains(self, other: "Partition") -> bool:
        padded = self.parts + (0,) * max(0, other.length - self.length)
        return all(a >= b for a, b in zip(padded, other.parts))

    def arm(self, i: int, j: int) -> int:
        return self.parts[i] - (j + 1)

    def leg(self, i: int, j: int) -> int:
        return sum(1 for p in self.parts[i + 1 :] if p > j)

    def hook(self, i: int, j: int) -> int:
        return self.arm(i, j) + self.leg(i, j) + 1

    def cells(self):
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield i, j

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def dim_schur(lam: Partition, n: int) -> int:
    """Dimension of the Schur functor S_lam applied to C^n (hook content
    formula); zero when lam has more than n rows."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if lam.length > n:
        return 0
    num = Fraction(1)
    for i, j in lam.cells():
        num *= Fraction(n + j - i, lam.hook(i, j))
    assert num.denominator == 1
    return int(num)


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    if not lam.parts:
        return 1
    denom = 1
    for i, j in lam.cells():
        denom *= lam.hook(i, j)
    q, r = divmod(factorial(lam.size), denom)
    assert r == 0
    return q


def syt_count_bruteforce(lam: Partition) -> int:
    """Independent SYT count by recursive removal of outer corners."""

    @lru_cache(maxsize=None)
    def go(parts: tuple[int, ...]) -> int:
        if not parts:
            return 1
        total = 0
        for i, p in enumerate(parts):
            if i + 1 < len(parts) and parts[i + 1] == p:
                continue  # not a corner
            smaller = list(parts)
            smaller[i] -= 1
            total += go(tuple(x for x in smaller if x))
        return total

    return go(lam.parts)


@dataclass(frozen=True)
class SchurDecomposition:
    """Multiset of (partition, multiplicity) pairs, sorted for determinism."""

    terms: tuple[tuple[Partition, int], ...]

    def __post_init__(self) -> None:
        if any(m < 1 for _, m in self.terms):
            raise ValueError("multiplicities must be >= 1")

    @staticmethod
    def from_dict(d: dict[Partition, int]) -> "SchurDecomposition":
        items = tuple(sorted(((p, m) for p, m in d.items() if m), key=lambda t: t[0].parts))
        return SchurDecomposition(items)

    def multiplicity(self, lam: Partition) -> int:
        return dict(self.terms).get(lam, 0)

    def dimension(self, n: int) -> int:
        return sum(m * dim_schur(p, n) for p, m in self.terms)

    def __str__(self) -> str:
        return " + ".join(
            (f"{m}*" if m > 1 else "") + f"S{p}" for p, m in self.terms
        ) or "0"


# -- Littlewood-Richardson ---------------------------------------------------


def _lr_fillings(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Count LR skew tableaux of shape nu/lam and content mu.

    Cells are visited in reverse reading order (top to bottom, right to left
    within each row), so the lattice-word condition can be enforced at
    placement time by comparing running entry counts.
    """
    rows = nu.length
    lam_parts = lam.parts + (0,) * (rows - lam.length)
    shape = [(lam_parts[i], nu.parts[i]) for i in range(rows)]  # fill columns a..b-1

    cells = [(i, j) for i in range(rows) for j in range(shape[i][1] - 1, shape[i][0] - 1, -1)]
    counts = [0] * (mu.length + 2)  # counts[v] = number of entries v placed so far
    grid: dict[tuple[int, int], int] = {}

    def place_rl(cell_idx: int) -> int:
        if cell_idx == len(cells):
            return 1 if tuple(counts[1 : mu.length + 1]) == mu.parts else 0
        i, j = cells[cell_idx]
        right = grid.get((i, j + 1))
        above = grid.get((i - 1, j))
        total = 0
        for v in range(1, mu.length + 1):
            if counts[v] >= mu.parts[v - 1]:
                continue
            if right is not None and v > right:
                continue  # rows weakly increase left to right
            if above is not None and v <= above:
                continue  # columns strictly increase top to bottom
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word
            grid[(i, j)] = v
            counts[v] += 1
            total += place_rl(cell_idx + 1)
            counts[v] -= 1
            del grid[(i, j)]
        return total

    return place_rl(0)


def lr_product(lam: Partition, mu: Partition) -> SchurDecomposition:
    """Littlewood-Richardson expansion of s_lam * s_mu."""
    n = lam.size + mu.size
    if n > PARTITION_SIZE_CAP:
        raise ValueError("product degree exceeds the partition size cap")
    max_len = lam.length + mu.length
    max_width = (lam.parts[0] if lam.parts else 0) + (mu.parts[0] if mu.parts else 0)
    out: dict[Partition, int] = {}
    for nu_parts in _partitions_of(n, max_len, max_width):
        nu = Partition(nu_parts)
        if not nu.contains(lam):
            continue
        c = _lr_fillings(nu, lam, mu)
        if c:
            out[nu] = c
    return SchurDecomposition.from_dict(out)


def _partitions_of(n: int, max_len: int, max_part: int):
    def go(remaining: int, largest: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if len(prefix) == max_len:
            return
        for p in range(min(largest, remaining), 0, -1):
            yield from go(remaining - p, p, prefix + (p,))

    yield from go(n, max_part, ())


# -- Schur polynomials and the Sym^2(wedge^2) plethysm ------------------------


@lru_cache(maxsize=None)
def _x_table(n: int) -> VariableTable:
    return VariableTable(tuple(f"x{i+1}" for i in range(n)), (1,) * n)


@lru_cache(maxsize=None)
def schur_polynomial(lam: Partition, n: int) -> GradedPoly:
    """s_lam(x_1..x_n) as an explicit polynomial, by SSYT enumeration."""
    table = _x_table(n)
    terms: dict[tuple[int, ...], Fraction] = {}
    if lam.length > n:
        return GradedPoly.zero(table)

    rows = lam.length
    tableau: list[list[int]] = [[0] * lam.parts[i] for i in range(rows)]

    def fill(i: int, j: int) -> None:
        if i == rows:
            weight = [0] * n
            for row in tableau:
                for v in row:
                    weight[v - 1] += 1
            exps = tuple(weight)
            terms[exps] = terms.get(exps, Fraction(0)) + 1
            return
        ni, nj = (i, j + 1) if j + 1 < lam.parts[i] else (i + 1, 0)
        lo = tableau[i][j - 1] if j > 0 else 1
        if i > 0 and j < lam.parts[i - 1]:
            lo = max(lo, tableau[i - 1][j] + 1)
        for v in range(lo, n + 1):
            tableau[i][j] = v
            fill(ni, nj)

    fill(0, 0)
    return GradedPoly(table, terms)


def _elementary2(n: int) -> GradedPoly:
    table = _x_table(n)
    terms = {}
    for i, j in itertools.combinations(range(n), 2):
        exps = tuple(1 if k in (i, j) else 0 for k in range(n))
        terms[exps] = 1
    return GradedPoly(table, terms)


def decompose_schur(p: GradedPoly, n: int) -> SchurDecomposition:
    """Schur expansion of a symmetric polynomial in x_1..x_n by repeated
    subtraction of the Schur polynomial of the leading exponent."""
    out: dict[Partition, int] = {}
    work = p
    while not work.is_zero():
        exps, coeff = work.leading_term()
        lam_parts = tuple(e for e in exps if e)
        if any(a < b for a, b in zip(exps, exps[1:])) or coeff.denominator != 1:
            raise ValueError("leading term is not dominant; polynomial is not symmetric")
        lam = Partition(lam_parts)
        mult = int(coeff)
        if mult <= 0:
            raise ValueError("polynomial is not Schur-positive")
        out[lam] = out.get(lam, 0) + mult
        work = work - mult * schur_polynomial(lam, n)
    return SchurDecomposition.from_dict(out)


def decompose_sym2_wedge2(n: int) -> SchurDecomposition:
    """Schur expansion of Sym^2(wedge^2 C^n), i.e. the plethysm h2[e2].

    For a sum of monomials p, h2[p] = (p^2 + p(x -> x^2)) / 2.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    table = _x_table(n)
    e2 = _elementary2(n)
    squared_vars = {
        name: GradedPoly.monomial(table, tuple(2 if k == i else 0 for k in range(n)))
        for i, name in enumerate(table.names)
    }
    e2_sq_vars = e2.substitute(squared_vars, table)
    plethysm = (e2 * e2 + e2_sq_vars) / 2
    return decompose_schur(plethysm, n)


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
