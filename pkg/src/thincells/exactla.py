"""Exact rational linear algebra for subspaces of Q^n.

Matrices hold :class:`fractions.Fraction` entries.  A d x n matrix of rank d
stands for the row space it spans; its Plücker vector lists the d x d
minors in canonical subset order.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import compress

from .errors import InvalidParameter, NotASubspace
from .matroid import Matroid
from .setfam import Permutation, Subset, elements_of, inversion_sign, subset_index, subset_masks


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_frac(x) for x in row) for row in self.entries)
        if len({len(r) for r in rows}) > 1:
            raise InvalidParameter("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zeros(cls, d: int, n: int) -> "RationalMatrix":
        return cls(tuple((Fraction(0),) * n for _ in range(d)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def columns(self, cols) -> "RationalMatrix":
        """Submatrix on the given 0-based columns, in the given order."""
        return RationalMatrix(tuple(tuple(r[j] for j in cols) for r in self.entries))

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self.entries + other.entries)

    def rank(self) -> int:
        return sum(1 for r in rref(self).entries if any(r))

    def to_json(self):
        return [[str(x) for x in r] for r in self.entries]

    @classmethod
    def from_json(cls, rows) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    def __repr__(self):
        return f"RationalMatrix({self.to_json()})"


def as_matrix(W) -> RationalMatrix:
    return W if isinstance(W, RationalMatrix) else RationalMatrix(tuple(map(tuple, W)))


def rref(W) -> RationalMatrix:
    W = as_matrix(W)
    rows = [list(r) for r in W.entries]
    nrows, ncols = W.shape
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == nrows:
            break
        p = next((r for r in range(pivot_row, nrows) if rows[r][col] != 0), None)
        if p is None:
            continue
        rows[pivot_row], rows[p] = rows[p], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return RationalMatrix(tuple(map(tuple, rows)))


def rank(W) -> int:
    return as_matrix(W).rank()


def nullspace(W) -> RationalMatrix:
    """Basis of {x : W x = 0}, one basis vector per free column of the RREF."""
    R = rref(W)
    n = R.ncols
    pivots = {}
    for i, row in enumerate(R.entries):
        for j, x in enumerate(row):
            if x != 0:
                pivots[j] = i
                break
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for j, i in pivots.items():
            v[j] = -R.entries[i][free]
        basis.append(tuple(v))
    return RationalMatrix(tuple(basis))


def bareiss_det(rows) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det(rows) -> Fraction:
    """Exact determinant; rows are scaled to integers before elimination."""
    scaled = []
    scale = 1
    for r in rows:
        r = [_frac(x) for x in r]
        m = math.lcm(*(x.denominator for x in r)) if r else 1
        scale *= m
        scaled.append([int(x * m) for x in r])
    return Fraction(bareiss_det(scaled), scale)


@dataclass(frozen=True)
class PluckerVector:
    n: int
    d: int
    coords: tuple

    def __post_init__(self):
        coords = tuple(_frac(x) for x in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != len(subset_masks(self.n, self.d)):
            raise InvalidParameter("wrong number of Plücker coordinates")

    def __getitem__(self, I) -> Fraction:
        mask = I.mask if isinstance(I, Subset) else Subset.of(I, self.n).mask
        return self.coords[subset_index(self.n, self.d)[mask]]

    def support(self) -> list[int]:
        return list(compress(subset_masks(self.n, self.d), self.coords))

    def normalized(self) -> tuple:
        lead = next((x for x in self.coords if x != 0), None)
        if lead is None:
            raise NotASubspace("all Plücker coordinates vanish")
        return tuple(x / lead for x in self.coords)

    def projectively_equal(self, other: "PluckerVector") -> bool:
        return (self.n, self.d) == (other.n, other.d) and self.normalized() == other.normalized()

    def items(self):
        for m, x in zip(subset_masks(self.n, self.d), self.coords):
            yield Subset(m, self.n), x

    def to_json(self):
        return {"n": self.n, "d": self.d,
                "coords": [{"subset": list(elements_of(m)), "value": str(x)}
                           for m, x in zip(subset_masks(self.n, self.d), self.coords)]}


def _cols(mask: int):
    return [k - 1 for k in elements_of(mask)]


def plucker_vector(W) -> PluckerVector:
    W = as_matrix(W)
    d, n = W.shape
    coords = tuple(det(W.columns(_cols(m)).entries) for m in subset_masks(n, d))
    if not any(coords):
        raise NotASubspace(f"{d}x{n} matrix has rank < {d}")
    return PluckerVector(n, d, coords)


def matroid_of_subspace(W) -> Matroid:
    p = plucker_vector(W)
    return Matroid(p.n, p.d, frozenset(p.support()))


@dataclass(frozen=True)
class DiagonalTorusElement:
    diag: tuple

    def __post_init__(self):
        diag = tuple(_frac(x) for x in self.diag)
        object.__setattr__(self, "diag", diag)
        if any(x == 0 for x in diag):
            raise InvalidParameter("torus elements need non-zero diagonal entries")

    @property
    def n(self) -> int:
        return len(self.diag)

    def weight(self, I) -> Fraction:
        """t_I, the product of the diagonal entries indexed by I."""
        mask = I.mask if isinstance(I, Subset) else I
        return math.prod((self.diag[k - 1] for k in elements_of(mask)), start=Fraction(1))


def act_torus_subspace(W, g: DiagonalTorusElement) -> RationalMatrix:
    W = as_matrix(W)
    if W.ncols != g.n:
        raise InvalidParameter("torus element and matrix disagree on n")
    return RationalMatrix(tuple(tuple(x * t for x, t in zip(r, g.diag)) for r in W.entries))


def act_torus_plucker(p: PluckerVector, g: DiagonalTorusElement) -> PluckerVector:
    if p.n != g.n:
        raise InvalidParameter("torus element and Plücker vector disagree on n")
    return PluckerVector(p.n, p.d, tuple(
        x * g.weight(m) for m, x in zip(subset_masks(p.n, p.d), p.coords)))


def act_sn_subspace(sigma: Permutation, W) -> RationalMatrix:
    """W times the permutation matrix of sigma: column s(i) of the result is column i of W."""
    W = as_matrix(W)
    if W.ncols != sigma.n:
        raise InvalidParameter("permutation and matrix disagree on n")
    inv = sigma.inverse()
    return W.columns([inv(j) - 1 for j in range(1, sigma.n + 1)])


def act_sn_plucker(sigma: Permutation, p: PluckerVector) -> PluckerVector:
    # The sign is taken on the preimage J = s^-1(I): it is the parity of
    # sorting (s(j_1), ..., s(j_d)), i.e. of the columns of W P_s on I.
    if p.n != sigma.n:
        raise InvalidParameter("permutation and Plücker vector disagree on n")
    inv = sigma.inverse()
    index = subset_index(p.n, p.d)
    coords = []
    for m in subset_masks(p.n, p.d):
        J = Subset(inv.map_mask(m), p.n)
        coords.append(inversion_sign(sigma, J) * p.coords[index[J.mask]])
    return PluckerVector(p.n, p.d, tuple(coords))


def random_matrix(d: int, n: int, rng: random.Random, bound: int = 10) -> RationalMatrix:
    return RationalMatrix(tuple(
        tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(d)))


def random_full_rank(d: int, n: int, rng: random.Random, bound: int = 10,
                     tries: int = 1000) -> RationalMatrix:
    for _ in range(tries):
        W = random_matrix(d, n, rng, bound)
        if W.rank() == d:
            return W
    raise NotASubspace(f"no rank-{d} sample in {tries} tries")


def random_torus_element(n: int, rng: random.Random, bound: int = 10) -> DiagonalTorusElement:
    vals = [v for v in range(-bound, bound + 1) if v != 0]
    return DiagonalTorusElement(tuple(Fraction(rng.choice(vals), rng.choice(vals))
                                      for _ in range(n)))


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))
