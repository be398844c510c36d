"""Flags of rational subspaces, their plurimatroids and torus stabilizers."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (EmptyCell, InvalidParameter, NotNested, RankDeficient,
                     SamplingExhausted)
from .exactla import (RationalMatrix, act_sn_subspace, as_matrix, matroid_of_subspace,
                      nullspace, plucker_vector, random_matrix)
from .matroid import Plurimatroid
from .setfam import Permutation, Subset, binomial, elements_of


@dataclass(frozen=True)
class Flag:
    """A chain W_1 < ... < W_k; stage j is a full-rank d_j x n matrix."""

    stages: tuple

    @property
    def n(self) -> int:
        return self.stages[0].ncols

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.nrows for s in self.stages)

    def to_json(self):
        return {"n": self.n, "dims": list(self.dims),
                "stages": [s.to_json() for s in self.stages]}

    @classmethod
    def from_json(cls, obj) -> "Flag":
        flag = check_flag([RationalMatrix.from_json(s) for s in obj["stages"]])
        if "n" in obj and obj["n"] != flag.n or "dims" in obj and tuple(obj["dims"]) != flag.dims:
            raise InvalidParameter("declared n/dims do not match the stages")
        return flag


def check_flag(stages) -> Flag:
    stages = tuple(as_matrix(s) for s in stages)
    if not stages:
        raise InvalidParameter("a flag needs at least one stage")
    if len({s.ncols for s in stages}) != 1:
        raise InvalidParameter("stages live in different ambient spaces")
    dims = [s.nrows for s in stages]
    if any(a >= b for a, b in zip(dims, dims[1:])):
        raise InvalidParameter(f"stage dimensions must strictly increase, got {dims}")
    for j, s in enumerate(stages):
        if s.rank() != s.nrows:
            raise RankDeficient(f"stage {j} has rank {s.rank()} < {s.nrows}")
    for j in range(len(stages) - 1):
        if stages[j].stack(stages[j + 1]).rank() != dims[j + 1]:
            raise NotNested(j)
    return Flag(stages)


def plurimatroid_of_flag(F: Flag) -> Plurimatroid:
    return Plurimatroid(tuple(matroid_of_subspace(s) for s in F.stages))


def cell_membership(F: Flag, M: Plurimatroid) -> bool:
    if (F.n, F.dims) != (M.n, M.dims):
        raise InvalidParameter(f"flag signature {F.n, F.dims} vs plurimatroid {M.n, M.dims}")
    return plurimatroid_of_flag(F) == M


def act_sn_flag(sigma: Permutation, F: Flag) -> Flag:
    return Flag(tuple(act_sn_subspace(sigma, s) for s in F.stages))


@dataclass(frozen=True)
class CharacterLattice:
    """Rows e_I - e_I0 for every basis I of every component.

    I0 is the lexicographically least basis of its component.  A diagonal
    torus element fixes the cell pointwise iff it is trivial on every row.
    """

    n: int
    rows: tuple

    @classmethod
    def of(cls, M: Plurimatroid) -> "CharacterLattice":
        rows = []
        for comp in M:
            bases = sorted(comp.masks, key=elements_of)
            ref = bases[0]
            for I in bases[1:]:
                rows.append(tuple((I >> k & 1) - (ref >> k & 1) for k in range(M.n)))
        return cls(M.n, tuple(rows))

    def rank(self) -> int:
        if not self.rows:
            return 0
        return RationalMatrix(self.rows).rank()


def stabilizer_dimensions(M: Plurimatroid) -> tuple[int, int]:
    """(dim Stab_T of the cell, dim of the effective quotient torus)."""
    r = CharacterLattice.of(M).rank()
    return M.n - r, r


def flag_variety_dimension(n: int, dims) -> int:
    blocks = []
    prev = 0
    for d in list(dims) + [n]:
        blocks.append(d - prev)
        prev = d
    return sum(blocks[a] * blocks[b] for a in range(len(blocks)) for b in range(a + 1, len(blocks)))


def is_uniform(M: Plurimatroid) -> bool:
    return all(len(m) == binomial(m.n, m.d) for m in M)


def quotient_dimension(M: Plurimatroid, cell_dim: int | None = None) -> int:
    """dim F_M - dim T_M.

    ``cell_dim`` must be supplied unless M is uniform, in which case the
    cell is open and has the dimension of the whole flag variety.
    """
    if cell_dim is None:
        if not is_uniform(M):
            raise InvalidParameter("cell dimension is only known for uniform plurimatroids")
        cell_dim = flag_variety_dimension(M.n, M.dims)
    return cell_dim - stabilizer_dimensions(M)[1]


def incidence_pairing(v, alpha) -> Fraction:
    """sum_k (-1)^(k-1) alpha_k v_k; this equals det([v; W_2]) when alpha
    holds the co-singleton Plücker coordinates of the hyperplane W_2."""
    v, alpha = list(v), list(alpha)
    if len(v) != len(alpha):
        raise InvalidParameter("line and hyperplane data have different lengths")
    return sum((Fraction(a) * b if k % 2 == 0 else -Fraction(a) * b
                for k, (a, b) in enumerate(zip(alpha, v))), Fraction(0))


def line_coordinates(W1) -> tuple:
    W1 = as_matrix(W1)
    if W1.nrows != 1:
        raise InvalidParameter("a line is a 1 x n matrix")
    return plucker_vector(W1).coords


def hyperplane_coordinates(W2) -> tuple:
    """alpha_k = p_{[n] - {k}}(W2) for k = 1..n."""
    W2 = as_matrix(W2)
    n = W2.ncols
    if W2.nrows != n - 1:
        raise InvalidParameter("a hyperplane is an (n-1) x n matrix")
    p = plucker_vector(W2)
    full = Subset((1 << n) - 1, n)
    return tuple(p[Subset(full.mask & ~(1 << (k - 1)), n)] for k in range(1, n + 1))


def random_flag(n: int, dims, seed: int, bound: int = 10, tries: int = 100) -> Flag:
    """Sample stage 1, then append random rows until each next rank is reached."""
    dims = tuple(dims)
    if not dims or any(a >= b for a, b in zip(dims, dims[1:])) or dims[0] < 1 or dims[-1] > n:
        raise InvalidParameter(f"invalid flag dimensions {dims} for n={n}")
    if bound < 1:
        raise InvalidParameter("bound must be at least 1")
    rng = random.Random(seed)
    stages = []
    current = RationalMatrix(())
    for d in dims:
        for _ in range(tries):
            extra = random_matrix(d - current.nrows, n, rng, bound)
            candidate = extra if current.nrows == 0 else current.stack(extra)
            if candidate.rank() == d:
                break
        else:
            raise SamplingExhausted(f"could not reach rank {d} in {tries} tries")
        current = candidate
        stages.append(current)
    return Flag(tuple(stages))


def witness_flag(K1: Subset, K2: Subset, n: int | None = None) -> Flag:
    """A point of the (1, n-1) cell with K-sets (K1, K2).

    The line is spanned by the indicator vector of K1.  The hyperplane is
    the kernel of a normal vector h supported on K2, so its co-singleton
    coordinates are supported on K2 as well; h is 1 on K2 except at the
    largest common element, which absorbs the incidence relation.
    """
    n = K1.n if n is None else n
    if K1.n != n or K2.n != n:
        raise InvalidParameter("K-sets and n disagree")
    if n < 3:
        raise InvalidParameter("the (1, n-1) classification needs n >= 3")
    if not K1.mask or not K2.mask:
        raise InvalidParameter("K-sets must be non-empty")
    common = elements_of(K1.mask & K2.mask)
    if len(common) == 1:
        raise EmptyCell(f"K1 and K2 meet in exactly one element ({common[0]})")
    v = [Fraction(int(k in K1)) for k in range(1, n + 1)]
    h = [Fraction(int(k in K2)) for k in range(1, n + 1)]
    if common:
        h[common[-1] - 1] = Fraction(1 - len(common))
    W1 = RationalMatrix((tuple(v),))
    W2 = nullspace(RationalMatrix((tuple(h),)))
    return check_flag([W1, W2])
