"""Subsets of [n] as bit masks, binomials and permutations of [n].

Ground sets are 1-indexed: element ``k`` lives in bit ``k - 1``.  The
canonical order on d-subsets is lexicographic on the sorted element
lists, which is the order :func:`itertools.combinations` produces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .errors import InvalidParameter

MAX_N = 63


def mask_of(elements) -> int:
    mask = 0
    for k in elements:
        mask |= 1 << (k - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


@dataclass(frozen=True)
class Subset:
    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise InvalidParameter(f"n must lie in 0..{MAX_N}, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidParameter(f"mask {self.mask:#x} uses bits beyond n={self.n}")

    @classmethod
    def of(cls, elements, n: int) -> "Subset":
        elements = list(elements)
        for k in elements:
            if not 1 <= k <= n:
                raise InvalidParameter(f"element {k} outside [1, {n}]")
        return cls(mask_of(elements), n)

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    def complement(self) -> "Subset":
        return Subset(((1 << self.n) - 1) & ~self.mask, self.n)

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, k):
        return 1 <= k <= self.n and bool(self.mask >> (k - 1) & 1)

    def __lt__(self, other):
        return (len(self), self.elements) < (len(other), other.elements)

    def to_json(self):
        return list(self.elements)

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def _check_nd(n: int, d: int):
    if not 0 <= n <= MAX_N:
        raise InvalidParameter(f"n must lie in 0..{MAX_N}, got {n}")
    if not 0 <= d <= n:
        raise InvalidParameter(f"need 0 <= d <= n, got d={d}, n={n}")


@lru_cache(maxsize=None)
def subset_masks(n: int, d: int) -> tuple[int, ...]:
    """Masks of all d-subsets of [n] in canonical order."""
    _check_nd(n, d)
    return tuple(mask_of(c) for c in combinations(range(1, n + 1), d))


@lru_cache(maxsize=None)
def subset_index(n: int, d: int) -> dict[int, int]:
    return {m: i for i, m in enumerate(subset_masks(n, d))}


def enumerate_subsets(n: int, d: int) -> list[Subset]:
    return [Subset(m, n) for m in subset_masks(n, d)]


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise InvalidParameter(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n], stored as its tuple of images ``(s(1), ..., s(n))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidParameter(f"{images} is not a permutation of [{len(images)}]")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int):
        for p in permutations(range(1, n + 1)):
            yield cls(p)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (s * t)(i) = s(t(i))
        if other.n != self.n:
            raise InvalidParameter("permutations act on different ground sets")
        return Permutation(tuple(self.images[t - 1] for t in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, s in enumerate(self.images, 1):
            inv[s - 1] = i
        return Permutation(tuple(inv))

    def map_mask(self, mask: int) -> int:
        out = 0
        for k in elements_of(mask):
            out |= 1 << (self.images[k - 1] - 1)
        return out

    def matrix(self):
        """Permutation matrix with entry (i, j) equal to 1 iff j = s(i)."""
        n = self.n
        return [[1 if j == self.images[i - 1] else 0 for j in range(1, n + 1)]
                for i in range(1, n + 1)]

    def to_json(self):
        return list(self.images)


def _same_n(sigma: Permutation, I: Subset):
    if sigma.n != I.n:
        raise InvalidParameter(f"permutation on [{sigma.n}] applied to subset of [{I.n}]")


def apply_permutation_to_subset(sigma: Permutation, I: Subset) -> Subset:
    _same_n(sigma, I)
    return Subset(sigma.map_mask(I.mask), I.n)


def count_inversions(seq) -> int:
    seq = list(seq)
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


def inversion_sign(sigma: Permutation, I: Subset) -> int:
    """Parity of sorting ``(s(i_1), ..., s(i_d))`` for ``i_1 < ... < i_d``."""
    _same_n(sigma, I)
    return -1 if count_inversions(sigma(i) for i in I.elements) % 2 else 1
