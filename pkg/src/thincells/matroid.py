"""Matroids given by their bases, plurimatroids and the S_n action on them.

Bases are kept as integer bit masks (see :mod:`thincells.setfam`); the
:class:`Subset` view is produced on demand.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .errors import ExchangeViolation, InvalidFamily, InvalidParameter, TooLarge
from .setfam import Permutation, Subset, elements_of, subset_masks

ENUMERATION_MAX_N = 6
ORBIT_MAX_N = 8


def _as_mask(x, n: int) -> int:
    if isinstance(x, Subset):
        if x.n != n:
            raise InvalidParameter(f"subset of [{x.n}] used on ground set [{n}]")
        return x.mask
    if isinstance(x, int):
        return x
    return Subset.of(x, n).mask


def _low_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def exchange_violation(masks):
    """First ``(I, J, i)`` (as masks/bit) breaking the exchange property, or None.

    Pairs are scanned in canonical order so the witness is deterministic.
    """
    ordered = sorted(masks, key=elements_of)
    family = set(ordered)
    for I in ordered:
        for J in ordered:
            if I == J:
                continue
            out = J & ~I
            for i in _low_bits(I & ~J):
                base = I ^ i
                if not any(base | j in family for j in _low_bits(out)):
                    return I, J, i
    return None


def _validate_family(n: int, d: int, family) -> frozenset[int]:
    if not 0 <= d <= n:
        raise InvalidParameter(f"need 0 <= d <= n, got d={d}, n={n}")
    masks = frozenset(_as_mask(x, n) for x in family)
    if not masks:
        raise InvalidFamily("basis family is empty")
    for m in masks:
        if m >> n or m.bit_count() != d:
            raise InvalidFamily(f"{list(elements_of(m))} is not a {d}-subset of [{n}]")
    return masks


def check_exchange(n: int, d: int, family) -> bool:
    return exchange_violation(_validate_family(n, d, family)) is None


@dataclass(frozen=True)
class Matroid:
    n: int
    d: int
    masks: frozenset

    @property
    def bases(self) -> list[Subset]:
        return [Subset(m, self.n) for m in sorted(self.masks, key=elements_of)]

    def basis_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(elements_of(m) for m in self.masks))

    def __len__(self):
        return len(self.masks)

    def to_json(self):
        return {"n": self.n, "d": self.d, "bases": [list(b) for b in self.basis_tuples()]}

    @classmethod
    def from_json(cls, obj) -> "Matroid":
        return new_matroid(obj["n"], obj["d"], obj["bases"])

    def __repr__(self):
        bases = ",".join("{" + ",".join(map(str, b)) + "}" for b in self.basis_tuples())
        return f"Matroid(n={self.n}, d={self.d}, bases=[{bases}])"


def new_matroid(n: int, d: int, family) -> Matroid:
    masks = _validate_family(n, d, family)
    bad = exchange_violation(masks)
    if bad is not None:
        I, J, i = bad
        raise ExchangeViolation(Subset(I, n), Subset(J, n), elements_of(i)[0])
    return Matroid(n, d, masks)


def uniform_matroid(n: int, d: int) -> Matroid:
    if not 1 <= d <= n:
        raise InvalidParameter(f"uniform matroid needs 1 <= d <= n, got d={d}, n={n}")
    return Matroid(n, d, frozenset(subset_masks(n, d)))


def _scan_families(args):
    n, d, start, stop = args
    subs = subset_masks(n, d)
    found = []
    for code in range(start, stop):
        masks = [subs[b] for b in range(len(subs)) if code >> b & 1]
        if exchange_violation(masks) is None:
            found.append(code)
    return found


def enumerate_matroids(n: int, d: int, workers: int = 1) -> list[Matroid]:
    """Every rank-d matroid on [n], by brute force over all basis families."""
    if n > ENUMERATION_MAX_N:
        raise TooLarge(f"matroid enumeration is limited to n <= {ENUMERATION_MAX_N}")
    if not 0 <= d <= n:
        raise InvalidParameter(f"need 0 <= d <= n, got d={d}, n={n}")
    subs = subset_masks(n, d)
    total = 1 << len(subs)
    if workers <= 1:
        codes = _scan_families((n, d, 1, total))
    else:
        step = -(-(total - 1) // workers)
        chunks = [(n, d, lo, min(lo + step, total)) for lo in range(1, total, step)]
        with ProcessPoolExecutor(workers) as pool:
            codes = [c for part in pool.map(_scan_families, chunks) for c in part]
    out = [Matroid(n, d, frozenset(subs[b] for b in range(len(subs)) if c >> b & 1))
           for c in codes]
    out.sort(key=Matroid.basis_tuples)
    return out


@dataclass(frozen=True)
class Plurimatroid:
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise InvalidParameter("a plurimatroid needs at least one component")
        if len({m.n for m in comps}) != 1:
            raise InvalidParameter("components live on different ground sets")
        dims = [m.d for m in comps]
        if any(a >= b for a, b in zip(dims, dims[1:])):
            raise InvalidParameter(f"ranks must strictly increase, got {dims}")

    @property
    def n(self) -> int:
        return self.components[0].n

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(m.d for m in self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, k):
        return self.components[k]

    def sort_key(self):
        return (self.n, tuple((m.d, m.basis_tuples()) for m in self.components))

    def to_json(self):
        return {"n": self.n, "components": [m.to_json() for m in self.components]}

    @classmethod
    def from_json(cls, obj) -> "Plurimatroid":
        comps = tuple(Matroid.from_json(c) for c in obj["components"])
        if "n" in obj and any(m.n != obj["n"] for m in comps):
            raise InvalidParameter("component n disagrees with plurimatroid n")
        return cls(comps)


def enumerate_plurimatroids(n: int, dims, workers: int = 1) -> list[Plurimatroid]:
    dims = tuple(dims)
    per_rank = [enumerate_matroids(n, d, workers) for d in dims]
    return [Plurimatroid(c) for c in product(*per_rank)]


def permute_matroid(sigma: Permutation, M: Matroid) -> Matroid:
    if sigma.n != M.n:
        raise InvalidParameter(f"permutation on [{sigma.n}] applied to matroid on [{M.n}]")
    return Matroid(M.n, M.d, frozenset(sigma.map_mask(m) for m in M.masks))


def permute_plurimatroid(sigma: Permutation, P: Plurimatroid) -> Plurimatroid:
    return Plurimatroid(tuple(permute_matroid(sigma, m) for m in P.components))


def orbit(P: Plurimatroid) -> set:
    if P.n > ORBIT_MAX_N:
        raise TooLarge(f"orbit computations are limited to n <= {ORBIT_MAX_N}")
    return {permute_plurimatroid(s, P) for s in Permutation.all(P.n)}


def canonical_form(P: Plurimatroid) -> Plurimatroid:
    return min(orbit(P), key=Plurimatroid.sort_key)


def orbit_representatives(plurimatroids) -> list[Plurimatroid]:
    """One representative per S_n-orbit: the orbit minimum under ``sort_key``."""
    plurimatroids = list(plurimatroids)
    if not plurimatroids:
        return []
    sig = (plurimatroids[0].n, plurimatroids[0].dims)
    if any((P.n, P.dims) != sig for P in plurimatroids):
        raise InvalidParameter("inputs do not share ground set and rank signature")
    if sig[0] > ORBIT_MAX_N:
        raise TooLarge(f"orbit computations are limited to n <= {ORBIT_MAX_N}")
    reps = set()
    seen = set()
    for P in plurimatroids:
        if P in seen:
            continue
        orb = orbit(P)
        seen |= orb
        rep = min(orb, key=Plurimatroid.sort_key)
        reps.add(rep)
    return sorted(reps, key=Plurimatroid.sort_key)

