"""Thin cells of the flag variety F_{1<n-1}: classification and counting.

A rank-(1, n-1) plurimatroid is encoded by its K-sets: K1 holds the k with
{k} a basis of the first component, K2 the k with [n] - {k} a basis of the
second.  Every non-empty basis family is a matroid at these ranks, so
K-pairs of non-empty subsets are in bijection with the plurimatroids.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .errors import EmptyCell, InvalidParameter, InvalidSignature, TooLarge
from .matroid import Matroid, Plurimatroid
from .setfam import Subset, binomial, elements_of

BRUTE_FORCE_MAX_N = 14


class CellClass(Enum):
    EMPTY = "Empty"
    COMPLETE = "Complete"
    PROPER = "Proper"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class KPair:
    k1: Subset
    k2: Subset

    def __post_init__(self):
        if self.k1.n != self.k2.n:
            raise InvalidParameter("K-sets live on different ground sets")
        if not self.k1.mask or not self.k2.mask:
            raise InvalidParameter("K-sets must be non-empty")

    @classmethod
    def of(cls, k1, k2, n: int) -> "KPair":
        return cls(Subset.of(k1, n), Subset.of(k2, n))

    @property
    def n(self) -> int:
        return self.k1.n

    @property
    def overlap(self) -> int:
        return (self.k1.mask & self.k2.mask).bit_count()

    def permuted(self, sigma) -> "KPair":
        return KPair(Subset(sigma.map_mask(self.k1.mask), self.n),
                     Subset(sigma.map_mask(self.k2.mask), self.n))


@dataclass(frozen=True)
class CountRecord:
    n: int
    complete: int
    proper: int
    empty: int
    total: int

    @property
    def nonempty(self) -> int:
        return self.complete + self.proper

    def to_json(self):
        return {"n": self.n, "complete": self.complete, "proper": self.proper,
                "empty": self.empty, "total": self.total}


def _full(n: int) -> int:
    return (1 << n) - 1


def k_sets(M: Plurimatroid) -> KPair:
    n = M.n
    if M.dims != (1, n - 1):
        raise InvalidSignature(f"expected ranks (1, {n - 1}), got {M.dims}")
    k1 = 0
    for m in M[0].masks:
        k1 |= m
    k2 = 0
    for m in M[1].masks:
        k2 |= _full(n) & ~m
    return KPair(Subset(k1, n), Subset(k2, n))


def plurimatroid_of_kpair(K: KPair) -> Plurimatroid:
    n = K.n
    first = Matroid(n, 1, frozenset(1 << (k - 1) for k in K.k1))
    second = Matroid(n, n - 1, frozenset(_full(n) & ~(1 << (k - 1)) for k in K.k2))
    return Plurimatroid((first, second))


def classify(K: KPair) -> CellClass:
    overlap = K.overlap
    if overlap == 0:
        return CellClass.COMPLETE
    if overlap == 1:
        return CellClass.EMPTY
    return CellClass.PROPER


def dimension(K: KPair) -> int:
    cls = classify(K)
    if cls is CellClass.EMPTY:
        raise EmptyCell(f"K1={K.k1} and K2={K.k2} meet in exactly one element")
    size = len(K.k1) + len(K.k2)
    return size - 2 if cls is CellClass.COMPLETE else size - 3


def _check_n(n: int):
    if n < 3:
        raise InvalidParameter(f"the (1, n-1) classification needs n >= 3, got {n}")


def count_global(n: int) -> CountRecord:
    _check_n(n)
    complete = 3**n - 2**(n + 1) + 1
    proper = 4**n - 3**n - n * 3**(n - 1)
    empty = n * 3**(n - 1)
    return CountRecord(n, complete, proper, empty, (2**n - 1) ** 2)


def count_restricted(n: int, i: int, j: int) -> tuple[int, int, int]:
    """(complete, proper, empty) among cells with |K1| = i and |K2| = j."""
    if n < 1 or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidParameter(f"need 1 <= i, j <= n, got n={n}, i={i}, j={j}")
    c = binomial(n, i) * binomial(n - i, j)
    e = i * binomial(n, i) * binomial(n - i, j - 1)
    p = binomial(n, i) * (binomial(n, j) - binomial(n - i, j) - i * binomial(n - i, j - 1))
    return c, p, e


def zone(n: int, i: int, j: int) -> int:
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidParameter(f"need 1 <= i, j <= n, got n={n}, i={i}, j={j}")
    if j <= n - i and (i == 1 or j == 1):
        return 1
    if j <= n - i:
        return 2
    if (i, j) in ((1, n), (n, 1)):
        return 3
    if j == n - i + 1:
        return 4
    return 5


def zone_values(n: int, i: int, j: int) -> dict[str, int]:
    """The values shown in grid cell (i, j), using the per-zone shortcuts."""
    z = zone(n, i, j)
    if z in (1, 2):
        c, p, e = count_restricted(n, i, j)
        return {"c": c, "p": p, "e": e} if z == 2 else {"c": c, "e": e}
    if z == 3:
        return {"e": n}
    if z == 4:
        return {"p": binomial(n, i) * (binomial(n, i - 1) - i), "e": i * binomial(n, i)}
    return {"p": binomial(n, i) * binomial(n, j)}


def zone4_alternate_proper(n: int, i: int, j: int) -> int:
    """Zone-4 proper count written as C(n,i) C(n,j) - E."""
    return binomial(n, i) * binomial(n, j) - count_restricted(n, i, j)[2]


def cell_text(values: dict[str, int]) -> str:
    parts = [f"{key.upper()} = {values[key]}" for key in ("c", "p", "e") if key in values]
    return ", ".join(parts)


SUMMARY_LABELS = (
    ("complete", "COMPLETE"),
    ("proper", "PROPER"),
    ("nonempty", "NON-EMPTY"),
    ("empty", "EMPTY"),
    ("possible", "POSSIBLE"),
)


def summary_lines(rec: CountRecord) -> list[str]:
    values = {"complete": rec.complete, "proper": rec.proper, "nonempty": rec.nonempty,
              "empty": rec.empty, "possible": rec.total}
    return [f"# {label} CELLS = {values[key]}" for key, label in SUMMARY_LABELS]


@dataclass
class ZoneTable:
    n: int
    grid: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_json(self):
        return {"n": self.n, "grid": self.grid, "summary": self.summary}

    def rows(self):
        for i, row in enumerate(self.grid, 1):
            for j, cell in enumerate(row, 1):
                yield i, j, cell

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "zone", "C", "P", "E"])
        for i, j, cell in self.rows():
            w.writerow([i, j, cell["zone"], cell.get("c", ""), cell.get("p", ""), cell.get("e", "")])
        return buf.getvalue()

    def to_text(self) -> str:
        texts = [[cell_text(c) for c in row] for row in self.grid]
        width = max([len(t) for row in texts for t in row] + [len(str(self.n))])
        head = " " * 6 + " | ".join(f"{j:^{width}}" for j in range(1, self.n + 1))
        lines = ["|B_M1| \\ |B_M2|", head]
        for i, row in enumerate(texts, 1):
            lines.append(f"{i:>4}  " + " | ".join(f"{t:^{width}}" for t in row))
        lines.append("")
        rec = CountRecord(self.n, self.summary["complete"], self.summary["proper"],
                          self.summary["empty"], self.summary["possible"])
        lines.extend(summary_lines(rec))
        return "\n".join(lines) + "\n"


def zone_table(n: int) -> ZoneTable:
    _check_n(n)
    grid = [[{"zone": zone(n, i, j), **zone_values(n, i, j)} for j in range(1, n + 1)]
            for i in range(1, n + 1)]
    rec = count_global(n)
    summary = {"complete": rec.complete, "proper": rec.proper, "nonempty": rec.total - rec.empty,
               "empty": rec.empty, "possible": rec.total}
    return ZoneTable(n, grid, summary)


def all_kpairs(n: int):
    for a in range(1, 1 << n):
        for b in range(1, 1 << n):
            yield KPair(Subset(a, n), Subset(b, n))


def _tally(args):
    n, lo, hi = args
    pop = [m.bit_count() for m in range(1 << n)]
    per_size = Counter()
    for a in range(lo, hi):
        for b in range(1, 1 << n):
            ov = pop[a & b]
            kind = "c" if ov == 0 else "e" if ov == 1 else "p"
            per_size[pop[a], pop[b], kind] += 1
    return per_size


def _brute_tallies(n: int, workers: int) -> Counter:
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute-force counting is limited to n <= {BRUTE_FORCE_MAX_N}")
    top = 1 << n
    if workers <= 1:
        return _tally((n, 1, top))
    step = -(-(top - 1) // workers)
    chunks = [(n, lo, min(lo + step, top)) for lo in range(1, top, step)]
    out = Counter()
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_tally, chunks):
            out.update(part)
    return out


def brute_force_counts(n: int, workers: int = 1) -> CountRecord:
    """Classify every pair of non-empty subsets of [n] and tally."""
    tallies = _brute_tallies(n, workers)
    totals = Counter()
    for (_, _, kind), cnt in tallies.items():
        totals[kind] += cnt
    return CountRecord(n, totals["c"], totals["p"], totals["e"], sum(totals.values()))


def brute_force_restricted(n: int, workers: int = 1) -> dict[tuple[int, int], tuple[int, int, int]]:
    tallies = _brute_tallies(n, workers)
    return {(i, j): (tallies[i, j, "c"], tallies[i, j, "p"], tallies[i, j, "e"])
            for i in range(1, n + 1) for j in range(1, n + 1)}


def kpair_from_strings(n: int, k1: str, k2: str) -> KPair:
    def parse(text):
        try:
            items = [int(x) for x in text.split(",") if x.strip()]
        except ValueError:
            raise InvalidParameter(f"cannot parse subset {text!r}") from None
        return Subset.of(items, n)
    return KPair(parse(k1), parse(k2))


def kpair_to_json(K: KPair):
    return {"n": K.n, "k1": list(elements_of(K.k1.mask)), "k2": list(elements_of(K.k2.mask))}
