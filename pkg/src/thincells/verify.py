"""Property suites comparing closed forms and constructions with oracles.

Each suite returns a :class:`SuiteResult`; the first counterexample, if
any, is kept as a human-readable string.  Formulas are injectable so that
a harness can check that corruption is caught.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import classify as cl
from .errors import EmptyCell, InvalidParameter
from .exactla import (RationalMatrix, act_sn_plucker, act_sn_subspace, act_torus_plucker,
                      act_torus_subspace, matroid_of_subspace, plucker_vector,
                      random_full_rank, random_permutation, random_torus_element)
from .flags import (CharacterLattice, hyperplane_coordinates, incidence_pairing,
                    line_coordinates, plurimatroid_of_flag, random_flag, witness_flag)
from .matroid import exchange_violation


COUNT_MAX_N = 10
RESTRICTED_MAX_N = 8
EXHAUSTIVE_MAX_N = 6
INCIDENCE_MAX_N = 7


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks"
        return text if self.passed else f"{text}; first failure: {self.failure}"


def global_counts(max_n, count_global=None):
    count_global = count_global or cl.count_global
    res = SuiteResult("global-counts")
    for n in range(3, min(max_n, COUNT_MAX_N) + 1):
        want, got = cl.brute_force_counts(n), count_global(n)
        res.checked += 1
        if want != got or got.complete + got.proper + got.empty != (2**n - 1) ** 2:
            res.failure = f"n={n}: formula {got.to_json()} vs brute force {want.to_json()}"
            break
    return res


def restricted_counts(max_n, count_restricted=None):
    count_restricted = count_restricted or cl.count_restricted
    res = SuiteResult("restricted-counts")
    for n in range(3, min(max_n, RESTRICTED_MAX_N) + 1):
        brute = cl.brute_force_restricted(n)
        sums = [0, 0, 0]
        for (i, j), want in sorted(brute.items()):
            got = tuple(count_restricted(n, i, j))
            res.checked += 1
            if got != want:
                res.failure = f"(n,i,j)=({n},{i},{j}): formula {got} vs brute force {want}"
                return res
            sums = [a + b for a, b in zip(sums, got)]
        g = cl.count_global(n)
        if tuple(sums) != (g.complete, g.proper, g.empty):
            res.failure = f"n={n}: grid sums {tuple(sums)} differ from global counts"
            return res
    return res


def zone_table(max_n, count_restricted=None):
    count_restricted = count_restricted or cl.count_restricted
    res = SuiteResult("zone-table")
    for n in range(3, min(max_n, RESTRICTED_MAX_N) + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                z = cl.zone(n, i, j)
                c, p, e = count_restricted(n, i, j)
                general = {"c": c, "p": p, "e": e}
                shown = cl.zone_values(n, i, j)
                hidden = {k: v for k, v in general.items() if k not in shown}
                res.checked += 1
                if any(general[k] != v for k, v in shown.items()) or any(hidden.values()):
                    res.failure = f"(n,i,j)=({n},{i},{j}) zone {z}: shown {shown} vs {general}"
                    return res
                if z == 4 and cl.zone4_alternate_proper(n, i, j) != shown["p"]:
                    res.failure = f"(n,i,j)=({n},{i},{j}): zone-4 renderings disagree"
                    return res
    return res


def witness_roundtrip(max_n):
    res = SuiteResult("witness-roundtrip")
    for n in range(3, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        for K in cl.all_kpairs(n):
            res.checked += 1
            empty = K.overlap == 1
            try:
                F = witness_flag(K.k1, K.k2, n)
            except EmptyCell:
                if not empty:
                    res.failure = f"n={n} {cl.kpair_to_json(K)}: EmptyCell on a non-empty cell"
                    return res
                continue
            if empty:
                res.failure = f"n={n} {cl.kpair_to_json(K)}: witness built for an empty cell"
                return res
            if cl.k_sets(plurimatroid_of_flag(F)) != K:
                res.failure = f"n={n} {cl.kpair_to_json(K)}: K-sets do not round-trip"
                return res
    return res


def stabilizer_closed_form(max_n):
    res = SuiteResult("stabilizer-closed-form")
    for n in range(3, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        for K in cl.all_kpairs(n):
            res.checked += 1
            r = CharacterLattice.of(cl.plurimatroid_of_kpair(K)).rank()
            want = (len(K.k1) - 1) + (len(K.k2) - 1) - max(K.overlap - 1, 0)
            if r != want:
                res.failure = f"n={n} {cl.kpair_to_json(K)}: lattice rank {r} vs {want}"
                return res
    return res


def _shape(rng, max_n, max_d=3):
    n = rng.randint(2, min(max_n, EXHAUSTIVE_MAX_N))
    return n, rng.randint(1, min(max_d, n))


def sn_equivariance(max_n, samples, seed):
    res = SuiteResult("sn-equivariance")
    rng = random.Random(seed)
    for t in range(samples):
        n, d = _shape(rng, max_n)
        W = random_full_rank(d, n, rng)
        sigma = random_permutation(n, rng)
        res.checked += 1
        lhs = plucker_vector(act_sn_subspace(sigma, W))
        rhs = act_sn_plucker(sigma, plucker_vector(W))
        if not lhs.projectively_equal(rhs):
            res.failure = f"sample {t}: sigma={sigma.images}, W={W.to_json()}"
            break
    return res


def torus_equivariance(max_n, samples, seed):
    res = SuiteResult("torus-equivariance")
    rng = random.Random(seed + 1)
    for t in range(samples):
        n, d = _shape(rng, max_n)
        W = random_full_rank(d, n, rng)
        g = random_torus_element(n, rng)
        res.checked += 1
        if plucker_vector(act_torus_subspace(W, g)) != act_torus_plucker(plucker_vector(W), g):
            res.failure = f"sample {t}: g={[str(x) for x in g.diag]}, W={W.to_json()}"
            break
    return res


def realized_matroids(max_n, samples, seed):
    res = SuiteResult("realized-matroids")
    rng = random.Random(seed + 2)
    for t in range(samples):
        n, d = _shape(rng, max_n)
        # small entries make vanishing minors, hence non-uniform matroids, common
        W = random_full_rank(d, n, rng, bound=1)
        res.checked += 1
        if exchange_violation(matroid_of_subspace(W).masks) is not None:
            res.failure = f"sample {t}: W={W.to_json()}"
            return res
        n = rng.randint(3, min(max_n, EXHAUSTIVE_MAX_N))
        k = rng.randint(1, n - 1)
        dims = sorted(rng.sample(range(1, n + 1), k))
        F = random_flag(n, dims, seed=rng.getrandbits(64), bound=1)
        res.checked += 1
        for comp in plurimatroid_of_flag(F):
            if exchange_violation(comp.masks) is not None:
                res.failure = f"sample {t}: flag {F.to_json()}"
                return res
    return res


def incidence_vs_rank(max_n, samples, seed):
    res = SuiteResult("incidence-vs-rank")
    rng = random.Random(seed + 3)
    for t in range(samples):
        n = rng.randint(3, min(max(max_n, 3), INCIDENCE_MAX_N))
        W2 = random_full_rank(n - 1, n, rng, bound=3)
        if t % 2:
            coeffs = [rng.randint(-3, 3) for _ in range(n - 1)]
            v = [sum((c * row[k] for c, row in zip(coeffs, W2.entries)), Fraction(0))
                 for k in range(n)]
            if not any(v):
                v = list(W2.entries[0])
        else:
            v = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
            if not any(v):
                v[0] = Fraction(1)
        W1 = RationalMatrix((tuple(v),))
        res.checked += 1
        paired = incidence_pairing(line_coordinates(W1), hyperplane_coordinates(W2)) == 0
        contained = W1.stack(W2).rank() == n - 1
        if paired != contained:
            res.failure = f"sample {t}: v={W1.to_json()}, W2={W2.to_json()}"
            break
    return res


def validate_bounds(max_n, samples):
    if not 3 <= max_n <= COUNT_MAX_N:
        raise InvalidParameter(f"max_n must lie in 3..{COUNT_MAX_N}")
    if samples < 1:
        raise InvalidParameter("samples must be positive")


def run_verification(max_n=8, samples=200, seed=0, count_global=None, count_restricted=None):
    validate_bounds(max_n, samples)
    return [
        global_counts(max_n, count_global),
        restricted_counts(max_n, count_restricted),
        zone_table(max_n, count_restricted),
        witness_roundtrip(max_n),
        stabilizer_closed_form(max_n),
        sn_equivariance(max_n, samples, seed),
        torus_equivariance(max_n, samples, seed),
        realized_matroids(max_n, samples, seed),
        incidence_vs_rank(max_n, samples, seed),
    ]


def format_report(results, max_n, samples, seed) -> str:
    lines = [f"verification max_n={max_n} samples={samples} seed={seed}"]
    lines += [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append("ALL PASS" if ok else "FAILED")
    return "\n".join(lines) + "\n"


