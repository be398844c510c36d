from itertools import product

import pytest
from hypothesis import given, strategies as st

from thincells.classify import (CellClass, CountRecord, KPair, all_kpairs, brute_force_counts,
                                brute_force_restricted, classify, count_global,
                                count_restricted, dimension, k_sets, plurimatroid_of_kpair,
                                summary_lines, zone, zone4_alternate_proper, zone_table,
                                zone_values)
from thincells.errors import EmptyCell, InvalidParameter, InvalidSignature, TooLarge
from thincells.matroid import Plurimatroid, enumerate_plurimatroids, new_matroid, uniform_matroid
from thincells.setfam import Permutation, Subset
from thincells.setfam import binomial as C

from conftest import permutations_of


def label_oracle(n):
    """Tally by assigning each element one of: both, only K1, only K2, neither."""
    tally = {"c": 0, "p": 0, "e": 0}
    for labels in product("bxyo", repeat=n):
        in1 = sum(1 for t in labels if t in "bx")
        in2 = sum(1 for t in labels if t in "by")
        if not in1 or not in2:
            continue
        both = labels.count("b")
        tally["c" if both == 0 else "e" if both == 1 else "p"] += 1
    return CountRecord(n, tally["c"], tally["p"], tally["e"], sum(tally.values()))


def test_k_sets_example():
    M = Plurimatroid((new_matroid(3, 1, [[1], [3]]), new_matroid(3, 2, [[1, 2], [2, 3]])))
    assert k_sets(M) == KPair.of([1, 3], [1, 3], 3)
    U = Plurimatroid((uniform_matroid(5, 1), uniform_matroid(5, 4)))
    assert k_sets(U) == KPair.of(range(1, 6), range(1, 6), 5)
    with pytest.raises(InvalidSignature):
        k_sets(Plurimatroid((uniform_matroid(4, 1), uniform_matroid(4, 2))))


def test_kpairs_biject_with_plurimatroids():
    plur = enumerate_plurimatroids(4, (1, 3))
    pairs = list(all_kpairs(4))
    assert len(plur) == len(pairs) == 225
    assert {k_sets(P) for P in plur} == set(pairs)
    for K in pairs:
        assert k_sets(plurimatroid_of_kpair(K)) == K


def test_classify_examples():
    assert classify(KPair.of([1], [2, 3], 3)) is CellClass.COMPLETE
    assert classify(KPair.of([1, 2], [1, 2], 3)) is CellClass.PROPER
    assert classify(KPair.of([1], [1, 2, 3], 3)) is CellClass.EMPTY
    assert classify(KPair.of([1, 2], [2, 3], 3)) is CellClass.EMPTY


def test_dimension_examples():
    assert dimension(KPair.of([1, 2], [3, 4], 4)) == 2
    assert dimension(KPair.of([1, 2], [1, 2], 4)) == 1
    assert dimension(KPair.of([1], [2], 3)) == 0
    with pytest.raises(EmptyCell):
        dimension(KPair.of([1], [1], 3))


def test_kpair_rejects_empty_sets():
    with pytest.raises(InvalidParameter):
        KPair(Subset(0, 3), Subset.of([1], 3))


@pytest.mark.parametrize("n,expected", [(3, (12, 10, 27, 49)), (4, (50, 67, 108, 225))])
def test_count_global_examples(n, expected):
    rec = count_global(n)
    assert (rec.complete, rec.proper, rec.empty, rec.total) == expected
    assert brute_force_counts(n) == rec == label_oracle(n)


@pytest.mark.parametrize("n", range(3, 11))
def test_count_global_matches_brute_force(n):
    rec = count_global(n)
    assert rec == brute_force_counts(n)
    assert rec.complete + rec.proper + rec.empty == rec.total == (2**n - 1) ** 2


@pytest.mark.parametrize("n", range(3, 8))
def test_brute_force_matches_label_oracle(n):
    assert brute_force_counts(n) == label_oracle(n)


def test_brute_force_workers_agree():
    assert brute_force_counts(7, workers=3) == brute_force_counts(7)


def test_count_global_bounds():
    with pytest.raises(InvalidParameter):
        count_global(2)
    with pytest.raises(TooLarge):
        brute_force_counts(15)
    assert count_global(40).total == (2**40 - 1) ** 2


def test_count_restricted_examples():
    assert count_restricted(4, 1, 1) == (12, 0, 4)
    for n in range(3, 9):
        assert count_restricted(n, n, n) == (0, 1, 0)
    with pytest.raises(InvalidParameter):
        count_restricted(4, 0, 1)


@pytest.mark.parametrize("n", range(3, 9))
def test_count_restricted_matches_brute_force(n):
    brute = brute_force_restricted(n)
    sums = [0, 0, 0]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            got = count_restricted(n, i, j)
            assert got == brute[i, j]
            sums = [a + b for a, b in zip(sums, got)]
    g = count_global(n)
    assert tuple(sums) == (g.complete, g.proper, g.empty)


def test_zone_examples():
    assert zone(5, 1, 5) == 3
    assert zone(5, 2, 4) == 4
    assert zone(5, 1, 2) == 1
    assert zone(5, 5, 1) == 3
    assert zone(5, 2, 2) == 2
    assert zone(5, 4, 4) == 5


@pytest.mark.parametrize("n", range(3, 9))
def test_zone_conditions_single_valued(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            hits = [
                j <= n - i and (i == 1 or j == 1),
                j <= n - i and i >= 2 and j >= 2,
                (i == 1 and j == n) or (i == n and j == 1),
                j == n - i + 1 and 2 <= i <= n - 1,
                j >= n - i + 2,
            ]
            assert hits.count(True) == 1
            assert zone(n, i, j) == hits.index(True) + 1


@pytest.mark.parametrize("n", range(3, 9))
def test_zone_values_equal_general_formulas(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c, p, e = count_restricted(n, i, j)
            general = {"c": c, "p": p, "e": e}
            shown = zone_values(n, i, j)
            for key, val in general.items():
                assert shown.get(key, 0) == val
            if zone(n, i, j) == 4:
                assert shown["p"] == C(n, i) * (C(n, i - 1) - i) == zone4_alternate_proper(n, i, j)
                assert shown["e"] == i * C(n, i)


def test_zone_table_content():
    t4 = zone_table(4)
    assert t4.grid[0][3] == {"zone": 3, "e": 4}
    csv_rows = t4.to_csv().strip().splitlines()
    assert len(csv_rows) == 17
    assert "E = 4" in t4.to_text()
    t3 = zone_table(3)
    assert t3.summary == {"complete": 12, "proper": 10, "nonempty": 22, "empty": 27, "possible": 49}
    assert summary_lines(count_global(3)) == [
        "# COMPLETE CELLS = 12", "# PROPER CELLS = 10", "# NON-EMPTY CELLS = 22",
        "# EMPTY CELLS = 27", "# POSSIBLE CELLS = 49"]
    assert set(zone_table(5).grid[1][3]) == {"zone", "p", "e"}
    with pytest.raises(InvalidParameter):
        zone_table(2)


@pytest.mark.parametrize("n", range(3, 11))
def test_nonempty_summary(n):
    rec = count_global(n)
    assert zone_table(n).summary["nonempty"] == rec.complete + rec.proper == (2**n - 1) ** 2 - n * 3 ** (n - 1)


@given(st.data())
def test_classification_is_permutation_invariant(data):
    n = data.draw(st.integers(3, 5))
    a = data.draw(st.integers(1, 2**n - 1))
    b = data.draw(st.integers(1, 2**n - 1))
    s = data.draw(permutations_of(n))
    K = KPair(Subset(a, n), Subset(b, n))
    L = K.permuted(s)
    assert classify(L) is classify(K)
    if classify(K) is not CellClass.EMPTY:
        assert dimension(L) == dimension(K)


def test_classification_invariant_exhaustive_n4():
    group = list(Permutation.all(4))
    for K in all_kpairs(4):
        assert {classify(K.permuted(s)) for s in group} == {classify(K)}
