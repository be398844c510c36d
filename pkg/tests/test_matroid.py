import math
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from thincells.errors import ExchangeViolation, InvalidFamily, InvalidParameter, TooLarge
from thincells.matroid import (Matroid, Plurimatroid, check_exchange, enumerate_matroids,
                               enumerate_plurimatroids, new_matroid, orbit,
                               orbit_representatives, permute_matroid, permute_plurimatroid,
                               uniform_matroid)
from thincells.setfam import Permutation, Subset

from conftest import permutations_of


def exchange_oracle(family):
    F = {frozenset(b) for b in family}
    return all(any((I - {i}) | {j} in F for j in J - I) for I in F for J in F for i in I - J)


def oracle_matroids(n, d):
    subs = [frozenset(c) for c in combinations(range(1, n + 1), d)]
    found = []
    for r in range(1, len(subs) + 1):
        for fam in combinations(subs, r):
            if exchange_oracle(fam):
                found.append(frozenset(fam))
    return found


def test_check_exchange_examples():
    assert check_exchange(4, 2, [list(c) for c in combinations(range(1, 5), 2)])
    assert not check_exchange(4, 2, [[1, 2], [3, 4]])
    assert check_exchange(3, 2, [[1, 2], [1, 3]])


def test_check_exchange_rejects_bad_families():
    with pytest.raises(InvalidFamily):
        check_exchange(3, 2, [])
    with pytest.raises(InvalidFamily):
        check_exchange(3, 2, [[1, 2], [3]])


def test_new_matroid_examples():
    M = new_matroid(3, 1, [[1], [2]])
    assert M.basis_tuples() == ((1,), (2,))
    with pytest.raises(ExchangeViolation) as info:
        new_matroid(4, 2, [[1, 2], [3, 4]])
    I, J, i = info.value.witness
    assert (I.elements, J.elements, i) == ((1, 2), (3, 4), 1)
    assert new_matroid(3, 2, [[1, 2], [1, 3], [2, 3]]) == uniform_matroid(3, 2)


def test_uniform_matroid():
    assert len(uniform_matroid(4, 2)) == 6
    assert uniform_matroid(3, 3).basis_tuples() == ((1, 2, 3),)
    assert len(uniform_matroid(5, 1)) == 5
    with pytest.raises(InvalidParameter):
        uniform_matroid(3, 0)


@pytest.mark.parametrize("n,d,count", [(3, 1, 7), (3, 2, 7), (2, 1, 3)])
def test_enumerate_matroids_examples(n, d, count):
    assert len(enumerate_matroids(n, d)) == count


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2)])
def test_enumerate_matroids_matches_set_oracle(n, d):
    got = {frozenset(frozenset(b) for b in M.basis_tuples()) for M in enumerate_matroids(n, d)}
    assert got == set(oracle_matroids(n, d))


def test_enumeration_order_and_workers():
    serial = enumerate_matroids(4, 2)
    keys = [M.basis_tuples() for M in serial]
    assert keys == sorted(keys)
    assert enumerate_matroids(4, 2, workers=3) == serial


@pytest.mark.parametrize("n", range(2, 7))
def test_rank_one_and_corank_one_counts(n):
    assert len(enumerate_matroids(n, 1)) == 2**n - 1
    assert len(enumerate_matroids(n, n - 1)) == 2**n - 1


def test_enumeration_limit():
    with pytest.raises(TooLarge):
        enumerate_matroids(7, 1)


def test_permute_matroid_examples():
    M = new_matroid(3, 1, [[1], [3]])
    assert permute_matroid(Permutation.identity(3), M) == M
    assert permute_matroid(Permutation((2, 1, 3)), M).basis_tuples() == ((2,), (3,))
    assert permute_matroid(Permutation((2, 3, 1)), uniform_matroid(3, 2)) == uniform_matroid(3, 2)
    with pytest.raises(InvalidParameter):
        permute_matroid(Permutation((1, 2)), M)


def test_permute_plurimatroid_examples():
    U = Plurimatroid((uniform_matroid(4, 2), uniform_matroid(4, 3)))
    assert permute_plurimatroid(Permutation((2, 1, 3, 4)), U) == U
    P = Plurimatroid((new_matroid(3, 1, [[1]]), new_matroid(3, 2, [[1, 2]])))
    Q = permute_plurimatroid(Permutation((2, 1, 3)), P)
    assert [m.basis_tuples() for m in Q] == [((2,),), ((1, 2),)]
    assert permute_plurimatroid(Permutation.identity(3), P) == P


def test_plurimatroid_validation():
    with pytest.raises(InvalidParameter):
        Plurimatroid((uniform_matroid(4, 3), uniform_matroid(4, 2)))
    with pytest.raises(InvalidParameter):
        Plurimatroid((uniform_matroid(3, 1), uniform_matroid(4, 2)))


def test_json_round_trip():
    M = new_matroid(4, 2, [[1, 3], [1, 2]])
    assert M.to_json() == {"n": 4, "d": 2, "bases": [[1, 2], [1, 3]]}
    assert Matroid.from_json(M.to_json()) == M
    P = Plurimatroid((M, uniform_matroid(4, 3)))
    assert Plurimatroid.from_json(P.to_json()) == P


@settings(max_examples=60)
@given(st.data())
def test_permutation_action_composes(data):
    n = 4
    Ms = enumerate_matroids(n, 2)
    M = data.draw(st.sampled_from(Ms))
    s = data.draw(permutations_of(n))
    t = data.draw(permutations_of(n))
    assert permute_matroid(s, permute_matroid(t, M)) == permute_matroid(s * t, M)
    assert check_exchange(n, 2, permute_matroid(s, M).masks)


def test_orbits_on_two_points():
    # explicit partition under S_2: {{1}} ~ {{2}}, and {{1},{2}} alone
    plur = enumerate_plurimatroids(2, (1, 2))
    assert len(plur) == 3
    reps = orbit_representatives(plur)
    assert [r[0].basis_tuples() for r in reps] == [((1,),), ((1,), (2,))]


def test_orbit_of_uniform_is_fixed_point():
    U = Plurimatroid((uniform_matroid(4, 2), uniform_matroid(4, 3)))
    assert orbit_representatives([U]) == [U]


def burnside(plurimatroids, n):
    def act(s, fam):
        return frozenset(frozenset(s[i - 1] for i in I) for I in fam)
    fams = [tuple(frozenset(map(frozenset, m.basis_tuples())) for m in P) for P in plurimatroids]
    group = list(permutations(range(1, n + 1)))
    fixed = sum(all(act(s, f) == f for f in fam) for s in group for fam in fams)
    assert fixed % len(group) == 0
    return fixed // len(group)


def test_orbit_representatives_match_burnside():
    plur = enumerate_plurimatroids(3, (1, 2))
    assert len(plur) == 49
    reps = orbit_representatives(plur)
    assert len(reps) == burnside(plur, 3) == 13
    assert sum(len(orbit(r)) for r in reps) == 49


def test_orbit_representatives_properties():
    plur = enumerate_plurimatroids(4, (1, 3))
    reps = orbit_representatives(plur)
    assert orbit_representatives(reps) == reps
    for r in reps:
        assert len(orbit(r)) and math.factorial(4) % len(orbit(r)) == 0
        assert r.sort_key() == min(q.sort_key() for q in orbit(r))
    covered = set().union(*(orbit(r) for r in reps))
    assert covered == set(plur)
    assert len(reps) == burnside(plur, 4)
