import random

from oracles import first_nonassociative
from rnoeth.sampling import (all_monoids, all_operations, all_tables, endomorphisms, random_action,
                             random_monoid, random_semigroup)


def test_operation_counts():
    assert all_operations(2).shape == (16, 2, 2)
    assert all_operations(3).shape == (19_683, 3, 3)


def test_labelled_semigroup_counts():
    # labelled semigroups on 1, 2, 3 points
    assert [len(all_tables(n)) for n in (1, 2, 3)] == [1, 8, 113]


def test_tables_are_associative_and_distinct():
    tabs = all_tables(3)
    assert len({t.table for t in tabs}) == len(tabs)
    assert all(first_nonassociative(t.table) is None for t in tabs)


def test_monoid_counts():
    assert [len(all_monoids(n)) for n in (1, 2, 3)] == [1, 4, 33]


def test_random_semigroups_are_seeded():
    a = [random_semigroup(4, random.Random(9)).table for _ in range(2)]
    assert a[0] == a[1]
    assert first_nonassociative(a[0]) is None


def test_random_monoid_has_identity():
    rng = random.Random(4)
    for n in range(1, 5):
        assert random_monoid(n, rng).identity is not None


def test_endomorphisms_are_homomorphisms():
    rng = random.Random(2)
    for _ in range(10):
        S = random_semigroup(3, rng)
        ends = endomorphisms(S)
        assert tuple(range(3)) in ends
        for f in ends:
            assert all(f[S.mul(p, q)] == S.mul(f[p], f[q]) for p in range(3) for q in range(3))


def test_random_actions_validate():
    rng = random.Random(6)
    for _ in range(30):
        phi = random_action(random_semigroup(rng.randint(1, 4), rng),
                            random_semigroup(rng.randint(1, 4), rng), rng)
        assert phi.validate().status == "valid"
