import itertools
import random

import pytest

from oracles import w6_product
from rnoeth.constructions import semilattice_partition_check
from rnoeth.core import ZERO, DomainError, Element, cyclic_group, is_homomorphism
from rnoeth.green import all_have_lri
from rnoeth.witnesses import (ALIASES, WITNESS_NAMES, Z7, a, canonical_name, shift, w1_ideal,
                              w7_partition, witness, x)

R = range(-50, 51)
N = range(0, 51)


def w1_rule(u, v):
    """x^m x^n = x^(m+n), a_i x^n = a_(i-n), x^n a_j = a_i a_j = a_j."""
    if u[0] == "x" and v[0] == "x":
        return x(u[1] + v[1])
    if u[0] == "a" and v[0] == "x":
        return a(u[1] - v[1])
    return v


def w7_rule(u, v):
    """x^i x^j = x^(i+j), x^i a_j = a_j x^i = a_(j-i), uv = 0 inside N."""
    if u[0] == "x" and v[0] == "x":
        return x(u[1] + v[1])
    if u[0] == "x" and v[0] == "a":
        return a(v[1] - u[1])
    if u[0] == "a" and v[0] == "x":
        return a(u[1] - v[1])
    return Z7


def test_w1_examples():
    W1 = witness("W1")
    assert W1.mul(a(5), x(2)) == a(3)
    assert W1.mul(x(3), a(2)) == a(2)
    assert W1.mul(a(1), a(2)) == a(2)


def test_w1_rules_on_index_range():
    W1 = witness("W1")
    terms = [x(n) for n in N] + [a(i) for i in R]
    for u in terms:
        for v in terms:
            assert W1.mul(u, v) == w1_rule(u, v)


def test_w7_examples_and_rules():
    W7 = witness("W7")
    assert W7.mul(x(2), a(3)) == a(1)
    assert W7.mul(a(1), a(2)) == Z7
    terms = [x(n) for n in range(1, 51)] + [a(i) for i in R] + [Z7]
    for u in terms:
        for v in terms:
            assert W7.mul(u, v) == w7_rule(u, v)


def test_w2_action():
    W2 = witness("W2")
    phi = W2.info["action"]
    assert phi(0, x(2)) == x(2)
    assert phi(0, a(3)) == ZERO
    assert phi(0, ZERO) == ZERO
    assert phi.validate(60).status == "verified-up-to-budget"


def test_w3_example_and_construction_path():
    W3 = witness("W3")
    u = Element("pair", ((a(2),), a(3)))
    assert W3.mul(u, Element("pair", ((), x(1)))) == Element("pair", ((a(1),), a(2)))
    assert W3.info["construction"] == "schutzenberger-reduced"


def test_w6_example_and_closed_form():
    W6 = witness("W6")
    el = lambda i, m: Element("semilattice-component", (i, m))
    assert W6.mul(el(2, 5), el(3, 1)) == el(2, 5)
    for u in itertools.product(range(1, 21), repeat=2):
        for v in itertools.product(range(1, 21), repeat=2):
            assert W6.mul(el(*u), el(*v)).payload == w6_product(u, v)


def test_w6_order_law_on_box():
    box = list(itertools.product(range(1, 21), repeat=2))
    for u in box:
        assert w6_product(u, u) == u
        for v in box:
            assert w6_product(u, v) == w6_product(v, u)
            if u != v and w6_product(u, v) == u:
                (i, m), (j, n) = u, v
                assert i <= j and m >= n
                assert i == j or m > n


def test_w5_defaults_and_parameters():
    W5 = witness("W5")
    br = lambda i, s, j: Element("bruck-reilly", (i, s, j))
    assert W5.identity == br(0, 0, 0)
    assert W5.mul(br(0, 1, 1), br(1, 1, 0)) == br(0, 0, 0)
    custom = witness("W5", M=cyclic_group(3), theta=lambda s: s)
    assert custom.mul(br(0, 1, 1), br(1, 1, 0)) == br(0, 2, 0)
    with pytest.raises(DomainError):
        witness("W5", M=__import__("rnoeth.core", fromlist=["left_zero"]).left_zero(2))


def test_w4_words():
    W4 = witness("W4")
    assert W4.first(4) == ["", "x", "xx", "xxx"]
    assert witness("W4", alphabet="xy").level(2) == ["xx", "xy", "yx", "yy"]


def test_w7_partition():
    W7 = witness("W7")
    Y, part = w7_partition()
    assert semilattice_partition_check(W7, Y, part, W7.first(120)).status == "valid"


def test_w1_ideal_has_local_right_identities():
    W1 = witness("W1")
    assert all_have_lri(W1, 60, within=w1_ideal(W1)).status == "yes-up-to-budget"


@pytest.mark.parametrize("name", ["W1", "W2", "W3", "W7"])
def test_shift_hints_are_automorphisms(name):
    S = witness(name)
    xs = S.first(120)

    def sigma(u):
        nb = S.neighbours(u)
        return nb[0] if nb else u

    assert is_homomorphism(sigma, S, S, budget=120).ok
    # injective, and onto the prefix up to one step
    images = [sigma(u) for u in xs]
    assert len(set(images)) == len(images)


def test_shift_commutes_with_w2_action():
    W2 = witness("W2")
    phi = W2.info["action"]
    sigma = lambda u: u if u == ZERO else shift(u)
    for s in W2.first(200):
        assert phi(0, sigma(s)) == sigma(phi(0, s))


def test_aliases_resolve():
    for alias, name in ALIASES.items():
        assert canonical_name(alias) == name
        assert witness(alias) is witness(name)
    assert canonical_name("w3") == "W3"
    with pytest.raises(DomainError):
        witness("W9")


@pytest.mark.parametrize("name", WITNESS_NAMES)
def test_random_triples_associate(name):
    S = witness(name)
    rng = random.Random(name)
    xs = S.first(1000)
    for _ in range(10_000):
        u, v, w = (xs[rng.randrange(len(xs))] for _ in range(3))
        assert S.mul(S.mul(u, v), w) == S.mul(u, S.mul(v, w))
