import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bruck_reilly_product, first_nonassociative, schutz_product, w6_product
from strategies import actions, semigroups
from rnoeth.analysis import som_identity_chain_check
from rnoeth.constructions import (REES_ZERO, EndoAction, SemilatticeDecomposition,
                                  brandt_extension, bruck_reilly, free_product, inject_mutation,
                                  is_minimal_length, monoid_free_product, rees_matrix,
                                  rees_matrix_zero, schutzenberger_product,
                                  schutz_rule, schutzenberger_reduced, semidirect_product,
                                  semilattice_partition_check, strong_semilattice)
from rnoeth.core import (ONE, ConstructionError, ContractError, Element, FiniteSemigroup,
                         adjoin_identity, adjoin_zero, chain_semilattice, cyclic_group,
                         left_zero, null_semigroup, right_zero, trivial_semigroup,
                         validate_associativity)
from rnoeth.sampling import all_tables
from rnoeth.witnesses import a, w7, w7_partition, witness, x

seq = lambda *letters: Element("sequence", tuple(letters))
rees = lambda i, s, j: Element("rees", (i, s, j))
br = lambda i, s, j: Element("bruck-reilly", (i, s, j))


def lab(S, x, y):
    """Multiply two labels of a materialized construction."""
    return S.label(S.mul(S.index_of(x), S.index_of(y)))


# semidirect products


def test_identity_action_gives_direct_product(c2, lz):
    P = semidirect_product(lz, c2, EndoAction.identity(lz, c2))
    for (s, t), (s2, t2) in itertools.product(itertools.product(range(2), range(2)), repeat=2):
        got = lab(P, Element("pair", (s, t)), Element("pair", (s2, t2)))
        assert got == Element("pair", (lz.mul(s, s2), c2.mul(t, t2)))


def test_constant_action_at_identity_gives_left_zero():
    S = adjoin_identity(null_semigroup(2), force=True)
    T = FiniteSemigroup([[0]], ["e"])
    P = semidirect_product(S, T, EndoAction.constant(S, T, S.identity))
    for p in P.elements():
        for q in P.elements():
            assert P.mul(p, q) == p


def test_invalid_action_is_rejected(c2):
    swap = EndoAction.from_table(c2, c2, [[1, 0], [1, 0]])
    with pytest.raises(ConstructionError) as exc:
        semidirect_product(c2, c2, swap)
    assert exc.value.witness[0] == "endomorphism"


def test_action_that_is_not_a_homomorphism_is_rejected():
    S = chain_semilattice(2)
    T = cyclic_group(2)
    # phi_g = constant 0 is an endomorphism, but phi_{gg} = phi_e = id differs from phi_g phi_g
    phi = EndoAction.from_table(S, T, [[0, 1], [0, 0]])
    assert phi.validate().witness[0] == "composition"


@settings(max_examples=40, deadline=None)
@given(actions(3))
def test_semidirect_products_follow_the_rule_and_associate(phi):
    S, T = phi.domain, phi.index
    P = semidirect_product(S, T, phi)
    assert validate_associativity(P.array).valid
    for p in P.elements():
        s, t = P.label(p).payload
        for q in P.elements():
            s2, t2 = P.label(q).payload
            assert P.label(P.mul(p, q)).payload == (S.mul(s, phi(t, s2)), T.mul(t, t2))


# Schutzenberger products


def test_empty_middle_embeds_the_direct_product(c2):
    U = schutz_rule(c2, c2)
    for s1, t1, s2, t2 in itertools.product(range(2), repeat=4):
        got = U(Element("schutz-triple", (s1, (), t1)), Element("schutz-triple", (s2, (), t2)))
        assert got == Element("schutz-triple", (c2.mul(s1, s2), (), c2.mul(t1, t2)))


def test_group_example_against_second_set_builder(c2):
    e, g = 0, 1
    U = schutzenberger_product(c2, c2)
    lhs = Element("schutz-triple", (g, ((e, g),), e))
    rhs = Element("schutz-triple", (e, ((g, e),), g))
    got = lab(U, lhs, rhs)
    assert got == schutz_rule(c2, c2)(lhs, rhs)
    s, P, t = schutz_product(c2.mul, c2.mul, (g, {(e, g)}, e), (e, {(g, e)}, g))
    assert got.payload == (s, tuple(sorted(P)), t)
    # s1 P2 = {(g*g, e)} = {(e, e)} and P1 t2 = {(e, g*g)} = {(e, e)}
    assert got.payload == (g, ((e, e),), g)


@settings(max_examples=25, deadline=None)
@given(semigroups(2), semigroups(2), st.data())
def test_schutzenberger_rule_matches_second_builder(S, T, data):
    U = schutz_rule(S, T)
    grid = [(p, q) for p in S.elements() for q in T.elements()]
    subsets = st.sets(st.sampled_from(grid), max_size=len(grid))
    for _ in range(10):
        P1, P2 = data.draw(subsets), data.draw(subsets)
        s1, s2 = data.draw(st.sampled_from(range(S.order))), data.draw(st.sampled_from(range(S.order)))
        t1, t2 = data.draw(st.sampled_from(range(T.order))), data.draw(st.sampled_from(range(T.order)))
        got = U(Element("schutz-triple", (s1, tuple(sorted(P1)), t1)),
                    Element("schutz-triple", (s2, tuple(sorted(P2)), t2)))
        s, P, t = schutz_product(S.mul, T.mul, (s1, P1, t1), (s2, P2, t2))
        assert got.payload == (s, tuple(sorted(P)), t)


def test_small_schutzenberger_products_are_materialized_and_associative():
    U = schutzenberger_product(trivial_semigroup(), cyclic_group(2))
    assert U.is_finite and U.order == 1 * 2 * 2 ** 2
    assert validate_associativity(U.array).valid
    big = schutzenberger_product(cyclic_group(3), cyclic_group(3))
    assert not big.is_finite
    assert all(len(set(e.payload[1])) == len(e.payload[1]) for e in big.first(300))


def test_reduced_form_on_w1():
    R = schutzenberger_reduced(witness("W1"))
    b, t1, t2 = a(4), a(2), x(3)
    got = R.mul(Element("pair", ((b,), t1)), Element("pair", ((), t2)))
    assert got == Element("pair", ((witness("W1").mul(b, t2),), witness("W1").mul(t1, t2)))
    assert got == Element("pair", ((a(1),), a(-1)))


def test_reduced_form_matches_formula_on_finite_monoid(c2):
    R = schutzenberger_reduced(c2)
    for p in R.elements():
        P1, t1 = R.label(p).payload
        for q in R.elements():
            P2, t2 = R.label(q).payload
            want = tuple(sorted({c2.mul(u, t2) for u in P1} | set(P2)))
            assert R.label(R.mul(p, q)).payload == (want, c2.mul(t1, t2))


# free products


def test_free_product_rules(lz, rz):
    F = free_product([lz, rz])
    assert F.mul(seq((0, 1)), seq((1, 0))) == seq((0, 1), (1, 0))
    assert F.mul(seq((0, 1)), seq((0, 0))) == seq((0, 1))
    got = F.mul(seq((0, 1), (1, 0)), seq((1, 1), (0, 0)))
    assert got == seq((0, 1), (1, rz.mul(0, 1)), (0, 0))


def test_free_product_needs_two_factors(lz):
    with pytest.raises(ConstructionError):
        free_product([lz])


def test_monoid_free_product_reduction():
    G, H = cyclic_group(2), cyclic_group(2)
    F = monoid_free_product([G, H])
    g, h = (0, 1), (1, 1)
    assert F.mul(seq(g), seq((1, 0))) == seq(g)
    assert F.mul(seq(g, h), seq(h, g)) == ONE
    assert F.identity == ONE and F.first(1) == [ONE]
    assert not is_minimal_length(F, seq(g, h))
    L = monoid_free_product([adjoin_identity(left_zero(2), force=True), G])
    assert is_minimal_length(L, seq((0, 1)))


def test_free_product_sequences_alternate():
    F = monoid_free_product([cyclic_group(2), cyclic_group(3)])
    for u in F.first(200):
        if u != ONE:
            tags = [i for i, _ in u.payload]
            assert all(p != q for p, q in zip(tags, tags[1:]))
            assert all(s != 0 for _, s in u.payload)


def test_free_product_associativity_sampled():
    rng = random.Random(1)
    F = monoid_free_product([cyclic_group(2), cyclic_group(3)])
    xs = F.first(300)
    for _ in range(2000):
        p, q, r = (rng.choice(xs) for _ in range(3))
        assert F.mul(F.mul(p, q), r) == F.mul(p, F.mul(q, r))


# Rees matrix semigroups


def test_rees_with_zero_entry_collapses_middle():
    S = null_semigroup(2)
    R = rees_matrix(S, 1, 1, [[0]])
    for s in (0, 1):
        for s2 in (0, 1):
            assert lab(R, rees(1, s, 1), rees(1, s2, 1)) == rees(1, 0, 1)


def test_rees_over_group(c2):
    R = rees_matrix(c2, 1, 1, [[0]])
    assert lab(R, rees(1, 1, 1), rees(1, 1, 1)) == rees(1, 0, 1)
    R2 = rees_matrix(c2, 2, 1, [[0, 1]])
    assert lab(R2, rees(2, 0, 1), rees(1, 1, 1)) == rees(2, 1, 1)


def test_rees_matrix_shape_errors(c2):
    with pytest.raises(ConstructionError):
        rees_matrix(c2, 2, 1, [[0]])
    with pytest.raises(ConstructionError):
        rees_matrix(c2, 1, 1, [[5]])


@settings(max_examples=40, deadline=None)
@given(semigroups(3), st.integers(1, 2), st.integers(1, 2), st.data())
def test_rees_products_follow_the_rule(S, ni, nj, data):
    P = [[data.draw(st.integers(0, S.order - 1)) for _ in range(ni)] for _ in range(nj)]
    R = rees_matrix(S, ni, nj, P)
    assert R.order == ni * nj * S.order
    assert validate_associativity(R.array).valid
    for p in R.elements():
        i, s, j = R.label(p).payload
        for q in R.elements():
            k, t, l = R.label(q).payload
            assert R.label(R.mul(p, q)).payload == (i, S.mul(S.mul(s, P[j - 1][k - 1]), t), l)


def test_rees_zero_rules(min2):
    S = adjoin_zero(cyclic_group(2), force=True)
    z = S.zero
    R = rees_matrix_zero(S, 2, 2, [[0, z], [z, 1]])
    assert R.zero is not None and R.label(R.zero) == REES_ZERO
    assert lab(R, rees(1, 0, 1), rees(2, 0, 1)) == REES_ZERO
    assert lab(R, REES_ZERO, rees(1, 1, 2)) == REES_ZERO
    assert lab(R, rees(1, 1, 2), rees(2, 1, 2)) == rees(1, S.mul(S.mul(1, 1), 1), 2)
    assert validate_associativity(R.array).valid
    with pytest.raises(ConstructionError):
        rees_matrix_zero(cyclic_group(2), 1, 1, [[0]])


def test_rees_zero_is_rees_followed_by_collapse():
    S = adjoin_zero(cyclic_group(2), force=True)
    z = S.zero
    P = [[0, z], [1, 0]]
    full, R0 = rees_matrix(S, 2, 2, P), rees_matrix_zero(S, 2, 2, P)
    collapse = lambda e: REES_ZERO if e.payload[1] == z else e
    for p in full.elements():
        for q in full.elements():
            x1, y1 = full.label(p), full.label(q)
            if x1.payload[1] == z or y1.payload[1] == z:
                continue
            assert lab(R0, x1, y1) == collapse(full.label(full.mul(p, q)))


def test_brandt_rules(c2):
    B = brandt_extension(c2, 2)
    assert B.order == 9
    assert lab(B, rees(1, 1, 2), rees(2, 1, 1)) == rees(1, 0, 1)
    assert lab(B, rees(1, 1, 2), rees(1, 1, 1)) == REES_ZERO


def brandt_vs_rees_zero(S, k):
    M = adjoin_identity(S)
    B = brandt_extension(M, k)
    M0 = adjoin_zero(M, force=True)
    one, z = M.identity, M0.zero
    P = [[one if i == j else z for i in range(k)] for j in range(k)]
    R = rees_matrix_zero(M0, k, k, P)
    assert B.order == R.order
    for p in B.elements():
        for q in B.elements():
            assert lab(R, B.label(p), B.label(q)) == B.label(B.mul(p, q))


@pytest.mark.parametrize("k", [1, 2])
def test_brandt_is_rees_zero_with_identity_matrix(k):
    for n in (1, 2):
        for S in all_tables(n):
            brandt_vs_rees_zero(S, k)
    rng = random.Random(5)
    from rnoeth.sampling import random_semigroup
    for _ in range(10):
        brandt_vs_rees_zero(random_semigroup(3, rng), k)


# Bruck-Reilly extensions


def test_bruck_reilly_identity_and_examples():
    M = chain_semilattice(3)
    theta = lambda s: 2 if s == 2 else 0
    N = bruck_reilly(M, theta)
    assert N.identity == br(0, 2, 0)
    for e in N.first(200):
        assert N.mul(N.identity, e) == e == N.mul(e, N.identity)
    for p, q in itertools.product(range(3), repeat=2):
        assert N.mul(br(1, p, 2), br(3, q, 1)) == br(2, M.mul(theta(p), q), 1)
        assert N.mul(br(0, p, 1), br(1, q, 0)) == br(0, M.mul(p, q), 0)


def test_bruck_reilly_matches_stepwise_oracle():
    rng = random.Random(2)
    M = chain_semilattice(3)
    theta = lambda s: 2 if s == 2 else 0
    N = bruck_reilly(M, theta)
    xs = N.first(400)
    for _ in range(3000):
        p, q, r = (rng.choice(xs) for _ in range(3))
        assert N.mul(p, q).payload == bruck_reilly_product(M.mul, theta, p.payload, q.payload)
        assert N.mul(N.mul(p, q), r) == N.mul(p, N.mul(q, r))


def test_bruck_reilly_validates_theta(c2):
    with pytest.raises(ConstructionError):
        bruck_reilly(c2, lambda s: 1)
    with pytest.raises(ConstructionError):
        bruck_reilly(left_zero(2), lambda s: s)


def test_bicyclic_monoid_over_trivial_group():
    N = bruck_reilly(trivial_semigroup(), lambda s: s)
    p, q = br(0, 0, 1), br(1, 0, 0)
    assert N.mul(p, q) == N.identity
    assert N.mul(q, p) == br(1, 0, 1)


def test_mutations_change_products():
    N = bruck_reilly(cyclic_group(2), lambda s: 0)
    clean = N.mul(br(1, 1, 0), br(0, 0, 0))
    with inject_mutation("br-sign"):
        assert N.mul(br(1, 1, 0), br(0, 0, 0)) == clean
        assert N.mul(br(0, 1, 1), br(0, 0, 0)) != br(0, 1, 1)
    assert N.mul(br(0, 1, 1), br(0, 0, 0)) == br(0, 1, 1)
    R = schutzenberger_reduced(witness("W1"))
    u = Element("pair", ((a(2),), a(3)))
    v = Element("pair", ((), x(1)))
    with inject_mutation("schutz-union"):
        assert R.mul(u, v) == Element("pair", ((), a(2)))
    assert R.mul(u, v) == Element("pair", ((a(1),), a(2)))
    with pytest.raises(ValueError):
        with inject_mutation("nope"):
            pass


# strong semilattices


def clifford(collapse=True):
    Y = chain_semilattice(2)
    G = cyclic_group(2)
    D = SemilatticeDecomposition(Y, {0: G, 1: G},
                                 lambda p, q: (lambda s: 0) if (collapse and p != q) else (lambda s: s))
    return D, strong_semilattice(D)


def test_clifford_instance():
    D, S = clifford()
    assert S.order == 4 and validate_associativity(S.array).valid
    part = lambda i: S.label(i).payload[0]
    assert semilattice_partition_check(S, D.Y, part).status == "valid"
    assert som_identity_chain_check(D, S).status == "holds"


def test_same_component_products_stay_inside(c2):
    D, S = clifford()
    for s, t in itertools.product(range(2), repeat=2):
        got = lab(S, Element("semilattice-component", (1, s)), Element("semilattice-component", (1, t)))
        assert got == Element("semilattice-component", (1, c2.mul(s, t)))


def test_transition_law_violations_are_reported():
    Y = chain_semilattice(3)
    G = cyclic_group(2)
    # 2 -> 1 -> 0 composes to the swap, but 2 -> 0 is declared the identity
    swap = lambda s: 1 - s
    trans = {(2, 1): swap, (1, 0): lambda s: s, (2, 0): lambda s: s}
    D = SemilatticeDecomposition(Y, {0: G, 1: G, 2: G},
                                 lambda p, q: trans.get((p, q), lambda s: s))
    v = D.validate()
    assert v.status == "violation" and v.witness[0] == "homomorphism"
    with pytest.raises(ConstructionError):
        strong_semilattice(D)


def test_w6_product():
    W6 = witness("W6")
    el = lambda i, m: Element("semilattice-component", (i, m))
    assert W6.mul(el(2, 5), el(3, 1)) == el(2, 5)
    for u in itertools.product(range(1, 9), repeat=2):
        for v in itertools.product(range(1, 9), repeat=2):
            assert W6.mul(el(*u), el(*v)).payload == w6_product(u, v)


def test_partition_checks():
    S = cyclic_group(2)
    assert semilattice_partition_check(S, trivial_semigroup(), lambda s: 0).status == "valid"
    v = semilattice_partition_check(S, chain_semilattice(2), {0: 1, 1: 0})
    assert v.status == "violation"
    with pytest.raises(ContractError):
        semilattice_partition_check(S, chain_semilattice(2), {0: 1})
    W7 = w7()
    Y, part = w7_partition()
    frag = [x(1), x(2), a(0), a(1), ("0", 0)]
    assert semilattice_partition_check(W7, Y, part, frag).status == "valid"
