"""Small finite semigroups: exhaustive enumeration and seeded random sampling."""
from __future__ import annotations

import itertools
import random

import numpy as np

from .constructions import EndoAction
from .core import FiniteSemigroup

__all__ = ["all_operations", "all_tables", "all_monoids", "random_semigroup", "random_monoid",
           "endomorphisms", "random_action", "random_matrix"]


def all_operations(n: int) -> np.ndarray:
    """Every binary operation on ``n`` points, shape ``(n**(n*n), n, n)``."""
    cells = n * n
    codes = np.arange(n ** cells, dtype=np.int64)
    digits = (codes[:, None] // n ** np.arange(cells - 1, -1, -1)) % n
    return digits.reshape(-1, n, n)


def associative_mask(tabs: np.ndarray) -> np.ndarray:
    N, n, _ = tabs.shape
    b = np.arange(N)[:, None, None, None]
    i = np.arange(n)[None, :, None, None]
    j = np.arange(n)[None, None, :, None]
    k = np.arange(n)[None, None, None, :]
    lhs = tabs[b, tabs[b, i, j], k]
    rhs = tabs[b, i, tabs[b, j, k]]
    return (lhs == rhs).reshape(N, -1).all(axis=1)


def all_tables(n: int) -> list:
    """All associative tables on ``0..n-1`` (labelled, not up to isomorphism)."""
    tabs = all_operations(n)
    keep = tabs[associative_mask(tabs)]
    return [FiniteSemigroup(t, validate=False, name=f"S{n}.{k}") for k, t in enumerate(keep)]


def all_monoids(n: int) -> list:
    return [S for S in all_tables(n) if S.identity is not None]


def random_semigroup(n: int, rng: random.Random, max_nodes: int = 5000) -> FiniteSemigroup:
    """A random associative table of order ``n``.

    Cells are filled in row-major order, trying values in a random order and
    backtracking as soon as some fully defined triple breaks associativity.
    The search restarts after ``max_nodes`` assignments.
    """
    cells = [(i, j) for i in range(n) for j in range(n)]
    while True:
        t = [[None] * n for _ in range(n)]
        nodes = 0

        def consistent():
            for x in range(n):
                for y in range(n):
                    xy = t[x][y]
                    if xy is None:
                        continue
                    for z in range(n):
                        yz = t[y][z]
                        if yz is None:
                            continue
                        l, r = t[xy][z], t[x][yz]
                        if l is not None and r is not None and l != r:
                            return False
            return True

        def fill(k):
            nonlocal nodes
            if k == len(cells):
                return True
            i, j = cells[k]
            values = list(range(n))
            rng.shuffle(values)
            for v in values:
                nodes += 1
                if nodes > max_nodes:
                    return False
                t[i][j] = v
                if consistent() and fill(k + 1):
                    return True
            t[i][j] = None
            return False

        if fill(0):
            return FiniteSemigroup(t, name=f"random-{n}")


def random_monoid(n: int, rng: random.Random) -> FiniteSemigroup:
    """A random monoid of order ``n``: a random semigroup of order ``n - 1``
    with an identity adjoined (always fresh), or the trivial monoid."""
    from .core import adjoin_identity, trivial_semigroup
    if n == 1:
        return trivial_semigroup()
    return adjoin_identity(random_semigroup(n - 1, rng), force=True)


def endomorphisms(S: FiniteSemigroup) -> list:
    """All endomorphisms of ``S`` as tuples ``f`` with ``f[s]`` the image of ``s``."""
    n, t = S.order, S.table
    out = []
    f = [None] * n

    def ok(k):
        for a in range(k + 1):
            for b in range(k + 1):
                ab = t[a][b]
                if f[ab] is not None and f[ab] != t[f[a]][f[b]]:
                    return False
        return True

    def grow(k):
        if k == n:
            out.append(tuple(f))
            return
        for v in range(n):
            f[k] = v
            if ok(k):
                grow(k + 1)
        f[k] = None

    grow(0)
    return out


def random_action(S: FiniteSemigroup, T: FiniteSemigroup, rng: random.Random,
                  max_nodes: int = 20000) -> EndoAction:
    """A random action of ``T`` on ``S`` by endomorphisms with
    ``phi_{tt'} = phi_t o phi_{t'}``.

    Backtracks over assignments ``t -> phi_t`` drawn from ``End(S)`` in random
    order; if that runs out of steps, falls back to the constant action at a
    random idempotent endomorphism.
    """
    ends = endomorphisms(S)
    compose = lambda f, g: tuple(f[g[s]] for s in range(S.order))
    m = T.order
    phi = [None] * m
    nodes = 0

    def ok():
        for t in range(m):
            for u in range(m):
                tu = T.table[t][u]
                if None in (phi[t], phi[u], phi[tu]):
                    continue
                if phi[tu] != compose(phi[t], phi[u]):
                    return False
        return True

    def grow(k):
        nonlocal nodes
        if k == m:
            return True
        order = list(ends)
        rng.shuffle(order)
        for f in order:
            nodes += 1
            if nodes > max_nodes:
                return False
            phi[k] = f
            if ok() and grow(k + 1):
                return True
        phi[k] = None
        return False

    if not grow(0):
        idem = [f for f in ends if compose(f, f) == f]
        phi = [rng.choice(idem)] * m
    return EndoAction.from_table(S, T, [list(f) for f in phi])


def random_matrix(S: FiniteSemigroup, rows: int, cols: int, rng: random.Random) -> list:
    return [[rng.randrange(S.order) for _ in range(cols)] for _ in range(rows)]
