"""Independent brute-force reference implementations used by the tests.

Nothing here imports the library's algorithms; everything works on raw
tables (lists of lists) or plain Python products.
"""
import itertools


def first_nonassociative(t):
    n = len(t)
    for i, j, k in itertools.product(range(n), repeat=3):
        if t[t[i][j]][k] != t[i][t[j][k]]:
            return (i, j, k)
    return None


def right_ideal(t, a):
    """``a S^1`` as a set."""
    return {a} | set(t[a])


def r_leq(t, a, b):
    return a in right_ideal(t, b)


def r_classes(t):
    """Partition by equal principal right ideals, as a set of frozensets."""
    groups = {}
    for a in range(len(t)):
        groups.setdefault(frozenset(right_ideal(t, a)), set()).add(a)
    return {frozenset(g) for g in groups.values()}


def ideal_height(t):
    """Longest strict containment chain among the distinct sets ``a S^1``."""
    ideals = sorted({frozenset(right_ideal(t, a)) for a in range(len(t))}, key=len)
    best = {}
    for I in ideals:
        best[I] = 1 + max((best[J] for J in best if J < I), default=0)
    return max(best.values())


def max_antichain(t):
    ideals = list({frozenset(right_ideal(t, a)) for a in range(len(t))})
    for r in range(len(ideals), 0, -1):
        for sub in itertools.combinations(ideals, r):
            if all(not (p <= q or q <= p) for p, q in itertools.combinations(sub, 2)):
                return r
    return 0


def closed_subsets(t):
    n = len(t)
    out = []
    for r in range(1, n + 1):
        for sub in itertools.combinations(range(n), r):
            s = set(sub)
            if all(t[a][b] in s for a in s for b in s):
                out.append(frozenset(s))
    return out


def right_unitary(t, T):
    return all(not (t[a][b] in T and b not in T) for a in T for b in range(len(t)))


def r_preserving(t, T):
    for a in T:
        for b in T:
            in_s = a == b or a in t[b]
            in_t = a == b or any(t[b][u] == a for u in T)
            if in_s != in_t:
                return False
    return True


def is_identity(t, e):
    return all(t[e][x] == x == t[x][e] for x in range(len(t)))


def schutz_product(mul_s, mul_t, x, y):
    """Second implementation of the Schutzenberger rule, with plain sets."""
    s1, P1, t1 = x
    s2, P2, t2 = y
    P = set()
    for p, q in P2:
        P.add((mul_s(s1, p), q))
    for p, q in P1:
        P.add((p, mul_t(q, t2)))
    return (mul_s(s1, s2), frozenset(P), mul_t(t1, t2))


def bruck_reilly_product(mul, theta, x, y):
    """The Bruck-Reilly rule with theta powers applied one step at a time."""
    i, a, j = x
    p, b, q = y
    t = max(j, p)
    for _ in range(t - j):
        a = theta(a)
    for _ in range(t - p):
        b = theta(b)
    return (i - j + t, mul(a, b), q - p + t)


def w6_product(u, v):
    """(i,m)(j,n) in the strong semilattice of (N, max) over (N, min), with
    transitions written out as shifts."""
    (i, m), (j, n) = u, v
    k = i if i < j else j
    m2 = m + (i - k)
    n2 = n + (j - k)
    return (k, m2 if m2 > n2 else n2)
