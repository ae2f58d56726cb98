"""Registry of the worked example semigroups.

Base terms are small tuples: ``("x", n)`` for a power of ``x`` (``x^0`` is the
identity where one exists), ``("a", i)`` for ``a_i`` with ``i`` an integer and
``("0", 0)`` for the zero of the null part of W7.  Integer families are listed
within a size level in the order ``0, 1, -1, 2, -2, ...``.

===== =========================== ==================================================
name  aliases                     semigroup
===== =========================== ==================================================
W1    ex-sdp                      ``{x^n} u {a_i}`` with ``a_i x^n = a_{i-n}``, ``x^n a_j = a_i a_j = a_j``
W2                                W1 with a zero adjoined, plus the action ``phi_e``
W3    schutz-counterexample       ``{1} <> W1`` as pairs ``(P, t)``
W4    free                        free monoid on ``{x}`` (words as strings)
W5    bruck-reilly                ``BR(M, theta)``, default ``M = C2``, ``theta`` constant at 1
W6    nn-semilattice              strong semilattice of ``(N, max)`` over ``(N, min)``
W7    null-chain                  ``{x}^+ u N`` with ``N`` null and ``x^i a_j = a_j x^i = a_{j-i}``
===== =========================== ==================================================
"""
from __future__ import annotations

import itertools

from .constructions import (EndoAction, SemilatticeDecomposition, bruck_reilly,
                            schutzenberger_reduced, strong_semilattice)
from .core import (DomainError, Element, FiniteSemigroup, SubsemigroupView, SymbolicSemigroup,
                   ZERO, adjoin_zero, chain_semilattice, cyclic_group, sort_key)

__all__ = ["witness", "WITNESS_NAMES", "ALIASES", "x", "a", "Z7", "w1", "w2", "w3", "w4",
           "w5", "w6", "w7", "free_monoid", "free_semigroup", "w1_ideal", "w7_null_part",
           "w7_partition", "shift", "integers_by_size", "w6_closed_form"]


def x(n):
    return ("x", n)


def a(i):
    return ("a", i)


Z7 = ("0", 0)


def integers_by_size(n):
    return [0] if n == 0 else [n, -n]


def _fmt(t):
    kind, k = t
    if kind == "x":
        return "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
    if kind == "a":
        return f"a_{k}"
    return "0"


def shift(t, by=1):
    """The automorphism ``a_i -> a_{i+by}`` fixing powers of ``x`` and 0."""
    return ("a", t[1] + by) if t[0] == "a" else t


def _size(t):
    return abs(t[1])


# ---------------------------------------------------------------------------


def _w1_mul(u, v):
    if v[0] == "a":
        return v
    if u[0] == "x":
        return ("x", u[1] + v[1])
    return ("a", u[1] - v[1])


def w1() -> SymbolicSemigroup:
    """The monoid ``{x^n : n >= 0} u {a_i : i in Z}``."""
    def level(n):
        return [x(n)] + [a(i) for i in integers_by_size(n)]

    def contains(t):
        return isinstance(t, tuple) and len(t) == 2 and isinstance(t[1], int) and \
            ((t[0] == "x" and t[1] >= 0) or t[0] == "a")

    def neighbours(t):
        return [shift(t)] if t[0] == "a" else []

    return SymbolicSemigroup(
        _w1_mul, level, _size, name="W1", identity=x(0), contains=contains, fmt=_fmt,
        neighbours=neighbours,
        facts={"r-noetherian": "I = {a_i} is a right zero ideal whose elements have local right "
                               "identities in I, and both I and S/I are R-noetherian"},
        info={"witness": "W1"})


def w1_ideal(S=None) -> SubsemigroupView:
    """The right zero ideal ``{a_i}`` of W1."""
    S = S or w1()

    def members():
        for n in itertools.count():
            for i in integers_by_size(n):
                yield a(i)

    return SubsemigroupView(S, predicate=lambda t: t[0] == "a", enumerator=members)


def _phi_e(t, s):
    if s == ZERO or s[0] == "a":
        return ZERO
    return s


def w2() -> SymbolicSemigroup:
    """W1 with a zero adjoined.  ``info["action"]`` holds ``phi_e`` for the
    trivial index monoid ``{e}``: it fixes powers of ``x`` and sends every
    ``a_i`` and 0 to 0."""
    S0 = adjoin_zero(w1())
    S0.name = "W2"
    T = FiniteSemigroup([[0]], ["e"], name="{e}")
    S0.info.update({"witness": "W2", "index": T, "action": EndoAction(S0, T, _phi_e, "phi_e"),
                    "phi_chain_start": (a(1), 0)})
    S0.facts = dict(w1().facts)
    return S0


def _w3_neighbours(u):
    P, t = u.payload
    v = Element("pair", (tuple(sorted((shift(p) for p in P), key=sort_key)), shift(t)))
    return [v] if v != u else []


def w3() -> SymbolicSemigroup:
    """``{1} <> W1`` built through the generic Schutzenberger product."""
    S = schutzenberger_reduced(w1(), neighbours=_w3_neighbours, name="W3")
    S.info.update({"witness": "W3", "chain_start": Element("pair", ((a(1),), a(2)))})
    return S


def free_monoid(alphabet="x") -> SymbolicSemigroup:
    """Words over ``alphabet`` as strings; the empty word is the identity."""
    letters = sorted(alphabet)

    def level(n):
        return ["".join(w) for w in itertools.product(letters, repeat=n)]

    return SymbolicSemigroup(
        lambda u, v: u + v, level, len, name=f"{{{','.join(letters)}}}*", identity="",
        contains=lambda w: isinstance(w, str) and set(w) <= set(letters),
        fmt=lambda w: w or "1",
        facts={"r-noetherian": "right multiplication never shortens a word, and a word has "
                               "finitely many prefixes"},
        info={"witness": "W4", "alphabet": letters})


def free_semigroup(alphabet="x") -> SymbolicSemigroup:
    """Non-empty words over ``alphabet``."""
    M = free_monoid(alphabet)
    return SymbolicSemigroup(
        M.mul, lambda n: [] if n == 0 else M.level(n), len, name=f"{{{','.join(M.info['alphabet'])}}}+",
        contains=lambda w: M.contains(w) and w != "", fmt=M.fmt,
        facts={"r-noetherian": M.facts["r-noetherian"],
               "no-lri": "left cancellative and idempotent-free, so a*b == a is impossible"},
        info={"alphabet": M.info["alphabet"]})


def w4(alphabet="x"):
    return free_monoid(alphabet)


def w5(M=None, theta=None):
    M = M or cyclic_group(2)
    if M.identity is None:
        raise DomainError("W5 needs a finite monoid")
    if theta is None:
        one = M.identity
        theta = lambda s: one
    S = bruck_reilly(M, theta)
    S.name = "W5"
    S.info["witness"] = "W5"
    return S


# ---------------------------------------------------------------------------


def _naturals(product, name):
    return SymbolicSemigroup(product, lambda n: [n] if n >= 1 else [], lambda n: n, name=name,
                             contains=lambda n: isinstance(n, int) and n >= 1)


def w6_closed_form(u, v):
    """``(i,m)(j,n) = (min(i,j), max(m+i-min, n+j-min))`` on plain pairs."""
    (i, m), (j, n) = u, v
    k = min(i, j)
    return (k, max(m + i - k, n + j - k))


def w6(check_on=range(1, 8)) -> SymbolicSemigroup:
    """Strong semilattice over ``Y = (N, min)`` with ``S_i = {i} x N`` under max
    and ``phi_{i,j}(i, n) = (j, n + i - j)``.  Elements are
    ``semilattice-component`` terms with payload ``(i, n)``."""
    Y = _naturals(min, "(N,min)")
    comp = _naturals(max, "(N,max)")
    D = SemilatticeDecomposition(Y, lambda i: comp,
                                 lambda i, j: (lambda n: n + i - j), name="W6")
    S = strong_semilattice(D, check_on=list(check_on), budget=10, name="W6",
                           fmt=lambda e: f"({e.payload[0]},{e.payload[1]})")
    S.facts = {"r-noetherian": "along an ascending chain i never decreases, n never increases, "
                               "and n strictly drops whenever i rises"}
    S.info["witness"] = "W6"
    return S


# ---------------------------------------------------------------------------


def _w7_mul(u, v):
    if u[0] == "x" and v[0] == "x":
        return ("x", u[1] + v[1])
    if u[0] == "x":
        return ("a", v[1] - u[1]) if v[0] == "a" else Z7
    if v[0] == "x":
        return ("a", u[1] - v[1]) if u[0] == "a" else Z7
    return Z7


def w7() -> SymbolicSemigroup:
    """``{x}^+`` together with the null semigroup ``N = {a_j : j in Z} u {0}``."""
    def level(n):
        if n == 0:
            return [Z7, a(0)]
        return [x(n)] + [a(i) for i in integers_by_size(n)]

    def contains(t):
        return t == Z7 or (isinstance(t, tuple) and len(t) == 2 and isinstance(t[1], int)
                           and ((t[0] == "x" and t[1] >= 1) or t[0] == "a"))

    def neighbours(t):
        return [shift(t)] if t[0] == "a" else []

    return SymbolicSemigroup(_w7_mul, level, _size, name="W7", zero=Z7, contains=contains,
                             fmt=_fmt, neighbours=neighbours,
                             info={"witness": "W7", "chain_start": a(0)})


def w7_null_part(S=None) -> SubsemigroupView:
    S = S or w7()

    def members():
        yield Z7
        for n in itertools.count():
            for i in integers_by_size(n):
                yield a(i)

    return SubsemigroupView(S, predicate=lambda t: t[0] != "x", enumerator=members)


def w7_partition():
    """``Y = {1 > 0}`` with ``x^i`` in component 1 and ``N`` in component 0."""
    return chain_semilattice(2), (lambda t: 1 if t[0] == "x" else 0)


# ---------------------------------------------------------------------------

_BUILDERS = {"W1": w1, "W2": w2, "W3": w3, "W4": w4, "W5": w5, "W6": w6, "W7": w7}
ALIASES = {"ex-sdp": "W1", "schutz-counterexample": "W3", "free": "W4",
           "bruck-reilly": "W5", "nn-semilattice": "W6", "null-chain": "W7"}
WITNESS_NAMES = tuple(_BUILDERS)
_cache: dict = {}


def canonical_name(name: str) -> str:
    key = ALIASES.get(name, name)
    if key.upper() in _BUILDERS:
        return key.upper()
    raise DomainError(f"unknown witness {name!r}; known: "
                      f"{', '.join(WITNESS_NAMES)}, {', '.join(sorted(ALIASES))}")


def witness(name: str, **params):
    """The registered semigroup for ``name`` (W1..W7 or an alias).

    Without parameters the same instance is returned each time, so its
    enumeration cache is shared.  Parameters (for W4 and W5) build a fresh one.
    """
    key = canonical_name(name)
    if params:
        return _BUILDERS[key](**params)
    if key not in _cache:
        _cache[key] = _BUILDERS[key]()
    return _cache[key]
