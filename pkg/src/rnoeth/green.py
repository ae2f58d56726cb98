"""Green's R-preorder and the structure built on it.

``a <=_R b`` holds when ``a = b`` or ``a = b*s`` for some ``s``.  On a finite
semigroup the R-classes are the strongly connected components of the right
Cayley graph ``a -> a*s`` and the class order is reachability in its
condensation.  On symbolic semigroups only bounded search is available, and
every negative answer says how far it looked.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .core import (ContractError, FiniteSemigroup, Semigroup, SubsemigroupView,
                   Verdict, sort_key)

__all__ = [
    "r_leq", "r_leq_bounded", "RPoset", "r_poset", "principal_right_ideals",
    "check_against_ideals", "antichain_width", "antichain_width_dilworth",
    "local_right_identity", "exists_lri", "all_have_lri", "is_r_trivial",
    "is_r_preserving", "is_right_unitary", "is_regular", "complement_is_left_ideal",
    "ChainWitness", "find_ascending_chain", "right_multiples_within",
]


def _require_finite(S):
    if not S.is_finite:
        raise ContractError("exact routine called on a symbolic semigroup; use the bounded variant")


def r_leq(S: FiniteSemigroup, a, b) -> bool:
    """``a <=_R b`` on a finite semigroup."""
    _require_finite(S)
    return a == b or a in S.right_multiples(b)


def _check_budget(budget):
    if budget is None or budget <= 0:
        raise ValueError("budget must be a positive integer")


def r_leq_bounded(S: Semigroup, a, b, budget: int) -> Verdict:
    """Semi-decide ``a <=_R b``.

    ``equal`` when ``a == b``; ``yes`` with a multiplier ``s`` such that
    ``a == b*s``; otherwise ``no-witness-within-budget`` after trying the first
    ``budget`` enumerated multipliers.
    """
    _check_budget(budget)
    if a == b:
        return Verdict("equal")
    for s in S.elements_or_first(budget)[:budget]:
        if S.mul(b, s) == a:
            return Verdict("yes", s)
    return Verdict("no-witness-within-budget", budget=budget)


# ---------------------------------------------------------------------------
# R-classes of a finite semigroup


@dataclass
class RPoset:
    """R-classes of a finite semigroup with their order.

    ``classes[c]`` lists the members of class ``c`` in increasing order; class
    ids are sorted by smallest member.  ``order`` holds the strict relations as
    ``(lower, upper)`` pairs and ``hasse`` the covering pairs.
    """

    classes: tuple
    class_of: dict
    order: frozenset
    hasse: frozenset
    names: list | None = None

    def __len__(self):
        return len(self.classes)

    def less(self, c, d) -> bool:
        return (c, d) in self.order

    def leq(self, c, d) -> bool:
        return c == d or (c, d) in self.order

    def comparable(self, c, d) -> bool:
        return self.leq(c, d) or self.leq(d, c)

    @property
    def height(self) -> int:
        """Number of classes in a longest chain."""
        return max(self.chain_lengths().values(), default=0)

    def chain_lengths(self) -> dict:
        """Length of the longest chain with each class at its bottom."""
        above = {c: [] for c in range(len(self.classes))}
        for lo, hi in self.hasse:
            above[lo].append(hi)
        memo = {}
        # an upper class has fewer strict upper bounds, so visit those first
        ups = {c: 0 for c in above}
        for lo, _ in self.order:
            ups[lo] += 1
        for c in sorted(above, key=ups.get):
            memo[c] = 1 + max((memo[d] for d in above[c]), default=0)
        return memo

    def label(self, c) -> str:
        members = self.classes[c]
        if self.names is not None:
            members = [self.names[m] for m in members]
        return "[" + ", ".join(str(m) for m in members) + "]"

    def describe(self) -> str:
        n = len(self.classes)
        head = f"{n} class{'es' if n != 1 else ''}"
        if not self.hasse:
            return head
        edges = "; ".join(f"{self.label(lo)} < {self.label(hi)}" for lo, hi in sorted(self.hasse))
        return f"{head}; {edges}"

    def to_dot(self, name="rposet") -> str:
        out = [f"digraph {name} {{", "  rankdir=BT;"]
        for c in range(len(self.classes)):
            lab = self.label(c).replace('"', '\\"')
            out.append(f'  c{c} [label="{lab}"];')
        for lo, hi in sorted(self.hasse):
            out.append(f"  c{lo} -> c{hi};")
        out.append("}")
        return "\n".join(out) + "\n"


def right_cayley_graph(S: FiniteSemigroup) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(range(S.order))
    G.add_edges_from((a, c) for a in range(S.order) for c in S.table[a] if c != a)
    return G


def r_poset(S: FiniteSemigroup) -> RPoset:
    """R-classes as strongly connected components of the right Cayley graph."""
    _require_finite(S)
    G = right_cayley_graph(S)
    comps = sorted((tuple(sorted(c)) for c in nx.strongly_connected_components(G)),
                   key=lambda c: c[0])
    class_of = {a: i for i, c in enumerate(comps) for a in c}
    C = nx.DiGraph()
    C.add_nodes_from(range(len(comps)))
    C.add_edges_from({(class_of[a], class_of[b]) for a, b in G.edges if class_of[a] != class_of[b]})
    # an edge a -> a*s means a*s <= a, so reachability runs downwards
    order = frozenset((lo, hi) for hi in C for lo in nx.descendants(C, hi))
    hasse = frozenset((lo, hi) for hi, lo in nx.transitive_reduction(C).edges)
    return RPoset(tuple(comps), class_of, order, hasse, S.names)


def principal_right_ideals(S: FiniteSemigroup) -> dict:
    """``a -> aS^1`` built directly as sets (independent of the graph route)."""
    _require_finite(S)
    return {a: frozenset(S.table[a]) | {a} for a in range(S.order)}


def check_against_ideals(S: FiniteSemigroup, P: RPoset | None = None) -> Verdict:
    """Confirm that class ``c`` -> ``aS^1`` is an order isomorphism onto the
    containment order of principal right ideals.  ``violation`` carries the
    offending pair of elements."""
    P = P or r_poset(S)
    ideals = principal_right_ideals(S)
    n = S.order
    for a in range(n):
        for b in range(n):
            ca, cb = P.class_of[a], P.class_of[b]
            same = ideals[a] == ideals[b]
            if same != (ca == cb):
                return Verdict("violation", (a, b))
            if (ideals[a] < ideals[b]) != P.less(ca, cb):
                return Verdict("violation", (a, b))
    return Verdict("valid")


def is_r_trivial(S: FiniteSemigroup) -> bool:
    return all(len(c) == 1 for c in r_poset(S).classes)


# ---------------------------------------------------------------------------
# antichains


def _comparability(P: RPoset):
    n = len(P.classes)
    comp = [[False] * n for _ in range(n)]
    for lo, hi in P.order:
        comp[lo][hi] = comp[hi][lo] = True
    return comp


def antichain_width(P: RPoset) -> int:
    """Size of a largest antichain of R-classes.

    Exhaustive branch-and-bound over subsets when there are at most 20
    classes; Dilworth's theorem (minimum chain cover via bipartite matching)
    beyond that.
    """
    n = len(P.classes)
    if n > 20:
        return antichain_width_dilworth(P)
    comp = _comparability(P)
    best = 0

    def grow(chosen, rest):
        nonlocal best
        if len(chosen) + len(rest) <= best:
            return
        if not rest:
            best = len(chosen)
            return
        c, tail = rest[0], rest[1:]
        grow(chosen + [c], [d for d in tail if not comp[c][d]])
        grow(chosen, tail)

    grow([], list(range(n)))
    return best


def antichain_width_dilworth(P: RPoset) -> int:
    n = len(P.classes)
    if n == 0:
        return 0
    B = nx.Graph()
    left = [("L", c) for c in range(n)]
    B.add_nodes_from(left)
    B.add_nodes_from(("R", c) for c in range(n))
    B.add_edges_from((("L", lo), ("R", hi)) for lo, hi in P.order)
    matching = nx.bipartite.hopcroft_karp_matching(B, top_nodes=left)
    return n - len(matching) // 2


# ---------------------------------------------------------------------------
# local right identities and subsemigroup predicates


def _candidates(S, budget, within=None):
    if within is not None:
        return list(within.elements_or_first(budget))
    return list(S.elements_or_first(budget))


def _exact(S, within=None):
    return S.is_finite and (within is None or within.is_finite)


def local_right_identity(S: Semigroup, a, budget: int | None = None, *,
                         within: SubsemigroupView | None = None,
                         exclude_identity: bool = False) -> Verdict:
    """Look for ``b`` with ``a*b == a``.

    ``found`` with ``b``; ``none`` after an exhaustive finite search;
    ``none-within-budget`` otherwise.  ``within`` restricts candidates to a
    subsemigroup.  ``exclude_identity`` drops the declared identity from the
    candidates, which is how the free semigroup is tested inside the free
    monoid.
    """
    for b in _candidates(S, budget, within):
        if exclude_identity and b == S.identity:
            continue
        if S.mul(a, b) == a:
            return Verdict("found", b)
    if _exact(S, within):
        return Verdict("none")
    return Verdict("none-within-budget", budget=budget)


def exists_lri(S: Semigroup, budget: int | None = None, *,
               within: SubsemigroupView | None = None, exclude_identity=False) -> Verdict:
    """``yes`` with ``(a, b)`` where ``a*b == a``, else ``no`` (exact) or
    ``no-witness-within-budget``."""
    xs = _candidates(S, budget, within)
    for a in xs:
        if exclude_identity and a == S.identity:
            continue
        v = local_right_identity(S, a, budget, within=within, exclude_identity=exclude_identity)
        if v.status == "found":
            return Verdict("yes", (a, v.witness))
    if _exact(S, within):
        return Verdict("no")
    return Verdict("no-witness-within-budget", budget=budget)


def all_have_lri(S: Semigroup, budget: int | None = None, *,
                 within: SubsemigroupView | None = None) -> Verdict:
    """``yes`` when every element (of ``within`` if given) has a local right
    identity in the same set; ``no`` with the first element lacking one.
    Symbolic inputs give ``yes-up-to-budget`` or
    ``no-witness-within-budget`` naming the element that was not settled."""
    for a in _candidates(S, budget, within):
        v = local_right_identity(S, a, budget, within=within)
        if v.status != "found":
            if _exact(S, within):
                return Verdict("no", a)
            return Verdict("no-witness-within-budget", a, budget=budget)
    if _exact(S, within):
        return Verdict("yes")
    return Verdict("yes-up-to-budget", budget=budget)


def _view(S, T):
    if isinstance(T, SubsemigroupView):
        return T
    return SubsemigroupView(S, members=frozenset(T))


def is_r_preserving(S: Semigroup, T, budget: int | None = None) -> Verdict:
    """Does the R-preorder of ``T`` agree with that of ``S`` on ``T``?

    ``no`` carries ``(a, b, s)``: ``a == b*s`` with ``s`` in ``S`` while no
    ``t`` in ``T^1`` gives ``a == b*t``.  Pairs are visited with ``a`` in the
    outer loop, both in ``T``'s enumeration order.
    """
    T = _view(S, T)
    T.check_closed(budget)
    ts = list(T.elements_or_first(budget))
    ss = _candidates(S, budget)
    exact = _exact(S, T)
    for a in ts:
        for b in ts:
            if a == b:
                continue
            s = next((s for s in ss if S.mul(b, s) == a), None)
            if s is None:
                continue
            if not any(S.mul(b, t) == a for t in ts):
                if exact:
                    return Verdict("no", (a, b, s))
                return Verdict("no", (a, b, s), budget=budget)
    return Verdict("yes") if exact else Verdict("yes-up-to-budget", budget=budget)


def is_right_unitary(S: Semigroup, T, budget: int | None = None) -> Verdict:
    """``a`` in ``T`` and ``a*b`` in ``T`` force ``b`` in ``T``.

    ``no`` carries ``(a, b)``.
    """
    T = _view(S, T)
    T.check_closed(budget)
    ts = list(T.elements_or_first(budget))
    ss = _candidates(S, budget)
    for a in ts:
        for b in ss:
            if b not in T and S.mul(a, b) in T:
                return Verdict("no", (a, b))
    return Verdict("yes") if _exact(S, T) else Verdict("yes-up-to-budget", budget=budget)


def is_regular(S: FiniteSemigroup, T) -> bool:
    """Every ``a`` in ``T`` has ``b`` in ``T`` with ``a*b*a == a``."""
    ts = list(_view(S, T).elements())
    return all(any(S.mul(S.mul(a, b), a) == a for b in ts) for a in ts)


def complement_is_left_ideal(S: FiniteSemigroup, T) -> bool:
    """``S * (S \\ T)`` stays inside ``S \\ T``."""
    members = _view(S, T).members
    rest = [x for x in range(S.order) if x not in members]
    return all(S.mul(s, x) not in members for s in range(S.order) for x in rest)


# ---------------------------------------------------------------------------
# ascending chains


@dataclass
class ChainWitness:
    """A strictly ascending chain ``a_1 < a_2 < ... < a_k``.

    ``multipliers[i]`` satisfies ``elements[i] == elements[i+1] * multipliers[i]``.
    ``strictness[i]`` records how ``elements[i+1]`` was shown to lie outside
    ``elements[i] S^1``: ``("proved-by-exhaustion", None)`` or
    ``("no-witness-within-budget", B)``.
    """

    elements: list
    multipliers: list
    strictness: list
    extra: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def replay(self, S: Semigroup) -> bool:
        return all(S.mul(self.elements[i + 1], s) == self.elements[i]
                   for i, s in enumerate(self.multipliers))

    def describe(self, fmt=str) -> str:
        lines = [f"chain of length {len(self.elements)}"]
        for i, a in enumerate(self.elements):
            lines.append(f"  a{i + 1} = {fmt(a)}")
        for i, (s, (kind, budget)) in enumerate(zip(self.multipliers, self.strictness)):
            ev = kind if budget is None else f"{kind}({budget})"
            lines.append(f"  a{i + 1} = a{i + 2} * {fmt(s)}  [strict: {ev}]")
        return "\n".join(lines)


def right_multiples_within(S, a, mults) -> set:
    """``{a*s : s in mults}``."""
    return {S.mul(a, s) for s in mults}


def _finite_chain(S: FiniteSemigroup, length, start=None):
    P = r_poset(S)
    above = {c: sorted(hi for lo, hi in P.hasse if lo == c) for c in range(len(P))}
    best = {}

    def longest(c):
        if c not in best:
            tails = [longest(d) for d in above[c]]
            best[c] = [c] + max(tails, key=len, default=[])
        return best[c]

    bottoms = [P.class_of[start]] if start is not None else range(len(P))
    path = max((longest(c) for c in bottoms), key=len, default=[])
    if len(path) < length:
        return None, P.height
    path = path[:length]
    elems = [P.classes[c][0] for c in path]
    if start is not None:
        elems[0] = start
    mults = []
    for lo, hi in zip(elems, elems[1:]):
        mults.append(next(s for s in range(S.order) if S.mul(hi, s) == lo))
    return ChainWitness(elems, mults, [("proved-by-exhaustion", None)] * (length - 1)), P.height


def find_ascending_chain(S: Semigroup, length: int, budget: int = 200, *, start=None,
                         pool=None, max_nodes: int = 20000):
    """Search for a strictly ascending R-chain with ``length`` elements.

    Finite semigroups: exact, using the class poset (returns ``None`` when the
    poset height is smaller than ``length``).  Symbolic semigroups: depth-first
    search from ``start`` (or the semigroup's declared chain hint, or the first
    ``budget`` elements).  Each step ``a < c`` needs a multiplier ``s`` among
    the first ``budget`` elements with ``c*s == a``, and ``c`` must not equal
    ``a*s`` for any of those ``budget`` multipliers; the latter is recorded as
    budget-qualified strictness.  Successor candidates are the semigroup's
    ``neighbours`` followed by ``pool``.
    """
    if length < 2:
        raise ValueError("length must be at least 2")
    if S.is_finite:
        return _finite_chain(S, length, start)[0]
    _check_budget(budget)
    mults = S.first(budget)
    pool = list(pool) if pool is not None else mults
    rm_cache = {}

    def rm(a):
        got = rm_cache.get(a)
        if got is None:
            got = rm_cache[a] = right_multiples_within(S, a, mults)
        return got

    failed = set()
    nodes = 0

    def step(a, c):
        for s in mults:
            if S.mul(c, s) == a:
                return s
        return None

    def extend(chain, ms):
        nonlocal nodes
        if len(chain) == length:
            return chain, ms
        a = chain[-1]
        seen = set()
        for c in itertools.chain(S.neighbours(a), pool):
            if c in seen or c in chain or (c, length - len(chain)) in failed:
                continue
            seen.add(c)
            nodes += 1
            if nodes > max_nodes:
                return None
            if c == a or c in rm(a):
                continue
            s = step(a, c)
            if s is None:
                continue
            got = extend(chain + [c], ms + [s])
            if got:
                return got
            failed.add((c, length - len(chain)))
        return None

    starts = [start] if start is not None else (
        [S.info["chain_start"]] if "chain_start" in S.info else pool)
    for a in starts:
        got = extend([a], [])
        if got:
            chain, ms = got
            return ChainWitness(chain, ms, [("no-witness-within-budget", budget)] * len(ms))
        if nodes > max_nodes:
            break
    return None
