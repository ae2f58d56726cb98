"""Semigroup constructions with their multiplication rules and input checks.

Every construction returns a :class:`FiniteSemigroup` when all of its inputs
are finite (and the result is small enough to tabulate), and a
:class:`SymbolicSemigroup` otherwise.  Elements are :class:`Element` terms;
finite results keep them as ``labels``.
"""
from __future__ import annotations

import contextlib
import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .core import (ONE, ConstructionError, ContractError, Element, FiniteSemigroup, Semigroup,
                   SymbolicSemigroup, Verdict, _as_map, sort_key, term_key, trivial_semigroup)

__all__ = [
    "EndoAction", "semidirect_product", "schutzenberger_product", "schutzenberger_reduced",
    "free_product", "monoid_free_product", "is_minimal_length", "SandwichMatrix",
    "rees_matrix", "rees_matrix_zero", "brandt_extension", "bruck_reilly",
    "SemilatticeDecomposition", "strong_semilattice", "semilattice_partition_check",
    "inject_mutation", "MUTATIONS", "REES_ZERO", "pair", "levels_upto",
    "SCHUTZ_MATERIALIZE_LIMIT",
]

# Deliberate defects used to show the acceptance suite is not vacuous.
MUTATIONS = ("br-sign", "schutz-union")
_active: set = set()


@contextlib.contextmanager
def inject_mutation(name: str):
    """Temporarily switch on a known defect (``br-sign`` or ``schutz-union``)."""
    if name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; choose from {', '.join(MUTATIONS)}")
    _active.add(name)
    try:
        yield
    finally:
        _active.discard(name)


def _mutated(name):
    return name in _active


REES_ZERO = Element("rees", ())
SCHUTZ_MATERIALIZE_LIMIT = 512


def pair(a, b) -> Element:
    return Element("pair", (a, b))


def levels_upto(S: Semigroup, n: int) -> list:
    """All elements of size at most ``n``, in enumeration order."""
    top = S.max_level
    out = []
    for k in range(n + 1):
        if top is not None and k > top:
            break
        out.extend(S.level(k))
    return out


def _max_level(*sgs):
    tops = [S.max_level for S in sgs]
    return None if any(t is None for t in tops) else max(tops)


def _all_finite(*sgs):
    return all(S.is_finite for S in sgs)


def _sorted_terms(xs):
    return sorted(xs, key=term_key)


# ---------------------------------------------------------------------------
# semidirect products


class EndoAction:
    """A left action ``t -> phi_t`` of ``T`` on ``S`` by endomorphisms.

    ``apply(t, s)`` returns ``phi_t(s)``.  Composition follows
    ``phi_{t t'} = phi_t o phi_{t'}`` (the right factor acts first).
    """

    def __init__(self, domain: Semigroup, index: Semigroup, apply: Callable, name: str = ""):
        self.domain = domain
        self.index = index
        self.apply = apply
        self.name = name

    def __call__(self, t, s):
        return self.apply(t, s)

    @classmethod
    def identity(cls, S, T):
        return cls(S, T, lambda t, s: s, "identity")

    @classmethod
    def constant(cls, S, T, c):
        """Every ``phi_t`` is the constant map at ``c`` (an endomorphism iff ``c`` is idempotent)."""
        return cls(S, T, lambda t, s: c, f"constant {S.fmt(c)}")

    @classmethod
    def from_table(cls, S, T, rows):
        """``rows[t][s] = phi_t(s)``; rows may be a list or a dict keyed by ``t``."""
        rows = {t: list(r) for t, r in (rows.items() if isinstance(rows, Mapping) else enumerate(rows))}
        return cls(S, T, lambda t, s: rows[t][s], "table")

    def image(self, t, budget=None) -> frozenset:
        return frozenset(self.apply(t, s) for s in self.domain.elements_or_first(budget))

    def validate(self, budget: int | None = None) -> Verdict:
        """Check that each ``phi_t`` is an endomorphism and that ``t -> phi_t``
        is a homomorphism.  ``violation`` carries ``(law, ...)``."""
        S, T = self.domain, self.index
        ss = S.elements_or_first(budget)
        ts = T.elements_or_first(budget)
        for t in ts:
            for s in ss:
                if not S.contains(self.apply(t, s)):
                    return Verdict("violation", ("outside-domain", t, s))
        for t in ts:
            for s in ss:
                for s2 in ss:
                    if self.apply(t, S.mul(s, s2)) != S.mul(self.apply(t, s), self.apply(t, s2)):
                        return Verdict("violation", ("endomorphism", t, s, s2))
        for t in ts:
            for t2 in ts:
                tt = T.mul(t, t2)
                for s in ss:
                    if self.apply(tt, s) != self.apply(t, self.apply(t2, s)):
                        return Verdict("violation", ("composition", t, t2, s))
        return Verdict("valid" if _all_finite(S, T) else "verified-up-to-budget",
                       budget=None if _all_finite(S, T) else budget)


def _pair_semigroup(A, B, product, *, tag="pair", name="", fmt=None, info=None, neighbours=None):
    """Finite table or symbolic semigroup on pairs ``Element(tag, (a, b))``."""
    wrap = lambda a, b: Element(tag, (a, b))
    fmt = fmt or (lambda x: f"({A.fmt(x.payload[0])},{B.fmt(x.payload[1])})")
    if _all_finite(A, B):
        elems = [wrap(a, b) for a in A.elements() for b in B.elements()]
        return FiniteSemigroup.from_elements(elems, product, fmt=fmt, name=name, info=info)

    def level(n):
        out = [wrap(a, b) for a in levels_upto(A, n) for b in levels_upto(B, n)
               if max(A.size(a), B.size(b)) == n]
        return _sorted_terms(out)

    def size(x):
        a, b = x.payload
        return max(A.size(a), B.size(b))

    def contains(x):
        return isinstance(x, Element) and x.tag == tag and A.contains(x.payload[0]) \
            and B.contains(x.payload[1])

    return SymbolicSemigroup(product, level, size, name=name, contains=contains, fmt=fmt,
                             max_level=_max_level(A, B), info=info, neighbours=neighbours)


def semidirect_product(S: Semigroup, T: Semigroup, phi: EndoAction, *, validate=True,
                       budget: int = 30) -> Semigroup:
    """``S x| T`` with ``(s,t)(s',t') = (s phi_t(s'), t t')``.

    The action is validated first (exhaustively when finite, otherwise on the
    first ``budget`` elements); a violation raises :class:`ConstructionError`
    carrying the witness.
    """
    if validate:
        v = phi.validate(None if _all_finite(S, T) else budget)
        if v.status == "violation":
            raise ConstructionError(f"action violates the {v.witness[0]} law at {v.witness[1:]}",
                                    v.witness)

    def product(x, y):
        s, t = x.payload
        s2, t2 = y.payload
        return pair(S.mul(s, phi.apply(t, s2)), T.mul(t, t2))

    return _pair_semigroup(S, T, product, name=f"{S.name} x| {T.name}",
                           info={"construction": "semidirect", "S": S, "T": T, "phi": phi})


# ---------------------------------------------------------------------------
# Schutzenberger products


def _canon_pairs(pairs) -> tuple:
    """Duplicate-free tuple of pairs, sorted by (first, second)."""
    return tuple(sorted(set(pairs), key=lambda pq: (sort_key(pq[0]), sort_key(pq[1]))))


def schutz_middle(s1, P1, P2, t2, mul_s, mul_t, drop_right=False) -> tuple:
    """``s1 P2  union  P1 t2``."""
    left = [(mul_s(s1, p), q) for p, q in P2]
    right = [] if drop_right else [(p, mul_t(q, t2)) for p, q in P1]
    return _canon_pairs(left + right)


def _subsets_upto(items, k):
    for r in range(k + 1):
        yield from itertools.combinations(items, r)


def schutz_rule(S: Semigroup, T: Semigroup) -> Callable:
    """The Schutzenberger product rule on ``schutz-triple`` elements."""
    def product(x, y):
        s1, P1, t1 = x.payload
        s2, P2, t2 = y.payload
        P = schutz_middle(s1, P1, P2, t2, S.mul, T.mul, drop_right=_mutated("schutz-union"))
        return Element("schutz-triple", (S.mul(s1, s2), P, T.mul(t1, t2)))
    return product


def schutzenberger_product(S: Semigroup, T: Semigroup) -> Semigroup:
    """``S <> T``: triples ``(s, P, t)`` with ``P`` a finite subset of ``S x T`` and
    ``(s1,P1,t1)(s2,P2,t2) = (s1 s2, s1 P2 u P1 t2, t1 t2)``."""
    tag = "schutz-triple"
    product = schutz_rule(S, T)

    def fmt(x):
        s, P, t = x.payload
        inner = ",".join(f"({S.fmt(p)},{T.fmt(q)})" for p, q in P)
        return f"({S.fmt(s)},{{{inner}}},{T.fmt(t)})"

    info = {"construction": "schutzenberger", "S": S, "T": T}
    name = f"{S.name} <> {T.name}"
    if _all_finite(S, T):
        grid = [(p, q) for p in S.elements() for q in T.elements()]
        total = S.order * T.order * 2 ** len(grid)
        if total <= SCHUTZ_MATERIALIZE_LIMIT:
            elems = [Element(tag, (s, _canon_pairs(P), t)) for s in S.elements()
                     for P in _subsets_upto(grid, len(grid)) for t in T.elements()]
            return FiniteSemigroup.from_elements(elems, product, fmt=fmt, name=name, info=info)

    def size(x):
        s, P, t = x.payload
        sizes = [S.size(s), T.size(t), len(P)]
        sizes += [max(S.size(p), T.size(q)) for p, q in P]
        return max(sizes)

    def level(n):
        ss, ts = levels_upto(S, n), levels_upto(T, n)
        grid = [(p, q) for p in ss for q in ts]
        out = []
        for P in _subsets_upto(grid, n):
            P = _canon_pairs(P)
            for s in ss:
                for t in ts:
                    x = Element(tag, (s, P, t))
                    if size(x) == n:
                        out.append(x)
        return sorted(out, key=lambda x: (len(x.payload[1]), term_key(x)))

    top = _max_level(S, T)
    if top is not None:
        top = max(top, len(levels_upto(S, top)) * len(levels_upto(T, top)))
    return SymbolicSemigroup(product, level, size, name=name, fmt=fmt, max_level=top, info=info,
                             contains=lambda x: isinstance(x, Element) and x.tag == tag)


def schutzenberger_reduced(T: Semigroup, *, neighbours=None, name="") -> Semigroup:
    """``{1} <> T`` presented as pairs ``(P, t)`` with ``P`` a finite subset of ``T``.

    The product is computed by lifting to the generic Schutzenberger product
    over the trivial monoid and projecting back, which gives
    ``(P1,t1)(P2,t2) = (P1 t2 u P2, t1 t2)``.
    """
    one = trivial_semigroup()
    rule = schutz_rule(one, T)

    def lift(x):
        P, t = x.payload
        return Element("schutz-triple", (0, _canon_pairs((0, p) for p in P), t))

    def project(y):
        _, P, t = y.payload
        return Element("pair", (_canon_set(q for _, q in P), t))

    def product(x, y):
        return project(rule(lift(x), lift(y)))

    def fmt(x):
        P, t = x.payload
        return "({" + ",".join(T.fmt(p) for p in P) + "}," + T.fmt(t) + ")"

    def size(x):
        P, t = x.payload
        return max([T.size(t), len(P)] + [T.size(p) for p in P])

    def level(n):
        ts = levels_upto(T, n)
        out = []
        for P in _subsets_upto(ts, n):
            P = _canon_set(P)
            for t in ts:
                x = Element("pair", (P, t))
                if size(x) == n:
                    out.append(x)
        return sorted(out, key=lambda x: (len(x.payload[0]), term_key(x)))

    info = {"construction": "schutzenberger-reduced", "T": T, "lift": lift, "project": project}
    if T.is_finite:
        elems = [Element("pair", (_canon_set(P), t))
                 for P in _subsets_upto(list(T.elements()), T.order) for t in T.elements()]
        if len(elems) <= SCHUTZ_MATERIALIZE_LIMIT:
            return FiniteSemigroup.from_elements(elems, product, fmt=fmt, name=name, info=info)
    return SymbolicSemigroup(product, level, size, name=name or f"{{1}} <> {T.name}", fmt=fmt,
                             neighbours=neighbours, info=info,
                             contains=lambda x: isinstance(x, Element) and x.tag == "pair")


def _canon_set(items) -> tuple:
    return tuple(sorted(set(items), key=sort_key))


# ---------------------------------------------------------------------------
# free products


def _seq_fmt(factors):
    def fmt(x):
        if x == ONE:
            return "1"
        return "(" + ",".join(f"{factors[i].fmt(a)}_{i}" for i, a in x.payload) + ")"
    return fmt


def _seq_levels(factors, allowed):
    """Alternating sequences with ``max(length, letter sizes) == n``."""
    def level(n):
        if n == 0:
            return []
        letters = [[a for a in levels_upto(F, n) if allowed(i, a)] for i, F in enumerate(factors)]
        out = []

        def grow(prefix, last, biggest):
            if prefix and max(len(prefix), biggest) == n:
                out.append(Element("sequence", tuple(prefix)))
            if len(prefix) == n:
                return
            for i, F in enumerate(factors):
                if i == last:
                    continue
                for a in letters[i]:
                    prefix.append((i, a))
                    grow(prefix, i, max(biggest, F.size(a)))
                    prefix.pop()

        grow([], None, 0)
        return _sorted_terms(out)
    return level


def _seq_size(factors):
    def size(x):
        if x == ONE:
            return 0
        return max([len(x.payload)] + [factors[i].size(a) for i, a in x.payload])
    return size


def free_product(factors: Sequence[Semigroup]) -> SymbolicSemigroup:
    """Semigroup free product: alternating sequences ``((i, a), ...)`` tagged
    by factor index.  Boundary letters from the same factor are multiplied."""
    factors = list(factors)
    if len(factors) < 2:
        raise ConstructionError("a free product needs at least two factors")

    def product(x, y):
        u, v = x.payload, y.payload
        if not u or not v:
            raise ConstructionError("empty sequence is not an element")
        (i, a), (j, b) = u[-1], v[0]
        if i != j:
            return Element("sequence", u + v)
        return Element("sequence", u[:-1] + ((i, factors[i].mul(a, b)),) + v[1:])

    def contains(x):
        if not (isinstance(x, Element) and x.tag == "sequence" and x.payload):
            return False
        tags = [i for i, _ in x.payload]
        return all(p != q for p, q in zip(tags, tags[1:])) and \
            all(factors[i].contains(a) for i, a in x.payload)

    return SymbolicSemigroup(product, _seq_levels(factors, lambda i, a: True), _seq_size(factors),
                             name=" * ".join(F.name or "?" for F in factors),
                             fmt=_seq_fmt(factors), contains=contains,
                             info={"construction": "free-product", "factors": factors})


def monoid_free_product(factors: Sequence[Semigroup]) -> SymbolicSemigroup:
    """Monoid free product: reduced sequences (no factor identities) plus ``1``."""
    factors = list(factors)
    if len(factors) < 2:
        raise ConstructionError("a free product needs at least two factors")
    for i, F in enumerate(factors):
        if F.identity is None:
            raise ConstructionError(f"factor {i} has no identity", i)

    def reduce(letters):
        stack = []
        for i, a in letters:
            if a == factors[i].identity:
                continue
            if stack and stack[-1][0] == i:
                _, b = stack.pop()
                c = factors[i].mul(b, a)
                # the stack alternates, so a merged letter never meets its own factor below
                if c != factors[i].identity:
                    stack.append((i, c))
            else:
                stack.append((i, a))
        return Element("sequence", tuple(stack)) if stack else ONE

    def product(x, y):
        u = () if x == ONE else x.payload
        v = () if y == ONE else y.payload
        return reduce(u + v)

    base = _seq_levels(factors, lambda i, a: a != factors[i].identity)

    def level(n):
        return [ONE] if n == 0 else base(n)

    def contains(x):
        if x == ONE:
            return True
        if not (isinstance(x, Element) and x.tag == "sequence" and x.payload):
            return False
        tags = [i for i, _ in x.payload]
        return all(p != q for p, q in zip(tags, tags[1:])) and \
            all(a != factors[i].identity and factors[i].contains(a) for i, a in x.payload)

    return SymbolicSemigroup(product, level, _seq_size(factors), identity=ONE,
                             canonicalize=lambda x: x if x == ONE else reduce(x.payload),
                             name=" * ".join(F.name or "?" for F in factors),
                             fmt=_seq_fmt(factors), contains=contains,
                             info={"construction": "monoid-free-product", "factors": factors})


def is_minimal_length(FP: SymbolicSemigroup, u, budget: int | None = None) -> bool:
    """A reduced sequence can be shortened within its R-class exactly when its
    last letter is right invertible in its factor; report whether it cannot."""
    if u == ONE:
        return True
    i, a = u.payload[-1]
    F = FP.info["factors"][i]
    return not any(F.mul(a, b) == F.identity for b in F.elements_or_first(budget or 200))


# ---------------------------------------------------------------------------
# Rees matrix constructions


def _labels(I):
    if isinstance(I, int):
        if I <= 0:
            raise ConstructionError("index sets must be non-empty")
        return list(range(1, I + 1))
    labels = list(I)
    if not labels:
        raise ConstructionError("index sets must be non-empty")
    return labels


@dataclass
class SandwichMatrix:
    """``J x I`` matrix over ``S``; ``entry(j, i) = p_{j,i}``."""

    S: Semigroup
    I: list
    J: list
    entries: dict = field(default_factory=dict)

    @classmethod
    def build(cls, S, I, J, P):
        I, J = _labels(I), _labels(J)
        entries = {}
        if isinstance(P, Mapping):
            entries = dict(P)
        else:
            rows = list(P)
            if len(rows) != len(J):
                raise ConstructionError(f"sandwich matrix needs {len(J)} rows, got {len(rows)}")
            for j, row in zip(J, rows):
                row = list(row)
                if len(row) != len(I):
                    raise ConstructionError(f"row {j} needs {len(I)} entries, got {len(row)}")
                for i, p in zip(I, row):
                    entries[(j, i)] = p
        for j in J:
            for i in I:
                if (j, i) not in entries:
                    raise ConstructionError(f"sandwich matrix has no entry at ({j},{i})", (j, i))
                if not S.contains(entries[(j, i)]):
                    raise ConstructionError(f"entry ({j},{i}) is not in S", (j, i))
        return cls(S, I, J, entries)

    def entry(self, j, i):
        try:
            return self.entries[(j, i)]
        except KeyError:
            raise ConstructionError(f"index ({j},{i}) out of range", (j, i)) from None

    def values(self):
        return [self.entries[(j, i)] for j in self.J for i in self.I]


def _triple_fmt(S):
    def fmt(x):
        if x == REES_ZERO:
            return "0"
        i, s, j = x.payload
        return f"({i},{S.fmt(s)},{j})"
    return fmt


def _triples(S, M, elements_of_s, zero=False, name="", info=None, product=None):
    wrap = lambda i, s, j: Element("rees", (i, s, j))
    fmt = _triple_fmt(S)
    if S.is_finite:
        elems = ([REES_ZERO] if zero else []) + [wrap(i, s, j) for i in M.I for s in elements_of_s(S.elements())
                                                 for j in M.J]
        return FiniteSemigroup.from_elements(elems, product, fmt=fmt, name=name, info=info)

    def level(n):
        out = [wrap(i, s, j) for i in M.I for s in elements_of_s(S.level(n)) for j in M.J]
        out = _sorted_terms(out)
        return ([REES_ZERO] + out) if zero and n == 0 else out

    def size(x):
        return 0 if x == REES_ZERO else S.size(x.payload[1])

    def contains(x):
        if x == REES_ZERO:
            return zero
        if not (isinstance(x, Element) and x.tag == "rees"):
            return False
        i, s, j = x.payload
        return i in M.I and j in M.J and S.contains(s) and not (zero and s == S.zero)

    return SymbolicSemigroup(product, level, size, name=name, fmt=fmt, contains=contains,
                             zero=REES_ZERO if zero else None, max_level=S.max_level, info=info)


def rees_matrix(S: Semigroup, I, J, P) -> Semigroup:
    """``M[S; I, J; P]`` with ``(i,s,j)(k,t,l) = (i, s p_{j,k} t, l)``.

    ``I`` and ``J`` are a count ``n`` (labels ``1..n``) or a list of labels.
    ``P`` is given as rows indexed by ``J`` with one column per ``I`` label, or
    as a dict keyed by ``(j, i)``.
    """
    M = P if isinstance(P, SandwichMatrix) else SandwichMatrix.build(S, I, J, P)

    def product(x, y):
        i, s, j = x.payload
        k, t, l = y.payload
        return Element("rees", (i, S.mul(S.mul(s, M.entry(j, k)), t), l))

    return _triples(S, M, list, name=f"M[{S.name}]", product=product,
                    info={"construction": "rees", "S": S, "P": M})


def rees_matrix_zero(S: Semigroup, I, J, P) -> Semigroup:
    """``M^0[S; I, J; P]``: the Rees matrix semigroup with every triple whose
    middle is the zero of ``S`` collapsed to a single zero."""
    if S.zero is None:
        raise ConstructionError("S must have a zero")
    M = P if isinstance(P, SandwichMatrix) else SandwichMatrix.build(S, I, J, P)
    z = S.zero

    def product(x, y):
        if x == REES_ZERO or y == REES_ZERO:
            return REES_ZERO
        i, s, j = x.payload
        k, t, l = y.payload
        m = S.mul(S.mul(s, M.entry(j, k)), t)
        return REES_ZERO if m == z else Element("rees", (i, m, l))

    return _triples(S, M, lambda xs: [s for s in xs if s != z], zero=True,
                    name=f"M0[{S.name}]", product=product,
                    info={"construction": "rees0", "S": S, "P": M})


def brandt_extension(S: Semigroup, I) -> Semigroup:
    """``B(S, I)``: ``(i,s,j)(k,t,l) = (i, st, l)`` when ``j == k``, else 0."""
    labels = _labels(I)
    M = SandwichMatrix(S, labels, labels, {})

    def product(x, y):
        if x == REES_ZERO or y == REES_ZERO:
            return REES_ZERO
        i, s, j = x.payload
        k, t, l = y.payload
        if j != k:
            return REES_ZERO
        return Element("rees", (i, S.mul(s, t), l))

    return _triples(S, M, list, zero=True, name=f"B({S.name})", product=product,
                    info={"construction": "brandt", "S": S, "I": labels})


# ---------------------------------------------------------------------------
# Bruck-Reilly extensions


def bruck_reilly(M: Semigroup, theta, *, validate=True, budget: int = 50) -> SymbolicSemigroup:
    """``BR(M, theta)`` on ``N0 x M x N0`` with

    ``(i,a,j)(p,b,q) = (i-j+t, theta^(t-j)(a) theta^(t-p)(b), q-p+t)``,
    ``t = max(j, p)``, and identity ``(0, 1, 0)``.
    """
    if M.identity is None:
        raise ConstructionError("M must be a monoid")
    th = _as_map(theta)
    if validate:
        one = M.identity
        if th(one) != one:
            raise ConstructionError("theta must fix the identity", ("identity", one))
        xs = M.elements_or_first(None if M.is_finite else budget)
        for a in xs:
            if not M.contains(th(a)):
                raise ConstructionError(f"theta({M.fmt(a)}) is not in M", ("outside", a))
            for b in xs:
                if th(M.mul(a, b)) != M.mul(th(a), th(b)):
                    raise ConstructionError("theta is not an endomorphism", ("endomorphism", a, b))
    powers: dict = {}

    def power(k, a):
        key = (k, a)
        got = powers.get(key)
        if got is None:
            got = a if k == 0 else th(power(k - 1, a))
            powers[key] = got
        return got

    def product(x, y):
        i, a, j = x.payload
        p, b, q = y.payload
        t = max(j, p)
        first = t + j if _mutated("br-sign") else t - j
        return Element("bruck-reilly",
                       (i - j + t, M.mul(power(first, a), power(t - p, b)), q - p + t))

    def size(x):
        i, a, j = x.payload
        return max(i, j, M.size(a))

    def level(n):
        ms = levels_upto(M, n)
        out = [Element("bruck-reilly", (i, a, j)) for i in range(n + 1) for a in ms
               for j in range(n + 1) if max(i, j, M.size(a)) == n]
        return _sorted_terms(out)

    def contains(x):
        if not (isinstance(x, Element) and x.tag == "bruck-reilly"):
            return False
        i, a, j = x.payload
        return isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0 and M.contains(a)

    def fmt(x):
        i, a, j = x.payload
        return f"({i},{M.fmt(a)},{j})"

    return SymbolicSemigroup(product, level, size, name=f"BR({M.name})", fmt=fmt,
                             identity=Element("bruck-reilly", (0, M.identity, 0)),
                             contains=contains,
                             info={"construction": "bruck-reilly", "M": M, "theta": th})


# ---------------------------------------------------------------------------
# semilattices of semigroups


class SemilatticeDecomposition:
    """A semilattice ``Y`` with components ``alpha -> S_alpha`` and, in the
    strong case, transitions ``phi(alpha, beta)`` for ``alpha >= beta``.

    ``alpha >= beta`` means ``alpha * beta == beta`` in ``Y``.  Transitions
    are written on the right: ``phi(alpha, beta)`` followed by
    ``phi(beta, gamma)`` equals ``phi(alpha, gamma)``.
    """

    def __init__(self, Y: Semigroup, components, transitions: Callable | None = None,
                 name: str = ""):
        self.Y = Y
        self._components = components
        self.transitions = transitions
        self.name = name

    def component(self, alpha) -> Semigroup:
        c = self._components
        return c(alpha) if callable(c) else c[alpha]

    def phi(self, alpha, beta, s):
        return _as_map(self.transitions(alpha, beta))(s)

    def geq(self, alpha, beta) -> bool:
        return self.Y.mul(alpha, beta) == beta

    def indices(self, check_on=None, budget=None):
        if check_on is not None:
            return list(check_on)
        return list(self.Y.elements_or_first(budget))

    def validate(self, check_on=None, budget: int = 20) -> Verdict:
        """``violation`` with ``(law, ...)`` or ``valid``."""
        Y = self.Y
        ys = self.indices(check_on, budget)
        for a in ys:
            if Y.mul(a, a) != a:
                return Verdict("violation", ("idempotent", a))
            for b in ys:
                if Y.mul(a, b) != Y.mul(b, a):
                    return Verdict("violation", ("commutative", a, b))
        if self.transitions is None:
            return Verdict("valid")
        elems = {a: self.component(a).elements_or_first(budget) for a in ys}
        for a in ys:
            for s in elems[a]:
                if self.phi(a, a, s) != s:
                    return Verdict("violation", ("identity-transition", a, s))
        for a in ys:
            for b in ys:
                if not self.geq(a, b):
                    continue
                Sa, Sb = self.component(a), self.component(b)
                for s in elems[a]:
                    if not Sb.contains(self.phi(a, b, s)):
                        return Verdict("violation", ("outside-component", a, b, s))
                    for s2 in elems[a]:
                        if self.phi(a, b, Sa.mul(s, s2)) != Sb.mul(self.phi(a, b, s), self.phi(a, b, s2)):
                            return Verdict("violation", ("homomorphism", a, b, s, s2))
                for c in ys:
                    if not self.geq(b, c):
                        continue
                    for s in elems[a]:
                        if self.phi(b, c, self.phi(a, b, s)) != self.phi(a, c, s):
                            return Verdict("violation", ("composition", a, b, c, s))
        return Verdict("valid")


def strong_semilattice(D: SemilatticeDecomposition, *, check_on=None, validate=True,
                       budget: int = 20, neighbours=None, fmt=None, name="") -> Semigroup:
    """Strong semilattice of semigroups: elements ``(alpha, s)`` with
    ``(alpha,a)(beta,b) = (alpha beta, phi(alpha,alpha beta)(a) phi(beta,alpha beta)(b))``."""
    if D.transitions is None:
        raise ConstructionError("a strong semilattice needs transition maps")
    if validate:
        v = D.validate(check_on, budget)
        if v.status == "violation":
            raise ConstructionError(f"decomposition violates the {v.witness[0]} law at {v.witness[1:]}",
                                    v.witness)
    Y = D.Y
    tag = "semilattice-component"

    def product(x, y):
        a, s = x.payload
        b, t = y.payload
        g = Y.mul(a, b)
        return Element(tag, (g, D.component(g).mul(D.phi(a, g, s), D.phi(b, g, t))))

    fmt = fmt or (lambda x: f"{Y.fmt(x.payload[0])}:{D.component(x.payload[0]).fmt(x.payload[1])}")
    info = {"construction": "strong-semilattice", "decomposition": D,
            "component_of": lambda x: x.payload[0]}
    ys = list(Y.elements()) if Y.is_finite else None
    if ys is not None and all(D.component(a).is_finite for a in ys):
        elems = [Element(tag, (a, s)) for a in ys for s in D.component(a).elements()]
        F = FiniteSemigroup.from_elements(elems, product, fmt=fmt, name=name, info=info)
        F.info["component_of"] = lambda i: F.label(i).payload[0]
        return F

    def size(x):
        a, s = x.payload
        return max(Y.size(a), D.component(a).size(s))

    def level(n):
        out = [Element(tag, (a, s)) for a in levels_upto(Y, n) for s in levels_upto(D.component(a), n)]
        return _sorted_terms(x for x in out if size(x) == n)

    def contains(x):
        return isinstance(x, Element) and x.tag == tag and Y.contains(x.payload[0]) and \
            D.component(x.payload[0]).contains(x.payload[1])

    return SymbolicSemigroup(product, level, size, name=name or D.name, fmt=fmt,
                             contains=contains, neighbours=neighbours, info=info)


def semilattice_partition_check(S: Semigroup, Y: Semigroup, partition, elements=None) -> Verdict:
    """Check ``S_alpha S_beta`` inside ``S_{alpha beta}`` for a partition of ``S``.

    ``partition`` maps each element to its index in ``Y`` (mapping or
    callable).  ``elements`` limits the check (required for symbolic ``S``).
    Raises :class:`ContractError` if an element has no index.  Returns
    ``valid`` or ``violation`` with the first offending pair.
    """
    part = partition if callable(partition) else partition.__getitem__
    xs = list(elements) if elements is not None else list(S.elements())

    def index(x):
        try:
            alpha = part(x)
        except (KeyError, IndexError):
            alpha = None
        if alpha is None or not Y.contains(alpha):
            raise ContractError(f"element {S.fmt(x)} is not covered by the partition")
        return alpha

    idx = {x: index(x) for x in xs}
    for a in xs:
        for b in xs:
            if index(S.mul(a, b)) != Y.mul(idx[a], idx[b]):
                return Verdict("violation", (a, b))
    return Verdict("valid")
