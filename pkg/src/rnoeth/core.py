"""Semigroups as computational objects.

Two concrete kinds of semigroup share one small interface:

* :class:`FiniteSemigroup` stores a Cayley table over the indices ``0..n-1``.
* :class:`SymbolicSemigroup` is a countable semigroup given by a product rule on
  canonical terms, together with a size-graded enumerator ("levels").

Elements of finite semigroups are plain ints.  Elements produced by the
constructions are :class:`Element` tuples tagged with the construction that
made them, which keeps equality decidable (it is tuple equality).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence

import numpy as np

__all__ = [
    "SemigroupError", "MalformedTable", "NotAssociative", "DomainError",
    "ContractError", "ConstructionError",
    "Element", "ONE", "ZERO", "Verdict",
    "Semigroup", "FiniteSemigroup", "SymbolicSemigroup", "SubsemigroupView",
    "validate_associativity", "ValidationReport",
    "adjoin_identity", "adjoin_zero", "is_homomorphism",
    "left_zero", "right_zero", "null_semigroup", "cyclic_group",
    "chain_semilattice", "trivial_semigroup", "subsemigroups",
    "term_key", "sort_key",
]


class SemigroupError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTable(SemigroupError, ValueError):
    """A table is not square, or has an entry outside ``0..n-1``."""


class NotAssociative(SemigroupError):
    def __init__(self, triple):
        super().__init__(f"not associative at {triple}")
        self.triple = triple


class DomainError(SemigroupError, ValueError):
    pass


class ContractError(SemigroupError, TypeError):
    """An operation was called outside its contract (e.g. symbolic input to an exact routine)."""


class ConstructionError(SemigroupError):
    """A construction rejected its inputs; ``witness`` says why."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Element(NamedTuple):
    """Construction-tagged term.

    ``tag`` is one of ``pair``, ``schutz-triple``, ``sequence``, ``rees``,
    ``bruck-reilly``, ``semilattice-component``, ``adjoined-identity`` or
    ``adjoined-zero``.  Elements of finite tables are ints and carry no tag.
    """

    tag: str
    payload: Any

    def __repr__(self):
        return f"<{self.tag} {self.payload!r}>"


ONE = Element("adjoined-identity", None)
ZERO = Element("adjoined-zero", None)


def term_key(x) -> str:
    """Serialization used to break ties when ordering terms."""
    return repr(x)


def sort_key(x):
    """Ints first in numeric order, then terms by serialization."""
    if isinstance(x, (int, np.integer)):
        return (0, int(x), "")
    return (1, 0, term_key(x))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check that may be exact or budget-qualified.

    ``status`` is a short word naming the outcome (``holds``, ``fails``,
    ``unknown``, ``yes``, ``no``, ``found`` ...); which words an operation
    returns is stated in that operation's docstring.  A negative outcome always
    carries a replayable ``witness``; a budget-qualified one carries ``budget``.
    """

    status: str
    witness: Any = None
    budget: int | None = None
    branch: str = ""
    evidence: tuple = ()

    POSITIVE = frozenset({
        "holds", "yes", "found", "equal", "valid", "verified",
        "verified-up-to-budget", "yes-up-to-budget",
    })

    @property
    def ok(self) -> bool:
        return self.status in self.POSITIVE

    def serialize(self, fmt=repr) -> str:
        lines = [f"status {self.status}", f"branch {self.branch or '-'}"]
        lines.append("witness " + ("-" if self.witness is None else _fmt_witness(self.witness, fmt)))
        lines.append("budget " + ("-" if self.budget is None else str(self.budget)))
        return "\n".join(lines) + "\n"


def _fmt_witness(w, fmt):
    if isinstance(w, (tuple, list)) and not isinstance(w, Element):
        return " ".join(_fmt_witness(x, fmt) for x in w)
    if hasattr(w, "describe"):
        return w.describe(fmt)
    return fmt(w)


class Semigroup:
    """Interface shared by finite and symbolic semigroups."""

    name: str = ""
    identity: Any = None
    zero: Any = None
    is_finite: bool = False
    info: dict

    def mul(self, a, b):
        raise NotImplementedError

    def fmt(self, x) -> str:
        return str(x)

    def level(self, n: int) -> list:
        """Elements of size exactly ``n``, in enumeration order."""
        raise NotImplementedError

    def size(self, x) -> int:
        raise NotImplementedError

    def contains(self, x) -> bool:
        return True

    def canonicalize(self, x):
        return x

    def neighbours(self, x) -> list:
        """Search hints: images of ``x`` under declared automorphisms."""
        return []

    @property
    def max_level(self) -> int | None:
        return None

    def enumerate(self) -> Iterator:
        n = 0
        top = self.max_level
        while top is None or n <= top:
            yield from self.level(n)
            n += 1

    def first(self, count: int) -> list:
        cache = self.__dict__.setdefault("_first_cache", [])
        if len(cache) < count:
            it = self.__dict__.get("_first_iter")
            if it is None:
                it = self.__dict__["_first_iter"] = self.enumerate()
            for x in it:
                cache.append(x)
                if len(cache) >= count:
                    break
        return cache[:count]

    def elements_or_first(self, budget: int | None):
        if self.is_finite:
            return list(self.elements())
        if budget is None or budget <= 0:
            raise ValueError("a positive budget is required for a symbolic semigroup")
        return self.first(budget)

    def prod(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    def __repr__(self):
        kind = f"order {self.order}" if self.is_finite else "symbolic"
        return f"<{type(self).__name__} {self.name or '?'} ({kind})>"


# ---------------------------------------------------------------------------
# finite tables


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    triple: tuple[int, int, int] | None = None


def _as_table(table) -> np.ndarray:
    try:
        arr = np.asarray(table)
    except Exception as exc:  # ragged input
        raise MalformedTable(f"cannot read table: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise MalformedTable(f"table must be a non-empty square array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise MalformedTable("table entries must be integers")
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = map(int, bad[0])
        raise MalformedTable(f"entry ({i},{j}) = {int(arr[i, j])} out of range 0..{n - 1}")
    return arr.astype(np.int64)


def validate_associativity(table) -> ValidationReport:
    """Check every triple; report the lexicographically first failure.

    Raises :class:`MalformedTable` for out-of-range entries, which is a
    different failure from non-associativity.
    """
    t = _as_table(table)
    n = t.shape[0]
    r = np.arange(n)
    lhs = t[t[:, :, None], r[None, None, :]]           # (ij)k
    rhs = t[r[:, None, None], t[None, :, :]]           # i(jk)
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return ValidationReport(False, tuple(int(v) for v in bad[0]))
    return ValidationReport(True)


class FiniteSemigroup(Semigroup):
    """A semigroup on ``0..n-1`` given by its Cayley table.

    ``names`` are display strings (one token each, as in the table file);
    ``labels`` optionally hold the construction terms the indices stand for.
    """

    is_finite = True

    def __init__(self, table, names: Sequence[str] | None = None, *, labels=None,
                 name: str = "", validate: bool = True, info=None):
        arr = _as_table(table)
        if validate:
            report = validate_associativity(arr)
            if not report.valid:
                raise NotAssociative(report.triple)
        self.array = arr
        self.table = tuple(tuple(int(v) for v in row) for row in arr)
        self.order = len(self.table)
        if names is not None:
            names = [str(s) for s in names]
            if len(names) != self.order:
                raise MalformedTable("need one name per element")
        self.names = names
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self.info = dict(info or {})
        self._index = None
        self.identity = self._find_identity()
        self.zero = self._find_zero()

    @classmethod
    def from_elements(cls, elements: Iterable, product: Callable, *, fmt=str,
                      name: str = "", validate: bool = False, info=None):
        """Tabulate ``product`` on a finite carrier; labels keep the terms."""
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise ConstructionError("repeated element in carrier")
        rows = []
        for x in elements:
            row = []
            for y in elements:
                z = product(x, y)
                try:
                    row.append(index[z])
                except KeyError:
                    raise ConstructionError(f"product {x!r}*{y!r} = {z!r} leaves the carrier",
                                            (x, y)) from None
            rows.append(row)
        sg = cls(rows, [fmt(x) for x in elements], labels=elements, name=name,
                 validate=validate, info=info)
        sg._index = index
        return sg

    def _find_identity(self):
        t, n = self.table, self.order
        for e in range(n):
            if all(t[e][x] == x and t[x][e] == x for x in range(n)):
                return e
        return None

    def _find_zero(self):
        t, n = self.table, self.order
        for z in range(n):
            if all(t[z][x] == z and t[x][z] == z for x in range(n)):
                return z
        return None

    def mul(self, a, b):
        return self.table[a][b]

    def elements(self):
        return range(self.order)

    def level(self, n):
        return list(range(self.order)) if n == 0 else []

    def size(self, x):
        return 0

    @property
    def max_level(self):
        return 0

    def contains(self, x):
        return isinstance(x, (int, np.integer)) and 0 <= x < self.order

    def fmt(self, x):
        if self.names is not None and self.contains(x):
            return self.names[x]
        return str(x)

    def index_of(self, label):
        if self._index is None:
            if self.labels is None:
                raise KeyError(label)
            self._index = {x: i for i, x in enumerate(self.labels)}
        return self._index[label]

    def label(self, i):
        return self.labels[i] if self.labels is not None else i

    def right_multiples(self, a) -> frozenset:
        """``aS`` as a set."""
        cache = self.__dict__.setdefault("_rm", {})
        got = cache.get(a)
        if got is None:
            got = cache[a] = frozenset(self.table[a])
        return got

    def right_ideal(self, a) -> frozenset:
        """``aS^1``."""
        return self.right_multiples(a) | {a}

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)


def trivial_semigroup() -> FiniteSemigroup:
    return FiniteSemigroup([[0]], ["1"], name="trivial")


def left_zero(n: int = 2) -> FiniteSemigroup:
    return FiniteSemigroup([[i] * n for i in range(n)], name=f"left-zero-{n}")


def right_zero(n: int = 2) -> FiniteSemigroup:
    return FiniteSemigroup([list(range(n)) for _ in range(n)], name=f"right-zero-{n}")


def null_semigroup(n: int = 2) -> FiniteSemigroup:
    """All products equal 0; element 1 is printed ``a`` when n == 2."""
    names = ["0", "a"] if n == 2 else None
    return FiniteSemigroup([[0] * n for _ in range(n)], names, name=f"null-{n}")


def cyclic_group(n: int = 2) -> FiniteSemigroup:
    names = ["e"] + [f"g{k}" if n > 2 else "g" for k in range(1, n)]
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)], names,
                           name=f"C{n}")


def chain_semilattice(n: int = 2) -> FiniteSemigroup:
    """``{0 < 1 < ... < n-1}`` under min."""
    return FiniteSemigroup([[min(i, j) for j in range(n)] for i in range(n)], name=f"chain-{n}")


def subsemigroups(S: FiniteSemigroup) -> list[frozenset]:
    """All non-empty subsets closed under the product (brute force)."""
    n, t = S.order, S.table
    out = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if all(mask >> t[a][b] & 1 for a in members for b in members):
            out.append(frozenset(members))
    return out


# ---------------------------------------------------------------------------
# symbolic semigroups


class SymbolicSemigroup(Semigroup):
    """A countable semigroup given by rules.

    ``product`` multiplies canonical terms.  ``level(n)`` lists the finitely
    many canonical terms of size ``n`` in a fixed order; the enumerator walks
    the levels in turn, so every element turns up at a finite position.
    Identity and zero are declared, never inferred.  ``facts`` records
    properties that are known by proof rather than by search (for instance
    that a free semigroup is R-noetherian); checks report them as declared.
    ``neighbours(x)`` lists images of ``x`` under automorphisms of the
    semigroup; a chain that follows such an orbit continues forever.
    """

    is_finite = False

    def __init__(self, product: Callable, level: Callable[[int], list], size: Callable, *,
                 name: str = "", canonicalize: Callable | None = None,
                 identity=None, zero=None, contains: Callable | None = None,
                 neighbours: Callable | None = None, fmt: Callable | None = None,
                 max_level: int | None = None, facts: Mapping | None = None, info=None):
        self._product = product
        self._level = level
        self._size = size
        self._canon = canonicalize
        self._contains = contains
        self._neighbours = neighbours
        self._fmt = fmt
        self._max_level = max_level
        self._levels: dict[int, list] = {}
        self.name = name
        self.identity = identity
        self.zero = zero
        self.facts = dict(facts or {})
        self.info = dict(info or {})

    def mul(self, a, b):
        return self._product(a, b)

    def level(self, n):
        got = self._levels.get(n)
        if got is None:
            got = self._levels[n] = list(self._level(n))
        return got

    def size(self, x):
        return self._size(x)

    @property
    def max_level(self):
        return self._max_level

    def canonicalize(self, x):
        return self._canon(x) if self._canon else x

    def contains(self, x):
        return self._contains(x) if self._contains else True

    def neighbours(self, x):
        return list(self._neighbours(x)) if self._neighbours else []

    def fmt(self, x):
        return self._fmt(x) if self._fmt else str(x)


@dataclass
class SubsemigroupView:
    """A subsemigroup ``T`` of ``parent``.

    Finite case: ``members`` lists the elements.  Symbolic case: ``predicate``
    decides membership and ``enumerator`` yields members in a fixed order.
    """

    parent: Semigroup
    members: frozenset | None = None
    predicate: Callable | None = None
    enumerator: Callable[[], Iterable] | None = None
    _first: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.members is not None:
            self.members = frozenset(self.members)
        elif self.predicate is None or self.enumerator is None:
            raise ContractError("a subsemigroup needs members, or a predicate and an enumerator")

    @property
    def is_finite(self):
        return self.members is not None

    def __contains__(self, x):
        if self.members is not None:
            return x in self.members
        return bool(self.predicate(x))

    def elements(self):
        if self.members is None:
            raise ContractError("symbolic subsemigroup has no finite element list")
        return sorted(self.members, key=sort_key)

    def first(self, count):
        if self.members is not None:
            return self.elements()[:count]
        if len(self._first) < count:
            self._first = list(itertools.islice(self.enumerator(), count))
        return self._first[:count]

    def elements_or_first(self, budget):
        return self.elements() if self.members is not None else self.first(budget)

    def check_closed(self, budget: int | None = None):
        """Raise :class:`ContractError` with the offending pair if not closed."""
        xs = self.elements_or_first(budget)
        for a in xs:
            for b in xs:
                c = self.parent.mul(a, b)
                if c not in self:
                    raise ContractError(f"subsemigroup not closed: {a!r}*{b!r} = {c!r}")


# ---------------------------------------------------------------------------
# adjunctions


def _adjoin_finite(S: FiniteSemigroup, absorbing: bool, token: str, label) -> FiniteSemigroup:
    n = S.order
    rows = [list(row) + [n if absorbing else i] for i, row in enumerate(S.table)]
    rows.append([n] * (n + 1) if absorbing else list(range(n + 1)))
    names = list(S.names) if S.names is not None else [str(i) for i in range(n)]
    while token in names:
        token += "'"
    labels = list(S.labels) + [label] if S.labels is not None else None
    return FiniteSemigroup(rows, names + [token], labels=labels, validate=False,
                           name=f"{S.name}{'^0' if absorbing else '^1'}")


def _adjoin_symbolic(S: SymbolicSemigroup, absorbing: bool, new) -> SymbolicSemigroup:
    def product(a, b):
        if a == new:
            return new if absorbing else b
        if b == new:
            return new if absorbing else a
        return S.mul(a, b)

    def level(n):
        base = S.level(n)
        return [new] + list(base) if n == 0 else base

    def size(x):
        return 0 if x == new else S.size(x)

    def fmt(x):
        return ("0" if absorbing else "1") if x == new else S.fmt(x)

    return SymbolicSemigroup(
        product, level, size, name=f"{S.name}{'^0' if absorbing else '^1'}",
        canonicalize=lambda x: x if x == new else S.canonicalize(x),
        identity=S.identity if absorbing else new,
        zero=new if absorbing else S.zero,
        contains=lambda x: x == new or S.contains(x),
        neighbours=lambda x: [] if x == new else S.neighbours(x),
        fmt=fmt, max_level=S.max_level,
        info={"adjoined": "zero" if absorbing else "identity", "base": S},
    )


def adjoin_identity(S: Semigroup, force: bool = False) -> Semigroup:
    """``S^1``: return ``S`` if it already has an identity, else add one.

    For symbolic semigroups only a declared identity counts.  ``force`` always
    adds a fresh identity.
    """
    if S.identity is not None and not force:
        return S
    if S.is_finite:
        return _adjoin_finite(S, False, "1", ONE)
    return _adjoin_symbolic(S, False, ONE)


def adjoin_zero(S: Semigroup, force: bool = False) -> Semigroup:
    """``S^0``, dual to :func:`adjoin_identity`."""
    if S.zero is not None and not force:
        return S
    if S.is_finite:
        return _adjoin_finite(S, True, "0", ZERO)
    return _adjoin_symbolic(S, True, ZERO)


def _as_map(f):
    if callable(f):
        return f
    if isinstance(f, Mapping):
        return f.__getitem__
    seq = list(f)
    return seq.__getitem__


def is_homomorphism(f, S: Semigroup, T: Semigroup, budget: int | None = None) -> Verdict:
    """Check ``f(ab) == f(a)f(b)``.

    Returns ``verified`` (finite ``S``, every pair), ``verified-up-to-budget``
    (the first ``budget`` enumerated elements of a symbolic ``S``) or
    ``counterexample`` with the first failing pair.  Raises
    :class:`DomainError` when ``f`` leaves ``T``.
    """
    fm = _as_map(f)
    xs = S.elements_or_first(budget)
    image = {}
    for x in xs:
        y = fm(x)
        if not T.contains(y):
            raise DomainError(f"f({S.fmt(x)}) = {y!r} is not an element of {T.name or 'T'}")
        image[x] = y
    for a in xs:
        for b in xs:
            if fm(S.mul(a, b)) != T.mul(image[a], image[b]):
                return Verdict("counterexample", (a, b))
    if S.is_finite:
        return Verdict("verified")
    return Verdict("verified-up-to-budget", budget=budget)
