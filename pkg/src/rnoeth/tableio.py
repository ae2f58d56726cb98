"""Reading and writing Cayley table files.

Format::

    sgp-table 1
    <n>
    <n rows of n space-separated 0-based indices>
    name <index> <token>      (optional, any number)

Lines starting with ``#`` are ignored.  Files are written with LF endings.
"""
from __future__ import annotations

from .core import FiniteSemigroup, MalformedTable, NotAssociative, validate_associativity

MAGIC = "sgp-table 1"


def parse_table(text: str, *, validate: bool = True) -> FiniteSemigroup:
    """Parse a table file.  Malformed input raises :class:`MalformedTable`;
    a well-formed but non-associative table raises :class:`NotAssociative`
    when ``validate`` is set."""
    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    lines = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or lines[0].strip() != MAGIC:
        raise MalformedTable(f"first line must be {MAGIC!r}")
    if len(lines) < 2:
        raise MalformedTable("missing order line")
    try:
        n = int(lines[1])
    except ValueError:
        raise MalformedTable(f"bad order line {lines[1]!r}") from None
    if n <= 0:
        raise MalformedTable("order must be positive")
    if len(lines) < 2 + n:
        raise MalformedTable(f"expected {n} table rows, found {len(lines) - 2}")
    rows = []
    for r, ln in enumerate(lines[2:2 + n]):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise MalformedTable(f"row {r}: non-integer entry") from None
        if len(row) != n:
            raise MalformedTable(f"row {r}: expected {n} entries, found {len(row)}")
        rows.append(row)
    names = None
    for ln in lines[2 + n:]:
        parts = ln.split(maxsplit=2)
        if len(parts) != 3 or parts[0] != "name":
            raise MalformedTable(f"unexpected trailing line {ln!r}")
        try:
            idx = int(parts[1])
        except ValueError:
            raise MalformedTable(f"bad name index in {ln!r}") from None
        if not 0 <= idx < n:
            raise MalformedTable(f"name index {idx} out of range")
        if names is None:
            names = [str(i) for i in range(n)]
        names[idx] = parts[2].strip()
    sg = FiniteSemigroup(rows, names, validate=False)
    if validate:
        report = validate_associativity(sg.array)
        if not report.valid:
            raise NotAssociative(report.triple)
    return sg


def read_table(path, *, validate: bool = True) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        sg = parse_table(fh.read(), validate=validate)
    sg.name = str(path)
    return sg


def format_table(S: FiniteSemigroup) -> str:
    out = [MAGIC, str(S.order)]
    out += [" ".join(str(v) for v in row) for row in S.table]
    if S.names is not None:
        for i, nm in enumerate(S.names):
            if nm != str(i):
                out.append(f"name {i} {nm.replace(' ', '_')}")
    return "\n".join(out) + "\n"


def write_table(S: FiniteSemigroup, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_table(S))
