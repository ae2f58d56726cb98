"""Construction spec files.

A spec file holds one ``[section]`` naming the construction, followed by
``key = value`` lines.  ``#`` starts a comment.  Operands are table files
(paths relative to the spec file) or witness names.  Elements of a finite
operand are written by table name or by index.

::

    [semidirect]            S, T; phi.<t> = images of S's elements | identity | constant <s>
    [schutzenberger]        S, T
    [rees] / [rees0]        S, I, J (counts), P = rows over J separated by ';'
    [brandt]                S, I
    [bruck-reilly]          M, theta = identity | constant <s> | images
    [free-product]          factors = <operand> <operand> ..., monoid = yes|no
    [strong-semilattice]    Y, component.<y> = operand, phi.<y>.<z> = images (for y >= z)

A ``phi`` key left out for some ``t`` (or a diagonal transition ``y -> y``)
defaults to the identity map.
"""
from __future__ import annotations

from pathlib import Path

from .constructions import (EndoAction, SemilatticeDecomposition, brandt_extension, bruck_reilly,
                            free_product, monoid_free_product, rees_matrix, rees_matrix_zero,
                            schutzenberger_product, semidirect_product, strong_semilattice)
from .core import ContractError, DomainError, FiniteSemigroup
from .tableio import read_table
from .witnesses import canonical_name, witness

__all__ = ["SpecError", "SECTIONS", "parse_spec", "load_spec", "build"]

SECTIONS = ("semidirect", "schutzenberger", "rees", "rees0", "brandt", "bruck-reilly",
            "free-product", "strong-semilattice")


class SpecError(ValueError):
    """A spec file that cannot be read or does not describe a construction."""


def parse_spec(text: str) -> tuple:
    """Return ``(section, {key: value})``."""
    section, values = None, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            if section is not None:
                raise SpecError(f"line {lineno}: only one section per file")
            section = line[1:-1].strip()
            if section not in SECTIONS:
                raise SpecError(f"line {lineno}: unknown section [{section}]")
            continue
        if section is None:
            raise SpecError(f"line {lineno}: key before any section")
        key, eq, value = line.partition("=")
        if not eq:
            raise SpecError(f"line {lineno}: expected key = value")
        key = key.strip()
        if key in values:
            raise SpecError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value.strip()
    if section is None:
        raise SpecError("no section found")
    return section, values


def _operand(token: str, base: Path):
    path = base / token
    if path.is_file():
        return read_table(path)
    try:
        canonical_name(token)
    except DomainError:
        raise SpecError(f"operand {token!r} is neither a file nor a witness name") from None
    return witness(token)


def _element(S, token: str):
    if not isinstance(S, FiniteSemigroup):
        raise SpecError(f"elements can only be named in finite operands, got {token!r}")
    if S.names is not None and token in S.names:
        return S.names.index(token)
    try:
        i = int(token)
    except ValueError:
        raise SpecError(f"{token!r} is not an element of {S.name}") from None
    if not 0 <= i < S.order:
        raise SpecError(f"index {i} out of range for {S.name}")
    return i


def _map(S, T, value: str):
    """A map ``S -> T`` from ``identity``, ``constant <t>`` or a list of images."""
    words = value.split()
    if words == ["identity"]:
        return lambda s: s
    if len(words) == 2 and words[0] == "constant":
        c = _element(T, words[1])
        return lambda s: c
    if not isinstance(S, FiniteSemigroup):
        raise SpecError("image lists need a finite domain")
    if len(words) != S.order:
        raise SpecError(f"map needs {S.order} images, got {len(words)}")
    images = [_element(T, w) for w in words]
    return lambda s: images[s]


def _require(values, *keys):
    missing = [k for k in keys if k not in values]
    if missing:
        raise SpecError(f"missing key(s): {', '.join(missing)}")


def _count(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise SpecError(f"index set size must be an integer, got {value!r}") from None
    if n <= 0:
        raise SpecError("index sets must be non-empty")
    return n


def _matrix(S, value: str):
    return [[_element(S, tok) for tok in row.split()] for row in value.split(";")]


def build(section: str, values: dict, base=".") :
    """Build the semigroup a parsed spec describes.  Validator failures raise
    :class:`~rnoeth.core.ConstructionError`."""
    base = Path(base)
    op = lambda key: _operand(values[key], base)
    if section == "semidirect":
        _require(values, "S", "T")
        S, T = op("S"), op("T")
        extra = [k for k in values if k not in ("S", "T") and not k.startswith("phi.")]
        if extra:
            raise SpecError(f"unknown key(s): {', '.join(extra)}")
        maps = {_element(T, k[4:]): _map(S, S, v) for k, v in values.items() if k.startswith("phi.")}
        ident = lambda s: s
        phi = EndoAction(S, T, lambda t, s: maps.get(t, ident)(s), "spec")
        return semidirect_product(S, T, phi)
    if section == "schutzenberger":
        _require(values, "S", "T")
        return schutzenberger_product(op("S"), op("T"))
    if section in ("rees", "rees0"):
        _require(values, "S", "I", "J", "P")
        S = op("S")
        I, J = _count(values["I"]), _count(values["J"])
        builder = rees_matrix if section == "rees" else rees_matrix_zero
        return builder(S, I, J, _matrix(S, values["P"]))
    if section == "brandt":
        _require(values, "S", "I")
        return brandt_extension(op("S"), _count(values["I"]))
    if section == "bruck-reilly":
        _require(values, "M")
        M = op("M")
        return bruck_reilly(M, _map(M, M, values.get("theta", "identity")))
    if section == "free-product":
        _require(values, "factors")
        factors = [_operand(tok, base) for tok in values["factors"].split()]
        if values.get("monoid", "no") == "yes":
            return monoid_free_product(factors)
        return free_product(factors)
    if section == "strong-semilattice":
        _require(values, "Y")
        Y = op("Y")
        if not isinstance(Y, FiniteSemigroup):
            raise SpecError("Y must be a finite table")
        comps = {}
        for y in Y.elements():
            key = f"component.{Y.fmt(y)}"
            if key not in values:
                key = f"component.{y}"
            _require(values, key)
            comps[y] = _operand(values[key], base)
        trans = {}
        for k, v in values.items():
            if k.startswith("phi."):
                parts = k.split(".")
                if len(parts) != 3:
                    raise SpecError(f"transition key must be phi.<y>.<z>, got {k!r}")
                y, z = _element(Y, parts[1]), _element(Y, parts[2])
                trans[(y, z)] = _map(comps[y], comps[z], v)
        ident = lambda s: s

        def transitions(y, z):
            if (y, z) in trans:
                return trans[(y, z)]
            if y == z:
                return ident
            raise ContractError(f"no transition given for {Y.fmt(y)} >= {Y.fmt(z)}")

        D = SemilatticeDecomposition(Y, comps, transitions, name="spec")
        return strong_semilattice(D)
    raise SpecError(f"unknown section [{section}]")


def load_spec(path):
    """Parse and build the construction in the spec file at ``path``."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    section, values = parse_spec(text)
    return build(section, values, path.parent)
