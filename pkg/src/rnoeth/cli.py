"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (non-associative table, failed
validator, failed criterion), 2 input or format error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import phi_chain_search
from .constructions import MUTATIONS
from .core import (ConstructionError, ContractError, DomainError, MalformedTable, NotAssociative,
                   Semigroup)
from .green import antichain_width, find_ascending_chain, r_poset
from .specfile import SpecError, load_spec
from .tableio import format_table, read_table, write_table
from .verify import DEFAULT_SEED, SUITES, format_report, run_suite
from .witnesses import canonical_name, witness

__all__ = ["main", "build_parser"]


class InputError(Exception):
    pass


def _fail(msg, code):
    print(f"error: {msg}", file=sys.stderr)
    return code


def _load_table(path):
    try:
        return read_table(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _describe(S) -> str:
    e = "no identity" if S.identity is None else f"identity {S.fmt(S.identity)}"
    z = "no zero" if S.zero is None else f"zero {S.fmt(S.zero)}"
    return f"valid, order {S.order}, {e}, {z}"


def _target(token: str) -> Semigroup:
    """A witness name, a table file or a spec file."""
    path = Path(token)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        if text.lstrip().startswith("["):
            return load_spec(path)
        return _load_table(path)
    try:
        canonical_name(token)
    except DomainError:
        raise InputError(f"{token!r} is neither a file nor a witness name") from None
    return witness(token)


# ---------------------------------------------------------------------------


def cmd_check(args):
    S = _load_table(args.file)
    print(_describe(S))
    return 0


def cmd_green(args):
    S = _load_table(args.file)
    P = r_poset(S)
    if args.dot:
        Path(args.dot).write_text(P.to_dot(), encoding="utf-8")
        print(f"wrote {args.dot}")
    if args.antichain:
        print(antichain_width(P))
    if args.poset:
        print(P.describe())
    if args.classes or not (args.dot or args.antichain or args.poset):
        for c, members in enumerate(P.classes):
            print(f"class {c} (size {len(members)}): {P.label(c)}")
    return 0


def cmd_construct(args):
    try:
        S = load_spec(args.spec)
    except ConstructionError as exc:
        print(f"construction failed: {exc}")
        return 1
    if S.is_finite:
        if args.output:
            write_table(S, args.output)
            print(f"wrote {args.output}: order {S.order}")
        else:
            sys.stdout.write(format_table(S))
        return 0
    if args.output:
        print(f"note: {S.name or 'result'} is infinite; no table written")
    print(f"symbolic semigroup {S.name}")
    print("first elements: " + ", ".join(S.fmt(x) for x in S.first(args.first)))
    return 0


def cmd_chains(args):
    target = args.target
    if target and target[0] == "witness":
        target = target[1:]
    if len(target) != 1:
        raise InputError("chains takes one target (a witness name or a file)")
    S = _target(target[0])
    if args.phi:
        phi = S.info.get("action") or S.info.get("phi")
        if phi is None:
            raise InputError(f"{target[0]} carries no action; --phi needs W2 or a [semidirect] spec")
        c = phi_chain_search(phi, args.length, args.budget)
        if c is None:
            print(f"not found within budget {args.budget}")
            return 1
        print(c.describe(phi.domain.fmt, phi.index.fmt))
        return 0
    start = None
    if args.start is not None:
        matches = [x for x in S.elements_or_first(None if S.is_finite else args.budget)
                   if S.fmt(x) == args.start]
        if not matches:
            raise InputError(f"no element printed as {args.start!r}")
        start = matches[0]
    c = find_ascending_chain(S, args.length, args.budget, start=start)
    if c is None:
        if S.is_finite:
            print(f"not found (poset height {r_poset(S).height})")
        else:
            print(f"not found within budget {args.budget}")
        return 1
    print(c.describe(S.fmt))
    return 0


def cmd_witness(args):
    S = _target(args.name) if Path(args.name).is_file() else witness(args.name)
    print(S.name)
    if S.identity is not None:
        print(f"identity {S.fmt(S.identity)}")
    if S.zero is not None:
        print(f"zero {S.fmt(S.zero)}")
    for key, why in sorted(S.facts.items()):
        print(f"fact {key}: {why}")
    for x in S.first(args.n):
        print(S.fmt(x))
    return 0


def cmd_verify_paper(args):
    results = run_suite(args.suite, args.seed, args.inject_mutation)
    sys.stdout.write(format_report(results, timings=not args.no_timings))
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rnoeth", description="Green's R-structure of semigroups "
                                "and their constructions.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", help="validate a table file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("green", help="R-classes and their order for a table file")
    g.add_argument("file")
    g.add_argument("--classes", action="store_true", help="list R-classes (default)")
    g.add_argument("--poset", action="store_true", help="print the Hasse edges")
    g.add_argument("--dot", metavar="OUT", help="write the class poset as DOT")
    g.add_argument("--antichain", action="store_true", help="print the largest antichain size")
    g.set_defaults(func=cmd_green)

    k = sub.add_parser("construct", help="build a construction from a spec file")
    k.add_argument("spec")
    k.add_argument("-o", "--output", help="table file for a finite result")
    k.add_argument("--first", type=int, default=10, help="elements to show for a symbolic result")
    k.set_defaults(func=cmd_construct)

    ch = sub.add_parser("chains", help="search for a strictly ascending R-chain")
    ch.add_argument("target", nargs="+", help="[witness] NAME, a table file or a spec file")
    ch.add_argument("--length", type=int, default=10)
    ch.add_argument("--budget", type=int, default=200)
    ch.add_argument("--phi", action="store_true", help="search for a phi-chain instead")
    ch.add_argument("--start", help="bottom element, as printed")
    ch.set_defaults(func=cmd_chains)

    w = sub.add_parser("witness", help="show a registered example semigroup")
    w.add_argument("name")
    w.add_argument("-n", type=int, default=10, help="number of elements to list")
    w.set_defaults(func=cmd_witness)

    v = sub.add_parser("verify-paper", help="run the acceptance suite")
    v.add_argument("--suite", choices=sorted(SUITES), default="all")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    v.add_argument("--inject-mutation", choices=MUTATIONS, help="run with a deliberate bug")
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for opt in ("length", "budget", "n", "first"):
        if getattr(args, opt, 1) is not None and getattr(args, opt, 1) <= 0:
            return _fail(f"--{opt} must be positive", 2)
    try:
        return args.func(args)
    except NotAssociative as exc:
        print(f"not associative at {exc.triple}")
        return 1
    except (MalformedTable, SpecError, InputError, DomainError, ContractError) as exc:
        return _fail(exc, 2)
    except ConstructionError as exc:
        print(f"construction failed: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
