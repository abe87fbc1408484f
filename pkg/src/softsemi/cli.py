"""Command-line front end.

Exit codes: 0 success / everything matched, 1 counterexample or mismatch
found, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import builtin
from .claims import FuzzConfig, Space, catalog, check_all, fuzz, select
from .claims.engine import CaseCapError
from .core import SoftSet, complement, empty, full, intersect, union
from .report import (
    render_fuzz,
    render_fuzz_tsv,
    render_value,
    render_verdicts,
    render_verdicts_tsv,
)
from .semi import (
    FamilyCapError,
    enumerate_semi_family,
    is_semi_open,
    semi_boundary,
    semi_closure,
    semi_exterior,
    semi_interior,
)
from .spacefile import (
    SpaceFileError,
    parse_set_expr,
    parse_space_file,
    render_space_file,
    space_file_for,
)
from .topology import ClosureOverflow, TopologyError, closure, interior, validate

OK, FOUND, BAD_INPUT = 0, 1, 2

OPERATORS = {
    "int": lambda top, fam, f: interior(top, f),
    "cl": lambda top, fam, f: closure(top, f),
    "ints": lambda top, fam, f: semi_interior(fam, f),
    "cls": lambda top, fam, f: semi_closure(fam, f),
    "exts": lambda top, fam, f: semi_exterior(fam, f),
    "bds": lambda top, fam, f: semi_boundary(fam, f),
}


class InputError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_space_file(text, path=path)
    except SpaceFileError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_topology(path: str):
    sf = _load(path)
    try:
        return sf, sf.topology()
    except TopologyError as exc:
        raise InputError(f"{path}: not a soft topology: {exc}") from None


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def cmd_validate(args, out) -> int:
    sf = _load(args.file)
    v = sf.violation()
    if v is None:
        top = sf.topology()
        out.write(f"ok: soft topology with {len(top)} members\n")
        return OK
    out.write(f"violation: {v.describe()}\n")
    return FOUND


def cmd_op(args, out) -> int:
    sf, top = _load_topology(args.file)
    try:
        f = parse_set_expr(args.set, sf.context, sf.sets)
    except SpaceFileError as exc:
        raise InputError(str(exc)) from None
    fam = enumerate_semi_family(top) if args.op not in ("int", "cl") else None
    result = OPERATORS[args.op](top, fam, f)
    out.write(f"{args.op}({f.render()}) = {result.render()}\n")
    return OK


def cmd_family(args, out) -> int:
    _, top = _load_topology(args.file)
    fam = enumerate_semi_family(top, cap=args.cap)
    out.write(f"{len(fam)} semi-open soft sets\n")
    for s in fam.semi_open:
        out.write(f"{s.key} {s.render()}\n")
    return OK


def _claims(args):
    try:
        return select(args.claim or None, args.status or None)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def cmd_check(args, out) -> int:
    _, top = _load_topology(args.file)
    claims = _claims(args)
    space = Space(top)
    verdicts = check_all(space, claims, limit=args.limit)
    if args.tsv:
        out.write(render_verdicts_tsv(verdicts))
    else:
        out.write(render_verdicts(space, verdicts, timing=args.time))
    return FOUND if any(not v.passed for v in verdicts) else OK


def cmd_fuzz(args, out) -> int:
    claims = _claims(args)
    try:
        config = FuzzConfig(
            seed=args.seed,
            spaces=args.spaces,
            universe=args.universe,
            params=args.params,
            generators=args.generators,
            closure_cap=args.closure_cap,
            limit=args.limit,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = fuzz(config, claims, workers=args.workers)
    out.write(render_fuzz_tsv(report) if args.tsv else render_fuzz(report))
    if args.emit:
        emit_certificates(report, Path(args.emit))
    return FOUND if report.total_failures else OK


def emit_certificates(report, outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for s in report.summaries.values():
        if s.certificate is None:
            continue
        top, cx = s.certificate
        extra = dict(zip(("F", "G"), cx.sets))
        sf = space_file_for(top, extra)
        header = f"# certificate for {s.claim_id}"
        if cx.point is not None:
            header += f" at x={cx.point}"
        (outdir / f"{s.claim_id}.space").write_text(header + "\n" + render_space_file(sf))


def repro_values(which: str) -> list[tuple[str, object, object]]:
    """``(label, computed, expected)`` triples for a built-in worked example."""
    top = builtin.ex38()
    ctx = top.context
    g = builtin.ex38_sets(ctx)
    fam = enumerate_semi_family(top)

    def s(**slices):
        return SoftSet.from_slices(ctx, {e: xs.split() for e, xs in slices.items()})

    if which == "ex38":
        f = s(e1="h1", e2="h3")
        fc = s(e1="h2 h3", e2="h1 h2")
        return [
            ("family is a soft topology", validate(ctx, top.members) is None, True),
            ("F'", complement(f), fc),
            ("(e1:{h2,h3}, e2:{h1,h2}) semi-open", is_semi_open(top, fc), True),
            ("exts(F) = ints(F')", semi_exterior(fam, f), fc),
        ]
    if which == "ex310":
        f = s(e1="h3", e2="h3")
        gg = s(e1="h1 h2", e2="h1 h2")
        ext_fg = semi_exterior(fam, intersect(f, gg))
        ext_f = semi_exterior(fam, f)
        ext_g = semi_exterior(fam, gg)
        both = union(ext_f, ext_g)
        return [
            ("F & G", intersect(f, gg), empty(ctx)),
            ("exts(F & G)", ext_fg, full(ctx)),
            ("exts(F)", ext_f, g["G1"]),
            ("exts(G)", ext_g, empty(ctx)),
            ("exts(F) | exts(G)", both, g["G1"]),
            ("exts(F) | exts(G) != exts(F & G)", both != ext_fg, True),
        ]
    raise InputError(f"unknown example {which!r}")


def cmd_repro(args, out) -> int:
    rows = repro_values(args.example)
    bad = 0
    for label, got, want in rows:
        ok = got == want
        bad += not ok
        out.write(
            f"{'match' if ok else 'MISMATCH':<8} {label}: {render_value(got)}"
            + ("" if ok else f" expected {render_value(want)}")
            + "\n"
        )
    out.write(f"{len(rows) - bad}/{len(rows)} values match\n")
    return OK if bad == 0 else FOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="softsemi", description="Semi-open sets in finite soft topological spaces."
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the topology axioms of a space file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    o = sub.add_parser("op", help="apply one operator to a soft set")
    o.add_argument("file")
    o.add_argument("--op", required=True, choices=sorted(OPERATORS))
    o.add_argument("--set", required=True, help="'e1=h1,h2; e2=h3' or a declared set name")
    o.set_defaults(func=cmd_op)

    f = sub.add_parser("family", help="list every semi-open soft set")
    f.add_argument("file")
    f.add_argument("--cap", type=int, default=16, help="max |X|*|E| to enumerate")
    f.set_defaults(func=cmd_family)

    def claim_filters(sp):
        sp.add_argument("--claim", action="append", metavar="ID", help="repeatable")
        sp.add_argument("--status", action="append", help="repeatable status filter")
        sp.add_argument("--tsv", action="store_true")

    c = sub.add_parser("check", help="check claims exhaustively on a space file")
    c.add_argument("file")
    c.add_argument("--limit", type=int, default=3, help="counterexamples kept per claim")
    c.add_argument("--time", action="store_true", help="print per-claim wall time")
    claim_filters(c)
    c.set_defaults(func=cmd_check)

    z = sub.add_parser("fuzz", help="check claims across seeded random spaces")
    z.add_argument("--seed", type=int, default=0)
    z.add_argument("--spaces", type=int, default=100)
    z.add_argument("--universe", type=_range, default=(1, 3), metavar="LO:HI")
    z.add_argument("--params", type=_range, default=(1, 2), metavar="LO:HI")
    z.add_argument("--generators", type=_range, default=(0, 4), metavar="LO:HI")
    z.add_argument("--closure-cap", type=int, default=4096)
    z.add_argument("--limit", type=int, default=1)
    z.add_argument("--workers", type=int, default=1)
    z.add_argument("--emit", metavar="DIR", help="write one certificate space file per failing claim")
    claim_filters(z)
    z.set_defaults(func=cmd_fuzz)

    r = sub.add_parser("repro", help="recompute the built-in worked examples")
    r.add_argument("example", choices=["ex38", "ex310"])
    r.set_defaults(func=cmd_repro)

    sub.add_parser("catalog", help="list claim ids").set_defaults(func=cmd_catalog)
    return p


def cmd_catalog(args, out) -> int:
    for c in catalog():
        pt = "+x" if c.point else ""
        out.write(f"{c.id:<18} {c.status:<15} {c.form:<10} arity={c.arity}{pt} "
                  f"guard={c.guard:<9} {c.anchor}\n")
    return OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args, out)
    except (InputError, FamilyCapError, CaseCapError, ClosureOverflow) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
