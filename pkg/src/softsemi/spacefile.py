"""Plain-text space files and inline set expressions.

Format (``#`` starts a comment)::

    universe h1 h2 h3
    params e1 e2
    set G1
      e1 = h1 h2
      e2 = h1 h2
    topology G1

A parameter omitted from a ``set`` block gets the empty slice. The empty and
absolute soft sets are always members of the declared topology.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import ContextError, SoftContext, SoftSet, empty, full
from .topology import SoftTopology, Violation, validate


class SpaceFileError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


@dataclass
class SpaceFile:
    context: SoftContext
    sets: dict[str, SoftSet] = field(default_factory=dict)
    topology_names: list[str] = field(default_factory=list)
    path: str | None = None

    def family(self) -> list[SoftSet]:
        return [empty(self.context), full(self.context)] + [
            self.sets[n] for n in self.topology_names
        ]

    def violation(self) -> Violation | None:
        return validate(self.context, self.family())

    def topology(self) -> SoftTopology:
        return SoftTopology(self.context, self.family())


def _tokens(raw: str) -> list[str]:
    return raw.replace(",", " ").split()


def parse_space_file(text: str, path: str | None = None) -> SpaceFile:
    universe = params = None
    ctx = None
    sets: dict[str, dict[str, list[str]]] = {}
    set_lines: dict[str, int] = {}
    current = None
    topo = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        indented = line[0].isspace()
        line = line.strip()
        if indented:
            if current is None:
                raise SpaceFileError("indented line outside a set block", lineno)
            if "=" not in line:
                raise SpaceFileError("expected 'param = elements'", lineno)
            e, xs = (p.strip() for p in line.split("=", 1))
            if e not in ctx.params:
                raise SpaceFileError(f"unknown parameter {e!r}", lineno)
            if e in sets[current]:
                raise SpaceFileError(f"parameter {e!r} given twice in set {current}", lineno)
            for x in _tokens(xs):
                if x not in ctx.universe:
                    raise SpaceFileError(f"unknown element {x!r}", lineno)
            sets[current][e] = _tokens(xs)
            continue
        current = None
        head, *rest = line.split()
        if head in ("universe", "params"):
            if (universe if head == "universe" else params) is not None:
                raise SpaceFileError(f"duplicate {head} line", lineno)
            if sets:
                raise SpaceFileError(f"{head} must precede set blocks", lineno)
            if head == "universe":
                universe = rest
            else:
                params = rest
            if universe is not None and params is not None:
                try:
                    ctx = SoftContext(tuple(universe), tuple(params))
                except ContextError as exc:
                    raise SpaceFileError(str(exc), lineno) from None
        elif head == "set":
            if ctx is None:
                raise SpaceFileError("set block before universe/params", lineno)
            if len(rest) != 1:
                raise SpaceFileError("expected 'set NAME'", lineno)
            name = rest[0]
            if name in sets:
                raise SpaceFileError(f"duplicate set name {name!r}", lineno)
            sets[name] = {}
            set_lines[name] = lineno
            current = name
        elif head == "topology":
            if topo is not None:
                raise SpaceFileError("duplicate topology line", lineno)
            topo = (rest, lineno)
        else:
            raise SpaceFileError(f"unknown directive {head!r}", lineno)
    if ctx is None:
        raise SpaceFileError("missing universe or params line")
    sf = SpaceFile(ctx, path=path)
    for name, slices in sets.items():
        sf.sets[name] = SoftSet.from_slices(ctx, slices)
    if topo is not None:
        names, lineno = topo
        if len(set(names)) != len(names):
            raise SpaceFileError("duplicate name in topology line", lineno)
        for n in names:
            if n not in sf.sets:
                raise SpaceFileError(f"topology names undefined set {n!r}", lineno)
        sf.topology_names = list(names)
    return sf


def render_space_file(sf: SpaceFile) -> str:
    ctx = sf.context
    out = [f"universe {' '.join(ctx.universe)}", f"params {' '.join(ctx.params)}"]
    for name, s in sf.sets.items():
        out.append(f"set {name}")
        for e in ctx.params:
            xs = [x for x in ctx.universe if x in s.slice(e)]
            out.append(f"  {e} = {' '.join(xs)}".rstrip())
    if sf.topology_names:
        out.append("topology " + " ".join(sf.topology_names))
    return "\n".join(out) + "\n"


def space_file_for(top: SoftTopology, extra: dict[str, SoftSet] | None = None) -> SpaceFile:
    """Space file declaring every non-trivial open set as ``O1, O2, ...``."""
    ctx = top.context
    sf = SpaceFile(ctx)
    for i, b in enumerate(b for b in top.member_bits if b not in (0, ctx.full_bits)):
        sf.sets[f"O{i + 1}"] = SoftSet(ctx, b)
        sf.topology_names.append(f"O{i + 1}")
    for name, s in (extra or {}).items():
        sf.sets[name] = s
    return sf


def parse_set_expr(text: str, ctx: SoftContext, named: dict[str, SoftSet] | None = None) -> SoftSet:
    """``e1=h1,h2; e2=h3`` (omitted params empty), or a declared set name."""
    text = text.strip()
    named = named or {}
    if text in named:
        return named[text]
    if "=" not in text:
        raise SpaceFileError(f"unknown set name {text!r}")
    slices: dict[str, list[str]] = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        if "=" not in part:
            raise SpaceFileError(f"bad slice {part.strip()!r}")
        e, xs = (p.strip() for p in part.split("=", 1))
        if e in slices:
            raise SpaceFileError(f"parameter {e!r} given twice")
        slices[e] = _tokens(xs)
    try:
        return SoftSet.from_slices(ctx, slices)
    except ContextError as exc:
        raise SpaceFileError(str(exc)) from None
