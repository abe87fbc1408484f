"""Soft topologies as explicit, canonically ordered member lists."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable

from .core import ContextError, SoftContext, SoftSet

DEFAULT_CLOSURE_CAP = 4096


class TopologyError(ValueError):
    def __init__(self, violation: "Violation"):
        super().__init__(violation.describe())
        self.violation = violation


class ClosureOverflow(RuntimeError):
    """The generated family grew past the configured member cap."""


@dataclass(frozen=True)
class Violation:
    axiom: str  # "contains-empty" | "contains-full" | "union" | "intersection"
    operands: tuple[SoftSet, ...] = ()
    result: SoftSet | None = None

    def describe(self) -> str:
        if self.axiom in ("contains-empty", "contains-full"):
            what = "empty soft set" if self.axiom == "contains-empty" else "absolute soft set"
            return f"axiom {self.axiom}: {what} is missing"
        sym = "|" if self.axiom == "union" else "&"
        f, g = self.operands
        return f"axiom {self.axiom}: {f} {sym} {g} = {self.result} is missing"


def _check_family(ctx: SoftContext, family: Iterable[SoftSet]) -> list[int]:
    out = set()
    for f in family:
        if f.context != ctx:
            raise ContextError("family member from a different context")
        out.add(f.bits)
    return sorted(out)


def validate(ctx: SoftContext, family: Iterable[SoftSet]) -> Violation | None:
    """Return ``None`` if ``family`` is a soft topology, else the first violation.

    Pairs are scanned in canonical order so the reported violation is stable.
    """
    members = _check_family(ctx, family)
    present = set(members)
    if 0 not in present:
        return Violation("contains-empty")
    if ctx.full_bits not in present:
        return Violation("contains-full")
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a | b not in present:
                return Violation(
                    "union", (SoftSet(ctx, a), SoftSet(ctx, b)), SoftSet(ctx, a | b)
                )
            if a & b not in present:
                return Violation(
                    "intersection", (SoftSet(ctx, a), SoftSet(ctx, b)), SoftSet(ctx, a & b)
                )
    return None


class SoftTopology:
    """A validated soft topology. Treat instances as immutable."""

    def __init__(self, ctx: SoftContext, family: Iterable[SoftSet]):
        family = list(family)
        violation = validate(ctx, family)
        if violation is not None:
            raise TopologyError(violation)
        self._setup(ctx, _check_family(ctx, family))

    def _setup(self, ctx: SoftContext, bits: list[int]) -> None:
        self.context = ctx
        self._member_bits = tuple(bits)
        self._member_set = frozenset(bits)
        self._open_closures = None

    @classmethod
    def _trusted(cls, ctx: SoftContext, bits: Iterable[int]) -> "SoftTopology":
        """Wrap a family already known to satisfy the axioms."""
        top = cls.__new__(cls)
        top._setup(ctx, sorted(set(bits)))
        return top

    @property
    def members(self) -> tuple[SoftSet, ...]:
        return tuple(SoftSet(self.context, b) for b in self._member_bits)

    @property
    def member_bits(self) -> tuple[int, ...]:
        return self._member_bits

    @property
    def open_closures(self) -> tuple[tuple[int, int], ...]:
        """``(open set, its closure)`` pairs in canonical order."""
        if self._open_closures is None:
            self._open_closures = tuple((o, self.closure_bits(o)) for o in self._member_bits)
        return self._open_closures

    def __len__(self) -> int:
        return len(self._member_bits)

    def __eq__(self, other):
        if not isinstance(other, SoftTopology):
            return NotImplemented
        return self.context == other.context and self._member_bits == other._member_bits

    def __hash__(self):
        return hash((self.context, self._member_bits))

    def __repr__(self):
        return f"SoftTopology({len(self)} members over {self.context.nbits} bits)"

    def _own(self, f: SoftSet) -> int:
        if f.context != self.context:
            raise ContextError("soft set from a different context")
        return f.bits

    # bit-level kernels

    def is_open_bits(self, b: int) -> bool:
        return b in self._member_set

    def is_closed_bits(self, b: int) -> bool:
        return self.context.full_bits ^ b in self._member_set

    def interior_bits(self, b: int) -> int:
        out = 0
        for o in self._member_bits:
            if o & ~b == 0:
                out |= o
        return out

    def closure_bits(self, b: int) -> int:
        full = self.context.full_bits
        out = full
        for o in self._member_bits:
            c = full ^ o
            if b & ~c == 0:
                out &= c
        return out


def is_open(top: SoftTopology, f: SoftSet) -> bool:
    return top.is_open_bits(top._own(f))


def is_closed(top: SoftTopology, f: SoftSet) -> bool:
    return top.is_closed_bits(top._own(f))


def interior(top: SoftTopology, f: SoftSet) -> SoftSet:
    """Union of the open members contained in ``f``."""
    return SoftSet(top.context, top.interior_bits(top._own(f)))


def closure(top: SoftTopology, f: SoftSet) -> SoftSet:
    """Intersection of the closed soft sets containing ``f``."""
    return SoftSet(top.context, top.closure_bits(top._own(f)))


def closed_sets(top: SoftTopology) -> list[SoftSet]:
    full = top.context.full_bits
    return [SoftSet(top.context, b) for b in sorted(full ^ o for o in top.member_bits)]


def generate(
    ctx: SoftContext, generators: Iterable[SoftSet], cap: int = DEFAULT_CLOSURE_CAP
) -> SoftTopology:
    """Smallest soft topology containing ``generators``.

    Pairwise unions and intersections are added until nothing new appears.
    Raises ClosureOverflow once the family would exceed ``cap`` members.
    """
    family = set(_check_family(ctx, generators)) | {0, ctx.full_bits}
    if len(family) > cap:
        raise ClosureOverflow(f"generator family already exceeds cap {cap}")
    frontier = set(family)
    while frontier:
        new = set()
        for a in frontier:
            for b in family:
                for c in (a | b, a & b):
                    if c not in family and c not in new:
                        new.add(c)
        if not new:
            break
        family |= new
        if len(family) > cap:
            raise ClosureOverflow(f"closure exceeds cap {cap}")
        frontier = new
    return SoftTopology._trusted(ctx, sorted(family))


def indiscrete(ctx: SoftContext) -> SoftTopology:
    return SoftTopology._trusted(ctx, [0, ctx.full_bits])


def discrete(ctx: SoftContext) -> SoftTopology:
    if ctx.nbits > 16:
        raise ClosureOverflow("discrete topology too large to materialize")
    return SoftTopology._trusted(ctx, range(1 << ctx.nbits))


def fingerprint(top: SoftTopology) -> str:
    """Short stable hash of the context and canonical member list."""
    ctx = top.context
    n = ctx.nbits
    text = "|".join(
        [" ".join(ctx.universe), " ".join(ctx.params)]
        + [format(b, f"0{n}b") for b in top.member_bits]
    )
    return hashlib.sha256(text.encode()).hexdigest()[:16]
