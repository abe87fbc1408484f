"""Soft sets over a fixed finite context.

A soft set assigns to every parameter a subset of the universe. With a
fixed context the whole thing is a ``|E| x |X|`` bit matrix, stored here as
a single Python int whose binary expansion (most significant bit first) is
the params-major canonical key. Sorting by ``bits`` is therefore the same
as sorting by canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

MAX_BITS = 20


class ContextError(ValueError):
    """Raised for malformed contexts or operands drawn from different contexts."""


@dataclass(frozen=True)
class SoftContext:
    universe: tuple[str, ...]
    params: tuple[str, ...]
    _xpos: dict = field(init=False, repr=False, compare=False, hash=False)
    _epos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "params", tuple(self.params))
        for label, names in (("universe", self.universe), ("params", self.params)):
            if not names:
                raise ContextError(f"{label} must be non-empty")
            for name in names:
                if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                    raise ContextError(f"bad {label} name {name!r}")
            if len(set(names)) != len(names):
                raise ContextError(f"duplicate names in {label}")
        if self.nbits > MAX_BITS:
            raise ContextError(
                f"|X|*|E| = {self.nbits} exceeds the hard cap of {MAX_BITS}"
            )
        object.__setattr__(self, "_xpos", {x: i for i, x in enumerate(self.universe)})
        object.__setattr__(self, "_epos", {e: i for i, e in enumerate(self.params)})

    @property
    def width(self) -> int:
        return len(self.universe)

    @property
    def nbits(self) -> int:
        return len(self.universe) * len(self.params)

    @property
    def full_bits(self) -> int:
        return (1 << self.nbits) - 1

    def element_index(self, x: str) -> int:
        try:
            return self._xpos[x]
        except KeyError:
            raise ContextError(f"unknown element {x!r}") from None

    def param_index(self, e: str) -> int:
        try:
            return self._epos[e]
        except KeyError:
            raise ContextError(f"unknown parameter {e!r}") from None

    # Bit layout helpers. Parameter i occupies a |X|-wide field; element j
    # within a field sits at offset |X|-1-j so the key string reads in
    # universe order.

    def slice_shift(self, i: int) -> int:
        return (len(self.params) - 1 - i) * self.width

    def slice_mask(self, bits: int, i: int) -> int:
        """Universe mask (element j at bit |X|-1-j) of parameter ``i``."""
        return (bits >> self.slice_shift(i)) & ((1 << self.width) - 1)

    def replicate(self, umask: int) -> int:
        """Soft-set bits having ``umask`` in every slice."""
        out = 0
        for i in range(len(self.params)):
            out |= umask << self.slice_shift(i)
        return out

    def points_mask(self, bits: int) -> int:
        """Universe mask of elements present in every slice."""
        m = (1 << self.width) - 1
        for i in range(len(self.params)):
            m &= self.slice_mask(bits, i)
        return m

    def element_bit(self, j: int) -> int:
        return 1 << (self.width - 1 - j)

    def elements_of(self, umask: int) -> frozenset[str]:
        return frozenset(x for j, x in enumerate(self.universe) if umask & self.element_bit(j))

    def umask_of(self, xs: Iterable[str]) -> int:
        m = 0
        for x in xs:
            m |= self.element_bit(self.element_index(x))
        return m


@dataclass(frozen=True)
class SoftSet:
    context: SoftContext
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.context.full_bits:
            raise ContextError(f"bit pattern {self.bits} out of range for context")

    @classmethod
    def from_slices(cls, ctx: SoftContext, slices: Mapping[str, Iterable[str]]) -> "SoftSet":
        """Build from ``{param: elements}``; omitted params get the empty slice."""
        bits = 0
        for e, xs in slices.items():
            bits |= ctx.umask_of(xs) << ctx.slice_shift(ctx.param_index(e))
        return cls(ctx, bits)

    @classmethod
    def from_key(cls, ctx: SoftContext, key: str) -> "SoftSet":
        if len(key) != ctx.nbits or set(key) - {"0", "1"}:
            raise ContextError(f"bad canonical key {key!r}")
        return cls(ctx, int(key, 2))

    @property
    def key(self) -> str:
        return format(self.bits, f"0{self.context.nbits}b")

    def slice(self, e: str) -> frozenset[str]:
        ctx = self.context
        return ctx.elements_of(ctx.slice_mask(self.bits, ctx.param_index(e)))

    def slices(self) -> dict[str, frozenset[str]]:
        return {e: self.slice(e) for e in self.context.params}

    def render(self) -> str:
        ctx = self.context
        parts = []
        for i, e in enumerate(ctx.params):
            m = ctx.slice_mask(self.bits, i)
            xs = [x for j, x in enumerate(ctx.universe) if m & ctx.element_bit(j)]
            parts.append(f"{e}:{{{','.join(xs)}}}")
        return "(" + ", ".join(parts) + ")"

    def __str__(self) -> str:
        return self.render()

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return is_subset(self, other)


def _same(f: SoftSet, g: SoftSet) -> SoftContext:
    if f.context is not g.context and f.context != g.context:
        raise ContextError("soft sets belong to different contexts")
    return f.context


def empty(ctx: SoftContext) -> SoftSet:
    return SoftSet(ctx, 0)


def full(ctx: SoftContext) -> SoftSet:
    return SoftSet(ctx, ctx.full_bits)


def all_soft_sets(ctx: SoftContext) -> list[SoftSet]:
    """Every soft set of the context, in canonical order."""
    return [SoftSet(ctx, b) for b in range(1 << ctx.nbits)]


def union(f: SoftSet, g: SoftSet) -> SoftSet:
    return SoftSet(_same(f, g), f.bits | g.bits)


def intersect(f: SoftSet, g: SoftSet) -> SoftSet:
    return SoftSet(_same(f, g), f.bits & g.bits)


def difference(f: SoftSet, g: SoftSet) -> SoftSet:
    return SoftSet(_same(f, g), f.bits & ~g.bits)


def complement(f: SoftSet) -> SoftSet:
    return SoftSet(f.context, f.context.full_bits ^ f.bits)


def is_subset(f: SoftSet, g: SoftSet) -> bool:
    """Slice-wise containment ``F(e) <= G(e)`` for every parameter."""
    _same(f, g)
    return f.bits & ~g.bits == 0


def equals(f: SoftSet, g: SoftSet) -> bool:
    _same(f, g)
    return f.bits == g.bits


def points(f: SoftSet) -> frozenset[str]:
    """Elements lying in every slice of ``f``."""
    ctx = f.context
    return ctx.elements_of(ctx.points_mask(f.bits))


def singleton(ctx: SoftContext, x: str) -> SoftSet:
    return SoftSet(ctx, ctx.replicate(ctx.element_bit(ctx.element_index(x))))


def restrict(f: SoftSet, ys: Iterable[str]) -> SoftSet:
    ctx = f.context
    return SoftSet(ctx, f.bits & ctx.replicate(ctx.umask_of(ys)))
