"""Semi-open soft sets and the operators built on them.

Everything here is computed from the enumerated family of semi-open sets
(or straight from the topology for the membership tests). No closed-form
shortcuts: the faster table path used by the claim checker lives in
``softsemi.claims.engine`` and is tested against this module.
"""

from __future__ import annotations

from .core import ContextError, SoftSet
from .topology import SoftTopology

DEFAULT_FAMILY_CAP = 16
HARD_FAMILY_CAP = 20


class FamilyCapError(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """Two characterizations that must agree did not."""


def is_semi_open_bits(top: SoftTopology, b: int) -> bool:
    for o, c in top.open_closures:
        if o & ~b == 0 and b & ~c == 0:
            return True
    return False


def is_semi_open(top: SoftTopology, f: SoftSet) -> bool:
    """True iff some open ``O`` has ``O <= F <= cl(O)``."""
    return is_semi_open_bits(top, top._own(f))


def _semi_closed_by_witness(top: SoftTopology, b: int) -> bool:
    full = top.context.full_bits
    for o in top.member_bits:
        c = full ^ o
        if top.interior_bits(c) & ~b == 0 and b & ~c == 0:
            return True
    return False


def is_semi_closed_bits(top: SoftTopology, b: int) -> bool:
    via_complement = is_semi_open_bits(top, top.context.full_bits ^ b)
    via_witness = _semi_closed_by_witness(top, b)
    if via_complement != via_witness:
        raise InconsistencyError(
            f"semi-closed characterizations disagree on {SoftSet(top.context, b)}"
        )
    return via_complement


def is_semi_closed(top: SoftTopology, f: SoftSet) -> bool:
    """Complement semi-open, cross-checked against the closed-witness sandwich
    ``int(C) <= F <= C``."""
    return is_semi_closed_bits(top, top._own(f))


class SemiFamily:
    """All semi-open soft sets of a topology, in canonical order.

    Operator results are memoized per bit pattern; the family itself never
    changes after construction.
    """

    def __init__(self, top: SoftTopology, member_bits: list[int]):
        self.topology = top
        self.context = top.context
        self.member_bits = tuple(member_bits)
        self._member_set = frozenset(member_bits)
        self.index = {SoftSet(self.context, b).key: i for i, b in enumerate(member_bits)}
        self._ints: dict[int, int] = {}
        self._cls: dict[int, int] = {}

    @property
    def semi_open(self) -> tuple[SoftSet, ...]:
        return tuple(SoftSet(self.context, b) for b in self.member_bits)

    def __len__(self):
        return len(self.member_bits)

    def __contains__(self, f: SoftSet) -> bool:
        return f.context == self.context and f.bits in self._member_set

    def contains_bits(self, b: int) -> bool:
        return b in self._member_set

    def _own(self, f: SoftSet) -> int:
        if f.context != self.context:
            raise ContextError("soft set from a different context")
        return f.bits

    def semi_interior_bits(self, b: int) -> int:
        out = self._ints.get(b)
        if out is None:
            out = 0
            for s in self.member_bits:
                if s & ~b == 0:
                    out |= s
            self._ints[b] = out
        return out

    def semi_closure_bits(self, b: int) -> int:
        out = self._cls.get(b)
        if out is None:
            full = self.context.full_bits
            out = full
            for s in self.member_bits:
                c = full ^ s
                if b & ~c == 0:
                    out &= c
            self._cls[b] = out
        return out

    def semi_exterior_bits(self, b: int) -> int:
        return self.semi_interior_bits(self.context.full_bits ^ b)

    def semi_boundary_bits(self, b: int) -> int:
        full = self.context.full_bits
        return full ^ (self.semi_interior_bits(b) | self.semi_exterior_bits(b))

    def is_semi_nbd_bits(self, j: int, g: int) -> bool:
        ctx = self.context
        xbit = ctx.element_bit(j)
        for s in self.member_bits:
            if s & ~g == 0 and ctx.points_mask(s) & xbit:
                return True
        return False

    def nbd_system_bits(self, j: int) -> list[int]:
        ctx = self.context
        xbit = ctx.element_bit(j)
        return [s for s in self.member_bits if ctx.points_mask(s) & xbit]


def enumerate_semi_family(top: SoftTopology, cap: int = DEFAULT_FAMILY_CAP) -> SemiFamily:
    """Scan every soft set of the context and keep the semi-open ones."""
    cap = min(cap, HARD_FAMILY_CAP)
    n = top.context.nbits
    if n > cap:
        raise FamilyCapError(f"|X|*|E| = {n} exceeds family enumeration cap {cap}")
    members = [b for b in range(1 << n) if is_semi_open_bits(top, b)]
    return SemiFamily(top, members)


def semi_interior(fam: SemiFamily, f: SoftSet) -> SoftSet:
    """Union of the semi-open members contained in ``f``."""
    return SoftSet(fam.context, fam.semi_interior_bits(fam._own(f)))


def semi_closure(fam: SemiFamily, f: SoftSet) -> SoftSet:
    """Intersection of the semi-closed soft sets containing ``f``."""
    return SoftSet(fam.context, fam.semi_closure_bits(fam._own(f)))


def semi_exterior(fam: SemiFamily, f: SoftSet) -> SoftSet:
    return SoftSet(fam.context, fam.semi_exterior_bits(fam._own(f)))


def semi_boundary(fam: SemiFamily, f: SoftSet) -> SoftSet:
    """Complement of ``semi_interior(F) | semi_exterior(F)``."""
    return SoftSet(fam.context, fam.semi_boundary_bits(fam._own(f)))


def is_semi_nbd(fam: SemiFamily, x: str, g: SoftSet) -> bool:
    """Is ``g`` a semi-neighbourhood of ``x``?

    Also answers whether ``x`` is a semi-interior point of ``g``: both ask for
    a semi-open ``F`` with ``x`` in every slice of ``F`` and ``F <= g``.
    """
    return fam.is_semi_nbd_bits(fam.context.element_index(x), fam._own(g))


def semi_open_nbd_system(fam: SemiFamily, x: str) -> list[SoftSet]:
    """Semi-open soft sets having ``x`` in every slice, canonical order."""
    j = fam.context.element_index(x)
    return [SoftSet(fam.context, b) for b in fam.nbd_system_bits(j)]


def semi_nbd_base(fam: SemiFamily, x: str) -> list[SoftSet]:
    """Canonical semi-neighbourhood base at ``x``: the whole semi-open system."""
    return semi_open_nbd_system(fam, x)
