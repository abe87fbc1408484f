"""Exhaustive claim evaluation over one soft topological space.

Claims are written against a small operator vocabulary (``Ops``). Two
backends implement it:

* ``ScanOps`` answers every query by scanning the semi-open family or the
  topology, exactly as the operators are defined. Slow, used for replay.
* ``TableOps`` precomputes per-bit-pattern tables once per space and makes
  the exhaustive sweep cheap. Its tables are checked against ``ScanOps``
  in the test suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any

from ..core import SoftSet
from ..semi import SemiFamily, enumerate_semi_family, is_semi_closed_bits
from ..topology import SoftTopology, fingerprint

DEFAULT_CASE_CAP = 1 << 20


class CaseCapError(ValueError):
    pass


class ScanOps:
    def __init__(self, fam: SemiFamily):
        ctx = fam.context
        top = fam.topology
        self.fam = fam
        self.top = top
        self.full = ctx.full_bits
        self.width = ctx.width
        self.xbits = tuple(ctx.element_bit(j) for j in range(ctx.width))
        self.family = fam.member_bits
        self.opens = top.member_bits
        self.all = range(1 << ctx.nbits)
        self._ctx = ctx

    def domain(self, guard: str):
        if guard == "none":
            return self.all
        if guard == "open":
            return self.opens
        if guard == "semi-open":
            return self.family
        raise ValueError(f"unknown guard {guard!r}")

    def comp(self, a):
        return self.full ^ a

    def sub(self, a, b):
        return a & ~b == 0

    def points(self, a):
        return self._ctx.points_mask(a)

    def has(self, a, j):
        return self._ctx.points_mask(a) & self.xbits[j] != 0

    def pts_iter(self, a):
        m = self.points(a)
        return [j for j in range(self.width) if m & self.xbits[j]]

    def is_open(self, a):
        return self.top.is_open_bits(a)

    def interior(self, a):
        return self.top.interior_bits(a)

    def closure(self, a):
        return self.top.closure_bits(a)

    def sso(self, a):
        return self.fam.contains_bits(a)

    def ssc(self, a):
        return is_semi_closed_bits(self.top, a)

    def int_s(self, a):
        return self.fam.semi_interior_bits(a)

    def cl_s(self, a):
        return self.fam.semi_closure_bits(a)

    def ext_s(self, a):
        return self.fam.semi_exterior_bits(a)

    def bd_s(self, a):
        return self.fam.semi_boundary_bits(a)

    def nbd(self, j, g):
        return self.fam.is_semi_nbd_bits(j, g)


class TableOps(ScanOps):
    """Table-driven backend.

    The semi-interior table comes from a subset recurrence: a set is its own
    semi-interior when it is semi-open, otherwise the semi-interior is the
    union of the semi-interiors of its one-bit-smaller subsets (every proper
    semi-open subset misses some bit, and unions of semi-open sets are
    semi-open). Everything else is derived from that table by complement.
    """

    def __init__(self, fam: SemiFamily):
        super().__init__(fam)
        n = self._ctx.nbits
        size = 1 << n
        fset = fam._member_set
        ints = [0] * size
        for b in range(1, size):
            if b in fset:
                ints[b] = b
                continue
            acc = 0
            rest = b
            while rest:
                low = rest & -rest
                acc |= ints[b ^ low]
                rest ^= low
            ints[b] = acc
        full = self.full
        self._ints = ints
        self._cls = [full ^ ints[full ^ b] for b in range(size)]
        self._bds = [full ^ (ints[b] | ints[full ^ b]) for b in range(size)]
        pts = [self._ctx.points_mask(b) for b in range(size)]
        self._pts = pts
        self._sso = [False] * size
        for s in fam.member_bits:
            self._sso[s] = True
        self._interior: list[int] | None = None
        self._closure: list[int] | None = None

    def points(self, a):
        return self._pts[a]

    def has(self, a, j):
        return self._pts[a] & self.xbits[j] != 0

    def sso(self, a):
        return self._sso[a]

    def ssc(self, a):
        return self._sso[self.full ^ a]

    def interior(self, a):
        if self._interior is None:
            self._interior = [self.top.interior_bits(b) for b in self.all]
        return self._interior[a]

    def closure(self, a):
        if self._closure is None:
            self._closure = [self.top.closure_bits(b) for b in self.all]
        return self._closure[a]

    def int_s(self, a):
        return self._ints[a]

    def cl_s(self, a):
        return self._cls[a]

    def ext_s(self, a):
        return self._ints[self.full ^ a]

    def bd_s(self, a):
        return self._bds[a]

    def nbd(self, j, g):
        return self._pts[self._ints[g]] & self.xbits[j] != 0


def holds(form: str, lhs, rhs) -> bool:
    if form in ("equality", "iff"):
        return lhs == rhs
    if form == "inclusion":
        if isinstance(lhs, bool):
            return (not lhs) or rhs
        return lhs & ~rhs == 0
    if form == "existence":
        return bool(lhs)
    raise ValueError(f"unknown claim form {form!r}")


@dataclass(frozen=True)
class Counterexample:
    claim_id: str
    index: int  # position in the canonical assignment order
    sets: tuple[SoftSet, ...]
    point: str | None
    lhs: Any
    rhs: Any

    @property
    def key(self) -> str:
        k = ",".join(s.key for s in self.sets) or "()"
        return f"{k}@{self.point}" if self.point is not None else k


@dataclass(frozen=True)
class Verdict:
    claim_id: str
    status: str
    fingerprint: str
    cases: int
    failures: int
    counterexamples: tuple[Counterexample, ...]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.failures == 0


class Space:
    """A topology with its semi-open family and evaluation backends."""

    def __init__(self, top: SoftTopology, family_cap: int | None = None):
        self.topology = top
        self.context = top.context
        kw = {} if family_cap is None else {"cap": family_cap}
        self.family = enumerate_semi_family(top, **kw)
        self.fingerprint = fingerprint(top)
        self._tables: TableOps | None = None
        self._scan: ScanOps | None = None

    @property
    def tables(self) -> TableOps:
        if self._tables is None:
            self._tables = TableOps(self.family)
        return self._tables

    @property
    def scan(self) -> ScanOps:
        if self._scan is None:
            self._scan = ScanOps(self.family)
        return self._scan


def count_cases(space: Space, claim) -> int:
    ops = space.scan
    n = len(ops.domain(claim.guard)) ** claim.arity
    return n * (space.context.width if claim.point else 1)


def _wrap(ctx, claim, sets, j, lhs, rhs, index) -> Counterexample:
    return Counterexample(
        claim.id,
        index,
        tuple(SoftSet(ctx, b) for b in sets),
        ctx.universe[j] if j is not None else None,
        _materialize(ctx, lhs),
        _materialize(ctx, rhs),
    )


def _materialize(ctx, v):
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return SoftSet(ctx, v)
    if isinstance(v, tuple):
        return tuple(_materialize(ctx, x) for x in v)
    return v


def _evaluate(claim, ops, sets, j):
    args = sets + (j,) if claim.point else sets
    return claim.fn(ops, *args)


def check(
    space: Space, claim, limit: int = 5, case_cap: int = DEFAULT_CASE_CAP, ops: ScanOps | None = None
) -> Verdict:
    """Evaluate ``claim`` on every assignment of ``space``.

    Assignments run in canonical order: set variables by canonical key
    (restricted to the guard's domain), point variable innermost in
    universe order. At most ``limit`` counterexamples are kept, the earliest
    in that order. ``ops`` overrides the table backend.
    """
    t0 = time.perf_counter()
    ops = ops or space.tables
    domain = ops.domain(claim.guard)
    cases = count_cases(space, claim)
    if cases > case_cap:
        raise CaseCapError(f"{claim.id}: {cases} cases exceed cap {case_cap}")
    pts = range(space.context.width) if claim.point else (None,)
    fn, form, point = claim.fn, claim.form, claim.point
    failures = 0
    found = []
    index = 0
    for sets in product(domain, repeat=claim.arity):
        for j in pts:
            lhs, rhs = fn(ops, *sets, j) if point else fn(ops, *sets)
            if not holds(form, lhs, rhs):
                failures += 1
                if len(found) < limit:
                    found.append(_wrap(space.context, claim, sets, j, lhs, rhs, index))
            index += 1
    return Verdict(
        claim.id,
        claim.status,
        space.fingerprint,
        cases,
        failures,
        tuple(found),
        time.perf_counter() - t0,
    )


def check_all(space: Space, claims, limit: int = 5, case_cap: int = DEFAULT_CASE_CAP):
    return [check(space, c, limit, case_cap) for c in claims]


def replay(space: Space, claim, cx: Counterexample) -> bool:
    """Re-evaluate ``claim`` on a stored assignment with the scan backend.

    Returns True when the failure reproduces.
    """
    ctx = space.context
    sets = tuple(s.bits for s in cx.sets)
    if len(sets) != claim.arity:
        raise ValueError("assignment arity does not match claim")
    for b in sets:
        if b not in space.scan.domain(claim.guard):
            raise ValueError("assignment violates the claim guard")
    j = ctx.element_index(cx.point) if cx.point is not None else None
    lhs, rhs = _evaluate(claim, space.scan, sets, j)
    return not holds(claim.form, lhs, rhs)
