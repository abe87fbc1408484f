"""Exhaustive law checks shared by the unit tests and the acceptance module.

Each function returns a list of failure descriptions; empty means the laws
hold on every soft set (or pair / triple) of the input.
"""

from itertools import product

from softsemi import (
    SoftContext,
    all_soft_sets,
    closure,
    complement,
    difference,
    enumerate_semi_family,
    equals,
    full,
    empty,
    generate,
    interior,
    intersect,
    is_open,
    is_closed,
    is_semi_closed,
    is_subset,
    points,
    semi_boundary,
    semi_closure,
    semi_interior,
    union,
    validate,
)
from softsemi.claims import FuzzConfig, SplitMix64, generate_space

from oracles import BruteSpace, all_topologies, from_pairs, pairs


def small_contexts(max_bits=6):
    out = []
    for nx in range(1, max_bits + 1):
        for ne in range(1, max_bits // nx + 1):
            out.append(
                SoftContext(tuple(f"h{i + 1}" for i in range(nx)), tuple(f"e{i + 1}" for i in range(ne)))
            )
    return out


def spaces_for(ctx, random_count=25, seed=7):
    """Topologies to sweep on ``ctx``: all of them for tiny contexts,
    otherwise indiscrete, discrete and seeded random closures."""
    from softsemi import discrete, indiscrete

    if ctx.nbits <= 3:
        return [generate(ctx, [from_pairs(ctx, m) for m in fam]) for fam in all_topologies(ctx)]
    tops = [indiscrete(ctx), discrete(ctx)]
    rng = SplitMix64(seed * 1000 + ctx.nbits * 10 + ctx.width)
    cfg = FuzzConfig(universe=(ctx.width, ctx.width), params=(len(ctx.params),) * 2, generators=(1, 4))
    for _ in range(random_count):
        tops.append(generate_space(rng, cfg))
    return tops


def boolean_laws(ctx, triples=True):
    bad = []
    ss = all_soft_sets(ctx)
    phi, top = empty(ctx), full(ctx)
    for f in ss:
        if complement(complement(f)) != f:
            bad.append(f"involution {f}")
        if union(f, f) != f or intersect(f, f) != f:
            bad.append(f"idempotence {f}")
        if union(phi, f) != f or intersect(top, f) != f:
            bad.append(f"identity {f}")
        if not is_subset(f, f) or not is_subset(phi, f) or not is_subset(f, top):
            bad.append(f"order bounds {f}")
    for f, g in product(ss, repeat=2):
        if union(f, g) != union(g, f) or intersect(f, g) != intersect(g, f):
            bad.append(f"commutativity {f} {g}")
        if complement(union(f, g)) != intersect(complement(f), complement(g)):
            bad.append(f"de morgan {f} {g}")
        if complement(intersect(f, g)) != union(complement(f), complement(g)):
            bad.append(f"de morgan dual {f} {g}")
        if difference(f, g) != intersect(f, complement(g)):
            bad.append(f"difference {f} {g}")
        sub, sup = is_subset(f, g), is_subset(g, f)
        if (sub and sup) != equals(f, g):
            bad.append(f"antisymmetry {f} {g}")
        if sub != (union(f, g) == g):
            bad.append(f"order/union {f} {g}")
        if points(intersect(f, g)) != points(f) & points(g):
            bad.append(f"points of meet {f} {g}")
        if sub and not points(f) <= points(g):
            bad.append(f"points monotone {f} {g}")
        if len(bad) > 20:
            return bad
    if triples:
        for f, g in product(ss, repeat=2):
            fg, fg_meet = union(f, g), intersect(f, g)
            f_sub_g = is_subset(f, g)
            for h in ss:
                if union(fg, h) != union(f, union(g, h)):
                    bad.append(f"union associativity {f} {g} {h}")
                if intersect(fg_meet, h) != intersect(f, intersect(g, h)):
                    bad.append(f"intersection associativity {f} {g} {h}")
                if f_sub_g and is_subset(g, h) and not is_subset(f, h):
                    bad.append(f"transitivity {f} {g} {h}")
            if len(bad) > 20:
                return bad
    return bad


def topology_laws(top):
    bad = []
    ctx = top.context
    ss = all_soft_sets(ctx)
    brute = BruteSpace(ctx, top.members)
    if validate(ctx, top.members) is not None:
        bad.append("generated family fails validation")
    ints = {f.bits: interior(top, f) for f in ss}
    cls = {f.bits: closure(top, f) for f in ss}
    for f in ss:
        i, c = ints[f.bits], cls[f.bits]
        if not is_open(top, i) or not is_subset(i, f) or ints[i.bits] != i:
            bad.append(f"interior open/deflationary/idempotent at {f}")
        if not is_closed(top, c) or not is_subset(f, c) or cls[c.bits] != c:
            bad.append(f"closure closed/inflationary/idempotent at {f}")
        if c != complement(interior(top, complement(f))):
            bad.append(f"duality at {f}")
        if i != from_pairs(ctx, brute.interior(pairs(f))) or c != from_pairs(ctx, brute.closure(pairs(f))):
            bad.append(f"definitional scan disagrees at {f}")
    for f, g in product(ss, repeat=2):
        if is_subset(f, g):
            if not is_subset(ints[f.bits], ints[g.bits]) or not is_subset(cls[f.bits], cls[g.bits]):
                bad.append(f"monotonicity {f} {g}")
    if generate(ctx, top.members) != top:
        bad.append("generate not idempotent")
    return bad


def semi_laws(top):
    bad = []
    ctx = top.context
    ss = all_soft_sets(ctx)
    fam = enumerate_semi_family(top)
    brute = BruteSpace(ctx, top.members)
    members = set(fam.member_bits)
    if 0 not in members or ctx.full_bits not in members:
        bad.append("family misses empty or full")
    if not set(top.member_bits) <= members:
        bad.append("open set not semi-open")
    for a in fam.member_bits:
        for b in fam.member_bits:
            if a | b not in members:
                bad.append("family not closed under union")
    ints = {f.bits: semi_interior(fam, f) for f in ss}
    cls = {f.bits: semi_closure(fam, f) for f in ss}
    for f in ss:
        i, c = ints[f.bits], cls[f.bits]
        if i not in fam or not is_subset(i, f) or ints[i.bits] != i:
            bad.append(f"semi-interior law at {f}")
        if not is_semi_closed(top, c) or not is_subset(f, c) or cls[c.bits] != c:
            bad.append(f"semi-closure law at {f}")
        if c != complement(ints[complement(f).bits]):
            bad.append(f"semi duality at {f}")
        if i != from_pairs(ctx, brute.semi_interior(pairs(f))):
            bad.append(f"semi-interior differs from maximal-subset scan at {f}")
        if c != from_pairs(ctx, brute.semi_closure(pairs(f))):
            bad.append(f"semi-closure differs from minimal-superset scan at {f}")
        if not is_semi_closed(top, semi_boundary(fam, f)):
            bad.append(f"semi-boundary not semi-closed at {f}")
        if (f in fam) != is_semi_closed(top, complement(f)):
            bad.append(f"complement characterization at {f}")
    for f, g in product(ss, repeat=2):
        if is_subset(f, g):
            if not is_subset(ints[f.bits], ints[g.bits]) or not is_subset(cls[f.bits], cls[g.bits]):
                bad.append(f"semi monotonicity {f} {g}")
    return bad
