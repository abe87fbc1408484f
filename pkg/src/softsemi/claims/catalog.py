"""The claim catalog: every statement about semi-open soft sets we check.

Each claim function receives an ``Ops`` backend followed by its set
variables (bit patterns) and, for point claims, a universe index. It
returns ``(lhs, rhs)``; the claim's ``form`` decides how they are compared.
For boolean sides ``inclusion`` means implication.

Statuses:
    believed-true   follows from the definitions; a failure is a bug here
    suspect         the printed statement is doubtful; the verdict decides
    ambiguous       one of several readings of an unclear relation
    corrected-typo  repaired form of a statement whose printed form is kept
                    alongside under a ``-printed`` id
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

STATUSES = ("believed-true", "suspect", "ambiguous", "corrected-typo")
FORMS = ("equality", "inclusion", "iff", "existence")
GUARDS = ("none", "open", "semi-open")


@dataclass(frozen=True)
class Claim:
    id: str
    arity: int
    point: bool
    guard: str
    form: str
    status: str
    anchor: str  # the statement in operator notation
    fn: Callable = field(compare=False, repr=False)

    def __post_init__(self):
        assert 0 <= self.arity <= 2
        assert self.guard in GUARDS and self.form in FORMS and self.status in STATUSES


_REGISTRY: list[Claim] = []


def claim(id, arity, form, status, anchor, guard="none", point=False):
    def register(fn):
        _REGISTRY.append(Claim(id, arity, point, guard, form, status, anchor, fn))
        return fn

    return register


def _all(it):
    for v in it:
        if not v:
            return False
    return True


def _any(it):
    for v in it:
        if v:
            return True
    return False


# -- semi-interior ----------------------------------------------------------

@claim("T3.5.1", 0, "equality", "believed-true", "ints(Phi) = Phi and ints(X) = X")
def _t351(o):
    return (o.int_s(0), o.int_s(o.full)), (0, o.full)


@claim("T3.5.2", 1, "inclusion", "believed-true", "ints(F) <= F")
def _t352(o, f):
    return o.int_s(f), f


@claim("T3.5.3", 1, "equality", "corrected-typo", "ints(ints(F)) = ints(F)")
def _t353(o, f):
    return o.int_s(o.int_s(f)), o.int_s(f)


@claim("T3.5.3-printed", 1, "equality", "suspect", "ints(ints(F)) = F")
def _t353p(o, f):
    return o.int_s(o.int_s(f)), f


@claim("T3.5.4", 1, "iff", "believed-true", "F semi-open <=> ints(F) = F")
def _t354(o, f):
    return o.sso(f), o.int_s(f) == f


@claim("T3.5.5", 2, "inclusion", "believed-true", "F <= G => ints(F) <= ints(G)")
def _t355(o, f, g):
    return o.sub(f, g), o.sub(o.int_s(f), o.int_s(g))


@claim("T3.5.6", 2, "inclusion", "believed-true", "ints(F) | ints(G) <= ints(F | G)")
def _t356(o, f, g):
    return o.int_s(f) | o.int_s(g), o.int_s(f | g)


@claim("T3.6", 2, "equality", "suspect", "ints(F) & ints(G) = ints(F & G)")
def _t36(o, f, g):
    return o.int_s(f) & o.int_s(g), o.int_s(f & g)


# -- semi-exterior ----------------------------------------------------------

@claim("T3.9.1", 1, "equality", "believed-true", "exts(F) = ints(F')")
def _t391(o, f):
    return o.ext_s(f), o.int_s(o.comp(f))


@claim("T3.9.2", 2, "equality", "suspect", "exts(F | G) = exts(F) & exts(G)")
def _t392(o, f, g):
    return o.ext_s(f | g), o.ext_s(f) & o.ext_s(g)


@claim("T3.9.3", 2, "inclusion", "believed-true", "exts(F) | exts(G) <= exts(F & G)")
def _t393(o, f, g):
    return o.ext_s(f) | o.ext_s(g), o.ext_s(f & g)


@claim(
    "T3.9.3-strictness", 2, "equality", "suspect", "exts(F) | exts(G) = exts(F & G)"
)
def _t393s(o, f, g):
    return o.ext_s(f) | o.ext_s(g), o.ext_s(f & g)


# -- semi-boundary ----------------------------------------------------------

@claim("R3.12", 1, "equality", "believed-true", "bds(F) = bds(F')")
def _r312(o, f):
    return o.bd_s(f), o.bd_s(o.comp(f))


@claim("T3.13.1", 1, "equality", "believed-true", "cls(F) = ints(F) | bds(F)")
def _t3131(o, f):
    return o.cl_s(f), o.int_s(f) | o.bd_s(f)


@claim(
    "T3.13.2", 1, "equality", "believed-true",
    "bds(F) = cls(F) & cls(F') = cls(F) - ints(F)",
)
def _t3132(o, f):
    b, c = o.bd_s(f), o.cl_s(f)
    return (b, b), (c & o.cl_s(o.comp(f)), c & o.comp(o.int_s(f)))


@claim(
    "T3.13.3", 1, "equality", "believed-true",
    "bds(F)' = ints(F) | ints(F') = ints(F) | exts(F)",
)
def _t3133(o, f):
    nb = o.comp(o.bd_s(f))
    return (nb, nb), (o.int_s(f) | o.int_s(o.comp(f)), o.int_s(f) | o.ext_s(f))


@claim("T3.13.4", 1, "equality", "believed-true", "ints(F) = F - bds(F)")
def _t3134(o, f):
    return o.int_s(f), f & o.comp(o.bd_s(f))


@claim(
    "R3.14.1-printed", 1, "equality", "suspect",
    "bds(F) is the smallest semi-closed set containing F",
)
def _r3141p(o, f):
    b = o.bd_s(f)
    smallest = o.ssc(b) and o.sub(f, b) and _all(
        o.sub(b, o.comp(s)) for s in o.family if o.sub(f, o.comp(s))
    )
    return smallest, True


@claim(
    "R3.14.1", 1, "equality", "corrected-typo",
    "cls(F) is the smallest semi-closed set containing F",
)
def _r3141(o, f):
    c = o.cl_s(f)
    smallest = o.ssc(c) and o.sub(f, c) and _all(
        o.sub(c, o.comp(s)) for s in o.family if o.sub(f, o.comp(s))
    )
    return smallest, True


@claim("R3.14.2-printed", 1, "equality", "suspect", "bds(F) = bds(F)'")
def _r3142p(o, f):
    return o.bd_s(f), o.comp(o.bd_s(f))


@claim("R3.14.2", 1, "equality", "corrected-typo", "bds(F) = bds(F')")
def _r3142(o, f):
    return o.bd_s(f), o.bd_s(o.comp(f))


@claim("T3.15.1", 1, "iff", "believed-true", "F semi-open <=> F & bds(F) = Phi")
def _t3151(o, f):
    return o.sso(f), f & o.bd_s(f) == 0


@claim("T3.15.2", 1, "iff", "believed-true", "F semi-closed <=> bds(F) <= F")
def _t3152(o, f):
    return o.ssc(f), o.sub(o.bd_s(f), f)


@claim("T3.16.1", 1, "equality", "believed-true", "bds(F) & ints(F) = Phi")
def _t3161(o, f):
    return o.bd_s(f) & o.int_s(f), 0


@claim("T3.16.2", 1, "equality", "suspect", "cls(ints(F)) = F - bds(F)")
def _t3162(o, f):
    return o.cl_s(o.int_s(f)), f & o.comp(o.bd_s(f))


@claim("T3.16.2-corrected", 1, "equality", "corrected-typo", "cls(F) - bds(F) = ints(F)")
def _t3162c(o, f):
    return o.cl_s(f) & o.comp(o.bd_s(f)), o.int_s(f)


@claim(
    "T3.17.1", 2, "inclusion", "suspect",
    "bds(F | G) <= (bds(F) & cls(G')) | (bds(G) & cls(F'))",
)
def _t3171(o, f, g):
    rhs = (o.bd_s(f) & o.cl_s(o.comp(g))) | (o.bd_s(g) & o.cl_s(o.comp(f)))
    return o.bd_s(f | g), rhs


@claim(
    "T3.17.1b", 2, "inclusion", "suspect",
    "bds(F | G) <= (bds(F) & G') | (bds(G) & cls(F'))",
)
def _t3171b(o, f, g):
    rhs = (o.bd_s(f) & o.comp(g)) | (o.bd_s(g) & o.cl_s(o.comp(f)))
    return o.bd_s(f | g), rhs


@claim(
    "T3.17.2", 2, "inclusion", "suspect",
    "bds(F & G) <= (bds(F) & cls(G)) | (bds(G) & cls(F))",
)
def _t3172(o, f, g):
    rhs = (o.bd_s(f) & o.cl_s(g)) | (o.bd_s(g) & o.cl_s(f))
    return o.bd_s(f & g), rhs


@claim("T3.18", 1, "equality", "suspect", "bds(bds(bds(F))) = bds(bds(F))")
def _t318(o, f):
    bb = o.bd_s(o.bd_s(f))
    return o.bd_s(bb), bb


# The relation printed between the two sides is unreadable; each reading is
# its own claim.

def _t3191_sides(o, f, g):
    return f & o.comp(o.int_s(g)), o.interior(f) & o.comp(o.int_s(g))


def _t3192_sides(o, f):
    return o.bd_s(o.int_s(f)), o.bd_s(f)


for _suffix, _form, _swap in (("", "equality", False), ("-sub", "inclusion", False),
                              ("-sup", "inclusion", True)):
    _rel = {"": "=", "-sub": "<=", "-sup": ">="}[_suffix]

    def _mk1(swap=_swap):
        def fn(o, f, g):
            a, b = _t3191_sides(o, f, g)
            return (b, a) if swap else (a, b)
        return fn

    def _mk2(swap=_swap):
        def fn(o, f):
            a, b = _t3192_sides(o, f)
            return (b, a) if swap else (a, b)
        return fn

    claim("T3.19.1" + _suffix, 2, _form, "ambiguous",
          f"F - ints(G) {_rel} int(F) - ints(G), F, G open", guard="open")(_mk1())
    claim("T3.19.2" + _suffix, 1, _form, "ambiguous",
          f"bds(ints(F)) {_rel} bds(F), F open", guard="open")(_mk2())


@claim("T3.20", 1, "iff", "believed-true", "bds(F) = Phi <=> F semi-open and semi-closed")
def _t320(o, f):
    return o.bd_s(f) == 0, o.sso(f) and o.ssc(f)


# -- semi-neighbourhoods ----------------------------------------------------
# "-d32" reads a neighbourhood of x as any soft set containing a semi-open
# set that has x; "-d321" reads it as a semi-open set having x.

@claim(
    "P3.3", 1, "inclusion", "believed-true",
    "F semi-open, x in every slice of F => F is a semi-nbd of x",
    guard="semi-open", point=True,
)
def _p33(o, f, j):
    return o.has(f, j), o.nbd(j, f)


@claim("P3.4.1", 0, "existence", "believed-true", "every x has a semi-nbd", point=True)
def _p341(o, j):
    return _any(o.nbd(j, g) for g in o.all), True


@claim(
    "P3.4.2", 2, "inclusion", "suspect",
    "F, G semi-nbds of x => F & G semi-nbd of x", point=True,
)
def _p342(o, f, g, j):
    return o.nbd(j, f) and o.nbd(j, g), o.nbd(j, f & g)


@claim(
    "P3.4.3", 2, "inclusion", "believed-true",
    "F semi-nbd of x, F <= G => G semi-nbd of x", point=True,
)
def _p343(o, f, g, j):
    return o.nbd(j, f) and o.sub(f, g), o.nbd(j, g)


@claim(
    "P3.22.1", 1, "inclusion", "believed-true",
    "G in nbds(x) => x in G", guard="semi-open", point=True,
)
def _p3221(o, g, j):
    return o.has(g, j), o.has(g, j)


@claim(
    "P3.22.2-d321", 2, "inclusion", "suspect",
    "G, H in nbds(x) => G & H in nbds(x)", guard="semi-open", point=True,
)
def _p3222a(o, g, h, j):
    return o.has(g, j) and o.has(h, j), o.sso(g & h) and o.has(g & h, j)


@claim(
    "P3.22.2-d32", 2, "inclusion", "suspect",
    "G, H semi-nbds of x => G & H semi-nbd of x", point=True,
)
def _p3222b(o, g, h, j):
    return o.nbd(j, g) and o.nbd(j, h), o.nbd(j, g & h)


@claim(
    "P3.22.3-d321", 2, "inclusion", "suspect",
    "G in nbds(x), G <= H => H in nbds(x)", point=True,
)
def _p3223a(o, g, h, j):
    return o.sso(g) and o.has(g, j) and o.sub(g, h), o.sso(h) and o.has(h, j)


@claim(
    "P3.22.3-d32", 2, "inclusion", "suspect",
    "G semi-nbd of x, G <= H => H semi-nbd of x", point=True,
)
def _p3223b(o, g, h, j):
    return o.nbd(j, g) and o.sub(g, h), o.nbd(j, h)


@claim(
    "P3.22.4", 1, "inclusion", "believed-true",
    "G in nbds(x) => some H in nbds(x) has G in nbds(y) for every y in H",
    guard="semi-open", point=True,
)
def _p3224(o, g, j):
    found = _any(
        o.has(h, j) and _all(o.sso(g) and o.has(g, y) for y in o.pts_iter(h))
        for h in o.family
    )
    return o.has(g, j), found


@claim(
    "P3.22.5-d321", 1, "iff", "suspect",
    "G open <=> G contains a semi-open nbd of each of its points",
)
def _p3225a(o, g):
    return o.is_open(g), _all(o.nbd(j, g) for j in o.pts_iter(g))


@claim(
    "P3.22.5-d32", 1, "iff", "suspect",
    "G open <=> G contains a semi-nbd of each of its points",
)
def _p3225b(o, g):
    each = _all(
        _any(o.sub(n, g) and o.nbd(j, n) for n in o.all) for j in o.pts_iter(g)
    )
    return o.is_open(g), each


@claim(
    "P3.22.5-semi", 1, "iff", "suspect",
    "G semi-open <=> G contains a semi-open nbd of each of its points",
)
def _p3225c(o, g):
    return o.sso(g), _all(o.nbd(j, g) for j in o.pts_iter(g))


# Neighbourhood bases are taken to be the whole semi-open system at x.

@claim(
    "P3.24.1", 1, "inclusion", "suspect",
    "H in base(x) => x in H", guard="semi-open", point=True,
)
def _p3241(o, h, j):
    return o.has(h, j), o.has(h, j)


@claim(
    "P3.24.2", 2, "inclusion", "suspect",
    "F1, F2 in base(x) => some F3 in base(x) has F3 <= F1 & F2",
    guard="semi-open", point=True,
)
def _p3242(o, f1, f2, j):
    return o.has(f1, j) and o.has(f2, j), o.nbd(j, f1 & f2)


@claim(
    "P3.24.3", 1, "inclusion", "suspect",
    "H in base(x) => some F0 in base(x) has, for each z in F0, some I in base(z) with I <= H",
    guard="semi-open", point=True,
)
def _p3243(o, h, j):
    found = _any(
        o.has(f0, j) and _all(o.nbd(z, h) for z in o.pts_iter(f0)) for f0 in o.family
    )
    return o.has(h, j), found


@claim(
    "P3.24.4", 1, "iff", "suspect",
    "G semi-open <=> G contains a basic nbd of each of its points",
)
def _p3244(o, g):
    return o.sso(g), _all(o.nbd(j, g) for j in o.pts_iter(g))


def catalog() -> list[Claim]:
    """All claims in fixed catalog order."""
    return list(_REGISTRY)


def by_id() -> dict[str, Claim]:
    return {c.id: c for c in _REGISTRY}


def select(ids=None, statuses=None) -> list[Claim]:
    """Catalog subset, catalog order kept. Unknown ids raise KeyError."""
    table = by_id()
    if ids:
        missing = [i for i in ids if i not in table]
        if missing:
            raise KeyError(f"unknown claim ids: {', '.join(missing)}")
        wanted = set(ids)
        out = [c for c in _REGISTRY if c.id in wanted]
    else:
        out = list(_REGISTRY)
    if statuses:
        out = [c for c in out if c.status in statuses]
    return out


# Claims that follow from the definitions; any failure means a bug here.
BELIEVED_TRUE_SUITE = (
    "T3.5.1", "T3.5.2", "T3.5.3", "T3.5.4", "T3.5.5", "T3.5.6",
    "T3.9.1", "T3.9.3",
    "T3.13.1", "T3.13.2", "T3.13.3", "T3.13.4",
    "R3.12", "T3.15.1", "T3.15.2", "T3.16.1", "T3.20",
    "P3.3", "P3.4.1", "P3.4.3", "P3.22.1",
)

SUSPECT_SUITE = (
    "T3.6", "T3.9.2", "T3.16.2", "T3.17.1", "T3.17.1b", "T3.17.2", "T3.18",
    "T3.19.1", "T3.19.1-sub", "T3.19.1-sup", "T3.19.2", "T3.19.2-sub", "T3.19.2-sup",
    "P3.4.2", "P3.22.2-d321", "P3.22.2-d32", "P3.22.3-d321", "P3.22.3-d32",
    "P3.22.5-d321", "P3.22.5-d32", "P3.24.1", "P3.24.2", "P3.24.3", "P3.24.4",
)
