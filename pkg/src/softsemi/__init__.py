"""Exhaustive computation with semi-open sets in finite soft topological spaces."""

from .core import (
    ContextError,
    SoftContext,
    SoftSet,
    all_soft_sets,
    complement,
    difference,
    empty,
    equals,
    full,
    intersect,
    is_subset,
    points,
    restrict,
    singleton,
    union,
)
from .semi import (
    SemiFamily,
    enumerate_semi_family,
    is_semi_closed,
    is_semi_nbd,
    is_semi_open,
    semi_boundary,
    semi_closure,
    semi_exterior,
    semi_interior,
    semi_nbd_base,
    semi_open_nbd_system,
)
from .topology import (
    ClosureOverflow,
    SoftTopology,
    TopologyError,
    closure,
    discrete,
    fingerprint,
    generate,
    indiscrete,
    interior,
    is_closed,
    is_open,
    validate,
)

__version__ = "0.1.0"
