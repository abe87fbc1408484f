"""Built-in worked spaces."""

from __future__ import annotations

from .core import SoftContext, SoftSet, empty, full
from .topology import SoftTopology

EX38_SETS = {
    "G1": {"e1": "h1 h2", "e2": "h1 h2"},
    "G2": {"e1": "h2", "e2": "h1 h3"},
    "G3": {"e1": "h2 h3", "e2": "h1"},
    "G4": {"e1": "h2", "e2": "h1"},
    "G5": {"e1": "h1 h2", "e2": "h1 h2 h3"},
    "G6": {"e1": "h1 h2 h3", "e2": "h1 h2"},
    "G7": {"e1": "h2 h3", "e2": "h1 h3"},
}


def ex38_context() -> SoftContext:
    return SoftContext(("h1", "h2", "h3"), ("e1", "e2"))


def ex38_sets(ctx: SoftContext | None = None) -> dict[str, SoftSet]:
    ctx = ctx or ex38_context()
    return {
        name: SoftSet.from_slices(ctx, {e: xs.split() for e, xs in slices.items()})
        for name, slices in EX38_SETS.items()
    }


def ex38() -> SoftTopology:
    """Three points, two parameters, nine open sets."""
    ctx = ex38_context()
    return SoftTopology(ctx, [empty(ctx), full(ctx), *ex38_sets(ctx).values()])
