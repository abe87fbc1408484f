"""Seeded random soft topologies and catalog-wide fuzzing."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..core import MAX_BITS, SoftContext, SoftSet
from ..topology import (
    DEFAULT_CLOSURE_CAP,
    ClosureOverflow,
    SoftTopology,
    fingerprint,
    generate,
)
from .catalog import Claim, by_id
from .engine import DEFAULT_CASE_CAP, Counterexample, Space, check

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream; fixed constants so every port draws the same values."""

    def __init__(self, state: int):
        self.state = state & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def between(self, lo: int, hi: int) -> int:
        """Draw from ``[lo, hi]`` by modulo reduction."""
        return lo + self.next() % (hi - lo + 1)


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    spaces: int = 100
    universe: tuple[int, int] = (1, 3)
    params: tuple[int, int] = (1, 2)
    generators: tuple[int, int] = (0, 4)
    closure_cap: int = DEFAULT_CLOSURE_CAP
    limit: int = 1
    case_cap: int = DEFAULT_CASE_CAP

    def __post_init__(self):
        for name in ("universe", "params", "generators"):
            lo, hi = getattr(self, name)
            floor = 0 if name == "generators" else 1
            if not floor <= lo <= hi:
                raise ValueError(f"bad {name} range {lo}..{hi}")
        if self.universe[1] * self.params[1] > MAX_BITS:
            raise ValueError(f"largest draw exceeds {MAX_BITS} bits")
        if self.spaces < 0 or self.limit < 0:
            raise ValueError("spaces and limit must be non-negative")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must fit in 64 bits")


def space_seeds(config: FuzzConfig) -> list[int]:
    """One independent sub-seed per space, drawn from the master stream."""
    master = SplitMix64(config.seed)
    return [master.next() for _ in range(config.spaces)]


def generate_space(rng: SplitMix64, config: FuzzConfig) -> SoftTopology:
    """Draw |X|, |E|, a generator count and uniform generator bit matrices,
    in that order, and close them into a topology."""
    nx = rng.between(*config.universe)
    ne = rng.between(*config.params)
    k = rng.between(*config.generators)
    ctx = SoftContext(
        tuple(f"h{i + 1}" for i in range(nx)), tuple(f"e{i + 1}" for i in range(ne))
    )
    mask = ctx.full_bits
    gens = [SoftSet(ctx, rng.next() & mask) for _ in range(k)]
    return generate(ctx, gens, cap=config.closure_cap)


@dataclass
class ClaimSummary:
    claim_id: str
    status: str
    spaces: int = 0
    failing_spaces: int = 0
    cases: int = 0
    failures: int = 0
    certificate: tuple[SoftTopology, Counterexample] | None = None


@dataclass
class FuzzReport:
    config: FuzzConfig
    checked: int = 0
    skipped: list[tuple[int, str]] = field(default_factory=list)
    fingerprints: list[str] = field(default_factory=list)
    summaries: dict[str, ClaimSummary] = field(default_factory=dict)

    @property
    def total_failures(self) -> int:
        return sum(s.failures for s in self.summaries.values())


def _run_one(args):
    i, sub_seed, config, claim_ids = args
    table = by_id()
    try:
        top = generate_space(SplitMix64(sub_seed), config)
    except ClosureOverflow as exc:
        return i, None, str(exc)
    space = Space(top)
    verdicts = [check(space, table[c], config.limit, config.case_cap) for c in claim_ids]
    return i, top, verdicts


def fuzz(config: FuzzConfig, claims: list[Claim], workers: int = 1) -> FuzzReport:
    """Check ``claims`` on ``config.spaces`` random spaces.

    Results are merged in space order, so the report does not depend on
    ``workers``.
    """
    ids = [c.id for c in claims]
    jobs = [(i, s, config, ids) for i, s in enumerate(space_seeds(config))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_run_one(j) for j in jobs]

    report = FuzzReport(config)
    for c in claims:
        report.summaries[c.id] = ClaimSummary(c.id, c.status)
    for i, top, payload in sorted(results, key=lambda r: r[0]):
        if top is None:
            report.skipped.append((i, payload))
            continue
        report.checked += 1
        report.fingerprints.append(fingerprint(top))
        for v in payload:
            s = report.summaries[v.claim_id]
            s.spaces += 1
            s.cases += v.cases
            s.failures += v.failures
            if v.failures:
                s.failing_spaces += 1
                if s.certificate is None:
                    s.certificate = (top, v.counterexamples[0]) if v.counterexamples else None
    return report
