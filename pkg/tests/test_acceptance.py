"""Acceptance criteria, one test each.

Every test records a ``criterion N PASS/FAIL: ...`` line that is printed in
the terminal summary, then asserts.
"""

import time

from softsemi import (
    all_soft_sets,
    complement,
    discrete,
    enumerate_semi_family,
    semi_closure,
    semi_interior,
)
from softsemi.builtin import ex38
from softsemi.claims import (
    BELIEVED_TRUE_SUITE,
    SUSPECT_SUITE,
    FuzzConfig,
    Space,
    SplitMix64,
    by_id,
    catalog,
    check_all,
    fuzz,
    generate_space,
    replay,
    select,
    space_seeds,
)
from softsemi.cli import repro_values
from softsemi.core import SoftContext
from softsemi.report import render_fuzz, render_verdicts

from conftest import ACCEPTANCE_LINES
from laws import boolean_laws, semi_laws, small_contexts, spaces_for, topology_laws
from oracles import BruteSpace, from_pairs, pairs

REPRO_BUDGET = 1.0  # seconds
CATALOG_BUDGET = 10.0
FUZZ_BUDGET = 60.0
SEED = 0


def record(n, ok, detail):
    ACCEPTANCE_LINES[str(n)] = f"criterion {n} {'PASS' if ok else 'FAIL'}: {detail}"
    assert ok, detail


def fuzz_spaces(config):
    return [generate_space(SplitMix64(s), config) for s in space_seeds(config)]


def _repro(n, which):
    t0 = time.perf_counter()
    rows = repro_values(which)
    elapsed = time.perf_counter() - t0
    bad = [label for label, got, want in rows if got != want]
    record(
        n,
        not bad and elapsed < REPRO_BUDGET,
        f"repro {which}: {len(rows) - len(bad)}/{len(rows)} exact, {elapsed:.3f}s (< {REPRO_BUDGET}s)"
        + (f", mismatched {bad}" if bad else ""),
    )


def test_criterion_1_repro_ex38():
    _repro(1, "ex38")


def test_criterion_2_repro_ex310():
    _repro(2, "ex310")


def _oracle_discrepancies(top):
    ctx = top.context
    fam = enumerate_semi_family(top)
    brute = BruteSpace(ctx, top.members)
    bad = 0
    for f in all_soft_sets(ctx):
        want_int = from_pairs(ctx, brute.semi_interior(pairs(f)))
        got_cl = semi_closure(fam, f)
        dual = complement(from_pairs(ctx, brute.semi_interior(pairs(complement(f)))))
        bad += semi_interior(fam, f) != want_int
        bad += got_cl != dual
    return bad


def test_criterion_3_oracle_equivalence():
    spaces = [ex38()] + fuzz_spaces(FuzzConfig(seed=SEED, spaces=100))
    assert all(t.context.nbits <= 6 for t in spaces)
    bad = sum(_oracle_discrepancies(t) for t in spaces)
    record(3, bad == 0, f"semi_interior/semi_closure vs scan oracle on {len(spaces)} spaces: {bad} discrepancies")


def test_criterion_4_believed_true():
    claims = select(BELIEVED_TRUE_SUITE)
    local = [v.claim_id for v in check_all(Space(ex38()), claims) if not v.passed]
    report = fuzz(FuzzConfig(seed=SEED, spaces=100), claims)
    remote = [s.claim_id for s in report.summaries.values() if s.failures]
    ok = not local and not remote and report.checked == 100
    record(
        4,
        ok,
        f"{len(claims)} believed-true claims, failures on EX38 {local or 'none'}, "
        f"on {report.checked} fuzz spaces {remote or 'none'}",
    )


def test_criterion_5_suspect_verdicts():
    claims = select(SUSPECT_SUITE)
    table = by_id()
    config = FuzzConfig(seed=SEED, spaces=100)
    spaces = [ex38()] + fuzz_spaces(config)
    verdict_count = certs = unreplayed = 0
    failing = set()
    for top in spaces:
        space = Space(top)
        for v in check_all(space, claims, limit=3):
            verdict_count += 1
            assert v.passed or v.counterexamples
            if not v.passed:
                failing.add(v.claim_id)
            for cx in v.counterexamples:
                certs += 1
                unreplayed += not replay(Space(top), table[v.claim_id], cx)
    expected = len(claims) * len(spaces)

    ex = Space(ex38())
    same_check = render_verdicts(ex, check_all(ex, catalog())) == render_verdicts(
        Space(ex38()), check_all(Space(ex38()), catalog())
    )
    same_fuzz = render_fuzz(fuzz(config, claims)) == render_fuzz(fuzz(config, claims))
    ok = verdict_count == expected and unreplayed == 0 and same_check and same_fuzz
    record(
        5,
        ok,
        f"{verdict_count}/{expected} verdicts, {certs} certificates, {unreplayed} fail to replay, "
        f"reruns identical={same_check and same_fuzz}; failing: {', '.join(sorted(failing))}",
    )


def test_criterion_6_performance():
    ctx = SoftContext(("h1", "h2", "h3"), ("e1", "e2"))
    worst = 0.0
    for top in (ex38(), discrete(ctx)):
        t0 = time.perf_counter()
        check_all(Space(top), catalog())
        worst = max(worst, time.perf_counter() - t0)
    config = FuzzConfig(seed=SEED, spaces=100, universe=(3, 3), params=(2, 2))
    t0 = time.perf_counter()
    report = fuzz(config, catalog())
    fuzz_time = time.perf_counter() - t0
    ok = worst < CATALOG_BUDGET and fuzz_time < FUZZ_BUDGET and report.checked == 100
    record(
        6,
        ok,
        f"full catalog on 3x2 {worst:.2f}s (< {CATALOG_BUDGET}s), "
        f"fuzz of {report.checked} 3x2 spaces {fuzz_time:.2f}s (< {FUZZ_BUDGET}s)",
    )


def test_criterion_7_law_suites():
    contexts = small_contexts(6)
    failures = []
    spaces = 0
    for ctx in contexts:
        failures += boolean_laws(ctx)
        for top in spaces_for(ctx):
            spaces += 1
            failures += topology_laws(top) + semi_laws(top)
    record(
        7,
        not failures,
        f"{len(contexts)} contexts with |X|*|E| <= 6, {spaces} spaces: {len(failures)} law failures"
        + (f", first {failures[0]}" if failures else ""),
    )
