import pytest

from softsemi import fingerprint, validate
from softsemi.claims import (
    FuzzConfig,
    Space,
    SplitMix64,
    by_id,
    catalog,
    fuzz,
    generate_space,
    replay,
    select,
    space_seeds,
)
from softsemi.report import render_fuzz, render_fuzz_tsv


def test_splitmix_reference_stream():
    # published reference outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_between_stays_in_range():
    rng = SplitMix64(42)
    draws = [rng.between(2, 5) for _ in range(500)]
    assert set(draws) == {2, 3, 4, 5}


def test_same_seed_same_space():
    cfg = FuzzConfig(seed=9)
    a = generate_space(SplitMix64(space_seeds(cfg)[0]), cfg)
    b = generate_space(SplitMix64(space_seeds(cfg)[0]), cfg)
    assert fingerprint(a) == fingerprint(b)


def test_generated_spaces_validate():
    cfg = FuzzConfig(seed=3, spaces=50)
    for s in space_seeds(cfg):
        top = generate_space(SplitMix64(s), cfg)
        assert validate(top.context, top.members) is None


def test_degenerate_draw():
    cfg = FuzzConfig(universe=(1, 1), params=(1, 1), generators=(0, 3))
    for s in range(20):
        top = generate_space(SplitMix64(s), cfg)
        assert top.member_bits == (0, 1)


def test_fuzz_deterministic():
    cfg = FuzzConfig(seed=1, spaces=10)
    a = fuzz(cfg, catalog())
    b = fuzz(cfg, catalog())
    assert render_fuzz(a) == render_fuzz(b)
    assert render_fuzz_tsv(a) == render_fuzz_tsv(b)
    assert a.fingerprints == b.fingerprints


def test_fuzz_workers_do_not_change_report():
    cfg = FuzzConfig(seed=5, spaces=8)
    assert render_fuzz(fuzz(cfg, catalog(), workers=2)) == render_fuzz(fuzz(cfg, catalog()))


def test_fuzz_t352_never_fails():
    rep = fuzz(FuzzConfig(seed=2, spaces=100), select(["T3.5.2"]))
    s = rep.summaries["T3.5.2"]
    assert rep.checked == 100 and s.spaces == 100 and s.failures == 0


def test_fuzz_certificates_replay():
    rep = fuzz(FuzzConfig(seed=11, spaces=40), catalog())
    table = by_id()
    seen = 0
    for s in rep.summaries.values():
        if s.certificate is None:
            assert s.failures == 0
            continue
        top, cx = s.certificate
        assert replay(Space(top), table[s.claim_id], cx)
        seen += 1
    assert seen > 0


def test_overflow_is_skipped_and_counted():
    cfg = FuzzConfig(seed=4, spaces=10, universe=(3, 3), params=(2, 2), generators=(3, 4), closure_cap=4)
    rep = fuzz(cfg, select(["T3.5.2"]))
    assert rep.checked + len(rep.skipped) == 10
    assert len(rep.skipped) > 0
    assert "skipped space" in render_fuzz(rep)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"universe": (0, 2)},
        {"params": (3, 2)},
        {"generators": (-1, 2)},
        {"universe": (5, 5), "params": (5, 5)},
        {"spaces": -1},
        {"seed": 1 << 64},
    ],
)
def test_bad_config(kwargs):
    with pytest.raises(ValueError):
        FuzzConfig(**kwargs)
