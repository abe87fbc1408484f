from .catalog import BELIEVED_TRUE_SUITE, SUSPECT_SUITE, Claim, by_id, catalog, select
from .engine import (
    CaseCapError,
    Counterexample,
    ScanOps,
    Space,
    TableOps,
    Verdict,
    check,
    check_all,
    holds,
    replay,
)
from .fuzz import FuzzConfig, FuzzReport, SplitMix64, fuzz, generate_space, space_seeds
