"""Tabulate how often each catalog claim fails across space shapes.

    python3 scripts/survey_claims.py --spaces 200 --seed 1
"""

import argparse
import time

from softsemi.claims import FuzzConfig, catalog, fuzz

SHAPES = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2), (2, 3)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--spaces", type=int, default=100)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    claims = catalog()
    rows = {c.id: [] for c in claims}
    for nx, ne in SHAPES:
        cfg = FuzzConfig(seed=args.seed, spaces=args.spaces, universe=(nx, nx), params=(ne, ne))
        t0 = time.perf_counter()
        rep = fuzz(cfg, claims, workers=args.workers)
        print(f"# {nx}x{ne}: {rep.checked} spaces in {time.perf_counter() - t0:.2f}s")
        for s in rep.summaries.values():
            rows[s.claim_id].append(f"{s.failing_spaces}/{s.spaces}")

    head = ["claim", "status"] + [f"{nx}x{ne}" for nx, ne in SHAPES]
    print("\t".join(head))
    for c in claims:
        print("\t".join([c.id, c.status] + rows[c.id]))


if __name__ == "__main__":
    main()
