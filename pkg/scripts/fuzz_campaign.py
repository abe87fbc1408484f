"""Run a seeded fuzz campaign over the suspect claims and write certificates.

Each failing claim gets one space file under OUT/ declaring the topology and
the failing assignment as sets F and G; load it with ``softsemi check``.
"""

import argparse
from pathlib import Path

from softsemi.claims import SUSPECT_SUITE, FuzzConfig, fuzz, select
from softsemi.cli import emit_certificates
from softsemi.report import render_fuzz


def main():
    ap = argparse.ArgumentParser(description="suspect-claim fuzz campaign")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--spaces", type=int, default=500)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--out", default="certificates")
    args = ap.parse_args()

    cfg = FuzzConfig(seed=args.seed, spaces=args.spaces, universe=(1, 3), params=(1, 2))
    report = fuzz(cfg, select(SUSPECT_SUITE), workers=args.workers)
    print(render_fuzz(report), end="")
    emit_certificates(report, Path(args.out))
    n = sum(1 for s in report.summaries.values() if s.certificate)
    print(f"wrote {n} certificates to {args.out}/")


if __name__ == "__main__":
    main()
