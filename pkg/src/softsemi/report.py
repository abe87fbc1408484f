"""Text and TSV rendering of verdicts and fuzz reports.

Nothing timing-dependent is printed unless asked for, so identical runs
render identical bytes.
"""

from __future__ import annotations

from .claims.engine import Counterexample, Space, Verdict
from .claims.fuzz import FuzzReport
from .core import SoftSet

VAR_NAMES = ("F", "G")


def render_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, SoftSet):
        return v.render()
    if isinstance(v, tuple):
        return "[" + "; ".join(render_value(x) for x in v) + "]"
    return str(v)


def render_counterexample(cx: Counterexample) -> str:
    parts = [f"{n}={s.render()}" for n, s in zip(VAR_NAMES, cx.sets)]
    if cx.point is not None:
        parts.append(f"x={cx.point}")
    assignment = " ".join(parts) or "(no variables)"
    return f"{assignment} : lhs={render_value(cx.lhs)} rhs={render_value(cx.rhs)}"


def first_key(v: Verdict) -> str:
    return v.counterexamples[0].key if v.counterexamples else "-"


def render_space_header(space: Space) -> str:
    ctx = space.context
    return (
        f"space {space.fingerprint} |X|={ctx.width} |E|={len(ctx.params)} "
        f"open={len(space.topology)} semi-open={len(space.family)}"
    )


def render_verdicts(space: Space, verdicts: list[Verdict], timing: bool = False) -> str:
    lines = [render_space_header(space)]
    for v in verdicts:
        mark = "PASS" if v.passed else "FAIL"
        line = f"{v.claim_id:<18} {v.status:<15} {mark}  cases={v.cases} failures={v.failures}"
        if timing:
            line += f" time={v.elapsed:.3f}s"
        lines.append(line)
        for cx in v.counterexamples:
            lines.append("    " + render_counterexample(cx))
    failed = sum(1 for v in verdicts if not v.passed)
    lines.append(f"summary: {len(verdicts)} claims, {len(verdicts) - failed} pass, {failed} fail")
    return "\n".join(lines) + "\n"


def render_verdicts_tsv(verdicts: list[Verdict]) -> str:
    return "".join(
        f"{v.claim_id}\t{v.status}\t{v.cases}\t{v.failures}\t{first_key(v)}\n" for v in verdicts
    )


def render_fuzz(report: FuzzReport) -> str:
    c = report.config
    lines = [
        f"fuzz seed={c.seed} spaces={c.spaces} universe={c.universe[0]}..{c.universe[1]} "
        f"params={c.params[0]}..{c.params[1]} generators={c.generators[0]}..{c.generators[1]}",
        f"checked={report.checked} skipped={len(report.skipped)}",
    ]
    for i, why in report.skipped:
        lines.append(f"  skipped space {i}: {why}")
    for s in report.summaries.values():
        mark = "PASS" if s.failures == 0 else "FAIL"
        lines.append(
            f"{s.claim_id:<18} {s.status:<15} {mark}  spaces={s.spaces} "
            f"failing_spaces={s.failing_spaces} cases={s.cases} failures={s.failures}"
        )
        if s.certificate is not None:
            top, cx = s.certificate
            ctx = top.context
            keys = ",".join(m.key for m in top.members)
            lines.append(
                f"    in universe={' '.join(ctx.universe)} params={' '.join(ctx.params)} "
                f"open={keys}"
            )
            lines.append("    " + render_counterexample(cx))
    lines.append(
        f"summary: {len(report.summaries)} claims, "
        f"{sum(1 for s in report.summaries.values() if s.failures)} with failures"
    )
    return "\n".join(lines) + "\n"


def render_fuzz_tsv(report: FuzzReport) -> str:
    out = []
    for s in report.summaries.values():
        key = s.certificate[1].key if s.certificate else "-"
        out.append(f"{s.claim_id}\t{s.status}\t{s.cases}\t{s.failures}\t{key}\n")
    return "".join(out)
