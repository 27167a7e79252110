"""Output formatting utilities."""

from __future__ import annotations

from vague_membership.inverse import BlockDiagnostic
from vague_membership.measure import Judgement, MembershipSpaceReport
from vague_membership.partition import ValidationReport
from vague_membership.plfunc import LevelSet
from vague_membership.protocols import Estimate


def format_degree(value: float) -> str:
    """Render a degree or abscissa with 12 significant digits."""
    return f"{value:.12g}"


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def format_judgement(j: Judgement) -> str:
    """Format a judgement as ``name=degree`` pairs in block order."""
    return " ".join(f"{name}={format_degree(v)}" for name, v in j.degrees.items())


def format_validation(report: ValidationReport) -> str:
    """Format per-condition verdicts of a partition validation.

    Args:
        report: Validation report to render.

    Returns:
        One line per condition followed by the overall and regularity verdicts.
    """
    lines = []
    for verdict in report.conditions:
        line = f"condition ({verdict.condition}): "
        line += "ok" if verdict.holds else f"FAIL: {verdict.reason}"
        lines.append(line)
    lines.append(
        f"sum of blocks: [{format_degree(report.sum_min)}, "
        f"{format_degree(report.sum_max)}]"
    )
    lines.append(f"valid: {yes_no(report.valid)}")
    lines.append(f"regular: {yes_no(report.regular)}")
    return "\n".join(lines)


def format_space_report(report: MembershipSpaceReport) -> str:
    """Format the axiom verdicts and classification at one object."""
    lines = [
        f"axiom I: {'holds' if report.axiom1 else 'fails'}",
        f"axiom V: {'holds' if report.axiom5 else 'fails'}"
        + (f" (at {report.witness})" if report.witness else ""),
    ]
    for r in report.residuals:
        lines.append(
            f"  {r.block}: {format_degree(r.degree)} + {report.tconorm.value}(rest) "
            f"= {format_degree(r.total)}"
        )
    lines.append(f"regular: {yes_no(report.regular)}")
    lines.append(f"normal: {yes_no(report.normal)}")
    lines.append(f"crisp: {yes_no(report.crisp)}")
    return "\n".join(lines)


def format_level_set(ls: LevelSet) -> str:
    """Format a solution set as ``x = a``, ``x ∈ {a, b}`` or a union of ranges."""
    if ls.is_empty:
        return "no solution"
    if len(ls) == 1 and ls.pieces[0].is_point:
        return f"x = {format_degree(ls.pieces[0].lo)}"
    if not ls.intervals:
        return "x ∈ {" + ", ".join(format_degree(x) for x in ls.points) + "}"
    parts = [
        f"{{{format_degree(p.lo)}}}"
        if p.is_point
        else f"[{format_degree(p.lo)}, {format_degree(p.hi)}]"
        for p in ls
    ]
    return "x ∈ " + " ∪ ".join(parts)


def format_estimate(label: str, estimate: Estimate) -> str:
    line = f"{label}: {format_degree(estimate.value)} ({estimate.method}"
    if estimate.witness is not None:
        line += f", at x = {format_degree(estimate.witness)}"
    return line + ")"


def format_diagnostics(diagnostics: list[BlockDiagnostic]) -> str:
    """Explain, per block, how far its target is from what remains reachable."""
    lines = []
    for d in diagnostics:
        if d.attained is None:
            lines.append(
                f"  {d.block}={format_degree(d.target)}: "
                "other targets already infeasible"
            )
            continue
        lo, hi = d.attained
        lines.append(
            f"  {d.block}={format_degree(d.target)}: reachable range "
            f"[{format_degree(lo)}, {format_degree(hi)}], gap {format_degree(d.gap)}"
        )
    return "\n".join(lines)
