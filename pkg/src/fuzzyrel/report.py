"""
Rendering of verification reports and evaluated sets.

Text output is plain ASCII meant for a terminal; JSON output is key-sorted and
indented so that two runs with the same inputs are byte-identical (timings are
left out unless asked for).
"""

import json
from typing import Iterable, List, Sequence

from .registry import ScalarLemma, TheoremEntry
from .sets import FuzzySet
from .verifier import ERROR, HOLDS, VIOLATED, CheckReport, Violation


def format_degree(value: float) -> str:
    return f"{value:.6g}"


def _point(variables: Sequence[str], point: Sequence[float]) -> str:
    if len(variables) != len(point):
        return "(" + ", ".join(format_degree(v) for v in point) + ")"
    return " ".join(f"{name.lower()}={format_degree(v)}" for name, v in zip(variables, point))


def _violation_line(report: CheckReport, v: Violation) -> str:
    line = f"{_point(report.variables, v.point)}  lhs={format_degree(v.lhs)} rhs={format_degree(v.rhs)}"
    return f"{line}  [{v.detail}]" if v.detail else line


def summarize(reports: Iterable[CheckReport]) -> dict:
    counts = {HOLDS: 0, VIOLATED: 0, ERROR: 0}
    total = 0
    for report in reports:
        counts[report.verdict] += 1
        total += 1
    return {"checks": total, "holds": counts[HOLDS], "violated": counts[VIOLATED], "errors": counts[ERROR]}


def render_report_text(report: CheckReport, timings: bool = False) -> str:
    header = f"{report.id} [{report.mode}"
    if report.resolution is not None:
        header += f", step {report.resolution:g}"
    if report.generator is not None:
        header += f", {report.generator} seed {report.seed}"
    if report.parameters:
        header += ", " + ", ".join(f"{k}={v}" for k, v in report.parameters.items())
    header += f"] {report.verdict.upper()}"
    lines = [header, f"  statement: {report.statement}"]
    if report.error is not None:
        lines.append(f"  error: {report.error}")
        return "\n".join(lines)
    if report.mode == "witness":
        lines.append(f"  examined {report.examined}")
        if report.witness is not None:
            w = report.witness
            lines.append(f"  witness: {_point(report.variables, w.point)}  value={format_degree(w.lhs)}")
    else:
        lines.append(
            f"  examined {report.examined}, satisfying {report.satisfying}, violations {report.violation_count}"
            + (f", skipped {report.skipped}" if report.skipped else "")
        )
        for v in report.violations:
            lines.append(f"  violation: {_violation_line(report, v)}")
        if len(report.violations) < report.violation_count:
            lines.append(f"  ... {report.violation_count - len(report.violations)} more violation(s)")
        if report.mode != "oracle":
            lines.append(f"  equality points: {report.equality_count}")
            for v in report.equality_samples:
                lines.append(f"    {_violation_line(report, v)}")
        if report.necessity_count:
            lines.append(f"  equality outside the claimed condition: {report.necessity_count}")
            for v in report.necessity_findings:
                lines.append(f"    {_violation_line(report, v)}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    if timings:
        lines.append(f"  elapsed: {report.elapsed_ms:.1f} ms")
    return "\n".join(lines)


def render_text(reports: Sequence[CheckReport], timings: bool = False) -> str:
    blocks = [render_report_text(r, timings) for r in reports]
    s = summarize(reports)
    blocks.append(f"{s['checks']} check(s): {s['holds']} hold, {s['violated']} violated, {s['errors']} error(s)")
    return "\n\n".join(blocks) + "\n"


def render_json(reports: Sequence[CheckReport], timings: bool = False) -> str:
    payload = {"reports": [r.to_dict(timings) for r in reports], "summary": summarize(reports)}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render(reports: Sequence[CheckReport], fmt: str = "text", timings: bool = False) -> str:
    return render_json(reports, timings) if fmt == "json" else render_text(reports, timings)


# Evaluated sets
def set_to_dict(expr_text: str, result: FuzzySet) -> dict:
    return {"expr": expr_text, "universe": list(result.universe.elements), "degrees": result.as_dict()}


def render_set(expr_text: str, result: FuzzySet, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(set_to_dict(expr_text, result), sort_keys=True, indent=2) + "\n"
    width = max(len(label) for label in result.universe.elements) if len(result.universe) else 0
    lines = [expr_text]
    lines.extend(f"  {label.ljust(width)}  {format_degree(d)}" for label, d in result.items())
    return "\n".join(lines) + "\n"


# Catalog listing
def _entry_row(entry) -> List[str]:
    kind = "scalar" if isinstance(entry, ScalarLemma) else entry.category
    params = ",".join(p.name for p in entry.parameters) or "-"
    title = f"{entry.title} ({entry.reference})" if entry.reference else entry.title
    return [entry.id, kind, params, title]


def render_catalog(entries: Sequence, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([e.to_dict() for e in entries], sort_keys=True, indent=2) + "\n"
    rows = [["ID", "KIND", "PARAMS", "TITLE"]] + [_entry_row(e) for e in entries]
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row[:3], widths)) + "  " + row[3])
    return "\n".join(lines) + "\n"


def describe_entry(entry: TheoremEntry) -> str:
    """One-line summary used in debug logs."""
    kind = entry.equality_claim_kind or "no equality claim"
    return f"{entry.id} ({entry.reference}; {kind})"


# Counterexample hunting
def _findings_header(report: CheckReport, mode: str) -> str:
    where = f"step {report.resolution:g}" if report.resolution is not None else f"{report.generator} seed {report.seed}"
    params = "".join(f", {k}={v}" for k, v in report.parameters.items())
    return f"{report.id} [{mode}, {where}{params}]"


def render_findings(reports: Sequence[CheckReport], mode: str, fmt: str = "text") -> str:
    """Only the counterexamples (violation mode) or the equality points outside the claim (necessity mode)."""
    if fmt == "json":
        return render_json(reports)
    blocks = []
    for report in reports:
        if report.mode == "witness":
            header = _findings_header(report, "witness")
            w = report.witness
            if w is None:
                blocks.append(f"{header}: no witness found at resolution {report.resolution:g}")
            else:
                blocks.append(f"{header}: {_point(report.variables, w.point)}  value={format_degree(w.lhs)}")
            continue
        if mode == "violation":
            found, samples, what = report.violation_count, report.violations, "violation(s)"
        else:
            found, samples, what = report.necessity_count, report.necessity_findings, "equality point(s) outside the claimed condition"
        header = _findings_header(report, mode)
        if not found:
            where = f"resolution {report.resolution:g}" if report.resolution is not None else f"{report.examined} samples"
            blocks.append(f"{header}: none found at {where}")
            continue
        lines = [f"{header}: {found} {what}"]
        lines.extend(f"  {_violation_line(report, v)}" for v in samples)
        if len(samples) < found:
            lines.append(f"  ... {found - len(samples)} more")
        if mode != "violation" and report.violation_count:
            lines.append(f"  claimed condition fails to give equality at {report.violation_count} tuple(s)")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"
