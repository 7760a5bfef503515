"""Report serialization: JSONL and CSV rows, plus a human summary table.

Floating values render with 12 significant digits: below eigensolver noise,
above the slack tolerance, and diff-friendly.  Serialized bytes depend only
on the scan results, never on worker count or wall-clock time.
"""

from __future__ import annotations

import csv
import io
import json

from .bounds import BoundCheck
from .scan import ScanReport, SubgraphScanReport

ROW_FIELDS = ("bound", "g6", "lhs", "rhs", "slack", "holds", "equality",
              "skipped", "reason")


def fmt_float(x: float | None) -> str:
    if x is None:
        return ""
    return format(x, ".12g")


def _row_values(chk: BoundCheck) -> dict:
    return {
        "bound": chk.bound,
        "g6": chk.g6,
        "lhs": chk.lhs,
        "rhs": chk.rhs,
        "slack": chk.slack,
        "holds": chk.holds,
        "equality": chk.equality,
        "skipped": chk.skipped,
        "reason": chk.reason,
    }


def _json_scalar(value) -> str:
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return json.dumps(value)
    return fmt_float(value)


def _jsonl_line(values: dict) -> str:
    return "{" + ", ".join(f"{json.dumps(k)}: {_json_scalar(v)}"
                           for k, v in values.items()) + "}"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt_float(value)
    return str(value)


def render_check_rows_jsonl(rows: list[BoundCheck]) -> bytes:
    out = "".join(_jsonl_line(_row_values(chk)) + "\n" for chk in rows)
    return out.encode("ascii")


def render_check_rows_csv(rows: list[BoundCheck]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(ROW_FIELDS)
    for chk in rows:
        writer.writerow([_csv_cell(v) for v in _row_values(chk).values()])
    return buf.getvalue().encode("ascii")


def render_summary(report: ScanReport) -> bytes:
    lines = []
    if report.command:
        lines.append(f"command: {report.command}")
    lines.append(f"source: {report.source}")
    meta = f"tolerance: {fmt_float(report.tol)}  chi-cap: {report.chi_cap}"
    if report.seed is not None:
        meta += f"  seed: {report.seed}"
    lines.append(meta)
    lines.append(f"graphs: {report.graphs}")
    lines.append(f"max |s+ + s- - 2m|: {fmt_float(report.trace_max_residual)}")
    lines.append("")
    header = (f"{'bound':<15} {'evaluated':>10} {'skipped':>8} {'violations':>11} "
              f"{'equalities':>11} {'min_slack':>16}  argmin")
    lines.append(header)
    lines.append("-" * len(header))
    for bid in report.bounds:
        agg = report.aggregates[bid]
        lines.append(
            f"{bid:<15} {agg.evaluated:>10} {agg.skipped:>8} {agg.violations:>11} "
            f"{agg.equalities:>11} {fmt_float(agg.min_slack):>16}  "
            f"{agg.argmin_g6 or ''}")
    if report.objective_maxima:
        lines.append("")
        for oid, om in report.objective_maxima.items():
            lines.append(f"max {oid}: {fmt_float(om.value)} at {om.g6}")
    if report.violations:
        lines.append("")
        lines.append("violation records:")
        for chk in report.violations:
            lines.append(
                f"  {chk.bound} {chk.g6} lhs={fmt_float(chk.lhs)} "
                f"rhs={fmt_float(chk.rhs)} slack={fmt_float(chk.slack)}")
    lines.append("")
    lines.append(f"VIOLATIONS: {report.total_violations}")
    return ("\n".join(lines) + "\n").encode("ascii")


def _subgraph_row(report: SubgraphScanReport, pair) -> dict:
    return {
        "mode": report.mode,
        "g6": pair.g6,
        "removed": pair.removed,
        "g6_sub": pair.g6_sub,
        "s_plus": pair.s_plus,
        "s_plus_sub": pair.s_plus_sub,
        "delta": pair.delta,
    }


SUBGRAPH_FIELDS = ("mode", "g6", "removed", "g6_sub", "s_plus", "s_plus_sub",
                   "delta")


def render_subgraph_jsonl(report: SubgraphScanReport) -> bytes:
    out = "".join(_jsonl_line(_subgraph_row(report, p)) + "\n"
                  for p in report.pairs)
    return out.encode("ascii")


def render_subgraph_csv(report: SubgraphScanReport) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(SUBGRAPH_FIELDS)
    for p in report.pairs:
        writer.writerow([_csv_cell(v) for v in _subgraph_row(report, p).values()])
    return buf.getvalue().encode("ascii")


def render_subgraph_summary(report: SubgraphScanReport) -> bytes:
    lines = [
        f"source: {report.source}",
        f"mode: {report.mode}  margin: {fmt_float(report.margin)}",
        f"graphs: {report.graphs}  comparisons: {report.comparisons}",
        "",
    ]
    for p in report.pairs:
        lines.append(f"  {p.g6} -{p.removed}-> {p.g6_sub} "
                     f"s+ {fmt_float(p.s_plus)} -> {fmt_float(p.s_plus_sub)} "
                     f"(delta {fmt_float(p.delta)})")
    lines.append(f"PAIRS: {len(report.pairs)}")
    return ("\n".join(lines) + "\n").encode("ascii")


def write_report(report: ScanReport | SubgraphScanReport,
                 fmt: str = "summary") -> bytes:
    """Serialize a report; jsonl and csv carry rows, summary the aggregates."""
    if isinstance(report, SubgraphScanReport):
        renderers = {"jsonl": render_subgraph_jsonl,
                     "csv": render_subgraph_csv,
                     "summary": render_subgraph_summary}
    else:
        renderers = {"jsonl": lambda r: render_check_rows_jsonl(r.rows or r.violations),
                     "csv": lambda r: render_check_rows_csv(r.rows or r.violations),
                     "summary": render_summary}
    if fmt not in renderers:
        raise ValueError(f"unknown report format {fmt!r}")
    return renderers[fmt](report)


def save_report(report, path, fmt: str = "summary") -> None:
    data = write_report(report, fmt)
    with open(path, "wb") as fh:
        fh.write(data)
