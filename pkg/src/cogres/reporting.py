"""Measured-vs-predicted comparison and report rendering.

Tables round to 4 significant figures; CSV and JSON keep full precision.
All renderers are deterministic for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .model import ResistanceBreakdown, StackAssembly
from .network import ValidationReport
from .particles import ContactDistribution, SweepResult

TABLE = "table"
CSV = "csv"
JSON = "json"
FORMATS = (TABLE, CSV, JSON)


@dataclass(frozen=True)
class ComparisonResult:
    predicted: float  # ohm
    measured: float  # ohm
    ratio: float  # measured / predicted


def compare_measurement(predicted: float, measured: float) -> ComparisonResult:
    """Ratio of a measured joint resistance to the model's prediction."""
    if not predicted > 0:
        raise ValidationError(f"predicted must be > 0, got {predicted}")
    if not measured > 0:
        raise ValidationError(f"measured must be > 0, got {measured}")
    return ComparisonResult(predicted, measured, measured / predicted)


def _sig(value) -> str:
    return f"{value:.4g}"


def _table(rows, header=None) -> str:
    rows = [[str(c) for c in row] for row in rows]
    if header:
        rows.insert(0, [str(c) for c in header])
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
             for row in rows]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(rows, header) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_breakdown(breakdown: ResistanceBreakdown, fmt: str = TABLE) -> str:
    if fmt == TABLE:
        rows = [(name, _sig(value)) for name, value in breakdown.per_layer]
        rows.append(("total", _sig(breakdown.total)))
        return _table(rows, header=("layer", "resistance_ohm"))
    if fmt == CSV:
        rows = [(name, repr(value)) for name, value in breakdown.per_layer]
        rows.append(("total", repr(breakdown.total)))
        return _csv(rows, header=("layer", "resistance_ohm"))
    return _json({
        "layers": [{"name": name, "resistance_ohm": value}
                   for name, value in breakdown.per_layer],
        "total_ohm": breakdown.total,
    })


def render_sweep(result: SweepResult, stack: StackAssembly,
                 fmt: str = TABLE) -> str:
    acf_name = stack.acf.name
    sheet_names = [layer.name for layer in stack.sheet_layers]

    def acf_of(point):
        return dict(point.breakdown.per_layer)[acf_name]

    if fmt == TABLE:
        rows = [(_sig(p.value), _sig(acf_of(p)), _sig(p.total))
                for p in result.points]
        return (f"parameter: {result.parameter}\n"
                + _table(rows, header=("value", "acf_ohm", "total_ohm")))
    if fmt == CSV:
        header = ["parameter", "value", "acf_ohm", "total_ohm"]
        header += [f"{name}_ohm" for name in sheet_names]
        rows = []
        for p in result.points:
            by_name = dict(p.breakdown.per_layer)
            row = [result.parameter, repr(p.value), repr(acf_of(p)),
                   repr(p.total)]
            row += [repr(by_name[name]) for name in sheet_names]
            rows.append(row)
        return _csv(rows, header)
    return _json({
        "parameter": result.parameter,
        "points": [{
            "value": p.value,
            "total_ohm": p.total,
            "layers": {name: value for name, value in p.breakdown.per_layer},
        } for p in result.points],
    })


def render_validation(report: ValidationReport, fmt: str = TABLE) -> str:
    status = "pass" if report.passed else "FAIL"
    if fmt == TABLE:
        layer_rows = [(d.name, _sig(d.closed_form), _sig(d.network_solve),
                       _sig(d.relative_error))
                      for d in report.per_layer_detail]
        summary = _table([
            ("closed_form_ohm", _sig(report.closed_form)),
            ("network_solve_ohm", _sig(report.network_solve)),
            ("relative_error", _sig(report.relative_error)),
            ("tolerance", _sig(report.tolerance)),
            ("status", status),
        ])
        detail = _table(layer_rows, header=("layer", "closed_ohm",
                                            "network_ohm", "relative_error"))
        return summary + "\n" + detail
    if fmt == CSV:
        rows = [(d.name, repr(d.closed_form), repr(d.network_solve),
                 repr(d.relative_error)) for d in report.per_layer_detail]
        rows.append(("total", repr(report.closed_form),
                     repr(report.network_solve),
                     repr(report.relative_error)))
        return _csv(rows, header=("layer", "closed_ohm", "network_ohm",
                                  "relative_error"))
    return _json({
        "closed_form_ohm": report.closed_form,
        "network_solve_ohm": report.network_solve,
        "relative_error": report.relative_error,
        "tolerance": report.tolerance,
        "passed": report.passed,
        "layers": [{
            "name": d.name,
            "closed_ohm": d.closed_form,
            "network_ohm": d.network_solve,
            "relative_error": d.relative_error,
        } for d in report.per_layer_detail],
    })


def render_distribution(dist: ContactDistribution, fmt: str = TABLE) -> str:
    if fmt == TABLE:
        return _table([
            ("trials", str(dist.trials)),
            ("expected_mean", _sig(dist.expected)),
            ("sample_mean", _sig(dist.mean)),
            ("sample_std", _sig(float(np.std(dist.counts)))),
            ("min_count", str(int(dist.counts.min()))),
            ("max_count", str(int(dist.counts.max()))),
        ])
    if fmt == CSV:
        rows = [(i, int(c)) for i, c in enumerate(dist.counts)]
        return _csv(rows, header=("trial", "count"))
    return _json({
        "trials": dist.trials,
        "expected_mean": dist.expected,
        "sample_mean": dist.mean,
        "counts": [int(c) for c in dist.counts],
    })


def render_comparison(result: ComparisonResult, fmt: str = TABLE) -> str:
    if fmt == TABLE:
        return _table([
            ("predicted_ohm", _sig(result.predicted)),
            ("measured_ohm", _sig(result.measured)),
            ("ratio", _sig(result.ratio)),
        ])
    if fmt == CSV:
        return _csv([(repr(result.predicted), repr(result.measured),
                      repr(result.ratio))],
                    header=("predicted_ohm", "measured_ohm", "ratio"))
    return _json({
        "predicted_ohm": result.predicted,
        "measured_ohm": result.measured,
        "ratio": result.ratio,
    })
