"""JSON and CSV rendering for experiment reports and sweep summaries."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Union

from .harness import ExperimentReport
from .sweep import SweepSummary

REPORT_CSV_FIELDS = (
    "problem", "model", "algorithm", "source", "seed", "n", "m",
    "alg_value", "opt_value", "opt_source", "adversary_bound", "ratio", "unbounded", "wall_time",
)
SWEEP_CSV_FIELDS = ("index", "origin", "n", "m", "alg_value", "opt_value", "ratio", "events")


def _num(x: Union[int, Fraction, None]) -> Union[int, str, None]:
    if x is None:
        return None
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def summary_dict(s: SweepSummary) -> dict:
    return {
        "problem": s.problem.value,
        "model": s.model.value,
        "algorithm": s.algorithm,
        "instances": s.instances,
        "max_ratio": "inf" if s.max_ratio is None else _num(s.max_ratio),
        "argmax": None if s.argmax is None else s.argmax.events,
        "histogram": dict(sorted(s.histogram.items(), key=lambda kv: _ratio_key(kv[0]))),
        "bound_violations": len(s.bound_violations),
        "invariant_violations": s.violations,
        "records": [
            {
                "index": r.index, "origin": r.origin, "n": r.n, "m": r.m,
                "alg_value": _num(r.alg_value), "opt_value": _num(r.opt_value),
                "ratio": r.ratio_text(), "events": r.events,
            }
            for r in s.records
        ],
    }


def _ratio_key(text: str) -> Fraction:
    return Fraction(10**18) if text == "inf" else Fraction(text)


def emit_report(obj: Union[ExperimentReport, SweepSummary], fmt: str = "json") -> str:
    """Render a report (one CSV row) or a sweep summary (one row per instance)."""
    if fmt not in ("json", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, ExperimentReport):
        d = obj.to_dict()
        if fmt == "json":
            return json.dumps(d, indent=2) + "\n"
        row = {**{k: d["config"][k] for k in ("problem", "model", "algorithm", "source", "seed")}, **d}
        return _csv(REPORT_CSV_FIELDS, [row])
    d = summary_dict(obj)
    if fmt == "json":
        return json.dumps(d, indent=2) + "\n"
    return _csv(SWEEP_CSV_FIELDS, d["records"])


def _csv(fields: tuple[str, ...], rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: ("inf" if row.get(k) == float("inf") else row.get(k)) for k in fields})
    return buf.getvalue()
