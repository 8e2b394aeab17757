"""Benchmark harness: automatic encodings vs gold manual encodings.

Each corpus report carries the term codes a human reviewer assigned.
Both sides are mapped to preferred terms (PTs) and compared as sets,
giving an exact-match flag and a Jaccard overlap per report.  Results
aggregate into buckets by description length in characters, because
matching quality degrades with description size.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

from .dictionary import TermDictionary
from .encoder import DEFAULT_OPTIONS, EncodeOptions, EncodingResult, encode


@dataclass(frozen=True, slots=True)
class GoldReport:
    """One manually encoded report: id, free text, gold LLT codes."""

    report_id: str
    description: str
    gold_llt_codes: frozenset[str]


@dataclass(frozen=True, slots=True)
class BucketStats:
    """Aggregate outcome for one description-length bucket."""

    bucket: str
    n_reports: int
    identical_rate: float
    mean_jaccard: float
    n_errors: int


# (label, inclusive upper bound on character length)
BUCKETS: tuple[tuple[str, float], ...] = (
    ("<=20", 20),
    ("20-40", 40),
    ("40-100", 100),
    ("100-250", 250),
    (">250", float("inf")),
)


def bucket_of(description: str) -> str:
    length = len(description)
    for label, upper in BUCKETS:
        if length <= upper:
            return label
    raise AssertionError("unreachable: final bucket is unbounded")


def load_corpus_csv(path: str | Path) -> list[GoldReport]:
    """Read a corpus CSV: report_id, description, gold_llt_codes.

    Gold codes are ';'-separated; an empty cell means an empty gold set.
    Empty descriptions are invalid.
    """
    required = ("report_id", "description", "gold_llt_codes")
    reports = []
    with open(path, newline="", encoding="utf-8-sig") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [c for c in required if c not in header]
        if missing:
            raise ValueError(f"{path}: missing columns: {', '.join(missing)}")
        for lineno, row in enumerate(reader, start=2):
            report_id = (row.get("report_id") or "").strip()
            description = row.get("description") or ""
            codes_cell = (row.get("gold_llt_codes") or "").strip()
            if not report_id and not description and not codes_cell:
                continue
            if not report_id or not description:
                raise ValueError(f"{path}:{lineno}: report_id and description are required")
            codes = frozenset(c.strip() for c in codes_cell.split(";") if c.strip())
            reports.append(GoldReport(report_id, description, codes))
    return reports


def map_to_pt(llt_codes: Iterable[str], dictionary: TermDictionary) -> set[str]:
    """Map LLT codes to their PT codes; duplicates collapse."""
    pts = set()
    for code in llt_codes:
        term = dictionary.by_code.get(code)
        if term is None:
            raise ValueError(f"unknown llt_code {code!r}")
        pts.add(term.pt_code)
    return pts


def compare_report(
    gold: GoldReport,
    auto: EncodingResult,
    dictionary: TermDictionary,
) -> tuple[bool, float]:
    """PT-set equality flag and Jaccard overlap for one report."""
    gold_pts = map_to_pt(gold.gold_llt_codes, dictionary)
    auto_pts = map_to_pt((s.term.llt_code for s in auto.selected), dictionary)
    return compare_pt_sets(gold_pts, auto_pts)


def compare_pt_sets(gold_pts: set[str], auto_pts: set[str]) -> tuple[bool, float]:
    if not gold_pts and not auto_pts:
        return True, 1.0
    union = gold_pts | auto_pts
    jaccard = len(gold_pts & auto_pts) / len(union)
    return gold_pts == auto_pts, jaccard


def run_benchmark(
    corpus: Sequence[GoldReport],
    dictionary: TermDictionary,
    options: EncodeOptions = DEFAULT_OPTIONS,
    *,
    detail_sink: IO[str] | None = None,
) -> list[BucketStats]:
    """Encode and compare every report; return per-bucket aggregates.

    The detail sink, when given, receives one JSON line per report in
    corpus order.  A report that fails (say, a gold code missing from
    the dictionary) is recorded with an "error" field and counted in
    n_errors; it never aborts the run.  The comparison always uses the
    full selected list, never the display-capped view.
    """
    per_bucket: dict[str, list[tuple[bool, float]]] = {label: [] for label, _ in BUCKETS}
    errors: dict[str, int] = {label: 0 for label, _ in BUCKETS}

    for report in corpus:
        label = bucket_of(report.description)
        detail: dict = {"report_id": report.report_id, "bucket": label}
        try:
            auto = encode(report.description, dictionary, options)
            gold_pts = map_to_pt(report.gold_llt_codes, dictionary)
            auto_pts = map_to_pt((s.term.llt_code for s in auto.selected), dictionary)
            identical, jaccard = compare_pt_sets(gold_pts, auto_pts)
        except Exception as exc:
            errors[label] += 1
            detail["error"] = str(exc)
        else:
            per_bucket[label].append((identical, jaccard))
            detail.update(
                identical=identical,
                jaccard=jaccard,
                auto_pts=sorted(auto_pts),
                gold_pts=sorted(gold_pts),
            )
        if detail_sink is not None:
            detail_sink.write(json.dumps(detail, sort_keys=True, ensure_ascii=False) + "\n")

    stats = []
    for label, _ in BUCKETS:
        outcomes = per_bucket[label]
        n_scored = len(outcomes)
        stats.append(
            BucketStats(
                bucket=label,
                n_reports=n_scored + errors[label],
                identical_rate=(sum(1 for ok, _ in outcomes if ok) / n_scored) if n_scored else 0.0,
                mean_jaccard=(sum(j for _, j in outcomes) / n_scored) if n_scored else 0.0,
                n_errors=errors[label],
            )
        )
    return stats


SUMMARY_COLUMNS = ("bucket", "n_reports", "identical_rate", "mean_jaccard", "n_errors")


def write_summary_csv(stats: Sequence[BucketStats], sink: IO[str]) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for row in stats:
        writer.writerow(
            [row.bucket, row.n_reports, f"{row.identical_rate:.6f}", f"{row.mean_jaccard:.6f}", row.n_errors]
        )
