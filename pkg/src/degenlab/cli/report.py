"""Check records and the line-delimited JSON report."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .. import __version__

REPORT_FORMAT = "degenlab-report/1"
STATUSES = ("pass", "fail", "errata-candidate", "undetermined")
FAILING = frozenset({"fail"})


@dataclass(frozen=True)
class Record:
    id: str
    kind: str
    status: str
    diagnostics: Tuple[str, ...] = ()
    values: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def failed(self) -> bool:
        return self.status in FAILING

    def to_json(self) -> Dict[str, object]:
        return {
            "record": "check",
            "id": self.id,
            "kind": self.kind,
            "status": self.status,
            "diagnostics": list(self.diagnostics),
            "values": dict(self.values),
        }


def record(id: str, kind: str, status: str, diagnostics: Iterable[str] = (), **values: object) -> Record:
    return Record(id, kind, status, tuple(diagnostics), tuple((k, str(v)) for k, v in sorted(values.items())))


@dataclass(frozen=True)
class Summary:
    total: int
    counts: Mapping[str, int]
    by_kind: Mapping[str, Mapping[str, int]]

    @property
    def failures(self) -> int:
        return sum(n for s, n in self.counts.items() if s in FAILING)


def summarise(records: Sequence[Record]) -> Summary:
    counts = Counter(r.status for r in records)
    by_kind: Dict[str, Counter] = {}
    for r in records:
        by_kind.setdefault(r.kind, Counter())[r.status] += 1
    full = {s: counts.get(s, 0) for s in STATUSES}
    kinds = {k: {s: c.get(s, 0) for s in STATUSES} for k, c in sorted(by_kind.items())}
    return Summary(len(records), full, kinds)


@dataclass(frozen=True)
class Report:
    command: str
    seed: int
    catalog_hash: str
    records: Tuple[Record, ...] = field(default=())

    @classmethod
    def build(cls, command: str, seed: int, catalog_hash: str, records: Iterable[Record]) -> "Report":
        return cls(command, seed, catalog_hash, tuple(sorted(records, key=lambda r: (r.id, r.kind))))

    @property
    def summary(self) -> Summary:
        return summarise(self.records)

    def lines(self) -> List[str]:
        head = {
            "record": "header",
            "format": REPORT_FORMAT,
            "tool": "degenlab",
            "version": __version__,
            "command": self.command,
            "seed": self.seed,
            "catalog_hash": self.catalog_hash,
        }
        s = self.summary
        tail = {"record": "summary", "total": s.total, "counts": dict(s.counts), "by_kind": {k: dict(v) for k, v in s.by_kind.items()}}
        dump = lambda obj: json.dumps(obj, sort_keys=True, ensure_ascii=False)  # noqa: E731
        return [dump(head)] + [dump(r.to_json()) for r in self.records] + [dump(tail)]

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


class ReportFormatError(ValueError):
    """A report file does not follow the documented layout."""


def parse_report(text: str) -> Report:
    """Inverse of :meth:`Report.text`; checks that the summary matches the tallies."""
    rows = [json.loads(line) for line in text.splitlines() if line.strip()]
    if len(rows) < 2 or rows[0].get("record") != "header" or rows[-1].get("record") != "summary":
        raise ReportFormatError("expected a header line, check lines and a summary line")
    head, tail = rows[0], rows[-1]
    if head.get("format") != REPORT_FORMAT:
        raise ReportFormatError(f"unknown report format {head.get('format')!r}")
    records = []
    for r in rows[1:-1]:
        if r.get("record") != "check":
            raise ReportFormatError(f"unexpected record {r.get('record')!r}")
        records.append(Record(r["id"], r["kind"], r["status"], tuple(r["diagnostics"]), tuple(sorted(r["values"].items()))))
    rep = Report(head["command"], head["seed"], head["catalog_hash"], tuple(records))
    s = rep.summary
    if tail["total"] != s.total or tail["counts"] != dict(s.counts):
        raise ReportFormatError("summary counts disagree with the records")
    return rep
