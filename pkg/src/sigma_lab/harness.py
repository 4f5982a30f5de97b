"""Run audit laws over a corpus of graphs and assemble a deterministic report."""

from __future__ import annotations

import concurrent.futures
import csv
import dataclasses
import io
import itertools
import json
import sys
import time
import typing

import structlog
from tqdm import tqdm

from sigma_lab import settings
from sigma_lab.graph6 import graph6_decode, graph6_encode
from sigma_lab.graphs import Graph
from sigma_lab.laws import LAWS, AuditRecord, GraphFacts, Law, resolve_laws
from sigma_lab.linalg import ConvergenceError
from sigma_lab.spectra import SpectrumError


__all__ = [
    "LawTally",
    "VerificationReport",
    "run_audits",
]


logger = structlog.get_logger(__name__)

# graphs per submitted task
CHUNK_SIZE = 256


@dataclasses.dataclass
class LawTally:
    id: str
    kind: str
    holds: int = 0
    fails: int = 0
    na: int = 0
    errors: int = 0
    counterexamples: list[AuditRecord] = dataclasses.field(default_factory=list)

    @property
    def total(self) -> int:
        return self.holds + self.fails + self.na + self.errors

    def add(self, record: AuditRecord) -> None:
        if record.holds:
            self.holds += 1
        elif record.fails:
            self.fails += 1
            self.counterexamples.append(record)
        else:
            self.na += 1

    def json(self) -> dict[str, typing.Any]:
        return {
            "id": self.id,
            "kind": self.kind,
            "holds": self.holds,
            "fails": self.fails,
            "na": self.na,
            "errors": self.errors,
            "counterexamples": [record.json() for record in self.counterexamples],
        }

    @classmethod
    def from_json(cls, data: dict[str, typing.Any]) -> "LawTally":
        return cls(
            id=data["id"],
            kind=data["kind"],
            holds=data["holds"],
            fails=data["fails"],
            na=data["na"],
            errors=data.get("errors", 0),
            counterexamples=[
                AuditRecord(data["id"], item["graph6"], "fails", item["evidence"])
                for item in data["counterexamples"]
            ],
        )


@dataclasses.dataclass
class VerificationReport:
    corpus: str
    graphs: int = 0
    laws: list[LawTally] = dataclasses.field(default_factory=list)
    sigma_histogram: dict[int, dict[int, int]] = dataclasses.field(
        default_factory=dict
    )
    conjecture1_sigma_one: list[str] = dataclasses.field(default_factory=list)
    errors: list[dict[str, str]] = dataclasses.field(default_factory=list)
    runtime_ms: int = 0

    @property
    def fails(self) -> int:
        return sum(tally.fails for tally in self.laws)

    @property
    def counterexamples(self) -> list[AuditRecord]:
        return [record for tally in self.laws for record in tally.counterexamples]

    def tally(self, law_id: str) -> LawTally:
        for tally in self.laws:
            if tally.id == law_id:
                return tally
        raise KeyError(law_id)

    def to_dict(self) -> dict[str, typing.Any]:
        return {
            "corpus": self.corpus,
            "graphs": self.graphs,
            "laws": [tally.json() for tally in self.laws],
            "sigma_histogram": {
                str(n): {str(s): count for s, count in row.items()}
                for n, row in self.sigma_histogram.items()
            },
            "conjecture1_sigma_one": list(self.conjecture1_sigma_one),
            "errors": list(self.errors),
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        return cls(
            corpus=data["corpus"],
            graphs=data["graphs"],
            laws=[LawTally.from_json(item) for item in data["laws"]],
            sigma_histogram={
                int(n): {int(s): count for s, count in row.items()}
                for n, row in data["sigma_histogram"].items()
            },
            conjecture1_sigma_one=list(data["conjecture1_sigma_one"]),
            errors=list(data["errors"]),
            runtime_ms=data["runtime_ms"],
        )

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["law", "holds", "fails", "na"])
        for tally in self.laws:
            writer.writerow([tally.id, tally.holds, tally.fails, tally.na])
        return buffer.getvalue()


@dataclasses.dataclass
class _GraphOutcome:
    graph6: str
    n: int
    sigma: int | None
    records: list[AuditRecord]
    errors: list[tuple[str, str]]


def _audit_graph(graph: Graph, laws: list[Law], tie_tol: float) -> _GraphOutcome:
    facts = GraphFacts(graph, tie_tol)
    errors = []
    try:
        sigma = facts.sigma
    except SpectrumError as exc:
        sigma = None
        errors.append(("sigma", str(exc)))

    records = []
    if sigma is not None:
        for law in laws:
            try:
                records.append(law.audit(graph, facts))
            except (ConvergenceError, SpectrumError) as exc:
                logger.warning(
                    "audit failed on graph",
                    law=law.id,
                    graph6=facts.graph6,
                    error=str(exc),
                )
                errors.append((law.id, str(exc)))
    return _GraphOutcome(facts.graph6, graph.n, sigma, records, errors)


def _audit_chunk(
    chunk: list[str], law_ids: list[str], tie_tol: float
) -> list[_GraphOutcome]:
    laws = [LAWS[law_id] for law_id in law_ids]
    return [_audit_graph(graph6_decode(text), laws, tie_tol) for text in chunk]


def _round_robin(items: list[str], workers: int) -> list[list[str]]:
    return [chunk for chunk in (items[i::workers] for i in range(workers)) if chunk]


def _batches(
    corpus: typing.Iterable[Graph], size: int
) -> typing.Iterator[list[str]]:
    iterator = iter(corpus)
    while batch := [graph6_encode(graph) for graph in itertools.islice(iterator, size)]:
        yield batch


class _Merger:
    def __init__(self, report: VerificationReport, laws: list[Law]):
        self.report = report
        self.tallies = {law.id: LawTally(law.id, law.kind) for law in laws}
        report.laws = list(self.tallies.values())

    def add(self, outcome: _GraphOutcome) -> None:
        report = self.report
        report.graphs += 1
        for record in outcome.records:
            self.tallies[record.law].add(record)
            if record.fails:
                logger.warning(
                    "counterexample found", law=record.law, graph6=record.graph6
                )
        for law_id, message in outcome.errors:
            if law_id in self.tallies:
                self.tallies[law_id].errors += 1
            else:
                for tally in self.tallies.values():
                    tally.errors += 1
            report.errors.append(
                {"graph6": outcome.graph6, "law": law_id, "message": message}
            )
        if outcome.sigma is not None:
            row = report.sigma_histogram.setdefault(outcome.n, {})
            row[outcome.sigma] = row.get(outcome.sigma, 0) + 1
            if outcome.sigma == 1:
                report.conjecture1_sigma_one.append(outcome.graph6)

    def finish(self) -> None:
        report = self.report
        for tally in report.laws:
            tally.counterexamples.sort(key=lambda record: record.graph6)
        report.conjecture1_sigma_one.sort()
        report.errors.sort(key=lambda error: (error["graph6"], error["law"]))
        report.sigma_histogram = {
            n: dict(sorted(row.items()))
            for n, row in sorted(report.sigma_histogram.items())
        }


def run_audits(
    corpus: typing.Iterable[Graph],
    laws: str | typing.Iterable[str] = "all",
    jobs: int | None = None,
    progress: bool | None = None,
    tie_tol: float | None = None,
    corpus_name: str = "stream",
    total: int | None = None,
    timing: bool = True,
) -> VerificationReport:
    """Apply the selected laws to every graph of ``corpus``.

    The report does not depend on ``jobs``: tallies are counts and every list
    in it is sorted by graph6 string before it is returned.
    """
    selected = resolve_laws(laws)
    jobs = settings.SIGMA_LAB_JOBS if jobs is None else jobs
    if jobs < 1:
        raise ValueError(f"Invalid jobs: {jobs}. Must be at least 1")
    progress = settings.SIGMA_LAB_PROGRESS if progress is None else progress
    tie_tol = settings.SIGMA_LAB_TIE_TOL if tie_tol is None else tie_tol
    law_ids = [law.id for law in selected]

    report = VerificationReport(corpus=corpus_name)
    merger = _Merger(report, selected)
    started = time.perf_counter()
    logger.info("audit run started", corpus=corpus_name, laws=law_ids, workers=jobs)

    bar = tqdm(
        total=total, disable=not progress, unit="graph", file=sys.stderr, leave=False
    )
    with bar:
        if jobs == 1:
            for batch in _batches(corpus, CHUNK_SIZE):
                for outcome in _audit_chunk(batch, law_ids, tie_tol):
                    merger.add(outcome)
                bar.update(len(batch))
        else:
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
                for batch in _batches(corpus, CHUNK_SIZE * jobs):
                    futures = [
                        executor.submit(_audit_chunk, chunk, law_ids, tie_tol)
                        for chunk in _round_robin(batch, jobs)
                    ]
                    for future in futures:
                        for outcome in future.result():
                            merger.add(outcome)
                    bar.update(len(batch))

    merger.finish()
    elapsed_ms = round((time.perf_counter() - started) * 1000)
    report.runtime_ms = elapsed_ms if timing else 0
    logger.info(
        "audit run finished",
        corpus=corpus_name,
        graphs=report.graphs,
        fails=report.fails,
        errors=len(report.errors),
        elapsed_ms=elapsed_ms,
    )
    return report
