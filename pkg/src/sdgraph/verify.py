"""Diff closed-form predictions against oracle results for one n."""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field

from . import __version__
from .budget import DEFAULT_BUDGET
from .formulas import DegenerateCaseWarning, FormulaPrediction, predict
from .graphs import commuting_graph
from .groups import sd8n_construct
from .report import BUDGET_EXCEEDED, EXACT, ALL_INVARIANTS, compute_report, sd_vertex_classes, to_jsonable

MATCH = "match"
MISMATCH = "mismatch"
SKIPPED = "skipped"


@dataclass(frozen=True)
class RunConfig:
    budget: float | None = DEFAULT_BUDGET
    jobs: int = 1
    invariants: tuple[str, ...] | None = None
    timing: bool = True

    def snapshot(self) -> dict:
        d = asdict(self)
        d["invariants"] = list(self.invariants) if self.invariants else None
        return d


@dataclass
class FieldVerdict:
    predicted: object
    computed: object
    verdict: str
    elapsed: float | None = None
    reason: str = ""


@dataclass
class VerificationRecord:
    n: int
    parity: str
    fields: dict[str, FieldVerdict] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def first_mismatch(self) -> str | None:
        return next((k for k in sorted(self.fields) if self.fields[k].verdict == MISMATCH), None)

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    def to_json(self, timing: bool = True) -> dict:
        fields = {}
        for name in sorted(self.fields):
            f = self.fields[name]
            doc = {"predicted": f.predicted, "computed": f.computed, "verdict": f.verdict}
            if f.reason:
                doc["reason"] = f.reason
            if timing and f.elapsed is not None:
                doc["elapsed"] = round(f.elapsed, 6)
            fields[name] = doc
        return {
            "n": self.n,
            "parity": self.parity,
            "version": self.version,
            "config": self.config,
            "notes": list(self.notes),
            "fields": fields,
        }


def diff(pred: FormulaPrediction, report, names) -> dict[str, FieldVerdict]:
    out = {}
    for name in names:
        predicted = to_jsonable(pred.values[name], name)
        entry = report.entries.get(name)
        if entry is None:
            out[name] = FieldVerdict(predicted, None, SKIPPED, reason="not computed")
        elif entry.status == BUDGET_EXCEEDED:
            out[name] = FieldVerdict(predicted, None, BUDGET_EXCEEDED, entry.elapsed)
        elif entry.status != EXACT:
            out[name] = FieldVerdict(predicted, None, SKIPPED, entry.elapsed, entry.message)
        else:
            computed = to_jsonable(entry.value, name)
            verdict = MATCH if computed == predicted else MISMATCH
            out[name] = FieldVerdict(predicted, computed, verdict, entry.elapsed)
    return out


def verify_n(n: int, config: RunConfig = RunConfig()) -> VerificationRecord:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateCaseWarning)
        pred = predict(n)
    group = sd8n_construct(n)
    graph = commuting_graph(group)
    wanted = [k for k in ALL_INVARIANTS if k in pred.values]
    if config.invariants is not None:
        wanted = [k for k in wanted if k in config.invariants]
    classes = sd_vertex_classes(group) if pred.applicable else None
    report = compute_report(graph, group, config.budget, tuple(wanted), classes)
    record = VerificationRecord(n, pred.parity, diff(pred, report, wanted), list(pred.notes), config.snapshot())
    for name, reason in sorted(pred.skipped.items()):
        record.fields[name] = FieldVerdict(None, None, SKIPPED, reason=reason)
    return record
