"""Rank blocks by kernel similarity between their hit column and the
decision vector."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .kernel import BASELINES, baseline_scores, sflm
from .spectrum import SpectrumMatrix

CAVEAT_NO_FAILURES = "no failing runs: every decision bit is 0"
CAVEAT_NO_PASSES = "no passing runs: every decision bit is 1"
CAVEAT_NO_EVIDENCE = "no block was hit by any run; verdict is empty"


@dataclass(frozen=True)
class BlockScore:
    id: int
    label: str
    sflm: float
    no_evidence: bool
    rank: int
    baselines: dict | None = None


@dataclass(frozen=True)
class SuspiciousnessReport:
    entries: tuple[BlockScore, ...]
    verdict: tuple[int, ...]
    caveats: tuple[str, ...] = field(default=())

    def entry(self, block_id: int) -> BlockScore:
        for e in self.entries:
            if e.id == block_id:
                return e
        raise KeyError(f"unknown block id {block_id}")

    def scores(self) -> dict[int, float]:
        return {e.id: e.sflm for e in self.entries}

    def to_dict(self) -> dict:
        blocks = []
        for e in self.entries:
            d = {"id": e.id, "label": e.label, "sflm": e.sflm,
                 "no_evidence": e.no_evidence, "rank": e.rank}
            if e.baselines is not None:
                d["baselines"] = {k: e.baselines[k] for k in BASELINES}
            blocks.append(d)
        return {"blocks": blocks, "verdict": list(self.verdict), "caveats": list(self.caveats)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "SuspiciousnessReport":
        try:
            entries = tuple(
                BlockScore(int(b["id"]), str(b["label"]), float(b["sflm"]),
                           bool(b["no_evidence"]), int(b["rank"]), b.get("baselines"))
                for b in data["blocks"]
            )
            return cls(entries, tuple(int(v) for v in data["verdict"]),
                       tuple(str(c) for c in data["caveats"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed report: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "SuspiciousnessReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        with_baselines = any(e.baselines is not None for e in self.entries)
        head = f"{'rank':>4}  {'block':<8} {'sflm':>7}"
        if with_baselines:
            head += "".join(f" {name:>9}" for name in BASELINES)
        lines = [head]
        for e in self.entries:
            row = f"{e.rank:>4}  {e.label:<8} {e.sflm:>7.4f}"
            if with_baselines:
                row += "".join(f" {e.baselines[name]:>9.4f}" for name in BASELINES)
            if e.no_evidence:
                row += "  (never executed)"
            lines.append(row)
        labels = {e.id: e.label for e in self.entries}
        verdict = ", ".join(labels[k] for k in self.verdict) or "(none)"
        lines.append(f"verdict: {verdict}")
        lines.extend(f"caveat: {c}" for c in self.caveats)
        return "\n".join(lines) + "\n"


def localize(m: SpectrumMatrix, with_baselines: bool = False) -> SuspiciousnessReport:
    """Score each block column against ``m.decisions`` and rank.

    Order is score descending then block id ascending; blocks no run ever
    hit go last and never enter the verdict. Ranks are competition ranks.
    """
    scored = []
    for k in range(m.n_blocks):
        col = m.column(k)
        s = sflm(col, m.decisions)
        extra = baseline_scores(col, m.decisions) if with_baselines else None
        scored.append((k, s, extra))

    scored.sort(key=lambda t: (t[1].no_evidence, -t[1].value, t[0]))

    entries, prev_key, rank = [], None, 0
    for pos, (k, s, extra) in enumerate(scored, start=1):
        key = (s.no_evidence, s.value)
        if key != prev_key:
            rank, prev_key = pos, key
        entries.append(BlockScore(k, m.block_labels[k], s.value, s.no_evidence, rank, extra))

    with_evidence = [e for e in entries if not e.no_evidence]
    verdict = ()
    if with_evidence:
        top = with_evidence[0].sflm
        verdict = tuple(sorted(e.id for e in with_evidence if e.sflm == top))

    caveats = []
    if not any(m.decisions):
        caveats.append(CAVEAT_NO_FAILURES)
    elif all(m.decisions):
        caveats.append(CAVEAT_NO_PASSES)
    if not with_evidence:
        caveats.append(CAVEAT_NO_EVIDENCE)
    return SuspiciousnessReport(tuple(entries), verdict, tuple(caveats))


def evaluate_rank(report: SuspiciousnessReport, true_fault: int) -> Fraction:
    """Competition rank of the true fault over the block count; lower is better."""
    entry = report.entry(true_fault)
    return Fraction(entry.rank, len(report.entries))
