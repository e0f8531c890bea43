import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from faultblocks import SpectrumMatrix, SuspiciousnessReport, evaluate_rank, localize
from faultblocks.localizer import CAVEAT_NO_EVIDENCE, CAVEAT_NO_FAILURES, CAVEAT_NO_PASSES


def spectra(max_runs=8, max_blocks=8):
    return st.tuples(st.integers(1, max_runs), st.integers(1, max_blocks)).flatmap(
        lambda sm: st.tuples(
            st.lists(st.lists(st.integers(0, 1), min_size=sm[1], max_size=sm[1]),
                     min_size=sm[0], max_size=sm[0]),
            st.lists(st.integers(0, 1), min_size=sm[0], max_size=sm[0]),
        )
    )


def test_table2(table2):
    report = localize(table2)
    assert report.verdict == (4,)
    assert [e.id for e in report.entries] == [4, 0, 1, 2, 3, 5]
    assert [e.rank for e in report.entries] == [1, 2, 2, 2, 2, 2]
    scores = report.scores()
    assert scores[4] == 1.0
    assert all(scores[k] == 0.5 for k in (0, 1, 2, 3, 5))
    assert report.caveats == ()


def test_every_column_equal_to_decisions():
    m = SpectrumMatrix([[0, 0, 0], [1, 1, 1], [1, 1, 1]], [0, 1, 1])
    report = localize(m)
    assert set(report.scores().values()) == {1.0}
    assert report.verdict == (0, 1, 2)
    assert [e.rank for e in report.entries] == [1, 1, 1]


def test_single_block():
    report = localize(SpectrumMatrix([[1], [1]], [0, 1]))
    assert report.scores() == {0: 0.5}
    assert report.verdict == (0,)


def test_no_evidence_blocks_rank_last():
    # No failing runs: block 1 is never hit, so block 1 vs D has no
    # evidence. Its neutral 0.5 ties block 0 numerically but ranks after it.
    m = SpectrumMatrix([[1, 0, 1], [1, 0, 0]], [0, 0])
    report = localize(m)
    assert [e.id for e in report.entries] == [0, 2, 1]
    assert [e.sflm for e in report.entries] == [0.0, 0.0, 0.5]
    assert [e.rank for e in report.entries] == [1, 1, 3]
    assert report.entry(1).no_evidence
    assert report.verdict == (0, 2)


def test_never_hit_block_with_failures_scores_zero():
    m = SpectrumMatrix([[1, 0], [1, 0]], [1, 0])
    report = localize(m)
    assert report.entry(1).sflm == 0.0 and not report.entry(1).no_evidence
    assert report.verdict == (0,)


def test_caveats():
    assert localize(SpectrumMatrix([[1, 0]], [0])).caveats == (CAVEAT_NO_FAILURES,)
    assert localize(SpectrumMatrix([[1, 0]], [1])).caveats == (CAVEAT_NO_PASSES,)
    r = localize(SpectrumMatrix([[0, 0], [0, 0]], [0, 0]))
    assert r.caveats == (CAVEAT_NO_FAILURES, CAVEAT_NO_EVIDENCE) and r.verdict == ()


def test_baselines_attached(table2):
    plain = localize(table2)
    assert all(e.baselines is None for e in plain.entries)
    report = localize(table2, with_baselines=True)
    assert report.entry(4).baselines["jaccard"] == 1.0
    assert report.entry(0).baselines["jaccard"] == 0.5
    # kernel and the Jaccard baseline coincide block by block
    for e in report.entries:
        assert e.sflm == e.baselines["jaccard"]


def test_evaluate_rank(table2):
    report = localize(table2)
    assert evaluate_rank(report, 4) == Fraction(1, 6)
    assert evaluate_rank(report, 0) == Fraction(2, 6)
    equal = localize(SpectrumMatrix([[1] * 6, [1] * 6], [0, 1]))
    assert all(evaluate_rank(equal, k) == Fraction(1, 6) for k in range(6))
    last = localize(SpectrumMatrix([[0, 0, 0, 0, 0, 1], [1, 1, 1, 1, 1, 1]], [0, 1]))
    assert evaluate_rank(last, 5) == 1
    with pytest.raises(KeyError):
        evaluate_rank(report, 99)


def test_json_schema_and_round_trip(table2):
    report = localize(table2, with_baselines=True)
    data = json.loads(report.to_json())
    assert list(data) == ["blocks", "verdict", "caveats"]
    assert list(data["blocks"][0]) == ["id", "label", "sflm", "no_evidence", "rank", "baselines"]
    assert list(data["blocks"][0]["baselines"]) == ["tarantula", "ochiai", "jaccard", "dstar"]
    assert SuspiciousnessReport.from_json(report.to_json()) == report
    assert "baselines" not in json.loads(localize(table2).to_json())["blocks"][0]
    with pytest.raises(ValueError):
        SuspiciousnessReport.from_dict({"blocks": [{"id": 1}]})


def test_text_table(table2):
    text = localize(table2).to_text()
    lines = text.splitlines()
    assert lines[1].split() == ["1", "4", "1.0000"]
    assert lines[-1] == "verdict: 4"
    assert "jaccard" in localize(table2, with_baselines=True).to_text()


@given(spectra(), st.randoms())
def test_scores_invariant_under_run_order(spec, rnd):
    rows, dec = spec
    order = list(range(len(rows)))
    rnd.shuffle(order)
    a = localize(SpectrumMatrix(rows, dec))
    b = localize(SpectrumMatrix([rows[i] for i in order], [dec[i] for i in order]))
    assert a == b


@given(spectra(), st.randoms())
def test_verdict_follows_column_permutation(spec, rnd):
    rows, dec = spec
    m = len(rows[0])
    perm = list(range(m))
    rnd.shuffle(perm)  # new column j holds old column perm[j]
    a = localize(SpectrumMatrix(rows, dec))
    b = localize(SpectrumMatrix([[r[p] for p in perm] for r in rows], dec))
    assert sorted(perm[j] for j in b.verdict) == list(a.verdict)
    assert sorted(b.scores().values()) == sorted(a.scores().values())


@given(spectra())
def test_adding_all_hit_passing_run_never_raises_scores(spec):
    rows, dec = spec
    before = localize(SpectrumMatrix(rows, dec)).scores()
    after_report = localize(SpectrumMatrix(rows + [[1] * len(rows[0])], dec + [0]))
    for k, s in after_report.scores().items():
        if not localize(SpectrumMatrix(rows, dec)).entry(k).no_evidence:
            assert s <= before[k]


@given(spectra())
def test_report_ordering_and_ranks(spec):
    rows, dec = spec
    report = localize(SpectrumMatrix(rows, dec))
    keys = [(e.no_evidence, -e.sflm, e.id) for e in report.entries]
    assert keys == sorted(keys)
    for i, e in enumerate(report.entries):
        ahead = sum(1 for o in report.entries
                    if (o.no_evidence, -o.sflm) < (e.no_evidence, -e.sflm))
        assert e.rank == ahead + 1
    if any(not e.no_evidence for e in report.entries):
        assert report.verdict


def test_deterministic_json():
    rng = random.Random(3)
    rows = [[rng.randint(0, 1) for _ in range(10)] for _ in range(12)]
    dec = [rng.randint(0, 1) for _ in range(12)]
    outs = {localize(SpectrumMatrix(rows, dec), True).to_json() for _ in range(3)}
    assert len(outs) == 1
