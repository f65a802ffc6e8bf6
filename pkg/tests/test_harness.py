import io
import json

import pytest

from radsq import ext
from radsq.errors import TheoremViolation, UsageError
from radsq.harness import (
    AnalysisReport,
    CorpusSpec,
    enumerate_connected,
    oracle_budget,
    oracle_diff,
    oracle_profile,
    run_all_checks,
    run_corpus,
)
from radsq.quiver import Quiver, delta_quiver, is_connected

A2 = Quiver.from_matrix([[0, 1], [0, 0]])
D32 = delta_quiver(3, 2)
D21 = delta_quiver(2, 1)


def test_census_n2_max1():
    corpus = list(enumerate_connected(CorpusSpec(n_min=2, n_max=2, max_mult=1)))
    # 16 matrices, of which the 4 with no arrow between the two vertices are disconnected
    assert len(corpus) == 12
    assert all(is_connected(q) for q in corpus)
    assert [q.adj for q in corpus] == sorted(q.adj for q in corpus)


def test_census_n1():
    corpus = list(enumerate_connected(CorpusSpec(n_min=1, n_max=1, max_mult=2)))
    assert [q.adj for q in corpus] == [((0,),), ((1,),), ((2,),)]


def test_random_mode_deterministic():
    spec = CorpusSpec(n_min=4, n_max=4, max_mult=3, mode="random", count=25, seed=7)
    a = list(enumerate_connected(spec))
    b = list(enumerate_connected(spec))
    assert a == b and len(a) == 25
    other = list(enumerate_connected(CorpusSpec(n_min=4, n_max=4, max_mult=3, mode="random", count=25, seed=8)))
    assert a != other


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n_min=1, n_max=6, max_mult=9),
        dict(n_min=3, n_max=2),
        dict(max_mult=-1),
        dict(mode="random", count=5),
        dict(mode="random", seed=1, count=0),
        dict(mode="sideways"),
    ],
)
def test_corpus_guards(kwargs):
    with pytest.raises(UsageError):
        CorpusSpec(**kwargs)


def test_oracle_budget_env(monkeypatch):
    monkeypatch.delenv("RADSQ_ORACLE_BUDGET", raising=False)
    assert oracle_budget() == 64
    monkeypatch.setenv("RADSQ_ORACLE_BUDGET", "7")
    assert oracle_budget() == 7


def test_oracle_diff_clean():
    assert oracle_diff(delta_quiver(1, 3), (2, 5)) == []
    assert oracle_diff(D32, (2, 5)) == []
    assert oracle_diff(Quiver.from_matrix([[0, 2], [0, 0]]), (2, 5)) == []


def test_oracle_diff_fault_injection():
    def corrupted(q, j, i):
        value = ext.ext1_simple_vs_proj_dim(q, j, i)
        return value + 1 if (j, i) == (2, 2) else value

    diffs = oracle_diff(D32, (2, 5), closed_form=corrupted, profile=False)
    assert len(diffs) == 2
    assert {(d["prime"], d["kind"], d["j"], d["i"]) for d in diffs} == {(2, "ext1", 2, 2), (5, "ext1", 2, 2)}
    assert all(d["combinatorial"] == 4 and d["oracle"] == 3 for d in diffs)


def test_oracle_profile_truncates_at_cap():
    q = Quiver.from_matrix([[3, 3], [3, 3]])
    short = oracle_profile(q, 2, 0, 4, cap=60)  # P_1 has dimension 42, P_2 has 252
    assert len(short) == 1
    assert oracle_profile(q, 2, 0, 4, cap=20) == []
    assert short == list(ext.ext_profile(q, 0, len(short) - 1).dims)


def test_run_all_checks_delta32():
    rep = run_all_checks(D32)
    assert rep.delta["n"] == 3 and rep.delta["m"] == 2 and rep.delta["t"] == 4
    assert not rep.self_injective
    assert rep.classification == {"self_injective_not_simple": False,
                                  "exists_simple_vanishing_to_n": False, "witness": None}
    assert rep.unique_vanishing == 0 and rep.nakayama[0] == 3
    assert rep.oracle["ran"] and rep.oracle["diffs"] == []
    assert rep.tau_inverse["length"] == rep.tau_inverse["cokernel_length"] == 5
    assert rep.star_sequence["cokernel"] == [0, 0, 3]
    assert rep.timing is None


def test_run_all_checks_self_injective():
    rep = run_all_checks(D21)
    assert rep.self_injective
    assert all(not any(pr[1:]) for pr in rep.profiles)
    assert rep.chains == []


def test_run_all_checks_a2():
    rep = run_all_checks(A2)
    assert rep.nakayama == [1, 0]
    assert rep.sinks == [1] and rep.sources == [0]
    assert rep.delta is None and rep.tau_inverse is None


def test_run_all_checks_budget_skips_oracle():
    rep = run_all_checks(D32, CorpusSpec(oracle_budget=3))
    assert not rep.oracle["ran"] and rep.tau_inverse is None


def test_run_all_checks_rejects_disconnected():
    with pytest.raises(UsageError):
        run_all_checks(Quiver.from_matrix([[0, 0], [0, 0]]))


def test_report_json_round_trip():
    for q in (D32, A2, D21, Quiver.from_matrix([[0]])):
        rep = run_all_checks(q)
        line = rep.to_json()
        again = AnalysisReport.from_json(line)
        assert again.to_json() == line
        assert again == AnalysisReport.from_dict(json.loads(line))


def test_run_corpus_byte_identical():
    spec = CorpusSpec(n_min=1, n_max=2, max_mult=1)
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        reports = list(run_corpus(spec, buf))
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    assert len(reports) == len(outs[0].splitlines()) == 2 + 12


def test_run_corpus_timing_optional():
    spec = CorpusSpec(n_min=1, n_max=1, max_mult=1, timing=True)
    assert all(r.timing is not None for r in run_corpus(spec))


def test_violation_payload_serializes(monkeypatch):
    import radsq.harness as harness

    def broken(q):
        return ext.SelfInjectiveRecord(True, False, None)

    monkeypatch.setattr(harness.ext, "classify_self_injective", broken)
    with pytest.raises(TheoremViolation) as info:
        run_all_checks(A2)
    payload = json.loads(json.dumps(info.value.payload, default=str))
    assert payload["quiver"] == [[0, 1], [0, 0]]
