import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_informative_partition, random_strategy
from rcards.audit import necessary_condition_audit
from rcards.core import DealSpec, Strategy
from rcards.search import greedy_completion


def _statuses(report):
    return {f.check: f.status for f in report.findings}


@pytest.mark.parametrize("name", ["fig2", "ex4", "sts9_strategy"])
def test_secure_strategies_pass(name, request):
    S = request.getfixturevalue(name)
    report = necessary_condition_audit(S)
    assert report.ok, report.lines()
    assert any(f.status == "pass" and f.check.startswith("lemma") for f in report.findings)


def test_orbit_strategy_passes(orbit):
    report = necessary_condition_audit(orbit.strategy, 2)
    assert report.ok, report.lines()
    st_ = _statuses(report)
    assert st_["theorem: a = d+1 = 4, hence c = 1"] == "pass"


def test_example4_design_consequences(ex4):
    report = necessary_condition_audit(ex4, 2)
    passed = [f.check for f in report.findings if f.status == "pass"]
    assert "theorem: every announcement is a 3-(8,4,1) design" in passed
    assert any("neighborhood" in c or "N(" in c for c in passed)


def test_figure1_perfect_claim_is_violated(fig1):
    report = necessary_condition_audit(fig1, 1, "perfect")
    assert not report.ok
    assert [f.check for f in report.violations] == ["claim: perfectly 1-secure"]
    # still weakly secure, so the weak claim survives
    assert necessary_condition_audit(fig1, 1, "weak").ok


def test_non_informative_is_skipped():
    S = greedy_completion(DealSpec(3, 3, 1), [[(0, 1, 2), (0, 1, 3)]])
    report = necessary_condition_audit(S, 1, "weak")
    assert not report.ok
    assert any(f.status == "skipped" for f in report.findings)


def test_a_eq_c_plus_1_matchings():
    S = Strategy.build(DealSpec(2, 1, 1), [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]])
    report = necessary_condition_audit(S, 1, "weak")
    st_ = _statuses(report)
    assert st_["claim: informative for Bob"] == "pass"
    assert st_["claim: weakly 1-secure"] == "violation"
    assert st_["theorem: a <= c+1 admits no informative, weakly 1-secure strategy"] == "pass"


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 2, 1), (2, 1, 1), (3, 1, 2), (2, 3, 1)]), st.integers(0, 10**6), st.booleans())
def test_small_a_never_informative_and_secure(deal, seed, packed):
    rng = random.Random(seed)
    a, b, c = deal
    if packed and a > c:
        anns = random_informative_partition(rng, a, b, c)
        S = Strategy.build(DealSpec(a, b, c), anns)
    else:
        anns, dist = random_strategy(rng, a, b, c, rng.randint(1, 6))
        S = Strategy.build(DealSpec(a, b, c), anns, dist)
    report = necessary_condition_audit(S, 1, "weak")
    theorem = [f for f in report.findings if f.check.startswith("theorem")]
    assert len(theorem) == 1 and theorem[0].status == "pass"
    assert not report.ok


def test_delta_and_claim_validation(fig2):
    with pytest.raises(ValueError):
        necessary_condition_audit(fig2, 0)
    with pytest.raises(ValueError):
        necessary_condition_audit(fig2, 1, "strong")


def test_report_lines(fig1):
    lines = necessary_condition_audit(fig1, 1).lines()
    assert lines[0].startswith("[pass] claim: informative")
    assert any(line.startswith("[violation]") for line in lines)
