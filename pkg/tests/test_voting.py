from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramsian.errors import ParseError, StructuralError
from ramsian.voting import (
    DOCTRINAL_PARADOX,
    DOCTRINAL_PARADOX_OUTCOME,
    And,
    Ballot,
    Decision,
    Issue,
    Mode,
    Not,
    Or,
    Rule,
    aggregate_issues,
    aggregate_outcome,
    binary_baseline,
    dump_ballots,
    load_ballots,
    parse_outcome_fn,
)

F = Fraction
DATA = Path(__file__).resolve().parents[1] / "data"
MET, NOT_MET = Decision.BURDEN_MET, Decision.BURDEN_NOT_MET
scores = st.fractions(0, 1, max_denominator=20)


def panel(*values, question="Q"):
    return [Ballot(f"J{i}", {question: F(v)}) for i, v in enumerate(values, start=1)]


def test_mean_above_half():
    r = aggregate_outcome(panel(".9", ".6", ".3"), "Q")
    assert r.aggregate == F(3, 5)
    assert r.decision is MET


@pytest.mark.parametrize("values", [(".5", ".5", ".5"), ("1", "0")])
def test_exactly_half_leaves_burden_unmet(values):
    r = aggregate_outcome(panel(*values), "Q")
    assert r.aggregate == F(1, 2)
    assert r.decision is NOT_MET


def test_median_uses_lower_middle():
    assert aggregate_outcome(panel(".2", ".9", ".6"), "Q", Rule.MEDIAN).aggregate == F(3, 5)
    assert aggregate_outcome(panel(".2", ".9", ".6", ".8"), "Q", "median").aggregate == F(3, 5)


def test_missing_question():
    ballots = panel(".7") + [Ballot("J9", {"other": F(1)})]
    with pytest.raises(StructuralError):
        aggregate_outcome(ballots, "Q")
    with pytest.raises(StructuralError):
        binary_baseline(ballots, "Q")
    with pytest.raises(StructuralError):
        aggregate_outcome([], "Q")


def test_ballot_validation():
    with pytest.raises(StructuralError):
        Ballot("", {"Q": F(1)})
    with pytest.raises(StructuralError):
        Ballot("J1", {})
    with pytest.raises(ValueError):
        Ballot("J1", {"Q": F(3, 2)})


def test_doctrinal_paradox():
    issue = aggregate_issues(DOCTRINAL_PARADOX, DOCTRINAL_PARADOX_OUTCOME, mode=Mode.ISSUE)
    assert dict(issue.issue_aggregates) == {"I1": F(2, 3), "I2": F(2, 3)}
    assert issue.decision is MET
    outcome = aggregate_issues(DOCTRINAL_PARADOX, DOCTRINAL_PARADOX_OUTCOME, mode=Mode.OUTCOME)
    assert outcome.aggregate == F(1, 3)
    assert outcome.decision is NOT_MET


def test_issue_voting_missing_issue():
    with pytest.raises(StructuralError):
        aggregate_issues(DOCTRINAL_PARADOX, "I1 AND I3")


def test_binary_baseline_loses_information():
    ballots = panel(".51", ".51", "0")
    assert binary_baseline(ballots, "Q").decision is MET
    mean = aggregate_outcome(ballots, "Q")
    assert mean.aggregate == F(34, 100)
    assert mean.decision is NOT_MET


def test_binary_baseline_ties_and_half():
    assert binary_baseline(panel(".5"), "Q").decision is NOT_MET
    assert binary_baseline(panel(".9", ".1"), "Q").decision is NOT_MET


@pytest.mark.parametrize(
    "text, expected",
    [
        ("I1", Issue("I1")),
        ("I1 AND I2", And(Issue("I1"), Issue("I2"))),
        ("NOT a OR b AND c", Or(Not(Issue("a")), And(Issue("b"), Issue("c")))),
        ("(a OR b) AND NOT NOT c", And(Or(Issue("a"), Issue("b")), Not(Not(Issue("c"))))),
        ("a AND b AND c", And(And(Issue("a"), Issue("b")), Issue("c"))),
    ],
)
def test_parse_outcome_fn(text, expected):
    fn = parse_outcome_fn(text)
    assert fn == expected
    assert parse_outcome_fn(str(fn)) == fn


@pytest.mark.parametrize("text", ["", "a AND", "(a OR b", "a b", "AND a", "a & b", "a OR )"])
def test_parse_outcome_fn_errors(text):
    with pytest.raises(ParseError):
        parse_outcome_fn(text)


@st.composite
def ballots(draw, issues=("I1", "I2", "I3"), min_size=1, max_size=6):
    n = draw(st.integers(min_size, max_size))
    return [Ballot(f"J{k}", {i: draw(scores) for i in issues}) for k in range(n)]


OUTCOME_FNS = ["I1", "I1 AND I2", "I1 OR NOT I3", "(I1 OR I2) AND NOT I3"]


@given(ballots(min_size=1, max_size=1), st.sampled_from(OUTCOME_FNS), st.sampled_from([Rule.MEAN, Rule.MEDIAN]))
def test_single_judge_all_modes_agree(bs, fn, rule):
    issue = aggregate_issues(bs, fn, rule, Mode.ISSUE)
    outcome = aggregate_issues(bs, fn, rule, Mode.OUTCOME)
    assert issue.decision is outcome.decision
    single = aggregate_outcome(bs, "I1", rule).decision
    assert single is binary_baseline(bs, "I1").decision
    assert single is aggregate_issues(bs, "I1", rule, Mode.ISSUE).decision


@given(st.integers(1, 7), st.fixed_dictionaries({i: scores for i in ("I1", "I2", "I3")}), st.sampled_from(OUTCOME_FNS))
def test_unanimous_panel_modes_agree(n, judged, fn):
    bs = [Ballot(f"J{k}", judged) for k in range(n)]
    assert aggregate_issues(bs, fn, mode="issue").decision is aggregate_issues(bs, fn, mode="outcome").decision


@given(st.lists(scores, min_size=1, max_size=8), st.randoms(use_true_random=False))
def test_mean_is_permutation_invariant(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert aggregate_outcome(panel(*values), "Q") == aggregate_outcome(panel(*shuffled), "Q")


@given(st.lists(scores, min_size=1, max_size=8), st.data())
def test_raising_a_score_never_loses_the_burden(values, data):
    k = data.draw(st.integers(0, len(values) - 1))
    raised = list(values)
    raised[k] = data.draw(st.fractions(values[k], 1, max_denominator=20))
    before = aggregate_outcome(panel(*values), "Q")
    after = aggregate_outcome(panel(*raised), "Q")
    assert after.aggregate >= before.aggregate
    if before.decision is MET:
        assert after.decision is MET


@given(scores, st.integers(1, 9))
def test_equal_scores_mean_is_the_score(s, n):
    assert aggregate_outcome(panel(*[s] * n), "Q").aggregate == s


def test_ballot_file():
    bs = load_ballots((DATA / "doctrinal_paradox.json").read_text())
    assert bs == list(DOCTRINAL_PARADOX)
    assert load_ballots(dump_ballots(bs)) == bs
    wrapped = load_ballots('{"ballots": [{"judge": "J1", "scores": {"Q": 0.25}}]}')
    assert wrapped[0].score("Q") == F(1, 4)


@pytest.mark.parametrize(
    "text",
    [
        "[",
        "[]",
        '[{"judge": "J1"}]',
        '[{"judge": "J1", "scores": [1]}]',
        '[{"judge": "J1", "scores": {"Q": "2"}}]',
        '[{"judge": "J1", "scores": {"Q": "1"}}, {"judge": "J1", "scores": {"Q": "0"}}]',
    ],
)
def test_ballot_file_errors(text):
    with pytest.raises(ParseError):
        load_ballots(text)
