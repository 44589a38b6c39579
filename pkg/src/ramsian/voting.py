"""Credence-valued ("Ramsian") judicial voting.

Each judge scores a question in [0, 1].  The party with the burden of
persuasion prevails only if the panel's aggregate score is strictly above
1/2; exactly 1/2 leaves the burden unmet.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence, Union

from .errors import ParseError, StructuralError
from .numbers import HALF, ONE, ZERO, RationalLike, probability, to_fraction


class Decision(str, enum.Enum):
    BURDEN_MET = "burden_met"
    BURDEN_NOT_MET = "burden_not_met"

    @classmethod
    def of(cls, aggregate: Fraction) -> Decision:
        return cls.BURDEN_MET if aggregate > HALF else cls.BURDEN_NOT_MET


class Mode(str, enum.Enum):
    OUTCOME = "outcome"
    ISSUE = "issue"


class Rule(str, enum.Enum):
    MEAN = "mean"
    MEDIAN = "median"
    # up-or-down votes, simple majority; only produced by binary_baseline
    MAJORITY = "majority"


@dataclass(frozen=True)
class Ballot:
    judge_id: str
    scores: Mapping[str, Fraction]

    def __post_init__(self) -> None:
        if not isinstance(self.judge_id, str) or not self.judge_id:
            raise StructuralError("judge id must be a nonempty string")
        if not self.scores:
            raise StructuralError(f"ballot of {self.judge_id} has no scores")
        scores = {q: probability(s, f"score of {self.judge_id} on {q}") for q, s in self.scores.items()}
        object.__setattr__(self, "scores", MappingProxyType(scores))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ballot):
            return NotImplemented
        return self.judge_id == other.judge_id and dict(self.scores) == dict(other.scores)

    def __hash__(self) -> int:
        return hash((self.judge_id, tuple(sorted(self.scores.items()))))

    @classmethod
    def of(cls, judge_id: str, **scores: RationalLike) -> Ballot:
        return cls(judge_id, {q: to_fraction(s) for q, s in scores.items()})

    def score(self, question: str) -> Fraction:
        try:
            return self.scores[question]
        except KeyError:
            raise StructuralError(f"ballot of {self.judge_id} has no score for {question!r}") from None


@dataclass(frozen=True)
class PanelResult:
    aggregate: Fraction | None
    decision: Decision
    mode: Mode
    rule: Rule
    # per-issue aggregates under issue voting; empty otherwise
    issue_aggregates: Mapping[str, Fraction] = MappingProxyType({})

    @property
    def burden_met(self) -> bool:
        return self.decision is Decision.BURDEN_MET


# -- outcome functions -------------------------------------------------------


@dataclass(frozen=True)
class Issue:
    name: str

    def evaluate(self, values: Mapping[str, bool]) -> bool:
        try:
            return values[self.name]
        except KeyError:
            raise StructuralError(f"no value for issue {self.name!r}") from None

    def issues(self) -> frozenset[str]:
        return frozenset([self.name])

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not:
    operand: OutcomeFunction

    def evaluate(self, values: Mapping[str, bool]) -> bool:
        return not self.operand.evaluate(values)

    def issues(self) -> frozenset[str]:
        return self.operand.issues()

    def __str__(self) -> str:
        return f"NOT {_paren(self.operand)}"


@dataclass(frozen=True)
class And:
    left: OutcomeFunction
    right: OutcomeFunction

    def evaluate(self, values: Mapping[str, bool]) -> bool:
        return self.left.evaluate(values) and self.right.evaluate(values)

    def issues(self) -> frozenset[str]:
        return self.left.issues() | self.right.issues()

    def __str__(self) -> str:
        return f"{_paren(self.left)} AND {_paren(self.right)}"


@dataclass(frozen=True)
class Or:
    left: OutcomeFunction
    right: OutcomeFunction

    def evaluate(self, values: Mapping[str, bool]) -> bool:
        return self.left.evaluate(values) or self.right.evaluate(values)

    def issues(self) -> frozenset[str]:
        return self.left.issues() | self.right.issues()

    def __str__(self) -> str:
        return f"{_paren(self.left)} OR {_paren(self.right)}"


OutcomeFunction = Union[Issue, Not, And, Or]


def _paren(f: OutcomeFunction) -> str:
    return str(f) if isinstance(f, (Issue, Not)) else f"({f})"


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z_][A-Za-z0-9_.\-]*))")
_KEYWORDS = {"AND", "OR", "NOT"}


def parse_outcome_fn(text: str) -> OutcomeFunction:
    """Parse ``I1 AND (I2 OR NOT I3)``.  NOT binds tightest, then AND, then OR."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    if not tokens:
        raise ParseError("empty outcome expression")

    def peek():
        return tokens[0] if tokens else None

    def take(expected=None):
        if not tokens:
            raise ParseError("outcome expression ended early")
        tok = tokens.pop(0)
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}")
        return tok

    def disjunction():
        node = conjunction()
        while peek() == "OR":
            take()
            node = Or(node, conjunction())
        return node

    def conjunction():
        node = negation()
        while peek() == "AND":
            take()
            node = And(node, negation())
        return node

    def negation():
        if peek() == "NOT":
            take()
            return Not(negation())
        return atom()

    def atom():
        tok = take()
        if tok == "(":
            node = disjunction()
            take(")")
            return node
        if tok == ")" or tok in _KEYWORDS:
            raise ParseError(f"unexpected {tok!r}")
        return Issue(tok)

    node = disjunction()
    if tokens:
        raise ParseError(f"unexpected {tokens[0]!r} after complete expression")
    return node


# -- aggregation -------------------------------------------------------------


def _combine(scores: Sequence[Fraction], rule: Rule) -> Fraction:
    if rule is Rule.MEAN:
        return sum(scores, ZERO) / len(scores)
    if rule is Rule.MEDIAN:
        # lower median for even panels
        return sorted(scores)[(len(scores) - 1) // 2]
    raise ValueError(f"{rule} is not a score aggregation rule")


def _require(ballots: Sequence[Ballot]) -> None:
    if not ballots:
        raise StructuralError("no ballots")


def aggregate_outcome(
    ballots: Sequence[Ballot], question: str, rule: Rule | str = Rule.MEAN
) -> PanelResult:
    _require(ballots)
    rule = Rule(rule)
    agg = _combine([b.score(question) for b in ballots], rule)
    return PanelResult(agg, Decision.of(agg), Mode.OUTCOME, rule)


def aggregate_issues(
    ballots: Sequence[Ballot],
    outcome_fn: OutcomeFunction | str,
    rule: Rule | str = Rule.MEAN,
    mode: Mode | str = Mode.ISSUE,
) -> PanelResult:
    """Decide a case that turns on several issues.

    Issue voting aggregates each issue across the panel and applies
    ``outcome_fn`` to the thresholded aggregates.  Outcome voting lets each
    judge apply ``outcome_fn`` to their own thresholded scores, then
    aggregates the resulting 0/1 votes.
    """
    _require(ballots)
    rule, mode = Rule(rule), Mode(mode)
    if isinstance(outcome_fn, str):
        outcome_fn = parse_outcome_fn(outcome_fn)
    issues = sorted(outcome_fn.issues())
    for b in ballots:
        for i in issues:
            b.score(i)

    if mode is Mode.ISSUE:
        per_issue = {i: _combine([b.score(i) for b in ballots], rule) for i in issues}
        met = outcome_fn.evaluate({i: a > HALF for i, a in per_issue.items()})
        decision = Decision.BURDEN_MET if met else Decision.BURDEN_NOT_MET
        return PanelResult(None, decision, mode, rule, MappingProxyType(per_issue))

    votes = [
        ONE if outcome_fn.evaluate({i: b.score(i) > HALF for i in issues}) else ZERO
        for b in ballots
    ]
    agg = _combine(votes, rule)
    return PanelResult(agg, Decision.of(agg), mode, rule)


def binary_baseline(ballots: Sequence[Ballot], question: str) -> PanelResult:
    """Up-or-down voting: each score above 1/2 is a yes vote, strict majority wins."""
    _require(ballots)
    yes = sum(1 for b in ballots if b.score(question) > HALF)
    share = Fraction(yes, len(ballots))
    return PanelResult(share, Decision.of(share), Mode.OUTCOME, Rule.MAJORITY)


# -- ballot files ------------------------------------------------------------


def load_ballots(text: str) -> list[Ballot]:
    """Parse ``[{"judge": "J1", "scores": {"I1": "2/3", "I2": 0.4}}, ...]``."""
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if isinstance(doc, dict) and "ballots" in doc:
        doc = doc["ballots"]
    if not isinstance(doc, list) or not doc:
        raise ParseError("ballot file must hold a nonempty list of ballots")
    ballots = []
    seen = set()
    for k, entry in enumerate(doc):
        if not isinstance(entry, dict) or "judge" not in entry or "scores" not in entry:
            raise ParseError(f"ballot #{k} needs 'judge' and 'scores'")
        if not isinstance(entry["scores"], dict):
            raise ParseError(f"ballot #{k}: 'scores' must be an object")
        judge = entry["judge"]
        if judge in seen:
            raise ParseError(f"judge {judge!r} has more than one ballot")
        seen.add(judge)
        try:
            ballots.append(Ballot(judge, {q: to_fraction(s) for q, s in entry["scores"].items()}))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"ballot #{k}: {exc}") from exc
    return ballots


def dump_ballots(ballots: Sequence[Ballot]) -> str:
    return json.dumps(
        [{"judge": b.judge_id, "scores": {q: str(s) for q, s in b.scores.items()}} for b in ballots],
        indent=2,
    )


# three judges, outcome = I1 AND I2: every issue carries 2-1 but only one judge
# finds for the moving party on both
DOCTRINAL_PARADOX = (
    Ballot.of("J1", I1=1, I2=1),
    Ballot.of("J2", I1=1, I2=0),
    Ballot.of("J3", I1=0, I2=1),
)
DOCTRINAL_PARADOX_OUTCOME = "I1 AND I2"
