"""Dutch-book coherence of a finite book of credences.

A book is coherent when some probability measure on the sample space gives
every assessed event exactly its quotient.  Otherwise the Farkas vector of
the infeasible system is a set of stakes that loses money whatever happens.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .betting import BetOffer, book_payoff
from .errors import CapacityError, ParseError, StructuralError
from .feasibility import find_feasible
from .numbers import ONE, ZERO, RationalLike, probability, to_fraction
from .prob_core import DiscreteDistribution, Event, SampleSpace, event_probability

MAX_OUTCOMES = 16
MAX_ASSESSMENTS = 32


@dataclass(frozen=True)
class CredenceBook:
    space: SampleSpace
    assessments: tuple[tuple[Event, Fraction], ...]

    def __post_init__(self) -> None:
        seen: dict[frozenset[str], Fraction] = {}
        cleaned = []
        for event, q in self.assessments:
            if not isinstance(event, Event):
                event = self.space.event(event)
            if event.space != self.space:
                raise StructuralError("assessed event belongs to a different sample space")
            q = probability(q, "quotient")
            prev = seen.setdefault(event.members, q)
            if prev != q:
                raise StructuralError(
                    f"event {event.sorted_members()} assessed twice with different quotients ({prev}, {q})"
                )
            cleaned.append((event, q))
        object.__setattr__(self, "assessments", tuple(cleaned))

    @classmethod
    def build(
        cls, outcomes: Iterable[str], assessments: Iterable[tuple[Iterable[str], RationalLike]]
    ) -> CredenceBook:
        space = SampleSpace(tuple(outcomes))
        return cls(space, tuple((space.event(e), to_fraction(q)) for e, q in assessments))

    def quotient(self, event: Event) -> Fraction | None:
        for e, q in self.assessments:
            if e.members == event.members:
                return q
        return None


@dataclass(frozen=True)
class Coherent:
    witness: DiscreteDistribution

    coherent = True


@dataclass(frozen=True)
class Incoherent:
    stakes: tuple[tuple[Event, Fraction], ...]
    guaranteed_loss: Fraction

    coherent = False

    def bets(self, book: CredenceBook) -> list[BetOffer]:
        """The stakes as bets at the book's own quotients."""
        return [BetOffer(e, book.quotient(e), s) for e, s in self.stakes]


CoherenceVerdict = Union[Coherent, Incoherent]


def check_coherence(book: CredenceBook) -> CoherenceVerdict:
    outcomes = book.space.outcomes
    if len(outcomes) > MAX_OUTCOMES:
        raise CapacityError(f"{len(outcomes)} outcomes exceeds the limit of {MAX_OUTCOMES}")
    if len(book.assessments) > MAX_ASSESSMENTS:
        raise CapacityError(
            f"{len(book.assessments)} assessments exceeds the limit of {MAX_ASSESSMENTS}"
        )

    # row 0: total mass 1; row i: mass of the i-th assessed event
    A = [[1] * len(outcomes)]
    b = [ONE]
    for event, q in book.assessments:
        A.append([1 if o in event.members else 0 for o in outcomes])
        b.append(q)
    result = find_feasible(A, b)

    if result.feasible:
        return Coherent(DiscreteDistribution(book.space, dict(zip(outcomes, result.point))))

    # buying y_i units of bet i pays sum_i y_i*(1[w in E_i] - q_i) <= -(y.b) < 0 at every w
    raw = result.farkas[1:]
    scale = max(abs(y) for y in raw)
    staked = [(event, q, y / scale) for (event, q), y in zip(book.assessments, raw) if y]
    cost = sum((s * q for _, q, s in staked), ZERO)
    loss = min(cost - sum((s for e, _, s in staked if o in e.members), ZERO) for o in outcomes)
    return Incoherent(tuple((e, s) for e, _, s in staked), loss)


def verify_certificate(book: CredenceBook, verdict: CoherenceVerdict) -> bool:
    """Re-check a verdict from scratch; never raises on a bad certificate."""
    try:
        if isinstance(verdict, Coherent):
            w = verdict.witness
            if w.space != book.space:
                return False
            return all(event_probability(w, e) == q for e, q in book.assessments)
        if isinstance(verdict, Incoherent):
            if verdict.guaranteed_loss <= 0:
                return False
            if any(e.space != book.space or book.quotient(e) is None for e, _ in verdict.stakes):
                return False
            bets = verdict.bets(book)
            return all(
                book_payoff(bets, o) <= -verdict.guaranteed_loss for o in book.space.outcomes
            )
    except (ValueError, TypeError):
        return False
    return False


def load_book(text: str) -> CredenceBook:
    """Parse the JSON book format.

    ``{"outcomes": ["e", "not_e"], "assessments": [{"event": ["e"], "quotient": "3/5"}]}``

    Quotients may be ``"num/den"`` strings, decimal strings or JSON numbers;
    all are read exactly.
    """
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(doc, dict) or "outcomes" not in doc or "assessments" not in doc:
        raise ParseError("book must be an object with 'outcomes' and 'assessments'")
    outcomes = doc["outcomes"]
    if not isinstance(outcomes, list):
        raise ParseError("'outcomes' must be a list of labels")
    pairs = []
    for k, item in enumerate(doc["assessments"]):
        if not isinstance(item, dict) or "event" not in item or "quotient" not in item:
            raise ParseError(f"assessment #{k} needs 'event' and 'quotient'")
        if not isinstance(item["event"], list):
            raise ParseError(f"assessment #{k}: 'event' must be a list of labels")
        try:
            pairs.append((item["event"], to_fraction(item["quotient"])))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"assessment #{k}: {exc}") from exc
    try:
        return CredenceBook.build(outcomes, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def dump_book(book: CredenceBook) -> str:
    return json.dumps(
        {
            "outcomes": list(book.space.outcomes),
            "assessments": [
                {"event": e.sorted_members(), "quotient": str(q)} for e, q in book.assessments
            ],
        },
        indent=2,
    )
