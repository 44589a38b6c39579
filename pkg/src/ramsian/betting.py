"""Credences as betting odds, and the payoff of bets at a betting quotient.

Odds are quoted *against:for*, so a credence of 1/3 is "2 to 1".  A bet on
event E at quotient q with stake S costs the buyer q*S and pays S if E
happens.  A negative stake is the seller's side of the same bet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import StructuralError, UnrepresentableCertaintyError
from .numbers import ONE, ZERO, RationalLike, probability, to_fraction
from .prob_core import Event


@dataclass(frozen=True)
class Odds:
    against: Fraction
    for_: Fraction

    def __post_init__(self) -> None:
        against, for_ = to_fraction(self.against), to_fraction(self.for_)
        if against <= 0 or for_ <= 0:
            raise ValueError(f"odds components must be positive, got {against}:{for_}")
        # lowest integer terms: clear denominators, then divide by the gcd
        lcm = math.lcm(against.denominator, for_.denominator)
        a, f = int(against * lcm), int(for_ * lcm)
        g = math.gcd(a, f)
        object.__setattr__(self, "against", Fraction(a // g))
        object.__setattr__(self, "for_", Fraction(f // g))

    @classmethod
    def parse(cls, text: str) -> Odds:
        """Read ``"A:B"`` (also accepts ``"A to B"``)."""
        sep = ":" if ":" in text else " to "
        parts = text.split(sep)
        if len(parts) != 2:
            raise ValueError(f"odds must look like 'A:B', got {text!r}")
        return cls(to_fraction(parts[0]), to_fraction(parts[1]))

    def __str__(self) -> str:
        return f"{self.against}:{self.for_}"


@dataclass(frozen=True)
class BetOffer:
    event: Event
    quotient: Fraction
    stake: Fraction = ONE

    def __post_init__(self) -> None:
        object.__setattr__(self, "quotient", probability(self.quotient, "betting quotient"))
        object.__setattr__(self, "stake", to_fraction(self.stake))

    def sold(self) -> BetOffer:
        """The other side of this bet."""
        return BetOffer(self.event, self.quotient, -self.stake)


def credence_to_odds(p: RationalLike) -> Odds:
    p = probability(p, "credence")
    if p in (ZERO, ONE):
        raise UnrepresentableCertaintyError(f"credence {p} has no finite odds")
    return Odds(ONE - p, p)


def odds_to_credence(o: Odds) -> Fraction:
    return o.for_ / (o.for_ + o.against)


def bet_payoff(bet: BetOffer, realized: str) -> Fraction:
    """Buyer's net gain once ``realized`` is known; sellers (negative stake) get the negation."""
    bet.event.space.check_outcome(realized)
    won = ONE if realized in bet.event else ZERO
    return bet.stake * (won - bet.quotient)


def book_payoff(bets: Iterable[BetOffer], realized: str) -> Fraction:
    bets = list(bets)
    if not bets:
        return ZERO
    space = bets[0].event.space
    if any(b.event.space != space for b in bets):
        raise StructuralError("all bets in a book must share one sample space")
    space.check_outcome(realized)
    won = sum((b.stake for b in bets if realized in b.event.members), ZERO)
    return won - sum((b.stake * b.quotient for b in bets), ZERO)
