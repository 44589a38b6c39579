"""Exact finite probability: sample spaces, events, distributions and Bayes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import InvalidDecompositionError, NullEvidenceError, StructuralError
from .numbers import ONE, ZERO, RationalLike, probability, to_fraction


class RoundingPolicy(enum.Enum):
    EXACT = "exact"
    # joints rounded to one decimal before the marginal and the division
    PAPER = "paper"


@dataclass(frozen=True)
class SampleSpace:
    outcomes: tuple[str, ...]

    def __post_init__(self) -> None:
        outcomes = tuple(self.outcomes)
        object.__setattr__(self, "outcomes", outcomes)
        if not outcomes:
            raise StructuralError("sample space must have at least one outcome")
        if len(set(outcomes)) != len(outcomes):
            raise StructuralError(f"duplicate outcome labels in {outcomes}")
        for label in outcomes:
            if not isinstance(label, str) or not label:
                raise StructuralError(f"outcome labels must be nonempty strings, got {label!r}")

    def __contains__(self, label: object) -> bool:
        return label in self.outcomes

    def __iter__(self):
        return iter(self.outcomes)

    def __len__(self) -> int:
        return len(self.outcomes)

    def event(self, members: Iterable[str]) -> Event:
        return Event(self, frozenset(members))

    def check_outcome(self, label: str) -> None:
        if label not in self.outcomes:
            raise StructuralError(f"unknown outcome {label!r}; expected one of {list(self.outcomes)}")


@dataclass(frozen=True)
class Event:
    space: SampleSpace
    members: frozenset[str]

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        unknown = sorted(members.difference(self.space.outcomes))
        if unknown:
            raise StructuralError(f"event references outcomes not in the space: {unknown}")

    def __contains__(self, label: object) -> bool:
        return label in self.members

    def complement(self) -> Event:
        return Event(self.space, frozenset(self.space.outcomes) - self.members)

    def sorted_members(self) -> list[str]:
        """Members in the space's outcome order."""
        return [o for o in self.space.outcomes if o in self.members]


@dataclass(frozen=True)
class DiscreteDistribution:
    space: SampleSpace
    mass: Mapping[str, Fraction] = field(compare=False)

    def __post_init__(self) -> None:
        mass = {}
        for label, value in self.mass.items():
            self.space.check_outcome(label)
            mass[label] = probability(value, f"mass of {label!r}")
        missing = [o for o in self.space.outcomes if o not in mass]
        if missing:
            raise StructuralError(f"no mass given for outcomes {missing}")
        total = sum(mass.values(), ZERO)
        if total != ONE:
            raise InvalidDecompositionError(f"masses sum to {total}, not 1")
        ordered = {o: mass[o] for o in self.space.outcomes}
        object.__setattr__(self, "mass", MappingProxyType(ordered))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiscreteDistribution):
            return NotImplemented
        return self.space == other.space and dict(self.mass) == dict(other.mass)

    def __hash__(self) -> int:
        return hash((self.space, tuple(self.mass.items())))

    def __getitem__(self, label: str) -> Fraction:
        return self.mass[label]

    @classmethod
    def from_mapping(cls, mass: Mapping[str, RationalLike]) -> DiscreteDistribution:
        """Distribution whose space is the mapping's keys, in insertion order."""
        return cls(SampleSpace(tuple(mass)), {k: to_fraction(v) for k, v in mass.items()})

    @classmethod
    def uniform(cls, space: SampleSpace) -> DiscreteDistribution:
        share = Fraction(1, len(space))
        return cls(space, {o: share for o in space.outcomes})


def event_probability(dist: DiscreteDistribution, e: Event) -> Fraction:
    if e.space != dist.space:
        raise StructuralError("event and distribution live on different sample spaces")
    return sum((dist.mass[o] for o in e.members), ZERO)


def multiply_rule(prior: RationalLike, conditional: RationalLike) -> Fraction:
    """Joint probability P(B, A) = P(A) * P(B|A)."""
    return probability(prior, "prior") * probability(conditional, "conditional")


def addition_rule(joints: Iterable[RationalLike]) -> Fraction:
    """Marginal as the sum of the joints over a partition."""
    total = sum((probability(j, "joint") for j in joints), ZERO)
    if total > ONE:
        raise InvalidDecompositionError(f"joints sum to {total} > 1")
    return total


def bayes_posterior(joint: RationalLike, marginal: RationalLike) -> Fraction:
    joint = probability(joint, "joint")
    marginal = probability(marginal, "marginal")
    if marginal == ZERO:
        raise NullEvidenceError("cannot condition on evidence of probability zero")
    if joint > marginal:
        raise InvalidDecompositionError(f"joint {joint} exceeds marginal {marginal}")
    return joint / marginal


def update(prior: DiscreteDistribution, likelihoods: Mapping[str, RationalLike]) -> DiscreteDistribution:
    """Posterior over the cells of ``prior`` given per-cell likelihoods of the evidence."""
    for label in likelihoods:
        prior.space.check_outcome(label)
    missing = [c for c in prior.space.outcomes if c not in likelihoods]
    if missing:
        raise StructuralError(f"no likelihood for cells {missing}")
    joints = {c: multiply_rule(prior.mass[c], likelihoods[c]) for c in prior.space.outcomes}
    marginal = sum(joints.values(), ZERO)
    if marginal == ZERO:
        raise NullEvidenceError("evidence has probability zero under the prior")
    return DiscreteDistribution(prior.space, {c: j / marginal for c, j in joints.items()})


@dataclass(frozen=True)
class BetaParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        alpha, beta = to_fraction(self.alpha), to_fraction(self.beta)
        if alpha <= 0 or beta <= 0:
            raise StructuralError(f"Beta parameters must be positive, got ({alpha}, {beta})")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def mean(self) -> Fraction:
        return self.alpha / (self.alpha + self.beta)


def convergence_demo(
    prior_a: BetaParams, prior_b: BetaParams, stream: Sequence[int]
) -> list[tuple[Fraction, Fraction]]:
    """Predictive probabilities of two Beta-Bernoulli agents after each observation.

    Both agents see the same binary ``stream``; entry ``i`` is the pair of
    posterior means once the first ``i + 1`` observations are in.
    """
    if not stream:
        raise StructuralError("observation stream is empty")
    successes = 0
    out = []
    for n, obs in enumerate(stream, start=1):
        if obs not in (0, 1) or isinstance(obs, bool):
            raise StructuralError(f"observations must be 0 or 1, got {obs!r}")
        successes += obs
        out.append(
            tuple(
                (successes + p.alpha) / (n + p.alpha + p.beta) for p in (prior_a, prior_b)
            )
        )
    return out


# 100 fixed coin flips (63 heads) used by the convergence demo and its tests.
EMBEDDED_STREAM: tuple[int, ...] = tuple(
    int(c)
    for c in (
        "1101101011" "0111010110" "1011100101" "1101011011" "0110101101"
        "1010110111" "0101101101" "1001110110" "1101001011" "0110110101"
    )
)
