"""Exact subjective probability: degrees of belief as betting quotients.

Finite Bayesian updating, credences as betting odds, Dutch-book coherence
with checkable certificates, and credence-valued panel voting.
"""

from .betting import BetOffer, Odds, bet_payoff, book_payoff, credence_to_odds, odds_to_credence
from .coherence import (
    CredenceBook,
    Coherent,
    Incoherent,
    check_coherence,
    load_book,
    verify_certificate,
)
from .errors import (
    CapacityError,
    DegenerateCorpusError,
    InvalidDecompositionError,
    NullEvidenceError,
    ParseError,
    RamsianError,
    StructuralError,
    UnrepresentableCertaintyError,
)
from .litigation import (
    AreaDiagram,
    CaseCorpus,
    CaseRecord,
    Figure,
    Party,
    PosteriorTable,
    Stage,
    StageTable,
    count_table,
    embedded_corpus,
    ingest_csv,
    paper_table,
    posterior_table,
    render_figure,
)
from .prob_core import (
    BetaParams,
    DiscreteDistribution,
    Event,
    RoundingPolicy,
    SampleSpace,
    addition_rule,
    bayes_posterior,
    convergence_demo,
    event_probability,
    multiply_rule,
    update,
)
from .voting import (
    Ballot,
    Decision,
    Mode,
    PanelResult,
    Rule,
    aggregate_issues,
    aggregate_outcome,
    binary_baseline,
    parse_outcome_fn,
)

__version__ = "0.1.0"
