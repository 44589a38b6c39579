"""The litigation "urn": case counts, the prior and posterior tables, and area diagrams.

Cases are classified by the stage at which they were disposed of (pre-trial,
or trial/post-trial) and by whether a non-criminal government party was
involved.  The stage priors and the within-stage share of government cases
make up the prior table; conditioning on "government case" gives the
posterior table.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateCorpusError, ParseError
from .numbers import ONE, ZERO, probability, round_half_up, sig_digits
from .prob_core import RoundingPolicy, addition_rule, bayes_posterior, multiply_rule


class Stage(str, enum.Enum):
    PRE_TRIAL = "pretrial"
    TRIAL_OR_POST = "trial_or_post"


class Party(str, enum.Enum):
    GOV = "gov"
    NONGOV = "nongov"


@dataclass(frozen=True)
class CaseRecord:
    id: str
    stage: Stage
    party: Party

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError("case id must be a nonempty string")
        object.__setattr__(self, "stage", Stage(self.stage))
        object.__setattr__(self, "party", Party(self.party))


@dataclass(frozen=True)
class CaseCorpus:
    records: tuple[CaseRecord, ...]

    def __post_init__(self) -> None:
        records = tuple(self.records)
        object.__setattr__(self, "records", records)
        seen = set()
        for r in records:
            if r.id in seen:
                raise ValueError(f"duplicate case id {r.id!r}")
            seen.add(r.id)

    def __len__(self) -> int:
        return len(self.records)

    def count(self, stage: Stage | None = None, party: Party | None = None) -> int:
        return sum(
            1
            for r in self.records
            if (stage is None or r.stage == stage) and (party is None or r.party == party)
        )


# (stage, party) -> number of cases; the four cells behind 15/71 and 39/86
EMBEDDED_COUNTS = {
    (Stage.PRE_TRIAL, Party.GOV): 15,
    (Stage.PRE_TRIAL, Party.NONGOV): 56,
    (Stage.TRIAL_OR_POST, Party.GOV): 39,
    (Stage.TRIAL_OR_POST, Party.NONGOV): 47,
}


def embedded_corpus() -> CaseCorpus:
    """157 synthetic records reproducing the published cell counts.

    Only the counts are real; ids are generated (``pre-gov-001`` ...).
    """
    prefix = {Stage.PRE_TRIAL: "pre", Stage.TRIAL_OR_POST: "post"}
    records = [
        CaseRecord(f"{prefix[stage]}-{party.value}-{k:03d}", stage, party)
        for (stage, party), n in EMBEDDED_COUNTS.items()
        for k in range(1, n + 1)
    ]
    return CaseCorpus(tuple(records))


CSV_HEADER = ["id", "stage", "party"]


def ingest_csv(text: str) -> CaseCorpus:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input; expected header 'id,stage,party'", 1) from None
    if header != CSV_HEADER:
        raise ParseError(f"header must be exactly 'id,stage,party', got {','.join(header)!r}", 1)
    records = []
    first_line: dict[str, int] = {}
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        if len(row) != 3:
            raise ParseError(f"expected 3 columns (id,stage,party), got {len(row)}", line)
        case_id, stage, party = (c.strip() for c in row)
        if not case_id:
            raise ParseError("empty case id", line)
        try:
            stage = Stage(stage)
        except ValueError:
            raise ParseError(f"unknown stage {stage!r}; expected pretrial or trial_or_post", line) from None
        try:
            party = Party(party)
        except ValueError:
            raise ParseError(f"unknown party {party!r}; expected gov or nongov", line) from None
        if case_id in first_line:
            raise ParseError(f"duplicate id {case_id!r} (first seen on line {first_line[case_id]})", line)
        first_line[case_id] = line
        records.append(CaseRecord(case_id, stage, party))
    return CaseCorpus(tuple(records))


def dump_csv(corpus: CaseCorpus) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in corpus.records:
        writer.writerow([r.id, r.stage.value, r.party.value])
    return out.getvalue()


@dataclass(frozen=True)
class StageTable:
    prior_pre: Fraction
    prior_post: Fraction
    cond_gov_given_pre: Fraction
    cond_gov_given_post: Fraction

    def __post_init__(self) -> None:
        for name in ("prior_pre", "prior_post", "cond_gov_given_pre", "cond_gov_given_post"):
            object.__setattr__(self, name, probability(getattr(self, name), name))
        if self.prior_pre + self.prior_post != ONE:
            raise ValueError(
                f"stage priors must sum to 1, got {self.prior_pre} + {self.prior_post}"
            )

    @property
    def cond_nongov_given_pre(self) -> Fraction:
        return ONE - self.cond_gov_given_pre

    @property
    def cond_nongov_given_post(self) -> Fraction:
        return ONE - self.cond_gov_given_post


def count_table(corpus: CaseCorpus) -> StageTable:
    total = len(corpus)
    if total == 0:
        raise DegenerateCorpusError("corpus is empty")
    n_pre = corpus.count(Stage.PRE_TRIAL)
    n_post = corpus.count(Stage.TRIAL_OR_POST)
    for stage, n in ((Stage.PRE_TRIAL, n_pre), (Stage.TRIAL_OR_POST, n_post)):
        if n == 0:
            raise DegenerateCorpusError(f"no {stage.value} cases; conditional shares are undefined")
    return StageTable(
        prior_pre=Fraction(n_pre, total),
        prior_post=Fraction(n_post, total),
        cond_gov_given_pre=Fraction(corpus.count(Stage.PRE_TRIAL, Party.GOV), n_pre),
        cond_gov_given_post=Fraction(corpus.count(Stage.TRIAL_OR_POST, Party.GOV), n_post),
    )


def paper_table() -> StageTable:
    """The published two-decimal priors (.48/.52) and government shares (.21/.45)."""
    return StageTable(
        prior_pre=Fraction("0.48"),
        prior_post=Fraction("0.52"),
        cond_gov_given_pre=Fraction("0.21"),
        cond_gov_given_post=Fraction("0.45"),
    )


@dataclass(frozen=True)
class PosteriorTable:
    joint_pre: Fraction
    joint_post: Fraction
    marginal_gov: Fraction
    post_pre_given_gov: Fraction
    post_post_given_gov: Fraction
    policy: RoundingPolicy
    # the table the joints were computed from, kept for figure layout
    stages: StageTable = field(repr=False)
    # joints before PAPER rounding (equal to the joints in EXACT mode)
    unrounded_pre: Fraction = field(repr=False)
    unrounded_post: Fraction = field(repr=False)


def posterior_table(t: StageTable, policy: RoundingPolicy = RoundingPolicy.EXACT) -> PosteriorTable:
    raw_pre = multiply_rule(t.prior_pre, t.cond_gov_given_pre)
    raw_post = multiply_rule(t.prior_post, t.cond_gov_given_post)
    if policy is RoundingPolicy.PAPER:
        joint_pre, joint_post = round_half_up(raw_pre, 1), round_half_up(raw_post, 1)
    else:
        joint_pre, joint_post = raw_pre, raw_post
    marginal = addition_rule([joint_pre, joint_post])
    return PosteriorTable(
        joint_pre=joint_pre,
        joint_post=joint_post,
        marginal_gov=marginal,
        post_pre_given_gov=bayes_posterior(joint_pre, marginal),
        post_post_given_gov=bayes_posterior(joint_post, marginal),
        policy=policy,
        stages=t,
        unrounded_pre=raw_pre,
        unrounded_post=raw_post,
    )


class Figure(str, enum.Enum):
    PRIOR = "prior"
    JOINT = "joint"
    POSTERIOR = "posterior"


@dataclass(frozen=True)
class Rect:
    x: Fraction
    y: Fraction
    width: Fraction
    height: Fraction
    label: str
    fill: str

    @property
    def area(self) -> Fraction:
        return self.width * self.height


@dataclass(frozen=True)
class AreaDiagram:
    """Rectangles on the unit square, y measured downward from the top edge."""

    which: Figure
    rectangles: tuple[Rect, ...]
    title: str

    @property
    def total_area(self) -> Fraction:
        return sum((r.area for r in self.rectangles), ZERO)

    def to_svg(self) -> str:
        return _svg(self)


TITLES = {
    Figure.PRIOR: "PRIOR PROBABILITIES",
    Figure.JOINT: "JOINT PROBABILITIES",
    Figure.POSTERIOR: "POSTERIOR PROBABILITIES",
}


def render_figure(
    table: StageTable | PosteriorTable,
    which: Figure | str,
    policy: RoundingPolicy = RoundingPolicy.EXACT,
) -> AreaDiagram:
    """Area diagram of the prior, joint or posterior stage of the update.

    Pre-trial is the left column and government cases sit at the bottom of
    each column.  ``policy`` only matters when ``table`` is a StageTable and
    a joint or posterior figure is requested.
    """
    which = Figure(which)
    if isinstance(table, PosteriorTable):
        post, stages = table, table.stages
    else:
        stages = table
        post = posterior_table(table, policy) if which is not Figure.PRIOR else None

    w_pre, w_post = stages.prior_pre, stages.prior_post
    if which is Figure.PRIOR:
        g_pre, g_post = stages.cond_gov_given_pre, stages.cond_gov_given_post
        rects = (
            Rect(ZERO, ONE - g_pre, w_pre, g_pre, "pre-trial, government", "gov-pre"),
            Rect(ZERO, ZERO, w_pre, ONE - g_pre, "pre-trial, non-government", "nongov"),
            Rect(w_pre, ONE - g_post, w_post, g_post, "trial/post-trial, government", "gov-post"),
            Rect(w_pre, ZERO, w_post, ONE - g_post, "trial/post-trial, non-government", "nongov"),
        )
    elif which is Figure.JOINT:
        # heights chosen so each strip's area is the joint actually used downstream
        h_pre = post.joint_pre / w_pre if w_pre else ZERO
        h_post = post.joint_post / w_post if w_post else ZERO
        rects = (
            Rect(ZERO, ONE - h_pre, w_pre, h_pre, "pre-trial, government", "gov-pre"),
            Rect(w_pre, ONE - h_post, w_post, h_post, "trial/post-trial, government", "gov-post"),
        )
    else:
        # bayes_posterior already refused a zero marginal
        a, b = post.post_pre_given_gov, post.post_post_given_gov
        rects = (
            Rect(ZERO, ZERO, a, ONE, "pre-trial | government", "gov-pre"),
            Rect(a, ZERO, b, ONE, "trial/post-trial | government", "gov-post"),
        )
    return AreaDiagram(which, tuple(r for r in rects if r.width and r.height), TITLES[which])


CANVAS = 600
MARGIN = 10
SVG_DIGITS = 12

_STYLE = (
    ".nongov{fill:#ffffff;stroke:#000000;stroke-width:1}"
    ".gov-pre{fill:url(#striped);stroke:#000000;stroke-width:1}"
    ".gov-post{fill:url(#dotted);stroke:#000000;stroke-width:1}"
)


def _num(x: Fraction) -> str:
    return sig_digits(x, SVG_DIGITS)


def _svg(diagram: AreaDiagram) -> str:
    side = Fraction(CANVAS - 2 * MARGIN)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f"<title>{diagram.title}</title>",
        "<defs>",
        '<pattern id="striped" width="8" height="8" patternUnits="userSpaceOnUse">'
        '<rect width="8" height="8" fill="#ffffff"/>'
        '<path d="M0,8 L8,0" stroke="#000000" stroke-width="1"/></pattern>',
        '<pattern id="dotted" width="6" height="6" patternUnits="userSpaceOnUse">'
        '<rect width="6" height="6" fill="#ffffff"/>'
        '<circle cx="3" cy="3" r="1" fill="#000000"/></pattern>',
        f"<style>{_STYLE}</style>",
        "</defs>",
    ]
    for r in diagram.rectangles:
        gov = r.fill.startswith("gov")
        cls = f"gov {r.fill}" if gov else r.fill
        lines.append(
            f'<rect class="{cls}" x="{_num(MARGIN + r.x * side)}" y="{_num(MARGIN + r.y * side)}" '
            f'width="{_num(r.width * side)}" height="{_num(r.height * side)}" '
            f'data-area="{r.area}"><title>{r.label}: {r.area}</title></rect>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
