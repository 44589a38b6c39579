"""Command-line interface: ``ramsian <command> ...``.

Exit codes: 0 success (or a coherent book), 2 usage or input error,
3 incoherent book.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import betting, coherence, litigation, prob_core, voting
from .errors import RamsianError
from .numbers import decimal_str, round_half_up, to_fraction, truncate
from .prob_core import RoundingPolicy

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCOHERENT = 3

ROW_PRE = "Pre-trial disposition"
ROW_POST = "Disposition at trial or post-trial"
ROW_TOTAL = "Total"


def _d(x: Fraction, places: int, *, trunc: bool = False) -> str:
    """Decimal without a leading zero, the way the published tables print."""
    y = truncate(x, places) if trunc else round_half_up(x, places)
    if y == 1:
        return "1.0"
    return decimal_str(y, places, leading_zero=False)


def _short(x: Fraction) -> str:
    """Shortest exact decimal (.1, .48, .1008), falling back to four places."""
    for places in range(1, 5):
        if (x * 10**places).denominator == 1:
            return _d(x, places)
    return _d(x, 4)


def _exact(x: Fraction) -> str:
    return f"{x} ({_d(x, 4)})"


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [c.ljust(w) for c, w in zip(r, widths)]
        lines.append("   ".join(cells).rstrip())
    return "\n".join(lines)


def format_tables(t: litigation.StageTable, mode: RoundingPolicy) -> str:
    post = litigation.posterior_table(t, mode)
    if mode is RoundingPolicy.PAPER:
        fmt = _short
        total_a = f"{fmt(t.prior_pre)} + {fmt(t.prior_post)} = {_d(t.prior_pre + t.prior_post, 1)}"
        joint = [
            f"{_d(post.unrounded_pre, 4)} ≅ {fmt(post.joint_pre)}",
            f"{_d(post.unrounded_post, 4)} ≅ {fmt(post.joint_post)}",
        ]
        marg = fmt(post.marginal_gov)
        d_pre = _d(post.post_pre_given_gov, 2, trunc=True)
        d_post = _d(post.post_post_given_gov, 2, trunc=True)
        posterior = [
            f"{fmt(post.joint_pre)}/{marg} = {d_pre}",
            f"{fmt(post.joint_post)}/{marg} = {d_post}",
        ]
        total_c = f"{fmt(post.joint_pre)} + {fmt(post.joint_post)} = {marg} (as per addition rule)"
        total_d = f"{d_pre} + {d_post} ≅ 1"
    else:
        fmt = _exact
        total_a = f"{t.prior_pre} + {t.prior_post} = {t.prior_pre + t.prior_post}"
        joint = [fmt(post.joint_pre), fmt(post.joint_post)]
        posterior = [
            f"({post.joint_pre})/({post.marginal_gov}) = {fmt(post.post_pre_given_gov)}",
            f"({post.joint_post})/({post.marginal_gov}) = {fmt(post.post_post_given_gov)}",
        ]
        total_c = f"{post.joint_pre} + {post.joint_post} = {fmt(post.marginal_gov)} (as per addition rule)"
        total_d = (
            f"{post.post_pre_given_gov} + {post.post_post_given_gov} = "
            f"{post.post_pre_given_gov + post.post_post_given_gov}"
        )

    table1 = _grid(
        [
            ["", "A: P(stage)", "B: P(gov | stage)", "P(nongov | stage)"],
            [ROW_PRE, fmt(t.prior_pre), fmt(t.cond_gov_given_pre), fmt(t.cond_nongov_given_pre)],
            [ROW_POST, fmt(t.prior_post), fmt(t.cond_gov_given_post), fmt(t.cond_nongov_given_post)],
            [ROW_TOTAL, total_a, "", ""],
        ]
    )
    table2 = _grid(
        [
            ["", "C: P(gov, stage)", "D: P(stage | gov)"],
            [ROW_PRE, joint[0], posterior[0]],
            [ROW_POST, joint[1], posterior[1]],
            [ROW_TOTAL, total_c, total_d],
        ]
    )
    return (
        f"Table 1. Prior probabilities ({mode.value} mode)\n{table1}\n\n"
        f"Table 2. Posterior probabilities ({mode.value} mode)\n{table2}\n"
    )


def _stage_table(args: argparse.Namespace) -> litigation.StageTable:
    if args.cases:
        corpus = litigation.ingest_csv(Path(args.cases).read_text(encoding="utf-8"))
        return litigation.count_table(corpus)
    return litigation.paper_table()


def cmd_tables(args: argparse.Namespace) -> int:
    sys.stdout.write(format_tables(_stage_table(args), RoundingPolicy(args.mode)))
    return EXIT_OK


def cmd_figures(args: argparse.Namespace) -> int:
    table = litigation.posterior_table(_stage_table(args), RoundingPolicy(args.mode))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for k, which in enumerate(litigation.Figure, start=1):
        diagram = litigation.render_figure(table, which)
        path = out / f"figure{k}.svg"
        path.write_text(diagram.to_svg(), encoding="utf-8")
        print(f"{path}: {diagram.title}, total area {diagram.total_area}")
    return EXIT_OK


def _read_mapping(path: str) -> dict[str, Fraction]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"), parse_float=Fraction)
    if not isinstance(doc, dict) or not doc:
        raise ValueError(f"{path}: expected a nonempty JSON object of label -> probability")
    return {k: to_fraction(v) for k, v in doc.items()}


def cmd_update(args: argparse.Namespace) -> int:
    prior = prob_core.DiscreteDistribution.from_mapping(_read_mapping(args.prior))
    posterior = prob_core.update(prior, _read_mapping(args.likelihood))
    rows = [["cell", "prior", "posterior"]]
    for cell in prior.space:
        rows.append([cell, _exact(prior[cell]), _exact(posterior[cell])])
    print(_grid(rows))
    return EXIT_OK


def cmd_odds(args: argparse.Namespace) -> int:
    if args.from_odds is not None:
        o = betting.Odds.parse(args.from_odds)
        p = betting.odds_to_credence(o)
        print(f"odds {o} against = credence {p} ({_d(p, 4)})")
    else:
        p = to_fraction(args.p)
        print(f"credence {p} = odds {betting.credence_to_odds(p)} against")
    return EXIT_OK


def cmd_coherence(args: argparse.Namespace) -> int:
    book = coherence.load_book(Path(args.book).read_text(encoding="utf-8"))
    verdict = coherence.check_coherence(book)
    checked = coherence.verify_certificate(book, verdict)
    if isinstance(verdict, coherence.Coherent):
        print("COHERENT")
        print("witness distribution:")
        for o, m in verdict.witness.mass.items():
            print(f"  {o}: {m}")
        print(f"certificate verified: {'yes' if checked else 'NO'}")
        return EXIT_OK
    print("INCOHERENT")
    print("Dutch book (positive stake = buy at the stated quotient, negative = sell):")
    for event, stake in verdict.stakes:
        q = book.quotient(event)
        print(f"  {{{', '.join(event.sorted_members())}}} @ {q}: stake {stake}")
    print(f"guaranteed loss: {verdict.guaranteed_loss}")
    for o in book.space.outcomes:
        print(f"  payoff if {o}: {betting.book_payoff(verdict.bets(book), o)}")
    print(f"certificate verified: {'yes' if checked else 'NO'}")
    return EXIT_INCOHERENT


def _decision(d: voting.Decision) -> str:
    return "BURDEN MET" if d is voting.Decision.BURDEN_MET else "BURDEN NOT MET"


def cmd_vote(args: argparse.Namespace) -> int:
    ballots = voting.load_ballots(Path(args.ballots).read_text(encoding="utf-8"))
    print(f"{len(ballots)} ballots, rule {args.rule}")
    if args.issues:
        if not args.outcome_fn:
            raise ValueError("--issues requires --outcome-fn")
        fn = voting.parse_outcome_fn(args.outcome_fn)
        result = voting.aggregate_issues(ballots, fn, args.rule, args.mode)
        print(f"outcome function: {fn}")
        print(f"mode: {result.mode.value} voting")
        for issue, agg in result.issue_aggregates.items():
            print(f"  {issue}: {_exact(agg)}")
        if result.aggregate is not None:
            print(f"aggregate outcome score: {_exact(result.aggregate)}")
        print(f"decision: {_decision(result.decision)}")
        return EXIT_OK

    question = args.question
    if question is None:
        questions = sorted(set().union(*(b.scores.keys() for b in ballots)))
        if len(questions) != 1:
            raise ValueError(f"ballots score several questions {questions}; pass --question")
        question = questions[0]
    result = voting.aggregate_outcome(ballots, question, args.rule)
    baseline = voting.binary_baseline(ballots, question)
    print(f"question: {question}")
    print(f"aggregate score: {_exact(result.aggregate)}")
    print(f"decision: {_decision(result.decision)}")
    print(f"binary baseline: {baseline.aggregate} yes -> {_decision(baseline.decision)}")
    return EXIT_OK


def _beta(text: str) -> prob_core.BetaParams:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"Beta prior must look like 'ALPHA:BETA', got {text!r}")
    return prob_core.BetaParams(to_fraction(parts[0]), to_fraction(parts[1]))


def read_stream(text: str) -> list[int]:
    """0/1 observations; whitespace and commas are ignored."""
    cleaned = re.sub(r"[\s,]+", "", text)
    bad = set(cleaned) - {"0", "1"}
    if bad:
        raise ValueError(f"stream may only contain 0 and 1, found {sorted(bad)}")
    return [int(c) for c in cleaned]


def cmd_converge(args: argparse.Namespace) -> int:
    a, b = _beta(args.prior_a), _beta(args.prior_b)
    if args.stream:
        stream = read_stream(Path(args.stream).read_text(encoding="utf-8"))
    else:
        stream = list(prob_core.EMBEDDED_STREAM)
    steps = prob_core.convergence_demo(a, b, stream)
    rows = [["step", "obs", "agent A", "agent B", "|A - B|"]]
    rows.append(["0", "-", _exact(a.mean), _exact(b.mean), _exact(abs(a.mean - b.mean))])
    for k, (obs, (pa, pb)) in enumerate(zip(stream, steps), start=1):
        rows.append([str(k), str(obs), _exact(pa), _exact(pb), _exact(abs(pa - pb))])
    print(_grid(rows))
    initial = abs(a.mean - b.mean)
    final = abs(steps[-1][0] - steps[-1][1])
    print(f"initial |difference| {_d(initial, 4)}, final |difference| {_d(final, 4)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsian",
        description="Exact subjective probability: litigation tables, odds, coherence, judicial voting.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("tables", help="print the prior and posterior tables")
    p.add_argument("--mode", choices=["exact", "paper"], default="exact")
    p.add_argument("--cases", help="CSV corpus (id,stage,party) instead of the published table")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("figures", help="write figure1.svg, figure2.svg, figure3.svg")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--mode", choices=["exact", "paper"], default="exact")
    p.add_argument("--cases", help="CSV corpus (id,stage,party) instead of the published table")
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("update", help="Bayesian update over a finite partition")
    p.add_argument("--prior", required=True, help='JSON object, e.g. {"A": ".48", "C": ".52"}')
    p.add_argument("--likelihood", required=True, help="JSON object of per-cell likelihoods")
    p.set_defaults(func=cmd_update)

    p = sub.add_parser("odds", help="convert a credence to odds against, or back")
    p.add_argument("p", nargs="?", help="credence, e.g. 1/3 or .25")
    p.add_argument("--from-odds", metavar="A:B", help="odds against, e.g. 2:1")
    p.set_defaults(func=cmd_odds)

    p = sub.add_parser("coherence", help="check a credence book for Dutch books")
    p.add_argument("--book", required=True, help="JSON credence book")
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("vote", help="aggregate judges' credence ballots")
    p.add_argument("--ballots", required=True, help="JSON ballot file")
    p.add_argument("--question", help="question id (default: the only one on the ballots)")
    p.add_argument("--issues", action="store_true", help="decide through an outcome function over issues")
    p.add_argument("--outcome-fn", metavar="EXPR", help="e.g. 'I1 AND (I2 OR NOT I3)'")
    p.add_argument("--mode", choices=["issue", "outcome"], default="issue")
    p.add_argument("--rule", choices=["mean", "median"], default="mean")
    p.set_defaults(func=cmd_vote)

    p = sub.add_parser("converge", help="two Beta-Bernoulli agents updating on the same evidence")
    p.add_argument("--prior-a", required=True, metavar="A:B", help="Beta(alpha, beta) of agent A, e.g. 1:1")
    p.add_argument("--prior-b", required=True, metavar="A:B", help="Beta(alpha, beta) of agent B, e.g. 5:1")
    p.add_argument("--stream", help="file of 0/1 observations (default: embedded 100 flips)")
    p.set_defaults(func=cmd_converge)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "odds" and (args.p is None) == (args.from_odds is None):
        parser.error("odds takes either a credence or --from-odds, not both")
    try:
        return args.func(args)
    except (RamsianError, ValueError, TypeError, OSError) as exc:
        print(f"ramsian {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
