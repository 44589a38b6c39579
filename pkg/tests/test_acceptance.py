"""Exit criteria for the package, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line; run with ``-s`` to see
them, or run this file directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import re
import sys
import traceback
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from _oracles import BasicSolutionOracle, beta_bernoulli_predictive, book_matrix  # noqa: E402
from ramsian.betting import Odds, credence_to_odds, odds_to_credence  # noqa: E402
from ramsian.cli import format_tables  # noqa: E402
from ramsian.coherence import Coherent, CredenceBook, check_coherence, verify_certificate  # noqa: E402
from ramsian.litigation import (  # noqa: E402
    CANVAS,
    MARGIN,
    Figure,
    paper_table,
    posterior_table,
    render_figure,
)
from ramsian.prob_core import EMBEDDED_STREAM, BetaParams, RoundingPolicy, convergence_demo  # noqa: E402
from ramsian.voting import (  # noqa: E402
    DOCTRINAL_PARADOX,
    DOCTRINAL_PARADOX_OUTCOME,
    Decision,
    Mode,
    aggregate_issues,
)

F = Fraction
GOLDEN = Path(__file__).parent / "golden"
FIGURE_RTOL = 1e-9


def gate(number: int, title: str, check) -> None:
    """Run one criterion, print its verdict line, and fail the test if it failed."""
    try:
        detail = check()
        ok = True
    except AssertionError as exc:
        ok, detail = False, str(exc) or traceback.format_exc(limit=1).strip()
    print(f"[{'PASS' if ok else 'FAIL'}] AC{number} {title}" + (f": {detail}" if detail else ""))
    assert ok, detail


def _table1():
    t = paper_table()
    got = (t.prior_pre, t.prior_post, t.cond_gov_given_pre, t.cond_gov_given_post)
    want = (F(48, 100), F(52, 100), F(21, 100), F(45, 100))
    assert got == want, f"{got} != {want}"
    return "(.48, .52, .21, .45) exact"


def _table2_paper():
    p = posterior_table(paper_table(), RoundingPolicy.PAPER)
    assert (p.joint_pre, p.joint_post) == (F(1, 10), F(2, 10)), (p.joint_pre, p.joint_post)
    assert p.marginal_gov == F(3, 10), p.marginal_gov
    assert (p.post_pre_given_gov, p.post_post_given_gov) == (F(1, 3), F(2, 3))
    text = format_tables(paper_table(), RoundingPolicy.PAPER)
    for row in (".1/.3 = .33", ".2/.3 = .66", ".1 + .2 = .3", ".33 + .66"):
        assert row in text, f"{row!r} missing from paper-mode tables"
    return "joints .1/.2, marginal .3, posteriors 1/3 and 2/3 shown as .33/.66"


def _exact_pipeline():
    # independent oracle: the products and quotient written out by hand
    j_pre, j_post = F(48, 100) * F(21, 100), F(52, 100) * F(45, 100)
    marginal = j_pre + j_post
    want = (j_pre, j_post, marginal, j_pre / marginal, j_post / marginal)
    assert want == (F("0.1008"), F("0.2340"), F("0.3348"), F(28, 93), F(65, 93))
    p = posterior_table(paper_table(), RoundingPolicy.EXACT)
    got = (p.joint_pre, p.joint_post, p.marginal_gov, p.post_pre_given_gov, p.post_post_given_gov)
    assert got == want, f"{got} != {want}"
    assert p.post_pre_given_gov + p.post_post_given_gov == 1
    # .66 is P(trial/post-trial | gov); P(pre-trial | gov) is 1/3
    paper = posterior_table(paper_table(), RoundingPolicy.PAPER)
    assert paper.post_pre_given_gov == F(1, 3) != F(66, 100)
    return "28/93 + 65/93 = 1"


def _odds():
    assert credence_to_odds(F(1, 3)) == Odds(2, 1)
    assert odds_to_credence(Odds(2, 1)) == F(1, 3)
    rng = random.Random(1926)
    n = 0
    while n < 2000:
        den = rng.randint(2, 10**6)
        num = rng.randint(1, den - 1)
        p = F(num, den)
        assert odds_to_credence(credence_to_odds(p)) == p, p
        n += 1
    return f"1/3 <-> 2:1; {n} random round trips exact"


QUOTIENTS = [F(0), F(1, 4), F(1, 2), F(3, 4), F(1)]


def _coherence_sweep():
    books = agree = incoherent = 0
    for n in (1, 2, 3):
        labels = [f"w{i}" for i in range(n)]
        events = [c for r in range(1, n + 1) for c in itertools.combinations(labels, r)]
        oracle = BasicSolutionOracle(book_matrix(labels, [set(e) for e in events]))
        for qs in itertools.product(QUOTIENTS, repeat=len(events)):
            book = CredenceBook.build(labels, list(zip(events, qs)))
            verdict = check_coherence(book)
            books += 1
            expected = oracle.feasible([1, *qs])
            assert isinstance(verdict, Coherent) == expected, f"disagreement on {dict(zip(events, qs))}"
            agree += 1
            assert verify_certificate(book, verdict), f"certificate rejected for {dict(zip(events, qs))}"
            if not expected:
                incoherent += 1
                price = dict(zip(events, qs))
                stakes = [(tuple(e.sorted_members()), s) for e, s in verdict.stakes]
                for o in labels:
                    # holder of stake s on E at price q nets s*(1[o in E] - q)
                    net = sum(s * ((1 if o in e else 0) - price[e]) for e, s in stakes)
                    assert net < 0, f"stakes do not lose on {o}: {price}"
    assert books == 5 + 5**3 + 5**7
    return f"{agree}/{books} verdicts match the oracle; {incoherent} Dutch books lose on every outcome"


def _doctrinal_paradox():
    issue = aggregate_issues(DOCTRINAL_PARADOX, DOCTRINAL_PARADOX_OUTCOME, mode=Mode.ISSUE)
    outcome = aggregate_issues(DOCTRINAL_PARADOX, DOCTRINAL_PARADOX_OUTCOME, mode=Mode.OUTCOME)
    assert issue.decision is Decision.BURDEN_MET, issue
    assert outcome.decision is Decision.BURDEN_NOT_MET, outcome
    assert dict(issue.issue_aggregates) == {"I1": F(2, 3), "I2": F(2, 3)}
    assert outcome.aggregate == F(1, 3)
    return "issue voting: met (2/3, 2/3); outcome voting: not met (1/3)"


def _convergence():
    stream = list(EMBEDDED_STREAM)
    assert len(stream) == 100
    a, b = BetaParams(1, 1), BetaParams(5, 1)
    steps = convergence_demo(a, b, stream)
    oracle_a = beta_bernoulli_predictive(1, 1, stream)
    oracle_b = beta_bernoulli_predictive(5, 1, stream)
    assert [s[0] for s in steps] == oracle_a and [s[1] for s in steps] == oracle_b
    initial = abs(a.mean - b.mean)
    final = abs(oracle_a[-1] - oracle_b[-1])
    assert final < initial, f"final {final} not below initial {initial}"
    assert final < abs(steps[0][0] - steps[0][1])
    same = convergence_demo(a, BetaParams(1, 1), stream)
    assert all(x == y for x, y in same)
    return f"|diff| {initial} -> {final}; equal priors identical"


RECT = re.compile(r'<rect class="[^"]*" x="[^"]*" y="[^"]*" width="([^"]*)" height="([^"]*)" data-area="([^"]*)"')


def _figures():
    side = CANVAS - 2 * MARGIN
    worst = 0.0
    for mode in ("exact", "paper"):
        table = posterior_table(paper_table(), RoundingPolicy(mode))
        expected = {
            Figure.PRIOR: [F("0.1008"), F("0.3792"), F("0.2340"), F("0.2860")],
            Figure.JOINT: [table.joint_pre, table.joint_post],
            Figure.POSTERIOR: [table.post_pre_given_gov, table.post_post_given_gov],
        }
        for k, which in enumerate(Figure, start=1):
            diagram = render_figure(table, which)
            svg = diagram.to_svg()
            assert svg == render_figure(table, which).to_svg(), "rendering is not deterministic"
            assert svg == (GOLDEN / mode / f"figure{k}.svg").read_text(encoding="utf-8"), (
                f"{mode}/figure{k}.svg differs from golden"
            )
            rects = RECT.findall(svg)
            assert len(rects) == len(expected[which])
            for (w, h, _), want in zip(rects, expected[which]):
                # area measured from the printed SVG geometry alone
                area = float(w) * float(h) / side**2
                err = abs(area - float(want)) / float(want)
                worst = max(worst, err)
                assert err < FIGURE_RTOL, f"{mode}/figure{k}: area {area} vs {want}, rel err {err:.2e}"
            if which is Figure.POSTERIOR:
                assert diagram.total_area == 1
                printed = sum(float(w) * float(h) for w, h, _ in rects) / side**2
                assert abs(printed - 1) < FIGURE_RTOL
    return f"worst relative area error {worst:.1e}; posterior areas sum to 1; goldens byte-stable"


def test_ac1_table1_reproduction():
    gate(1, "Table 1 reproduction", _table1)


def test_ac2_table2_paper_rounding():
    gate(2, "Table 2 reproduction (paper rounding)", _table2_paper)


def test_ac3_exact_pipeline():
    gate(3, "Exact-mode pipeline", _exact_pipeline)


def test_ac4_odds_conversion():
    gate(4, "Odds conversion", _odds)


def test_ac5_coherence_oracle_equivalence():
    gate(5, "Coherence oracle equivalence", _coherence_sweep)


def test_ac6_doctrinal_paradox():
    gate(6, "Doctrinal paradox fixture", _doctrinal_paradox)


def test_ac7_convergence_demo():
    gate(7, "Convergence demo", _convergence)


def test_ac8_figure_emission():
    gate(8, "Figure emission", _figures)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
