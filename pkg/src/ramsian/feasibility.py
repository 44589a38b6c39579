"""Exact phase-one simplex for ``A x = b, x >= 0``.

Either returns a feasible point or a Farkas vector ``y`` with
``y.A <= 0`` componentwise and ``y.b > 0``, which proves no such ``x``
exists.  Arithmetic is over Fractions and pivoting follows Bland's rule,
so the result is deterministic and the loop terminates.

The tableau runs on ``gmpy2.mpq`` when gmpy2 is installed (several times
faster than Fraction); inputs and outputs are Fractions either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - pure-Python fallback
    _Q = Fraction

ZERO = _Q(0)
ONE = _Q(1)


def _to_q(x) -> _Q:
    if isinstance(x, int):
        return _Q(x)
    if not isinstance(x, Fraction):
        x = Fraction(x)
    return _Q(x.numerator, x.denominator)


def _from_q(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class Feasibility:
    point: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None

    @property
    def feasible(self) -> bool:
        return self.point is not None


def find_feasible(A: Sequence[Sequence[Fraction | int]], b: Sequence[Fraction | int]) -> Feasibility:
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged constraint matrix")
    if len(b) != m:
        raise ValueError("right-hand side length does not match the matrix")
    if m == 0:
        return Feasibility(point=tuple(Fraction(0) for _ in range(n)))

    # make b >= 0 so the all-artificial basis is feasible; remember flipped rows
    flipped = [Fraction(bi) < 0 for bi in b]
    T = []
    for i in range(m):
        sign = -1 if flipped[i] else 1
        row = [sign * _to_q(a) for a in A[i]]
        row += [ONE if k == i else ZERO for k in range(m)]
        row.append(sign * _to_q(b[i]))
        T.append(row)
    basis = [n + i for i in range(m)]
    # reduced-cost row of "minimize the sum of artificials"; its last entry is -objective
    W = [-sum((row[j] for row in T), ZERO) for j in range(n)] + [ZERO] * m
    W.append(-sum((row[-1] for row in T), ZERO))

    while True:
        entering = next((j for j in range(n) if W[j] < 0), None)
        if entering is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = T[r][entering]
            if a > 0:
                ratio = T[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        # a negative reduced cost needs a positive entry in some artificial row,
        # so a leaving row always exists
        assert leave is not None
        W = _pivot(T, W, leave, entering)
        basis[leave] = entering

    if W[-1] == 0:
        x = [ZERO] * n
        for r in range(m):
            if basis[r] < n:
                x[basis[r]] = T[r][-1]
        return Feasibility(point=tuple(_from_q(v) for v in x))

    # artificial i has cost 1 and reduced cost 1 - y_i
    y = [ONE - W[n + i] for i in range(m)]
    y = [-yi if flipped[i] else yi for i, yi in enumerate(y)]
    return Feasibility(farkas=tuple(_from_q(v) for v in y))


def _pivot(T: list[list], W: list, r: int, j: int) -> list:
    row = T[r]
    p = row[j]
    if p != 1:
        T[r] = row = [v / p for v in row]
    for k, other in enumerate(T):
        if k != r:
            f = other[j]
            if f:
                T[k] = [v - f * w for v, w in zip(other, row)]
    f = W[j]
    return [v - f * w for v, w in zip(W, row)]
