"""Shared test support: full-matrix exp/log and small reference routines.

These stay out of the package on purpose; the round-trip and
two-construction-path tests below want an implementation that does not
reuse the code under test.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial, gcd

from bchkit.multilinear import MultilinearPoly
from bchkit.trimatrix import TriMatrix, mat_mul


def mat_add(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    rows = [
        [a.rows[i][j] + b.rows[i][j] for j in range(a.n + 1)] for i in range(a.n + 1)
    ]
    return TriMatrix(a.n, rows)


def mat_scale(a: TriMatrix, c: Fraction) -> TriMatrix:
    rows = [[c * e for e in row] for row in a.rows]
    return TriMatrix(a.n, rows)


def mat_sub(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    return mat_add(a, mat_scale(b, Fraction(-1)))


def mat_zero(n: int) -> TriMatrix:
    zero = MultilinearPoly.zero(n)
    return TriMatrix(n, [[zero] * (n + 1) for _ in range(n + 1)])


def matrix_log_full(p: TriMatrix) -> TriMatrix:
    """Whole-matrix log via the alternating power sum; test support only."""
    n = p.n
    u = mat_sub(p, TriMatrix.identity(n))
    acc = mat_zero(n)
    power = TriMatrix.identity(n)
    for q in range(1, n + 1):
        power = mat_mul(power, u)
        acc = mat_add(acc, mat_scale(power, Fraction((-1) ** (q + 1), q)))
    return acc


def matrix_exp_full(a: TriMatrix) -> TriMatrix:
    """Whole-matrix exp of a strictly upper-triangular matrix."""
    n = a.n
    acc = TriMatrix.identity(n)
    power = TriMatrix.identity(n)
    for k in range(1, n + 1):
        power = mat_mul(power, a)
        acc = mat_add(acc, mat_scale(power, Fraction(1, factorial(k))))
    return acc


def explicit_exp_of_superdiagonal(n: int, family: int) -> TriMatrix:
    """sum_k M^k / k! by explicit powers, the second construction path."""
    m = TriMatrix.superdiagonal(n, family)
    acc = TriMatrix.identity(n)
    power = TriMatrix.identity(n)
    for k in range(1, n + 1):
        power = mat_mul(power, m)
        acc = mat_add(acc, mat_scale(power, Fraction(1, factorial(k))))
    return acc


def all_words(n: int, m: int):
    return itertools.product(range(m), repeat=n)


def normalized_pair(num: int, den: int) -> tuple[int, int]:
    """Lowest-terms reduction done by hand: gcd after the fact."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if num == 0:
        return 0, 1
    g = gcd(abs(num), abs(den))
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return num, den
