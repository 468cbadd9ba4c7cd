"""Unit upper-triangular matrices of multilinear polynomials.

Everything this package computes lives inside (n+1) x (n+1) upper-triangular
matrices whose entries are MultilinearPoly values.  The building blocks are
superdiagonal matrices, one per letter family: the base family puts plain 1s
on the superdiagonal, family k puts its position variables there.  A
superdiagonal matrix S is nilpotent with S**(n+1) = 0, so any power series
applied to S collapses to a polynomial and both the series evaluation and
the matrix logarithm below terminate exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .multilinear import MultilinearPoly, Rational

BASE_FAMILY = 0

ONE = Fraction(1)


@dataclass(frozen=True)
class SeriesSpec:
    """Coefficients c_0, c_1, ... of a power series f(t) with f(0) = 1.

    Coefficients past the end of the stored tuple are zero, so the
    polynomial 1 + t is simply ``SeriesSpec.from_coeffs([1, 1])``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("series must satisfy f(0) = 1")

    @classmethod
    def from_coeffs(cls, values: Iterable[Rational | int | str]) -> "SeriesSpec":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def exponential(cls, max_degree: int) -> "SeriesSpec":
        """exp truncated at t**max_degree: c_k = 1/k!."""
        if max_degree < 0:
            raise ValueError(f"max_degree must be >= 0, got {max_degree}")
        return cls(tuple(Fraction(1, factorial(k)) for k in range(max_degree + 1)))

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"coefficient index must be >= 0, got {k}")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def fingerprint(self) -> str:
        """Canonical text form, trailing zeros trimmed; equal series agree."""
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return ",".join(str(c) for c in coeffs)

    def __str__(self) -> str:
        return self.fingerprint()


class TriMatrix:
    """Square matrix of MultilinearPoly entries, zero below the diagonal.

    ``n`` is the order of the surrounding computation; the matrix itself is
    (n+1) x (n+1).  Rows are stored densely and treated as immutable.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[Sequence[MultilinearPoly]]):
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        size = n + 1
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"expected a {size}x{size} matrix")
        for i in range(size):
            for j in range(i):
                if rows[i][j]:
                    raise ValueError(f"nonzero entry below the diagonal at ({i},{j})")
        self.n = n
        self.rows = [list(r) for r in rows]

    @classmethod
    def identity(cls, n: int) -> "TriMatrix":
        return cls._scaled_identity(n, ONE)

    @classmethod
    def _scaled_identity(cls, n: int, value: Rational) -> "TriMatrix":
        zero = MultilinearPoly.zero(n)
        diag = MultilinearPoly.constant(n, value)
        rows = [
            [diag if i == j else zero for j in range(n + 1)] for i in range(n + 1)
        ]
        return cls(n, rows)

    @classmethod
    def superdiagonal(cls, n: int, family: int) -> "TriMatrix":
        """The matrix with (i, i+1) entries only: constant 1 for the base
        family, the family's variable at position i+1 otherwise (rows
        0-based, positions 1-based)."""
        if family < 0:
            raise ValueError(f"family must be >= 0, got {family}")
        zero = MultilinearPoly.zero(n)
        rows = [[zero] * (n + 1) for _ in range(n + 1)]
        for i in range(n):
            if family == BASE_FAMILY:
                rows[i][i + 1] = MultilinearPoly.constant(n, 1)
            else:
                rows[i][i + 1] = MultilinearPoly.variable(n, i + 1, family)
        return cls(n, rows)

    def entry(self, i: int, j: int) -> MultilinearPoly:
        return self.rows[i][j]

    def has_unit_diagonal(self) -> bool:
        one = MultilinearPoly.constant(self.n, 1)
        return all(self.rows[i][i] == one for i in range(self.n + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __matmul__(self, other: "TriMatrix") -> "TriMatrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        body = "; ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.rows
        )
        return f"TriMatrix(n={self.n}, {body})"


def mat_mul(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    """Exact product; triangularity keeps the inner sum to k in i..j."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} != {b.n}")
    n = a.n
    zero = MultilinearPoly.zero(n)
    rows = [[zero] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(i, n + 1):
            acc = zero
            for k in range(i, j + 1):
                if a.rows[i][k] and b.rows[k][j]:
                    acc = acc + a.rows[i][k] * b.rows[k][j]
            rows[i][j] = acc
    return TriMatrix(n, rows)


def build_factor_matrix(n: int, family: int, f: SeriesSpec) -> TriMatrix:
    """f applied to the family's superdiagonal matrix.

    Horner accumulation, S <- c_k I + M S for k = n..0; exact because
    M**(n+1) = 0.  With f = exp this gives entries c_{j-i} times the run of
    the family's variables over positions i+1..j.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if f.coeff(0) != 1:
        raise ValueError("series must satisfy f(0) = 1")
    m = TriMatrix.superdiagonal(n, family)
    acc = TriMatrix._scaled_identity(n, f.coeff(n))
    for k in range(n - 1, -1, -1):
        prod = mat_mul(m, acc)
        ck = MultilinearPoly.constant(n, f.coeff(k))
        rows = [list(r) for r in prod.rows]
        for i in range(n + 1):
            rows[i][i] = rows[i][i] + ck
        acc = TriMatrix(n, rows)
    return acc


def log_upper_right(p: TriMatrix) -> MultilinearPoly:
    """Entry (1, n+1) of log p for unit-diagonal p, as a MultilinearPoly.

    log p = sum_{q=1}^{n} (-1)^{q+1}/q (p - I)^q stops at q = n because
    p - I is strictly upper triangular.  Only the first row of each power
    is needed: v_q = v_{q-1} (p - I), starting from the first row of p - I.
    The first row of (p - I)^q vanishes on columns < q, which bounds the
    inner sum below.
    """
    if not p.has_unit_diagonal():
        raise ValueError("log requires a unit diagonal")
    n = p.n
    zero = MultilinearPoly.zero(n)
    v = [zero] + [p.rows[0][j] for j in range(1, n + 1)]
    acc = v[n]
    for q in range(2, n + 1):
        w = [zero] * (n + 1)
        for j in range(q, n + 1):
            s = zero
            for k in range(q - 1, j):
                if v[k] and p.rows[k][j]:
                    s = s + v[k] * p.rows[k][j]
            w[j] = s
        acc = acc + Fraction((-1) ** (q + 1), q) * w[n]
        v = w
    return acc


def word_matrix_product(n: int, word: "str | Sequence[int]") -> MultilinearPoly:
    """(1, n+1) entry of the product of superdiagonal matrices read off a
    length-n word over {M, N}: M is the base superdiagonal, N the family-1
    one.  The result is the single monomial marking the N positions."""
    if isinstance(word, str):
        symbol_map = {"M": 0, "N": 1}
        try:
            picks = [symbol_map[ch] for ch in word]
        except KeyError as exc:
            raise ValueError(f"word symbols must be M or N, got {exc.args[0]!r}")
    else:
        picks = list(word)
        if any(s not in (0, 1) for s in picks):
            raise ValueError("word entries must be 0 (M) or 1 (N)")
    if len(picks) != n:
        raise ValueError(f"word length {len(picks)} != order {n}")
    base = TriMatrix.superdiagonal(n, 0)
    sigma = TriMatrix.superdiagonal(n, 1)
    product = base if picks[0] == 0 else sigma
    for s in picks[1:]:
        product = mat_mul(product, base if s == 0 else sigma)
    return product.rows[0][n]
