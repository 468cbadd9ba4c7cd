"""Numeric +-1 evaluation of the log entry over the sign lattice.

Substituting an assignment of +-1 for the position variables turns the
whole matrix computation numeric: the two-factor product FG becomes a
matrix of exact rationals and its log entry a single rational per
assignment.  Summing value(s) * (x + s_1 y)...(x + s_n y) over all 2**n
assignments, divided by 2**n, reproduces the order-n term, and two
symmetries predict exactly which assignments vanish:

  * an even number of +1 entries forces value zero;
  * reading an assignment in reverse order multiplies the value by
    (-1)**(n-1), so the all-plus assignment vanishes for odd n > 1.

Assignments are independent, so table building and scans can fan out over
worker processes; results are merged in enumeration order either way.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .words import Alphabet, NCSeries

SignAssignment = tuple[int, ...]


def _as_signs(n: int, signs: Sequence[int]) -> SignAssignment:
    out = tuple(signs)
    if len(out) != n:
        raise ValueError(f"expected {n} signs, got {len(out)}")
    if any(s not in (1, -1) for s in out):
        raise ValueError("signs must be +1 or -1")
    return out


def _mask_signs(n: int, mask: int) -> SignAssignment:
    # bit i set means position i+1 carries -1
    return tuple(-1 if (mask >> i) & 1 else 1 for i in range(n))


def _gray_masks(n: int) -> list[int]:
    return [i ^ (i >> 1) for i in range(1 << n)]


def _reverse_mask(n: int, mask: int) -> int:
    out = 0
    for i in range(n):
        if (mask >> i) & 1:
            out |= 1 << (n - 1 - i)
    return out


def eval_assignment(n: int, signs: Sequence[int]) -> Fraction:
    """Exact value of the (1, n+1) log entry at one +-1 assignment.

    The product matrix is built numerically: with prefix products
    P_t = s_1 s_2 ... s_t, entry (i, j) of FG is
    sum_k C(j-i, k-i) P_j P_k / (j-i)!.  The log then runs as a first-row
    iteration over plain rationals.
    """
    s = _as_signs(n, signs)
    prefix = [1] * (n + 1)
    for p in range(1, n + 1):
        prefix[p] = prefix[p - 1] * s[p - 1]
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(i, n + 1):
            total = sum(comb(j - i, k - i) * prefix[j] * prefix[k] for k in range(i, j + 1))
            rows[i][j] = Fraction(total, factorial(j - i))
    zero = Fraction(0)
    v = [zero] + [rows[0][j] for j in range(1, n + 1)]
    acc = v[n]
    for q in range(2, n + 1):
        w = [zero] * (n + 1)
        for j in range(q, n + 1):
            t = zero
            for k in range(q - 1, j):
                if v[k]:
                    t += v[k] * rows[k][j]
            w[j] = t
        acc += Fraction((-1) ** (q + 1), q) * w[n]
        v = w
    return acc


def _eval_mask_chunk(args: tuple[int, list[int]]) -> list[Fraction]:
    n, masks = args
    return [eval_assignment(n, _mask_signs(n, m)) for m in masks]


def _values_for_masks(
    n: int, masks: Sequence[int], workers: int | None
) -> dict[int, Fraction]:
    """Evaluate each mask; merge preserves the order of ``masks``."""
    if not masks:
        return {}
    if not workers or workers <= 1 or len(masks) < 4 * workers:
        return {m: eval_assignment(n, _mask_signs(n, m)) for m in masks}
    chunk = (len(masks) + workers - 1) // workers
    jobs = [(n, list(masks[lo : lo + chunk])) for lo in range(0, len(masks), chunk)]
    out: dict[int, Fraction] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for (_, chunk_masks), values in zip(jobs, pool.map(_eval_mask_chunk, jobs)):
            out.update(zip(chunk_masks, values))
    return out


@dataclass
class SignedCoefficientTable:
    """Value of the log entry for every one of the 2**n assignments.

    Both build modes fill the full map; pruning only changes which entries
    are computed versus written down from the symmetry rules.
    """

    n: int
    values: dict[SignAssignment, Fraction] = field(default_factory=dict)

    def is_complete(self) -> bool:
        return len(self.values) == 1 << self.n


PRUNING_MODES = ("none", "symmetry")


def build_table(
    n: int, pruning: str = "none", workers: int | None = None
) -> SignedCoefficientTable:
    """Evaluate the sign lattice, walking it in Gray-code order.

    pruning="none" evaluates every assignment directly.
    pruning="symmetry" records even-plus-count assignments as zero without
    evaluation and computes one member of each reversal pair, deriving the
    partner via the (-1)**(n-1) factor.  The two modes return equal tables.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if pruning not in PRUNING_MODES:
        raise ValueError(f"pruning must be one of {PRUNING_MODES}, got {pruning!r}")
    masks = _gray_masks(n)
    values: dict[SignAssignment, Fraction] = {}
    if pruning == "none":
        computed = _values_for_masks(n, masks, workers)
        for mask in masks:
            values[_mask_signs(n, mask)] = computed[mask]
    else:
        flip = (-1) ** (n - 1)
        reps = []
        seen = set()
        for mask in masks:
            plus = n - mask.bit_count()
            if plus % 2 == 0 or mask in seen:
                continue
            rev = _reverse_mask(n, mask)
            seen.add(mask)
            seen.add(rev)
            reps.append(mask)
        computed = _values_for_masks(n, reps, workers)
        zero = Fraction(0)
        for mask in masks:
            plus = n - mask.bit_count()
            if plus % 2 == 0:
                values[_mask_signs(n, mask)] = zero
        for rep in reps:
            v = computed[rep]
            values[_mask_signs(n, rep)] = v
            rev = _reverse_mask(n, rep)
            if rev != rep:
                values[_mask_signs(n, rev)] = flip * v
    return SignedCoefficientTable(n, values)


def reconstruct_term(
    n: int, table: SignedCoefficientTable, alphabet: Alphabet | None = None
) -> NCSeries:
    """Rebuild the order-n word-basis term from a complete table.

    The word with y exactly at positions Y gets coefficient
    2**(-n) sum_s value(s) prod_{i in Y} s_i.
    """
    if table.n != n:
        raise ValueError(f"table is for order {table.n}, not {n}")
    if not table.is_complete():
        raise ValueError(f"table incomplete: {len(table.values)} of {1 << n} assignments")
    if alphabet is None:
        alphabet = Alphabet.default(2)
    nonzero: list[tuple[int, Fraction]] = []
    for signs, value in table.values.items():
        if value:
            mask = sum(1 << i for i, s in enumerate(signs) if s == -1)
            nonzero.append((mask, value))
    scale = Fraction(1, 1 << n)
    terms = {}
    for wmask in range(1 << n):
        total = Fraction(0)
        for negmask, value in nonzero:
            if (wmask & negmask).bit_count() & 1:
                total -= value
            else:
                total += value
        if total:
            word = tuple((wmask >> i) & 1 for i in range(n))
            terms[word] = total * scale
    return NCSeries(alphabet, n, terms)


@dataclass
class ScanReport:
    """Per-order census of the sign lattice."""

    n: int
    pruned_zero: int
    structural_zero: int
    nonzero: int
    unexpected: list[SignAssignment] = field(default_factory=list)


def scan_nonvanishing(n_max: int, workers: int | None = None) -> list[ScanReport]:
    """Evaluate every parity-surviving assignment for n = 1..n_max.

    Assignments with an even +1 count are counted as pruned without
    evaluation.  Among the rest, the all-plus assignment at odd n > 1 is
    the only zero the symmetries predict; anything else that evaluates to
    zero is reported as unexpected.
    """
    if n_max < 1:
        raise ValueError(f"order must be >= 1, got {n_max}")
    reports = []
    for n in range(1, n_max + 1):
        surviving = [m for m in _gray_masks(n) if (n - m.bit_count()) % 2 == 1]
        pruned = (1 << n) - len(surviving)
        computed = _values_for_masks(n, surviving, workers)
        structural = 0
        nonzero = 0
        unexpected = []
        for mask in surviving:
            if computed[mask]:
                nonzero += 1
            elif mask == 0 and n > 1 and n % 2 == 1:
                structural += 1
            else:
                unexpected.append(_mask_signs(n, mask))
        reports.append(ScanReport(n, pruned, structural, nonzero, unexpected))
    return reports
