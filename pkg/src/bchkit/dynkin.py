"""Dynkin substitution of word-basis terms into iterated commutators.

Brackets are left-normed: the word a1 a2 ... an denotes
[[...[a1, a2], a3] ..., an], the nesting under which replacing each degree-n
word by 1/n times its commutator fixes genuine Lie elements when expanded
back out (no Lie simplification is performed here; terms are emitted one
per input word).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .words import Alphabet, NCSeries, Word


@dataclass(frozen=True)
class LieTerm:
    coefficient: Fraction
    word: Word

    def __post_init__(self) -> None:
        if len(self.word) < 1:
            raise ValueError("a Lie term needs at least one letter")

    def bracket_str(self, alphabet: Alphabet) -> str:
        text = alphabet.letters[self.word[0]]
        for i in self.word[1:]:
            text = f"[{text},{alphabet.letters[i]}]"
        return text


def dynkin_substitute(z: NCSeries) -> list[LieTerm]:
    """Map each word w with coefficient c to LieTerm(c/n, w), n = len(w).

    The input must be homogeneous: a single shared word length n >= 1.
    """
    lengths = {len(w) for w in z.terms}
    if len(lengths) > 1:
        raise ValueError(f"input mixes word lengths {sorted(lengths)}")
    if lengths == {0}:
        raise ValueError("constant terms have no commutator form")
    out = []
    for word, coeff in z.items_sorted():
        out.append(LieTerm(coeff / len(word), word))
    return out


def expand_commutators(terms: Sequence[LieTerm], alphabet: Alphabet) -> NCSeries:
    """Expand left-normed brackets into word sums and accumulate.

    A length-n bracket expands to 2**(n-1) signed words (before merging).
    """
    degree = max((len(t.word) for t in terms), default=0)
    acc: dict[Word, Fraction] = {}
    for term in terms:
        letters = term.word
        # expansion[u] is the coefficient of word u in the unfolded bracket
        expansion: dict[Word, int] = {letters[:1]: 1}
        for letter in letters[1:]:
            nxt: dict[Word, int] = {}
            for u, c in expansion.items():
                left = u + (letter,)
                right = (letter,) + u
                nxt[left] = nxt.get(left, 0) + c
                nxt[right] = nxt.get(right, 0) - c
            expansion = nxt
        for u, c in expansion.items():
            s = acc.get(u, Fraction(0)) + term.coefficient * c
            if s:
                acc[u] = s
            else:
                acc.pop(u, None)
    return NCSeries(alphabet, degree, acc)
