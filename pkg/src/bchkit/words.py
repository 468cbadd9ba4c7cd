"""Alphabets, words, and noncommutative series in the word basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .multilinear import Rational

# A word is a tuple of letter indices into an Alphabet.
Word = tuple[int, ...]

_DEFAULT_HEAD = ("x", "y", "w")
_DEFAULT_TAIL = "abcdefghijklmnopqrstuv"


@dataclass(frozen=True)
class Alphabet:
    """Ordered letters; letter 0 is the base letter, letter k is variable
    family k.  Single printable characters keep word strings unambiguous."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.letters) < 2:
            raise ValueError("alphabet needs at least two letters")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"duplicate letters in {self.letters}")
        for name in self.letters:
            if len(name) != 1 or not name.isprintable() or name.isspace():
                raise ValueError(f"letters must be single printable characters, got {name!r}")

    @classmethod
    def default(cls, m: int) -> "Alphabet":
        """x, y, w, then a, b, c, ... for wider alphabets."""
        if m < 2:
            raise ValueError(f"need at least 2 letters, got {m}")
        if m > len(_DEFAULT_HEAD) + len(_DEFAULT_TAIL):
            raise ValueError(f"no default naming for {m} letters; pass explicit names")
        pool = _DEFAULT_HEAD + tuple(_DEFAULT_TAIL)
        return cls(pool[:m])

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "Alphabet":
        return cls(tuple(names))

    @property
    def size(self) -> int:
        return len(self.letters)

    def word_str(self, word: Word) -> str:
        return "".join(self.letters[i] for i in word) if word else "1"

    def parse_word(self, text: str) -> Word:
        index = {ch: i for i, ch in enumerate(self.letters)}
        try:
            return tuple(index[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"letter {exc.args[0]!r} not in alphabet {self.letters}")


class NCSeries:
    """Finite rational combination of words of length <= max_degree.

    Zero coefficients are never stored.  Instances are value objects;
    operations return fresh series.
    """

    __slots__ = ("alphabet", "max_degree", "terms")

    def __init__(
        self,
        alphabet: Alphabet,
        max_degree: int,
        terms: Mapping[Word, Rational | int] | None = None,
    ):
        if max_degree < 0:
            raise ValueError(f"max_degree must be >= 0, got {max_degree}")
        self.alphabet = alphabet
        self.max_degree = max_degree
        self.terms: dict[Word, Fraction] = {}
        m = alphabet.size
        if terms:
            for word, coeff in terms.items():
                if len(word) > max_degree:
                    raise ValueError(
                        f"word {alphabet.word_str(word)} exceeds max degree {max_degree}"
                    )
                if any(not 0 <= i < m for i in word):
                    raise ValueError(f"letter index out of range in {word}")
                c = Fraction(coeff)
                if c:
                    self.terms[word] = c

    @classmethod
    def zero(cls, alphabet: Alphabet, max_degree: int) -> "NCSeries":
        return cls(alphabet, max_degree)

    def coefficient(self, word: Word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def items_sorted(self) -> list[tuple[Word, Fraction]]:
        """Graded-lexicographic: by length, then by letter indices."""
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def _compatible(self, other: "NCSeries") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        if self.max_degree != other.max_degree:
            raise ValueError(f"degree mismatch: {self.max_degree} != {other.max_degree}")

    def __add__(self, other: "NCSeries") -> "NCSeries":
        if not isinstance(other, NCSeries):
            return NotImplemented
        self._compatible(other)
        out = dict(self.terms)
        for word, c in other.terms.items():
            s = out.get(word, Fraction(0)) + c
            if s:
                out[word] = s
            else:
                out.pop(word, None)
        result = NCSeries(self.alphabet, self.max_degree)
        result.terms = out
        return result

    def __neg__(self) -> "NCSeries":
        result = NCSeries(self.alphabet, self.max_degree)
        result.terms = {w: -c for w, c in self.terms.items()}
        return result

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        if not isinstance(other, NCSeries):
            return NotImplemented
        return self + (-other)

    def scaled(self, factor: Rational | int) -> "NCSeries":
        f = Fraction(factor)
        result = NCSeries(self.alphabet, self.max_degree)
        if f:
            result.terms = {w: c * f for w, c in self.terms.items()}
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.max_degree == other.max_degree
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in self.items_sorted():
            text = self.alphabet.word_str(word)
            if word == ():
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = text
            else:
                body = f"{abs(coeff)}*{text}"
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"NCSeries(degree<={self.max_degree}, {str(self)})"
