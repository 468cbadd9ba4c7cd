"""Result documents, their three renderings, and the on-disk cache.

A document stores coefficients as separate numerator and denominator
strings so arbitrary-precision values survive any JSON consumer, and the
payload keeps the canonical graded-lexicographic order.  The cache is
content-addressed: the key hashes everything the payload is a function of,
so a hit can be replayed byte for byte without recomputation.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .dynkin import LieTerm
from .words import Alphabet, NCSeries

TOOL_NAME = "bchkit"

TermRow = tuple[str, str, str]


@dataclass
class OutputDocument:
    version: str
    mode: str
    order: int
    factors: int
    letters: tuple[str, ...]
    series: tuple[str, ...]
    terms: list[TermRow]
    dynkin: list[TermRow] | None = None

    @classmethod
    def from_results(
        cls,
        version: str,
        mode: str,
        order: int,
        series_names: Sequence[str],
        alphabet: Alphabet,
        term: NCSeries,
        dynkin_terms: Sequence[LieTerm] | None = None,
    ) -> "OutputDocument":
        rows = [
            (alphabet.word_str(w), str(c.numerator), str(c.denominator))
            for w, c in term.items_sorted()
        ]
        bracket_rows = None
        if dynkin_terms is not None:
            bracket_rows = [
                (
                    t.bracket_str(alphabet),
                    str(t.coefficient.numerator),
                    str(t.coefficient.denominator),
                )
                for t in dynkin_terms
            ]
        return cls(
            version=version,
            mode=mode,
            order=order,
            factors=alphabet.size,
            letters=alphabet.letters,
            series=tuple(series_names),
            terms=rows,
            dynkin=bracket_rows,
        )

    def to_json_text(self) -> str:
        body: dict = {
            "tool": TOOL_NAME,
            "version": self.version,
            "mode": self.mode,
            "order": self.order,
            "factors": self.factors,
            "letters": list(self.letters),
            "series": list(self.series),
            "terms": [list(row) for row in self.terms],
        }
        if self.dynkin is not None:
            body["dynkin"] = [list(row) for row in self.dynkin]
        return json.dumps(body, indent=2) + "\n"

    @classmethod
    def from_json_text(cls, text: str) -> "OutputDocument":
        body = json.loads(text)
        if body.get("tool") != TOOL_NAME:
            raise ValueError(f"not a {TOOL_NAME} document")
        dynkin = body.get("dynkin")
        return cls(
            version=body["version"],
            mode=body["mode"],
            order=body["order"],
            factors=body["factors"],
            letters=tuple(body["letters"]),
            series=tuple(body["series"]),
            terms=[tuple(row) for row in body["terms"]],
            dynkin=None if dynkin is None else [tuple(row) for row in dynkin],
        )


def _coeff_str(num: str, den: str) -> str:
    return num if den == "1" else f"{num}/{den}"


def render_text(doc: OutputDocument) -> str:
    lines = [f"{_coeff_str(num, den)}  {word}" for word, num, den in doc.terms]
    if not doc.terms:
        lines = ["0"]
    if doc.dynkin is not None:
        lines += ["", "dynkin:"]
        lines += [f"{_coeff_str(num, den)}  {bracket}" for bracket, num, den in doc.dynkin]
    return "\n".join(lines) + "\n"


def _latex_signed_terms(rows: Sequence[TermRow]) -> str:
    if not rows:
        return "0"
    parts = []
    for body, num, den in rows:
        value = Fraction(int(num), int(den))
        mag = abs(value)
        if mag == 1:
            text = body
        elif mag.denominator == 1:
            text = f"{mag}\\,{body}"
        else:
            text = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}\\,{body}"
        if not parts:
            parts.append(text if value > 0 else "-" + text)
        else:
            parts.append(("+ " if value > 0 else "- ") + text)
    return " ".join(parts)


def render_latex(doc: OutputDocument) -> str:
    lines = [f"z_{{{doc.order}}} = {_latex_signed_terms(doc.terms)}"]
    if doc.dynkin is not None:
        lines.append(f"z_{{{doc.order}}} = {_latex_signed_terms(doc.dynkin)}")
    return "\n".join(lines) + "\n"


RENDERERS = {
    "text": render_text,
    "json": lambda doc: doc.to_json_text(),
    "latex": render_latex,
}


CACHE_ENV_VAR = "BCHKIT_CACHE_DIR"


def cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return Path(override)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / TOOL_NAME


def cache_key(
    version: str,
    mode: str,
    order: int,
    letters: Sequence[str],
    series_names: Sequence[str],
    with_dynkin: bool,
) -> str:
    material = json.dumps(
        {
            "version": version,
            "mode": mode,
            "order": order,
            "factors": len(letters),
            "letters": list(letters),
            "series": list(series_names),
            "dynkin": with_dynkin,
        },
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(material.encode()).hexdigest()


def cache_load(key: str, directory: Path | None = None) -> OutputDocument | None:
    path = (directory or cache_dir()) / f"{key}.json"
    try:
        text = path.read_text()
    except OSError:
        return None
    try:
        return OutputDocument.from_json_text(text)
    except (ValueError, KeyError, TypeError):
        # corrupt entry: behave like a miss, the writer will replace it
        return None


def cache_store(key: str, doc: OutputDocument, directory: Path | None = None) -> bool:
    target = directory or cache_dir()
    try:
        target.mkdir(parents=True, exist_ok=True)
        (target / f"{key}.json").write_text(doc.to_json_text())
    except OSError as exc:
        print(f"warning: cache write failed: {exc}", file=sys.stderr)
        return False
    return True
