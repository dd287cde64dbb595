"""Tokenization, lemmatization and content-term extraction.

Positions are assigned over ALL tokens (stopwords included) so that window
arithmetic matches raw word distance in the text.  A token counts as a
content term iff it survives the stoplist and its lemma has at least one
noun/verb/adj/adv entry in the lexical database.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .wordnet import LexicalDb, SenseId, lookup_lemma

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class Token:
    surface: str
    position: int
    char_span: tuple[int, int]


@dataclass(frozen=True)
class TermOccurrence:
    token: Token
    lemma: str
    candidate_senses: tuple[SenseId, ...]

    @property
    def position(self) -> int:
        return self.token.position


def tokenize(text: str) -> list[Token]:
    """Split text into maximal alphanumeric runs; punctuation is dropped."""
    return [
        Token(m.group(), i, (m.start(), m.end()))
        for i, m in enumerate(_TOKEN_RE.finditer(text))
    ]


def _detachment_candidates(lower: str):
    """Rule-based suffix detachments, in rule order: plural -s/-ies/-es,
    verb -ing/-ed, comparative -er/-est.  Each rule yields the plain stem,
    the stem + 'e' where that makes sense, and the undoubled-consonant stem.
    """
    if lower.endswith("s") and len(lower) > 2:
        yield lower[:-1]
    if lower.endswith("ies") and len(lower) > 4:
        yield lower[:-3] + "y"
    if lower.endswith("es") and len(lower) > 3:
        yield lower[:-2]
    for suffix in ("ing", "ed"):
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            stem = lower[: -len(suffix)]
            yield stem
            yield stem + "e"
            if len(stem) > 2 and stem[-1] == stem[-2]:
                yield stem[:-1]
    for suffix in ("er", "est"):
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            stem = lower[: -len(suffix)]
            yield stem
            yield stem + "e"
            if len(stem) > 2 and stem[-1] == stem[-2]:
                yield stem[:-1]


def lemmatize(surface: str, db: LexicalDb) -> str:
    """Lowercase lemma of ``surface``: verbatim if present in the database,
    else the first rule-based detachment that is present, else the lowercase
    surface unchanged.
    """
    lower = surface.lower()
    if lookup_lemma(db, lower):
        return lower
    for candidate in _detachment_candidates(lower):
        if lookup_lemma(db, candidate):
            return candidate
    return lower


def content_terms(
    tokens: list[Token], db: LexicalDb, stoplist: set[str]
) -> list[TermOccurrence]:
    """Keep tokens that are not stopwords and whose lemma is in the database."""
    out: list[TermOccurrence] = []
    for token in tokens:
        lower = token.surface.lower()
        if lower in stoplist:
            continue
        lemma = lemmatize(token.surface, db)
        senses = lookup_lemma(db, lemma)
        if senses:
            out.append(TermOccurrence(token, lemma, tuple(senses)))
    return out


def load_stoplist(path: str | Path | None = None) -> set[str]:
    """Load a stoplist file (one lowercase word per line, '#' comments).

    Without a path, the packaged default list is used.
    """
    if path is None:
        text = (
            resources.files("snipforge").joinpath("data/stoplist.txt").read_text()
        )
    else:
        text = Path(path).read_text(encoding="utf-8")
    words = set()
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return words
