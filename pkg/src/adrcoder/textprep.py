"""Text preparation: tokenization, stop words, word normalization.

Free text is reduced to a sequence of word tokens.  A token is a maximal
run of Unicode letters; digits, punctuation and symbols separate tokens
and are dropped.  Each token keeps its (start, end) span into the
original string so callers can highlight matches, while the comparable
``surface`` form is casefolded.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .stemming import Stemmer


@dataclass(frozen=True, slots=True)
class Token:
    """One input word: casefolded surface plus its span in the source text."""

    surface: str
    start: int
    end: int
    stem: str = ""


def word_spans(text: str) -> Iterator[tuple[int, int]]:
    """Yield (start, end) spans of maximal letter runs in ``text``."""
    start = None
    for i, ch in enumerate(text):
        if ch.isalpha():
            if start is None:
                start = i
        elif start is not None:
            yield start, i
            start = None
    if start is not None:
        yield start, len(text)


def words(text: str) -> list[str]:
    """All casefolded word surfaces of ``text``, in order."""
    return [text[s:e].casefold() for s, e in word_spans(text)]


def prepare(
    text: str,
    *,
    stop_words: frozenset[str] = frozenset(),
    stemmer: Stemmer | None = None,
) -> list[Token]:
    """Tokenize ``text`` into stop-word-filtered, stemmed tokens.

    Spans index the original string, so ``text[t.start:t.end]`` is the
    word as typed.  Stop words are matched on the casefolded surface and
    removed before stemming.
    """
    tokens = []
    for start, end in word_spans(text):
        surface = text[start:end].casefold()
        if surface in stop_words:
            continue
        stem = stemmer(surface) if stemmer is not None else surface
        tokens.append(Token(surface=surface, start=start, end=end, stem=stem))
    return tokens


def wordlist_from(lines: Iterable[str]) -> frozenset[str]:
    """Collect a word set: one word per line, ``#`` comments and blanks skipped."""
    result = set()
    for line in lines:
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        result.add(entry.casefold())
    return frozenset(result)


def load_wordlist(path: str | Path) -> frozenset[str]:
    """Read a word set file (one word per line, ``#`` comments allowed)."""
    return wordlist_from(Path(path).read_text(encoding="utf-8").splitlines())
