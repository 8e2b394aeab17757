"""Term dictionary and its inverted word indexes.

The dictionary holds low-level terms (LLTs), each mapped to a preferred
term (PT).  Two inverted indexes are built once, up front: one keyed by
the exact casefolded words of the term texts, one keyed by their stems.
A posting records the term plus the word positions inside the term, so
the encoder can score a match without re-scanning term texts.  Build
cost is linear in total dictionary words; lookups are single dict
probes.
"""

from __future__ import annotations

import csv
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import textprep
from .stemming import Stemmer, get_stemmer


@dataclass(frozen=True, slots=True)
class Term:
    """One dictionary entry: an LLT and the PT it rolls up to."""

    llt_code: str
    llt_text: str
    pt_code: str
    pt_text: str
    words: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def normalized(self) -> str:
        """Casefolded single-spaced text; the canonical comparison form."""
        return " ".join(self.words)


# (term, positions of one word within that term); positions are sorted
Posting = tuple[Term, tuple[int, ...]]


REQUIRED_COLUMNS = ("llt_code", "llt_text", "pt_code", "pt_text")


def load_terms_csv(path: str | Path) -> list[Term]:
    """Read terms from a CSV file with the llt/pt code and text columns.

    The header must contain llt_code, llt_text, pt_code and pt_text;
    extra columns are ignored.  Rows missing any required value raise.
    """
    terms = []
    with open(path, newline="", encoding="utf-8-sig") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise ValueError(f"{path}: missing columns: {', '.join(missing)}")
        for lineno, row in enumerate(reader, start=2):
            values = {c: (row.get(c) or "").strip() for c in REQUIRED_COLUMNS}
            if not any(values.values()):
                continue
            if not all(values.values()):
                raise ValueError(f"{path}:{lineno}: incomplete term row")
            terms.append(make_term(**values))
    return terms


def make_term(llt_code: str, llt_text: str, pt_code: str, pt_text: str) -> Term:
    words = tuple(textprep.words(llt_text))
    if not words:
        raise ValueError(f"term {llt_code!r} has no words: {llt_text!r}")
    return Term(llt_code, llt_text, pt_code, pt_text, words)


@dataclass(frozen=True)
class TermDictionary:
    """Immutable bundle: terms, inverted indexes, stop words, stemmer.

    ``by_word`` maps each casefolded word to postings of the terms that
    contain it; ``by_stem`` does the same for word stems.  A posting
    carries the word's positions inside the term, so duplicate words in
    one term yield a single posting with several positions.
    """

    terms: tuple[Term, ...]
    by_word: Mapping[str, tuple[Posting, ...]]
    by_stem: Mapping[str, tuple[Posting, ...]]
    stop_words: frozenset[str]
    stemmer: Stemmer
    language: str
    version: str
    by_code: Mapping[str, Term] = field(repr=False, default_factory=dict)

    @classmethod
    def build(
        cls,
        terms: Iterable[Term],
        *,
        language: str = "it",
        stemmer: Stemmer | None = None,
        stop_words: frozenset[str] = frozenset(),
    ) -> "TermDictionary":
        """Build both inverted indexes in one pass over the terms."""
        stemmer = stemmer if stemmer is not None else get_stemmer(language)
        all_terms = tuple(terms)

        by_code: dict[str, Term] = {}
        for term in all_terms:
            if term.llt_code in by_code:
                raise ValueError(f"duplicate llt_code {term.llt_code!r}")
            by_code[term.llt_code] = term

        by_word: dict[str, list[Posting]] = {}
        by_stem: dict[str, list[Posting]] = {}
        for term in all_terms:
            word_positions: dict[str, list[int]] = {}
            stem_positions: dict[str, list[int]] = {}
            for position, word in enumerate(term.words):
                word_positions.setdefault(word, []).append(position)
                stem_positions.setdefault(stemmer(word), []).append(position)
            for word, positions in word_positions.items():
                by_word.setdefault(word, []).append((term, tuple(positions)))
            for stem, positions in stem_positions.items():
                by_stem.setdefault(stem, []).append((term, tuple(positions)))

        return cls(
            terms=all_terms,
            by_word={w: tuple(p) for w, p in by_word.items()},
            by_stem={s: tuple(p) for s, p in by_stem.items()},
            stop_words=stop_words,
            stemmer=stemmer,
            language=language,
            version=content_version(all_terms),
            by_code=by_code,
        )

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, llt_code: str) -> Term:
        return self.by_code[llt_code]

    def search(self, query: str, limit: int = 20) -> list[Term]:
        """Terms having a word that starts with ``query`` (casefolded).

        Ranked by where the matching word sits in the term, then by
        term text length, then by code, so tighter matches come first.
        """
        prefix = " ".join(textprep.words(query))
        if not prefix:
            return []
        ranked = []
        for term in self.terms:
            for position, word in enumerate(term.words):
                if word.startswith(prefix):
                    ranked.append((position, len(term.normalized), term.llt_code))
                    break
        ranked.sort()
        return [self.by_code[code] for _, _, code in ranked[:limit]]


def content_version(terms: Sequence[Term]) -> str:
    """Stable fingerprint of the dictionary content (order-independent)."""
    digest = hashlib.sha256()
    for term in sorted(terms, key=lambda t: t.llt_code):
        row = "\x1f".join((term.llt_code, term.llt_text, term.pt_code, term.pt_text))
        digest.update(row.encode("utf-8"))
        digest.update(b"\x1e")
    return digest.hexdigest()[:12]
