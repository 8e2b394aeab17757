"""Access to the data files shipped inside the package."""

from __future__ import annotations

from importlib import resources

from .dictionary import Term, TermDictionary, make_term
from .textprep import wordlist_from

import csv


def _read_text(name: str) -> str:
    return (resources.files(__package__) / "data" / name).read_text(encoding="utf-8")


def default_stop_words(language: str = "it") -> frozenset[str]:
    """The shipped connective-word list for a language."""
    return wordlist_from(_read_text(f"stopwords_{language}.txt").splitlines())


def negation_words(language: str = "it") -> frozenset[str]:
    """The shipped negation-cue list for a language."""
    return wordlist_from(_read_text(f"negation_{language}.txt").splitlines())


def fixture_terms() -> list[Term]:
    """The small shipped Italian term set used by tests and demos."""
    rows = csv.DictReader(_read_text("fixture_llt_it.csv").splitlines())
    return [
        make_term(row["llt_code"], row["llt_text"], row["pt_code"], row["pt_text"])
        for row in rows
    ]


def fixture_dictionary() -> TermDictionary:
    """The shipped fixture terms built into a ready-to-use dictionary."""
    return TermDictionary.build(
        fixture_terms(),
        language="it",
        stop_words=default_stop_words("it"),
    )
