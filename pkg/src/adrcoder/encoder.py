"""Core encoding algorithm.

A description is encoded in four stages:

1. vote: one linear scan over the tokens; each token looks itself up in
   the exact word index, then its stem in the stem index, and appends a
   vote to every term it appears in.
2. weigh: five ranking criteria per voted term, all ascending (lower is
   better).
3. sort: lexicographic multi-key sort on the criteria tuple.
4. release: walk the ranked terms and select a subset that covers the
   description's matchable tokens, keeping the selection prefix-free.

Everything here is pure: the dictionary bundle is never mutated, so any
number of encodes may run concurrently against one shared dictionary.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .dictionary import Posting, Term, TermDictionary
from .textprep import Token, prepare


# ---------------------------------------------------------------------------
# pair distance
# ---------------------------------------------------------------------------

def _word_bigrams(text: str) -> Counter:
    """Multiset of letter bigrams taken per word (casefolded)."""
    grams: Counter = Counter()
    for word in text.casefold().split():
        for i in range(len(word) - 1):
            grams[word[i : i + 2]] += 1
    return grams


def pair_distance(a: str, b: str) -> float:
    """Bigram-multiset Dice distance between two strings, in [0, 1].

    Robust to word order: bigrams never span word boundaries, so
    permuting words leaves the distance unchanged.  Two empty (or
    bigram-free) strings are identical (0.0); exactly one empty is
    maximally distant (1.0).
    """
    grams_a = _word_bigrams(a)
    grams_b = _word_bigrams(b)
    total = sum(grams_a.values()) + sum(grams_b.values())
    if total == 0:
        return 0.0
    if not grams_a or not grams_b:
        return 1.0
    shared = sum((grams_a & grams_b).values())
    return 1.0 - (2.0 * shared) / total


# ---------------------------------------------------------------------------
# voting
# ---------------------------------------------------------------------------

@dataclass(slots=True)
class VoteRecord:
    """Votes collected by one term during the scan.

    voters[j] is the token index that cast vote j; voted[j] is the word
    position inside the term it claimed.  voters is strictly increasing:
    a token votes a given term at most once (the stem probe is skipped
    when the exact probe already voted).
    """

    term: Term
    voters: list[int] = field(default_factory=list)
    voted: list[int] = field(default_factory=list)
    stem_used: bool = False

    def add_vote(self, token_index: int, positions: tuple[int, ...], *, stem: bool) -> None:
        self.voters.append(token_index)
        for position in positions:
            if position not in self.voted:
                self.voted.append(position)
                break
        else:
            # every occurrence already claimed: re-vote the first one
            self.voted.append(positions[0])
        if stem:
            self.stem_used = True


PostingIndex = Mapping[str, Sequence[Posting]]

_NO_POSTINGS: tuple[Posting, ...] = ()


def vote(
    tokens: Sequence[Token],
    by_word: PostingIndex,
    by_stem: PostingIndex,
) -> dict[str, VoteRecord]:
    """Single-pass voting scan; returns records keyed by llt_code.

    Per token: exactly one probe of the exact index and one of the stem
    index.  The exact probe votes unconditionally; the stem probe skips
    terms this same token already voted for and flags the term as
    stem-matched otherwise.
    """
    records: dict[str, VoteRecord] = {}
    for i, token in enumerate(tokens):
        for term, positions in by_word.get(token.surface, _NO_POSTINGS):
            record = records.get(term.llt_code)
            if record is None:
                record = records[term.llt_code] = VoteRecord(term)
            record.add_vote(i, positions, stem=False)
        for term, positions in by_stem.get(token.stem, _NO_POSTINGS):
            record = records.get(term.llt_code)
            if record is None:
                record = records[term.llt_code] = VoteRecord(term)
            elif record.voters and record.voters[-1] == i:
                continue
            record.add_vote(i, positions, stem=True)
    return records


# ---------------------------------------------------------------------------
# weighting and ranking
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Weights:
    """The five ranking criteria; ascending, lower is better on each."""

    c1: float
    c2: int
    c3: float
    c4: float
    c5: int

    def as_tuple(self) -> tuple[float, int, float, float, int]:
        return (self.c1, self.c2, self.c3, self.c4, self.c5)

    def as_dict(self) -> dict[str, float | int]:
        return {"c1": self.c1, "c2": self.c2, "c3": self.c3, "c4": self.c4, "c5": self.c5}


def compute_weights(record: VoteRecord, tokens: Sequence[Token]) -> Weights:
    """Score one voted term.

    c1: share of term words left unvoted (negative when duplicate
        description words re-vote the same term).
    c2: 1 if any vote came through the stem index.
    c3: pair distance between the term text and the term as rebuilt
        from the voting tokens' surfaces, in vote order.
    c4: token span of the voters relative to the term size.
    c5: sum of the claimed word positions (0-based), so votes hitting
        the front of the term score better.
    """
    size = record.term.size
    voters = record.voters
    rebuilt = " ".join(tokens[i].surface for i in voters)
    return Weights(
        c1=(size - len(voters)) / size,
        c2=1 if record.stem_used else 0,
        c3=pair_distance(record.term.normalized, rebuilt),
        c4=(max(voters) - min(voters) + 1) / size,
        c5=sum(record.voted),
    )


@dataclass(frozen=True, slots=True)
class ScoredTerm:
    """A voted term with its computed weights."""

    record: VoteRecord
    weights: Weights

    @property
    def term(self) -> Term:
        return self.record.term

    def as_dict(self) -> dict:
        term = self.record.term
        return {
            "llt_code": term.llt_code,
            "llt_text": term.llt_text,
            "pt_code": term.pt_code,
            "pt_text": term.pt_text,
            "weights": self.weights.as_dict(),
            "voters": list(self.record.voters),
            "voted": list(self.record.voted),
            "stem_used": self.record.stem_used,
        }


def sort_voted(scored: Iterable[ScoredTerm]) -> list[ScoredTerm]:
    """Ascending multi-key sort on (c1..c5); full ties broken by code."""
    return sorted(
        scored,
        key=lambda s: (*s.weights.as_tuple(), s.record.term.llt_code),
    )


# ---------------------------------------------------------------------------
# release
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class EncodeOptions:
    """Release-stage knobs.

    A None threshold disables that filter.  display_cap bounds how many
    selected terms are PRESENTED; the full selection is always kept and
    ``truncated`` reports whether the cap would cut it.
    """

    c3_max: float | None = 0.5
    c5_max: float | None = 3.0
    display_cap: int = 6


DEFAULT_OPTIONS = EncodeOptions()


def is_text_prefix(a: str, b: str) -> bool:
    """True when normalized text ``a`` is a word-boundary prefix of ``b``.

    Equal texts count as prefixes, so duplicates collapse.  The boundary
    check keeps "rash" from matching inside "rashes level" style fusions.
    """
    if not b.startswith(a):
        return False
    return len(a) == len(b) or b[len(a)] == " "


def release(
    ranked: Sequence[ScoredTerm],
    tokens: Sequence[Token],
    options: EncodeOptions = DEFAULT_OPTIONS,
) -> tuple[list[ScoredTerm], list[bool]]:
    """Select a prefix-free covering subset of the ranked terms.

    Walks terms best-first.  A term is selected when it still brings
    coverage (an unmarked voter token) or matched purely exactly, and no
    already-selected term text extends it.  Selecting a term marks all
    its voter tokens and evicts earlier selections that are prefixes of
    it.  The walk stops once every token that voted for at least one
    term is marked.
    """
    covered = [False] * len(tokens)
    uncovered = {i for scored in ranked for i in scored.record.voters}

    selected: list[ScoredTerm] = []
    selected_codes: set[str] = set()
    for scored in ranked:
        if not uncovered:
            break
        weights = scored.weights
        if options.c3_max is not None and weights.c3 >= options.c3_max:
            continue
        if options.c5_max is not None and weights.c5 >= options.c5_max:
            continue
        record = scored.record
        if record.stem_used and all(covered[i] for i in record.voters):
            continue
        if record.term.llt_code in selected_codes:
            continue
        text = record.term.normalized
        if any(is_text_prefix(text, kept.term.normalized) for kept in selected):
            continue

        for i in record.voters:
            covered[i] = True
            uncovered.discard(i)
        evicted = {
            kept.term.llt_code
            for kept in selected
            if is_text_prefix(kept.term.normalized, text)
        }
        if evicted:
            selected = [kept for kept in selected if kept.term.llt_code not in evicted]
            selected_codes -= evicted
        selected.append(scored)
        selected_codes.add(record.term.llt_code)
    return selected, covered


# ---------------------------------------------------------------------------
# end-to-end encode
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class EncodingResult:
    """Full outcome of one encode call.

    ``selected`` is the released subset in release order; ``ranked`` is
    the complete sorted candidate list for inspection.  ``truncated``
    says the display cap would cut ``selected`` at presentation time.
    """

    tokens: tuple[Token, ...]
    selected: tuple[ScoredTerm, ...]
    ranked: tuple[ScoredTerm, ...]
    covered_tokens: tuple[bool, ...]
    truncated: bool

    def as_dict(self, display_cap: int | None = None) -> dict:
        shown = self.selected if display_cap is None else self.selected[:display_cap]
        return {
            "selected": [scored.as_dict() for scored in shown],
            "covered_tokens": list(self.covered_tokens),
            "truncated": self.truncated,
        }


def encode(
    text: str,
    dictionary: TermDictionary,
    options: EncodeOptions = DEFAULT_OPTIONS,
) -> EncodingResult:
    """Encode a free-text description against a prebuilt dictionary."""
    tokens = prepare(text, stop_words=dictionary.stop_words, stemmer=dictionary.stemmer)
    records = vote(tokens, dictionary.by_word, dictionary.by_stem)
    scored = [compute_scored(record, tokens) for record in records.values()]
    ranked = sort_voted(scored)
    selected, covered = release(ranked, tokens, options)
    return EncodingResult(
        tokens=tuple(tokens),
        selected=tuple(selected),
        ranked=tuple(ranked),
        covered_tokens=tuple(covered),
        truncated=len(selected) > options.display_cap,
    )


def compute_scored(record: VoteRecord, tokens: Sequence[Token]) -> ScoredTerm:
    return ScoredTerm(record=record, weights=compute_weights(record, tokens))
