"""Tokenization, stop-word filtering, and span fidelity."""

from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from adrcoder.stemming import get_stemmer
from adrcoder.textprep import Token, load_wordlist, prepare, word_spans, wordlist_from, words


class TestTokenize:
    def test_letters_only_runs(self):
        text = "Shock anafilattico (ipotensione + rash cutaneo) 1 h"
        assert words(text) == ["shock", "anafilattico", "ipotensione", "rash", "cutaneo", "h"]

    def test_digits_and_punctuation_split(self):
        assert words("febbre 39,5") == ["febbre"]

    def test_empty(self):
        assert words("") == []

    def test_hyphen_splits(self):
        assert words("anti-infiammatorio") == ["anti", "infiammatorio"]

    def test_accented_letters_kept(self):
        assert words("nausea è già") == ["nausea", "è", "già"]

    def test_spans_cover_original_slices(self):
        text = "Rash, febbre 38.5 e cefalea!"
        for start, end in word_spans(text):
            assert text[start:end].isalpha()

    def test_trailing_word_span(self):
        assert list(word_spans("ab 12cd")) == [(0, 2), (5, 7)]


class TestStopWords:
    def test_filter_is_order_preserving(self):
        tokens = prepare(
            "gonfiore in sede di vaccinazione",
            stop_words=frozenset({"in", "di"}),
        )
        assert [t.surface for t in tokens] == ["gonfiore", "sede", "vaccinazione"]

    def test_empty_stop_list_is_identity(self):
        tokens = prepare("a b c")
        assert [t.surface for t in tokens] == ["a", "b", "c"]

    def test_all_stop_words(self):
        assert prepare("e ed", stop_words=frozenset({"e", "ed"})) == []

    def test_match_is_casefolded(self):
        tokens = prepare("E poi", stop_words=frozenset({"e"}))
        assert [t.surface for t in tokens] == ["poi"]


class TestPrepare:
    def test_composition(self):
        stemmer = get_stemmer("it")
        stops = frozenset({"e", "per", "due"})
        tokens = prepare("cefalea e febbre per due giorni", stop_words=stops, stemmer=stemmer)
        assert [t.surface for t in tokens] == ["cefalea", "febbre", "giorni"]
        assert all(t.stem == stemmer(t.surface) for t in tokens)

    def test_empty_text(self):
        assert prepare("") == []

    def test_no_stemmer_keeps_surface(self):
        tokens = prepare("rash")
        assert tokens == [Token(surface="rash", start=0, end=4, stem="rash")]


@given(st.text(max_size=80))
def test_span_fidelity(text):
    """Re-slicing the original by each span reproduces each surface."""
    for token in prepare(text):
        assert 0 <= token.start < token.end <= len(text)
        assert text[token.start : token.end].casefold() == token.surface


@given(st.text(max_size=80))
def test_spans_increasing_and_disjoint(text):
    tokens = prepare(text)
    for left, right in zip(tokens, tokens[1:]):
        assert left.end <= right.start


@given(st.text(max_size=80), st.frozensets(st.text(min_size=1, max_size=5), max_size=5))
def test_prepare_composes_primitives(text, stops):
    stemmer = get_stemmer("it")
    expected = [s for s in words(text) if s not in stops]
    got = prepare(text, stop_words=stops, stemmer=stemmer)
    assert [t.surface for t in got] == expected
    assert [t.stem for t in got] == [stemmer(s) for s in expected]


class TestWordlist:
    def test_comments_and_blanks_skipped(self):
        lines = ["# connectives", "", "  e  ", "ED", "# more", "di"]
        assert wordlist_from(lines) == frozenset({"e", "ed", "di"})

    def test_load_wordlist(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("# test\nnon\nE\n\n", encoding="utf-8")
        assert load_wordlist(path) == frozenset({"non", "e"})
