"""Algorithmic word stemmers.

Suffix-stripping stemmers in the Porter family, implemented in pure
Python so the package has no native or data-file dependencies.  Two
languages are built in: English (the classic Porter algorithm) and
Italian (a Snowball-style suffix stripper).  A stemmer is just a
``str -> str`` function; anything with that shape can be plugged in
wherever the built-ins are used.
"""

from __future__ import annotations

import functools
from typing import Callable

Stemmer = Callable[[str], str]

# ---------------------------------------------------------------------------
# English: Porter algorithm
# ---------------------------------------------------------------------------

_EN_VOWELS = "aeiou"


def _en_is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _EN_VOWELS:
        return False
    if ch == "y":
        # y is a vowel when preceded by a consonant
        return i == 0 or not _en_is_consonant(word, i - 1)
    return True


def _en_measure(stem: str) -> int:
    """Number of vowel-consonant sequences in the stem."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        cons = _en_is_consonant(stem, i)
        if prev_vowel and cons:
            m += 1
        prev_vowel = not cons
    return m


def _en_has_vowel(stem: str) -> bool:
    return any(not _en_is_consonant(stem, i) for i in range(len(stem)))


def _en_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _en_is_consonant(word, len(word) - 1)
    )


def _en_cvc(word: str) -> bool:
    if len(word) < 3:
        return False
    return (
        _en_is_consonant(word, len(word) - 3)
        and not _en_is_consonant(word, len(word) - 2)
        and _en_is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


_EN_STEP2 = (
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
)

_EN_STEP3 = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
)

_EN_STEP4 = (
    "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ion",
    "ism", "ate", "iti", "ous", "ive", "ize", "al", "er", "ic", "ou",
)


def _en_longest_match(word: str, suffixes) -> str | None:
    best = None
    for suf in suffixes:
        if word.endswith(suf) and (best is None or len(suf) > len(best)):
            best = suf
    return best


def english_stem(word: str) -> str:
    """Porter suffix-stripping stemmer for English."""
    if len(word) <= 2:
        return word

    # step 1a
    if word.endswith("sses"):
        word = word[:-2]
    elif word.endswith("ies"):
        word = word[:-2]
    elif word.endswith("ss"):
        pass
    elif word.endswith("s"):
        word = word[:-1]

    # step 1b
    cleanup = False
    if word.endswith("eed"):
        if _en_measure(word[:-3]) > 0:
            word = word[:-1]
    elif word.endswith("ed") and _en_has_vowel(word[:-2]):
        word = word[:-2]
        cleanup = True
    elif word.endswith("ing") and _en_has_vowel(word[:-3]):
        word = word[:-3]
        cleanup = True
    if cleanup:
        if word.endswith(("at", "bl", "iz")):
            word += "e"
        elif _en_double_consonant(word) and word[-1] not in "lsz":
            word = word[:-1]
        elif _en_measure(word) == 1 and _en_cvc(word):
            word += "e"

    # step 1c
    if word.endswith("y") and _en_has_vowel(word[:-1]):
        word = word[:-1] + "i"

    # step 2
    suf = _en_longest_match(word, [s for s, _ in _EN_STEP2])
    if suf is not None:
        stem = word[: -len(suf)]
        if _en_measure(stem) > 0:
            word = stem + dict(_EN_STEP2)[suf]

    # step 3
    suf = _en_longest_match(word, [s for s, _ in _EN_STEP3])
    if suf is not None:
        stem = word[: -len(suf)]
        if _en_measure(stem) > 0:
            word = stem + dict(_EN_STEP3)[suf]

    # step 4
    suf = _en_longest_match(word, _EN_STEP4)
    if suf is not None:
        stem = word[: -len(suf)]
        if _en_measure(stem) > 1 and (suf != "ion" or stem.endswith(("s", "t"))):
            word = stem

    # step 5a
    if word.endswith("e"):
        stem = word[:-1]
        m = _en_measure(stem)
        if m > 1 or (m == 1 and not _en_cvc(stem)):
            word = stem

    # step 5b
    if _en_measure(word) > 1 and _en_double_consonant(word) and word.endswith("l"):
        word = word[:-1]

    return word


# ---------------------------------------------------------------------------
# Italian: Snowball-style suffix stripper
# ---------------------------------------------------------------------------

# Lower-case vowels only: the marker characters U and I introduced by the
# prelude deliberately do NOT count as vowels.
_IT_VOWELS = frozenset("aeiouàèìòù")

_IT_ACUTE_TO_GRAVE = str.maketrans("áéíóú", "àèìòù")

_IT_STEP0_PRONOUNS = (
    "gliela", "gliele", "glieli", "glielo", "gliene",
    "sene", "mela", "mele", "meli", "melo", "mene",
    "tela", "tele", "teli", "telo", "tene",
    "cela", "cele", "celi", "celo", "cene",
    "vela", "vele", "veli", "velo", "vene",
    "gli", "ci", "la", "le", "li", "lo", "mi", "ne", "si", "ti", "vi",
)

# step 1 suffixes mapped to their action; matched longest-first
_IT_STEP1_DELETE_R2 = (
    "atrice", "atrici", "abile", "abili", "ibile", "ibili", "mente",
    "anza", "anze", "iche", "ichi", "ismo", "ismi", "ista", "iste", "isti",
    "istà", "istè", "istì", "ante", "anti", "ico", "ici", "ica", "ice",
    "oso", "osi", "osa", "ose",
)
_IT_STEP1_ALL = (
    _IT_STEP1_DELETE_R2
    + ("azione", "azioni", "atore", "atori")
    + ("logia", "logie")
    + ("uzione", "uzioni", "usione", "usioni")
    + ("enza", "enze")
    + ("amento", "amenti", "imento", "imenti")
    + ("amente",)
    + ("ità",)
    + ("ivo", "ivi", "iva", "ive")
)

_IT_STEP2_VERB = (
    "arebbero", "erebbero", "irebbero", "assero", "essero", "issero",
    "aranno", "eranno", "iranno", "arebbe", "erebbe", "irebbe",
    "aremmo", "eremmo", "iremmo", "assimo", "ammo", "emmo", "immo",
    "areste", "ereste", "ireste", "aresti", "eresti", "iresti",
    "iscano", "iscono", "arono", "erono", "irono",
    "avamo", "avano", "avate", "evamo", "evano", "evate",
    "ivamo", "ivano", "ivate", "arete", "erete", "irete",
    "arai", "erai", "irai", "aremo", "eremo", "iremo",
    "ando", "endo", "arà", "erà", "irà", "arò", "erò", "irò",
    "asse", "assi", "enda", "ende", "endi", "erei", "arei", "irei",
    "Iamo", "iamo", "isca", "isce", "isci", "isco",
    "este", "esti", "ano", "are", "ava", "avi", "avo", "ata", "ate", "ati",
    "ato", "ere", "eva", "evi", "evo", "ire", "ita", "ite", "iti", "ito",
    "iva", "ivi", "ivo", "ono", "uta", "ute", "uti", "uto", "ete", "ar", "ir",
)


def _it_prelude(word: str) -> str:
    word = word.translate(_IT_ACUTE_TO_GRAVE)
    chars = list(word)
    for i, ch in enumerate(chars):
        if ch == "u" and i > 0 and chars[i - 1] == "q":
            chars[i] = "U"
    for i in range(1, len(chars) - 1):
        if chars[i] in "ui" and chars[i - 1] in _IT_VOWELS and chars[i + 1] in _IT_VOWELS:
            chars[i] = "U" if chars[i] == "u" else "I"
    return "".join(chars)


def _it_regions(word: str) -> tuple[int, int, int]:
    """Start offsets of the RV, R1 and R2 regions."""
    n = len(word)

    def r_after(start: int) -> int:
        prev_vowel = word[start] in _IT_VOWELS if start < n else False
        for i in range(start + 1, n):
            is_v = word[i] in _IT_VOWELS
            if prev_vowel and not is_v:
                return i + 1
            prev_vowel = is_v
        return n

    r1 = r_after(0)
    r2 = r_after(r1) if r1 < n else n

    if n < 2:
        rv = n
    elif word[1] not in _IT_VOWELS:
        # consonant in second position: after the next vowel
        rv = n
        for i in range(2, n):
            if word[i] in _IT_VOWELS:
                rv = i + 1
                break
    elif word[0] in _IT_VOWELS:
        # two initial vowels: after the next consonant
        rv = n
        for i in range(2, n):
            if word[i] not in _IT_VOWELS:
                rv = i + 1
                break
    else:
        rv = min(3, n)
    return rv, r1, r2


def _longest_suffix(word: str, suffixes) -> str | None:
    best = None
    for suf in suffixes:
        if word.endswith(suf) and (best is None or len(suf) > len(best)):
            best = suf
    return best


def italian_stem(word: str) -> str:
    """Snowball-style suffix-stripping stemmer for Italian."""
    if len(word) <= 2:
        return word.translate(_IT_ACUTE_TO_GRAVE)

    word = _it_prelude(word)
    rv, r1, r2 = _it_regions(word)

    def in_region(start_of_suffix: int, region_start: int) -> bool:
        return start_of_suffix >= region_start

    # step 0: attached pronouns after a gerund or infinitive ending
    pron = _longest_suffix(word, _IT_STEP0_PRONOUNS)
    if pron is not None:
        rest = word[: -len(pron)]
        for stem_suf, repl in (("ando", ""), ("endo", ""), ("ar", "e"), ("er", "e"), ("ir", "e")):
            if rest.endswith(stem_suf) and in_region(len(rest) - len(stem_suf), rv):
                word = rest + repl
                break

    # step 1: standard (derivational) suffixes
    removed = False
    suf = _longest_suffix(word, _IT_STEP1_ALL)
    if suf is not None:
        start = len(word) - len(suf)
        if suf in _IT_STEP1_DELETE_R2:
            if in_region(start, r2):
                word = word[:start]
                removed = True
        elif suf in ("azione", "azioni", "atore", "atori"):
            if in_region(start, r2):
                word = word[:start]
                removed = True
                if word.endswith("ic") and in_region(len(word) - 2, r2):
                    word = word[:-2]
        elif suf in ("logia", "logie"):
            if in_region(start, r2):
                word = word[:start] + "log"
                removed = True
        elif suf in ("uzione", "uzioni", "usione", "usioni"):
            if in_region(start, r2):
                word = word[:start] + "u"
                removed = True
        elif suf in ("enza", "enze"):
            if in_region(start, r2):
                word = word[:start] + "ente"
                removed = True
        elif suf in ("amento", "amenti", "imento", "imenti"):
            if in_region(start, rv):
                word = word[:start]
                removed = True
        elif suf == "amente":
            if in_region(start, r1):
                word = word[:start]
                removed = True
                if word.endswith("iv") and in_region(len(word) - 2, r2):
                    word = word[:-2]
                    if word.endswith("at") and in_region(len(word) - 2, r2):
                        word = word[:-2]
                else:
                    for extra in ("os", "ic", "abil"):
                        if word.endswith(extra) and in_region(len(word) - len(extra), r2):
                            word = word[: -len(extra)]
                            break
        elif suf == "ità":
            if in_region(start, r2):
                word = word[:start]
                removed = True
                for extra in ("abil", "ic", "iv"):
                    if word.endswith(extra) and in_region(len(word) - len(extra), r2):
                        word = word[: -len(extra)]
                        break
        else:  # ivo ivi iva ive
            if in_region(start, r2):
                word = word[:start]
                removed = True
                if word.endswith("at") and in_region(len(word) - 2, r2):
                    word = word[:-2]
                    if word.endswith("ic") and in_region(len(word) - 2, r2):
                        word = word[:-2]

    # step 2: verb suffixes, only when step 1 stripped nothing
    if not removed:
        suf = _longest_suffix(word, _IT_STEP2_VERB)
        if suf is not None and in_region(len(word) - len(suf), rv):
            word = word[: -len(suf)]

    # step 3a: final vowel, then a directly preceding i
    if word and word[-1] in "aeioàèìò" and in_region(len(word) - 1, rv):
        word = word[:-1]
        if word and word[-1] == "i" and in_region(len(word) - 1, rv):
            word = word[:-1]

    # step 3b: ch/gh reduced before the postlude
    if word.endswith(("ch", "gh")) and in_region(len(word) - 2, rv):
        word = word[:-1]

    return word.replace("U", "u").replace("I", "i")


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_LANGUAGES: dict[str, Stemmer] = {
    "it": italian_stem,
    "en": english_stem,
}

SUPPORTED_LANGUAGES = tuple(sorted(_LANGUAGES))


_memoized: dict[str, Stemmer] = {}


def get_stemmer(language: str) -> Stemmer:
    """Return the shared memoized stemmer for a language code ("it", "en")."""
    try:
        raw = _LANGUAGES[language]
    except KeyError:
        raise ValueError(
            f"unsupported stemmer language {language!r}; "
            f"supported: {', '.join(SUPPORTED_LANGUAGES)}"
        ) from None
    if language not in _memoized:
        _memoized[language] = functools.lru_cache(maxsize=None)(raw)
    return _memoized[language]
