"""Dictionary-based encoder for adverse drug reaction descriptions.

Matches free text against a term dictionary with a single-pass voting
scan over inverted word indexes, ranks the voted terms on five
criteria, and releases a prefix-free subset that covers the text.
Ships a benchmark harness, an HTTP review service and a CLI on top.
"""

from .dictionary import Term, TermDictionary, load_terms_csv, make_term
from .encoder import (
    EncodeOptions,
    EncodingResult,
    ScoredTerm,
    VoteRecord,
    Weights,
    encode,
    pair_distance,
)
from .stemming import get_stemmer
from .textprep import Token, load_wordlist, prepare

__version__ = "0.1.0"

__all__ = [
    "EncodeOptions",
    "EncodingResult",
    "ScoredTerm",
    "Term",
    "TermDictionary",
    "Token",
    "VoteRecord",
    "Weights",
    "encode",
    "get_stemmer",
    "load_terms_csv",
    "load_wordlist",
    "make_term",
    "pair_distance",
    "prepare",
    "__version__",
]
