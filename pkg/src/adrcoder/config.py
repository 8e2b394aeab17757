"""Application configuration for the service and the CLI.

Settings merge from four layers, lowest to highest precedence:
defaults, a JSON config file, ADRCODER_* environment variables, and
explicit overrides (CLI flags).  Threshold values accept "none" to
disable a filter.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Mapping

from . import assets
from .dictionary import TermDictionary, load_terms_csv
from .encoder import EncodeOptions
from .textprep import load_wordlist

ENV_PREFIX = "ADRCODER_"

# config keys that hold filesystem paths
_PATH_KEYS = {"dictionary", "stopwords", "negation", "data_dir"}


@dataclass
class AppConfig:
    """Resolved configuration; paths left as None fall back to shipped data."""

    dictionary: Path | None = None
    stopwords: Path | None = None
    negation: Path | None = None
    language: str = "it"
    c3_max: float | None = 0.5
    c5_max: float | None = 3.0
    display_cap: int = 6
    max_text_length: int = 10_000
    data_dir: Path = Path("review-data")
    host: str = "127.0.0.1"
    port: int = 8000

    def encode_options(self) -> EncodeOptions:
        return EncodeOptions(
            c3_max=self.c3_max,
            c5_max=self.c5_max,
            display_cap=self.display_cap,
        )

    def load_dictionary(self) -> TermDictionary:
        """Build the term dictionary this configuration points at.

        Without an explicit dictionary path the small shipped fixture is
        used, which keeps the CLI and service runnable out of the box.
        """
        if self.dictionary is not None:
            terms = load_terms_csv(self.dictionary)
        else:
            terms = assets.fixture_terms()
        if self.stopwords is not None:
            stop_words = load_wordlist(self.stopwords)
        else:
            stop_words = assets.default_stop_words(self.language)
        return TermDictionary.build(terms, language=self.language, stop_words=stop_words)

    def load_negation_words(self) -> frozenset[str]:
        if self.negation is not None:
            return load_wordlist(self.negation)
        return assets.negation_words(self.language)


def load_config(
    config_file: str | Path | None = None,
    env: Mapping[str, str] | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> AppConfig:
    """Merge defaults, config file, environment and overrides, in that order."""
    merged: dict[str, Any] = {}

    if config_file is not None:
        raw = json.loads(Path(config_file).read_text(encoding="utf-8"))
        if not isinstance(raw, dict):
            raise ValueError(f"{config_file}: config must be a JSON object")
        for key, value in raw.items():
            merged[_known_key(key, source=str(config_file))] = value

    env = os.environ if env is None else env
    for key in _field_names():
        raw_value = env.get(ENV_PREFIX + key.upper())
        if raw_value is not None:
            merged[key] = raw_value

    for key, value in (overrides or {}).items():
        if value is not None:
            merged[_known_key(key, source="overrides")] = value

    return AppConfig(**{k: _coerce(k, v) for k, v in merged.items()})


def _field_names() -> tuple[str, ...]:
    return tuple(f.name for f in fields(AppConfig))


def _known_key(key: str, *, source: str) -> str:
    normalized = key.replace("-", "_")
    if normalized not in _field_names():
        raise ValueError(f"{source}: unknown config key {key!r}")
    return normalized


def _coerce(key: str, value: Any) -> Any:
    if value is None:
        return None
    if key in _PATH_KEYS:
        return Path(value)
    if key in ("c3_max", "c5_max"):
        if isinstance(value, str) and value.strip().lower() in ("", "none", "null", "off"):
            return None
        return float(value)
    if key in ("display_cap", "max_text_length", "port"):
        return int(value)
    return str(value)
