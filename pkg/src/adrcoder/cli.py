"""Command-line interface.

Subcommands: build-dict (load and inspect a dictionary), encode (one
text or a file of texts), bench (corpus benchmark), serve (HTTP
service).  Exit codes: 0 success, 2 bad arguments (argparse), 3
dictionary load failure, 1 runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import benchmark as bench_mod
from .config import AppConfig, load_config
from .dictionary import TermDictionary
from .encoder import EncodingResult, encode


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adrcoder",
        description="Encode adverse-reaction free text into dictionary terms.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, *, dict_required: bool) -> None:
        p.add_argument("--config", help="JSON config file")
        p.add_argument(
            "--dict",
            dest="dictionary",
            required=dict_required,
            help="terms CSV (llt_code,llt_text,pt_code,pt_text); 'fixture' for the shipped demo set",
        )
        p.add_argument("--stopwords", help="stop-word file, one word per line")
        p.add_argument("--language", help="stemmer language code (it, en)")
        p.add_argument("--c3-max", dest="c3_max", help="release threshold on c3; 'none' disables")
        p.add_argument("--c5-max", dest="c5_max", help="release threshold on c5; 'none' disables")
        p.add_argument("--cap", dest="display_cap", type=int, help="display cap for selected terms")

    p_build = sub.add_parser("build-dict", help="load a dictionary and print build statistics")
    add_common(p_build, dict_required=True)
    p_build.set_defaults(func=cmd_build_dict)

    p_encode = sub.add_parser("encode", help="encode text against a dictionary")
    add_common(p_encode, dict_required=True)
    source = p_encode.add_mutually_exclusive_group(required=True)
    source.add_argument("--text", help="one description to encode")
    source.add_argument("--input", help="file with one description per line ('-' for stdin)")
    p_encode.add_argument("--json", action="store_true", help="JSON-lines output instead of a table")
    p_encode.add_argument(
        "--keep-going",
        action="store_true",
        help="report per-line errors on stderr and continue",
    )
    p_encode.set_defaults(func=cmd_encode)

    p_bench = sub.add_parser("bench", help="run the corpus benchmark")
    add_common(p_bench, dict_required=True)
    p_bench.add_argument("--corpus", required=True, help="corpus CSV (report_id,description,gold_llt_codes)")
    p_bench.add_argument("--out", help="directory for detail.jsonl and summary.csv")
    p_bench.set_defaults(func=cmd_bench)

    p_serve = sub.add_parser("serve", help="run the HTTP review service")
    add_common(p_serve, dict_required=False)
    p_serve.add_argument("--negation", help="negation word file")
    p_serve.add_argument("--data-dir", dest="data_dir", help="directory for session logs")
    p_serve.add_argument("--host")
    p_serve.add_argument("--port", type=int)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def resolve_config(args: argparse.Namespace) -> AppConfig:
    keys = (
        "dictionary",
        "stopwords",
        "negation",
        "language",
        "c3_max",
        "c5_max",
        "display_cap",
        "data_dir",
        "host",
        "port",
    )
    overrides = {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}
    if overrides.get("dictionary") == "fixture":
        del overrides["dictionary"]
    return load_config(config_file=args.config, overrides=overrides)


def load_dictionary_or_exit(config: AppConfig) -> TermDictionary:
    try:
        return config.load_dictionary()
    except Exception as exc:
        print(f"error: cannot load dictionary: {exc}", file=sys.stderr)
        raise SystemExit(3)


def cmd_build_dict(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    started = time.perf_counter()
    dictionary = load_dictionary_or_exit(config)
    elapsed = time.perf_counter() - started
    print(f"terms:          {len(dictionary)}")
    print(f"distinct words: {len(dictionary.by_word)}")
    print(f"distinct stems: {len(dictionary.by_stem)}")
    print(f"language:       {dictionary.language}")
    print(f"stop words:     {len(dictionary.stop_words)}")
    print(f"version:        {dictionary.version}")
    print(f"build seconds:  {elapsed:.3f}")
    return 0


def _iter_texts(args: argparse.Namespace):
    if args.text is not None:
        yield args.text
        return
    handle = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    try:
        for line in handle:
            yield line.rstrip("\n")
    finally:
        if handle is not sys.stdin:
            handle.close()


def _print_table(result: EncodingResult, display_cap: int) -> None:
    shown = result.selected[:display_cap]
    for scored in shown:
        term = scored.term
        w = scored.weights
        match_kind = "stem" if scored.record.stem_used else "exact"
        print(
            f"{term.llt_code}  {term.llt_text} -> {term.pt_text}  "
            f"[c1={w.c1:.3f} c2={w.c2} c3={w.c3:.3f} c4={w.c4:.3f} c5={w.c5} {match_kind}]"
        )
    hidden = len(result.selected) - len(shown)
    if hidden > 0:
        print(f"... {hidden} more suppressed by display cap")


def cmd_encode(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    dictionary = load_dictionary_or_exit(config)
    options = config.encode_options()

    failed = False
    for lineno, text in enumerate(_iter_texts(args), start=1):
        try:
            result = encode(text, dictionary, options)
        except Exception as exc:
            if not args.keep_going:
                print(f"error: line {lineno}: {exc}", file=sys.stderr)
                return 1
            failed = True
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            continue
        if args.json:
            print(json.dumps(result.as_dict(), ensure_ascii=False))
        else:
            _print_table(result, options.display_cap)
    return 1 if failed else 0


def cmd_bench(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    dictionary = load_dictionary_or_exit(config)
    try:
        corpus = bench_mod.load_corpus_csv(args.corpus)
    except Exception as exc:
        print(f"error: cannot load corpus: {exc}", file=sys.stderr)
        return 1

    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / "detail.jsonl", "w", encoding="utf-8") as detail:
            stats = bench_mod.run_benchmark(
                corpus, dictionary, config.encode_options(), detail_sink=detail
            )
        with open(out_dir / "summary.csv", "w", encoding="utf-8") as summary:
            bench_mod.write_summary_csv(stats, summary)
    else:
        stats = bench_mod.run_benchmark(corpus, dictionary, config.encode_options())

    print(f"{'bucket':>8}  {'reports':>7}  {'identical':>9}  {'jaccard':>7}  {'errors':>6}")
    for row in stats:
        print(
            f"{row.bucket:>8}  {row.n_reports:>7}  {row.identical_rate:>9.4f}  "
            f"{row.mean_jaccard:>7.4f}  {row.n_errors:>6}"
        )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from . import service

    config = resolve_config(args)
    service.run(config)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
