"""Command-line entry point.

One binary, subcommand style::

    docner validate annotations.jsonl --corpus corpus.jsonl
    docner combine stanza.jsonl camel.jsonl hatmi.jsonl --mode vote --k 2 -o vote.jsonl
    docner evaluate --gold gold.jsonl vote.jsonl merge.jsonl --format table
    docner filter corpus.jsonl --keywords covid.txt -o subset.jsonl
    docner dates corpus.jsonl -o dated.jsonl
    docner freq vote.jsonl --type ORG --top 10

Settings may come from an INI config file (``--config``) and are overridden
by flags. Exit codes: 0 success, 1 usage error, 2 parse or validation error
in the data, 3 I/O error. Reports go to stdout unless ``-o`` names a file;
warnings always go to stderr and, when ``--warnings-out`` is given, to that
file as well.

Config file format::

    [normalization]
    mode = normalized          ; exact | normalized
    strip_clitics = true
    unify_alef = true
    strip_tatweel = true

    [ensemble]
    mode = vote                ; merge | vote
    k = 2
    tools = stanza, camel, hatmi

    [dates]
    formats = YYYY-MM-DD, DD/MM/YYYY

    [report]
    format = csv               ; csv | table
    precision = 6
"""

from __future__ import annotations

import argparse
import configparser
import sys
from dataclasses import dataclass
from typing import NoReturn, Optional, Sequence

from . import corpus as corpus_mod
from . import ensemble as ensemble_mod
from . import interchange, metrics
from .normalize import EXACT, NormalizationConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3

_CONFIG_SECTIONS = {
    "normalization": {"mode", "strip_clitics", "unify_alef", "strip_tatweel"},
    "ensemble": {"mode", "k", "tools"},
    "dates": {"formats"},
    "report": {"format", "precision"},
}


@dataclass
class RunConfig:
    """Effective settings for one invocation: config file plus flag overrides."""

    normalization: NormalizationConfig = EXACT
    ensemble_mode: str = "merge"
    ensemble_k: int = 2
    ensemble_tools: tuple[str, ...] = ()
    date_formats: tuple[str, ...] = corpus_mod.DEFAULT_DATE_FORMATS
    output_format: str = "csv"
    report_precision: int = 6

    def __post_init__(self) -> None:
        if self.ensemble_mode not in ("merge", "vote"):
            raise ValueError(f"ensemble mode must be merge or vote, got {self.ensemble_mode!r}")
        if self.ensemble_k < 1:
            raise ValueError(f"ensemble k must be >= 1, got {self.ensemble_k}")
        if self.output_format not in ("csv", "table"):
            raise ValueError(f"report format must be csv or table, got {self.output_format!r}")
        if not 0 <= self.report_precision <= 17:
            raise ValueError(f"report precision out of range: {self.report_precision}")
        if not self.date_formats:
            raise ValueError("date format list is empty")


class WarningSink:
    """Forwards warnings to stderr immediately and keeps them for --warnings-out."""

    def __init__(self) -> None:
        self.messages: list[str] = []

    def __call__(self, message: str) -> None:
        self.messages.append(message)
        print(f"warning: {message}", file=sys.stderr)

    def write_to(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fp:
            for message in self.messages:
                fp.write(message + "\n")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; our contract reserves 2 for data
    errors, so route usage failures to exit code 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _split_list(raw: str) -> tuple[str, ...]:
    parts = [p.strip() for chunk in raw.splitlines() for p in chunk.split(",")]
    return tuple(p for p in parts if p)


def _load_config_file(path: str) -> dict:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    with open(path, "r", encoding="utf-8") as fp:
        parser.read_file(fp)
    for section in parser.sections():
        if section not in _CONFIG_SECTIONS:
            raise ValueError(f"config: unknown section [{section}]")
        unknown = set(parser[section]) - _CONFIG_SECTIONS[section]
        if unknown:
            raise ValueError(f"config: unknown key {sorted(unknown)[0]!r} in [{section}]")

    values: dict = {"has_normalization": parser.has_section("normalization")}
    if parser.has_section("normalization"):
        sec = parser["normalization"]
        values["normalization"] = NormalizationConfig(
            mode=sec.get("mode", "exact"),
            strip_clitics=sec.getboolean("strip_clitics", fallback=False),
            unify_alef=sec.getboolean("unify_alef", fallback=False),
            strip_tatweel=sec.getboolean("strip_tatweel", fallback=False),
        )
    if parser.has_section("ensemble"):
        sec = parser["ensemble"]
        if "mode" in sec:
            values["ensemble_mode"] = sec["mode"]
        if "k" in sec:
            values["ensemble_k"] = sec.getint("k")
        if "tools" in sec:
            values["ensemble_tools"] = _split_list(sec["tools"])
    if parser.has_section("dates"):
        sec = parser["dates"]
        if "formats" in sec:
            values["date_formats"] = _split_list(sec["formats"])
    if parser.has_section("report"):
        sec = parser["report"]
        if "format" in sec:
            values["output_format"] = sec["format"]
        if "precision" in sec:
            values["report_precision"] = sec.getint("precision")
    return values


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge the config file (if any) with command-line overrides."""
    values: dict = {"has_normalization": False}
    if getattr(args, "config", None):
        values.update(_load_config_file(args.config))

    has_norm_section = values.pop("has_normalization")
    norm = values.get("normalization", EXACT)
    equality = getattr(args, "equality", None)
    if equality == "exact":
        norm = EXACT
    elif equality == "normalized":
        if has_norm_section:
            norm = NormalizationConfig(
                mode="normalized",
                strip_clitics=norm.strip_clitics,
                unify_alef=norm.unify_alef,
                strip_tatweel=norm.strip_tatweel,
            )
        else:
            # No granular settings anywhere: enable the full normalization.
            norm = NormalizationConfig(
                mode="normalized", strip_clitics=True, unify_alef=True, strip_tatweel=True
            )
    values["normalization"] = norm

    if getattr(args, "mode", None):
        values["ensemble_mode"] = args.mode
    if getattr(args, "k", None) is not None:
        values["ensemble_k"] = args.k
    if getattr(args, "tools", None):
        values["ensemble_tools"] = _split_list(args.tools)
    if getattr(args, "formats", None):
        values["date_formats"] = _split_list(args.formats)
    if getattr(args, "format", None):
        values["output_format"] = args.format
    if getattr(args, "precision", None) is not None:
        values["report_precision"] = args.precision
    return RunConfig(**values)


def _parse_mode(args: argparse.Namespace) -> str:
    return "lenient" if getattr(args, "lenient", False) else "strict"


def _read_lines(path: str) -> list[str]:
    with open(path, "r", encoding="utf-8", newline="") as fp:
        return fp.readlines()


def _emit_text(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fp:
            fp.write(text)


def _emit_lines(write, records, out: Optional[str]) -> None:
    """Run one of the interchange writers against -o or stdout."""
    if out is None:
        write(records, sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fp:
            write(records, fp)


def cmd_validate(args: argparse.Namespace, cfg: RunConfig, warn: WarningSink) -> int:
    articles = None
    if args.corpus:
        with open(args.corpus, "r", encoding="utf-8", newline="") as fp:
            articles = list(interchange.parse_corpus_file(fp))
    violations = interchange.validate(_read_lines(args.input), corpus=articles)
    _emit_text(interchange.render_report(violations), args.out)
    return EXIT_DATA if violations else EXIT_OK


def cmd_combine(args: argparse.Namespace, cfg: RunConfig, warn: WarningSink) -> int:
    mode = _parse_mode(args)
    parsed = [
        list(interchange.parse_annotation_file(_read_lines(path), mode, warn))
        for path in args.inputs
    ]
    tools = cfg.ensemble_tools
    if not tools:
        seen: dict[str, None] = {}
        for annotations in parsed:
            for ann in annotations:
                seen.setdefault(ann.source)
        tools = tuple(seen)
    ecfg = ensemble_mod.EnsembleConfig(
        mode=cfg.ensemble_mode,
        tool_sources=tools,
        threshold_k=cfg.ensemble_k,
        equality=cfg.normalization,
    )
    combined = ensemble_mod.combine_corpus(parsed, ecfg, warn)
    _emit_lines(interchange.write_annotation_file, combined, args.out)
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace, cfg: RunConfig, warn: WarningSink) -> int:
    mode = _parse_mode(args)
    gold = list(interchange.parse_annotation_file(_read_lines(args.gold), "strict", warn))
    predictions: list[interchange.ArticleAnnotation] = []
    for path in args.preds:
        predictions.extend(interchange.parse_annotation_file(_read_lines(path), mode, warn))
    rows = metrics.evaluate(gold, predictions, cfg.normalization, warn)
    render = metrics.render_csv if cfg.output_format == "csv" else metrics.render_table
    _emit_text(render(rows, cfg.report_precision), args.out)
    return EXIT_OK


def cmd_filter(args: argparse.Namespace, cfg: RunConfig, warn: WarningSink) -> int:
    if args.keywords:
        kw = corpus_mod.KeywordList.load(_read_lines(args.keywords))
    else:
        kw = corpus_mod.KeywordList.default()
    with open(args.input, "r", encoding="utf-8", newline="") as fp:
        kept = corpus_mod.filter_by_keywords(interchange.parse_corpus_file(fp), kw)
        _emit_lines(interchange.write_corpus_file, kept, args.out)
    return EXIT_OK


def cmd_dates(args: argparse.Namespace, cfg: RunConfig, warn: WarningSink) -> int:
    with open(args.input, "r", encoding="utf-8", newline="") as fp:
        unified = corpus_mod.unify_corpus_dates(
            interchange.parse_corpus_file(fp), cfg.date_formats, warn
        )
        if args.histogram:
            histogram = corpus_mod.article_histogram(unified, args.granularity)
            _emit_text(corpus_mod.render_histogram_csv(histogram), args.out)
        else:
            _emit_lines(interchange.write_corpus_file, unified, args.out)
    return EXIT_OK


def cmd_freq(args: argparse.Namespace, cfg: RunConfig, warn: WarningSink) -> int:
    mode = _parse_mode(args)
    etype = interchange.EntityType(args.type)
    annotations = interchange.parse_annotation_file(_read_lines(args.input), mode, warn)
    table = corpus_mod.entity_article_frequency(annotations, etype, cfg.normalization)
    if args.top is not None:
        table = corpus_mod.top_k(table, args.top)
    _emit_text(corpus_mod.render_frequency_csv(table), args.out)
    return EXIT_OK


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE", help="INI config file")
    common.add_argument(
        "--equality",
        choices=("exact", "normalized"),
        help="string equality for dedup/agreement/matching (default exact)",
    )
    strictness = common.add_mutually_exclusive_group()
    strictness.add_argument(
        "--strict", action="store_true", help="reject unknown entity types (default)"
    )
    strictness.add_argument(
        "--lenient", action="store_true", help="drop unknown entity types with a warning"
    )
    common.add_argument("--warnings-out", metavar="FILE", help="also write warnings to FILE")
    common.add_argument("-o", "--out", metavar="FILE", help="write output to FILE instead of stdout")

    parser = _Parser(prog="docner", description="Document-level NER ensembles and evaluation.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="lint an annotation file")
    p.add_argument("input", help="annotation file")
    p.add_argument("--corpus", metavar="FILE", help="corpus file to resolve article ids against")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("combine", parents=[common], help="merge or vote tool outputs")
    p.add_argument("inputs", nargs="+", help="per-tool annotation files")
    p.add_argument("--mode", choices=("merge", "vote"), help="combination method")
    p.add_argument("--k", type=int, help="vote threshold (default 2)")
    p.add_argument("--tools", metavar="LIST", help="comma-separated source names (default: inferred)")
    p.set_defaults(handler=cmd_combine)

    p = sub.add_parser("evaluate", parents=[common], help="score predictions against gold")
    p.add_argument("preds", nargs="+", help="prediction annotation files")
    p.add_argument("--gold", required=True, metavar="FILE", help="gold annotation file")
    p.add_argument("--format", choices=("csv", "table"), help="report format (default csv)")
    p.add_argument("--precision", type=int, metavar="N", help="decimals in ratios (default 6)")
    p.set_defaults(handler=cmd_evaluate)

    p = sub.add_parser("filter", parents=[common], help="keep articles matching keywords")
    p.add_argument("input", help="corpus file")
    p.add_argument("--keywords", metavar="FILE", help="keyword file (default: built-in COVID list)")
    p.set_defaults(handler=cmd_filter)

    p = sub.add_parser("dates", parents=[common], help="unify publication dates")
    p.add_argument("input", help="corpus file")
    p.add_argument("--formats", metavar="LIST", help="comma-separated date patterns, tried in order")
    p.add_argument("--histogram", action="store_true", help="emit a period,count CSV instead")
    p.add_argument(
        "--granularity", choices=("year", "month"), default="month", help="histogram bucket size"
    )
    p.set_defaults(handler=cmd_dates)

    p = sub.add_parser("freq", parents=[common], help="rank entities by article frequency")
    p.add_argument("input", help="annotation file (one annotation per article)")
    p.add_argument("--type", required=True, choices=("PER", "ORG", "LOC"), help="entity type")
    p.add_argument("--top", type=int, metavar="K", help="keep only the K most frequent")
    p.set_defaults(handler=cmd_freq)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warn = WarningSink()
    try:
        cfg = resolve_config(args)
        code = args.handler(args, cfg, warn)
    except interchange.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DATA
    except interchange.DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_IO

    if getattr(args, "warnings_out", None):
        try:
            warn.write_to(args.warnings_out)
        except OSError as exc:
            print(f"error: cannot write warnings file: {exc}", file=sys.stderr)
            if code == EXIT_OK:
                code = EXIT_IO
    return code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
