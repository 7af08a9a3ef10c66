"""Corpus-scale analytics: date unification, keyword subsetting, article
histograms and entity article-frequency ranking.

Everything here streams: articles and annotations are consumed one at a
time and only counters survive, so a corpus in the tens of thousands of
articles runs in bounded memory. Frequencies count *articles containing an
entity*, never raw mention counts — the interchange stores per-article sets
by construction, which keeps entities that recur inside one article from
being overcounted.
"""

from __future__ import annotations

import datetime
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .interchange import (
    Article,
    ArticleAnnotation,
    DataError,
    EntityType,
    WarnFn,
    _warn,
)
from .normalize import EXACT, NormalizationConfig, canonicalize

# Default keyword list for the COVID-19 subset: the Latin spellings plus the
# Arabic forms of corona/covid and the Arabic word for "pandemic".
DEFAULT_COVID_KEYWORDS = (
    "coronavirus",
    "corona",
    "covid",
    "كورونا",
    "كوفيد",
    "جائحة",
)

DEFAULT_DATE_FORMATS = ("YYYY-MM-DD", "DD/MM/YYYY", "DD-MM-YYYY", "YYYY/MM/DD")

UNKNOWN_PERIOD = "unknown"


@dataclass(frozen=True)
class KeywordList:
    keywords: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.keywords:
            raise ValueError("keyword list is empty")
        if any(not kw.strip() for kw in self.keywords):
            raise ValueError("keyword list contains a blank keyword")

    @classmethod
    def load(cls, stream: Iterable[str]) -> "KeywordList":
        """One keyword per line; '#' comments and blank lines ignored,
        duplicates removed (first occurrence wins)."""
        seen: dict[str, None] = {}
        for raw in stream:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            seen.setdefault(line)
        return cls(tuple(seen))

    @classmethod
    def default(cls) -> "KeywordList":
        return cls(DEFAULT_COVID_KEYWORDS)


@dataclass
class FrequencyTable:
    """Entity -> number of distinct articles, sorted by count descending
    then by code-point order of the text."""

    type: EntityType
    rows: list[tuple[str, int]]


def _to_strptime(pattern: str) -> str:
    if "%" in pattern:
        return pattern
    return pattern.replace("YYYY", "%Y").replace("MM", "%m").replace("DD", "%d")


def unify_date(
    raw: str,
    formats: Sequence[str] = DEFAULT_DATE_FORMATS,
    warn: Optional[WarnFn] = None,
) -> Optional[datetime.date]:
    """Resolve a published date string against an ordered format list.

    The first matching format wins. An unmatched date is not an error: it
    returns None and emits a warning, so a single odd record never aborts a
    corpus run.
    """
    if not formats:
        raise ValueError("date format list is empty")
    text = raw.strip()
    for pattern in formats:
        try:
            return datetime.datetime.strptime(text, _to_strptime(pattern)).date()
        except ValueError:
            continue
    _warn(warn, f"unresolved date {raw!r}")
    return None


def unify_corpus_dates(
    articles: Iterable[Article],
    formats: Sequence[str] = DEFAULT_DATE_FORMATS,
    warn: Optional[WarnFn] = None,
) -> Iterator[Article]:
    """Populate date_iso from the raw date; existing date_iso is kept."""
    for article in articles:
        if article.date_iso is None:
            article.date_iso = unify_date(article.date_raw, formats, warn)
        yield article


def filter_by_keywords(articles: Iterable[Article], kw: KeywordList) -> Iterator[Article]:
    """Keep articles whose title or body contains at least one keyword.

    Substring matching, deliberately: clitic-attached Arabic forms such as
    "لكورونا" and hyphenated Latin forms such as "COVID-19" must match.
    Case-insensitive via casefold (a no-op for Arabic). Order is preserved.
    """
    needles = tuple(k.casefold() for k in kw.keywords)
    for article in articles:
        haystack = (article.title + "\n" + article.body).casefold()
        if any(needle in haystack for needle in needles):
            yield article


def article_histogram(articles: Iterable[Article], granularity: str = "month") -> dict[str, int]:
    """Article counts per calendar period; unresolved dates bucket under
    "unknown". Bucket counts always sum to the corpus size."""
    if granularity not in ("year", "month"):
        raise ValueError(f"unknown granularity {granularity!r}")
    counts: Counter[str] = Counter()
    for article in articles:
        d = article.date_iso
        if d is None:
            counts[UNKNOWN_PERIOD] += 1
        elif granularity == "year":
            counts[f"{d.year:04d}"] += 1
        else:
            counts[f"{d.year:04d}-{d.month:02d}"] += 1
    return dict(counts)


def entity_article_frequency(
    annotations: Iterable[ArticleAnnotation],
    etype: EntityType,
    equality: NormalizationConfig = EXACT,
) -> FrequencyTable:
    """Rank entities of one type by the number of distinct articles whose
    set contains them. Input must carry at most one annotation per article
    (i.e. already combined); entities absent everywhere get no row."""
    counts: Counter[str] = Counter()
    seen: set[str] = set()
    for ann in annotations:
        if ann.article_id in seen:
            raise DataError(f"duplicate article_id {ann.article_id!r} in frequency input")
        seen.add(ann.article_id)
        counts.update({canonicalize(m, equality) for m in ann.members(etype)})
    rows = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return FrequencyTable(etype, rows)


def top_k(table: FrequencyTable, k: int) -> FrequencyTable:
    """First min(k, len) rows under the table's order; k must be positive."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    return FrequencyTable(table.type, table.rows[:k])


def render_frequency_csv(table: FrequencyTable) -> str:
    """CSV report: rank,type,text,article_count (rank 1 = most frequent)."""
    lines = ["rank,type,text,article_count"]
    for rank, (text, count) in enumerate(table.rows, start=1):
        lines.append(f"{rank},{table.type.value},{_csv_cell(text)},{count}")
    return "\n".join(lines) + "\n"


def render_histogram_csv(histogram: dict[str, int]) -> str:
    """CSV report: period,count — periods ascending, "unknown" last."""
    lines = ["period,count"]
    periods = sorted(p for p in histogram if p != UNKNOWN_PERIOD)
    if UNKNOWN_PERIOD in histogram:
        periods.append(UNKNOWN_PERIOD)
    for period in periods:
        lines.append(f"{period},{histogram[period]}")
    return "\n".join(lines) + "\n"


def _csv_cell(value: str) -> str:
    if any(c in value for c in ',"\n'):
        return '"' + value.replace('"', '""') + '"'
    return value
