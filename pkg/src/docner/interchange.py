"""Line-delimited interchange formats for article-level entity annotations.

Two file formats, both UTF-8 without BOM, LF line endings, one JSON object
per line. Blank lines and lines starting with '#' are skipped (adapter
tooling emits a leading ``# meta: {...}`` line with model/version pins).

Annotation file::

    {"article_id": "a1", "source": "stanza", "entities": [{"type": "LOC", "text": "..."}]}

Entity ``type`` is one of PER, ORG, LOC. Entity text is NFC-normalized and
trimmed at parse time and deduplicated per (article, type); article bodies
are never touched.

Corpus file::

    {"id": "1", "date": "15/03/2020", "title": "...", "body": "..."}

plus an optional ``date_iso`` field once dates have been unified. Corpus
records are stored verbatim — in particular ``body`` is kept byte-for-byte,
with no whitespace, stop-word or punctuation processing of any kind.
"""

from __future__ import annotations

import datetime
import json
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Optional

WarnFn = Callable[[str], None]


class EntityType(str, Enum):
    """The three entity types in scope. Any other label is out of contract."""

    PER = "PER"
    ORG = "ORG"
    LOC = "LOC"


ENTITY_TYPES: tuple[EntityType, ...] = (EntityType.PER, EntityType.ORG, EntityType.LOC)
_TYPE_ORDER = {t: i for i, t in enumerate(ENTITY_TYPES)}
_TYPE_BY_LABEL = {t.value: t for t in ENTITY_TYPES}


class ParseError(ValueError):
    """Malformed input line; carries the 1-based physical line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DataError(ValueError):
    """Well-formed records that are inconsistent with each other (e.g. the
    same (article_id, source) pooled from two input files)."""


@dataclass(frozen=True)
class EntityMention:
    """One surface mention of an entity, prior to per-article deduplication."""

    type: EntityType
    text: str


@dataclass
class EntitySet:
    """Deduplicated surface strings of one type for one article."""

    type: EntityType
    members: set[str] = field(default_factory=set)


@dataclass
class ArticleAnnotation:
    """Entity sets for one article from one source (a tool, "gold", "merge"
    or "vote:K"). All three types are always present, possibly empty."""

    article_id: str
    source: str
    per_type: dict[EntityType, EntitySet]

    @classmethod
    def empty(cls, article_id: str, source: str) -> "ArticleAnnotation":
        return cls(article_id, source, empty_sets())

    def members(self, etype: EntityType) -> set[str]:
        return self.per_type[etype].members


@dataclass
class Article:
    """One news document. ``body`` is verbatim article text."""

    id: str
    date_raw: str
    title: str
    body: str
    date_iso: Optional[datetime.date] = None


def empty_sets() -> dict[EntityType, EntitySet]:
    return {t: EntitySet(t) for t in ENTITY_TYPES}


def _nfc(s: str) -> str:
    return unicodedata.normalize("NFC", s)


def _warn(warn: Optional[WarnFn], message: str) -> None:
    if warn is not None:
        warn(message)


def _records(stream: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (line_no, line) for content lines, skipping blanks and comments."""
    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if line_no == 1 and line.startswith("﻿"):
            raise ParseError(line_no, "file starts with a BOM")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield line_no, line


def _load_object(line_no: int, line: str) -> dict:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(line_no, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError(line_no, "record is not a JSON object")
    return obj


def _require_str(obj: dict, key: str, line_no: int) -> str:
    value = obj.get(key)
    if value is None:
        raise ParseError(line_no, f"missing field {key!r}")
    if not isinstance(value, str):
        raise ParseError(line_no, f"field {key!r} is not a string")
    return value


def parse_annotation_file(
    stream: Iterable[str],
    mode: str = "strict",
    warn: Optional[WarnFn] = None,
) -> Iterator[ArticleAnnotation]:
    """Parse an annotation file lazily, in file order.

    Entity text is NFC-normalized and trimmed, then deduplicated per type.
    In lenient mode entities with an unknown type label are dropped with a
    warning; in strict mode (the default) they are an error. Structural
    problems (bad JSON, missing fields, empty article_id, duplicate
    (article_id, source), empty or multi-line entity text) are errors in
    both modes.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"unknown parse mode {mode!r}")
    seen: set[tuple[str, str]] = set()
    for line_no, line in _records(stream):
        obj = _load_object(line_no, line)
        article_id = _nfc(_require_str(obj, "article_id", line_no))
        if not article_id.strip():
            raise ParseError(line_no, "empty article_id")
        source = _nfc(_require_str(obj, "source", line_no))
        if not source.strip():
            raise ParseError(line_no, "empty source")
        key = (article_id, source)
        if key in seen:
            raise ParseError(line_no, f"duplicate (article_id, source) {key!r}")
        seen.add(key)

        entities = obj.get("entities")
        if not isinstance(entities, list):
            raise ParseError(line_no, "missing or invalid 'entities' array")
        per_type = empty_sets()
        for ent in entities:
            if not isinstance(ent, dict):
                raise ParseError(line_no, "entity is not an object")
            label = _require_str(ent, "type", line_no)
            etype = _TYPE_BY_LABEL.get(label)
            if etype is None:
                if mode == "strict":
                    raise ParseError(line_no, f"unknown entity type {label!r}")
                _warn(warn, f"line {line_no}: dropped entity with unknown type {label!r}")
                continue
            text = _nfc(_require_str(ent, "text", line_no)).strip()
            if not text:
                raise ParseError(line_no, "empty entity text")
            if "\n" in text or "\r" in text:
                raise ParseError(line_no, "entity text contains a newline")
            per_type[etype].members.add(text)
        yield ArticleAnnotation(article_id, source, per_type)


def format_annotation(ann: ArticleAnnotation) -> str:
    """Serialize one annotation to its JSON line (no trailing newline).

    Entities are emitted sorted by (type, code-point order of text) so that
    output is deterministic.
    """
    entities = [
        {"type": etype.value, "text": text}
        for etype in ENTITY_TYPES
        for text in sorted(ann.per_type[etype].members)
    ]
    return json.dumps(
        {"article_id": ann.article_id, "source": ann.source, "entities": entities},
        ensure_ascii=False,
    )


def write_annotation_file(annotations: Iterable[ArticleAnnotation], fp) -> None:
    """Write annotations as one JSON line each; re-parses to an equal value."""
    for ann in annotations:
        fp.write(format_annotation(ann) + "\n")


def parse_corpus_file(stream: Iterable[str]) -> Iterator[Article]:
    """Parse a corpus file lazily. All fields are kept verbatim."""
    seen_ids: set[str] = set()
    for line_no, line in _records(stream):
        obj = _load_object(line_no, line)
        article_id = _require_str(obj, "id", line_no)
        if not article_id:
            raise ParseError(line_no, "empty article id")
        if article_id in seen_ids:
            raise ParseError(line_no, f"duplicate article id {article_id!r}")
        seen_ids.add(article_id)
        date_raw = _require_str(obj, "date", line_no)
        title = _require_str(obj, "title", line_no)
        body = _require_str(obj, "body", line_no)
        date_iso: Optional[datetime.date] = None
        if obj.get("date_iso") is not None:
            raw_iso = obj["date_iso"]
            if not isinstance(raw_iso, str):
                raise ParseError(line_no, "field 'date_iso' is not a string")
            try:
                date_iso = datetime.date.fromisoformat(raw_iso)
            except ValueError as exc:
                raise ParseError(line_no, f"invalid date_iso {raw_iso!r}") from exc
        yield Article(article_id, date_raw, title, body, date_iso)


def format_article(article: Article) -> str:
    obj: dict = {
        "id": article.id,
        "date": article.date_raw,
        "title": article.title,
        "body": article.body,
    }
    if article.date_iso is not None:
        obj["date_iso"] = article.date_iso.isoformat()
    return json.dumps(obj, ensure_ascii=False)


def write_corpus_file(articles: Iterable[Article], fp) -> None:
    for article in articles:
        fp.write(format_article(article) + "\n")


@dataclass(frozen=True)
class Violation:
    line: int
    code: str
    message: str

    def render(self) -> str:
        return f"{self.line}:{self.code}:{self.message}"


def validate(
    stream: Iterable[str],
    corpus: Optional[Iterable[Article]] = None,
) -> list[Violation]:
    """Lint an annotation file against the format invariants.

    Unlike the parser this never raises: every problem becomes a Violation.
    It runs on the raw lines, so pre-canonicalization defects the parser
    would silently repair (untrimmed text, duplicate members) are reported.
    When a corpus is given, annotation article_ids must resolve into it.
    An empty report means the file satisfies every invariant.
    """
    violations: list[Violation] = []
    corpus_ids = None if corpus is None else {_nfc(a.id) for a in corpus}
    seen: set[tuple[str, str]] = set()

    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if line_no == 1 and line.startswith("﻿"):
            violations.append(Violation(line_no, "bom", "file starts with a BOM"))
            line = line.lstrip("﻿")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            violations.append(Violation(line_no, "bad-json", exc.msg))
            continue
        if not isinstance(obj, dict):
            violations.append(Violation(line_no, "bad-record", "record is not a JSON object"))
            continue

        ok_structure = True
        for key in ("article_id", "source"):
            if not isinstance(obj.get(key), str):
                violations.append(Violation(line_no, "missing-field", f"missing or non-string {key!r}"))
                ok_structure = False
        if not isinstance(obj.get("entities"), list):
            violations.append(Violation(line_no, "missing-field", "missing or invalid 'entities' array"))
            ok_structure = False
        if not ok_structure:
            continue

        article_id = _nfc(obj["article_id"])
        if not article_id.strip():
            violations.append(Violation(line_no, "empty-article-id", "article_id is empty"))
        key = (article_id, _nfc(obj["source"]))
        if key in seen:
            violations.append(
                Violation(line_no, "duplicate-annotation", f"duplicate (article_id, source) {key!r}")
            )
        seen.add(key)
        if corpus_ids is not None and article_id.strip() and article_id not in corpus_ids:
            violations.append(
                Violation(line_no, "dangling-article-id", f"article_id {article_id!r} not in corpus")
            )

        members: set[tuple[str, str]] = set()
        for ent in obj["entities"]:
            if not isinstance(ent, dict) or not isinstance(ent.get("type"), str) or not isinstance(ent.get("text"), str):
                violations.append(Violation(line_no, "bad-entity", "entity is not a {type, text} object"))
                continue
            label, text = ent["type"], ent["text"]
            if label not in _TYPE_BY_LABEL:
                violations.append(Violation(line_no, "unknown-type", f"unknown entity type {label!r}"))
                continue
            if "\n" in text or "\r" in text:
                violations.append(Violation(line_no, "newline-in-text", f"entity text contains a newline"))
                continue
            if text != text.strip():
                violations.append(
                    Violation(line_no, "untrimmed-text", f"entity text {text!r} has surrounding whitespace")
                )
            if not text.strip():
                violations.append(Violation(line_no, "empty-text", "entity text is empty"))
                continue
            canon = (label, _nfc(text.strip()))
            if canon in members:
                violations.append(
                    Violation(line_no, "duplicate-member", f"duplicate {label} entity {text.strip()!r}")
                )
            members.add(canon)

    return violations


def render_report(violations: Iterable[Violation]) -> str:
    """Plain-text validation report, one `<line>:<code>:<message>` per line."""
    return "".join(v.render() + "\n" for v in violations)


def type_order(etype: EntityType) -> int:
    """Stable sort index of an entity type (PER < ORG < LOC)."""
    return _TYPE_ORDER[etype]
