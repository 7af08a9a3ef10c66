"""Run one backend over a corpus file and emit an annotation file.

The output is the docner interchange format, produced here without importing
docner — the two packages share a file format, not code. Contract per
article: entities decoded, mapped to PER/ORG/LOC, whitespace-normalized,
deduplicated per type, and sorted (type order, then code point) so repeated
runs of a pinned model are byte-identical. The first output line is a
comment pinning the backend and model:

    # meta: backend=stanza model=stanza-1.8.2/ar format=docner-annotation-1

A backend crash on one article degrades to empty sets for that article plus
a warning; it never aborts the corpus run.
"""

from __future__ import annotations

import json
import sys
import unicodedata
from typing import Callable, List, Optional

from . import camel_backend, hatmi_backend, stanza_backend
from .decode import decode_spans
from .labels import KEPT_TYPES, LabelMap

BACKENDS = {
    module.BACKEND_ID: module
    for module in (stanza_backend, camel_backend, hatmi_backend)
}

FORMAT_TAG = "docner-annotation-1"

WarnFn = Callable[[str], None]


class CorpusError(Exception):
    """A corpus line that cannot be used; rendering cites the line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


def _stderr_warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def read_corpus(stream) -> List[dict]:
    """Parse corpus JSONL: skip blank/# lines, require id/title/body strings."""
    articles: List[dict] = []
    seen = set()
    for line_no, line in enumerate(stream, 1):
        if line_no == 1 and line.startswith("﻿"):
            raise CorpusError(1, "byte order mark not allowed")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            record = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise CorpusError(line_no, f"invalid JSON: {exc.msg}") from exc
        if not isinstance(record, dict):
            raise CorpusError(line_no, "expected a JSON object")
        for name in ("id", "title", "body"):
            if name not in record:
                raise CorpusError(line_no, f"missing field {name!r}")
            if not isinstance(record[name], str):
                raise CorpusError(line_no, f"field {name!r} must be a string")
        if not record["id"]:
            raise CorpusError(line_no, "empty article id")
        if record["id"] in seen:
            raise CorpusError(line_no, f"duplicate article id {record['id']!r}")
        seen.add(record["id"])
        articles.append(record)
    return articles


def _clean(text: str) -> str:
    # NFC plus whitespace collapse: guarantees trimmed, single-spaced,
    # newline-free entity strings, which is what strict validation expects.
    return " ".join(unicodedata.normalize("NFC", text).split())


def run_backend(
    corpus_path,
    backend_id: str,
    out_path,
    *,
    model: Optional[str] = None,
    tagger=None,
    label_map: Optional[LabelMap] = None,
    model_pin: Optional[str] = None,
    batch_size: Optional[int] = None,
    warn: Optional[WarnFn] = None,
) -> int:
    """Tag every corpus article and write one annotation line per article.

    ``tagger``, ``label_map`` and ``model_pin`` are injection seams (tests
    use deterministic fakes); left unset, they come from the backend module.
    Returns the number of articles written.
    """
    if backend_id not in BACKENDS:
        raise ValueError(f"unknown backend {backend_id!r}")
    backend = BACKENDS[backend_id]
    emit = warn if warn is not None else _stderr_warn

    with open(corpus_path, encoding="utf-8") as stream:
        articles = read_corpus(stream)

    # Corpus problems surface above, before the (slow) model load.
    if label_map is None:
        label_map = backend.LABELS
    if tagger is None:
        tagger = backend.load_tagger(model=model, batch_size=batch_size)
        if model_pin is None:
            model_pin = backend.model_pin(model)
    if model_pin is None:
        model_pin = "unspecified"

    with open(out_path, "w", encoding="utf-8", newline="\n") as out:
        out.write(
            f"# meta: backend={backend_id} model={model_pin} format={FORMAT_TAG}\n"
        )
        for article in articles:
            article_id = article["id"]

            def article_warn(message: str, _id=article_id) -> None:
                emit(f"article {_id!r}: {message}")

            text = article["title"] + "\n" + article["body"]
            try:
                sentences = tagger(text)
            except Exception as exc:  # noqa: BLE001 — degrade, never abort
                article_warn(f"{backend_id} failed ({exc}); emitting empty sets")
                sentences = []

            per_type = {etype: set() for etype in KEPT_TYPES}
            for sentence in sentences:
                for mention in decode_spans(sentence, label_map, warn=article_warn):
                    cleaned = _clean(mention.text)
                    if cleaned:
                        per_type[mention.type].add(cleaned)

            entities = [
                {"type": etype, "text": surface}
                for etype in KEPT_TYPES
                for surface in sorted(per_type[etype])
            ]
            record = {
                "article_id": article_id,
                "source": backend_id,
                "entities": entities,
            }
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
    return len(articles)
