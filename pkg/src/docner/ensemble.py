"""Merge and vote combination of per-tool article annotations.

Merge takes, per article and per entity type, the union of every tool's
set, keeping each entity once. Vote keeps an entity only when at least
``threshold_k`` distinct tools list it under the same type; agreement never
crosses types, and a tool counts at most once per entity no matter how its
output was produced. Both generalize to any number of tools; the reference
configuration is three tools with k=2.

A tool with no output for an article counts as "did not identify anything"
(three empty sets) and is reported through the warning callback rather than
failing the run — corpus-scale combination must tolerate per-article tool
failures.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .interchange import (
    ENTITY_TYPES,
    ArticleAnnotation,
    DataError,
    EntitySet,
    WarnFn,
    _warn,
)
from .normalize import EXACT, NormalizationConfig, canonicalize

MERGE_SOURCE = "merge"


@dataclass
class EnsembleConfig:
    mode: str
    tool_sources: Sequence[str]
    threshold_k: int = 2
    equality: NormalizationConfig = field(default_factory=NormalizationConfig)

    def __post_init__(self) -> None:
        if self.mode not in ("merge", "vote"):
            raise ValueError(f"unknown ensemble mode {self.mode!r}")
        self.tool_sources = tuple(self.tool_sources)
        if not self.tool_sources:
            raise ValueError("tool_sources must name at least one tool")
        if len(set(self.tool_sources)) != len(self.tool_sources):
            raise ValueError("tool_sources must be distinct")
        if self.mode == "vote" and not 1 <= self.threshold_k <= len(self.tool_sources):
            raise ValueError(
                f"threshold_k={self.threshold_k} outside 1..{len(self.tool_sources)}"
            )

    @property
    def output_source(self) -> str:
        return MERGE_SOURCE if self.mode == "merge" else f"vote:{self.threshold_k}"


def _canonical_sets(
    per_tool: Mapping[str, ArticleAnnotation],
    cfg: EnsembleConfig,
    warn: Optional[WarnFn],
) -> tuple[str, list[dict]]:
    """Per tool, per type, the set of canonical members; validates ids."""
    if not per_tool:
        raise DataError("no annotations to combine")
    article_ids = {ann.article_id for ann in per_tool.values()}
    if len(article_ids) > 1:
        raise DataError(f"mismatched article_ids in one combination: {sorted(article_ids)}")
    article_id = next(iter(article_ids))
    tool_sets = []
    for source in cfg.tool_sources:
        ann = per_tool.get(source)
        if ann is None:
            _warn(warn, f"article {article_id!r}: no output from tool {source!r}, treated as empty")
            tool_sets.append({t: set() for t in ENTITY_TYPES})
        else:
            tool_sets.append(
                {
                    t: {canonicalize(m, cfg.equality) for m in ann.members(t)}
                    for t in ENTITY_TYPES
                }
            )
    return article_id, tool_sets


def merge_article(
    per_tool: Mapping[str, ArticleAnnotation],
    cfg: EnsembleConfig,
    warn: Optional[WarnFn] = None,
) -> ArticleAnnotation:
    """Union of all tools' sets per type, each entity captured once."""
    article_id, tool_sets = _canonical_sets(per_tool, cfg, warn)
    per_type = {
        t: EntitySet(t, set().union(*(sets[t] for sets in tool_sets)))
        for t in ENTITY_TYPES
    }
    return ArticleAnnotation(article_id, MERGE_SOURCE, per_type)


def vote_article(
    per_tool: Mapping[str, ArticleAnnotation],
    cfg: EnsembleConfig,
    warn: Optional[WarnFn] = None,
) -> ArticleAnnotation:
    """Keep an entity iff >= threshold_k distinct tools list it, same type."""
    article_id, tool_sets = _canonical_sets(per_tool, cfg, warn)
    per_type = {}
    for t in ENTITY_TYPES:
        counts: Counter[str] = Counter()
        for sets in tool_sets:
            counts.update(sets[t])
        per_type[t] = EntitySet(
            t, {entity for entity, n in counts.items() if n >= cfg.threshold_k}
        )
    return ArticleAnnotation(article_id, f"vote:{cfg.threshold_k}", per_type)


def combine_article(
    per_tool: Mapping[str, ArticleAnnotation],
    cfg: EnsembleConfig,
    warn: Optional[WarnFn] = None,
) -> ArticleAnnotation:
    if cfg.mode == "merge":
        return merge_article(per_tool, cfg, warn)
    return vote_article(per_tool, cfg, warn)


def combine_corpus(
    annotation_sets: Iterable[Iterable[ArticleAnnotation]],
    cfg: EnsembleConfig,
    warn: Optional[WarnFn] = None,
) -> list[ArticleAnnotation]:
    """Combine per-tool annotation files over the union of their article ids.

    Takes one parsed annotation sequence per input file, pools them by
    (article_id, source), and combines each article under ``cfg``. Sources
    not named in ``cfg.tool_sources`` are ignored with a warning; the same
    (article_id, source) appearing twice across the pool is an error. The
    result is sorted by article_id.
    """
    listed = set(cfg.tool_sources)
    pooled: dict[str, dict[str, ArticleAnnotation]] = {}
    ignored: set[str] = set()
    for annotations in annotation_sets:
        for ann in annotations:
            if ann.source not in listed:
                if ann.source not in ignored:
                    ignored.add(ann.source)
                    _warn(warn, f"ignoring annotations from unlisted source {ann.source!r}")
                continue
            by_tool = pooled.setdefault(ann.article_id, {})
            if ann.source in by_tool:
                raise DataError(
                    f"duplicate (article_id, source) ({ann.article_id!r}, {ann.source!r}) across inputs"
                )
            by_tool[ann.source] = ann
    return [combine_article(pooled[aid], cfg, warn) for aid in sorted(pooled)]
