"""Document-level NER ensembles, evaluation, and corpus analytics.

The package works on article-level entity *sets* rather than token spans:
each annotation source contributes, per article, a deduplicated set of
surface strings per entity type (PER, ORG, LOC). Sets from several tools
can be merged (union) or voted (k-of-n agreement), any source can be scored
against gold with document-level precision/recall/F1, and corpora can be
filtered, dated, and ranked by entity article frequency.
"""

from .corpus import (
    DEFAULT_COVID_KEYWORDS,
    DEFAULT_DATE_FORMATS,
    FrequencyTable,
    KeywordList,
    article_histogram,
    entity_article_frequency,
    filter_by_keywords,
    top_k,
    unify_corpus_dates,
    unify_date,
)
from .ensemble import EnsembleConfig, combine_article, combine_corpus, merge_article, vote_article
from .interchange import (
    Article,
    ArticleAnnotation,
    DataError,
    EntityMention,
    EntitySet,
    EntityType,
    ParseError,
    Violation,
    parse_annotation_file,
    parse_corpus_file,
    validate,
    write_annotation_file,
    write_corpus_file,
)
from .metrics import ConfusionCounts, MetricsRow, confusion, evaluate
from .normalize import EXACT, NormalizationConfig, canonicalize, dedup

__version__ = "0.1.0"

__all__ = [
    "Article",
    "ArticleAnnotation",
    "ConfusionCounts",
    "DEFAULT_COVID_KEYWORDS",
    "DEFAULT_DATE_FORMATS",
    "DataError",
    "EXACT",
    "EnsembleConfig",
    "EntityMention",
    "EntitySet",
    "EntityType",
    "FrequencyTable",
    "KeywordList",
    "MetricsRow",
    "NormalizationConfig",
    "ParseError",
    "Violation",
    "article_histogram",
    "canonicalize",
    "combine_article",
    "combine_corpus",
    "confusion",
    "dedup",
    "entity_article_frequency",
    "evaluate",
    "filter_by_keywords",
    "merge_article",
    "parse_annotation_file",
    "parse_corpus_file",
    "top_k",
    "unify_corpus_dates",
    "unify_date",
    "validate",
    "vote_article",
    "write_annotation_file",
    "write_corpus_file",
]
