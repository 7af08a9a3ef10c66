"""Document-level evaluation of predicted entity sets against gold.

Counts are taken at the article level: a gold entity is a true positive
when the prediction set of the same article and same type contains it
(under the configured equality), a false negative otherwise; predicted
entities outside the gold set are false positives. Types are independent
namespaces, so a correct string under the wrong type scores as both an FN
and an FP.

    precision = TP / (TP + FP)
    recall    = TP / (TP + FN)
    f1        = 2 * (recall * precision) / (recall + precision)

The ALL row micro-pools: TP/FP/FN are summed over the three types first,
then the ratios are computed. A zero denominator yields 0.0 with the metric
name recorded in ``MetricsRow.undefined``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .interchange import (
    ENTITY_TYPES,
    ArticleAnnotation,
    DataError,
    EntitySet,
    WarnFn,
    _warn,
)
from .normalize import EXACT, NormalizationConfig, canonicalize

ALL_SCOPE = "ALL"
SCOPES = tuple(t.value for t in ENTITY_TYPES) + (ALL_SCOPE,)


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    fn: int

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)


ZERO = ConfusionCounts(0, 0, 0)


@dataclass(frozen=True)
class MetricsRow:
    scope: str  # "PER" | "ORG" | "LOC" | "ALL"
    source: str
    counts: ConfusionCounts
    precision: float
    recall: float
    f1: float
    undefined: frozenset[str] = frozenset()


def confusion(
    gold: EntitySet,
    pred: EntitySet,
    equality: NormalizationConfig = EXACT,
) -> ConfusionCounts:
    """TP/FP/FN between two same-type sets under canonical equality."""
    if gold.type != pred.type:
        raise DataError(f"type mismatch: gold {gold.type.value}, pred {pred.type.value}")
    g = {canonicalize(m, equality) for m in gold.members}
    p = {canonicalize(m, equality) for m in pred.members}
    return ConfusionCounts(tp=len(g & p), fp=len(p - g), fn=len(g - p))


def metrics_row(scope: str, source: str, counts: ConfusionCounts) -> MetricsRow:
    """Compute P/R/F1 from counts, flagging zero-denominator conventions."""
    undefined = set()
    if counts.tp + counts.fp > 0:
        precision = counts.tp / (counts.tp + counts.fp)
    else:
        precision = 0.0
        undefined.add("precision")
    if counts.tp + counts.fn > 0:
        recall = counts.tp / (counts.tp + counts.fn)
    else:
        recall = 0.0
        undefined.add("recall")
    if precision + recall > 0:
        f1 = 2 * (recall * precision) / (recall + precision)
    else:
        f1 = 0.0
        undefined.add("f1")
    return MetricsRow(scope, source, counts, precision, recall, f1, frozenset(undefined))


def evaluate(
    gold: Iterable[ArticleAnnotation],
    predictions: Iterable[ArticleAnnotation],
    equality: NormalizationConfig = EXACT,
    warn: Optional[WarnFn] = None,
) -> list[MetricsRow]:
    """Score every prediction source against gold, article by article.

    Returns four rows (PER, ORG, LOC, ALL) per source, sources in first
    appearance order. A predicted article absent from gold scores against
    empty gold sets (all FP, with a warning); a gold article with no
    prediction scores all FN. An empty gold input is an error.
    """
    gold_by_id: dict[str, ArticleAnnotation] = {}
    for ann in gold:
        if ann.article_id in gold_by_id:
            raise DataError(f"multiple gold annotations for article {ann.article_id!r}")
        gold_by_id[ann.article_id] = ann
    if not gold_by_id:
        raise DataError("gold input contains no annotations")

    by_source: dict[str, dict[str, ArticleAnnotation]] = {}
    for ann in predictions:
        per_article = by_source.setdefault(ann.source, {})
        if ann.article_id in per_article:
            raise DataError(
                f"duplicate (article_id, source) ({ann.article_id!r}, {ann.source!r}) across inputs"
            )
        per_article[ann.article_id] = ann

    rows: list[MetricsRow] = []
    for source, per_article in by_source.items():
        unknown = sorted(set(per_article) - set(gold_by_id))
        for article_id in unknown:
            _warn(
                warn,
                f"source {source!r}: article {article_id!r} has no gold annotation; "
                "its entities count as false positives",
            )
        totals = {t: ZERO for t in ENTITY_TYPES}
        for article_id in set(gold_by_id) | set(per_article):
            gold_ann = gold_by_id.get(article_id)
            pred_ann = per_article.get(article_id)
            for t in ENTITY_TYPES:
                g = gold_ann.per_type[t] if gold_ann is not None else EntitySet(t)
                p = pred_ann.per_type[t] if pred_ann is not None else EntitySet(t)
                totals[t] = totals[t] + confusion(g, p, equality)
        for t in ENTITY_TYPES:
            rows.append(metrics_row(t.value, source, totals[t]))
        pooled = totals[ENTITY_TYPES[0]] + totals[ENTITY_TYPES[1]] + totals[ENTITY_TYPES[2]]
        rows.append(metrics_row(ALL_SCOPE, source, pooled))
    return rows


def render_csv(rows: Iterable[MetricsRow], precision: int = 6) -> str:
    """CSV report: scope,source,tp,fp,fn,precision,recall,f1."""
    lines = ["scope,source,tp,fp,fn,precision,recall,f1"]
    for r in rows:
        lines.append(
            f"{r.scope},{r.source},{r.counts.tp},{r.counts.fp},{r.counts.fn},"
            f"{r.precision:.{precision}f},{r.recall:.{precision}f},{r.f1:.{precision}f}"
        )
    return "\n".join(lines) + "\n"


def render_table(rows: Iterable[MetricsRow], precision: int = 6) -> str:
    """Aligned plain-text report with the same columns as the CSV."""
    header = ["scope", "source", "tp", "fp", "fn", "precision", "recall", "f1"]
    body = [
        [
            r.scope,
            r.source,
            str(r.counts.tp),
            str(r.counts.fp),
            str(r.counts.fn),
            f"{r.precision:.{precision}f}",
            f"{r.recall:.{precision}f}",
            f"{r.f1:.{precision}f}",
        ]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    out = []
    for row in [header] + body:
        cells = [row[0].ljust(widths[0]), row[1].ljust(widths[1])]
        cells += [row[i].rjust(widths[i]) for i in range(2, len(header))]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"
