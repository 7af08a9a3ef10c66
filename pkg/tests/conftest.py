"""Shared fixture builders.

The evaluation fixtures are reverse-derived: for each prediction source and
entity type a (tp, predicted_total) pair is fixed, gold entities are laid
out deterministically over 30 articles, the first tp gold entities of each
type are copied into the prediction, and the remaining predicted slots are
filled with source-specific spurious strings. Scoring such a file must then
reproduce the frozen precision/recall/F1 expectations exactly.
"""

from __future__ import annotations

import json
import random

# --- gold layout -----------------------------------------------------------

GOLD_TOTALS = {"PER": 54, "ORG": 64, "LOC": 88}
N_ARTICLES = 30
ARTICLE_IDS = tuple(f"a{i:02d}" for i in range(N_ARTICLES))
TYPES = ("PER", "ORG", "LOC")

# (tp, predicted_total) per source and type.
TOOL_COUNTS = {
    "stanza": {"PER": (35, 54), "ORG": (10, 36), "LOC": (40, 101)},
    "camel": {"PER": (5, 6), "ORG": (7, 22), "LOC": (16, 38)},
    "hatmi": {"PER": (33, 46), "ORG": (18, 68), "LOC": (33, 66)},
}
ENSEMBLE_COUNTS = {
    "merge": {"PER": (44, 76), "ORG": (31, 117), "LOC": (48, 134)},
    "vote:2": {"PER": (27, 28), "ORG": (4, 9), "LOC": (29, 50)},
}

# Frozen published scores: (scope, source) -> (precision, recall, f1).
TOOL_SCORES = {
    ("PER", "stanza"): (0.648148, 0.648148, 0.648148),
    ("PER", "camel"): (0.833333, 0.092593, 0.166667),
    ("PER", "hatmi"): (0.717391, 0.611111, 0.66),
    ("ORG", "stanza"): (0.277778, 0.15625, 0.2),
    ("ORG", "camel"): (0.318182, 0.109375, 0.162791),
    ("ORG", "hatmi"): (0.264706, 0.28125, 0.272727),
    ("LOC", "stanza"): (0.39604, 0.454545, 0.42328),
    ("LOC", "camel"): (0.421053, 0.181818, 0.253968),
    ("LOC", "hatmi"): (0.5, 0.375, 0.428571),
    ("ALL", "stanza"): (0.445026, 0.412621, 0.428212),
    ("ALL", "camel"): (0.424242, 0.135922, 0.205882),
    ("ALL", "hatmi"): (0.466667, 0.407767, 0.435233),
}
ENSEMBLE_SCORES = {
    ("PER", "merge"): (0.578947, 0.814815, 0.676923),
    ("PER", "vote:2"): (0.964286, 0.5, 0.658537),
    ("ORG", "merge"): (0.264957, 0.484375, 0.342541),
    ("ORG", "vote:2"): (0.444444, 0.0625, 0.109589),
    ("LOC", "merge"): (0.358209, 0.545455, 0.432432),
    ("LOC", "vote:2"): (0.58, 0.329545, 0.42029),
    ("ALL", "merge"): (0.376147, 0.597087, 0.461538),
    ("ALL", "vote:2"): (0.689655, 0.291262, 0.409556),
}


def gold_layout() -> dict[str, list[tuple[str, str]]]:
    """type -> [(article_id, entity_text)] in a fixed order."""
    return {
        t: [(ARTICLE_IDS[j % N_ARTICLES], f"{t.lower()}-{j:03d}") for j in range(total)]
        for t, total in GOLD_TOTALS.items()
    }


def _annotation_line(article_id: str, source: str, ents: list[tuple[str, str]]) -> str:
    return json.dumps(
        {
            "article_id": article_id,
            "source": source,
            "entities": [{"type": t, "text": x} for t, x in ents],
        },
        ensure_ascii=False,
    )


def gold_lines() -> list[str]:
    layout = gold_layout()
    per_article: dict[str, list[tuple[str, str]]] = {aid: [] for aid in ARTICLE_IDS}
    for t in TYPES:
        for aid, text in layout[t]:
            per_article[aid].append((t, text))
    return [_annotation_line(aid, "gold", per_article[aid]) for aid in ARTICLE_IDS]


def prediction_lines(source: str, counts: dict[str, tuple[int, int]]) -> list[str]:
    """One annotation line per article realizing the (tp, pred) counts."""
    layout = gold_layout()
    per_article: dict[str, list[tuple[str, str]]] = {aid: [] for aid in ARTICLE_IDS}
    for t in TYPES:
        tp, pred = counts[t]
        for aid, text in layout[t][:tp]:
            per_article[aid].append((t, text))
        for i in range(pred - tp):
            aid = ARTICLE_IDS[i % N_ARTICLES]
            per_article[aid].append((t, f"{source.replace(':', '-')}-fp-{t.lower()}-{i:03d}"))
    return [_annotation_line(aid, source, per_article[aid]) for aid in ARTICLE_IDS]


# --- worked three-tool example (one article, known merge/vote outcome) ------

WE_PER = "عمر بن محمد الفريح"
WE_ORG = "فيسبوك"
WE_LOC_COMMON = ("نيويورك", "ويست فيرجينيا", "الولايات المتحدة", "كاليفورنيا")
WE_LOC_STANZA_ONLY = ("كورونا المستجدة", "جامعة جونز هوبكنز")

WORKED_EXAMPLE = {
    "camel": {"PER": {WE_PER}, "ORG": {WE_ORG}, "LOC": set(WE_LOC_COMMON)},
    "stanza": {"PER": {WE_PER}, "ORG": set(), "LOC": set(WE_LOC_COMMON) | set(WE_LOC_STANZA_ONLY)},
    "hatmi": {"PER": {WE_PER}, "ORG": set(), "LOC": set(WE_LOC_COMMON)},
}
WORKED_MERGE = {
    "PER": {WE_PER},
    "ORG": {WE_ORG},
    "LOC": set(WE_LOC_COMMON) | set(WE_LOC_STANZA_ONLY),
}
WORKED_VOTE = {"PER": {WE_PER}, "ORG": set(), "LOC": set(WE_LOC_COMMON)}


def worked_example_lines(tool: str, article_id: str = "w1") -> list[str]:
    sets = WORKED_EXAMPLE[tool]
    ents = [(t, x) for t in TYPES for x in sorted(sets[t])]
    return [_annotation_line(article_id, tool, ents)]


# --- randomized generators ---------------------------------------------------

def random_sets(rng: random.Random, max_entities: int = 8, pool: int = 12) -> dict[str, set[str]]:
    return {
        t: {f"e{rng.randrange(pool)}" for _ in range(rng.randint(0, max_entities))}
        for t in TYPES
    }


def random_annotation_line(rng: random.Random, article_id: str, source: str) -> str:
    sets = random_sets(rng)
    ents = [(t, x) for t in TYPES for x in sorted(sets[t])]
    return _annotation_line(article_id, source, ents)


def corpus_line(article_id: str, date: str, title: str, body: str) -> str:
    return json.dumps(
        {"id": article_id, "date": date, "title": title, "body": body}, ensure_ascii=False
    )


# --- acceptance report lines --------------------------------------------------

def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_"):
        name = name[len("test_"):]
    print(f"\nACCEPTANCE {name}: {'PASS' if report.passed else 'FAIL'}")
