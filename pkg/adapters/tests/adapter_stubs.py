"""Deterministic fake taggers and a 5-article sample corpus.

The stubs speak each backend's real tag scheme (BIOES for stanza, BIO for
camel, lowercase prefixed classes for hatmi) so the runner and decoder are
exercised exactly as the live wrappers would, minus the model. Article n05
is intentionally absent from every script: the stub raises on it, standing
in for a backend crash.
"""

import json

SAMPLE_ARTICLES = [
    {"id": "n01", "date": "2020-04-21", "title": "عمر في نيويورك",
     "body": "درس عمر بن محمد في جامعة كولومبيا."},
    {"id": "n02", "date": "22/04/2020", "title": "منظمة الصحة العالمية",
     "body": "أعلنت منظمة الصحة العالمية عن تقرير جديد."},
    {"id": "n03", "date": "23/04/2020", "title": "أخبار متفرقة",
     "body": "انطلق كأس العالم في قطر خلال شهر رمضان."},
    {"id": "n04", "date": "24/04/2020", "title": "حالة الطقس",
     "body": "أمطار في الرياض وجدة."},
    {"id": "n05", "date": "25/04/2020", "title": "عطل تقني",
     "body": "توقفت الخدمة لساعات."},
]

ARTICLE_TEXTS = {a["id"]: a["title"] + "\n" + a["body"] for a in SAMPLE_ARTICLES}


def write_sample_corpus(path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for article in SAMPLE_ARTICLES:
            fh.write(json.dumps(article, ensure_ascii=False) + "\n")
    return path


# n01: multi-token spans; n02: same ORG twice (dedup); n03: droppable labels;
# n04: inside-without-begin healing, an untrimmed token, an unknown label.
STANZA_SCRIPT = {
    ARTICLE_TEXTS["n01"]: [
        [("درس", "O"), ("عمر", "B-PER"), ("بن", "I-PER"), ("محمد", "E-PER"),
         ("في", "O"), ("جامعة", "B-ORG"), ("كولومبيا", "E-ORG")],
        [("نيويورك", "S-LOC")],
    ],
    ARTICLE_TEXTS["n02"]: [
        [("أعلنت", "O"), ("منظمة", "B-ORG"), ("الصحة", "I-ORG"),
         ("العالمية", "E-ORG")],
        [("وأكدت", "O"), ("منظمة", "B-ORG"), ("الصحة", "I-ORG"),
         ("العالمية", "E-ORG")],
    ],
    ARTICLE_TEXTS["n03"]: [
        [("انطلق", "O"), ("كأس", "B-MISC"), ("العالم", "E-MISC"),
         ("في", "O"), ("قطر", "S-LOC")],
    ],
    ARTICLE_TEXTS["n04"]: [
        [("أمطار", "O"), ("الرياض", "I-LOC")],
        [(" جدة ", "B-LOC"), ("غدا", "B-WEIRD")],
    ],
}

CAMEL_SCRIPT = {
    ARTICLE_TEXTS["n01"]: [
        [("عمر", "B-PER"), ("بن", "I-PER"), ("محمد", "I-PER"),
         ("في", "O"), ("نيويورك", "B-LOC")],
        [("جامعة", "B-ORG"), ("كولومبيا", "I-ORG")],
    ],
    ARTICLE_TEXTS["n02"]: [
        [("منظمة", "B-ORG"), ("الصحة", "I-ORG"), ("العالمية", "I-ORG")],
        [("منظمة", "B-ORG"), ("الصحة", "I-ORG"), ("العالمية", "I-ORG")],
    ],
    ARTICLE_TEXTS["n03"]: [
        [("رمضان", "B-MISC"), ("في", "O"), ("قطر", "B-LOC")],
    ],
    ARTICLE_TEXTS["n04"]: [
        [("أمطار", "O"), ("الرياض", "I-LOC")],
        [(" جدة ", "B-LOC"), ("غدا", "B-WEIRD")],
    ],
}

HATMI_SCRIPT = {
    ARTICLE_TEXTS["n01"]: [
        [("عمر", "B-person"), ("بن", "I-person"), ("محمد", "I-person"),
         ("نيويورك", "B-location")],
        [("جامعة", "B-organization"), ("كولومبيا", "I-organization")],
    ],
    ARTICLE_TEXTS["n02"]: [
        [("منظمة", "B-organization"), ("الصحة", "I-organization"),
         ("العالمية", "I-organization")],
        [("منظمة", "B-organization"), ("الصحة", "I-organization"),
         ("العالمية", "I-organization")],
    ],
    ARTICLE_TEXTS["n03"]: [
        [("كوفيد-19", "B-disease"), ("21", "B-date"), ("أبريل", "I-date"),
         ("قطر", "B-location")],
    ],
    ARTICLE_TEXTS["n04"]: [
        [("أمطار", "O"), ("الرياض", "I-location")],
        [(" جدة ", "B-location"), ("غدا", "B-weird")],
    ],
}

SCRIPTS = {"stanza": STANZA_SCRIPT, "camel": CAMEL_SCRIPT, "hatmi": HATMI_SCRIPT}

# Surface strings that exist only under dropped labels; they must never
# appear in any adapter output.
DROPPED_SURFACES = {
    "stanza": {"كأس العالم"},
    "camel": {"رمضان"},
    "hatmi": {"كوفيد-19", "21 أبريل"},
}

# What every backend's run over the sample must produce, article by article.
EXPECTED_SETS = {
    "stanza": {
        "n01": {"PER": {"عمر بن محمد"}, "ORG": {"جامعة كولومبيا"},
                "LOC": {"نيويورك"}},
        "n02": {"PER": set(), "ORG": {"منظمة الصحة العالمية"}, "LOC": set()},
        "n03": {"PER": set(), "ORG": set(), "LOC": {"قطر"}},
        "n04": {"PER": set(), "ORG": set(), "LOC": {"الرياض", "جدة"}},
        "n05": {"PER": set(), "ORG": set(), "LOC": set()},
    },
    "camel": {
        "n01": {"PER": {"عمر بن محمد"}, "ORG": {"جامعة كولومبيا"},
                "LOC": {"نيويورك"}},
        "n02": {"PER": set(), "ORG": {"منظمة الصحة العالمية"}, "LOC": set()},
        "n03": {"PER": set(), "ORG": set(), "LOC": {"قطر"}},
        "n04": {"PER": set(), "ORG": set(), "LOC": {"الرياض", "جدة"}},
        "n05": {"PER": set(), "ORG": set(), "LOC": set()},
    },
    "hatmi": {
        "n01": {"PER": {"عمر بن محمد"}, "ORG": {"جامعة كولومبيا"},
                "LOC": {"نيويورك"}},
        "n02": {"PER": set(), "ORG": {"منظمة الصحة العالمية"}, "LOC": set()},
        "n03": {"PER": set(), "ORG": set(), "LOC": {"قطر"}},
        "n04": {"PER": set(), "ORG": set(), "LOC": {"الرياض", "جدة"}},
        "n05": {"PER": set(), "ORG": set(), "LOC": set()},
    },
}


def scripted_tagger(script):
    """A tagger that replays a fixed script and crashes on unseen text."""

    def tag(text):
        if text not in script:
            raise RuntimeError("model crashed")
        return script[text]

    return tag


def make_stub(backend_id):
    return scripted_tagger(SCRIPTS[backend_id])
