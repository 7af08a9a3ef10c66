"""Wrapper for the Hatmi Arabic-BERT NER checkpoint on HuggingFace.

The token-classification pipeline is run without aggregation so the shared
decoder owns all span logic; the only model-specific fixup here is gluing
WordPiece continuations (``##...``) back onto their head token, keeping the
head token's label.
"""

from __future__ import annotations

from .labels import HATMI_LABELS

BACKEND_ID = "hatmi"
LABELS = HATMI_LABELS
DEFAULT_MODEL = "hatmimoha/arabic-ner"


def load_tagger(model=None, batch_size=None):
    """Build a callable ``text -> list of tagged sentences``."""
    from transformers import (
        AutoModelForTokenClassification,
        AutoTokenizer,
        pipeline,
    )

    name = model or DEFAULT_MODEL
    pipe = pipeline(
        "token-classification",
        model=AutoModelForTokenClassification.from_pretrained(name),
        tokenizer=AutoTokenizer.from_pretrained(name),
        aggregation_strategy="none",
        batch_size=batch_size or 1,
    )

    def tag(text):
        out = []
        for line in text.splitlines():
            if not line.strip():
                continue
            pairs = []
            for hit in pipe(line):
                word = hit["word"]
                if word.startswith("##") and pairs:
                    prev_word, prev_label = pairs[-1]
                    pairs[-1] = (prev_word + word[2:], prev_label)
                else:
                    pairs.append((word, hit["entity"]))
            out.append(pairs)
        return out

    return tag


def model_pin(model=None):
    import transformers

    return f"transformers-{transformers.__version__}/{model or DEFAULT_MODEL}"
