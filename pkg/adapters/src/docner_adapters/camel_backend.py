"""CAMeL Tools wrapper.

The pretrained ``NERecognizer`` tags one pre-tokenized sentence at a time
with BIO labels over PER/ORG/LOC/MISC. It does not sentence-split, so the
input text is split on line breaks here; the runner pools the per-sentence
results back into one article-level set anyway.
"""

from __future__ import annotations

from .labels import CAMEL_LABELS

BACKEND_ID = "camel"
LABELS = CAMEL_LABELS
DEFAULT_MODEL = "arabert"


def load_tagger(model=None, batch_size=None):
    """Build a callable ``text -> list of tagged sentences``."""
    del batch_size  # the recognizer tags sentence-by-sentence
    from camel_tools.ner import NERecognizer
    from camel_tools.tokenizers.word import simple_word_tokenize

    ner = NERecognizer.pretrained(model) if model else NERecognizer.pretrained()

    def tag(text):
        out = []
        for line in text.splitlines():
            if not line.strip():
                continue
            tokens = simple_word_tokenize(line)
            labels = ner.predict_sentence(tokens)
            out.append(list(zip(tokens, labels)))
        return out

    return tag


def model_pin(model=None):
    import camel_tools

    return f"camel-tools-{camel_tools.__version__}/{model or DEFAULT_MODEL}"
