"""Stanza wrapper (Arabic NER pipeline).

Deliberately import-light: ``stanza`` is only imported inside
:func:`load_tagger`, so this module is importable — and the rest of the
package testable — on machines without the backend installed.
"""

from __future__ import annotations

from .labels import STANZA_LABELS

BACKEND_ID = "stanza"
LABELS = STANZA_LABELS
DEFAULT_MODEL = "ar"


def load_tagger(model=None, batch_size=None):
    """Build a callable ``text -> list of tagged sentences``.

    Each sentence is a list of ``(token, tag)`` pairs; Stanza emits BIOES
    tags (``S-LOC``, ``B-PER`` …) which the shared decoder understands.
    """
    import stanza

    kwargs = {}
    if batch_size:
        kwargs["ner_batch_size"] = batch_size
    pipe = stanza.Pipeline(
        lang=model or DEFAULT_MODEL,
        processors="tokenize,ner",
        verbose=False,
        **kwargs,
    )

    def tag(text):
        doc = pipe(text)
        return [
            [(token.text, token.ner) for token in sentence.tokens]
            for sentence in doc.sentences
        ]

    return tag


def model_pin(model=None):
    import stanza

    return f"stanza-{stanza.__version__}/{model or DEFAULT_MODEL}"
