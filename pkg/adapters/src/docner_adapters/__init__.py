"""Backend runners that turn a news corpus into docner annotation files.

Each adapter is a standalone batch script (``adapter-stanza``,
``adapter-camel``, ``adapter-hatmi``) wrapping one Arabic NER backend. The
coupling to docner is a file format, nothing more: this package never
imports it.
"""

from .decode import Mention, decode_spans
from .labels import (
    CAMEL_LABELS,
    DROP,
    HATMI_LABELS,
    KEPT_TYPES,
    STANZA_LABELS,
    map_label,
)
from .runner import BACKENDS, CorpusError, read_corpus, run_backend

__version__ = "0.1.0"

__all__ = [
    "BACKENDS",
    "CAMEL_LABELS",
    "CorpusError",
    "DROP",
    "HATMI_LABELS",
    "KEPT_TYPES",
    "Mention",
    "STANZA_LABELS",
    "decode_spans",
    "map_label",
    "read_corpus",
    "run_backend",
    "__version__",
]
