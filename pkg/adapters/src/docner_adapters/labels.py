"""Label inventories for the supported NER backends.

Each backend tags tokens with its own label vocabulary; downstream we only
keep person / organization / location. A label map sends every documented
backend type to ``PER``/``ORG``/``LOC`` or to :data:`DROP`. Labels that show
up at runtime but are not in the map (a model update, a typo in a custom
checkpoint) are dropped with a warning rather than crashing the run.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional

PER = "PER"
ORG = "ORG"
LOC = "LOC"

#: Sentinel map target: the label is recognized but its entities are discarded.
DROP = "DROP"

#: Entity types that survive into the annotation output, in emission order.
KEPT_TYPES = (PER, ORG, LOC)

LabelMap = Mapping[str, str]
WarnFn = Callable[[str], None]

# Stanza's Arabic model and CAMeL Tools' tagger share the four-way
# PER/ORG/LOC/MISC inventory (modulo the B-/I-/E-/S- prefixes, which the
# decoder strips before lookup).
STANZA_LABELS: LabelMap = {
    "PER": PER,
    "ORG": ORG,
    "LOC": LOC,
    "MISC": DROP,
}

CAMEL_LABELS: LabelMap = {
    "PER": PER,
    "ORG": ORG,
    "LOC": LOC,
    "MISC": DROP,
}

# The Hatmi checkpoint distinguishes nine classes; only three are wanted.
HATMI_LABELS: LabelMap = {
    "person": PER,
    "organization": ORG,
    "location": LOC,
    "date": DROP,
    "product": DROP,
    "competition": DROP,
    "prize": DROP,
    "event": DROP,
    "disease": DROP,
}


def map_label(label_map: LabelMap, raw: str, warn: Optional[WarnFn] = None) -> str:
    """Resolve a backend type string to ``PER``/``ORG``/``LOC`` or ``DROP``.

    Lookup is tried verbatim first, then case-folded both ways, so a
    checkpoint that reports ``B-PERSON`` still lands on the ``person`` entry.
    Anything that cannot be resolved is dropped, with a warning if ``warn``
    is given.
    """
    for key in (raw, raw.lower(), raw.upper()):
        if key in label_map:
            return label_map[key]
    if warn is not None:
        warn(f"unknown label {raw!r} dropped")
    return DROP
