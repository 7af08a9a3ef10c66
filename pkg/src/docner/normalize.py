"""The string-equality relation used for dedup, ensemble agreement and
metric matching.

Two modes. ``exact`` (the default) compares NFC-normalized, trimmed surface
forms and changes nothing else — tables computed under it keep orthographic
variants like "منظمة الصحة العالمية" and "لمنظمة الصحة العالمية" (with the
attached preposition ل) as distinct entities. ``normalized`` is an opt-in
mitigation for exactly those variants:

* ``strip_clitics`` — drop leading letters from {و ف ل ب ك} while at least
  two characters would remain, repeated to a fixed point. Iterating is
  deliberate: names that genuinely begin with one of those letters (فيسبوك,
  كورونا) would otherwise canonicalize differently bare than with an
  attached preposition, and the variants would fail to collapse. The cost
  is an over-stripped canonical key (كورونا becomes رونا); keys are for
  equality, not display.
* ``unify_alef`` — map أ إ آ to bare ا.
* ``strip_tatweel`` — remove the elongation character ـ (U+0640).

Matching of transliterated foreign names, "بن"/middle-name variation and
anything requiring morphological analysis is out of scope.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Iterable

from .interchange import EntityMention, EntitySet, EntityType, empty_sets

CLITICS = frozenset("وفلبك")
TATWEEL = "ـ"
_ALEF_MAP = str.maketrans({"أ": "ا", "إ": "ا", "آ": "ا"})


@dataclass(frozen=True)
class NormalizationConfig:
    mode: str = "exact"
    strip_clitics: bool = False
    unify_alef: bool = False
    strip_tatweel: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("exact", "normalized"):
            raise ValueError(f"unknown normalization mode {self.mode!r}")


EXACT = NormalizationConfig()


def canonicalize(text: str, cfg: NormalizationConfig = EXACT) -> str:
    """Return the canonical form of an entity surface string.

    Exact mode is NFC + trim only. Normalized mode additionally applies the
    enabled flags. Raises ValueError on input that is empty after trimming;
    the transforms themselves never empty a string (a removal that would is
    skipped).
    """
    s = unicodedata.normalize("NFC", text).strip()
    if not s:
        raise ValueError("entity text is empty after trimming")
    if cfg.mode == "exact":
        return s
    if cfg.strip_tatweel:
        stripped = s.replace(TATWEEL, "")
        if stripped:
            s = stripped
    if cfg.unify_alef:
        # translate + NFC to a fixpoint: NFC can recompose a bare alef with a
        # stray combining hamza back into أ, which must be unified again.
        while True:
            t = unicodedata.normalize("NFC", s.translate(_ALEF_MAP))
            if t == s:
                break
            s = t
    if cfg.strip_clitics:
        while len(s) >= 3 and s[0] in CLITICS:
            s = s[1:].lstrip()
    return unicodedata.normalize("NFC", s).strip()


def dedup(
    mentions: Iterable[EntityMention],
    cfg: NormalizationConfig = EXACT,
) -> dict[EntityType, EntitySet]:
    """Collapse mentions into per-type sets of canonical forms.

    Types are independent namespaces: the same surface string may survive in
    several types. The stored member is the canonical form under ``cfg``.
    """
    per_type = empty_sets()
    for mention in mentions:
        per_type[mention.type].members.add(canonicalize(mention.text, cfg))
    return per_type
