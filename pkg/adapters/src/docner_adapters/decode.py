"""Turn token-level tag sequences into surface-string entity mentions.

Backends emit one label per token (``B-PER``, ``I-LOC``, ``O``, …); the
annotation format wants whole strings like ``ويست فيرجينيا``. This module
walks a tagged token sequence and joins maximal contiguous runs of the same
mapped type with single spaces.

Understood schemes:

- BIO and BIOES prefixes (``B-``, ``I-``, ``E-``, ``S-``) plus ``O``.
- Bare labels with no prefix (some HuggingFace checkpoints emit just
  ``person``): adjacent equal types are treated as one run.

Malformed input never raises. An inside/end tag with no open run of that
type starts a fresh run and emits a warning; labels that map to
:data:`~docner_adapters.labels.DROP` end the current run and contribute
nothing.
"""

from __future__ import annotations

from typing import Iterable, List, NamedTuple, Optional, Tuple

from .labels import DROP, LabelMap, WarnFn, map_label

_PREFIXES = frozenset("BIES")


class Mention(NamedTuple):
    """One decoded entity: a kept type and its space-joined surface string."""

    type: str
    text: str


def _split_tag(tag: str) -> Tuple[Optional[str], str]:
    """``'B-PER'`` → ``('B', 'PER')``; ``'person'`` → ``(None, 'person')``."""
    head, sep, rest = tag.partition("-")
    if sep and rest and head.upper() in _PREFIXES:
        return head.upper(), rest
    return None, tag


def decode_spans(
    tagged_tokens: Iterable[Tuple[str, str]],
    label_map: LabelMap,
    warn: Optional[WarnFn] = None,
) -> List[Mention]:
    """Decode one (token, tag) sequence into mentions, document order.

    Duplicates are preserved; deduplication is the runner's job, after
    whitespace cleanup.
    """
    mentions: List[Mention] = []
    run_type: Optional[str] = None
    run_tokens: List[str] = []
    unknown_warned = set()

    def unknown_warn(msg: str) -> None:
        if warn is not None and msg not in unknown_warned:
            unknown_warned.add(msg)
            warn(msg)

    def close() -> None:
        nonlocal run_type, run_tokens
        if run_type is not None and run_tokens:
            mentions.append(Mention(run_type, " ".join(run_tokens)))
        run_type = None
        run_tokens = []

    for token, tag in tagged_tokens:
        token = token.strip()
        if tag == "O" or tag == "o" or not tag:
            close()
            continue
        prefix, raw = _split_tag(tag)
        mapped = map_label(label_map, raw, unknown_warn)
        if mapped == DROP:
            close()
            continue

        if prefix == "B":
            close()
            run_type = mapped
        elif prefix == "S":
            close()
            if token:
                mentions.append(Mention(mapped, token))
            continue
        elif prefix in ("I", "E") and run_type != mapped:
            if warn is not None:
                warn(f"tag {tag!r} without a matching begin; starting a new span")
            close()
            run_type = mapped
        elif prefix is None and run_type != mapped:
            # bare-label scheme: a type change simply starts the next run
            close()
            run_type = mapped

        if token:
            run_tokens.append(token)
        if prefix == "E":
            close()

    close()
    return mentions
