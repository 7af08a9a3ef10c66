"""The output contract every adapter must honor, driven by stub taggers.

Outputs must validate strictly under the docner CLI (invoked as a
subprocess — the format is the only coupling), drop every non-PER/ORG/LOC
label, contain no per-article duplicates, and be byte-stable across runs.
"""

import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

import docner_adapters
from docner_adapters import run_backend
from adapter_stubs import (
    DROPPED_SURFACES,
    EXPECTED_SETS,
    SAMPLE_ARTICLES,
    make_stub,
    write_sample_corpus,
)

BACKEND_IDS = ("stanza", "camel", "hatmi")


def run_stubbed(tmp_path, backend_id, name="out.jsonl"):
    corpus = write_sample_corpus(tmp_path / "sample.jsonl")
    out = tmp_path / name
    warnings = []
    count = run_backend(
        corpus,
        backend_id,
        out,
        tagger=make_stub(backend_id),
        model_pin="stub-1.0",
        warn=warnings.append,
    )
    return corpus, out, count, warnings


def read_annotations(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    return lines[0], [json.loads(line) for line in lines[1:]]


@pytest.mark.parametrize("backend_id", BACKEND_IDS)
def test_output_validates_strictly_under_docner(tmp_path, backend_id):
    corpus, out, count, _ = run_stubbed(tmp_path, backend_id)
    assert count == len(SAMPLE_ARTICLES)
    proc = subprocess.run(
        [sys.executable, "-m", "docner", "validate", str(out), "--corpus", str(corpus)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr


@pytest.mark.parametrize("backend_id", BACKEND_IDS)
def test_dropped_labels_never_surface(tmp_path, backend_id):
    _, out, _, _ = run_stubbed(tmp_path, backend_id)
    _, records = read_annotations(out)
    texts = {e["text"] for r in records for e in r["entities"]}
    assert texts.isdisjoint(DROPPED_SURFACES[backend_id])
    types = {e["type"] for r in records for e in r["entities"]}
    assert types <= {"PER", "ORG", "LOC"}


@pytest.mark.parametrize("backend_id", BACKEND_IDS)
def test_no_per_article_duplicates(tmp_path, backend_id):
    _, out, _, _ = run_stubbed(tmp_path, backend_id)
    _, records = read_annotations(out)
    for record in records:
        pairs = [(e["type"], e["text"]) for e in record["entities"]]
        assert len(pairs) == len(set(pairs)), record["article_id"]


@pytest.mark.parametrize("backend_id", BACKEND_IDS)
def test_two_runs_are_byte_identical(tmp_path, backend_id):
    _, first, _, _ = run_stubbed(tmp_path, backend_id, "run1.jsonl")
    _, second, _, _ = run_stubbed(tmp_path, backend_id, "run2.jsonl")
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.parametrize("backend_id", BACKEND_IDS)
def test_expected_entity_sets_per_article(tmp_path, backend_id):
    _, out, _, _ = run_stubbed(tmp_path, backend_id)
    _, records = read_annotations(out)
    assert [r["article_id"] for r in records] == [a["id"] for a in SAMPLE_ARTICLES]
    for record in records:
        assert record["source"] == backend_id
        got = {t: set() for t in ("PER", "ORG", "LOC")}
        for entity in record["entities"]:
            got[entity["type"]].add(entity["text"])
        assert got == EXPECTED_SETS[backend_id][record["article_id"]]


@pytest.mark.parametrize("backend_id", BACKEND_IDS)
def test_meta_line_pins_backend_and_model(tmp_path, backend_id):
    _, out, _, _ = run_stubbed(tmp_path, backend_id)
    meta, _ = read_annotations(out)
    assert meta == (
        f"# meta: backend={backend_id} model=stub-1.0 format=docner-annotation-1"
    )


@pytest.mark.parametrize("backend_id", BACKEND_IDS)
def test_degradations_warn_but_never_abort(tmp_path, backend_id):
    _, _, count, warnings = run_stubbed(tmp_path, backend_id)
    assert count == len(SAMPLE_ARTICLES)
    joined = "\n".join(warnings)
    assert "without a matching begin" in joined   # healed I- tag in n04
    assert "unknown label" in joined              # B-WEIRD in n04
    assert "failed" in joined and "'n05'" in joined  # crash on n05


def test_package_never_imports_docner():
    root = Path(docner_adapters.__file__).parent
    pattern = re.compile(r"^\s*(?:import|from)\s+docner\b(?!_adapters)", re.M)
    for source in sorted(root.rglob("*.py")):
        assert not pattern.search(source.read_text(encoding="utf-8")), source
