import json
import time

import pytest

from sgmm.errors import FixtureMismatch
from sgmm.fixtures import OPS, evaluate, load_corpus, run_fixtures


def test_corpus_shape():
    corpus = load_corpus()
    assert len(corpus) >= 20
    ids = [r["id"] for r in corpus]
    assert len(ids) == len(set(ids))
    for r in corpus:
        assert r["label"] and r["checks"]
        for c in r["checks"]:
            assert c["op"] in OPS


def test_corpus_reproduces():
    start = time.perf_counter()
    report = run_fixtures(strict=True)
    assert report.clean and report.instances_checked >= 100
    assert time.perf_counter() - start < 1.0


def test_mismatch_is_reported(tmp_path):
    record = {"id": "wrong", "label": "deliberately wrong", "ring": "3,4",
              "checks": [{"op": "mu", "args": ["dual:maximal"], "expected": 3},
                         {"op": "gens", "args": ["nonsense"], "expected": [0]}]}
    bad = evaluate(record)
    assert bad[0]["got"] == 2 and bad[1]["got"].startswith("error: ParseError")
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"fixtures": [record]}))
    assert len(run_fixtures(path).counterexamples) == 2
    with pytest.raises(FixtureMismatch, match="wrong: mu"):
        run_fixtures(path, strict=True)
