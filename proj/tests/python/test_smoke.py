"""Smoke tests for the python module against the build tree."""
import math
import os

import peerlens as pl


def approx(a, b, tol=1e-9):
    assert abs(a - b) < tol, f"{a} != {b}"


def test_textprep():
    assert pl.porter_stem("caresses") == "caress"
    assert pl.porter_stem("ponies") == "poni"
    assert pl.porter_stem("relational") == "relat"
    assert pl.count_syllables("window") == 2
    assert pl.count_syllables("make") == 1
    assert pl.tokenize("A cat, a CAT!") == ["cat", "cat"]
    assert pl.tokenize("the model", stopwords=["the"]) == ["model"]
    assert len(pl.split_sentences("Hi there. Bye now.")) == 2


def test_readability():
    approx(pl.fre("The cat sat. The dog ran."), 206.835 - 1.015 * 3 - 84.6)
    common = ["the", "cat", "sat", "dog", "ran", "mat", "hat", "bat", "rat",
              "pat"]
    approx(pl.ndc("the cat sat the dog ran the mat hat bat.", common), 0.496)
    approx(pl.jargon_ratio(["gradient", "descent", "cat"],
                           ["gradient", "descent"]), 2 / 3)


def test_refmatch():
    assert pl.token_set_ratio("J. Smith and A. Doe", "Smith, J., Doe, A.") >= 0.7
    assert pl.token_set_ratio("alpha", "zzz") < 0.5
    r1 = pl.ReferenceRecord(2015, ["J. Smith", "A. Doe"],
                            "Deep learning for parsing")
    r2 = pl.ReferenceRecord(2015, ["Smith, J.", "Doe, A."],
                            "Deep Learning for Parsing.")
    assert pl.match_references(r1, r2)
    r3 = pl.ReferenceRecord(2016, r2.authors, r2.title)
    assert not pl.match_references(r1, r3)
    groups = pl.group_references([r1, r2, r3])
    assert groups[0] == groups[1]
    assert groups[0] != groups[2]
    assert pl.coupling([1, 2, 3], [2, 3, 4]) == (2, 0.5)


def test_stats():
    mean, sem = pl.mean_sem([1, 2, 3])
    approx(mean, 2.0)
    approx(sem, 1 / math.sqrt(3))
    approx(pl.pearson([1, 2, 3, 4], [1, 3, 2, 4]), 0.8)
    approx(pl.eta_squared([[0, 1], [1, 2]]), 1 / 3, tol=1e-12)
    t, dof, p = pl.welch_t([1, 2, 3, 4], [3, 4, 5, 6])
    approx(t, -2.1908902300206647)
    approx(dof, 6.0)
    approx(p, 0.07098765432098765)


def test_tfidf():
    model = pl.TfIdf([["neural", "network"], ["neural", "logic"]])
    assert abs(model.cosine(["neural", "network"],
                            ["neural", "logic"]) - 0.3361) < 1e-4
    assert abs(model.cosine(["neural", "network"],
                            ["neural", "network"]) - 1.0) < 1e-12


def test_prediction():
    docs = []
    labels = []
    for cls in (0, 1):
        prefix = "acc" if cls else "rej"
        for d in range(20):
            docs.append([f"{prefix}{(d + k) % 17}" for k in range(8)])
            labels.append(cls)
    report = pl.cross_validate(docs, labels, k=5, seed=42)
    assert report["mean_macro_f1"] >= 0.95
    ranked = pl.keyword_importance(docs, labels)
    assert ranked[0]["importance"] > 0
    assert ranked[0]["stem"].startswith("acc")
    assert ranked[-1]["stem"].startswith("rej")


def test_corpus():
    root = os.environ.get("PEERLENS_REPO_ROOT")
    assert root, "PEERLENS_REPO_ROOT must point at the repository"
    rows = pl.corpus_summary(os.path.join(root, "fixtures", "mini30.jsonl"))
    assert sum(r["n_papers"] for r in rows) == 30
    assert pl.classify_origin(["alice@mit.edu", "bob@ens.fr"]) == "us"
    assert pl.classify_origin(["bob@ens.fr"]) == "non_us"


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
