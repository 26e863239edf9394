"""Corpus analysis of manuscripts with peer-review outcomes.

The heavy lifting lives in the compiled extension; this package re-exports
the operations most useful from python.
"""

from peerlens._core import (
    ReferenceRecord,
    TfIdf,
    classify_origin,
    corpus_summary,
    count_syllables,
    coupling,
    cross_validate,
    eta_squared,
    fre,
    group_references,
    indel_distance,
    jargon_ratio,
    keyword_importance,
    lexical_stats,
    match_references,
    mean_sem,
    ndc,
    pearson,
    porter_stem,
    split_sentences,
    token_set_ratio,
    tokenize,
    welch_t,
)

__all__ = [
    "ReferenceRecord",
    "TfIdf",
    "classify_origin",
    "corpus_summary",
    "count_syllables",
    "coupling",
    "cross_validate",
    "eta_squared",
    "fre",
    "group_references",
    "indel_distance",
    "jargon_ratio",
    "keyword_importance",
    "lexical_stats",
    "match_references",
    "mean_sem",
    "ndc",
    "pearson",
    "porter_stem",
    "split_sentences",
    "token_set_ratio",
    "tokenize",
    "welch_t",
]

__version__ = "0.1.0"
