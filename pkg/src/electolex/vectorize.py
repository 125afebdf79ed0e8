"""Vocabulary, sparse term-document counts and TF-IDF document vectors.

Each candidate document becomes one column: entry (t, i) holds the raw
frequency of stem t in document i, and the weighted matrix rescales it by
the log inverse document frequency, so stems occurring in every document
carry weight zero.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .errors import NoTerms, UnknownTerm
from .normalize import TokenDocument


@dataclass(frozen=True)
class Vocabulary:
    """Lexicographically sorted stems with their column/dimension ids."""

    terms: tuple[str, ...]
    index: dict[str, int]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class TermDocumentMatrix:
    """Sparse stem-by-document raw counts; stored entries are positive."""

    counts: sp.csc_matrix
    doc_ids: tuple[str, ...]
    vocab: Vocabulary

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)


@dataclass(frozen=True)
class WeightedMatrix:
    """TF-IDF weights with the same shape and ordering as the counts."""

    weights: sp.csc_matrix
    doc_ids: tuple[str, ...]
    vocab: Vocabulary

    def column(self, i: int) -> sp.csc_matrix:
        return self.weights[:, i]


@dataclass(frozen=True)
class FrequencyTable:
    """(stem, document frequency) rows, most widespread stems first."""

    rows: tuple[tuple[str, int], ...]

    def write_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["stem", "doc_freq"])
            writer.writerows(self.rows)


def build_vocabulary(docs: Sequence[TokenDocument]) -> Vocabulary:
    """Sorted union of all stems across documents."""
    terms = sorted({s for doc in docs for s in doc.stems})
    if not terms:
        raise NoTerms()
    return Vocabulary(terms=tuple(terms),
                      index={t: i for i, t in enumerate(terms)})


def term_document_matrix(docs: Sequence[TokenDocument],
                         vocab: Vocabulary) -> TermDocumentMatrix:
    """Count stem multiplicities per document into a sparse matrix."""
    rows, cols, data = [], [], []
    for j, doc in enumerate(docs):
        tally: dict[int, int] = {}
        for s in doc.stems:
            t = vocab.index.get(s)
            if t is None:
                raise UnknownTerm(s)
            tally[t] = tally.get(t, 0) + 1
        for t, c in sorted(tally.items()):
            rows.append(t)
            cols.append(j)
            data.append(c)
    counts = sp.csc_matrix(
        (data, (rows, cols)), shape=(len(vocab), len(docs)), dtype=np.int64
    )
    return TermDocumentMatrix(
        counts=counts, doc_ids=tuple(d.candidate_id for d in docs), vocab=vocab
    )


def document_frequencies(tdm: TermDocumentMatrix) -> np.ndarray:
    """Number of documents containing each term (per-row nonzero count)."""
    return np.diff(tdm.counts.tocsr().indptr)


def tfidf_weight(tdm: TermDocumentMatrix,
                 log_base: float | None = None) -> WeightedMatrix:
    """Weight raw counts by log(n_docs / doc_freq).

    The natural logarithm is the default; any other base rescales every
    weight by the same positive constant, which leaves all downstream rank
    and F statistics untouched. Entries that become exactly zero (terms
    present in every document) are dropped from storage.
    """
    df = document_frequencies(tdm)
    n = tdm.n_docs
    idf = np.zeros(len(tdm.vocab))
    present = df > 0
    idf[present] = np.log(n / df[present])
    if log_base is not None:
        idf /= math.log(log_base)
    weights = tdm.counts.astype(np.float64).copy()
    weights.data *= idf[weights.indices]
    weights.eliminate_zeros()
    return WeightedMatrix(weights=weights, doc_ids=tdm.doc_ids, vocab=tdm.vocab)


def l2_normalize(wm: WeightedMatrix) -> WeightedMatrix:
    """Scale each document column to unit Euclidean norm (zero stays zero)."""
    weights = wm.weights.copy()
    norms = np.sqrt(np.asarray(weights.multiply(weights).sum(axis=0)).ravel())
    for j in range(weights.shape[1]):
        lo, hi = weights.indptr[j], weights.indptr[j + 1]
        if norms[j] > 0:
            weights.data[lo:hi] /= norms[j]
    return WeightedMatrix(weights=weights, doc_ids=wm.doc_ids, vocab=wm.vocab)


def document_frequency_table(tdm: TermDocumentMatrix,
                             top_n: int = 30) -> FrequencyTable:
    """Top terms by document frequency; ties broken lexicographically."""
    if top_n < 1:
        raise ValueError(f"top_n must be >= 1, got {top_n}")
    df = document_frequencies(tdm)
    order = sorted(range(len(df)), key=lambda t: (-int(df[t]), tdm.vocab.terms[t]))
    rows = tuple(
        (tdm.vocab.terms[t], int(df[t])) for t in order[:top_n]
    )
    return FrequencyTable(rows=rows)


def write_weight_triplets(wm: WeightedMatrix, path) -> None:
    """Dump the weighted matrix as (term, doc_id, weight) CSV triplets."""
    coo = wm.weights.tocoo()
    order = np.lexsort((coo.row, coo.col))
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["term", "doc_id", "weight"])
        for k in order:
            writer.writerow([
                wm.vocab.terms[coo.row[k]],
                wm.doc_ids[coo.col[k]],
                repr(float(coo.data[k])),
            ])
