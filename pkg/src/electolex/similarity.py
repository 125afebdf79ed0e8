"""Pairwise Euclidean distances between document vectors, labeled by the
ideology pair class of the two candidates (PP, II, AA, PI, PA, IA).

Distances only ever visit the union of nonzero coordinates: subtracting
two sparse columns keeps the computation on stored entries.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import DimensionMismatch, UnknownCandidate
from .ingest import CandidateProfile, CandidateTable, Ideology
from .vectorize import WeightedMatrix

_IDEOLOGY_LETTER = {
    Ideology.TRADITIONAL: "P",
    Ideology.INDEPENDENT: "I",
    Ideology.ALLIANCE: "A",
}
_LETTER_RANK = {"P": 0, "I": 1, "A": 2}


class PairClass(enum.Enum):
    PP = "PP"
    II = "II"
    AA = "AA"
    PI = "PI"
    PA = "PA"
    IA = "IA"


def classify_pair(ca: CandidateProfile, cb: CandidateProfile) -> PairClass:
    """Label a candidate pair by their ideology combination, order-free."""
    letters = sorted(
        (_IDEOLOGY_LETTER[ca.ideology_class], _IDEOLOGY_LETTER[cb.ideology_class]),
        key=_LETTER_RANK.__getitem__,
    )
    return PairClass("".join(letters))


def euclidean_distance(x, y) -> float:
    """Euclidean distance between two vectors (dense 1-D or sparse columns)."""
    if sp.issparse(x) or sp.issparse(y):
        x = sp.csc_matrix(x, dtype=np.float64)
        y = sp.csc_matrix(y, dtype=np.float64)
        if x.shape != y.shape:
            raise DimensionMismatch(x.shape[0], y.shape[0])
        diff = x - y
        return math.sqrt(float(diff.multiply(diff).sum()))
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise DimensionMismatch(x.shape[0], y.shape[0])
    return math.sqrt(float(((x - y) ** 2).sum()))


@dataclass(frozen=True)
class DistanceRecord:
    """One unordered candidate pair, canonically candidate_a < candidate_b."""

    candidate_a: str
    candidate_b: str
    distance: float
    pair_class: PairClass


def pairwise_distances(weights: WeightedMatrix,
                       candidates: CandidateTable) -> list[DistanceRecord]:
    """All C(n, 2) distance records, sorted by the canonical pair ids."""
    ids = weights.doc_ids
    profiles = [candidates[cid] for cid in ids]
    cols = [weights.weights.getcol(j) for j in range(len(ids))]
    records = []
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            id_a, id_b = ids[a], ids[b]
            col_a, col_b = cols[a], cols[b]
            if id_b < id_a:
                id_a, id_b = id_b, id_a
                col_a, col_b = col_b, col_a
            records.append(
                DistanceRecord(
                    candidate_a=id_a,
                    candidate_b=id_b,
                    distance=euclidean_distance(col_a, col_b),
                    pair_class=classify_pair(profiles[a], profiles[b]),
                )
            )
    records.sort(key=lambda r: (r.candidate_a, r.candidate_b))
    return records


def candidate_mean_distance(records: Iterable[DistanceRecord],
                            candidate_id: str) -> float:
    """Arithmetic mean of every distance involving the candidate."""
    involved = [r.distance for r in records
                if candidate_id in (r.candidate_a, r.candidate_b)]
    if not involved:
        raise UnknownCandidate(candidate_id, context="distance records")
    return sum(involved) / len(involved)


def mean_distances(records: Sequence[DistanceRecord]) -> dict[str, float]:
    """candidate_mean_distance for every candidate present in the records."""
    sums: dict[str, float] = {}
    counts: dict[str, int] = {}
    for r in records:
        for cid in (r.candidate_a, r.candidate_b):
            sums[cid] = sums.get(cid, 0.0) + r.distance
            counts[cid] = counts.get(cid, 0) + 1
    return {cid: sums[cid] / counts[cid] for cid in sums}


def distances_by_class(records: Iterable[DistanceRecord]) -> dict[PairClass, list[float]]:
    """Group distances into the six pair classes (present classes only)."""
    groups: dict[PairClass, list[float]] = {}
    for r in records:
        groups.setdefault(r.pair_class, []).append(r.distance)
    return groups


def write_distances_csv(records: Sequence[DistanceRecord], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["candidate_a", "candidate_b", "pair_class", "distance"])
        for r in records:
            writer.writerow([r.candidate_a, r.candidate_b,
                             r.pair_class.value, repr(r.distance)])
