"""Input loading: candidate metadata (CSV), tweet archives (JSONL) and
assembly of one raw text corpus per candidate inside the campaign window.

Files replace live Twitter/election-site access on purpose: the input
contract is a documented CSV/JSONL schema, so runs are reproducible.
"""

from __future__ import annotations

import csv
import enum
import json
import logging
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from typing import Iterable, Iterator

from .errors import (
    DuplicateCandidate,
    EmptyWindow,
    MalformedLine,
    MalformedRow,
    MissingColumn,
    UnknownCandidate,
    WindowInverted,
)

log = logging.getLogger(__name__)

CANDIDATE_COLUMNS = (
    "candidate_id",
    "twitter_username",
    "party_name",
    "ideology_class",
    "department",
    "votes_received",
    "followers",
)


class Ideology(enum.Enum):
    """The three-way party classification used throughout the pipeline."""

    TRADITIONAL = "traditional"
    INDEPENDENT = "independent"
    ALLIANCE = "alliance"

    @classmethod
    def parse(cls, value: str) -> "Ideology":
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(
                f"ideology_class must be one of "
                f"{[m.value for m in cls]}, got {value!r}"
            ) from None


@dataclass(frozen=True)
class CandidateProfile:
    candidate_id: str
    twitter_username: str
    party_name: str
    ideology_class: Ideology
    department: str
    votes_received: int
    followers: int


class CandidateTable:
    """Candidate profiles keyed by unique candidate_id."""

    def __init__(self, profiles: Iterable[CandidateProfile]):
        self._by_id: dict[str, CandidateProfile] = {}
        for p in profiles:
            if p.candidate_id in self._by_id:
                raise DuplicateCandidate(p.candidate_id, row_no=-1)
            self._by_id[p.candidate_id] = p

    def __len__(self) -> int:
        return len(self._by_id)

    def __iter__(self) -> Iterator[CandidateProfile]:
        return iter(self._by_id.values())

    def __contains__(self, candidate_id: str) -> bool:
        return candidate_id in self._by_id

    def __getitem__(self, candidate_id: str) -> CandidateProfile:
        try:
            return self._by_id[candidate_id]
        except KeyError:
            raise UnknownCandidate(candidate_id) from None

    @property
    def ids(self) -> list[str]:
        return list(self._by_id)


@dataclass(frozen=True)
class RawTweet:
    candidate_id: str
    text: str
    retweet_count: int
    timestamp: datetime


@dataclass(frozen=True)
class CorpusSet:
    """Per-candidate concatenated tweet text plus activity tallies.

    Treated as immutable once built; safe to share across threads.
    """

    corpora: dict[str, str]
    tweet_counts: dict[str, int]
    retweet_totals: dict[str, int]
    dropped_candidates: tuple[str, ...] = field(default=())


def _non_negative_int(value, row_no: int, column: str) -> int:
    try:
        n = int(str(value).strip())
    except (TypeError, ValueError):
        raise MalformedRow(row_no, column, f"expected an integer, got {value!r}")
    if n < 0:
        raise MalformedRow(row_no, column, f"must be non-negative, got {n}")
    return n


def load_candidates(path) -> CandidateTable:
    """Parse the candidates CSV into a CandidateTable.

    The header must contain exactly the documented columns; rows with a
    repeated candidate_id, an unknown ideology value or negative counts
    are rejected with the offending row and column named.
    """
    profiles: list[CandidateProfile] = []
    seen: dict[str, int] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in CANDIDATE_COLUMNS:
            if col not in header:
                raise MissingColumn(col)
        for row_no, row in enumerate(reader, start=2):
            cid = (row.get("candidate_id") or "").strip()
            if not cid:
                raise MalformedRow(row_no, "candidate_id", "must be non-empty")
            if cid in seen:
                raise DuplicateCandidate(cid, row_no)
            seen[cid] = row_no
            try:
                ideology = Ideology.parse(row["ideology_class"] or "")
            except ValueError as exc:
                raise MalformedRow(row_no, "ideology_class", str(exc)) from None
            profiles.append(
                CandidateProfile(
                    candidate_id=cid,
                    twitter_username=(row["twitter_username"] or "").strip(),
                    party_name=(row["party_name"] or "").strip(),
                    ideology_class=ideology,
                    department=(row["department"] or "").strip(),
                    votes_received=_non_negative_int(
                        row["votes_received"], row_no, "votes_received"),
                    followers=_non_negative_int(
                        row["followers"], row_no, "followers"),
                )
            )
    return CandidateTable(profiles)


def _parse_timestamp(value: str, line_no: int) -> datetime:
    # RFC 3339; a trailing Z is normalized for fromisoformat, and naive
    # stamps are taken as UTC.
    try:
        ts = datetime.fromisoformat(str(value).replace("Z", "+00:00"))
    except (TypeError, ValueError):
        raise MalformedLine(line_no, f"bad timestamp {value!r}")
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def load_tweets(path, candidates: CandidateTable | None = None,
                strict: bool = False) -> list[RawTweet]:
    """Parse a JSONL tweet archive, one object per line, in file order.

    Any unparseable line fails the load with its line number. With
    strict=True, tweets from candidates missing from the table are also
    an error instead of being left for the assembly stage to skip.
    """
    tweets: list[RawTweet] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedLine(line_no, f"invalid JSON ({exc.msg})") from None
            if not isinstance(obj, dict):
                raise MalformedLine(line_no, "expected a JSON object")
            missing = [k for k in ("candidate_id", "text", "retweet_count",
                                   "timestamp") if k not in obj]
            if missing:
                raise MalformedLine(line_no, f"missing fields {missing}")
            text = str(obj["text"])
            if not text.strip():
                raise MalformedLine(line_no, "text is empty")
            rt = obj["retweet_count"]
            if not isinstance(rt, int) or isinstance(rt, bool) or rt < 0:
                raise MalformedLine(
                    line_no, f"retweet_count must be a non-negative integer, "
                             f"got {rt!r}")
            cid = str(obj["candidate_id"])
            if strict and candidates is not None and cid not in candidates:
                raise UnknownCandidate(cid, context=f"tweets line {line_no}")
            tweets.append(
                RawTweet(
                    candidate_id=cid,
                    text=text,
                    retweet_count=rt,
                    timestamp=_parse_timestamp(obj["timestamp"], line_no),
                )
            )
    if not tweets:
        log.warning("tweet archive %s contained no tweets", path)
    return tweets


def assemble_corpora(tweets: Iterable[RawTweet], candidates: CandidateTable,
                     window: tuple[date, date]) -> CorpusSet:
    """Concatenate each candidate's in-window tweets into one corpus.

    Tweet texts are joined with single newlines in input order; tweet and
    retweet tallies accumulate alongside. Candidates with no in-window
    tweet are dropped (and logged), never given an empty corpus.
    """
    start, end = window
    if start > end:
        raise WindowInverted(start, end)

    texts: dict[str, list[str]] = {}
    counts: dict[str, int] = {}
    retweets: dict[str, int] = {}
    skipped_unknown = 0
    for tweet in tweets:
        if tweet.candidate_id not in candidates:
            skipped_unknown += 1
            continue
        day = tweet.timestamp.astimezone(timezone.utc).date()
        if not start <= day <= end:
            continue
        cid = tweet.candidate_id
        texts.setdefault(cid, []).append(tweet.text)
        counts[cid] = counts.get(cid, 0) + 1
        retweets[cid] = retweets.get(cid, 0) + tweet.retweet_count

    if skipped_unknown:
        log.warning("skipped %d tweets from candidates not in the table",
                    skipped_unknown)
    if not texts:
        raise EmptyWindow(start, end)

    dropped = tuple(cid for cid in candidates.ids if cid not in texts)
    if dropped:
        log.warning("dropping %d candidates with no tweet in window: %s",
                    len(dropped), ", ".join(dropped))

    return CorpusSet(
        corpora={cid: "\n".join(parts) for cid, parts in texts.items()},
        tweet_counts=counts,
        retweet_totals=retweets,
        dropped_candidates=dropped,
    )
