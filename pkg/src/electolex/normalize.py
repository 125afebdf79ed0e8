"""Text normalization: cleaning, tokenization, stemming, stop-word removal.

Raw tweet corpora arrive with HTML remnants, URLs, @mentions, #hashtags,
punctuation and digits. Cleaning strips all of that while preserving the
accented vowels and ñ that Spanish stemming depends on. Stemming runs
before stop-word removal, so the stop list itself is kept in stemmed form.
"""

from __future__ import annotations

import importlib.resources
import logging
import re
from dataclasses import dataclass

from .errors import EmptyDocument
from .ingest import CorpusSet
from .stemmer import stem

log = logging.getLogger(__name__)

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_TAG_RE = re.compile(r"<[^>]*>")
_ENTITY_RE = re.compile(r"&#?\w+;")
_MENTION_HASHTAG_RE = re.compile(r"[@#]\S+")

# Whitelist of characters that may survive cleaning, besides whitespace.
_KEEP = frozenset("abcdefghijklmnopqrstuvwxyzáéíóúüñ")
_DIGITS = frozenset("0123456789")


def clean_text(raw: str) -> str:
    """Strip markup and symbols, returning lowercase Spanish letters only.

    HTML tags and entities, URLs and whole @mention/#hashtag tokens are
    removed; punctuation and any other symbol becomes a space; digits are
    dropped. Accented vowels, ü and ñ survive in lowercase. Idempotent.
    """
    text = _URL_RE.sub(" ", raw)
    text = _TAG_RE.sub(" ", text)
    text = _ENTITY_RE.sub(" ", text)
    text = _MENTION_HASHTAG_RE.sub(" ", text)
    text = text.lower()
    out = []
    for ch in text:
        if ch in _KEEP or ch.isspace():
            out.append(ch)
        elif ch not in _DIGITS:
            out.append(" ")
    return "".join(out).strip()


def tokenize(cleaned: str, min_len: int = 2) -> list[str]:
    """Split cleaned text on whitespace, dropping tokens shorter than min_len."""
    return [tok for tok in cleaned.split() if len(tok) >= min_len]


@dataclass(frozen=True)
class StopWordSet:
    """A stop-word list together with its image under the stemmer.

    Matching happens on stemmed forms because documents are stemmed before
    stop words are removed.
    """

    raw_words: frozenset[str]
    stemmed_forms: frozenset[str]

    @classmethod
    def from_words(cls, words) -> "StopWordSet":
        raw = frozenset(w.strip().lower() for w in words if w.strip())
        return cls(raw_words=raw, stemmed_forms=frozenset(stem(w) for w in raw))

    @classmethod
    def from_file(cls, path) -> "StopWordSet":
        """Load a UTF-8 stop-word file: one word per line, '#' comments."""
        words = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    words.append(line)
        return cls.from_words(words)

    @classmethod
    def bundled_spanish(cls) -> "StopWordSet":
        """The Spanish stop-word list shipped with the package."""
        ref = importlib.resources.files("electolex.data") / "stopwords_es.txt"
        words = [
            line.strip()
            for line in ref.read_text(encoding="utf-8").splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
        return cls.from_words(words)


def remove_stopwords(stems: list[str], stop: StopWordSet) -> list[str]:
    """Drop stems whose form is in the stop set, preserving order."""
    kept = [s for s in stems if s not in stop.stemmed_forms]
    if stems and not kept:
        log.warning("document emptied entirely by stop-word removal")
    return kept


@dataclass(frozen=True)
class TokenDocument:
    """One candidate's stemmed, stop-word-filtered token stream.

    original_token_count is the token count after cleaning and length
    filtering but before stemming and stop-word removal.
    """

    candidate_id: str
    stems: tuple[str, ...]
    original_token_count: int


def normalize_document(candidate_id: str, raw_text: str, stop: StopWordSet,
                       min_token_len: int = 2) -> TokenDocument:
    """Run clean -> tokenize -> stem -> stop-removal for one candidate."""
    tokens = tokenize(clean_text(raw_text), min_len=min_token_len)
    stems = [stem(tok) for tok in tokens]
    kept = remove_stopwords(stems, stop)
    if not kept:
        raise EmptyDocument(candidate_id)
    return TokenDocument(
        candidate_id=candidate_id,
        stems=tuple(kept),
        original_token_count=len(tokens),
    )


def normalize_corpus(corpus_set: CorpusSet, stop: StopWordSet,
                     min_token_len: int = 2) -> list[TokenDocument]:
    """Normalize every candidate corpus, ordered by candidate id."""
    docs = []
    for cid in sorted(corpus_set.corpora):
        docs.append(
            normalize_document(cid, corpus_set.corpora[cid], stop,
                               min_token_len=min_token_len)
        )
    return docs
