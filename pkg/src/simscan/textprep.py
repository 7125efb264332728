"""Deterministic text preprocessing.

Normalization, sentence segmentation, whitespace tokenization, stopword
removal and stemming: the front end every comparison scheme shares.  All
functions are pure; `Document` and `Sentence` are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .porter import stem

__all__ = [
    "Document",
    "Sentence",
    "Preprocessor",
    "load_stopwords",
    "normalize",
    "remove_stopwords",
    "split_sentences",
    "stem",
    "tokenize",
]


def normalize(text: str) -> str:
    """Lowercase, strip punctuation, collapse whitespace runs to one space.

    Every character that is not alphanumeric becomes a space, so punctuation
    separates words rather than gluing them together.  Digits are kept.
    Idempotent: normalizing normalized text is a no-op.
    """
    cleaned = "".join(ch if ch.isalnum() else " " for ch in text.lower())
    return " ".join(cleaned.split())


def tokenize(sentence_text: str) -> list[str]:
    """Split normalized text on whitespace."""
    return sentence_text.split()


def remove_stopwords(
    tokens: Iterable[str], stopwords: frozenset[str] | None = None
) -> list[str]:
    """Drop stopword tokens, preserving the order of the survivors."""
    if stopwords is None:
        stopwords = load_stopwords()
    return [t for t in tokens if t not in stopwords]


@dataclass(frozen=True)
class Sentence:
    """One segmented sentence with its token views.

    `tokens` are the normalized words in order; `content_tokens` are the
    stemmed non-stopword tokens, used only by keyword extraction.
    """

    index: int
    text: str
    tokens: tuple[str, ...]
    content_tokens: tuple[str, ...]

    @property
    def normalized(self) -> str:
        return " ".join(self.tokens)


@dataclass(frozen=True)
class Document:
    """A preprocessed document: id, raw text, sentences, normalized text."""

    id: str
    raw_text: str
    normalized_text: str
    sentences: tuple[Sentence, ...]

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(t for s in self.sentences for t in s.tokens)

    @property
    def content_tokens(self) -> tuple[str, ...]:
        return tuple(t for s in self.sentences for t in s.content_tokens)


def _segment(text: str) -> list[str]:
    """Cut raw text after '.', '!' or '?' followed by whitespace or EOF."""
    segments = []
    start = 0
    n = len(text)
    for i, ch in enumerate(text):
        if ch in ".!?" and (i + 1 == n or text[i + 1].isspace()):
            segments.append(text[start : i + 1])
            start = i + 1
    if start < n:
        segments.append(text[start:])
    return [s.strip() for s in segments if s.strip()]


def split_sentences(
    text: str, stopwords: frozenset[str] | None = None
) -> list[Sentence]:
    """Segment text into `Sentence` objects with dense indices from 0.

    Text without any terminal punctuation yields a single sentence; empty
    text yields none.  Segments without a single word (all punctuation)
    are dropped, so a document has sentences exactly when it has tokens.
    """
    if stopwords is None:
        stopwords = load_stopwords()
    sentences: list[Sentence] = []
    for raw in _segment(text):
        tokens = tuple(tokenize(normalize(raw)))
        if not tokens:
            continue
        content = tuple(stem(t) for t in tokens if t not in stopwords)
        sentences.append(
            Sentence(
                index=len(sentences), text=raw, tokens=tokens, content_tokens=content
            )
        )
    return sentences


class Preprocessor:
    """Builds `Document` objects against one fixed stopword list."""

    def __init__(self, stopwords: frozenset[str] | None = None):
        self.stopwords = stopwords if stopwords is not None else load_stopwords()

    def document(self, doc_id: str, raw_text: str) -> Document:
        return Document(
            id=doc_id,
            raw_text=raw_text,
            normalized_text=normalize(raw_text),
            sentences=tuple(split_sentences(raw_text, self.stopwords)),
        )


def _parse_word_list(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        word = line.strip()
        if word and not word.startswith("#"):
            words.add(word.lower())
    return frozenset(words)


@cache
def _default_stopwords() -> frozenset[str]:
    data = resources.files("simscan.data").joinpath("stopwords.txt")
    return _parse_word_list(data.read_text(encoding="utf-8"))


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Load a stopword list: one lowercase word per line, '#' comments.

    With no path, returns the list shipped with the package.
    """
    if path is None:
        return _default_stopwords()
    return _parse_word_list(Path(path).read_text(encoding="utf-8"))
