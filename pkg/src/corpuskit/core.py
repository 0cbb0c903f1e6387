"""Shared text model: sentence records, whitespace tokenization, line normalization.

One "line" is one sentence. A token is a maximal run of non-whitespace
characters under the Unicode definition of whitespace; this is the unit every
downstream length/ratio heuristic counts. No Unicode normalization (NFC/NFD)
is ever applied: the tokenizer downstream is cased with full character
coverage, so altering codepoints would change its alphabet.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class CorpusError(Exception):
    """Base class for all toolkit errors."""


class EncodingError(CorpusError):
    """Invalid UTF-8 in an input corpus, with source and line context."""

    def __init__(self, source_id: str, line_no: int, detail: str = ""):
        self.source_id = source_id
        self.line_no = line_no
        msg = f"invalid UTF-8 in source '{source_id}' at line {line_no}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


@dataclass(frozen=True)
class SentenceRecord:
    """One corpus line plus provenance.

    text must hold no CR/LF (it is one physical line, already normalized);
    line_no is the 1-based position within the origin file.
    """

    text: str
    source_id: str
    line_no: int

    def __post_init__(self):
        if "\n" in self.text or "\r" in self.text:
            raise ValueError(f"record text contains a line terminator: {self.text!r}")
        if self.line_no < 1:
            raise ValueError(f"line_no must be >= 1, got {self.line_no}")


class RejectReason(enum.Enum):
    NON_LATIN = "NonLatin"
    LENGTH = "Length"
    PUNCT_RUN = "PunctRun"
    AVG_WORD_LEN = "AvgWordLen"
    HTML = "Html"
    NONE = "None"


@dataclass(frozen=True)
class FilterVerdict:
    """Outcome of a quality filter: passed is true iff reason is NONE."""

    passed: bool
    reason: RejectReason

    def __post_init__(self):
        if self.passed != (self.reason is RejectReason.NONE):
            raise ValueError(f"inconsistent verdict: passed={self.passed}, reason={self.reason}")

    @classmethod
    def ok(cls) -> "FilterVerdict":
        return cls(True, RejectReason.NONE)

    @classmethod
    def reject(cls, reason: RejectReason) -> "FilterVerdict":
        if reason is RejectReason.NONE:
            raise ValueError("a rejection needs a real reason")
        return cls(False, reason)


PASS = FilterVerdict.ok()


def tokenize_ws(text: str) -> list[str]:
    """Split on maximal runs of Unicode whitespace. Tokens are never empty."""
    return text.split()


def normalize_line(raw: str) -> str:
    """Strip the trailing terminator and surrounding whitespace, nothing else.

    Idempotent; preserves every interior codepoint exactly (no case folding,
    no NFC/NFD).
    """
    return raw.strip()


def decode_line(raw: bytes, source_id: str, line_no: int) -> str:
    """Decode one physical line, mapping bad bytes to EncodingError with context."""
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise EncodingError(source_id, line_no, str(e)) from None
