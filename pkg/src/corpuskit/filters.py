"""Line-quality filters for crawled and machine-aligned corpora.

Five heuristics, applied in a fixed order so per-reason statistics are
reproducible: script ratio, token count, punctuation runs, average word
length, HTML/URL residue. Each one is a pure function of (text, config);
only the first rejection reason is recorded by apply_filters.
"""

from __future__ import annotations

import bisect
import functools
import unicodedata
from dataclasses import dataclass

from .core import PASS, FilterVerdict, RejectReason, tokenize_ws

DEFAULT_HTML_PATTERNS = (
    "http://",
    "https://",
    "www.",
    ".com",
    ".html",
    ".php",
    "href=",
    "</",
    "/>",
)


@dataclass(frozen=True)
class FilterConfig:
    """Thresholds for the five quality filters.

    Defaults: reject above 15% non-Latin letters, keep 4..150 tokens,
    reject punctuation runs longer than 2, keep average word length in
    [3, 18], reject any token carrying an HTML/URL fragment.
    """

    nonlatin_max_ratio: float = 0.15
    min_tokens: int = 4
    max_tokens: int = 150
    punct_run_max: int = 2
    awl_min: float = 3.0
    awl_max: float = 18.0
    html_patterns: tuple[str, ...] = DEFAULT_HTML_PATTERNS

    def validate(self) -> list[str]:
        """Return a list of invariant violations; empty means the config is usable."""
        problems = []
        if not 0.0 <= self.nonlatin_max_ratio <= 1.0:
            problems.append(f"nonlatin_max_ratio must be in [0, 1], got {self.nonlatin_max_ratio}")
        if not 1 <= self.min_tokens <= self.max_tokens:
            problems.append(f"need 1 <= min_tokens <= max_tokens, got {self.min_tokens}..{self.max_tokens}")
        if not 0 < self.awl_min <= self.awl_max:
            problems.append(f"need 0 < awl_min <= awl_max, got {self.awl_min}..{self.awl_max}")
        if self.punct_run_max < 1:
            problems.append(f"punct_run_max must be >= 1, got {self.punct_run_max}")
        if not self.html_patterns:
            problems.append("html_patterns must not be empty")
        return problems


# Codepoint ranges of the Unicode Latin script (letters only are relevant:
# every check below is gated on isalpha(), so overshoot into unassigned or
# symbol codepoints is harmless). Covers ASCII, Latin-1, Extended-A/B, IPA,
# phonetic extensions, Extended Additional/C/D/E, ligatures and fullwidth.
_LATIN_RANGES = (
    (0x0041, 0x005A), (0x0061, 0x007A), (0x00AA, 0x00AA), (0x00BA, 0x00BA),
    (0x00C0, 0x00D6), (0x00D8, 0x00F6), (0x00F8, 0x02B8), (0x02E0, 0x02E4),
    (0x1D00, 0x1D25), (0x1D2C, 0x1D5C), (0x1D62, 0x1D65), (0x1D6B, 0x1D77),
    (0x1D79, 0x1DBE), (0x1E00, 0x1EFF), (0x2071, 0x2071), (0x207F, 0x207F),
    (0x2090, 0x209C), (0x212A, 0x212B), (0x2132, 0x2132), (0x214E, 0x214E),
    (0x2160, 0x2188), (0x2C60, 0x2C7F), (0xA722, 0xA787), (0xA78B, 0xA7CA),
    (0xA7D0, 0xA7D9), (0xA7F2, 0xA7FF), (0xAB30, 0xAB5A), (0xAB5C, 0xAB69),
    (0xFB00, 0xFB06), (0xFF21, 0xFF3A), (0xFF41, 0xFF5A),
    (0x10780, 0x107BA), (0x1DF00, 0x1DF2A),
)
_LATIN_STARTS = [lo for lo, _ in _LATIN_RANGES]
_LATIN_ENDS = [hi for _, hi in _LATIN_RANGES]


def is_latin(ch: str) -> bool:
    """True if the codepoint belongs to the Latin script (accented letters included)."""
    cp = ord(ch)
    if cp < 0x80:  # fast path, the vast bulk of Latin-script text
        return 0x41 <= cp <= 0x5A or 0x61 <= cp <= 0x7A
    i = bisect.bisect_right(_LATIN_STARTS, cp) - 1
    return i >= 0 and cp <= _LATIN_ENDS[i]


# ASCII punctuation per the Unicode general category P, derived rather than
# hand-listed ($ + < = > ^ ` | ~ are symbols, not punctuation).
_ASCII_PUNCT = frozenset(
    chr(c) for c in range(0x80) if unicodedata.category(chr(c)).startswith("P")
)


def is_punct(ch: str) -> bool:
    if ch in _ASCII_PUNCT:
        return True
    if ord(ch) < 0x80:
        return False
    return unicodedata.category(ch).startswith("P")


def filter_non_latin(text: str, cfg: FilterConfig) -> FilterVerdict:
    """Reject when non-Latin letters exceed the allowed share of visible characters.

    Denominator: every non-whitespace codepoint. Numerator: alphabetic
    codepoints outside the Latin script (digits and punctuation count toward
    the denominator only). Empty text passes; the length filter owns that case.
    """
    visible = 0
    foreign = 0
    for ch in text:
        if ch.isspace():
            continue
        visible += 1
        if ch.isalpha() and not is_latin(ch):
            foreign += 1
    if visible > 0 and foreign / visible > cfg.nonlatin_max_ratio:
        return FilterVerdict.reject(RejectReason.NON_LATIN)
    return PASS


def filter_length(text: str, cfg: FilterConfig) -> FilterVerdict:
    n = len(tokenize_ws(text))
    if cfg.min_tokens <= n <= cfg.max_tokens:
        return PASS
    return FilterVerdict.reject(RejectReason.LENGTH)


def filter_punct_run(text: str, cfg: FilterConfig) -> FilterVerdict:
    """Reject tokens like "///": more than punct_run_max consecutive punctuation
    codepoints, identical or not."""
    for token in tokenize_ws(text):
        run = 0
        for ch in token:
            if is_punct(ch):
                run += 1
                if run > cfg.punct_run_max:
                    return FilterVerdict.reject(RejectReason.PUNCT_RUN)
            else:
                run = 0
    return PASS


def filter_avg_word_len(text: str, cfg: FilterConfig) -> FilterVerdict:
    """Keep sentences whose mean token length (in codepoints, punctuation
    included) falls inside [awl_min, awl_max]. Zero tokens pass; the length
    filter owns empty lines."""
    tokens = tokenize_ws(text)
    if not tokens:
        return PASS
    ratio = sum(len(t) for t in tokens) / len(tokens)
    if cfg.awl_min <= ratio <= cfg.awl_max:
        return PASS
    return FilterVerdict.reject(RejectReason.AVG_WORD_LEN)


@functools.lru_cache(maxsize=16)
def _lowered(patterns: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(p.lower() for p in patterns)


def filter_html(text: str, cfg: FilterConfig) -> FilterVerdict:
    """Reject any token carrying an HTML or URL fragment, case-insensitively."""
    patterns = _lowered(cfg.html_patterns)
    for token in tokenize_ws(text):
        low = token.lower()
        for p in patterns:
            if p in low:
                return FilterVerdict.reject(RejectReason.HTML)
    return PASS


# Enumeration order is the reporting order: the first rejecting filter names
# the reason, later filters never run.
FILTER_CHAIN = (
    filter_non_latin,
    filter_length,
    filter_punct_run,
    filter_avg_word_len,
    filter_html,
)


def apply_filters(text: str, cfg: FilterConfig) -> FilterVerdict:
    """Run all five filters in order; return the first rejection or a pass."""
    for f in FILTER_CHAIN:
        verdict = f(text, cfg)
        if not verdict.passed:
            return verdict
    return PASS
