"""Non-destructive tweet normalization for benchmark classification sets.

The source data was tokenizer-mangled at publication time: punctuation was
split off, contractions were spaced out, HTML entities double-escaped, and
image URLs litter the text. These transforms undo that noise while keeping
the linguistic content intact: detokenize, decode entities, collapse URLs /
@-mentions / #-hashtags into single placeholder tokens, and rejoin spaced
apostrophes and hyphens. Every stage is idempotent, and the composed
preprocess_tweet applies them in the one order that works (detokenization
and entity decoding must run before token-pattern matching).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

DEFAULT_ENTITY_MAP = {
    "&amp;": "&",
    "&lt;": "<",
    "&gt;": ">",
    "&quot;": '"',
    "&#39;": "'",
    "&nbsp;": " ",
}


@dataclass(frozen=True)
class TweetPrepConfig:
    link_token: str = "[LINK]"
    mention_token: str = "[MENTION]"
    hashtag_token: str = "[HASHTAG]"
    entity_map: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_ENTITY_MAP))

    def validate(self) -> list[str]:
        tokens = (self.link_token, self.mention_token, self.hashtag_token)
        problems = []
        if len(set(tokens)) != 3 or not all(tokens):
            problems.append(f"placeholder tokens must be distinct and non-empty, got {tokens}")
        return problems


DEFAULT_TWEET_CONFIG = TweetPrepConfig()

_SENT_PUNCT = frozenset(".,!?;:%")
_CLOSERS = frozenset(")]}")
_OPENERS = frozenset("([{")


def moses_detokenize(text: str) -> str:
    """Reattach split-off punctuation: sentence punctuation and closing
    brackets glue to the token on their left, opening brackets to the right.

    Intentionally a minimal rule set, not the full reference script; it is
    idempotent, so already-clean text passes through unchanged.
    """
    out = ""
    glue = True  # no separator before the first token or after an opener
    for tok in text.split():
        if out and all(c in _SENT_PUNCT or c in _CLOSERS for c in tok):
            out += tok
            glue = False
            continue
        if not glue:
            out += " "
        out += tok
        glue = all(c in _OPENERS for c in tok)
    return out


def collapse_links(text: str, cfg: TweetPrepConfig = DEFAULT_TWEET_CONFIG) -> str:
    """Replace every URL-shaped token (http/https scheme or www. prefix)."""
    tokens = [
        cfg.link_token
        if t.lower().startswith(("http://", "https://", "www."))
        else t
        for t in text.split()
    ]
    return " ".join(tokens)


def _collapse_prefixed(text: str, prefix: str, replacement: str) -> str:
    # "greater than length 1": a bare @ or # is ordinary text
    tokens = [
        replacement if t.startswith(prefix) and len(t) > 1 else t
        for t in text.split()
    ]
    return " ".join(tokens)


def collapse_mentions(text: str, cfg: TweetPrepConfig = DEFAULT_TWEET_CONFIG) -> str:
    return _collapse_prefixed(text, "@", cfg.mention_token)


def collapse_hashtags(text: str, cfg: TweetPrepConfig = DEFAULT_TWEET_CONFIG) -> str:
    return _collapse_prefixed(text, "#", cfg.hashtag_token)


_SPACED_APOSTROPHE = re.compile(r"(?<=\w) (?=['’]\w)")
_SPACED_HYPHEN = re.compile(r"(?<=\w) - (?=\w)")


def renormalize_spacing(text: str) -> str:
    """Rejoin spaced-out contractions ("it 's" -> "it's") and single spaced
    hyphens ("one - two" -> "one-two"). Runs like "--" are left alone."""
    text = _SPACED_APOSTROPHE.sub("", text)
    return _SPACED_HYPHEN.sub("-", text)


def decode_html_entities(text: str, cfg: TweetPrepConfig = DEFAULT_TWEET_CONFIG) -> str:
    """Decode the mapped HTML entities in one left-to-right pass.

    Unknown entities stay as written. One escaping level per call: doubly
    escaped input ("&amp;amp;") needs a second pass by design.
    """
    if not cfg.entity_map:
        return text
    pattern = re.compile(
        "|".join(re.escape(k) for k in sorted(cfg.entity_map, key=len, reverse=True))
    )
    return pattern.sub(lambda m: cfg.entity_map[m.group(0)], text)


def preprocess_tweet(text: str, cfg: TweetPrepConfig = DEFAULT_TWEET_CONFIG) -> str:
    """Full cleanup pipeline in fixed order: detokenize, decode entities,
    collapse links, mentions, hashtags, then renormalize spacing."""
    text = moses_detokenize(text)
    text = decode_html_entities(text, cfg)
    text = collapse_links(text, cfg)
    text = collapse_mentions(text, cfg)
    text = collapse_hashtags(text, cfg)
    return renormalize_spacing(text)
