"""Sentence-pair generation from news articles.

News prose follows the inverted-pyramid structure: each sentence elaborates
the ones before it, so adjacent sentences inside an article make natural
entailment pairs. Contradictions are negative-sampled: every entailment
premise is paired with a seeded-random sentence from a different article,
which keeps the two classes exactly balanced. Randomness is derived per
article from (seed, article index), so a parallel run emits the same pairs
as a sequential one.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Sequence

from .split import seeded_hash64

_RESAMPLE_ATTEMPTS = 10  # retries when the sampled negative equals the premise


class NliLabel(enum.Enum):
    ENTAILMENT = "entailment"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class NliPair:
    premise: str
    hypothesis: str
    label: NliLabel

    def __post_init__(self):
        if not self.premise or not self.hypothesis:
            raise ValueError("premise and hypothesis must be non-empty")
        if self.premise == self.hypothesis:
            raise ValueError("premise and hypothesis must differ")


@dataclass
class NliGenResult:
    pairs: list[NliPair] = field(default_factory=list)
    short_articles_skipped: int = 0  # fewer than 2 sentences
    degenerate_pairs_skipped: int = 0  # adjacent duplicates
    contradictions_unfilled: int = 0  # no usable cross-article sentence

    @property
    def n_entailment(self) -> int:
        return sum(1 for p in self.pairs if p.label is NliLabel.ENTAILMENT)

    @property
    def n_contradiction(self) -> int:
        return sum(1 for p in self.pairs if p.label is NliLabel.CONTRADICTION)


def make_nli_pairs(
    articles: Sequence[list[str]],
    seed: int,
    premise_first: bool = True,
) -> NliGenResult:
    """Emit one entailment pair per adjacent sentence pair in each article,
    plus one cross-article contradiction per entailment.

    premise_first=True puts the earlier sentence in the premise slot; flip it
    to make each sentence entail the one before. Deterministic for a fixed
    seed, input, and direction.
    """
    articles = list(articles)
    result = NliGenResult()

    nonempty = [i for i, art in enumerate(articles) if art]
    position = {idx: pos for pos, idx in enumerate(nonempty)}

    for i, art in enumerate(articles):
        if len(art) < 2:
            result.short_articles_skipped += 1
            continue
        rng = random.Random(seeded_hash64(seed, f"article:{i}"))
        for k in range(len(art) - 1):
            earlier, later = art[k], art[k + 1]
            if earlier == later:
                result.degenerate_pairs_skipped += 1
                continue
            premise, hypothesis = (earlier, later) if premise_first else (later, earlier)
            result.pairs.append(NliPair(premise, hypothesis, NliLabel.ENTAILMENT))

            negative = _sample_cross_article(articles, nonempty, position, i, premise, rng)
            if negative is None:
                result.contradictions_unfilled += 1
            else:
                result.pairs.append(NliPair(premise, negative, NliLabel.CONTRADICTION))
    return result


def _sample_cross_article(
    articles: Sequence[list[str]],
    nonempty: list[int],
    position: dict[int, int],
    current: int,
    premise: str,
    rng: random.Random,
) -> str | None:
    """Uniform sentence draw from a uniformly drawn other article."""
    n_candidates = len(nonempty) - (1 if current in position else 0)
    if n_candidates <= 0:
        return None
    for _ in range(_RESAMPLE_ATTEMPTS):
        r = rng.randrange(n_candidates)
        if current in position and r >= position[current]:
            r += 1
        other = articles[nonempty[r]]
        sentence = other[rng.randrange(len(other))]
        if sentence != premise:
            return sentence
    return None
