"""Harvest entailment pairs from news articles, with sampled contradictions.

Adjacent sentences inside one article entail each other (inverted-pyramid
structure); negatives pair each premise with a random sentence from a
different article. One seed, one dataset: re-runs are identical.
"""

from corpuskit import make_nli_pairs

ARTICLES = [
    [
        "Nagtalaga ang lungsod ng bagong punong guro sa paaralan",
        "Sinabi ng alkalde na mahalaga ang edukasyon sa bayan",
        "Magsisimula ang bagong punong guro sa susunod na linggo",
    ],
    [
        "Bumagyo nang malakas sa hilagang bahagi ng bansa kahapon",
        "Libo-libong pamilya ang lumikas patungo sa mga evacuation center",
    ],
    [
        "Nanalo ang lokal na koponan sa kampeonato ngayong taon",
        "Ito ang kanilang unang titulo sa loob ng isang dekada",
    ],
]

result = make_nli_pairs(ARTICLES, seed=271828)
print(f"{len(ARTICLES)} articles -> {result.n_entailment} entailment "
      f"+ {result.n_contradiction} contradiction pairs\n")

for pair in result.pairs:
    print(f"[{pair.label.value.upper()}]")
    print(f"  premise:    {pair.premise}")
    print(f"  hypothesis: {pair.hypothesis}")

again = make_nli_pairs(ARTICLES, seed=271828)
print("\nsame seed, same pairs:", again.pairs == result.pairs)
