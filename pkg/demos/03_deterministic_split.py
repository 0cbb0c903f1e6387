"""Seeded document splits with exact quotas.

1000 articles at ratio 0.6 give exactly 600/400, and the same seed gives
the same partition forever: the pretraining side of a corpus can never
leak into the benchmark side between runs.
"""

from corpuskit import SplitConfig, split_articles
from corpuskit.split import SplitUnit

articles = [[f"artikulo {i}, unang pangungusap", f"artikulo {i}, ikalawa"] for i in range(1000)]
cfg = SplitConfig(ratio=0.6, seed=20260808, unit=SplitUnit.DOCUMENT)

side_a, side_b = split_articles(articles, cfg)
print(f"{len(articles)} documents -> {len(side_a)} pretraining / {len(side_b)} benchmark")

rerun_a, rerun_b = split_articles(articles, cfg)
print("re-run identical:", (rerun_a, rerun_b) == (side_a, side_b))

other_a, _ = split_articles(articles, SplitConfig(ratio=0.6, seed=1, unit=SplitUnit.DOCUMENT))
moved = sum(1 for art in other_a if art not in side_a)
print(f"different seed moves {moved} of {len(other_a)} documents")
