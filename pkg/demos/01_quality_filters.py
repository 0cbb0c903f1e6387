"""Walk a noisy crawled corpus through the five quality filters.

Each line gets a verdict; rejected lines carry the reason of the first
filter that fired. Thresholds are configurable; defaults shown here.
"""

from collections import Counter

from corpuskit import FilterConfig, apply_filters

NOISY_CORPUS = [
    "Magandang umaga sa inyong lahat dito",
    "пример текста на русском языке тут",
    "masyadong maikli",
    "tingnan ninyo ito /// ngayon na",
    "bumili ako sa shop.com kahapon pa",
    "ang daming sinasabi pero walang laman talaga",
    "a b c d e f",
    "Pinakamahalagang balita ngayong araw na ito",
]

cfg = FilterConfig()
print(f"thresholds: non-latin <= {cfg.nonlatin_max_ratio:.0%}, "
      f"tokens {cfg.min_tokens}..{cfg.max_tokens}, "
      f"punct runs <= {cfg.punct_run_max}, "
      f"avg word length {cfg.awl_min}..{cfg.awl_max}\n")

reasons = Counter()
for line in NOISY_CORPUS:
    verdict = apply_filters(line, cfg)
    mark = "keep" if verdict.passed else f"drop ({verdict.reason.value})"
    reasons[verdict.reason.value] += 1
    print(f"  {mark:18s} {line}")

print("\nper-reason counts:")
for reason, n in sorted(reasons.items()):
    print(f"  {reason:12s} {n}")
