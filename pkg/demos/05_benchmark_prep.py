"""Benchmark text prep: tweet cleanup and multilabel binarization.

The tweet pipeline undoes tokenizer damage (spaced punctuation, escaped
entities) and collapses URLs, mentions, and hashtags into placeholder
tokens. The label converter reads five binary flags as one class id.
"""

from corpuskit import decode_label_flags, encode_label_flags, preprocess_tweet
from corpuskit.labels import LABEL_FIELDS

RAW_TWEETS = [
    "RT : @user check http://x.co &amp; reply",
    "grabe ! si @maria nag - post ng #AlDub",
    "it 's totoo , promise !",
    "basahin : www.balita.ph ngayon",
]

print("tweet cleanup:")
for raw in RAW_TWEETS:
    print(f"  {raw}")
    print(f"    -> {preprocess_tweet(raw)}")

print("\nlabel binarization (flags are", ", ".join(LABEL_FIELDS), "):")
for flags in [(1, 1, 0, 1, 1), (0, 0, 0, 0, 0), (1, 0, 0, 0, 1)]:
    value = encode_label_flags(flags)
    bits = "".join(str(int(f)) for f in flags)
    print(f"  {bits} -> class {value} -> {decode_label_flags(value)}")
