"""Learn a cased BPE vocabulary from scratch and inspect what it learned.

Shows the merge list on a classic toy corpus, then segmentations, the
exact round trip on covered text, and the two model files.
"""

import tempfile
from pathlib import Path

from corpuskit import TokenizerConfig, add_special_tokens, decode, encode, learn_bpe, save_model

toy = ["low"] * 5 + ["lower"] * 2 + ["newest"] * 6 + ["widest"] * 3
alphabet = len(set("".join(toy)))
cfg = TokenizerConfig(vocab_size=5 + 2 * alphabet + 10)  # specials + chars + 10 merges

model = learn_bpe(toy, cfg)
print("merges, in learned order:")
for rank, (a, b) in enumerate(model.merges):
    print(f"  {rank:2d}  {a} + {b} -> {a + b}")

for word in ("lowest", "newest", "low", "Low"):
    ids = encode(model, word)
    pieces = [model.id_to_subword(i) for i in ids]
    print(f"\n{word!r} -> {pieces} -> {ids}")
    print("  decoded:", repr(decode(model, ids)))

print("\ncase matters:", encode(model, "low") != encode(model, "Low"))

grown = add_special_tokens(model, ["[LINK]", "[MENTION]", "[HASHTAG]"])
print("added finetuning specials, vocab", len(model.vocab), "->", len(grown.vocab))
print("[LINK] encodes atomically:", encode(grown, "[LINK]"))

with tempfile.TemporaryDirectory() as td:
    merges_path, vocab_path = Path(td) / "bpe.merges.txt", Path(td) / "bpe.vocab.txt"
    save_model(model, merges_path, vocab_path)
    print("\nmerges file header:", merges_path.read_text(encoding="utf-8").splitlines()[0])
    print("first vocab rows: ", vocab_path.read_text(encoding="utf-8").splitlines()[:6])
