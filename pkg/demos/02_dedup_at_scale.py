"""Exact keep-first dedup, in memory and with the external-sort mode.

The two modes produce byte-identical output; external sort bounds peak
memory by its chunk size, so it scales to corpora that do not fit in RAM.
"""

import random
import tempfile
from pathlib import Path

from corpuskit import dedup_files, dedup_lines

rng = random.Random(0)
words = ["balita", "bayan", "ulat", "araw", "gabi", "ulan"]

with tempfile.TemporaryDirectory() as td:
    src = Path(td) / "corpus.txt"
    with open(src, "w", encoding="utf-8") as f:
        lines = []
        for i in range(50_000):
            if lines and rng.random() < 0.4:
                line = rng.choice(lines)  # plant a duplicate
            else:
                line = " ".join(rng.choice(words) for _ in range(6)) + f" {i}"
            lines.append(line)
            f.write(line + "\n")

    mem_out = Path(td) / "dedup_mem.txt"
    ext_out = Path(td) / "dedup_ext.txt"

    summary = dedup_lines([src], mem_out)
    print("in-memory:    ", summary.line())

    summary = dedup_files([src], ext_out, tmp_dir=td, chunk_lines=5_000)
    print("external-sort:", summary.line())

    identical = mem_out.read_bytes() == ext_out.read_bytes()
    print("outputs byte-identical:", identical)
