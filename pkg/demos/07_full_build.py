"""The whole pipeline from one config: ingest -> filter -> dedup -> split -> BPE.

Builds a small mixed corpus (plain + tab-separated bitext), writes a config
document, runs the build twice, and shows that the outputs are byte-identical.
"""

import random
import tempfile
from pathlib import Path

from corpuskit import load_config, report_stats, run_pipeline

rng = random.Random(7)
words = ["maganda", "araw", "balita", "bayan", "paaralan", "lungsod", "panahon"]


def sentence(i):
    return " ".join(rng.choice(words) for _ in range(rng.randrange(4, 9))) + f" blg {i}"


with tempfile.TemporaryDirectory() as td:
    td = Path(td)
    plain = td / "web.txt"
    noise = ["пример текста на русском языке тут", "iisa lang", "tingnan /// ito po ngayon",
             "galing sa shop.com ito kahapon"]
    lines = [sentence(i) for i in range(300)]
    lines = lines + lines[:40] + noise  # planted duplicates and junk
    plain.write_text("\n".join(lines) + "\n", encoding="utf-8")

    tsv = td / "aligned.tsv"
    tsv.write_text("".join(f"english side {i}\t{sentence(1000 + i)}\n" for i in range(100)),
                   encoding="utf-8")

    conf = td / "build.ini"
    conf.write_text(f"""\
[pipeline]
output_dir = {td / "out"}
seed = 20260808

[filter]
min_tokens = 4
max_tokens = 150

[split]
ratio = 0.6
unit = line

[tokenizer]
vocab_size = 120

[source.web]
path = {plain}
format = plain

[source.aligned]
path = {tsv}
format = tsv
side = target
""", encoding="utf-8")

    cfg = load_config(conf)
    stats = run_pipeline(cfg)
    _, table = report_stats(stats)
    print(table)

    first = {p.name: p.read_bytes() for p in sorted((td / "out").glob("*"))}
    run_pipeline(cfg)
    second = {p.name: p.read_bytes() for p in sorted((td / "out").glob("*"))}
    print("re-run byte-identical:", first == second)
    print("output files:", ", ".join(first))
