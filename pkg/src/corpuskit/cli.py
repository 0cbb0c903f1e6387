"""Batch command line for the corpus toolkit.

Subcommands mirror the library stages: ingest, filter, dedup, split,
train-bpe, encode, prep-tweets, encode-labels, make-nli, build, stats.
All corpus output is UTF-8, one sentence per line. Exit code is 0 on
success and 1 on any stage failure, with a stage-tagged diagnostic on
stderr.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from . import bpe, dedup, nli, pipeline, tweets
from .core import CorpusError
from .filters import FilterConfig, apply_filters
from .ingest import (
    Side,
    extract_bitext_side,
    read_paired_bitext,
    read_plain_corpus,
    read_tsv_bitext,
)
from .labels import encode_label_flags
from .split import SplitConfig, SplitUnit, split_articles, split_corpus


def _open_out(path: str):
    return open(path, "w", encoding="utf-8", newline="\n")


def cmd_ingest(args) -> int:
    counts: Counter = Counter()
    with _open_out(args.out) as out:
        n = 0
        if args.format == "plain":
            with open(args.inputs[0], "rb") as f:
                for rec in read_plain_corpus(f, args.source_id, counts):
                    out.write(rec.text + "\n")
                    n += 1
        elif args.format == "tsv":
            with open(args.inputs[0], "rb") as f:
                pairs = read_tsv_bitext(f, args.source_id, counts)
                for rec in extract_bitext_side(pairs, Side(args.side), args.source_id, counts):
                    out.write(rec.text + "\n")
                    n += 1
        else:  # paired
            if len(args.inputs) != 2:
                raise CorpusError("paired format takes exactly two input files")
            with open(args.inputs[0], "rb") as src, open(args.inputs[1], "rb") as tgt:
                pairs = read_paired_bitext(src, tgt, args.source_id, counts)
                for rec in extract_bitext_side(pairs, Side(args.side), args.source_id, counts):
                    out.write(rec.text + "\n")
                    n += 1
    skipped = counts["empty"] + counts["malformed"] + counts["empty_side"]
    print(f"read={counts['lines']} extracted={n} skipped={skipped}", file=sys.stderr)
    return 0


def cmd_filter(args) -> int:
    cfg = FilterConfig()
    if args.config:
        text = Path(args.config).read_text(encoding="utf-8")
        cfg = pipeline.filter_config_from_mapping(pipeline.parse_flat_config(text))
    problems = cfg.validate()
    if problems:
        raise CorpusError("bad filter config: " + "; ".join(problems))

    counts: Counter = Counter()
    kept = 0
    rejected: Counter = Counter()
    with open(args.infile, "rb") as f, _open_out(args.out) as out, _open_out(args.rejects) as rej:
        for rec in read_plain_corpus(f, args.infile, counts):
            verdict = apply_filters(rec.text, cfg)
            if verdict.passed:
                out.write(rec.text + "\n")
                kept += 1
            else:
                rejected[verdict.reason.value] += 1
                rej.write(f"{verdict.reason.value}\t{rec.text}\n")
    detail = " ".join(f"{k}={v}" for k, v in sorted(rejected.items()))
    print(f"read={counts['lines']} kept={kept} rejected={sum(rejected.values())} {detail}".rstrip(),
          file=sys.stderr)
    return 0


def cmd_dedup(args) -> int:
    if args.external_sort:
        summary = dedup.dedup_files(args.inputs, args.out, tmp_dir=args.tmp)
    else:
        summary = dedup.dedup_lines(args.inputs, args.out)
    print(summary.line())
    return 0


def cmd_split(args) -> int:
    cfg = SplitConfig(ratio=args.ratio, seed=args.seed, unit=SplitUnit(args.unit))
    problems = cfg.validate()
    if problems:
        raise CorpusError("; ".join(problems))

    if cfg.unit is SplitUnit.DOCUMENT:
        from .ingest import read_articles_file

        articles = list(read_articles_file(args.infile))
        side_a, side_b = split_articles(articles, cfg)
        for path, side in ((args.out_a, side_a), (args.out_b, side_b)):
            with _open_out(path) as out:
                for art in side:
                    out.write("\n".join(art) + "\n\n")
        print(f"units={len(articles)} a={len(side_a)} b={len(side_b)}", file=sys.stderr)
    else:
        with open(args.infile, "rb") as f:
            records = list(read_plain_corpus(f, args.infile))
        side_a, side_b = split_corpus(records, cfg)
        for path, side in ((args.out_a, side_a), (args.out_b, side_b)):
            with _open_out(path) as out:
                for rec in side:
                    out.write(rec.text + "\n")
        print(f"units={len(records)} a={len(side_a)} b={len(side_b)}", file=sys.stderr)
    return 0


def cmd_train_bpe(args) -> int:
    cfg = bpe.TokenizerConfig(
        vocab_size=args.vocab_size,
        character_coverage=args.coverage,
        special_tokens=tuple(args.special_tokens.split()) if args.special_tokens else bpe.DEFAULT_SPECIALS,
    )

    def texts():
        for path in args.inputs:
            with open(path, "r", encoding="utf-8") as f:
                for line in f:
                    yield line

    model = bpe.learn_bpe(texts(), cfg)
    bpe.save_model(model, args.merges_out, args.vocab_out)
    print(f"vocab={len(model.vocab)} merges={len(model.merges)}", file=sys.stderr)
    return 0


def cmd_encode(args) -> int:
    model = bpe.load_model(args.merges, args.vocab)
    with open(args.infile, "r", encoding="utf-8") as f, _open_out(args.out) as out:
        for line in f:
            ids = bpe.encode(model, line.rstrip("\n"))
            out.write(" ".join(map(str, ids)) + "\n")
    return 0


def cmd_prep_tweets(args) -> int:
    cfg = tweets.DEFAULT_TWEET_CONFIG
    n = 0
    with open(args.infile, "r", encoding="utf-8") as f, _open_out(args.out) as out:
        for line in f:
            line = line.rstrip("\n")
            if not line:
                continue
            text, sep, label = line.rpartition("\t")
            if not sep:  # no label column, clean the whole line
                text, label = line, None
            cleaned = tweets.preprocess_tweet(text, cfg)
            out.write(cleaned + ("\t" + label if label is not None else "") + "\n")
            n += 1
    print(f"processed={n}", file=sys.stderr)
    return 0


def cmd_encode_labels(args) -> int:
    n = 0
    with open(args.infile, "r", encoding="utf-8") as f, _open_out(args.out) as out:
        for ln, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            flags = [v.strip() for v in line.split(",")]
            if any(v not in ("0", "1") for v in flags):
                raise CorpusError(f"{args.infile}:{ln}: expected 5 binary columns, got {line!r}")
            out.write(f"{encode_label_flags([int(v) for v in flags])}\n")
            n += 1
    print(f"encoded={n}", file=sys.stderr)
    return 0


def cmd_make_nli(args) -> int:
    from .ingest import read_articles_file

    articles = list(read_articles_file(args.infile))
    result = nli.make_nli_pairs(articles, args.seed, premise_first=not args.later_as_premise)
    with _open_out(args.out) as out:
        for pair in result.pairs:
            premise = pair.premise.replace("\t", " ")
            hypothesis = pair.hypothesis.replace("\t", " ")
            out.write(f"{premise}\t{hypothesis}\t{pair.label.value}\n")
    print(
        f"articles={len(articles)} entailment={result.n_entailment} "
        f"contradiction={result.n_contradiction} skipped_short={result.short_articles_skipped} "
        f"unfilled={result.contradictions_unfilled}",
        file=sys.stderr,
    )
    if result.contradictions_unfilled and not result.n_contradiction:
        print("warning: no cross-article sentences available for contradictions", file=sys.stderr)
    return 0


def cmd_build(args) -> int:
    cfg = pipeline.load_config(args.config)
    stats = pipeline.run_pipeline(cfg)
    _, table = pipeline.report_stats(stats)
    print(table, end="")
    return 0


def cmd_stats(args) -> int:
    text = Path(args.infile).read_text(encoding="utf-8")
    stats = pipeline.stats_from_jsonl(text)
    _, table = pipeline.report_stats(stats)
    print(table, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="corpuskit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ingest", help="read a plain or bilingual corpus, emit one sentence per line")
    sp.add_argument("inputs", nargs="+", help="input file(s); paired format takes two")
    sp.add_argument("--format", choices=("plain", "tsv", "paired"), default="plain")
    sp.add_argument("--side", choices=("source", "target"), default="target")
    sp.add_argument("--source-id", default="corpus")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_ingest)

    sp = sub.add_parser("filter", help="apply the five quality filters")
    sp.add_argument("--config", help="flat key=value file mirroring the filter thresholds")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--rejects", required=True, help="audit file of reason<TAB>text lines")
    sp.set_defaults(func=cmd_filter)

    sp = sub.add_parser("dedup", help="exact line dedup, keep-first")
    sp.add_argument("--in", dest="inputs", nargs="+", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--external-sort", action="store_true",
                    help="bounded-memory two-pass mode for corpora larger than RAM")
    sp.add_argument("--tmp", default=None, help="directory for external-sort spill files")
    sp.set_defaults(func=cmd_dedup)

    sp = sub.add_parser("split", help="deterministic seeded split with exact quotas")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--ratio", type=float, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--unit", choices=("line", "document"), default="document",
                    help="document = blank-line separated block")
    sp.add_argument("--out-a", required=True)
    sp.add_argument("--out-b", required=True)
    sp.set_defaults(func=cmd_split)

    sp = sub.add_parser("train-bpe", help="learn a cased BPE subword vocabulary")
    sp.add_argument("--in", dest="inputs", nargs="+", required=True)
    sp.add_argument("--vocab-size", type=int, default=32_000)
    sp.add_argument("--coverage", type=float, default=1.0)
    sp.add_argument("--special-tokens", default=None, help="space-separated, unknown token first")
    sp.add_argument("--merges-out", required=True)
    sp.add_argument("--vocab-out", required=True)
    sp.set_defaults(func=cmd_train_bpe)

    sp = sub.add_parser("encode", help="encode text to subword ids, one line of ids per input line")
    sp.add_argument("--merges", required=True)
    sp.add_argument("--vocab", required=True)
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("prep-tweets", help="normalize tweet text (text<TAB>label or bare text)")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_prep_tweets)

    sp = sub.add_parser("encode-labels", help="5 binary CSV columns -> one class integer per line")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_encode_labels)

    sp = sub.add_parser("make-nli", help="entailment/contradiction pairs from blank-line separated articles")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--later-as-premise", action="store_true",
                    help="put the later sentence in the premise slot")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_make_nli)

    sp = sub.add_parser("build", help="run the full pipeline from a config document")
    sp.add_argument("--config", required=True)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("stats", help="validate and pretty-print a stats.jsonl report")
    sp.add_argument("--in", dest="infile", required=True)
    sp.set_defaults(func=cmd_stats)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CorpusError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"error: [{args.command}] {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
