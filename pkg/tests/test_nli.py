import pytest

from corpuskit.nli import NliLabel, NliPair, make_nli_pairs


def _articles(n, sentences=4):
    return [[f"artikulo {i} pangungusap {k}" for k in range(sentences)] for i in range(n)]


def test_pair_validation():
    with pytest.raises(ValueError):
        NliPair("same", "same", NliLabel.ENTAILMENT)
    with pytest.raises(ValueError):
        NliPair("", "x", NliLabel.ENTAILMENT)


def test_single_article_adjacency():
    arts = [["s1", "s2", "s3"], ["t1", "t2"]]
    result = make_nli_pairs(arts, seed=9)
    ents = [p for p in result.pairs if p.label is NliLabel.ENTAILMENT]
    assert [(p.premise, p.hypothesis) for p in ents][:2] == [("s1", "s2"), ("s2", "s3")]


def test_entailment_pairs_are_intra_article_adjacent():
    arts = _articles(20)
    index = {}
    for i, art in enumerate(arts):
        for k, s in enumerate(art):
            index[s] = (i, k)
    result = make_nli_pairs(arts, seed=3)
    for p in result.pairs:
        if p.label is NliLabel.ENTAILMENT:
            (ai, ak), (bi, bk) = index[p.premise], index[p.hypothesis]
            assert ai == bi and bk == ak + 1


def test_contradiction_pairs_are_cross_article():
    arts = _articles(20)
    article_of = {s: i for i, art in enumerate(arts) for s in art}
    result = make_nli_pairs(arts, seed=3)
    contras = [p for p in result.pairs if p.label is NliLabel.CONTRADICTION]
    assert contras
    for p in contras:
        assert article_of[p.premise] != article_of[p.hypothesis]


def test_labels_balanced():
    result = make_nli_pairs(_articles(20), seed=4)
    assert abs(result.n_entailment - result.n_contradiction) <= 1


def test_deterministic_for_fixed_seed():
    arts = _articles(15)
    a = make_nli_pairs(arts, seed=77)
    b = make_nli_pairs(arts, seed=77)
    assert a.pairs == b.pairs
    c = make_nli_pairs(arts, seed=78)
    assert a.pairs != c.pairs


def test_direction_switch():
    arts = [["una", "pangalawa"]]
    ents = [p for p in make_nli_pairs(arts, seed=1).pairs if p.label is NliLabel.ENTAILMENT]
    assert ents[0].premise == "una" and ents[0].hypothesis == "pangalawa"
    flipped = [p for p in make_nli_pairs(arts, seed=1, premise_first=False).pairs
               if p.label is NliLabel.ENTAILMENT]
    assert flipped[0].premise == "pangalawa" and flipped[0].hypothesis == "una"


def test_short_articles_skipped_and_counted():
    arts = [["solo"], ["a1", "a2"], []]
    result = make_nli_pairs(arts, seed=5)
    assert result.short_articles_skipped == 2
    assert result.n_entailment == 1


def test_single_article_reports_impossible_contradictions():
    result = make_nli_pairs([["s1", "s2", "s3"]], seed=6)
    assert result.n_entailment == 2
    assert result.n_contradiction == 0
    assert result.contradictions_unfilled == 2


def test_adjacent_duplicates_skipped():
    result = make_nli_pairs([["x", "x", "y"], ["t1", "t2"]], seed=8)
    assert result.degenerate_pairs_skipped == 1
    alive = [(p.premise, p.hypothesis) for p in result.pairs if p.label is NliLabel.ENTAILMENT]
    assert ("x", "x") not in alive


def test_benchmark_side_pairs_disjoint_from_pretraining_side():
    # the end-to-end guarantee: pairs generated from the benchmark side of a
    # document split never reuse a sentence from the pretraining side
    from corpuskit.dedup import dedup_key
    from corpuskit.split import SplitConfig, split_articles

    articles = [[f"art {i} linya {k}" for k in range(3)] for i in range(50)]
    pretrain, bench = split_articles(articles, SplitConfig(ratio=0.6, seed=21))
    pretrain_keys = {dedup_key(s) for art in pretrain for s in art}

    result = make_nli_pairs(bench, seed=22)
    assert result.pairs
    for p in result.pairs:
        assert dedup_key(p.premise) not in pretrain_keys
        assert dedup_key(p.hypothesis) not in pretrain_keys
