"""Tree enumeration, signing streams, mate search, exhaustive confirmation."""

import random

import pytest

from sgdgs.certify import certify_tree
from sgdgs.datasets import EXAMPLE1_CHARPOLY, remark1_pair
from sgdgs.errors import PreconditionError, ResourceGuardError
from sgdgs.linalg import charpoly
from sgdgs.search import (
    FREE_TREE_COUNTS,
    _check_spectrum_groups,
    all_signed_trees,
    decode_pruefer,
    enumerate_signings,
    enumerate_trees,
    exhaustive_dgs_check,
    find_gc_mates,
    find_trees_with_charpoly,
    random_tree,
)
from sgdgs.sgraph import SignedGraph, are_isomorphic, is_tree, tree_canonical_form

from oracles import prufer_free_tree_count


def test_pool_counts_match_free_tree_sequence():
    for n in range(1, 11):
        pool = enumerate_trees(n)
        assert len(pool.trees) == FREE_TREE_COUNTS[n - 1]
        assert all(is_tree(t) for t in pool.trees)
        forms = {tree_canonical_form(t) for t in pool.trees}
        assert len(forms) == len(pool.trees)  # pairwise non-isomorphic


def test_pool_counts_against_prufer_oracle():
    # independent generator: full Pruefer enumeration with its own AHU dedup
    for n in range(2, 9):
        assert len(enumerate_trees(n).trees) == prufer_free_tree_count(n)


def test_pool_deterministic_order():
    a = [t.edges for t in enumerate_trees(7).trees]
    b = [t.edges for t in enumerate_trees(7).trees]
    assert a == b


def test_enumerate_trees_resource_guard():
    with pytest.raises(ResourceGuardError):
        enumerate_trees(15)
    with pytest.raises(ResourceGuardError):
        enumerate_trees(0)


def test_enumerate_signings_counts():
    single = SignedGraph(2, ((1, 2, 1),))
    assert len(list(enumerate_signings(single))) == 2
    p4 = SignedGraph(4, ((1, 2, 1), (2, 3, 1), (3, 4, 1)))
    signings = list(enumerate_signings(p4))
    assert len(signings) == 8
    assert len(set(signings)) == 8
    for n in (3, 5, 6):
        tree = enumerate_trees(n).trees[0]
        assert len(list(enumerate_signings(tree))) == 2 ** (n - 1)


def test_enumerate_signings_rejects_non_tree():
    tri = SignedGraph(3, ((1, 2, 1), (1, 3, 1), (2, 3, 1)))
    with pytest.raises(PreconditionError):
        list(enumerate_signings(tri))


def test_decode_pruefer_and_random_tree():
    assert sorted(decode_pruefer([1, 1])) == [(1, 2), (1, 3), (1, 4)]
    rng = random.Random(51)
    for _ in range(30):
        n = rng.randint(1, 12)
        t = random_tree(n, rng)
        assert is_tree(t)


def test_find_gc_mates_self_pool_empty():
    g, _ = remark1_pair()
    report = find_gc_mates(g, [g])
    assert report.mates == ()
    assert report.candidates_scanned == 1


def test_find_gc_mates_remark1():
    g, h = remark1_pair()
    report = find_gc_mates(g, [h])
    assert len(report.mates) == 1
    entry = report.mates[0]
    assert entry.recovery is not None and entry.recovery.valid
    assert entry.classification.tag == "BlockDiagonal"


def test_find_gc_mates_rejects_different_spectrum():
    p4 = SignedGraph(4, ((1, 2, 1), (2, 3, 1), (3, 4, 1)))
    star = SignedGraph(4, ((1, 2, 1), (1, 3, 1), (1, 4, 1)))
    report = find_gc_mates(p4, [star])
    assert report.mates == ()


def test_find_gc_mates_skips_isomorphic_signings():
    # mirrored signings of the path are isomorphic and generalized cospectral
    g = SignedGraph(4, ((1, 2, -1), (2, 3, 1), (3, 4, 1)))
    h = SignedGraph(4, ((1, 2, 1), (2, 3, 1), (3, 4, -1)))
    assert are_isomorphic(g, h) is not None
    report = find_gc_mates(g, [h])
    assert report.mates == ()


def test_exhaustive_check_all_certified_10():
    certified = [t for t in enumerate_trees(10).trees if certify_tree(t).certified]
    assert len(certified) == 3
    for tree in certified:
        report = exhaustive_dgs_check(tree)
        assert report.ok
        assert report.counterexamples == ()
        assert report.signings_scanned == 512 * report.candidate_trees
        for pair in report.gc_pairs:
            assert pair.recovery_valid and pair.block_structure


def test_exhaustive_check_requires_certified():
    p4 = SignedGraph(4, ((1, 2, 1), (2, 3, 1), (3, 4, 1)))
    with pytest.raises(PreconditionError):
        exhaustive_dgs_check(p4)


def test_exhaustive_check_resource_guard():
    certified = [t for t in enumerate_trees(10).trees if certify_tree(t).certified]
    with pytest.raises(ResourceGuardError):
        exhaustive_dgs_check(certified[0], max_n=8)


def test_exhaustive_check_negative_control():
    """Corrupting one signing's spectrum must break the homogeneity check."""
    tree = next(t for t in enumerate_trees(10).trees if certify_tree(t).certified)
    other = next(t for t in enumerate_trees(10).trees if t != tree)
    groups = {
        ("fake-spectrum",): [tree, other],  # non-isomorphic members, same bucket
    }
    ok, counterexamples = _check_spectrum_groups(groups)
    assert not ok
    assert len(counterexamples) == 1
    g, h = counterexamples[0]
    assert are_isomorphic(g, h) is None


def test_example1_pair_locatable_at_n14():
    """Exactly one unordered pair of 14-vertex trees carries the embedded
    degree-14 charpoly (the printed cospectral pair)."""
    matches = find_trees_with_charpoly(14, EXAMPLE1_CHARPOLY)
    assert len(matches) == 2
    t1, t2 = matches
    assert are_isomorphic(t1, t2) is None
    assert charpoly(t1.adjacency()) == charpoly(t2.adjacency()) == EXAMPLE1_CHARPOLY
    assert certify_tree(t1).certified and certify_tree(t2).certified


def test_all_signed_trees_stream():
    count = sum(1 for _ in all_signed_trees(5))
    # 3 trees on 5 vertices, 16 signings each
    assert count == 3 * 16
