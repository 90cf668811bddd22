"""Desk-scale enumeration and brute-force verification.

Free trees are generated by leaf augmentation with canonical-form
deduplication (exhaustive: every tree on k+1 vertices arises by attaching
a leaf to a tree on k vertices).  The exhaustive spectral-determinacy
check buckets all signings of all candidate trees by their generalized
spectrum; a certified tree passes when every bucket is isomorphism-
homogeneous.
"""

from __future__ import annotations

import heapq
import multiprocessing
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from . import kernels
from .certify import certify_tree
from .errors import PreconditionError, ResourceGuardError
from .intpoly import IntPolynomial
from .linalg import charpoly
from .sgraph import (
    SignedGraph,
    are_isomorphic,
    bipartition,
    bipartite_adjacency,
    from_bipartite_adjacency,
    tree_canonical_form,
)
from .spectra import (
    QClassification,
    QRecovery,
    classify_q,
    is_controllable,
    recover_q,
)

TREE_CEILING_DEFAULT = 14

# free-tree counts for n = 1..10; pinned cross-check for the enumerator
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)


@dataclass(frozen=True)
class TreePool:
    """All free trees on n vertices, all-positive signings, canonical order."""

    n: int
    trees: tuple[SignedGraph, ...]


_POOL_CACHE: dict[int, TreePool] = {}


def enumerate_trees(n: int, ceiling: int = TREE_CEILING_DEFAULT) -> TreePool:
    """All isomorphism classes of free trees on n vertices."""
    if not 1 <= n <= ceiling:
        raise ResourceGuardError(f"tree enumeration limited to 1 <= n <= {ceiling}")
    if n in _POOL_CACHE:
        return _POOL_CACHE[n]
    level: dict[str, SignedGraph] = {
        tree_canonical_form(SignedGraph(1, ())): SignedGraph(1, ())
    }
    for k in range(2, n + 1):
        nxt: dict[str, SignedGraph] = {}
        for tree in level.values():
            for v in range(1, k):
                candidate = SignedGraph(k, tree.edges + ((v, k, 1),))
                key = tree_canonical_form(candidate)
                if key not in nxt:
                    nxt[key] = candidate
        level = nxt
    ordered = tuple(level[key] for key in sorted(level))
    pool = TreePool(n=n, trees=ordered)
    _POOL_CACHE[n] = pool
    return pool


def enumerate_signings(tree: SignedGraph) -> Iterator[SignedGraph]:
    """All 2^(n-1) signings of a tree, lazily, in sign-vector order."""
    if tree.m != tree.n - 1:
        raise PreconditionError("signing enumeration requires a tree")
    edges = tree.edges
    m = len(edges)
    for bits in range(1 << m):
        yield SignedGraph(
            tree.n,
            tuple(
                (u, v, -1 if bits >> i & 1 else 1)
                for i, (u, v, _) in enumerate(edges)
            ),
        )


def random_tree(n: int, rng: random.Random) -> SignedGraph:
    """Uniform labeled tree from a random Pruefer sequence, all +1 signs."""
    if n == 1:
        return SignedGraph(1, ())
    if n == 2:
        return SignedGraph(2, ((1, 2, 1),))
    seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
    return SignedGraph(n, tuple((u, v, 1) for u, v in decode_pruefer(seq)))


def decode_pruefer(seq: list[int]) -> list[tuple[int, int]]:
    """Edges of the labeled tree encoded by a Pruefer sequence on 1..n."""
    n = len(seq) + 2
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaf_heap = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaf_heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaf_heap, v)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((min(u, v), max(u, v)))
    return edges


def random_signing(tree: SignedGraph, rng: random.Random) -> SignedGraph:
    return SignedGraph(
        tree.n, tuple((u, v, rng.choice((1, -1))) for u, v, _ in tree.edges)
    )


# -- generalized-cospectral mate search ------------------------------------------


@dataclass(frozen=True)
class MateEntry:
    mate: SignedGraph
    recovery: Optional[QRecovery]
    classification: Optional[QClassification]


@dataclass(frozen=True)
class MateReport:
    query: SignedGraph
    mates: tuple[MateEntry, ...]
    candidates_scanned: int
    descriptor: str


def _structure_coordinates(g: SignedGraph):
    """Part-sorted block adjacency when bipartite with equal parts, else None."""
    try:
        b = bipartition(g)
    except Exception:
        return None
    if len(b.left) != len(b.right):
        return None
    return from_bipartite_adjacency(bipartite_adjacency(g, b)).adjacency()


def _recover_and_classify(g: SignedGraph, h: SignedGraph):
    """Q recovery for a generalized-cospectral pair.

    Performed in part-sorted coordinates when both graphs are bipartite
    with equal parts (so block tags line up with the structure theorem),
    in native vertex order otherwise.
    """
    a_blk, b_blk = _structure_coordinates(g), _structure_coordinates(h)
    if a_blk is not None and b_blk is not None:
        a, b, split = a_blk, b_blk, g.n // 2
    else:
        a, b, split = g.adjacency(), h.adjacency(), None
    if not (is_controllable(a) and is_controllable(b)):
        return None, None
    recovery = recover_q(a, b)
    return recovery, classify_q(recovery.q, split=split)


def _adjacency_charpoly_worker(args: tuple[int, tuple]) -> tuple:
    n, edges = args
    rows = [[0] * n for _ in range(n)]
    for u, v, s in edges:
        rows[u - 1][v - 1] = s
        rows[v - 1][u - 1] = s
    return tuple(kernels.charpoly_coeffs(rows))


def find_gc_mates(
    query: SignedGraph,
    pool: Iterable[SignedGraph],
    descriptor: str = "",
    jobs: int = 1,
) -> MateReport:
    """Generalized-cospectral, non-isomorphic members of the pool.

    Candidates are filtered by adjacency charpoly first (cheap reject,
    parallelized over `jobs` workers) and by the complement charpoly only
    on survivors.  Q is recovered and classified for each mate whenever
    both sides are controllable.
    """
    a = query.adjacency()
    phi = tuple(charpoly(a).coeffs)
    phi_comp = tuple(_complement_charpoly_worker((query.n, query.edges)))
    candidates = [g for g in pool if g.n == query.n]
    args = [(g.n, g.edges) for g in candidates]
    if jobs > 1 and len(args) >= 256:
        with multiprocessing.Pool(jobs) as workers:
            adjacency_polys = workers.map(_adjacency_charpoly_worker, args, chunksize=256)
    else:
        adjacency_polys = [_adjacency_charpoly_worker(arg) for arg in args]
    mates = []
    for candidate, poly in zip(candidates, adjacency_polys):
        if poly != phi:
            continue
        if tuple(_complement_charpoly_worker((candidate.n, candidate.edges))) != phi_comp:
            continue
        if are_isomorphic(query, candidate) is not None:
            continue
        recovery, classification = _recover_and_classify(query, candidate)
        mates.append(MateEntry(mate=candidate, recovery=recovery, classification=classification))
    return MateReport(
        query=query,
        mates=tuple(mates),
        candidates_scanned=len(candidates),
        descriptor=descriptor or f"pool of {len(candidates)} signed graphs",
    )


def all_signed_trees(n: int, ceiling: int = TREE_CEILING_DEFAULT) -> Iterator[SignedGraph]:
    """Every signing of every free tree on n vertices."""
    for tree in enumerate_trees(n, ceiling=ceiling).trees:
        yield from enumerate_signings(tree)


# -- exhaustive spectral-determinacy confirmation ----------------------------------


@dataclass(frozen=True)
class GcPairRecord:
    """A generalized-cospectral pair met during the exhaustive check."""

    first: SignedGraph
    second: SignedGraph
    isomorphic: bool
    recovery_valid: Optional[bool]
    block_structure: Optional[bool]  # block or anti-block in part-sorted order


@dataclass(frozen=True)
class ExhaustiveCheckReport:
    tree: SignedGraph
    n: int
    ok: bool
    counterexamples: tuple[tuple[SignedGraph, SignedGraph], ...]
    candidate_trees: int
    signings_scanned: int
    spectrum_groups: int
    gc_pairs: tuple[GcPairRecord, ...]


def _complement_charpoly_worker(args: tuple[int, tuple]) -> tuple:
    n, edges = args
    rows = [[0] * n for _ in range(n)]
    for u, v, s in edges:
        rows[u - 1][v - 1] = s
        rows[v - 1][u - 1] = s
    comp = [
        [(0 if i == j else 1) - rows[i][j] for j in range(n)] for i in range(n)
    ]
    return tuple(kernels.charpoly_coeffs(comp))


def _complement_spectra(graphs: list[SignedGraph], jobs: int) -> list[tuple]:
    args = [(g.n, g.edges) for g in graphs]
    if jobs <= 1 or len(args) < 64:
        return [_complement_charpoly_worker(a) for a in args]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(_complement_charpoly_worker, args, chunksize=64)


def _group_by_spectrum(graphs: list[SignedGraph], spectra: list[tuple]) -> dict:
    groups: dict[tuple, list[SignedGraph]] = {}
    for g, spec in zip(graphs, spectra):
        groups.setdefault(spec, []).append(g)
    return groups


def _check_spectrum_groups(groups: dict) -> tuple[bool, list]:
    """Every group must be isomorphism-homogeneous (one canonical form)."""
    counterexamples = []
    for members in groups.values():
        if len(members) < 2:
            continue
        by_form: dict[str, SignedGraph] = {}
        for g in members:
            by_form.setdefault(tree_canonical_form(g), g)
        if len(by_form) > 1:
            reps = list(by_form.values())
            counterexamples.append((reps[0], reps[1]))
    return not counterexamples, counterexamples


def _structure_records(groups: dict) -> list[GcPairRecord]:
    records = []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                g, h = members[i], members[j]
                iso = are_isomorphic(g, h) is not None
                recovery, classification = _recover_and_classify(g, h)
                if recovery is None:
                    records.append(
                        GcPairRecord(g, h, iso, recovery_valid=None, block_structure=None)
                    )
                    continue
                block = None
                if classification.block_diagonal is not None:
                    block = bool(
                        classification.block_diagonal or classification.anti_block_diagonal
                    )
                records.append(
                    GcPairRecord(
                        g,
                        h,
                        iso,
                        recovery_valid=recovery.valid,
                        block_structure=block,
                    )
                )
    return records


def exhaustive_dgs_check(
    tree: SignedGraph,
    jobs: int = 1,
    max_n: int = 10,
    structure_records: bool = True,
) -> ExhaustiveCheckReport:
    """Confirm a certified tree against every signed tree of its order.

    Candidates are restricted to trees cospectral with the input (all
    signings of a tree share its adjacency charpoly, so nothing else can
    be generalized cospectral with a signing of it); their signings are
    bucketed by complement charpoly and every bucket must consist of
    pairwise-isomorphic signed trees.
    """
    cert = certify_tree(tree)
    if not cert.certified:
        raise PreconditionError(f"tree is not certified ({cert.verdict})")
    n = tree.n
    if n > max_n:
        raise ResourceGuardError(f"exhaustive check limited to n <= {max_n}")
    pool = enumerate_trees(n)
    phi = cert.charpoly
    candidates = [t for t in pool.trees if charpoly(t.adjacency()) == phi]
    signings: list[SignedGraph] = []
    for t in candidates:
        signings.extend(enumerate_signings(t))
    spectra = _complement_spectra(signings, jobs)
    groups = _group_by_spectrum(signings, spectra)
    ok, counterexamples = _check_spectrum_groups(groups)
    records = tuple(_structure_records(groups)) if structure_records else ()
    return ExhaustiveCheckReport(
        tree=tree,
        n=n,
        ok=ok,
        counterexamples=tuple(counterexamples),
        candidate_trees=len(candidates),
        signings_scanned=len(signings),
        spectrum_groups=len(groups),
        gc_pairs=records,
    )


def find_trees_with_charpoly(n: int, phi: IntPolynomial, ceiling: int = TREE_CEILING_DEFAULT) -> list[SignedGraph]:
    """Pool members whose (all-positive) adjacency charpoly equals phi."""
    pool = enumerate_trees(n, ceiling=ceiling)
    return [t for t in pool.trees if charpoly(t.adjacency()) == phi]
