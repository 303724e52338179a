"""Independent brute-force ground truth for small grids.

Everything here works from breadth-first-search distances over the explicit
neighbor lists, never from the closed-form metric, so results can be used
to validate the closed forms and the constructed landmark sets.

The subset searches enumerate candidates in canonical lexicographic order
and prune a candidate the moment some vertex pair is left unresolved; pairs
are scanned hardest-first (fewest resolvers first), which lets scans of
tens of millions of candidates finish in minutes.  Budgets are enforced up
front: a level of the search is never started unless its full candidate
count fits, so a call either completes or fails fast with
:class:`~stargrid.errors.BudgetError` -- it never returns a wrong answer.

Enumeration order is a deterministic contract: for a fixed instance the
reported dimension, witness, and basis list are identical run to run (and
would be for any partitioning of the scan, since the aggregation is a
minimum over a fixed order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import BudgetError, InputError
from .grid import Cell, Col, GridGraph, Row, transpose
from .resolve import ResolvingSet, is_resolving


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the exhaustive searches.

    ``max_candidates`` bounds the cumulative number of subsets a single
    call may enumerate, estimated before each level starts.
    ``use_symmetry`` lets full all-fail levels skip subsets that a row or
    column swap maps to something lexicographically smaller; the final
    witness level always rescans unreduced, so results are identical either
    way.
    """

    max_subset_size: int = 16
    max_candidates: int = 10_000_000
    use_symmetry: bool = False


DEFAULT_BUDGET = SearchBudget()


class SimpleGraph:
    """Minimal adjacency-list host for the adjacency-dimension search."""

    def __init__(self, n_vertices: int, edges):
        self.n = n_vertices
        self._adj: list[set[int]] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices) or u == v:
                raise InputError(f"bad edge ({u}, {v})")
            self._adj[u].add(v)
            self._adj[v].add(u)

    @classmethod
    def path(cls, order: int) -> "SimpleGraph":
        return cls(order, [(i, i + 1) for i in range(order - 1)])

    @classmethod
    def cycle(cls, order: int) -> "SimpleGraph":
        return cls(order, [(i, (i + 1) % order) for i in range(order)])

    @classmethod
    def star(cls, leaves: int) -> "SimpleGraph":
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    def vertices(self) -> list[int]:
        return list(range(self.n))

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def is_adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]


def bfs_distances(g: GridGraph, cap: int = 2000) -> np.ndarray:
    """All-pairs hop counts by BFS over ``g.neighbors`` only.

    Returns an (N, N) uint8 table in canonical vertex order.  Refuses
    graphs with more than ``cap`` vertices.
    """
    total = g.vertex_count()
    if total > cap:
        raise BudgetError(f"grid has {total} vertices, BFS cap is {cap}")
    adj: list[list[int]] = [
        [g.index_of(w) for w in g.neighbors(v)] for v in g.vertices()
    ]
    table = np.empty((total, total), dtype=np.uint8)
    for src in range(total):
        dist = [255] * total
        dist[src] = 0
        frontier = [src]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if dist[w] == 255:
                        dist[w] = level
                        nxt.append(w)
            frontier = nxt
        table[src] = dist
    return table


def _pair_masks(dist: np.ndarray) -> tuple[int, ...]:
    """One bitmask per vertex pair: which vertices tell the pair apart.

    Sorted so the pairs with the fewest resolvers come first; scanning in
    this fixed order lets almost every failing candidate die on its first
    few checks.
    """
    total = dist.shape[0]
    masks: list[tuple[int, int, int]] = []
    for x in range(total):
        row_x = dist[x]
        for y in range(x + 1, total):
            differs = np.packbits(row_x != dist[y], bitorder="little").tobytes()
            mask = int.from_bytes(differs, "little")
            masks.append((mask.bit_count(), len(masks), mask))
    masks.sort()
    return tuple(m for _, _, m in masks)


def _gate(budget: SearchBudget, planned: int, context: str) -> None:
    if planned > budget.max_candidates:
        raise BudgetError(
            f"{context} needs up to {planned} candidates, "
            f"budget allows {budget.max_candidates}"
        )


def _first_resolving(indices, k: int, pair_masks) -> tuple[int, ...] | None:
    """First k-subset of ``indices`` (lexicographic order) that splits
    every pair, or None."""
    bit_of = {i: 1 << i for i in indices}
    index_of_bit = {b: i for i, b in bit_of.items()}
    bits = [bit_of[i] for i in indices]
    masks = pair_masks
    for combo in itertools.combinations(bits, k):
        subset = 0
        for b in combo:
            subset |= b
        for pm in masks:
            if not subset & pm:
                break
        else:
            return tuple(index_of_bit[b] for b in combo)
    return None


def _symmetry_index_maps(g: GridGraph) -> list[list[int]]:
    """Canonical-index permutations generating the grid's automorphisms:
    adjacent row swaps, adjacent column swaps, and the diagonal flip when
    the grid is square."""
    maps: list[list[int]] = []
    verts = g.vertices()

    def as_map(vertex_map) -> list[int]:
        return [g.index_of(vertex_map(v)) for v in verts]

    for a in range(1, g.m):
        def swap_rows(v, a=a):
            if isinstance(v, Row) and v.i in (a, a + 1):
                return Row(a + 1 if v.i == a else a)
            if isinstance(v, Cell) and v.i in (a, a + 1):
                return Cell(a + 1 if v.i == a else a, v.j)
            return v
        maps.append(as_map(swap_rows))
    for b in range(1, g.n):
        def swap_cols(v, b=b):
            if isinstance(v, Col) and v.j in (b, b + 1):
                return Col(b + 1 if v.j == b else b)
            if isinstance(v, Cell) and v.j in (b, b + 1):
                return Cell(v.i, b + 1 if v.j == b else b)
            return v
        maps.append(as_map(swap_cols))
    if g.m == g.n:
        maps.append(as_map(transpose))
    return maps


def _level_all_fail(indices, k: int, pair_masks, perms) -> bool:
    """True when no k-subset resolves; may skip subsets that some generator
    maps to a lexicographically smaller subset (each orbit keeps at least
    its minimum, so a resolving subset cannot be missed)."""
    bits = [1 << i for i in indices]
    perm_bits = [{1 << i: 1 << p[i] for i in indices} for p in perms]
    masks = pair_masks
    for combo in itertools.combinations(bits, k):
        subset = 0
        for b in combo:
            subset |= b
        skip = False
        for pb in perm_bits:
            image = 0
            for b in combo:
                image |= pb[b]
            if image < subset:
                skip = True
                break
        if skip:
            continue
        for pm in masks:
            if not subset & pm:
                break
        else:
            return False
    return True


def brute_force_dimension(
    g: GridGraph, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[int, ResolvingSet]:
    """Smallest k admitting a resolving k-subset, plus the first witness.

    Ascending-k exhaustive search in canonical order; the witness is the
    lexicographically first resolving subset at the minimal size and is
    re-checked with :func:`stargrid.resolve.is_resolving` before return.
    """
    dist = bfs_distances(g)
    total = g.vertex_count()
    pair_masks = _pair_masks(dist)
    perms = _symmetry_index_maps(g) if budget.use_symmetry else []
    planned = 0
    all_indices = range(total)
    for k in range(1, min(total, budget.max_subset_size) + 1):
        planned += comb(total, k)
        _gate(budget, planned, f"dimension search on ({g.m}, {g.n}) at size {k}")
        if budget.use_symmetry and _level_all_fail(all_indices, k, pair_masks, perms):
            continue
        combo = _first_resolving(all_indices, k, pair_masks)
        if combo is not None:
            witness = ResolvingSet(
                tuple(g.vertex_at(i) for i in combo), verified=False, provenance="oracle"
            )
            if not is_resolving(g, witness):
                raise RuntimeError("internal error: oracle witness fails is_resolving")
            return k, ResolvingSet(witness.landmarks, verified=True, provenance="oracle")
    raise BudgetError(
        f"no resolving set of size <= {budget.max_subset_size} on ({g.m}, {g.n})"
    )


def iter_minimum_bases(g: GridGraph, k: int, budget: SearchBudget = DEFAULT_BUDGET):
    """Yield every resolving k-subset in canonical order (streaming form of
    :func:`enumerate_minimum_bases`)."""
    if k < 1:
        raise InputError("subset size must be >= 1")
    dist = bfs_distances(g)
    total = g.vertex_count()
    _gate(budget, comb(total, k), f"basis enumeration on ({g.m}, {g.n}) at size {k}")
    pair_masks = _pair_masks(dist)
    bits = [1 << i for i in range(total)]
    index_of_bit = {b: i for i, b in enumerate(bits)}
    for combo in itertools.combinations(bits, k):
        subset = 0
        for b in combo:
            subset |= b
        for pm in pair_masks:
            if not subset & pm:
                break
        else:
            yield ResolvingSet(
                tuple(g.vertex_at(index_of_bit[b]) for b in combo),
                verified=True,
                provenance="oracle",
            )


def enumerate_minimum_bases(
    g: GridGraph, k: int, budget: SearchBudget = DEFAULT_BUDGET
) -> list[ResolvingSet]:
    """All resolving k-subsets in canonical order.

    The caller supplies k (normally the result of
    :func:`brute_force_dimension`); the scan itself certifies every member
    by the full pair check.
    """
    return list(iter_minimum_bases(g, k, budget))


def brute_force_adjacency_dimension(host, budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """Smallest k admitting an adjacency-resolving k-subset of the host.

    Convention: the empty set never counts, so a one-vertex host has
    adjacency dimension 1.  Hosts need ``vertices()`` and ``is_adjacent``;
    truncated codes only see self (0), adjacent (1), or other (2), so no
    distances are required.
    """
    verts = list(host.vertices())
    total = len(verts)
    adj_mask = []
    for v in verts:
        mask = 0
        for j, w in enumerate(verts):
            if v != w and host.is_adjacent(v, w):
                mask |= 1 << j
        adj_mask.append(mask)
    bits = [1 << i for i in range(total)]
    planned = 0
    for k in range(1, min(total, budget.max_subset_size) + 1):
        planned += comb(total, k)
        _gate(budget, planned, f"adjacency-dimension search at size {k}")
        for combo in itertools.combinations(range(total), k):
            smask = 0
            for i in combo:
                smask |= bits[i]
            seen = set()
            ok = True
            for v in range(total):
                if bits[v] & smask:
                    continue  # landmarks carry a unique 0 entry
                sig = adj_mask[v] & smask
                if sig in seen:
                    ok = False
                    break
                seen.add(sig)
            if ok:
                return k
    raise BudgetError(
        f"no adjacency resolving set of size <= {budget.max_subset_size}"
    )


def exists_hub_free_basis(
    g: GridGraph, k: int, budget: SearchBudget = DEFAULT_BUDGET
) -> bool:
    """Is there a resolving k-subset avoiding the hub?

    Scans hub-free subsets in canonical order and stops at the first hit.
    """
    if k < 1:
        raise InputError("subset size must be >= 1")
    dist = bfs_distances(g)
    total = g.vertex_count()
    _gate(budget, comb(total - 1, k), f"hub-free search on ({g.m}, {g.n}) at size {k}")
    pair_masks = _pair_masks(dist)
    return _first_resolving(range(1, total), k, pair_masks) is not None
