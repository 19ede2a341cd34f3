"""Digraph automorphism groups by refinement-and-individualization backtracking.

The search refines an ordered partition to its coarsest equitable
refinement, individualizes the vertices of the first non-singleton cell,
and recurses.  Automorphisms appear as leaves aligned with the reference
(leftmost) leaf; the group order is the product of base-point orbit sizes
along the leftmost path, so factorial-size groups are never enumerated.
A factorial brute-force oracle covers digraphs on up to 8 vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cayley import CayleyDigraph, Digraph
from .groups import right_regular
from .perm import Perm

MAX_SEARCH_VERTICES = 64
MAX_BRUTE_VERTICES = 8

JSON_INT_LIMIT = 1 << 53


@dataclass(frozen=True)
class AutResult:
    """Generators and exact order of a digraph automorphism group."""

    generators: tuple[Perm, ...]
    order: int

    def to_json(self) -> dict:
        order = self.order if self.order < JSON_INT_LIMIT else str(self.order)
        return {"order": order, "generators": [list(g) for g in self.generators]}


def unit_partition(n: int) -> list[list[int]]:
    return [list(range(n))]


def is_discrete(cells: list[list[int]]) -> bool:
    return all(len(c) == 1 for c in cells)


def partition_is_valid(cells, n: int) -> bool:
    seen = sorted(v for c in cells for v in c)
    return all(cells) and seen == list(range(n))


def refine(dg: Digraph, cells) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    A partition is equitable when every vertex of a cell has the same
    number of out- and in-neighbors in every cell.  Splitting is
    deterministic: cells are cut by (out-count, in-count) signature with
    fragments ordered by ascending signature, restarting after each pass
    that split something.
    """
    rows_out = dg.rows_out
    rows_in = dg.rows_in
    cells = [list(c) for c in cells]
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        changed = False
        for w in masks:
            new_cells = []
            for c in cells:
                if len(c) == 1:
                    new_cells.append(c)
                    continue
                groups: dict[tuple[int, int], list[int]] = {}
                for v in c:
                    key = ((rows_out[v] & w).bit_count(), (rows_in[v] & w).bit_count())
                    bucket = groups.get(key)
                    if bucket is None:
                        groups[key] = [v]
                    else:
                        bucket.append(v)
                if len(groups) == 1:
                    new_cells.append(c)
                else:
                    changed = True
                    for key in sorted(groups):
                        new_cells.append(groups[key])
            cells = new_cells
            if changed:
                break
        if not changed:
            return cells


def _individualize(cells, index: int, v: int) -> list[list[int]]:
    cell = cells[index]
    rest = [x for x in cell if x != v]
    return cells[:index] + [[v], rest] + cells[index + 1 :]


def _shape(cells) -> tuple[int, ...]:
    return tuple(len(c) for c in cells)


def _first_big_cell(cells) -> int:
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return -1


def _preserves_arcs(rows_out, g) -> bool:
    for x, row in enumerate(rows_out):
        image = 0
        m = row
        while m:
            low = m & -m
            image |= 1 << g[low.bit_length() - 1]
            m ^= low
        if image != rows_out[g[x]]:
            return False
    return True


def _orbit_of(v: int, gens) -> set[int]:
    seen = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _search_one(dg, cells, cell_index, u, depth, shapes, ref_leaf):
    """Depth-first hunt for one automorphism below (cells with u individualized).

    Prunes on any divergence from the reference path's partition shapes;
    within matching shapes, singleton cells correspond positionally, so a
    leaf aligned with the reference leaf yields a candidate permutation
    fixing all earlier base points and mapping the depth-th base point to u.
    """
    n = dg.n
    rows_out = dg.rows_out
    leaf_depth = len(shapes) - 1

    def descend(cur, d):
        if _shape(cur) != shapes[d]:
            return None
        if d == leaf_depth:
            cand = [0] * n
            for pos in range(n):
                cand[ref_leaf[pos]] = cur[pos][0]
            if _preserves_arcs(rows_out, cand):
                return tuple(cand)
            return None
        idx = _first_big_cell(cur)
        for w in cur[idx]:
            hit = descend(refine(dg, _individualize(cur, idx, w)), d + 1)
            if hit is not None:
                return hit
        return None

    return descend(refine(dg, _individualize(cells, cell_index, u)), depth + 1)


def automorphism_group(dg: Digraph, seeds=None) -> AutResult:
    """Generators and exact order of the full automorphism group.

    For Cayley digraphs the search is seeded with the right regular
    representation, whose guaranteed automorphisms collapse the leaf count.
    Extra seeds must be automorphisms; they are validated.
    """
    n = dg.n
    if n > MAX_SEARCH_VERTICES:
        raise ValueError(f"{n} vertices exceeds the {MAX_SEARCH_VERTICES}-vertex search cap")
    rows_out = dg.rows_out

    gens: list[tuple[int, ...]] = []
    seed_perms = list(seeds) if seeds is not None else []
    if isinstance(dg, CayleyDigraph):
        seed_perms.extend(right_regular(dg.group).generators)
    for p in seed_perms:
        t = tuple(p)
        if len(t) != n or not _preserves_arcs(rows_out, t):
            raise ValueError("seed permutation is not an automorphism")
        if any(t[i] != i for i in range(n)):
            gens.append(t)

    # reference (leftmost) path: base points, target cells and shapes
    cells = refine(dg, unit_partition(n))
    shapes = [_shape(cells)]
    levels: list[tuple[list[list[int]], int, int]] = []
    while not is_discrete(cells):
        idx = _first_big_cell(cells)
        v = cells[idx][0]
        levels.append((cells, idx, v))
        cells = refine(dg, _individualize(cells, idx, v))
        shapes.append(_shape(cells))
    ref_leaf = [c[0] for c in cells]

    # deepest level first: generators found there fix every shorter prefix
    order = 1
    for i in range(len(levels) - 1, -1, -1):
        cells_i, idx, v = levels[i]
        prefix = [levels[j][2] for j in range(i)]
        stab = [g for g in gens if all(g[p] == p for p in prefix)]
        orb = _orbit_of(v, stab)
        for u in cells_i[idx]:
            if u in orb:
                continue
            found = _search_one(dg, cells_i, idx, u, i, shapes, ref_leaf)
            if found is not None:
                gens.append(found)
                stab.append(found)
                orb = _orbit_of(v, stab)
        order *= len(orb)

    unique = sorted(set(gens))
    return AutResult(tuple(Perm._trusted(g) for g in unique), order)


@lru_cache(maxsize=4)
def _all_perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8)


def brute_force_aut(dg: Digraph) -> AutResult:
    """Filter all degree! permutations for arc preservation.

    Correctness oracle for the backtracking search; the full element list
    is returned as the generator list.
    """
    n = dg.n
    if n > MAX_BRUTE_VERTICES:
        raise ValueError(f"{n} vertices exceeds the {MAX_BRUTE_VERTICES}-vertex brute-force cap")
    perms = _all_perms(n)
    adj = np.zeros((n, n), dtype=bool)
    for u in range(n):
        row = dg.rows_out[u]
        for v in range(n):
            adj[u, v] = bool(row >> v & 1)
    keep = np.ones(len(perms), dtype=bool)
    for u, v in dg.arcs():
        keep &= adj[perms[:, u], perms[:, v]]
    elements = [Perm._trusted(tuple(int(x) for x in p)) for p in perms[keep]]
    return AutResult(tuple(elements), len(elements))
