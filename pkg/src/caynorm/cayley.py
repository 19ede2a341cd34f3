"""Cayley digraphs Cay(G, S): construction, connectivity and local edge structure.

The digraph on G with connection set S has an arc from u to s*u for every
u in G and s in S.  Right translations x -> x*g map arcs to arcs, so the
right regular representation always acts as automorphisms.  Adjacency is
stored as one bit row per source vertex for fast row intersection.
"""

from __future__ import annotations

from .groups import GroupSpec


class Digraph:
    """A digraph on vertices 0..n-1 with bitmask adjacency rows.

    rows_out[u] has bit v set iff there is an arc u -> v; rows_in is the
    transpose.  Instances are immutable after construction.
    """

    __slots__ = ("n", "rows_out", "rows_in")

    def __init__(self, n: int, rows_out: list[int]):
        if n < 1:
            raise ValueError("digraph needs at least one vertex")
        if len(rows_out) != n:
            raise ValueError("one adjacency row per vertex required")
        self.n = n
        self.rows_out = list(rows_out)
        rows_in = [0] * n
        for u, row in enumerate(self.rows_out):
            if row >> n:
                raise ValueError(f"row {u} addresses vertices beyond {n - 1}")
            m = row
            while m:
                low = m & -m
                rows_in[low.bit_length() - 1] |= 1 << u
                m ^= low
        self.rows_in = rows_in

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            rows[u] |= 1 << v
        return cls(n, rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows_out[u] >> v & 1)

    def out_neighbors(self, u: int) -> list[int]:
        return _bits(self.rows_out[u])

    def in_neighbors(self, u: int) -> list[int]:
        return _bits(self.rows_in[u])

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows_out[u])]

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.rows_out)

    def is_symmetric(self) -> bool:
        return self.rows_out == self.rows_in

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.rows_out == other.rows_out
        )

    def __hash__(self):
        return hash((self.n, tuple(self.rows_out)))


class CayleyDigraph(Digraph):
    """Cay(G, S) on element codes, with the group and sorted connection set attached."""

    __slots__ = ("group", "connection")

    def __init__(self, group: GroupSpec, connection: tuple[int, ...], rows_out: list[int]):
        super().__init__(group.order, rows_out)
        self.group = group
        self.connection = connection

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "set": list(self.connection)}


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build(G: GroupSpec, S) -> CayleyDigraph:
    """Build Cay(G, S); the identity must not be in S (no loops)."""
    codes = sorted(set(S))
    for c in codes:
        G.check_code(c)
    if codes and codes[0] == 0:
        raise ValueError("connection set must not contain the identity")
    order = G.order
    rows = [0] * order
    for u in range(order):
        row = 0
        for s in codes:
            row |= 1 << G.mul(s, u)
        rows[u] = row
    return CayleyDigraph(G, tuple(codes), rows)


def generated_subgroup(G: GroupSpec, S) -> set[int]:
    """Element codes of the subgroup of G generated by S."""
    seen = {0}
    frontier = [0]
    codes = sorted(set(S))
    while frontier:
        x = frontier.pop()
        for s in codes:
            y = G.mul(x, s)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def is_connected(dg: CayleyDigraph) -> bool:
    """True iff the connection set generates the group.

    Cross-validated against weak connectivity of the adjacency structure;
    the two can only disagree on an engine bug.
    """
    by_generation = len(generated_subgroup(dg.group, dg.connection)) == dg.n
    # weak connectivity: breadth-first over arcs in both directions from vertex 0
    reach = 1
    frontier = 1
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            v = low.bit_length() - 1
            grow |= dg.rows_out[v] | dg.rows_in[v]
            m ^= low
        frontier = grow & ~reach
        reach |= grow
    by_reach = reach == (1 << dg.n) - 1
    if by_generation != by_reach:
        raise RuntimeError("subgroup generation and weak connectivity disagree")
    return by_generation


def is_graph(G: GroupSpec, S) -> bool:
    """True iff S is inverse closed, i.e. the digraph is a graph."""
    codes = set(S)
    return all(G.inv(c) in codes for c in codes)


def count_4cycles_through_edge(dg: Digraph, u: int, v: int) -> int:
    """Number of 4-cycles through the edge {u, v}, counted by vertex set.

    Requires arcs in both directions between u and v; cycles are geometric
    (each 4-element vertex set carrying a closed 4-walk through the edge
    counts once).
    """
    if not (dg.has_arc(u, v) and dg.has_arc(v, u)):
        raise ValueError(f"{{{u}, {v}}} is not an edge (arcs must exist both ways)")
    mutual = [dg.rows_out[x] & dg.rows_in[x] for x in range(dg.n)]
    exclude_uv = (1 << u) | (1 << v)
    found = set()
    for w in _bits(mutual[v] & ~exclude_uv):
        for z in _bits(mutual[w] & mutual[u] & ~exclude_uv & ~(1 << w)):
            found.add(frozenset((u, v, w, z)))
    return len(found)


def edge_list_lines(dg: Digraph) -> list[str]:
    """One "u v" line per arc, vertices as element codes."""
    return [f"{u} {v}" for u, v in dg.arcs()]
