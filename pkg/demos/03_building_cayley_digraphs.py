"""Building Cayley digraphs and reading off their elementary structure."""

from caynorm import (
    GroupSpec,
    build,
    count_4cycles_through_edge,
    edge_list_lines,
    is_connected,
    is_graph,
    nnn_connection_set,
)

# Cay(G, S) has an arc u -> s*u for every vertex u and connection s.
c4 = GroupSpec.cyclic(4)
directed = build(c4, [1])
print("Cay(C4, {a}) arcs:", directed.arcs(), " symmetric:", directed.is_symmetric())

undirected = build(c4, [1, 3])
print("Cay(C4, {a, a^-1}) symmetric:", undirected.is_symmetric())

# Connectivity is subgroup generation: <S> = G.
print("\nCay(C4, {a^2}) connected:", is_connected(build(c4, [2])))
d12 = GroupSpec.dihedral(6)
nnn6 = build(d12, nnn_connection_set(6))
print("canonical NNN graph on D12 connected:", is_connected(nnn6))
print("its connection set is inverse closed:", is_graph(d12, nnn6.connection))
print("out-degrees:", sorted({row.bit_count() for row in nnn6.rows_out}))

# Local structure: 4-cycles through an edge separate the rotation edges
# from the reflection edges in the even-branch construction.
d24 = GroupSpec.dihedral(12)
nnn12 = build(d24, nnn_connection_set(12))
print("\nn=12 construction:")
print("  4-cycles through the edge {1, a}:", count_4cycles_through_edge(nnn12, 0, 1))
print("  4-cycles through the edge {1, b}:", count_4cycles_through_edge(nnn12, 0, 12))

# Digraphs can be exported as a plain arc list for external tools.
print("\nedge list of Cay(C4, {a}):")
for line in edge_list_lines(directed):
    print("  ", line)
print("JSON form:", directed.to_json())
