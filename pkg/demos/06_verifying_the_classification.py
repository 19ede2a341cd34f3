"""Mini sweeps reproducing the classification pattern at small orders.

Cyclic groups never admit an NNN digraph; dihedral groups of order 2n do
exactly when n >= 6 is even and n != 8.  The full verification (through
group order 16) lives in the acceptance tests and the `caynorm verify`
command; this demo reruns the pattern where it is cheap to watch.
"""

import io

from caynorm import GroupSpec, connection_orbit_reps, sweep, sweep_summary, write_jsonl

print("cyclic groups: no NNN digraph")
for n in (4, 6, 8):
    records = sweep(GroupSpec.cyclic(n))
    s = sweep_summary(records)
    print(f"  C{n}: {s['records']} sets, {s['normal']} normal, {s['nnn']} NNN")

print("\ndihedral groups: NNN appears first at n = 6")
for n in (2, 3, 6):
    records = sweep(GroupSpec.dihedral(n), mode="graph")
    s = sweep_summary(records)
    print(f"  D{2*n} graphs: {s['records']} sets, {s['nnn']} NNN")

# Orbit reduction: relabeling by a group automorphism is an isomorphism,
# so sweeping one representative per orbit loses nothing.
G = GroupSpec.dihedral(8)
reps = connection_orbit_reps(G)
print(f"\nD16 digraph sweep: {1 << 15} sets reduce to {len(reps)} orbit representatives")

# Sweep output is JSON lines with a trailing summary; byte-identical for
# any worker count.
buf = io.StringIO()
write_jsonl(sweep(GroupSpec.cyclic(5)), buf)
print("\nJSONL for C5 (first and last lines):")
lines = buf.getvalue().strip().split("\n")
print("  ", lines[0])
print("  ", lines[-1])
