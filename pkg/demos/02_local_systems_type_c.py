"""
Local systems in type C and sign sequences
==========================================

In type C a local system on an orbit is a sign for each long root of S.
The G-order splits into components, one for each reduced sign sequence.
"""

from collections import Counter

from hermsym import locsys as L
from hermsym import orbits as O
from hermsym.rootsys import setting
from hermsym.sequences import normalize, reduce

par = setting("C", 3)
D = L.enumerate_D(par)
print(len(O.enumerate_pairs(par)), "orbits carry", len(D), "local systems")

# counts per orbit: closed form against the torsion of the weight lattice
for p in O.enumerate_pairs(par)[-4:]:
    print(f"  {p}: {L.count_local_systems_closed(p)} (lattice {L.count_local_systems_lattice(p)})")

# reduced forms of the sign sequences
classes = Counter(reduce(d.sequence) for d in D)
for key, n in sorted(classes.items(), key=lambda kv: (len(kv[0]), kv[0])):
    print(f"  reduced form {key}: {n} elements")

# compare with the weakly connected pieces of the computed order
comps = L.gorder_hasse_components(par)
print(len(comps), "Hasse components, sizes", sorted(len(c) for c in comps))
assert sorted(map(sorted, comps)) == sorted(map(sorted, L.gorder_components_C(par)))

# normal forms are a canonical representative inside each length
for X in [(1, 1, -1), (-1, -1, 1), (-1, 1, -1)]:
    print(f"  {X} -> reduced {reduce(X)}, normal {normalize(X)}")
