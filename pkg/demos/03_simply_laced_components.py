"""
Two components in the simply laced case
=======================================

When Property unic holds the maximum-rank orbits carry a second local
system, and the G-order splits into the trivial part and a copy of the
maximum-rank part of the orbit order.
"""

import numpy as np

from hermsym import locsys as L
from hermsym import orbits as O
from hermsym.rootsys import property_unic, setting

for t, r, node in [("A", 3, 2), ("D", 4, 1), ("A", 4, 2)]:
    par = setting(t, r, node)
    D = L.enumerate_D(par)
    print(f"{par.label}: unic={property_unic(par)}, {len(O.enumerate_pairs(par))} orbits, |D|={len(D)}")
    if not property_unic(par):
        continue
    p0 = O.minimal_max_rank(par)
    print("  minimal maximum-rank orbit:", p0, [par.system.e_label(r) for r in p0.roots()])
    comps = L.gorder_hasse_components(par)
    print("  components:", [len(c) for c in comps])

    # the non-trivial block is ordered exactly like the maximum-rank orbits
    rel = L.gorder_fixpoint(par)
    nt = [i for i, d in enumerate(D) if d.nontrivial]
    idx = [O.pair_index(D[i].pair) for i in nt]
    orb = O.closed_order(par).leq
    assert np.array_equal(rel.leq[np.ix_(nt, nt)], orb[np.ix_(idx, idx)])
    print("  non-trivial block matches the orbit order")
