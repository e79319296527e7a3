"""
Orbits on the odd quadric
=========================

Walk through the admissible pairs for B3 with the first node, the way the
orbits are built, and how the minimal parabolic operators move between them.
"""

from hermsym import orbits as O
from hermsym.poset import hasse
from hermsym.rootsys import setting

par = setting("B", 3)
sys = par.system

# the grid Psi, in the order used everywhere else
print("Psi:", [sys.e_label(r) for r in par.psi])

# every orbit is a pair (v, S): v is a saturated subset of Psi, S an orthogonal subset of it
pairs = O.enumerate_pairs(par)
print(len(pairs), "orbits")
for p in pairs[:6]:
    print("  ", p)

# pick the orbit with the largest v and one root, and look at each simple root
p = next(q for q in reversed(pairs) if len(q.s) == 1)
print("\nstarting from", p)
for a in range(sys.rank):
    case = O.classify(a, p)
    print(f"  alpha_{a + 1}: {case.label:28s} ->", O.m_alpha(a, p))

# the closed order and its Hasse diagram
rel = O.closed_order(par)
edges = hasse(rel)
print("\nHasse diagram has", len(edges), "edges")
top = pairs[rel.maximal()[0]]
print("open orbit:", top, "with S =", [sys.e_label(r) for r in top.roots()])

# the closed form agrees with the fixpoint definition
assert (rel.leq == O.standard_order_oracle(par).leq).all()
print("closed order matches the fixpoint oracle")
