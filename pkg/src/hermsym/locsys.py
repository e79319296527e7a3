"""Rank-one equivariant local systems on the orbits and the Bruhat G-order.

Characters are stored as a triviality bit in types A, B, D, E and as a sign
per long root of S in type C.  Type C signs are keyed by Psi-index and read
in the canonical Psi order, which lists 2e_n, 2e_{n-1}, ..., 2e_1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import sequences
from .lattice import torsion_order
from .orbits import (AdmissiblePair, bruhat_leq_pairs, classify, closed_order,
                     enumerate_pairs, m_alpha, max_H, pair_index)
from .poset import OrderRelation, hasse_matrix, transitive_closure, weak_components
from .rootsys import ParabolicData, property_unic
from .weyl import apply, reflection, wp_leq


@dataclass(frozen=True)
class DElement:
    """An orbit together with one isomorphism class of local systems on it."""

    pair: AdmissiblePair
    nontrivial: bool = False
    signs: tuple[tuple[int, int], ...] = ()

    @property
    def is_trivial(self) -> bool:
        return not self.nontrivial and all(s == 1 for _, s in self.signs)

    @property
    def sequence(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.signs)

    def __repr__(self) -> str:
        if self.signs:
            return f"D{self.pair!r}{list(self.sequence)}"
        return f"D{self.pair!r}{'*' if self.nontrivial else ''}"


def _type(par: ParabolicData) -> str:
    return par.system.type_label


def long_roots_of(p: AdmissiblePair) -> tuple[int, ...]:
    par = p.parabolic
    return tuple(i for i in p.s if par.psi[i].long and not par.system.simply_laced)


def count_local_systems_closed(p: AdmissiblePair) -> int:
    par = p.parabolic
    t = _type(par)
    if t == "C":
        return 2 ** len(long_roots_of(p))
    if t == "B":
        return 2 if len(p.s) == 2 else 1
    return 2 if property_unic(par) and par.is_max_rank(p.s) else 1


def weight_coordinates(par: ParabolicData, coeffs) -> list[int]:
    """A root written in the fundamental-weight basis of the simply connected torus."""
    return [int(x) for x in np.asarray(coeffs, dtype=np.int64) @ par.system.cartan]


def count_local_systems_lattice(p: AdmissiblePair) -> int:
    """|torsion(X / <S>)| for the weight lattice X; characters of the component group."""
    par = p.parabolic
    gens = [weight_coordinates(par, r.coeffs) for r in p.roots()]
    return torsion_order(gens, par.system.rank)


def check_character(d: DElement) -> DElement:
    p = d.pair
    if _type(p.parabolic) == "C":
        if d.nontrivial or tuple(k for k, _ in d.signs) != long_roots_of(p):
            raise ValueError(f"illegal type C character {d}")
        if any(s not in (1, -1) for _, s in d.signs):
            raise ValueError("signs must be +1 or -1")
    else:
        if d.signs:
            raise ValueError("sign data only exists in type C")
        if d.nontrivial and count_local_systems_closed(p) != 2:
            raise ValueError(f"orbit {p} carries only the trivial local system")
    return d


def characters_of(p: AdmissiblePair) -> list[DElement]:
    if _type(p.parabolic) == "C":
        keys = long_roots_of(p)
        return [DElement(p, False, tuple(zip(keys, signs)))
                for signs in itertools.product((1, -1), repeat=len(keys))]
    out = [DElement(p)]
    if count_local_systems_closed(p) == 2:
        out.append(DElement(p, True))
    return out


def trivial_of(p: AdmissiblePair) -> DElement:
    return characters_of(p)[0]


def enumerate_D(par: ParabolicData) -> list[DElement]:
    if "D" not in par.cache:
        D = [d for p in enumerate_pairs(par) for d in characters_of(p)]
        par.cache["D"] = D
        par.cache["D_index"] = {d: k for k, d in enumerate(D)}
    return par.cache["D"]


def d_index(d: DElement) -> int:
    par = d.pair.parabolic
    enumerate_D(par)
    return par.cache["D_index"][d]


def alpha_circ(alpha: int, d: DElement) -> list[DElement]:
    """Extensions of the local system d to the open orbit m_alpha(pair)."""
    p = d.pair
    par = p.parabolic
    sys = par.system
    case = classify(alpha, p)
    if not case.is_ascent:
        return []
    q = m_alpha(alpha, p)
    type_c = _type(par) == "C"
    label = case.label
    if label == "complex_ascent_v":
        out = [DElement(q, d.nontrivial, d.signs)]
    elif label == "complex_ascent_S":
        sb = reflection(sys, case.beta)
        moved = [(par.psi_index[apply(sb, par.psi[k])], s) for k, s in d.signs]
        out = [DElement(q, d.nontrivial, tuple(sorted(moved)))]
    elif label == "noncompact_imaginary_d1":
        new = set(q.s) - set(p.s)
        signs = dict(d.signs)
        if type_c:
            signs.update({k: 1 for k in new if par.psi[k].long})
        out = [DElement(q, d.nontrivial, tuple(sorted(signs.items())))]
    else:  # c1
        g = case.witness
        lo, hi = sys.sub(g, case.beta), sys.add(g, case.beta)
        if type_c:
            out = []
            for s in (1, -1):
                signs = dict(d.signs)
                signs.pop(par.psi_index[g], None)
                signs[par.psi_index[lo]] = s
                signs[par.psi_index[hi]] = s
                out.append(DElement(q, False, tuple(sorted(signs.items()))))
        else:
            if not d.is_trivial:
                raise AssertionError(f"c1 extension from a non-trivial character {d}")
            out = [DElement(q), DElement(q, True)]
    return [check_character(x) for x in out]


def extension_matrix(par: ParabolicData, alpha: int) -> np.ndarray:
    D = enumerate_D(par)
    E = np.zeros((len(D), len(D)), dtype=bool)
    for i, d in enumerate(D):
        for t in alpha_circ(alpha, d):
            E[i, d_index(t)] = True
    return E


def gorder_fixpoint(par: ParabolicData) -> OrderRelation:
    """Smallest order with d < d' for d' in a.d, and monotone under every a."""
    if "gorder" in par.cache:
        return par.cache["gorder"]
    D = enumerate_D(par)
    n = len(D)
    eye = np.eye(n, dtype=bool)
    Es = [extension_matrix(par, a).astype(np.int32) for a in range(par.system.rank)]
    R = eye.copy()
    for E in Es:
        R |= E.astype(bool)
    R = transitive_closure(R)
    while True:
        strict = (R & ~eye).astype(np.int32)
        nxt = R.copy()
        for E in Es:
            nxt |= (E.T @ strict @ E) > 0
        nxt = transitive_closure(nxt)
        if (nxt & nxt.T & ~eye).any():
            raise AssertionError("G-order closure produced a cycle")
        if np.array_equal(nxt, R):
            break
        R = nxt
    par.cache["gorder"] = OrderRelation(tuple(D), R)
    return par.cache["gorder"]


def gorder_hasse_components(par: ParabolicData) -> list[list[int]]:
    rel = gorder_fixpoint(par)
    H = hasse_matrix(rel.leq)
    return weak_components(len(rel), zip(*np.nonzero(H)))


def gorder_closed_ADE(d: DElement, e: DElement) -> bool:
    par = d.pair.parabolic
    if not par.system.simply_laced:
        raise ValueError("closed form for simply laced systems only")
    if not bruhat_leq_pairs(d.pair, e.pair):
        return False
    if not property_unic(par):
        return d.is_trivial and e.is_trivial
    return d.nontrivial == e.nontrivial


def gorder_closed_B(d: DElement, e: DElement, clause4: str = "v<u") -> bool:
    """Closed type B order; ``clause4`` selects "v<u" (default) or "u<v"."""
    par = d.pair.parabolic
    if _type(par) != "B":
        raise ValueError("closed form for type B only")
    p, q = d.pair, e.pair
    if not bruhat_leq_pairs(p, q):
        return False
    if d.nontrivial == e.nontrivial:
        return True
    v, u = p.v, q.v
    if not d.nontrivial:
        if len(p.s) != 2:
            return True
        if clause4 == "v<u":
            return v != u and wp_leq(v, u)
        return v != u and wp_leq(u, v)
    top = max_H(q)
    if top is None:
        return False
    return bruhat_leq_pairs(p, top) and v != top.v and wp_leq(v, top.v)


def closed_gorder_matrix(par: ParabolicData, **kw) -> np.ndarray:
    D = enumerate_D(par)
    t = _type(par)
    if t == "C":
        raise ValueError("no closed form; use oracle")
    f = gorder_closed_B if t == "B" else gorder_closed_ADE
    return np.array([[f(a, b, **kw) for b in D] for a in D], dtype=bool)


def gorder_components_C(par: ParabolicData) -> list[list[int]]:
    """Partition of D by the reduced form of the sign sequence."""
    if _type(par) != "C":
        raise ValueError("reduced-form classes are defined for type C only")
    groups: dict[tuple, list[int]] = {}
    for i, d in enumerate(enumerate_D(par)):
        groups.setdefault(sequences.reduce(d.sequence), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def restrict_to_trivial(par: ParabolicData) -> tuple[np.ndarray, np.ndarray]:
    """(G-order on D_0, orbit order), both indexed by the pair enumeration."""
    D = enumerate_D(par)
    rel = gorder_fixpoint(par)
    idx = [d_index(trivial_of(p)) for p in enumerate_pairs(par)]
    assert all(D[i].is_trivial for i in idx)
    return rel.leq[np.ix_(idx, idx)], closed_order(par).leq


def extension_scan(par: ParabolicData) -> dict[str, int]:
    """Count (local system, descent) configurations where sigma(alpha) = -alpha and the
    local system is not an extension from any lower orbit."""
    D = enumerate_D(par)
    reached = {}
    for a in range(par.system.rank):
        for d in D:
            for t in alpha_circ(a, d):
                reached.setdefault((a, t), True)
    counts = {"real_descents": 0, "no_extension": 0}
    for a in range(par.system.rank):
        for d in D:
            c = classify(a, d.pair)
            if c.label in ("real_descent", "real_descent_S"):
                counts["real_descents"] += 1
                if (a, d) not in reached:
                    counts["no_extension"] += 1
    return counts


def pair_of(d: DElement) -> int:
    return pair_index(d.pair)
