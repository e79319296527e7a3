"""Admissible pairs (v, S), the operators m_alpha and E_alpha, and orbit orders."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .involutions import inv_length, sigma_of_set
from .poset import OrderRelation, transitive_closure
from .rootsys import ParabolicData, Root
from .weyl import (WeylElement, WPElement, apply, bruhat_leq, inverse,
                   min_coset_rep, reflection, simple_reflection, wp_elements,
                   wp_from_inversions, wp_leq)

ASCENT_LABELS = ("noncompact_imaginary_d1", "c1", "complex_ascent_v", "complex_ascent_S")
DESCENT_LABELS = ("real_descent", "real_descent_S", "complex_descent_v", "complex_descent_S")
LABELS = ("compact_imaginary",) + ASCENT_LABELS + DESCENT_LABELS


@dataclass(frozen=True, eq=False)
class AdmissiblePair:
    """v in W^P together with an orthogonal S inside its inversion set (Psi-indices)."""

    v: WPElement
    s: tuple[int, ...]

    def __post_init__(self):
        par = self.v.parabolic
        if tuple(sorted(self.s)) != self.s or len(set(self.s)) != len(self.s):
            raise ValueError("S must be a sorted tuple of distinct Psi-indices")
        if not set(self.s) <= set(self.v.inversion_set):
            raise ValueError("S is not contained in the inversion set of v")
        if not par.is_orthogonal_idx(self.s):
            raise ValueError("S is not orthogonal")

    @property
    def parabolic(self) -> ParabolicData:
        return self.v.parabolic

    @property
    def key(self) -> tuple:
        return (self.v.inversion_set, self.s)

    def __eq__(self, other) -> bool:
        return isinstance(other, AdmissiblePair) and self.parabolic is other.parabolic \
            and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def roots(self) -> tuple[Root, ...]:
        return self.parabolic.roots_of(self.s)

    def __repr__(self) -> str:
        return f"({list(self.v.inversion_set)}, {list(self.s)})"


@dataclass(frozen=True)
class AscentDescentCase:
    label: str
    beta: Root
    witness: Root | None = None

    @property
    def is_ascent(self) -> bool:
        return self.label in ASCENT_LABELS


def make_pair(par: ParabolicData, v_idx, s_idx) -> AdmissiblePair:
    return AdmissiblePair(wp_from_inversions(par, v_idx), tuple(sorted(s_idx)))


def enumerate_pairs(par: ParabolicData) -> list[AdmissiblePair]:
    """Every admissible pair, ordered by (W^P order, #S, S)."""
    if "pairs" in par.cache:
        return par.cache["pairs"]
    out = []
    for v in wp_elements(par):
        subsets = par.orthogonal_subsets(within=v.inversion_set)
        for s in sorted(subsets, key=lambda t: (len(t), t)):
            out.append(AdmissiblePair(v, s))
    par.cache["pairs"] = out
    par.cache["pair_index"] = {p.key: k for k, p in enumerate(out)}
    return out


def pair_index(p: AdmissiblePair) -> int:
    par = p.parabolic
    enumerate_pairs(par)
    return par.cache["pair_index"][p.key]


def _memo(par: ParabolicData, name: str) -> dict:
    return par.cache.setdefault(name, {})


def v_inverse(v: WPElement) -> WeylElement:
    memo = _memo(v.parabolic, "v_inverse")
    if v.inversion_set not in memo:
        memo[v.inversion_set] = inverse(v.element)
    return memo[v.inversion_set]


def sigma_S(p: AdmissiblePair) -> WeylElement:
    par = p.parabolic
    memo = _memo(par, "sigma_S")
    if p.s not in memo:
        memo[p.s] = sigma_of_set(par.system, p.roots())
    return memo[p.s]


def sigma_of_pair(p: AdmissiblePair) -> WeylElement:
    """sigma_{v(S)} = v sigma_S v^{-1}."""
    memo = _memo(p.parabolic, "sigma_pair")
    if p.key not in memo:
        memo[p.key] = p.v.element * sigma_S(p) * v_inverse(p.v)
    return memo[p.key]


def _root_class(par: ParabolicData, beta: Root) -> str:
    if beta in par.psi_index:
        return "psi"
    if -beta in par.psi_index:
        return "-psi"
    return "levi+" if beta.is_positive else "levi-"


def classify(alpha: int, p: AdmissiblePair) -> AscentDescentCase:
    """Ascent/descent type of the simple root alpha (0-based) for the pair p."""
    par = p.parabolic
    sys = par.system
    a = sys.simple_roots[alpha]
    beta = apply(v_inverse(p.v), a)
    img = sys.root(sigma_of_pair(p).matrix[:, alpha])
    where = _root_class(par, beta)
    S = set(p.roots())
    if not img.is_positive:
        if -beta in S:
            return AscentDescentCase("real_descent", beta)
        if img == -a:
            # sigma(alpha) = -alpha while -beta is not in S: beta lies in the Levi part
            return AscentDescentCase("real_descent_S", beta)
        if where == "-psi":
            return AscentDescentCase("complex_descent_v", beta)
        return AscentDescentCase("complex_descent_S", beta)
    if img != a:
        if where == "psi":
            return AscentDescentCase("complex_ascent_v", beta)
        if where == "levi+":
            return AscentDescentCase("complex_ascent_S", beta)
        raise AssertionError(f"unexpected complex ascent with beta={beta} for {p}")
    if where in ("psi", "-psi"):
        return AscentDescentCase("noncompact_imaginary_d1", beta)
    if where == "levi-":
        raise AssertionError(f"negative Levi root {beta} for {p}")
    for g in p.roots():
        if sys.add(g, beta) is not None and sys.sub(g, beta) is not None:
            return AscentDescentCase("c1", beta, g)
    return AscentDescentCase("compact_imaginary", beta)


def m_alpha(alpha: int, p: AdmissiblePair) -> AdmissiblePair:
    """The open orbit m_alpha(v, S) in P_alpha v x_S."""
    memo = _memo(p.parabolic, "m_alpha")
    key = (alpha, p.key)
    if key not in memo:
        memo[key] = _m_alpha(alpha, p, classify(alpha, p))
    return memo[key]


def _m_alpha(alpha: int, p: AdmissiblePair, case: AscentDescentCase) -> AdmissiblePair:
    par = p.parabolic
    sys = par.system
    label, beta = case.label, case.beta
    if not case.is_ascent:
        return p
    v_inv = set(p.v.inversion_set)
    S = set(p.s)
    if label == "complex_ascent_v":
        v2 = wp_from_inversions(par, v_inv | {par.psi_index[beta]})
        out = AdmissiblePair(v2, p.s)
        _check_left_mult(p.v, v2, alpha)
    elif label == "complex_ascent_S":
        sb = reflection(sys, beta)
        new = [apply(sb, r) for r in p.roots()]
        out = AdmissiblePair(p.v, tuple(sorted(par.psi_index[r] for r in new)))
    elif label == "noncompact_imaginary_d1":
        if beta in par.psi_index:
            b = par.psi_index[beta]
            v2 = wp_from_inversions(par, v_inv | {b})
            _check_left_mult(p.v, v2, alpha)
        else:
            b = par.psi_index[-beta]
            v2 = p.v
            # s_alpha v lies below v here; v is the larger of the two
            assert wp_leq(wp_from_inversions(par, v_inv - {b}), v2)
        out = AdmissiblePair(v2, tuple(sorted(S | {b})))
    else:  # c1
        g = case.witness
        lo, hi = sys.sub(g, beta), sys.add(g, beta)
        new = (S - {par.psi_index[g]}) | {par.psi_index[lo], par.psi_index[hi]}
        out = AdmissiblePair(p.v, tuple(sorted(new)))
    return out


def _check_left_mult(v: WPElement, v2: WPElement, alpha: int):
    expected = simple_reflection(v.parabolic.system, alpha) * v.element
    if expected != v2.element:
        raise AssertionError("s_alpha v does not match the saturated-set construction")


def is_ascent(alpha: int, p: AdmissiblePair) -> bool:
    return m_alpha(alpha, p) != p


def e_alpha(alpha: int, p: AdmissiblePair) -> list[AdmissiblePair]:
    """E_alpha(p): the pairs q != p with m_alpha(q) = p, by inverting m_alpha."""
    par = p.parabolic
    memo = _memo(par, "e_alpha")
    if alpha not in memo:
        fibers: dict[tuple, list[AdmissiblePair]] = {}
        for q in enumerate_pairs(par):
            t = m_alpha(alpha, q)
            if t != q:
                fibers.setdefault(t.key, []).append(q)
        memo[alpha] = fibers
    return list(memo[alpha].get(p.key, []))


def m_alpha_matrix(par: ParabolicData, alpha: int) -> np.ndarray:
    """One-hot matrix F with F[i, j] = 1 iff m_alpha(pair_i) = pair_j."""
    pairs = enumerate_pairs(par)
    F = np.zeros((len(pairs), len(pairs)), dtype=bool)
    for i, p in enumerate(pairs):
        F[i, pair_index(m_alpha(alpha, p))] = True
    return F


# -- orders ---------------------------------------------------------------------


def coset_of_pair(p: AdmissiblePair) -> WPElement:
    """[v sigma_S]^P."""
    memo = _memo(p.parabolic, "coset")
    if p.key not in memo:
        memo[p.key] = min_coset_rep(p.v.element * sigma_S(p), p.parabolic)
    return memo[p.key]


def bruhat_leq_pairs(p: AdmissiblePair, q: AdmissiblePair) -> bool:
    """Closed-form orbit order: (u,R) <= (v,S) iff
    [v s_S]^P <= [u s_R]^P <= u <= v and sigma_{u(R)} <= sigma_{v(S)}."""
    if p == q:
        return True
    u, v = p.v, q.v
    if not wp_leq(u, v):
        return False
    cu, cv = coset_of_pair(p), coset_of_pair(q)
    if not (wp_leq(cv, cu) and wp_leq(cu, u)):
        return False
    return bruhat_leq(sigma_of_pair(p), sigma_of_pair(q))


def closed_order(par: ParabolicData) -> OrderRelation:
    memo = par.cache
    if "closed_order" not in memo:
        pairs = enumerate_pairs(par)
        n = len(pairs)
        M = np.zeros((n, n), dtype=bool)
        for i, p in enumerate(pairs):
            for j, q in enumerate(pairs):
                M[i, j] = bruhat_leq_pairs(p, q)
        memo["closed_order"] = OrderRelation(tuple(pairs), M)
    return memo["closed_order"]


def standard_order_oracle(par: ParabolicData) -> OrderRelation:
    """Smallest order with p <= m_a(p) and m_a monotone, by fixpoint iteration."""
    memo = par.cache
    if "oracle_order" in memo:
        return memo["oracle_order"]
    pairs = enumerate_pairs(par)
    n = len(pairs)
    Fs = [m_alpha_matrix(par, a).astype(np.int32) for a in range(par.system.rank)]
    R = np.eye(n, dtype=bool)
    for F in Fs:
        R |= F.astype(bool)
    R = transitive_closure(R)
    while True:
        nxt = R.copy()
        Ri = R.astype(np.int32)
        for F in Fs:
            nxt |= (F.T @ Ri @ F) > 0
        nxt = transitive_closure(nxt)
        if np.array_equal(nxt, R):
            break
        R = nxt
    if (R & R.T & ~np.eye(n, dtype=bool)).any():
        raise AssertionError("standard order is not antisymmetric")
    memo["oracle_order"] = OrderRelation(tuple(pairs), R)
    return memo["oracle_order"]


# -- maximum rank --------------------------------------------------------------


def max_rank_pairs(par: ParabolicData) -> list[AdmissiblePair]:
    return [p for p in enumerate_pairs(par) if par.is_max_rank(p.s)]


def minimal_max_rank(par: ParabolicData) -> AdmissiblePair:
    """The minimum of the maximum-rank pairs under the orbit order."""
    rm = max_rank_pairs(par)
    rel = closed_order(par)
    idx = [pair_index(p) for p in rm]
    sub = rel.leq[np.ix_(idx, idx)]
    mins = [k for k in range(len(idx)) if sub[k, :].all()]
    if not mins:
        raise ValueError(f"maximum-rank pairs of {par.label} have no minimum")
    return rm[mins[0]]


def ascent_path(start: AdmissiblePair, target: AdmissiblePair) -> list[int] | None:
    """Shortest list of simple indices a_1, a_2, ... with m_{a_k}...m_{a_1}(start) = target."""
    rank = start.parabolic.system.rank
    prev = {start.key: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if p == target:
            word = []
            k = p.key
            while prev[k] is not None:
                k, a = prev[k]
                word.append(a)
            return word[::-1]
        for a in range(rank):
            q = m_alpha(a, p)
            if q.key not in prev:
                prev[q.key] = (p.key, a)
                queue.append(q)
    return None


def conjugation_subword_reaches(sys, start: WeylElement, word, goal: WeylElement) -> bool:
    """Is goal = s_{b_k}...s_{b_1} start s_{b_1}...s_{b_k} for a subword b of word?"""
    states = {start.key: start}
    for a in word:
        s = simple_reflection(sys, a)
        for t in list(states.values()):
            c = s * t * s
            states.setdefault(c.key, c)
    return goal.key in states


# -- type B specifics ------------------------------------------------------------


def _require_b(par: ParabolicData):
    if par.system.type_label != "B":
        raise ValueError("this operation is defined for type B only")


def b_root(par: ParabolicData, **e) -> Root:
    """Root of B_n from e-coordinates, e.g. b_root(par, e1=1, e3=-1)."""
    vec = [0] * par.system.rank
    for k, x in e.items():
        vec[int(k[1:]) - 1] = x
    return par.system.from_e(vec)


def v_tau(par: ParabolicData, tau: Root) -> WPElement:
    """In type B, the element of W^P whose inversion set is the chain up to tau."""
    _require_b(par)
    return wp_from_inversions(par, range(par.psi_index[tau] + 1))


def max_H(p: AdmissiblePair) -> AdmissiblePair | None:
    """Type B: the maximum of the rank-two pairs below p, from the closed case table."""
    par = p.parabolic
    _require_b(par)
    n = par.system.rank
    if len(p.s) == 2:
        return p
    if not p.s:
        return None
    beta = par.psi[max(p.v.inversion_set)]
    (gamma,) = p.roots()
    e = par.system.to_e
    if par.psi_index[beta] < par.psi_index[b_root(par, e1=1, **{f"e{n}": 1})]:
        return None
    if par.psi_index[gamma] >= par.psi_index[b_root(par, e1=1, **{f"e{n}": -1})]:
        return None
    j = next(k for k, x in enumerate(e(beta), start=1) if k > 1 and x != 0)
    h = next(k for k, x in enumerate(e(gamma), start=1) if k > 1 and x != 0)
    if h < j:
        s = (b_root(par, e1=1, **{f"e{j}": 1}), b_root(par, e1=1, **{f"e{j}": -1}))
        return AdmissiblePair(p.v, par.indices(s))
    plus = b_root(par, e1=1, **{f"e{h + 1}": 1})
    minus = b_root(par, e1=1, **{f"e{h + 1}": -1})
    return AdmissiblePair(v_tau(par, plus), par.indices((plus, minus)))


def max_H_bruteforce(p: AdmissiblePair) -> AdmissiblePair | None:
    par = p.parabolic
    _require_b(par)
    rel = closed_order(par)
    i = pair_index(p)
    H = [pair_index(q) for q in max_rank_pairs(par) if rel.leq[pair_index(q), i]]
    if not H:
        return None
    tops = [a for a in H if all(rel.leq[b, a] for b in H)]
    if len(tops) != 1:
        raise AssertionError(f"H{p} has no maximum")
    return enumerate_pairs(par)[tops[0]]


def orbit_inv_length(p: AdmissiblePair) -> int:
    return inv_length(sigma_of_pair(p))
