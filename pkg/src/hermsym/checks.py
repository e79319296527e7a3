"""Executable acceptance criteria, shared by the test-suite and ``hermsym check``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import locsys as L
from . import orbits as O
from . import sequences as seq
from .involutions import circ, inv_length, involutions_of, is_descent, real_descent_set, sigma_of_set
from .rootsys import (build_system, cominuscule_nodes, is_strongly_orthogonal_set, parabolic,
                      property_unic, setting)
from .weyl import bruhat_leq, bruhat_less, multiply, simple_reflection

ACCEPTANCE_SYSTEMS = [("A", 3, 2), ("A", 4, 2), ("B", 3, 1), ("B", 4, 1),
                      ("C", 2, 2), ("C", 3, 3), ("D", 4, 1)]


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str = ""
    diffs: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] criterion {self.criterion}: {self.name}{extra}"


def _systems(kinds=None):
    for t, r, n in ACCEPTANCE_SYSTEMS:
        if kinds is None or t in kinds:
            yield setting(t, r, n)


def _diff_pairs(A: np.ndarray, B: np.ndarray, limit=20):
    return [(int(i), int(j), bool(A[i, j]), bool(B[i, j])) for i, j in zip(*np.nonzero(A != B))][:limit]


# -- criterion 1 ----------------------------------------------------------------

def check_orbit_order(par) -> CheckResult:
    c = O.closed_order(par).leq
    o = O.standard_order_oracle(par).leq
    ok = np.array_equal(c, o)
    return CheckResult(1, f"closed orbit order == standard-order fixpoint on {par.label}", ok,
                       f"{len(c)} pairs, {int((c != o).sum())} mismatches", _diff_pairs(c, o))


# -- criterion 2 ----------------------------------------------------------------

def check_counts(par) -> CheckResult:
    bad = [(p, L.count_local_systems_lattice(p), L.count_local_systems_closed(p))
           for p in O.enumerate_pairs(par)
           if L.count_local_systems_lattice(p) != L.count_local_systems_closed(p)]
    n = len(O.enumerate_pairs(par))
    return CheckResult(2, f"lattice torsion == closed-form local-system count on {par.label}",
                       not bad, f"{n} orbits, {len(bad)} mismatches", bad[:20])


# -- criterion 3 ----------------------------------------------------------------

def check_trivial_restriction(par) -> CheckResult:
    g, b = L.restrict_to_trivial(par)
    ok = np.array_equal(g, b)
    return CheckResult(3, f"G-order on trivial local systems == orbit order on {par.label}", ok,
                       f"{len(b)} orbits", _diff_pairs(g, b))


# -- criterion 4 ----------------------------------------------------------------

def check_simply_laced_components(par) -> CheckResult:
    D = L.enumerate_D(par)
    pairs = O.enumerate_pairs(par)
    if not property_unic(par):
        ok = len(D) == len(pairs)
        return CheckResult(4, f"{par.label} lacks Property unic: |D| == |orbits|", ok,
                           f"|D|={len(D)}, orbits={len(pairs)}")
    comps = L.gorder_hasse_components(par)
    rel = L.gorder_fixpoint(par)
    nontriv = [i for i, d in enumerate(D) if d.nontrivial]
    triv = [i for i, d in enumerate(D) if not d.nontrivial]
    as_sets = sorted(map(sorted, comps))
    ok_comp = len(comps) == 2 and as_sets == sorted([sorted(triv), sorted(nontriv)])
    sub = rel.leq[np.ix_(nontriv, nontriv)]
    pidx = [O.pair_index(D[i].pair) for i in nontriv]
    rm = [O.pair_index(p) for p in O.max_rank_pairs(par)]
    bru = O.closed_order(par).leq[np.ix_(pidx, pidx)]
    ok = ok_comp and sorted(pidx) == sorted(rm) and np.array_equal(sub, bru)
    return CheckResult(4, f"two Hasse components, non-trivial one ordered as Bruhat on {par.label}",
                       ok, f"{len(comps)} components, {len(nontriv)} non-trivial elements")


# -- criterion 5 ----------------------------------------------------------------

def check_type_b(par) -> list[CheckResult]:
    fix = L.gorder_fixpoint(par).leq
    closed = L.closed_gorder_matrix(par)
    other = L.closed_gorder_matrix(par, clause4="u<v")
    r1 = CheckResult(5, f"closed type B G-order == fixpoint on {par.label}",
                     np.array_equal(closed, fix),
                     f"{len(fix)} elements; the 'u<v' reading of clause 4 gives "
                     f"{int((other != fix).sum())} mismatches", _diff_pairs(closed, fix))
    bad = []
    eligible = 0
    for p in O.enumerate_pairs(par):
        eligible += 1
        if O.max_H(p) != O.max_H_bruteforce(p):
            bad.append(p)
    r2 = CheckResult(5, f"max H case table == brute force on {par.label}", not bad,
                     f"{eligible} pairs", bad[:20])
    return [r1, r2]


# -- criterion 6 ----------------------------------------------------------------

def check_type_c(par) -> list[CheckResult]:
    D = L.enumerate_D(par)
    comps = L.gorder_hasse_components(par)
    classes = L.gorder_components_C(par)
    r1 = CheckResult(6, f"reduced-form classes == Hasse components on {par.label}",
                     classes == comps, f"{len(D)} elements, {len(comps)} components")
    R = L.gorder_fixpoint(par).leq
    bad = [(i, j) for i, j in zip(*np.nonzero(R))
           if seq.reduce(D[i].sequence) != seq.reduce(D[j].sequence)]
    r2 = CheckResult(6, f"comparable elements share the reduced form on {par.label}", not bad,
                     f"{int(R.sum())} comparable pairs", bad[:20])
    return [r1, r2]


# -- criterion 7 ----------------------------------------------------------------

def random_sequences(count: int, max_len: int, seed: int = 0):
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(rng.choice((1, -1)) for _ in range(rng.randint(0, max_len)))


def check_pl_mi(count: int = 2000) -> CheckResult:
    rng = random.Random(1)
    tested = bad = 0
    for X in random_sequences(count * 2, 14, seed=2):
        spots = [j for j in range(len(X) - 1) if X[j] == X[j + 1]]
        if not spots:
            continue
        j = rng.choice(spots)
        Y = X[:j] + X[j + 2:]
        tested += 1
        bad += (seq.pl(X), seq.mi(X)) != (seq.pl(Y), seq.mi(Y))
        if tested >= count:
            break
    return CheckResult(7, "pl/mi unchanged by deleting an identical adjacent pair",
                       bad == 0 and tested >= 1000, f"{tested} instances, {bad} failures")


def check_normalize(count: int = 2000) -> CheckResult:
    bad = 0
    for X in random_sequences(count, 12, seed=3):
        trace = seq.normalize_trace(X)
        if not seq.is_terminal(trace[-1]) or len(trace) > (len(X) + 1) ** 2 + 1:
            bad += 1
        elif any(seq.reduce(Y) != seq.reduce(X) for Y in trace):
            bad += 1
    return CheckResult(7, "normalize terminates and preserves the reduced form",
                       bad == 0, f"{count} instances, {bad} failures")


def _length_step_systems():
    return [build_system("B", 3), build_system("A", 3), build_system("C", 3),
            build_system("D", 4), build_system("A", 4), build_system("B", 4),
            build_system("C", 4), build_system("A", 5)]


def check_circ_length_step() -> CheckResult:
    tested = bad = 0
    for sys in _length_step_systems():
        for s in involutions_of(sys):
            L0 = inv_length(s)
            for a in range(sys.rank):
                t = circ(a, s)
                tested += 1
                bad += abs(inv_length(t) - L0) != 1
    return CheckResult(7, "L changes by exactly one under the circ action",
                       bad == 0 and tested >= 1000, f"{tested} instances, {bad} failures")


def check_circ_lifting(sys=None) -> CheckResult:
    sys = sys or build_system("B", 3)
    invs = involutions_of(sys)
    tested = bad = 0
    for s, t in itertools.permutations(invs, 2):
        if not bruhat_less(s, t):
            continue
        for a in range(sys.rank):
            tested += 1
            sa, ta = circ(a, s), circ(a, t)
            up_s, up_t = not is_descent(a, s), not is_descent(a, t)
            if up_s and up_t:
                ok = bruhat_less(sa, ta)
            elif not up_s and not up_t:
                ok = bruhat_less(sa, ta)
            else:
                ok = bruhat_leq(sa, t) and bruhat_leq(s, ta)
            bad += not ok
    for s in invs:
        for a in range(sys.rank):
            t = circ(a, s)
            up = bruhat_less(s, t)
            tested += 1
            comparable = up or bruhat_less(t, s)
            sa = multiply(simple_reflection(sys, a), s)
            bad += not (comparable and up == bruhat_less(s, sa))
    return CheckResult(7, f"circ lifting and comparability over all involutions of W({sys.label})",
                       bad == 0, f"{len(invs)} involutions, {tested} instances, {bad} failures")


def check_m_alpha_sigma() -> CheckResult:
    tested = bad = 0
    for par in _systems():
        for p in O.enumerate_pairs(par):
            for a in range(par.system.rank):
                q = O.m_alpha(a, p)
                tested += 1
                if q == p:
                    continue
                ok = O.sigma_of_pair(q) == circ(a, O.sigma_of_pair(p)) and \
                    O.orbit_inv_length(q) == O.orbit_inv_length(p) + 1
                bad += not ok
    return CheckResult(7, "m_alpha ascents act on sigma by circ and raise L by one",
                       bad == 0, f"{tested} instances, {bad} failures")


def all_parabolics(max_rank: int = 5, with_e: bool = True):
    out = []
    for t in "ABCD":
        lo = {"A": 2, "B": 3, "C": 2, "D": 4}[t]
        for r in range(lo, max_rank + 1):
            sys = build_system(t, r)
            out += [parabolic(sys, n) for n in cominuscule_nodes(sys)]
    if with_e:
        for t in ("E6", "E7"):
            sys = build_system(t)
            out += [parabolic(sys, n) for n in cominuscule_nodes(sys)]
    return out


def check_strong_orthogonality() -> CheckResult:
    tested = bad = 0
    for par in all_parabolics():
        for i, j in itertools.combinations(range(len(par.psi)), 2):
            if par.psi_orth[i, j]:
                tested += 1
                bad += not is_strongly_orthogonal_set(par.system, [par.psi[i], par.psi[j]])
    return CheckResult(7, "orthogonal roots of Psi are strongly orthogonal",
                       bad == 0, f"{tested} pairs, {bad} failures")


def check_gamma_S(max_rank: int = 5) -> CheckResult:
    tested = bad = 0
    for par in all_parabolics(max_rank):
        sys = par.system
        if not sys.simply_laced:
            continue
        for s in par.orthogonal_subsets():
            roots = par.roots_of(s)
            tested += 1
            gamma = real_descent_set(sigma_of_set(sys, roots))
            bad += gamma != set(roots) | {-r for r in roots}
    return CheckResult(7, "Gamma_S = S u -S for orthogonal S in Psi (simply laced)",
                       bad == 0, f"{tested} sets, {bad} failures")


# -- criterion 8 ----------------------------------------------------------------

def check_ordmax(par=None) -> CheckResult:
    par = par or setting("A", 3, 2)
    sys = par.system
    rm = O.max_rank_pairs(par)
    p0 = O.minimal_max_rank(par)
    sigma0 = O.sigma_of_pair(p0)
    rel = O.closed_order(par)
    tested = bad = 0
    for p, q in itertools.permutations(rm, 2):
        if not rel.leq[O.pair_index(q), O.pair_index(p)]:
            continue
        word = O.ascent_path(p0, p)
        tested += 1
        ok = word is not None and \
            O.conjugation_subword_reaches(sys, sigma0, word, O.sigma_of_pair(q))
        bad += not ok
    return CheckResult(8, f"subword search for comparable maximum-rank pairs on {par.label}",
                       bad == 0 and tested > 0, f"{tested} comparable pairs, {bad} failures")


# -- suites -----------------------------------------------------------------------

def suite_sequences() -> list[CheckResult]:
    return [check_pl_mi(), check_normalize()]


def suite_orders() -> list[CheckResult]:
    out = [check_orbit_order(par) for par in _systems()]
    out += [check_circ_length_step(), check_circ_lifting(), check_m_alpha_sigma(),
            check_strong_orthogonality(), check_gamma_S(), check_ordmax()]
    return out


def suite_locsys() -> list[CheckResult]:
    out = [check_counts(par) for par in _systems()]
    out += [check_trivial_restriction(par) for par in _systems()]
    out += [check_simply_laced_components(setting("A", 3, 2)),
            check_simply_laced_components(setting("D", 4, 1))]
    for par in _systems("B"):
        out += check_type_b(par)
    for par in _systems("C"):
        out += check_type_c(par)
    return out


SUITES = {"sequences": suite_sequences, "orders": suite_orders, "locsys": suite_locsys}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        results = []
        for fn in SUITES.values():
            results += fn()
        return sorted(results, key=lambda r: r.criterion)
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
