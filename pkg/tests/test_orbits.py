import itertools

import numpy as np
import pytest

from hermsym import orbits as O
from hermsym.involutions import circ, circ_reduced_word, inv_length, sigma_of_set
from hermsym.poset import hasse
from hermsym.rootsys import parse_label, setting
from hermsym.weyl import (apply, bruhat_leq, min_coset_rep, simple_reflection,
                          wp_elements, wp_from_inversions, wp_leq)

SYSTEMS = ["A3:2", "A4:2", "B3:1", "B4:1", "C2:2", "C3:3", "D4:1"]
EXTRA = ["A3:1", "A4:1", "D4:3", "D5:1", "C4:4"]


def backtrack_pairs(par):
    """Second enumerator: every saturated set, then every orthogonal subset of it."""
    sys = par.system
    n = len(par.psi)
    out = set()
    for mask in range(1 << n):
        V = [i for i in range(n) if mask >> i & 1]
        if not all((mask >> j & 1) for i in V for j in range(n) if par.psi_leq[j, i]):
            continue
        for k in range(len(V) + 1):
            for S in itertools.combinations(V, k):
                if all(sys.inner(par.psi[a], par.psi[b]) == 0 for a, b in itertools.combinations(S, 2)):
                    out.add((tuple(V), S))
    return out


@pytest.mark.parametrize("label", SYSTEMS + EXTRA)
def test_enumeration_matches_backtracking(label):
    par = parse_label(label)
    assert {p.key for p in O.enumerate_pairs(par)} == backtrack_pairs(par)


def test_b3_pair_count():
    par = setting("B", 3)
    pairs = O.enumerate_pairs(par)
    assert len(pairs) == 24
    ident = [p for p in pairs if p.v.inversion_set == ()]
    assert [p.s for p in ident] == [()]
    assert sum(len(p.s) == 2 for p in pairs) == 3


def test_admissibility_is_checked():
    par = setting("B", 3)
    v = wp_from_inversions(par, [0, 1])
    with pytest.raises(ValueError):
        O.AdmissiblePair(v, (2,))
    with pytest.raises(ValueError):
        O.AdmissiblePair(v, (0, 1))


def test_sigma_of_pair():
    par = setting("A", 3, 2)
    first = O.enumerate_pairs(par)[0]
    assert O.sigma_of_pair(first) == sigma_of_set(par.system, [])
    p0 = O.minimal_max_rank(par)
    word = circ_reduced_word(O.sigma_of_pair(p0))
    assert len(word) == 2
    a, b = (par.system.simple_roots[i] for i in word)
    assert par.system.inner(a, b) == 0
    assert O.sigma_of_pair(p0) == simple_reflection(par.system, word[0]) * \
        simple_reflection(par.system, word[1])


def test_sigma_of_pair_b3_matrix():
    par = setting("B", 3)
    sys = par.system
    for p in O.enumerate_pairs(par):
        roots = [apply(p.v.element, r) for r in p.roots()]
        assert O.sigma_of_pair(p) == sigma_of_set(sys, roots)


@pytest.mark.parametrize("label", SYSTEMS + EXTRA)
def test_classification_is_total_and_consistent(label):
    par = parse_label(label)
    simply_laced = par.system.simply_laced
    for p in O.enumerate_pairs(par):
        sig = O.sigma_of_pair(p)
        for a in range(par.system.rank):
            case = O.classify(a, p)
            assert case.label in O.LABELS
            q = O.m_alpha(a, p)
            assert (q != p) == case.is_ascent
            assert O.m_alpha(a, q) == q
            down = not par.system.root(sig.matrix[:, a]).is_positive
            assert case.is_ascent == (not down and case.label != "compact_imaginary")
            if simply_laced:
                assert case.label not in ("c1", "real_descent_S")


def test_c1_example_c3():
    par = setting("C", 3)
    sys = par.system
    g = sys.from_e((1, 1, 0))
    beta = sys.from_e((1, -1, 0))
    found = 0
    for p in O.enumerate_pairs(par):
        if par.psi_index[g] not in p.s:
            continue
        for a in range(3):
            case = O.classify(a, p)
            if case.beta == beta and case.label == "c1":
                found += 1
                assert case.witness == g
                q = O.m_alpha(a, p)
                new = set(q.roots()) - set(p.roots())
                assert new == {sys.from_e((2, 0, 0)), sys.from_e((0, 2, 0))}
                assert q.v == p.v
    assert found


def test_compact_imaginary_at_identity():
    par = setting("A", 3, 2)
    p = O.enumerate_pairs(par)[0]
    for a in par.delta_p:
        assert O.classify(a, p).label == "compact_imaginary"
        assert O.m_alpha(a, p) == p


def test_d1_example_b3():
    par = setting("B", 3)
    sys = par.system
    e = sys.from_e
    v = O.v_tau(par, e((1, 0, 0)))
    p = O.AdmissiblePair(v, par.indices([e((1, 0, -1))]))
    target = e((1, 0, 1))
    alpha = sys.simple_roots.index(apply(v.element, target))
    case = O.classify(alpha, p)
    assert case.label == "noncompact_imaginary_d1" and case.beta == target
    q = O.m_alpha(alpha, p)
    assert q.v.element == simple_reflection(sys, alpha) * v.element
    assert set(q.roots()) == {e((1, 0, -1)), e((1, 0, 1))}
    assert O.sigma_of_pair(q) == circ(alpha, O.sigma_of_pair(p))


@pytest.mark.parametrize("label", SYSTEMS)
def test_m_alpha_sigma_compatibility(label):
    par = parse_label(label)
    for p in O.enumerate_pairs(par):
        for a in range(par.system.rank):
            q = O.m_alpha(a, p)
            if q != p:
                assert O.sigma_of_pair(q) == circ(a, O.sigma_of_pair(p))
                assert O.orbit_inv_length(q) == O.orbit_inv_length(p) + 1


@pytest.mark.parametrize("label", SYSTEMS + EXTRA)
def test_e_alpha(label):
    par = parse_label(label)
    sys = par.system
    for p in O.enumerate_pairs(par):
        sig = O.sigma_of_pair(p)
        for a in range(sys.rank):
            E = O.e_alpha(a, p)
            down = not sys.root(sig.matrix[:, a]).is_positive
            assert bool(E) == down
            case = O.classify(a, p)
            if case.label in ("complex_descent_v", "complex_descent_S", "real_descent_S"):
                assert len(E) == 1
            if case.label == "real_descent":
                b = par.psi_index[-case.beta]
                rest = tuple(x for x in p.s if x != b)
                lower_v = wp_from_inversions(par, set(p.v.inversion_set) - {b})
                assert lower_v.element == simple_reflection(sys, a) * p.v.element
                assert set(E) == {O.AdmissiblePair(lower_v, rest), O.AdmissiblePair(p.v, rest)}


def test_ordering_of_rank_two_pairs_b3_b4():
    for label in ("B3:1", "B4:1"):
        par = parse_label(label)
        sys = par.system
        rm = O.max_rank_pairs(par)
        assert all(len(p.s) == 2 for p in rm)

        def j_of(p):
            return next(k for k, x in enumerate(sys.to_e(p.roots()[0]), start=1) if k > 1 and x)

        for p, q in itertools.product(rm, repeat=2):
            expect = wp_leq(p.v, q.v) and j_of(p) >= j_of(q)
            assert O.bruhat_leq_pairs(p, q) == expect


@pytest.mark.parametrize("label", SYSTEMS)
def test_closed_order_equals_oracle(label):
    par = parse_label(label)
    assert np.array_equal(O.closed_order(par).leq, O.standard_order_oracle(par).leq)


def test_b3_extrema():
    par = setting("B", 3)
    rel = O.standard_order_oracle(par).check()
    pairs = O.enumerate_pairs(par)
    tops = rel.maximal()
    assert len(tops) == 1
    top = pairs[tops[0]]
    assert top.v.inversion_set == tuple(range(5)) and len(top.s) == 2
    # the minimal orbits are exactly the pairs with empty S, one per element of W^P
    assert sorted(pairs[i].key for i in rel.minimal()) == sorted((v.inversion_set, ()) for v in wp_elements(par))


def test_order_is_reflexive():
    par = setting("C", 2)
    for p in O.enumerate_pairs(par):
        assert O.bruhat_leq_pairs(p, p)


def test_minimal_max_rank():
    par = setting("A", 3, 2)
    p0 = O.minimal_max_rank(par)
    assert sorted(par.system.to_e(r) for r in p0.roots()) == sorted([(1, 0, -1, 0), (0, 1, 0, -1)])
    par = setting("B", 3)
    e = par.system.from_e
    p0 = O.minimal_max_rank(par)
    assert p0.v == O.v_tau(par, e((1, 0, 1)))
    assert set(p0.roots()) == {e((1, 0, -1)), e((1, 0, 1))}
    with pytest.raises(ValueError):
        O.minimal_max_rank(setting("A", 4, 2))


@pytest.mark.parametrize("label", ["A3:2", "D4:1", "B3:1", "B4:1", "A5:3"])
def test_max_rank_properties(label):
    par = parse_label(label)
    sys = par.system
    rm = O.max_rank_pairs(par)
    assert len({len(p.s) for p in rm}) == 1
    p0 = O.minimal_max_rank(par)
    assert all(wp_leq(p0.v, p.v) for p in rm)
    for p in rm:
        for a in range(sys.rank):
            q = O.m_alpha(a, p)
            if q != p:
                assert par.is_max_rank(q.s) and len(q.s) == len(p.s)
    if sys.simply_laced:
        assert not any(par.psi_leq[i, j] or par.psi_leq[j, i] for i, j in itertools.combinations(p0.s, 2))
        # maximum-rank pairs are determined by their involution, and ordered by it
        for p, q in itertools.product(rm, repeat=2):
            assert O.bruhat_leq_pairs(q, p) == bruhat_leq(O.sigma_of_pair(q), O.sigma_of_pair(p))
            if O.sigma_of_pair(p) == O.sigma_of_pair(q):
                assert p == q
            # the coset part does not depend on S
            assert min_coset_rep(p.v.element * O.sigma_S(p), par) == \
                min_coset_rep(p.v.element * O.sigma_S(O.AdmissiblePair(p.v, p0.s)), par)
        # every root of S_0 lies above some root of any other maximum-rank S
        for p in rm:
            if p.s != p0.s:
                assert all(any(par.psi_leq[a, b] for a in p.s) for b in p0.s)
        # each simple root is orthogonal to v(S), is minus a root of it, or meets exactly two
        for p in rm:
            vs = [apply(p.v.element, r) for r in p.roots()]
            for a in sys.simple_roots:
                hits = sum(sys.inner(a, r) != 0 for r in vs)
                assert hits == 0 or -a in vs or hits == 2


def test_order_below_e1_pairs_b4():
    par = setting("B", 4)
    sys = par.system
    e1 = sys.from_e((1, 0, 0, 0))
    rel = O.closed_order(par)
    for w in wp_elements(par):
        if par.psi_index[e1] not in w.inversion_set:
            continue
        left = O.AdmissiblePair(w, par.indices([e1]))
        beta = par.psi[max(w.inversion_set)]
        for p in O.enumerate_pairs(par):
            if len(p.s) != 1 or p.roots()[0] == e1:
                continue
            g = p.roots()[0]
            perp = [r for r in par.psi if r != g and sys.inner(r, g) == 0]
            assert len(perp) == 1
            expect = wp_leq(w, p.v) and par.psi_leq[par.psi_index[beta], par.psi_index[perp[0]]] \
                and beta != perp[0]
            assert rel.le(O.pair_index(left), O.pair_index(p)) == expect


def test_max_H_examples():
    par = setting("B", 3)
    e = par.system.from_e
    first = O.enumerate_pairs(par)[0]
    assert O.max_H(first) is None
    v = O.v_tau(par, e((1, 1, 0)))
    p = O.AdmissiblePair(v, par.indices([e((1, -1, 0))]))
    want = O.AdmissiblePair(O.v_tau(par, e((1, 0, 1))), par.indices([e((1, 0, -1)), e((1, 0, 1))]))
    assert O.max_H(p) == want == O.max_H_bruteforce(p)
    # gamma = e1 - e_n falls in the empty case of the table
    q = O.AdmissiblePair(v, par.indices([e((1, 0, -1))]))
    assert O.max_H(q) is None and O.max_H_bruteforce(q) is None
    with pytest.raises(ValueError):
        O.max_H(O.enumerate_pairs(setting("C", 2))[0])


@pytest.mark.parametrize("label", ["B3:1", "B4:1", "B5:1"])
def test_max_H_table(label):
    par = parse_label(label)
    for p in O.enumerate_pairs(par):
        assert O.max_H(p) == O.max_H_bruteforce(p)


def test_hasse_b3():
    par = setting("B", 3)
    edges = hasse(O.closed_order(par))
    leq = O.closed_order(par).leq
    for i, j in edges:
        assert leq[i, j] and i != j
    # covering relations raise the involution length by at least one
    pairs = O.enumerate_pairs(par)
    assert all(O.orbit_inv_length(pairs[j]) > O.orbit_inv_length(pairs[i]) for i, j in edges)


def test_ascent_path_and_subwords_a3():
    par = setting("A", 3, 2)
    p0 = O.minimal_max_rank(par)
    for p in O.max_rank_pairs(par):
        word = O.ascent_path(p0, p)
        assert word is not None
        assert inv_length(O.sigma_of_pair(p)) == inv_length(O.sigma_of_pair(p0)) + len(word)
