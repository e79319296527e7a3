"""Weyl group elements as integer matrices, Bruhat order and the quotient W^P."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from .rootsys import ParabolicData, Root, RootSystem


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W acting on simple-root coordinates by ``matrix @ coeffs``."""

    system: RootSystem = field(repr=False)
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.system is other.system \
            and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __call__(self, r: Root) -> Root:
        return apply(self, r)

    def __repr__(self) -> str:
        return f"WeylElement({self.system.label}, word={reduced_word(self)})"


def identity(sys: RootSystem) -> WeylElement:
    return WeylElement(sys, np.eye(sys.rank, dtype=np.int64))


def simple_reflection(sys: RootSystem, i: int) -> WeylElement:
    """s_i for the 0-based simple-root index i."""
    if not 0 <= i < sys.rank:
        raise ValueError(f"simple index {i} out of range for {sys.label}")
    M = np.eye(sys.rank, dtype=np.int64)
    M[i, :] -= sys.cartan[:, i]
    return WeylElement(sys, M)


def reflection(sys: RootSystem, beta: Root) -> WeylElement:
    """s_beta(x) = x - <x, beta^vee> beta."""
    b = np.array(beta.coeffs, dtype=np.int64)
    gb = sys.form @ b
    norm = int(b @ gb)
    row = 2 * gb
    assert (row % norm == 0).all()
    M = np.eye(sys.rank, dtype=np.int64) - np.outer(b, row // norm)
    return WeylElement(sys, M)


def multiply(u: WeylElement, w: WeylElement) -> WeylElement:
    if u.system is not w.system:
        raise ValueError("elements belong to different root systems")
    return WeylElement(u.system, u.matrix @ w.matrix)


def inverse(w: WeylElement) -> WeylElement:
    # W preserves the form, so M^{-1} = G^{-1} M^T G; the float solve is
    # rounded and then verified exactly
    sys = w.system
    G = sys.form
    inv = np.linalg.solve(G.astype(float), (w.matrix.T @ G).astype(float))
    M = np.rint(inv).astype(np.int64)
    assert np.array_equal(M @ w.matrix, np.eye(sys.rank, dtype=np.int64))
    return WeylElement(sys, M)


def apply(w: WeylElement, r: Root) -> Root:
    if len(r.coeffs) != w.system.rank:
        raise ValueError("dimension mismatch")
    return w.system.root(w.matrix @ np.array(r.coeffs, dtype=np.int64))


def apply_vec(w: WeylElement, coeffs) -> np.ndarray:
    return w.matrix @ np.asarray(coeffs, dtype=np.int64)


def is_negative(vec) -> bool:
    return bool((np.asarray(vec) <= 0).all())


def inversion_mask(w: WeylElement) -> np.ndarray:
    """Boolean mask over ``system.positive_roots``: True where w sends the root negative."""
    images = w.system.positive_matrix @ w.matrix.T
    return (images <= 0).all(axis=1)


def length(w: WeylElement) -> int:
    return int(inversion_mask(w).sum())


def right_descent(w: WeylElement) -> int | None:
    """Smallest i with w(alpha_i) < 0, or None for the identity."""
    for i in range(w.system.rank):
        if (w.matrix[:, i] <= 0).all():
            return i
    return None


def left_descent(w: WeylElement) -> int | None:
    """Smallest i with w^{-1}(alpha_i) < 0, i.e. l(s_i w) < l(w)."""
    return right_descent(inverse(w))


def reduced_word(w: WeylElement) -> list[int]:
    """Reduced word i_1 ... i_k with w = s_{i_1} ... s_{i_k} (greedy right descents)."""
    word = []
    cur = w
    while (i := right_descent(cur)) is not None:
        word.append(i)
        cur = cur * simple_reflection(w.system, i)
    return word[::-1]


def from_word(sys: RootSystem, word) -> WeylElement:
    w = identity(sys)
    for i in word:
        w = w * simple_reflection(sys, i)
    return w


_cache_lock = threading.Lock()


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order on W via the right-descent recursion (memoized per system)."""
    sys = w.system
    if u.system is not sys:
        raise ValueError("elements belong to different root systems")
    cache = sys.bruhat_cache
    stack = [(u, w)]
    # iterative evaluation to stay clear of the recursion limit in E7
    while stack:
        a, b = stack[-1]
        key = (a.key, b.key)
        if key in cache:
            stack.pop()
            continue
        i = right_descent(b)
        if i is None:
            result = right_descent(a) is None
        else:
            s = simple_reflection(sys, i)
            bs = b * s
            sub = (a * s, bs) if (a.matrix[:, i] <= 0).all() else (a, bs)
            sub_key = (sub[0].key, sub[1].key)
            if sub_key not in cache:
                stack.append(sub)
                continue
            result = cache[sub_key]
        with _cache_lock:
            cache[key] = result
        stack.pop()
    return cache[(u.key, w.key)]


def bruhat_less(u: WeylElement, w: WeylElement) -> bool:
    return u != w and bruhat_leq(u, w)


# -- W^P ----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WPElement:
    """Minimal coset representative, identified by its inversion set in Psi."""

    parabolic: ParabolicData = field(repr=False)
    inversion_set: tuple[int, ...]
    element: WeylElement = field(repr=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, WPElement) and self.parabolic is other.parabolic \
            and self.inversion_set == other.inversion_set

    def __hash__(self) -> int:
        return hash(self.inversion_set)

    @property
    def length(self) -> int:
        return len(self.inversion_set)

    def __repr__(self) -> str:
        return f"WP{list(self.inversion_set)}"


def is_saturated(par: ParabolicData, idx) -> bool:
    members = set(idx)
    return all(j in members for i in members for j in range(len(par.psi)) if par.psi_leq[j, i])


def wp_elements(par: ParabolicData) -> list[WPElement]:
    """All of W^P, one element per saturated subset of Psi."""
    if "wp" in par.cache:
        return par.cache["wp"]
    sys = par.system
    start = WPElement(par, (), identity(sys))
    found = {(): start}
    frontier = [start]
    n = len(par.psi)
    while frontier:
        nxt = []
        for v in frontier:
            members = set(v.inversion_set)
            for b in range(n):
                if b in members:
                    continue
                if not all(a in members for a in range(n) if a != b and par.psi_leq[a, b]):
                    continue
                new = tuple(sorted(members | {b}))
                if new in found:
                    continue
                image = apply(v.element, par.psi[b])
                alpha = sys.simple_roots.index(image)  # raises if v(beta) is not simple
                w = simple_reflection(sys, alpha) * v.element
                el = WPElement(par, new, w)
                found[new] = el
                nxt.append(el)
        frontier = nxt
    out = sorted(found.values(), key=lambda e: (len(e.inversion_set), e.inversion_set))
    par.cache["wp"] = out
    par.cache["wp_index"] = {e.inversion_set: k for k, e in enumerate(out)}
    return out


def wp_index(par: ParabolicData, v: WPElement) -> int:
    wp_elements(par)
    return par.cache["wp_index"][v.inversion_set]


def wp_from_inversions(par: ParabolicData, idx) -> WPElement:
    wp = wp_elements(par)
    key = tuple(sorted(idx))
    try:
        return wp[par.cache["wp_index"][key]]
    except KeyError:
        raise ValueError(f"{list(key)} is not a saturated subset of Psi") from None


def psi_inversions(par: ParabolicData, w: WeylElement) -> tuple[int, ...]:
    """Psi-indices of the roots in Psi sent negative by w."""
    return tuple(i for i, r in enumerate(par.psi) if is_negative(apply_vec(w, r.coeffs)))


def wp_leq(v: WPElement, w: WPElement) -> bool:
    return set(v.inversion_set) <= set(w.inversion_set)


def is_in_wp(par: ParabolicData, w: WeylElement) -> bool:
    return all(not is_negative(w.matrix[:, i]) for i in par.delta_p)


def min_coset_rep(w: WeylElement, par: ParabolicData) -> WPElement:
    """[w]^P: the element of W^P in the coset w W_P."""
    sys = par.system
    cur = w
    changed = True
    while changed:
        changed = False
        for i in par.delta_p:
            if is_negative(cur.matrix[:, i]):
                cur = cur * simple_reflection(sys, i)
                changed = True
                break
    return wp_from_inversions(par, psi_inversions(par, cur))


def longest_wp(par: ParabolicData) -> WPElement:
    return wp_from_inversions(par, range(len(par.psi)))
