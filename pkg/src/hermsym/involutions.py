"""Involutions of W: the twisted action of simple reflections and its length."""

from __future__ import annotations

import numpy as np

from .rootsys import Root, RootSystem, is_orthogonal_set
from .weyl import (WeylElement, identity, is_negative, length, multiply,
                   reflection, simple_reflection)


def is_involution(w: WeylElement) -> bool:
    return np.array_equal(w.matrix @ w.matrix, np.eye(w.system.rank, dtype=np.int64))


def check_involution(w: WeylElement) -> WeylElement:
    if not is_involution(w):
        raise ValueError("element is not an involution")
    return w


def circ(alpha: int, sigma: WeylElement) -> WeylElement:
    """s_a o sigma: s_a sigma when the two commute, s_a sigma s_a otherwise."""
    s = simple_reflection(sigma.system, alpha)
    left = multiply(s, sigma)
    if left == multiply(sigma, s):
        return left
    return multiply(left, s)


def minus_one_dim(sigma: WeylElement) -> int:
    """lambda(sigma): dimension of the (-1)-eigenspace."""
    r = sigma.system.rank
    return r - int(np.linalg.matrix_rank(sigma.matrix + np.eye(r, dtype=np.int64)))


def inv_length(sigma: WeylElement) -> int:
    """L(sigma) = (l(sigma) + lambda(sigma)) / 2."""
    total = length(sigma) + minus_one_dim(sigma)
    assert total % 2 == 0, "L must be an integer"
    return total // 2


def sigma_of_set(sys: RootSystem, roots) -> WeylElement:
    """Product of the reflections in a pairwise orthogonal set of roots."""
    roots = list(roots)
    if not is_orthogonal_set(sys, roots):
        raise ValueError("roots are not pairwise orthogonal")
    w = identity(sys)
    for r in roots:
        w = multiply(w, reflection(sys, r))
    return w


def real_descent_set(sigma: WeylElement) -> set[Root]:
    """All roots negated by sigma."""
    sys = sigma.system
    out = set()
    for r in sys.roots:
        img = sigma.matrix @ np.array(r.coeffs, dtype=np.int64)
        if tuple(int(x) for x in img) == (-r).coeffs:
            out.add(r)
    return out


def is_descent(alpha: int, sigma: WeylElement) -> bool:
    return is_negative(sigma.matrix[:, alpha])


def circ_word_apply(sys: RootSystem, word, start: WeylElement | None = None) -> WeylElement:
    """Left-to-right circ composition: s_{w_k} o ... o s_{w_1} o start."""
    sigma = identity(sys) if start is None else start
    for a in word:
        sigma = circ(a, sigma)
    return sigma


def circ_reduced_word(sigma: WeylElement) -> list[int]:
    """Word of length L(sigma) whose circ-composition from the identity gives sigma."""
    peeled = []
    cur = sigma
    while True:
        a = next((i for i in range(cur.system.rank) if is_descent(i, cur)), None)
        if a is None:
            break
        peeled.append(a)
        cur = circ(a, cur)
    assert cur == identity(sigma.system)
    return peeled[::-1]


def involutions_of(sys: RootSystem) -> list[WeylElement]:
    """All involutions of W (including the identity), generated by the circ action."""
    start = identity(sys)
    seen = {start.key: start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for a in range(sys.rank):
                t = circ(a, s)
                if t.key not in seen:
                    seen[t.key] = t
                    nxt.append(t)
        frontier = nxt
    return list(seen.values())
