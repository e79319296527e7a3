"""Finite partial orders as boolean matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def transitive_closure(R: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation (repeated squaring)."""
    n = R.shape[0]
    C = R.astype(bool) | np.eye(n, dtype=bool)
    while True:
        Ci = C.astype(np.int32)
        nxt = (Ci @ Ci) > 0
        if np.array_equal(nxt, C):
            return C
        C = nxt


def is_partial_order(R: np.ndarray) -> bool:
    n = R.shape[0]
    if not R.diagonal().all():
        return False
    if (R & R.T & ~np.eye(n, dtype=bool)).any():
        return False
    return np.array_equal(transitive_closure(R), R)


@dataclass(frozen=True, eq=False)
class OrderRelation:
    """Reflexive, antisymmetric, transitive relation; ``leq[i, j]`` means i <= j."""

    elements: tuple
    leq: np.ndarray

    def __post_init__(self):
        self.leq.setflags(write=False)
        if self.leq.shape != (len(self.elements), len(self.elements)):
            raise ValueError("matrix shape does not match the element list")

    def __len__(self) -> int:
        return len(self.elements)

    def check(self) -> OrderRelation:
        if not is_partial_order(self.leq):
            raise ValueError("relation is not a partial order")
        return self

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def restrict(self, idx) -> OrderRelation:
        idx = list(idx)
        return OrderRelation(tuple(self.elements[i] for i in idx), self.leq[np.ix_(idx, idx)].copy())

    def minimal(self) -> list[int]:
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return [j for j in range(len(self)) if not strict[:, j].any()]

    def maximal(self) -> list[int]:
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return [i for i in range(len(self)) if not strict[i, :].any()]


def hasse_matrix(leq: np.ndarray) -> np.ndarray:
    """Covering relation: strict pairs with nothing strictly between."""
    n = leq.shape[0]
    S = leq & ~np.eye(n, dtype=bool)
    Si = S.astype(np.int32)
    return S & ~((Si @ Si) > 0)


def hasse(rel: OrderRelation | np.ndarray) -> list[tuple[int, int]]:
    leq = rel.leq if isinstance(rel, OrderRelation) else np.asarray(rel, dtype=bool)
    if not is_partial_order(leq):
        raise ValueError("relation is not a partial order")
    H = hasse_matrix(leq)
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(H))]


def weak_components(n: int, edges) -> list[list[int]]:
    """Connected components of the undirected graph, each sorted, ordered by smallest member."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values(), key=lambda g: g[0])
