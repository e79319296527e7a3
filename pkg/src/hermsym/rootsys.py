"""Irreducible root systems with a cominuscule parabolic node.

Roots are stored as integer coefficient vectors over the simple roots.
Simple roots and Cartan matrices follow Bourbaki numbering; the public
``node`` argument is the 1-based Bourbaki label of the simple root, while
simple-root *indices* used by the Weyl group code are 0-based positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

SUPPORTED_TYPES = ("A", "B", "C", "D", "E6", "E7")


@dataclass(frozen=True, order=True)
class Root:
    """A root in simple-root coordinates.

    ``long`` is False only for the short roots of types B and C.
    """

    coeffs: tuple[int, ...]
    long: bool = field(default=True, compare=False)

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coeffs), self.long)

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __repr__(self) -> str:
        return f"Root({list(self.coeffs)})"


def _cartan(type_label: str, rank: int) -> np.ndarray:
    n = rank
    if type_label in ("E6", "E7"):
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if n == 7:
            edges.append((6, 7))
        C = 2 * np.eye(n, dtype=np.int64)
        for a, b in edges:
            C[a - 1, b - 1] = C[b - 1, a - 1] = -1
        return C
    C = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        C[i, i + 1] = C[i + 1, i] = -1
    if type_label == "B":
        C[n - 2, n - 1] = -2
    elif type_label == "C":
        C[n - 1, n - 2] = -2
    elif type_label == "D":
        C[n - 2, n - 1] = C[n - 1, n - 2] = 0
        C[n - 3, n - 1] = C[n - 1, n - 3] = -1
    return C


def _squared_lengths(type_label: str, rank: int) -> list[int]:
    # short roots have squared length 2
    if type_label == "B":
        return [4] * (rank - 1) + [2]
    if type_label == "C":
        return [2] * (rank - 1) + [4]
    return [2] * rank


def _e_chart(type_label: str, rank: int) -> np.ndarray | None:
    """Columns are the simple roots written in the e_i basis."""
    n = rank
    if type_label == "A":
        M = np.zeros((n + 1, n), dtype=np.int64)
        for i in range(n):
            M[i, i], M[i + 1, i] = 1, -1
        return M
    if type_label in ("B", "C", "D"):
        M = np.zeros((n, n), dtype=np.int64)
        for i in range(n - 1):
            M[i, i], M[i + 1, i] = 1, -1
        if type_label == "B":
            M[n - 1, n - 1] = 1
        elif type_label == "C":
            M[n - 1, n - 1] = 2
        else:
            M[n - 2, n - 1] = M[n - 1, n - 1] = 1
        return M
    return None


class RootSystem:
    """Root table, Cartan matrix and invariant form of one irreducible system.

    ``cartan[i, j] = 2 (a_i, a_j) / (a_j, a_j)`` and ``form[i, j] = (a_i, a_j)``.
    Instances are treated as immutable.
    """

    def __init__(self, type_label: str, rank: int):
        self.type_label = type_label
        self.rank = rank
        self.cartan = _cartan(type_label, rank)
        lengths = _squared_lengths(type_label, rank)
        self.form = self.cartan * np.array(lengths, dtype=np.int64)[None, :] // 2
        assert (self.form == self.form.T).all()
        self.max_length = max(lengths)
        self.simply_laced = len(set(lengths)) == 1
        self._e_matrix = _e_chart(type_label, rank)

        table = self._generate()
        pos = sorted((c for c in table if any(x > 0 for x in c)), key=lambda c: (sum(c), c))
        self.positive_roots: tuple[Root, ...] = tuple(self._make(c) for c in pos)
        negs = tuple(-r for r in self.positive_roots)
        self.roots: tuple[Root, ...] = self.positive_roots + negs
        self.simple_roots: tuple[Root, ...] = tuple(
            self._make(tuple(int(i == j) for j in range(rank))) for i in range(rank)
        )
        self.highest_root: Root = self.positive_roots[-1]
        self._index = {r.coeffs: k for k, r in enumerate(self.roots)}
        self.positive_matrix = np.array([r.coeffs for r in self.positive_roots], dtype=np.int64)
        # per-system memo for Bruhat comparisons; values are pure functions of the keys
        self.bruhat_cache: dict[tuple[bytes, bytes], bool] = {}

    @property
    def label(self) -> str:
        return self.type_label if self.type_label.startswith("E") else f"{self.type_label}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"

    def _generate(self) -> set[tuple[int, ...]]:
        n = self.rank
        start = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(start)
        frontier = list(start)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(n):
                    pairing = sum(c[j] * int(self.cartan[j, i]) for j in range(n))
                    img = list(c)
                    img[i] -= pairing
                    img = tuple(img)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return seen

    def _make(self, coeffs: tuple[int, ...]) -> Root:
        v = np.array(coeffs, dtype=np.int64)
        return Root(tuple(int(x) for x in coeffs), bool(v @ self.form @ v == self.max_length))

    # -- lookups -------------------------------------------------------------

    def is_root(self, coeffs) -> bool:
        return tuple(int(x) for x in coeffs) in self._index

    def root(self, coeffs) -> Root:
        key = tuple(int(x) for x in coeffs)
        try:
            return self.roots[self._index[key]]
        except KeyError:
            raise ValueError(f"{list(key)} is not a root of {self.label}") from None

    def inner(self, a, b) -> int:
        x = np.asarray(getattr(a, "coeffs", a), dtype=np.int64)
        y = np.asarray(getattr(b, "coeffs", b), dtype=np.int64)
        return int(x @ self.form @ y)

    def coroot_pairing(self, x, beta: Root) -> int:
        """<x, beta^vee> = 2 (x, beta) / (beta, beta)."""
        num = 2 * self.inner(x, beta)
        den = self.inner(beta, beta)
        assert num % den == 0
        return num // den

    def add(self, a: Root, b: Root) -> Root | None:
        s = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        return self.roots[self._index[s]] if s in self._index else None

    def sub(self, a: Root, b: Root) -> Root | None:
        s = tuple(x - y for x, y in zip(a.coeffs, b.coeffs))
        return self.roots[self._index[s]] if s in self._index else None

    # -- e_i chart for the classical types ---------------------------------

    def to_e(self, root: Root) -> tuple[int, ...]:
        if self._e_matrix is None:
            raise ValueError(f"no e_i chart for {self.label}")
        return tuple(int(x) for x in self._e_matrix @ np.array(root.coeffs, dtype=np.int64))

    def from_e(self, vec) -> Root:
        if self._e_matrix is None:
            raise ValueError(f"no e_i chart for {self.label}")
        M = [[Fraction(int(x)) for x in row] for row in self._e_matrix]
        b = [Fraction(int(x)) for x in vec]
        if len(b) != len(M):
            raise ValueError("wrong number of e_i coordinates")
        coeffs = _solve_exact(M, b)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            raise ValueError(f"{list(vec)} is not in the root lattice of {self.label}")
        return self.root([int(c) for c in coeffs])

    def e_label(self, root: Root) -> str:
        """Human readable form such as ``e1-e3`` or ``2e2``."""
        if self._e_matrix is None:
            return str(list(root.coeffs))
        parts = []
        for i, x in enumerate(self.to_e(root), start=1):
            if x == 0:
                continue
            sign = "-" if x < 0 else "+"
            mag = "" if abs(x) == 1 else str(abs(x))
            parts.append(f"{sign}{mag}e{i}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def _solve_exact(M, b):
    """Solve the (possibly overdetermined, consistent) system M x = b over Q."""
    rows, cols = len(M), len(M[0])
    A = [list(M[i]) + [b[i]] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    if any(all(x == 0 for x in A[i][:cols]) and A[i][cols] != 0 for i in range(rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(piv_cols):
        x[c] = A[i][cols] / A[i][c]
    return x


_SYSTEMS: dict[tuple[str, int], RootSystem] = {}


def build_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Return the root system of the given type (cached, immutable)."""
    t = type_label.upper()
    if t in ("E6", "E7"):
        if rank is not None and rank != int(t[1]):
            raise ValueError(f"{t} has rank {t[1]}")
        rank = int(t[1])
    elif t == "E":
        if rank not in (6, 7):
            raise ValueError("type E is supported only in ranks 6 and 7")
        t = f"E{rank}"
    elif t in ("A", "B", "C", "D"):
        if rank is None or rank < 2:
            raise ValueError(f"type {t} needs rank >= 2")
        if t == "B" and rank < 3:
            raise ValueError("type B needs rank > 2")
        if t == "D" and rank < 4:
            raise ValueError("type D needs rank >= 4")
    else:
        raise ValueError(f"unsupported type {type_label!r}; expected one of {SUPPORTED_TYPES}")
    key = (t, rank)
    if key not in _SYSTEMS:
        _SYSTEMS[key] = RootSystem(t, rank)
    return _SYSTEMS[key]


def cominuscule_nodes(sys: RootSystem) -> list[int]:
    """1-based labels of the simple roots with coefficient 1 in the highest root."""
    return [i + 1 for i, c in enumerate(sys.highest_root.coeffs) if c == 1]


def root_leq(a: Root, b: Root) -> bool:
    """a <= b iff b - a is a nonnegative combination of simple roots."""
    return all(y >= x for x, y in zip(a.coeffs, b.coeffs))


class ParabolicData:
    """The cominuscule parabolic attached to one node.

    ``psi`` lists the positive roots outside the Levi subsystem, sorted by
    height and then lexicographically; Psi-indices refer to this order.
    """

    def __init__(self, sys: RootSystem, node: int):
        if node not in cominuscule_nodes(sys):
            raise ValueError(f"node {node} of {sys.label} is not cominuscule; "
                             f"choose from {cominuscule_nodes(sys)}")
        self.system = sys
        self.node = node
        k = node - 1
        self.node_index = k
        self.psi: tuple[Root, ...] = tuple(r for r in sys.positive_roots if r.coeffs[k] > 0)
        self.phi_p_plus: tuple[Root, ...] = tuple(r for r in sys.positive_roots if r.coeffs[k] == 0)
        self.delta_p: tuple[int, ...] = tuple(i for i in range(sys.rank) if i != k)
        self.psi_index = {r: i for i, r in enumerate(self.psi)}
        n = len(self.psi)
        self.psi_leq = np.array([[root_leq(a, b) for b in self.psi] for a in self.psi], dtype=bool)
        self.psi_orth = np.array(
            [[sys.inner(a, b) == 0 for b in self.psi] for a in self.psi], dtype=bool)
        assert self.psi_leq.shape == (n, n)
        # lazily filled tables shared by weyl/orbits/locsys; contents are pure
        self.cache: dict = {}

    @property
    def label(self) -> str:
        return f"{self.system.label}:{self.node}"

    def __repr__(self) -> str:
        return f"ParabolicData({self.label})"

    def indices(self, roots) -> tuple[int, ...]:
        return tuple(sorted(self.psi_index[r] for r in roots))

    def roots_of(self, idx) -> tuple[Root, ...]:
        return tuple(self.psi[i] for i in idx)

    def is_orthogonal_idx(self, idx) -> bool:
        return all(self.psi_orth[i, j] for i, j in itertools.combinations(idx, 2))

    def orthogonal_subsets(self, within=None) -> list[tuple[int, ...]]:
        """All orthogonal subsets (as sorted index tuples) of ``within`` (default: all of Psi)."""
        pool = sorted(range(len(self.psi)) if within is None else within)
        out: list[tuple[int, ...]] = []

        def grow(current: tuple[int, ...], start: int):
            out.append(current)
            for pos in range(start, len(pool)):
                j = pool[pos]
                if all(self.psi_orth[i, j] for i in current):
                    grow(current + (j,), pos + 1)

        grow((), 0)
        return out

    @property
    def max_rank(self) -> int:
        if "max_rank" not in self.cache:
            self.cache["max_rank"] = max(len(s) for s in self.orthogonal_subsets())
        return self.cache["max_rank"]

    def is_max_rank(self, idx) -> bool:
        """Orthogonal subsets of maximum cardinality in Psi."""
        return len(idx) == self.max_rank

    def is_inclusion_maximal(self, idx) -> bool:
        members = set(idx)
        return all(j in members or not all(self.psi_orth[i, j] for i in idx)
                   for j in range(len(self.psi)))


_PARABOLICS: dict[tuple[str, int, int], ParabolicData] = {}


def parabolic(sys: RootSystem, node: int) -> ParabolicData:
    key = (sys.type_label, sys.rank, node)
    if key not in _PARABOLICS:
        _PARABOLICS[key] = ParabolicData(sys, node)
    return _PARABOLICS[key]


def setting(type_label: str, rank: int | None = None, node: int | None = None) -> ParabolicData:
    """Shortcut: ``setting("B", 3)`` or ``setting("A", 3, 2)``.

    When ``node`` is omitted the system must have a single cominuscule node.
    """
    sys = build_system(type_label, rank)
    if node is None:
        nodes = cominuscule_nodes(sys)
        if len(nodes) != 1:
            raise ValueError(f"{sys.label} has cominuscule nodes {nodes}; pass node=")
        node = nodes[0]
    return parabolic(sys, node)


def parse_label(label: str) -> ParabolicData:
    """Inverse of ``ParabolicData.label``, e.g. ``"B3:1"`` or ``"E6:1"``."""
    name, _, node = label.partition(":")
    name = name.strip().upper()
    if name.startswith("E"):
        t, rank = name, int(name[1:])
    else:
        t, rank = name[0], int(name[1:])
    return setting(t, rank, int(node) if node else None)


def is_orthogonal_set(sys: RootSystem, roots) -> bool:
    roots = list(roots)
    return all(sys.inner(a, b) == 0 for a, b in itertools.combinations(roots, 2))


def is_strongly_orthogonal_set(sys: RootSystem, roots) -> bool:
    """Orthogonal, and no sum or difference of two members is a root."""
    roots = list(roots)
    if not is_orthogonal_set(sys, roots):
        return False
    return all(sys.add(a, b) is None and sys.sub(a, b) is None
               for a, b in itertools.combinations(roots, 2))


def max_rank_subsets(par: ParabolicData) -> list[tuple[int, ...]]:
    return [s for s in par.orthogonal_subsets() if par.is_max_rank(s)]


def incomparable(par: ParabolicData, idx) -> bool:
    return all(not par.psi_leq[i, j] and not par.psi_leq[j, i]
               for i, j in itertools.combinations(idx, 2))


def property_unic(par: ParabolicData) -> bool:
    """At most one maximum-rank orthogonal subset of Psi is pairwise incomparable."""
    family = [s for s in max_rank_subsets(par) if incomparable(par, s)]
    return len(family) <= 1
