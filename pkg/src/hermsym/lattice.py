"""Integer Smith normal form and lattice torsion."""

from __future__ import annotations


def smith_diagonal(matrix) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    A = [[int(x) for x in row] for row in matrix]
    if not A or not A[0]:
        return []
    m, n = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        done = False
        while not done:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if not done:
                entries = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]] + \
                          [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                _, pi, pj = min(entries)
                A[t], A[pi] = A[pi], A[t]
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
                continue
            # divisibility: the pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is not None:
                i, _ = bad
                A[t] = [a + b for a, b in zip(A[t], A[i])]
                done = False
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def torsion_order(generators, dim: int) -> int:
    """|torsion(Z^dim / span(generators))|: product of invariant factors above 1."""
    gens = [list(g) for g in generators]
    if not gens:
        return 1
    for g in gens:
        if len(g) != dim:
            raise ValueError("generator has wrong dimension")
    out = 1
    for d in smith_diagonal(gens):
        out *= d
    return out
