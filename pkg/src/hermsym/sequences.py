"""Sign sequences: plus/minus numbers, reduced form and the normalization walk.

Positions are 1-based in ``pl`` and ``mi``, so ``pl((1,)) == -1``.
"""

from __future__ import annotations

from collections.abc import Sequence


def _check(X: Sequence[int]) -> tuple[int, ...]:
    X = tuple(int(a) for a in X)
    if any(a not in (1, -1) for a in X):
        raise ValueError("sign sequences contain only +1 and -1")
    return X


def pl(X: Sequence[int]) -> int:
    return sum((-1) ** i for i, a in enumerate(_check(X), start=1) if a == 1)


def mi(X: Sequence[int]) -> int:
    return sum((-1) ** i for i, a in enumerate(_check(X), start=1) if a == -1)


def delete_pairs(X: Sequence[int]) -> tuple[int, ...]:
    """Remove identical adjacent pairs until the sequence alternates."""
    stack: list[int] = []
    for a in _check(X):
        if stack and stack[-1] == a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def reduce(X: Sequence[int]) -> tuple[int, ...]:
    """Reduced form: delete identical adjacent pairs, then a trailing +1 if present."""
    Y = delete_pairs(X)
    if Y and Y[-1] == 1:
        Y = Y[:-1]
    return Y


def is_alternating(X: Sequence[int]) -> bool:
    return all(a != b for a, b in zip(X, X[1:]))


def is_terminal(X: Sequence[int]) -> bool:
    """A (possibly empty) run of +1 followed by an alternating tail."""
    X = _check(X)
    s = 0
    while s < len(X) and X[s] == 1:
        s += 1
    # the last +1 of the run may start the alternating tail
    return is_alternating(X[max(s - 1, 0):])


def normalize_step(X: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """One flip of the walk, returning (new sequence, k), or None when terminal."""
    X = _check(X)
    if is_terminal(X):
        return None
    for k in range(1, len(X)):  # k is 1-based; compare a_k and a_{k+1}
        a_prev = X[k - 2] if k >= 2 else None
        a, b = X[k - 1], X[k]
        if (a_prev is not None and a_prev != a == b) or (a == b == -1):
            Y = list(X)
            Y[k - 1], Y[k] = -a, -b
            return tuple(Y), k
    raise AssertionError(f"no flip position in non-terminal sequence {X}")


def normalize(X: Sequence[int], max_steps: int | None = None) -> tuple[int, ...]:
    X = _check(X)
    limit = max_steps if max_steps is not None else (len(X) + 1) ** 3
    for _ in range(limit + 1):
        step = normalize_step(X)
        if step is None:
            return X
        X = step[0]
    raise RuntimeError("normalization did not terminate within the step bound")


def normalize_trace(X: Sequence[int]) -> list[tuple[int, ...]]:
    """The full walk X = X_0, X_1, ..., X_m with X_m terminal."""
    out = [_check(X)]
    while (step := normalize_step(out[-1])) is not None:
        out.append(step[0])
    return out
