import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermsym.sequences import (delete_pairs, is_alternating, is_terminal, mi, normalize,
                               normalize_trace, pl, reduce)

signs = st.lists(st.sampled_from((1, -1)), max_size=14).map(tuple)


def pl_direct(X):
    total = 0
    for i in range(1, len(X) + 1):
        if X[i - 1] == 1:
            total += 1 if i % 2 == 0 else -1
    return total


def test_pl_mi_examples():
    assert (pl(()), mi(())) == (0, 0)
    assert (pl((1, -1, 1)), mi((1, -1, 1))) == (-2, 1)


def test_reduce_examples():
    assert reduce((1, 1)) == ()
    assert reduce((-1,)) == (-1,)
    assert reduce((1, -1, -1, 1)) == ()
    assert reduce((1, -1)) == (1, -1)
    assert reduce((-1, 1)) == (-1,)


def test_normalize_examples():
    assert normalize((1, -1, 1)) == (1, -1, 1)
    assert normalize((-1, 1, -1)) == (-1, 1, -1)
    assert normalize((-1, -1)) == (1, 1)
    assert normalize(()) == ()


def test_rejects_bad_entries():
    with pytest.raises(ValueError):
        pl((1, 0))


@settings(max_examples=1000, deadline=None)
@given(signs, st.data())
def test_pair_deletion_invariance(X, data):
    spots = [j for j in range(len(X) - 1) if X[j] == X[j + 1]]
    if not spots:
        return
    j = data.draw(st.sampled_from(spots))
    Y = X[:j] + X[j + 2:]
    assert pl(Y) == pl(X) == pl_direct(X)
    assert mi(Y) == mi(X)
    assert reduce(Y) == reduce(X)


@settings(max_examples=1000, deadline=None)
@given(signs)
def test_deletion_order_independent(X):
    # any greedy order reaches the same alternating sequence
    Y = list(X)
    while True:
        spots = [j for j in range(len(Y) - 1) if Y[j] == Y[j + 1]]
        if not spots:
            break
        j = spots[-1]
        del Y[j:j + 2]
    assert tuple(Y) == delete_pairs(X)
    assert is_alternating(delete_pairs(X))


@settings(max_examples=1000, deadline=None)
@given(signs)
def test_normalize_properties(X):
    trace = normalize_trace(X)
    assert is_terminal(trace[-1])
    assert len(trace) <= (len(X) + 1) ** 2
    assert all(reduce(Y) == reduce(X) for Y in trace)
    assert normalize(X) == trace[-1]


@settings(max_examples=500, deadline=None)
@given(signs, signs)
def test_normal_form_depends_only_on_reduced_form(X, Y):
    if len(X) == len(Y) and reduce(X) == reduce(Y):
        assert normalize(X) == normalize(Y)
