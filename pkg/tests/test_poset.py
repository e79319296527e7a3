import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermsym.poset import (OrderRelation, hasse, is_partial_order, transitive_closure,
                           weak_components)


def chain(n):
    return np.triu(np.ones((n, n), dtype=bool))


def test_chain_and_antichain():
    assert hasse(chain(3)) == [(0, 1), (1, 2)]
    assert hasse(np.eye(4, dtype=bool)) == []


def test_not_an_order():
    R = np.ones((2, 2), dtype=bool)
    with pytest.raises(ValueError):
        hasse(R)
    assert not is_partial_order(np.zeros((2, 2), dtype=bool))


def test_components():
    assert weak_components(5, [(0, 2), (3, 4)]) == [[0, 2], [1], [3, 4]]


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 9).flatmap(lambda n: st.lists(st.tuples(st.integers(0, n - 1),
                                                              st.integers(0, n - 1)),
                                                    max_size=15).map(lambda e: (n, e))))
def test_hasse_generates_order(data):
    n, edges = data
    R = np.zeros((n, n), dtype=bool)
    for a, b in edges:
        if a < b:  # forward edges only, so the closure is a partial order
            R[a, b] = True
    C = transitive_closure(R)
    assert is_partial_order(C)
    H = np.zeros_like(C)
    for a, b in hasse(C):
        H[a, b] = True
    assert np.array_equal(transitive_closure(H), C)


def test_order_relation_helpers():
    rel = OrderRelation(("a", "b", "c"), chain(3)).check()
    assert rel.minimal() == [0] and rel.maximal() == [2]
    assert rel.restrict([0, 2]).elements == ("a", "c")
