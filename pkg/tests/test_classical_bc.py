from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylstrata import classical_bc as bc
from weylstrata.partition_core import Bipartition, Partition

P = Partition.of
L = bc.BCClassLabel

# pairs of partitions of n
BC_COUNTS = {0: 1, 1: 2, 2: 5, 3: 10, 4: 20, 5: 36, 6: 65}


def test_class_counts():
    for n, want in BC_COUNTS.items():
        assert len(bc.enumerate_classes(n)) == want


def test_b2_labels():
    got = {str(C) for C in bc.enumerate_classes(2)}
    assert got == {"((4),())", "((2,2),())", "((2),(1,1))", "((),(2,2))", "((),(1,1,1,1))"}


def test_class_sizes_sum_to_order():
    for n in range(1, 7):
        assert sum(bc.class_size(C) for C in bc.enumerate_classes(n)) == 2**n * factorial(n)


def test_m_value():
    assert bc.m_value(L(2, P([4]), P([]))) == 0
    assert bc.m_value(L(2, P([2]), P([1, 1]))) == 1
    assert bc.m_value(L(2, P([]), P([2, 2]))) == 1


def test_phi2_examples():
    assert bc.phi2(L(2, P([2, 2]), P([]))).eps_map == {2: 1}
    assert bc.phi2(L(2, P([]), P([2, 2]))).eps_map == {2: 0}
    assert bc.phi2(L(2, P([]), P([1, 1, 1, 1]))).eps_map == {}


def test_fiber_examples():
    u = bc.UnipLabelChar2(4, P([2, 2, 2, 2]), {2: 1})
    assert set(bc.fiber(u)) == {L(4, P([2, 2, 2, 2]), P([])), L(4, P([2, 2]), P([2, 2]))}
    assert bc.max_nonelliptic(u) == L(4, P([2, 2]), P([2, 2]))
    assert bc.min_elliptic(u) == L(4, P([2, 2, 2, 2]), P([]))
    v = bc.UnipLabelChar2(2, P([2, 2]), {2: 0})
    assert bc.fiber(v) == [L(2, P([]), P([2, 2]))]
    assert bc.max_nonelliptic(bc.UnipLabelChar2(1, P([1, 1]))) == L(1, P([]), P([1, 1]))
    assert bc.min_elliptic(bc.UnipLabelChar2(2, P([4]))) == L(2, P([4]), P([]))


def test_cl_membership():
    assert bc.in_CL(L(2, P([2, 2]), P([])))
    assert not bc.in_CL(L(4, P([2, 2, 2, 2]), P([])))
    assert bc.in_CL(L(2, P([]), P([1, 1, 1, 1])))
    assert bc.is_distinguished_CL(L(2, P([4]), P([])))
    assert not bc.is_distinguished_CL(L(2, P([2]), P([1, 1])))
    with pytest.raises(ValueError):
        bc.is_distinguished_CL(L(4, P([2, 2, 2, 2]), P([])))


def test_springer_char2():
    u = bc.UnipLabelChar2(4, P([4, 4]), {4: 1})
    assert bc.springer_bipartition_char2(u) == Bipartition((2, 2))
    assert bc.springer_bipartition_char2(bc.UnipLabelChar2(4, P([6, 2]))) == Bipartition((3, 1))


def test_oddchar_small():
    assert bc.dist_bipartitions_oddchar(2, bc.GroupFlavor.SP) == {Bipartition((2,))}
    assert bc.dist_bipartitions_oddchar(1, bc.GroupFlavor.SP) == {Bipartition((1,))}


def test_mixed_entrywise_sum():
    assert bc.mixed_bipartition((4,), (4,), bc.GroupFlavor.SP, 4) == Bipartition((4,))
    assert bc.mixed_bipartition((3,), (5, 1), bc.GroupFlavor.SO_ODD, 4) == Bipartition((4,))
    with pytest.raises(ValueError):
        bc.mixed_bipartition((3,), (2,), bc.GroupFlavor.SP)


def test_ws_type_examples():
    assert bc.ws_type(L(2, P([4]), P([]))).parts == (1, 1)
    assert bc.ws_type(L(2, P([2, 2]), P([]))).parts == (2,)
    assert bc.ws_type(L(7, P([6, 4, 4]), P([]))).parts == (3, 3, 1)
    with pytest.raises(ValueError):
        bc.ws_type(L(2, P([2]), P([1, 1])))


def test_cl_dist_small():
    assert {str(C) for C in bc.enumerate_CL_dist(2)} == {"((4),())", "((2,2),())"}
    assert {str(C) for C in bc.enumerate_CL_dist(3)} == {"((6),())", "((4,2),())"}


def test_elementary_edge_b3():
    assert bc.elementary_edges(3) == [(L(3, P([2, 2, 2]), P([])), L(3, P([2]), P([2, 2])))]
    assert bc.elementary_edges(2) == []


def test_fuse():
    assert bc.fuse(3, [(2,)], L(1, P([2]), P([]))) == L(3, P([2]), P([2, 2]))
    assert bc.fuse(2, [(1, 1)], None) == L(2, P([]), P([1, 1, 1, 1]))


@given(st.integers(1, 7), st.data())
def test_fiber_contains_class(n, data):
    C = data.draw(st.sampled_from(bc.enumerate_classes(n)))
    u = bc.phi2(C)
    f = bc.fiber(u)
    assert C in f
    assert bc.max_nonelliptic(u) in f and bc.in_CL(bc.max_nonelliptic(u))
    assert all(bc.m_value(x) <= bc.m_value(bc.max_nonelliptic(u)) for x in f)


@given(st.integers(1, 8), st.data())
def test_mixed_lands_in_char2_set(n, data):
    pairs = list(bc.mixed_inputs(n, bc.GroupFlavor.SP))
    nu, nu2 = data.draw(st.sampled_from(pairs))
    x = bc.mixed_bipartition(nu, nu2, bc.GroupFlavor.SP, n)
    assert bc.is_char2_distinguished_bipartition(x, n)
