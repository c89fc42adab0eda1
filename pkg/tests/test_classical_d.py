from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylstrata import classical_d as cd
from weylstrata.partition_core import Bipartition, Partition

P = Partition.of
L = cd.DClassLabel

D_COUNTS = {4: 13, 5: 18, 6: 37, 7: 55, 8: 100}


def test_class_counts():
    for n, want in D_COUNTS.items():
        assert len(cd.enumerate_classes_d(n)) == want


def test_rank_bound():
    with pytest.raises(ValueError):
        cd.enumerate_classes_d(3)


def test_class_sizes_sum_to_order():
    for n in range(4, 8):
        total = sum(cd.class_size_d(C) for C in cd.enumerate_classes_d(n))
        assert total == 2 ** (n - 1) * factorial(n)


def test_split_tags():
    assert cd.is_split_pair(P([]), P([2, 2, 2, 2]))
    assert not cd.is_split_pair(P([]), P([1, 1, 1, 1, 1, 1, 1, 1]))
    with pytest.raises(ValueError):
        L(4, P([]), P([2, 2, 2, 2]))
    split = [C for C in cd.enumerate_classes_d(4) if C.split]
    # halves of p with even parts: (4) and (2,2), two tags each
    assert len(split) == 4


def test_phi2_d():
    u = cd.phi2_d(L(4, P([2, 2]), P([2, 2])))
    assert u.c == P([2, 2, 2, 2]) and u.eps_map == {2: 1} and u.split is None
    v = cd.phi2_d(L(4, P([]), P([2, 2, 2, 2]), "I"))
    assert v.eps_map == {2: 0} and v.split == "I"
    w = cd.phi2_d(L(4, P([]), P([1] * 8)))
    assert w.eps_map == {} and w.split is None


def test_cl_and_distinguished():
    assert cd.in_CL_d(L(4, P([2, 2]), P([2, 2])))
    assert cd.is_distinguished_CL_d(L(4, P([6, 2]), P([])))
    u = cd.DUnipLabelChar2(4, P([2, 2, 2, 2]), {2: 1})
    assert cd.max_nonelliptic_d(u) == L(4, P([2, 2]), P([2, 2]))


def test_springer_char2_d():
    assert cd.springer_bipartition_char2_d(cd.DUnipLabelChar2(4, P([6, 2]))) == Bipartition((4,))
    u = cd.DUnipLabelChar2(4, P([4, 4]), {4: 1})
    assert cd.springer_bipartition_char2_d(u) == Bipartition((3, 1))


def test_oddchar_d():
    assert Bipartition((4,)) in cd.dist_bipartitions_oddchar_d(4)
    assert Bipartition((3, 1)) in cd.dist_bipartitions_oddchar_d(4)


def test_mixed_d():
    assert cd.c_sequence_d((3, 1), (3, 1)) == (6, 2)
    assert cd.mixed_bipartition_d((3, 1), (3, 1), 4) == Bipartition((4,))
    assert cd.c_sequence_d((7, 1), ()) == (6, 2)
    assert cd.mixed_bipartition_d((7, 1), (), 4) == Bipartition((4,))


def test_ws_type_d():
    t = cd.ws_type_d(L(4, P([6, 2]), P([])))
    assert t.symmetric == (1, 1) and t.d_rank == 1 and t.root_count() == 0
    t = cd.ws_type_d(L(4, P([4, 4]), P([])))
    assert t.symmetric == (2,) and t.d_rank == 1 and t.size() == 4


def test_cl_dist_small():
    assert {str(C) for C in cd.enumerate_CL_dist_d(4)} == {"((6,2),())", "((4,4),())"}
    assert len(cd.enumerate_CL_dist_d(5)) == 2


def test_fuse_variant_tags():
    a = cd.fuse_d(4, [(2,), (2,)], None, "I")
    b = cd.fuse_d(4, [(2,), (2,)], None, "II")
    assert a.split == "I" and b.split == "II"
    sub = L(2, P([]), P([2, 2]), "II")
    assert cd.fuse_d(4, [(2,)], sub).split == "II"


def test_parabolic_types_d4():
    shapes = list(cd.parabolic_types_d(4))
    # j = 0 with blocks (4) or (2,2) comes in two variants
    assert sum(1 for _, j, v in shapes if v) == 4
    assert all(j != 1 for _, j, _ in shapes)


@given(st.integers(4, 8), st.data())
def test_fiber_d_extremes(n, data):
    C = data.draw(st.sampled_from(cd.enumerate_classes_d(n)))
    u = cd.phi2_d(C)
    f = cd.fiber_d(u)
    assert C in f
    top = cd.max_nonelliptic_d(u)
    assert top in f and cd.in_CL_d(top)
    assert all(cd.m_value(x) < cd.m_value(top) for x in f if x != top)


@given(st.integers(4, 9), st.data())
def test_mixed_d_lands_in_char2_set(n, data):
    nu, nu2 = data.draw(st.sampled_from(list(cd.mixed_inputs_d(n))))
    assert cd.mixed_bipartition_d(nu, nu2, n) in cd.char2_distinguished_set_d(n)
