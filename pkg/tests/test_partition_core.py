from hypothesis import given
from hypothesis import strategies as st

from weylstrata.partition_core import (
    Bipartition,
    Partition,
    bar_sequence,
    classify,
    doubled,
    enumerate_partitions,
    halved,
    in_class,
    partitions,
    step_bounded_sequences,
)

# partition numbers p(0..12)
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_partition_counts():
    for m, want in enumerate(PARTITION_COUNTS):
        assert len(list(partitions(m))) == want


def test_partition_normalizes():
    assert Partition.of([1, 3, 2]).parts == (3, 2, 1)
    assert Partition.of([2, 0, 1]).parts == (2, 1)


def test_classes_small():
    assert classify(Partition.of([4, 2])).in_R
    assert not classify(Partition.of([3, 1])).in_R
    assert classify(Partition.of([2, 2, 1, 1])).in_P
    assert not classify(Partition.of([2, 1])).in_P
    # R_ev: even parts, even number of parts
    assert in_class(Partition.of([4, 2]), "R_ev")
    assert not in_class(Partition.of([6]), "R_ev")


def test_enumerate_R():
    # partitions of 8 into even parts <-> partitions of 4
    assert len(enumerate_partitions(8, "R")) == 5


def test_bar_sequence_examples():
    assert bar_sequence(Partition.of([6])).parts == (1, 1, 1)
    assert bar_sequence(Partition.of([4, 2])).parts == (2, 1)
    assert bar_sequence(Partition.of([4, 2, 2])).parts == (3, 1)


def test_step_bounded_small():
    assert [s.parts for s in step_bounded_sequences(3)] in ([(2, 1), (1, 1, 1)], [(1, 1, 1), (2, 1)])


def test_bipartition_size():
    x = Bipartition((3, 1, 1))
    assert x.size() == 5


@given(st.lists(st.integers(1, 6), max_size=6))
def test_doubled_halved_roundtrip(parts):
    lam = Partition.of(parts)
    assert halved(doubled(lam)) == lam
    assert doubled(lam).size() == 2 * lam.size()
    assert classify(doubled(lam)).in_P


@given(st.lists(st.integers(1, 5), min_size=1, max_size=6))
def test_bar_sequence_total(halves):
    r = Partition.of([2 * x for x in halves])
    assert sum(bar_sequence(r).parts) == r.size() // 2


@given(st.integers(0, 10))
def test_partitions_are_distinct_and_sized(m):
    ps = list(partitions(m))
    assert len(set(ps)) == len(ps)
    assert all(p.size() == m for p in ps)
