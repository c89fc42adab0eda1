import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylstrata.weyl_engine.elements import WeylElement, fixed_space_dim
from weylstrata.weyl_engine.elliptic import elliptic_lookup, elliptic_words
from weylstrata.weyl_engine.elliptic_data import CLASS_COUNTS, ELLIPTIC_CHARPOLYS
from weylstrata.weyl_engine.linalg import charpoly, cyclotomic_factors
from weylstrata.weyl_engine.registry import build, parse_type
from weylstrata.weyl_engine.rootsystem import root_system

EXCEPTIONAL = [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]


ROOTS = {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240, "B2": 8, "D4": 24, "A3": 12, "C3": 18}


@pytest.mark.parametrize("name", sorted(ROOTS))
def test_root_counts(name):
    assert root_system(name[0], int(name[1:])).nroots == ROOTS[name]


def test_orders():
    assert build("B", 2).order == 8
    assert build("G", 2).order == 12
    assert build("E", 6).order == 51840


def test_fixed_space():
    rs = root_system("B", 2)
    assert fixed_space_dim(np.eye(2, dtype=np.int64)) == 2
    assert fixed_space_dim(rs.simple_reflections[0]) == 1
    assert fixed_space_dim(rs.word_to_matrix((0, 1))) == 0


def test_parabolic_representatives():
    assert len(build("A", 2).reps) == 3
    assert len(build("B", 2).reps) == 4
    assert len(build("G", 2).reps) == 4


@pytest.mark.parametrize("kind,n", EXCEPTIONAL)
def test_class_counts(kind, n):
    assert len(build(kind, n).classes) == CLASS_COUNTS[f"{kind}{n}"]


@pytest.mark.parametrize("kind,n", EXCEPTIONAL)
def test_elliptic_representatives(kind, n):
    rs = root_system(kind, n)
    words = elliptic_words(kind, n)
    assert list(words) == [lab for lab, _ in ELLIPTIC_CHARPOLYS[f"{kind}{n}"]]
    for word in words.values():
        assert fixed_space_dim(rs.word_to_matrix(word)) == 0
    assert len(elliptic_lookup(kind, n)) == len(words)


def test_identity_and_reflections():
    ctx = build("F", 4)
    assert ctx.classes[ctx.class_of(np.eye(4, dtype=np.int64))].name == "A0"
    names = [ctx.classes[ctx.class_of(s)].name for s in ctx.rs.simple_reflections]
    assert names == ["A1", "A1", "Ã1", "Ã1"]


def test_e7_primed_from_d4():
    ctx = build("E", 7)
    w = ctx.par.w0((1, 2, 3, 4))
    assert ctx.rep((1, 2, 3, 4)).type_name == "D4"
    assert ctx.classes[ctx.class_of(w)].name == "(4A1)″"


def test_e7_in_e8_has_60_classes():
    ctx = build("E", 8)
    assert len(ctx.classes_of_parabolic((0, 1, 2, 3, 4, 5, 6))) == 60


def test_min_length_g2():
    ctx = build("G", 2)
    assert ctx.min_length_in_class(ctx.by_name("G2")) == 2
    assert ctx.min_length_in_class(ctx.by_name("A2")) == 4
    assert ctx.min_length_in_class(ctx.by_name("A0")) == 0


def test_classical_labels_bijective():
    for kind, n in [("B", 4), ("C", 3), ("D", 5), ("A", 4)]:
        ctx = build(kind, n)
        labels = [c.classical for c in ctx.classes]
        assert len(set(labels)) == len(labels)


def test_class_sizes_sum():
    for kind, n in [("G", 2), ("F", 4), ("B", 3)]:
        ctx = build(kind, n)
        assert sum(ctx.class_size(c.index) for c in ctx.classes) == ctx.order


def test_charpoly_cyclotomic():
    rs = root_system("E", 8)
    cox = rs.word_to_matrix(range(8))
    assert cyclotomic_factors(charpoly(cox)) == ((30, 1),)


def test_parse_type():
    assert parse_type("E8") == ("E", 8)
    assert parse_type("b", 4) == ("B", 4)
    with pytest.raises(ValueError):
        parse_type("B4", 5)
    with pytest.raises(ValueError):
        parse_type("X2")


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(EXCEPTIONAL + [("B", 5), ("D", 6), ("C", 4), ("A", 5)]), st.data())
def test_class_of_is_conjugation_invariant(group, data):
    ctx = build(*group)
    c = data.draw(st.sampled_from(ctx.classes))
    word = data.draw(st.lists(st.integers(0, ctx.n - 1), max_size=3 * ctx.n))
    w = WeylElement.from_word(ctx.rs, word)
    x = w * ctx.element(c.index) * w.inverse()
    assert ctx.class_of(x.matrix) == c.index


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([("F", 4), ("E", 6), ("B", 4), ("D", 5)]), st.data())
def test_class_of_preserves_m(group, data):
    ctx = build(*group)
    word = data.draw(st.lists(st.integers(0, ctx.n - 1), max_size=4 * ctx.n))
    m = ctx.rs.word_to_matrix(word)
    assert ctx.classes[ctx.class_of(m)].m == fixed_space_dim(m)
