import pytest
from hypothesis import given, strategies as st

from dnumbers.errors import DuplicateLabel, EmptyFrame, FrameTooLarge, InvalidSubset, UnknownLabel
from dnumbers.frame import complement, encode_subset, enumerate_subsets, make_frame


def test_make_frame_bit_positions():
    f = make_frame(["a", "b", "c"])
    assert f.size == 3
    assert [encode_subset(f, [x]) for x in "abc"] == [1, 2, 4]


def test_minimal_frame():
    f = make_frame(["x"])
    assert f.size == 1
    assert list(enumerate_subsets(f)) == [0, 1]


@pytest.mark.parametrize(
    "labels, exc",
    [([], EmptyFrame), (["a", "a"], DuplicateLabel), ([""], EmptyFrame),
     ([f"e{i}" for i in range(25)], FrameTooLarge)],
)
def test_make_frame_rejects(labels, exc):
    with pytest.raises(exc):
        make_frame(labels)


def test_frame_at_cap():
    assert make_frame([f"e{i}" for i in range(24)]).full == 2**24 - 1


def test_encode_subset():
    f = make_frame("abc")
    assert encode_subset(f, ["a", "c"]) == 0b101
    assert encode_subset(f, []) == 0
    assert encode_subset(f, ["a", "a", "c"]) == 0b101
    with pytest.raises(UnknownLabel):
        encode_subset(f, ["d"])


@pytest.mark.parametrize("a, expected", [(0b101, 0b010), (0, 0b111), (0b111, 0)])
def test_complement(a, expected):
    assert complement(make_frame("abc"), a) == expected


def test_complement_rejects_out_of_range():
    with pytest.raises(InvalidSubset):
        complement(make_frame("abc"), 8)


def test_enumerate_subsets():
    assert list(enumerate_subsets(make_frame("ab"))) == [0, 1, 2, 3]
    assert len(enumerate_subsets(make_frame("abcd"))) == 16


def test_format_subset():
    f = make_frame("abc")
    assert f.format_subset(0) == "∅"
    assert f.format_subset(0b101) == "a|c"


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
def test_complement_laws(case):
    n, a = case
    f = make_frame([f"q{i}" for i in range(n)])
    c = complement(f, a)
    assert complement(f, c) == a
    assert a & c == 0
    assert a | c == 2**n - 1
