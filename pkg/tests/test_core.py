import pytest
from hypothesis import given, strategies as st

from d2parts.core import (
    Overpartition,
    Partition,
    classify,
    conjugate,
    format_overpartition,
    parse_overpartition,
    parse_partition,
    pentagonal_index,
    pentagonal_number,
    satisfies_d2,
    staircase,
    weight,
)
from d2parts.enumerate import generate

partitions_st = st.lists(st.integers(1, 12), max_size=10).map(Partition)


def columns_by_counting(parts):
    # brute force: column j has one cell per row of length >= j
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x >= j) for j in range(1, max(parts) + 1))


@pytest.mark.parametrize("parts, expected", [((3, 1), 4), ((), 0), ((2, 1, 1), 4)])
def test_weight(parts, expected):
    assert weight(Partition(parts)) == expected


@pytest.mark.parametrize(
    "parts, expected",
    [((3, 1), (2, 1, 1)), ((), ()), ((5, 3, 3, 1, 1), columns_by_counting((5, 3, 3, 1, 1)))],
)
def test_conjugate(parts, expected):
    assert conjugate(parts) == expected


def test_figure2_left_diagram_is_self_conjugate():
    assert columns_by_counting((5, 3, 3, 1, 1)) == (5, 3, 3, 1, 1)


def test_partition_normalizes_order():
    assert Partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        Partition([True])


def test_classify():
    f = classify((3, 1))
    assert f.distinct and f.all_odd and f.even_length
    assert not f.self_conjugate and not f.all_even
    f = classify((2, 2))
    assert f.all_even and f.even_length and f.self_conjugate
    assert not f.distinct and not f.all_odd
    f = classify((4, 3, 2))
    assert f.distinct and not f.even_length


@pytest.mark.parametrize("m, n", [(2, 7), (0, 0), (-3, 12)])
def test_pentagonal_number(m, n):
    assert pentagonal_number(m) == n


def test_pentagonal_index_examples():
    idx = pentagonal_index(12)
    assert idx.m == -3 and idx.residue_class == 1
    idx = pentagonal_index(0)
    assert idx.m == 0 and idx.residue_class == 0
    assert pentagonal_index(-1) is None


def test_three_is_not_pentagonal():
    scanned = {m * (3 * m + 1) // 2 for m in range(-3, 4)}
    assert 3 not in scanned
    assert pentagonal_index(3) is None


def test_negative_index_residue_is_nonnegative():
    assert pentagonal_index(pentagonal_number(-4)).residue_class == 0
    assert pentagonal_index(22).m == -4


@pytest.mark.parametrize("n", range(15))
def test_conjugation_is_weight_preserving_involution(n):
    for p in generate("P", n):
        c = conjugate(p)
        assert conjugate(c) == p
        assert weight(c) == n
        assert c == columns_by_counting(p)


@pytest.mark.parametrize("n", range(21))
def test_all_odd_length_parity_matches_weight_parity(n):
    for p in generate("P_o", n):
        assert len(p) % 2 == n % 2


def test_pentagonal_index_round_trip_and_injective():
    seen = {}
    for m in range(-200, 201):
        n = pentagonal_number(m)
        assert pentagonal_index(n).m == m
        assert n not in seen
        seen[n] = m


def test_pentagonal_index_agrees_with_scan():
    values = {pentagonal_number(m): m for m in range(-60, 61)}
    for n in range(3000):
        idx = pentagonal_index(n)
        assert (idx.m if idx else None) == values.get(n)


@pytest.mark.parametrize("m", [-5, -1, 0, 1, 4])
def test_staircase_weight(m):
    s = staircase(m)
    assert sum(s) == pentagonal_number(m)
    assert len(s) == abs(m)


def test_overpartition_rejects_repeated_overlines():
    with pytest.raises(ValueError):
        Overpartition((1,), (2, 2))


def test_d2_constraint():
    assert satisfies_d2(Overpartition((3, 1), (2,)))
    assert not satisfies_d2(Overpartition((2,), (3,)))


def test_text_formats():
    assert parse_partition("6,5,3") == (6, 5, 3)
    assert parse_partition("") == ()
    o = parse_overpartition("o4,2,1")
    assert o.mu == (2, 1) and o.nu == (4,)
    assert format_overpartition(parse_overpartition("2,o2")) == "o2,2"
    assert format_overpartition(o, ascii=False) == "4̅,2,1"
    with pytest.raises(ValueError):
        parse_partition("3,x")


@given(partitions_st, st.lists(st.integers(1, 12), unique=True, max_size=5))
def test_overpartition_text_round_trip(mu, nu):
    o = Overpartition(mu, Partition(nu))
    assert parse_overpartition(format_overpartition(o)) == o


@given(partitions_st)
def test_partition_text_round_trip(p):
    assert parse_partition(str(p)) == p
