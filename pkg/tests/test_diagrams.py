import pytest
from hypothesis import given, strategies as st

from gradedorbits.diagrams import (
    canonicalize,
    dimension_vector,
    diagram_from_json,
    diagram_to_json,
    empty_diagram,
    enumerate_by_size,
    enumerate_diagrams,
    multipartitions,
    partitions,
)
from gradedorbits.series import TruncSeries, series_mul, series_one

from conftest import brute_force_diagrams, compositions


def rows_of(diagram):
    return tuple((r.length, r.start) for r in diagram.rows)


def test_canonicalize_sorts_rows():
    d = canonicalize([(1, 2), (2, 1)], 2, "+")
    assert rows_of(d) == ((2, 1), (1, 2))


def test_canonicalize_empty():
    d = canonicalize([], 3, "-")
    assert d.is_empty
    assert d.size == 0
    assert d.partition == ()
    assert d.parts == ()
    assert d.part_gcd == 0


def test_canonicalize_multiset_multiplicity():
    d = canonicalize([(2, 1), (2, 1)], 2, "+")
    assert d.multiplicities(2) == (2, 0)


@pytest.mark.parametrize("rows", [[(1, 0)], [(1, 3)], [(0, 1)], [(-2, 1)]])
def test_canonicalize_rejects_invalid_rows(rows):
    with pytest.raises(ValueError):
        canonicalize(rows, 2, "+")


rows_strategy = st.lists(
    st.tuples(st.integers(1, 5), st.integers(1, 4)), max_size=6
)


@given(rows=rows_strategy, k=st.integers(1, 4), sign=st.sampled_from("+-"))
def test_canonicalize_row_order_invariance(rows, k, sign):
    rows = [(length, (start - 1) % k + 1) for length, start in rows]
    base = canonicalize(rows, k, sign)
    assert canonicalize(list(reversed(rows)), k, sign) == base
    assert canonicalize(sorted(rows), k, sign) == base
    # idempotent
    assert canonicalize(base.rows, k, sign) == base


def test_dimension_vector_examples():
    assert dimension_vector(canonicalize([(2, 1)], 2, "+")) == (1, 1)
    assert dimension_vector(empty_diagram(3)) == (0, 0, 0)
    assert dimension_vector(canonicalize([(2, 1)], 3, "+")) == (1, 0, 1)


@given(rows=rows_strategy, k=st.integers(1, 4), sign=st.sampled_from("+-"))
def test_dimension_vector_totals_size(rows, k, sign):
    rows = [(length, (start - 1) % k + 1) for length, start in rows]
    d = canonicalize(rows, k, sign)
    assert sum(dimension_vector(d)) == d.size


def test_enumerate_diagrams_examples():
    got = enumerate_diagrams(2, "+", (1, 1))
    assert [rows_of(d) for d in got] == [((2, 1),), ((2, 2),), ((1, 1), (1, 2))]
    assert enumerate_diagrams(2, "+", (0, 0)) == [empty_diagram(2, "+")]
    got = enumerate_diagrams(3, "+", (1, 0, 1))
    assert [rows_of(d) for d in got] == [((2, 1),), ((1, 1), (1, 3))]


def test_enumerate_diagrams_rejects_bad_dims():
    with pytest.raises(ValueError):
        enumerate_diagrams(2, "+", (1,))
    with pytest.raises(ValueError):
        enumerate_diagrams(2, "+", (1, -1))


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("sign", ["+", "-"])
def test_enumerate_diagrams_matches_brute_force(k, sign):
    for total in range(5):
        for dims in compositions(total, k):
            got = enumerate_diagrams(k, sign, dims)
            assert len(set(got)) == len(got)
            for d in got:
                assert dimension_vector(d) == dims
            assert {rows_of(d) for d in got} == {
                tuple(sorted(rows, key=lambda r: (-r[0], r[1])))
                for rows in brute_force_diagrams(k, sign, dims)
            }


def test_enumerate_by_size_examples():
    assert len(enumerate_by_size(1, "+", 3)) == 3
    got = enumerate_by_size(2, "+", 1)
    assert [rows_of(d) for d in got] == [((1, 1),), ((1, 2),)]
    got = enumerate_by_size(2, "+", 2)
    assert [rows_of(d) for d in got] == [
        ((2, 1),),
        ((2, 2),),
        ((1, 1), (1, 1)),
        ((1, 1), (1, 2)),
        ((1, 2), (1, 2)),
    ]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumerate_by_size_is_disjoint_union_over_dims(k):
    for total in range(5):
        combined = []
        for dims in compositions(total, k):
            combined.extend(enumerate_diagrams(k, "-", dims))
        by_size = enumerate_by_size(k, "-", total)
        assert len(by_size) == len(combined)
        assert set(by_size) == set(combined)


def test_partitions_order():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions(0) == ((),)


def test_multipartitions_examples():
    assert multipartitions(1, 0) == (((),),)
    assert multipartitions(2, 2) == (
        ((2,), ()),
        ((1, 1), ()),
        ((1,), (1,)),
        ((), (2,)),
        ((), (1, 1)),
    )
    assert len(multipartitions(1, 4)) == 5


def test_multipartition_count_matches_series():
    # |P_iota(n)| is the x^n coefficient of (sum_j p(j) x^j)^iota
    n_max = 5
    base = TruncSeries(tuple(len(partitions(j)) for j in range(n_max + 1)))
    for iota in range(1, 4):
        power = series_one(n_max)
        for _ in range(iota):
            power = series_mul(power, base)
        for n in range(n_max + 1):
            assert len(multipartitions(iota, n)) == power.coefficient(n)


def test_diagram_json_round_trip():
    d = canonicalize([(3, 2), (1, 1), (1, 1)], 3, "-")
    obj = diagram_to_json(d)
    assert obj == {
        "modulus": 3,
        "sign": "-",
        "rows": [{"len": 3, "start": 2}, {"len": 1, "start": 1}, {"len": 1, "start": 1}],
    }
    assert diagram_from_json(obj) == d


def test_str_forms():
    assert str(empty_diagram(2)) == "empty"
    assert str(canonicalize([(1, 1), (2, 2), (1, 1)], 2, "-")) == "2_2 1_1^2"


def test_multiplicity_data_reconstructs_diagram():
    for k in (1, 2, 3):
        for size in range(5):
            for d in enumerate_by_size(k, "-", size):
                rebuilt = [
                    (length, start)
                    for length in d.parts
                    for start in range(1, k + 1)
                    for _ in range(d.multiplicities(length)[start - 1])
                ]
                assert canonicalize(rebuilt, k, "-") == d
