import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from friezegrowth.arith import ZZ, LaurentPolynomial, LaurentRing
from friezegrowth.frieze import (
    ConsistencyError,
    DegenerateFriezeError,
    Frieze,
    InconsistentQuiddityError,
    chebyshev_extend,
    frieze_entry,
    growth_coefficient,
    homogeneous_frieze,
    minimal_period,
    verify_unimodularity,
)
from friezegrowth.universal import continuant, universal_quiddity

quiddities = st.lists(st.integers(2, 9), min_size=1, max_size=5)


@pytest.fixture
def right():
    return Frieze((3, 5, 9))


@pytest.fixture
def left():
    return Frieze((6, 20))


def test_boundary_rows(right):
    assert right.row(-1) == (0, 0, 0)
    assert right.row(0) == (1, 1, 1)
    assert right.row(1) == (3, 5, 9)


def test_entries_right_frieze(right):
    assert right.row(2) == (14, 44, 26)
    assert right.row(3) == (123, 127, 121)
    assert (14 * 44 - 1) // 5 == frieze_entry(right, 3, 1)
    assert right[3, 4] == right[3, 1]


def test_entries_left_frieze(left):
    assert left.row(2) == (119, 119)
    assert left.display_row(3) == (2360, 708)
    assert left.row(4) == (14041, 14041)


def test_rows_are_cached_and_listed(right):
    rows = right.rows(4)
    assert len(rows) == 4 and rows[0] == (3, 5, 9)
    assert right.depth >= 4


@pytest.mark.parametrize("q, d", [((6, 20), 2), ((5, 5, 5), 1), ((3, 5, 9), 3), ((2, 3, 2, 3), 2)])
def test_minimal_period(q, d):
    assert minimal_period(q) == d


def test_growth_golden(left, right):
    assert growth_coefficient(left) == 118
    assert growth_coefficient(right) == 118 == 121 - 3
    assert growth_coefficient(right, 0) == 2


def test_growth_second_level_matches_chebyshev(left, right):
    s = chebyshev_extend(118, 3)
    assert s.values == (2, 118, 13922, 118 * 13922 - 118)
    assert growth_coefficient(left, 2) == s[2] == growth_coefficient(right, 2)
    assert growth_coefficient(left, 3) == s[3]


def test_growth_universal_rank_two():
    z1, z2 = LaurentPolynomial.variables(2)
    f = Frieze((z1, z2))
    assert growth_coefficient(f) == z1 * z2 - 2


def test_declared_period_uses_full_length():
    f = Frieze((5, 5, 5))
    # minimal period 1: s_1 = a_1 - a_-1
    assert growth_coefficient(f) == 5
    assert growth_coefficient(f, declared_period=True) == chebyshev_extend(5, 3)[3]


def test_growth_detects_column_dependence(left):
    f = Frieze((6, 20))
    f.row(2)
    f._rows[3] = (119, 120)
    with pytest.raises(ConsistencyError):
        growth_coefficient(f)


def test_chebyshev_fixed_point_and_symbolic():
    assert set(chebyshev_extend(2, 10).values) == {2}
    x, = LaurentPolynomial.variables(1)
    s = chebyshev_extend(x, 2)
    assert s[2] == x ** 2 - 2
    assert len(chebyshev_extend(7, 0)) == 1


@pytest.mark.parametrize("q", [(3, 5, 9), (6, 20)])
def test_unimodularity_golden(q):
    assert verify_unimodularity(Frieze(q), 6)


def test_unimodularity_detects_tampering(right):
    right.row(3)
    right._rows[3] = (15, 44, 26)
    report = verify_unimodularity(right, 3)
    assert not report
    assert report.failure == (1, 1)
    assert report.value == 0


@settings(max_examples=60, deadline=None)
@given(quiddities)
def test_unimodularity_random(q):
    f = Frieze(q)
    assert verify_unimodularity(f, 3 * len(q)).ok


@settings(max_examples=40, deadline=None)
@given(quiddities)
def test_growth_independent_of_column_and_chebyshev(q):
    f = Frieze(q)
    s = chebyshev_extend(growth_coefficient(f), 3)
    for k in (2, 3):
        assert growth_coefficient(f, k) == s[k]


@settings(max_examples=30, deadline=None)
@given(quiddities)
def test_entries_are_specialized_continuants(q):
    f = Frieze(q)
    r = len(q)
    for i in range(1, 2 * r + 1):
        for j in range(1, r + 1):
            assert continuant(j, i, r).specialize(list(q), ZZ) == f.entry(i, j)


def test_symbolic_frieze_is_universal():
    zs = universal_quiddity(3)
    f = Frieze(zs)
    assert f.ring == LaurentRing(3)
    for i in range(1, 7):
        for j in (1, 2, 3):
            assert f.entry(i, j) == continuant(j, i, 3)


def test_degenerate_quiddity():
    with pytest.raises(DegenerateFriezeError):
        Frieze((0, 3))
    with pytest.raises(DegenerateFriezeError):
        Frieze((1, 1, 1)).row(4)


def test_corrupted_cache_is_inconsistent():
    f = Frieze((3, 5, 9))
    f.row(2)
    f._rows[3] = (14, 44, 27)
    with pytest.raises(InconsistentQuiddityError):
        f.row(3)


def test_empty_quiddity():
    with pytest.raises(ValueError):
        Frieze(())


def test_homogeneous_118():
    f = homogeneous_frieze(118, depth=6)
    assert [f.row(i)[0] for i in range(-1, 3)] == [0, 1, 118, 13923]
    assert 118 * 118 - 1 * 13923 == 1
    assert verify_unimodularity(f, 6)
    assert growth_coefficient(f) == 118


def test_homogeneous_degenerate_point():
    f = homogeneous_frieze(2, depth=6)
    assert [f.row(i)[0] for i in range(1, 7)] == [2, 3, 4, 5, 6, 7]
    assert growth_coefficient(f, 4) == 2


def test_homogeneous_symbolic():
    x, = LaurentPolynomial.variables(1)
    f = homogeneous_frieze(x, depth=4)
    assert growth_coefficient(f) == x
    assert growth_coefficient(f, 2) == x ** 2 - 2


def test_frieze_is_thread_safe():
    import threading

    f = Frieze((3, 5, 9))
    out = []
    threads = [threading.Thread(target=lambda: out.append(f.row(30))) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(out)) == 1
    assert verify_unimodularity(f, 30)
