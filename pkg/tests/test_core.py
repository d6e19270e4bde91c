from itertools import product

import pytest

from monotri import (
    InvalidInputError,
    RowSeqClass,
    SignMatrix,
    TriangularArray,
    classify_row_sequence,
    condition3_equivalent,
    transition_stats,
    triangle_stats,
    validate_dmt,
    validate_monotone,
)

from golden import DMT_8, DMTS_63321, DMTS_63321_DD, MT5_ROWS


def test_triangle_shape_enforced():
    with pytest.raises(InvalidInputError):
        TriangularArray(((1,), (2, 2, 3)))
    with pytest.raises(InvalidInputError):
        TriangularArray(())


def test_sign_matrix_entries_enforced():
    with pytest.raises(InvalidInputError):
        SignMatrix(((0, 2),))
    with pytest.raises(InvalidInputError):
        SignMatrix(((0, 1), (1,)))


@pytest.mark.parametrize(
    "row,expected",
    [
        ((2, 4, 5, 8, 9), RowSeqClass.STRICTLY_INCREASING),
        ((6, 3, 3, 2, 1), RowSeqClass.WEAKLY_DECREASING_MULT2),
        ((2, 2, 2), RowSeqClass.HAS_TRIPLE),
        ((1, 3, 2), RowSeqClass.OTHER),
        ((7,), RowSeqClass.STRICTLY_INCREASING),
    ],
)
def test_classify_row_sequence(row, expected):
    assert classify_row_sequence(row) is expected


def test_classify_rejects_empty():
    with pytest.raises(InvalidInputError):
        classify_row_sequence(())


def test_validate_monotone():
    assert validate_monotone(TriangularArray(MT5_ROWS))
    assert validate_monotone(TriangularArray(((4,),)))
    assert not validate_monotone(TriangularArray(((1,), (2, 2))))


def test_validate_dmt():
    for rows in DMTS_63321:
        assert validate_dmt(TriangularArray(rows))
    assert validate_dmt(TriangularArray(((7,),)))
    assert validate_dmt(TriangularArray(DMT_8))
    # rows 2 and 3 both contain the value 2 exactly once
    assert not validate_dmt(TriangularArray(((3,), (3, 2), (3, 3, 2))))


def test_condition3_matches_figures():
    for rows in DMTS_63321:
        assert condition3_equivalent(TriangularArray(rows))
    assert condition3_equivalent(TriangularArray(((7,),)))
    assert not condition3_equivalent(TriangularArray(((3,), (3, 2), (3, 3, 2))))


def test_condition3_precondition():
    with pytest.raises(InvalidInputError):
        condition3_equivalent(TriangularArray(((1,), (2, 2))))


def _all_diagonal_mult2_triangles(n, lo, hi):
    """Every triangle over [lo, hi] satisfying the diagonal and multiplicity
    conditions, built by direct filtering (independent of the library)."""
    shapes = [()]
    for i in range(1, n + 1):
        shapes = [
            t + (row,)
            for t in shapes
            for row in product(range(hi, lo - 1, -1), repeat=i)
        ]
        shapes = [t for t in shapes if _local_ok(t)]
    return shapes


def _local_ok(rows):
    row = rows[-1]
    if any(row.count(v) > 2 for v in row):
        return False
    if len(rows) == 1:
        return True
    upper, lower = rows[-2], rows[-1]
    return all(lower[j] >= upper[j] >= lower[j + 1] for j in range(len(upper)))


def _nsd(rows):
    for upper, lower in zip(rows, rows[1:]):
        for v in set(upper):
            if upper.count(v) == 1 and lower.count(v) == 1:
                return False
    return True


def test_condition3_equivalent_to_nsd():
    # on triangles with valid diagonals and multiplicities, the local
    # reformulation agrees with the two-row condition everywhere
    for n in (2, 3, 4):
        for rows in _all_diagonal_mult2_triangles(n, 1, 3):
            t = TriangularArray(rows)
            assert condition3_equivalent(t) == _nsd(rows), rows


def test_transition_stats_examples():
    assert transition_stats((6, 3, 3, 2, 1), (3, 3, 2, 2)) == (2, 0)
    assert transition_stats((5, 2), (4,)) == (0, 1)
    assert transition_stats((5, 5), (5,)) == (0, 0)
    with pytest.raises(InvalidInputError):
        transition_stats((5, 5), (5, 5))


def test_triangle_stats_figures():
    dds = [triangle_stats(TriangularArray(rows)).dd for rows in DMTS_63321]
    assert dds == list(DMTS_63321_DD)
    first = triangle_stats(TriangularArray(DMTS_63321[0]))
    assert first.sc == 4
    assert (-1) ** first.sc == (-1) ** (10 + first.dd)


def test_triangle_stats_rejects_non_dmt():
    with pytest.raises(InvalidInputError):
        triangle_stats(TriangularArray(MT5_ROWS))


def test_triangle_stats_degenerate():
    st = triangle_stats(TriangularArray(((4,),)))
    assert st.dd == st.sc == st.dd_bar == st.newcomers == 0
    assert st.pairs_per_row == (0,)


def _dmts_brute(bottom, lo, hi):
    """All DMTs with the given bottom row, by direct filtering."""
    n = len(bottom)
    partial = [(bottom,)]
    for i in range(n - 1, 0, -1):
        nxt = []
        for t in partial:
            for row in product(range(hi, lo - 1, -1), repeat=i):
                cand = (row,) + t
                if _local_ok_top(cand):
                    nxt.append(cand)
        partial = nxt
    return [rows for rows in partial if _nsd(rows)]


def _local_ok_top(rows):
    upper, lower = rows[0], rows[1]
    if any(upper.count(v) > 2 for v in upper):
        return False
    return all(lower[j] >= upper[j] >= lower[j + 1] for j in range(len(upper)))


def test_stat_invariants_exhaustive():
    # over every DMT with a weakly decreasing bottom row in [1,4], n <= 4
    for m in range(1, 5):
        for bottom in product(range(4, 0, -1), repeat=m):
            if any(a < b for a, b in zip(bottom, bottom[1:])):
                continue
            if any(bottom.count(v) > 2 for v in bottom):
                continue
            for rows in _dmts_brute(bottom, 1, 4):
                st = triangle_stats(TriangularArray(rows))
                n = len(rows)
                assert st.sc == st.newcomers + sum(st.pairs_per_row[:-1])
                assert st.peaks == st.base_pairs
                assert (-1) ** st.sc == (-1) ** (n * (n - 1) // 2 + st.dd)
                assert st.dd == st.dd_bar + st.pairs_per_row[-1]


def test_bottom_pair_parity():
    # bottom rows (n, n, ..., 1, 1) have exactly n pairs, so the dd and
    # dd_bar signs agree up to (-1)^C(2n,2)
    for n in (1, 2, 3):
        bottom = tuple(v for x in range(n, 0, -1) for v in (x, x))
        for rows in _dmts_brute(bottom, 1, n):
            st = triangle_stats(TriangularArray(rows))
            assert st.pairs_per_row[-1] == n
            c2n2 = (2 * n) * (2 * n - 1) // 2
            assert (-1) ** (c2n2 + st.dd) == (-1) ** st.dd_bar
