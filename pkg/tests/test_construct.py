import time

import numpy as np
import pytest

from torusmagic.construct import (
    EVEN_EVEN,
    ODD_ODD,
    ConstructionPlan,
    PlanShapeMismatch,
    Unsupported,
    UnsupportedShape,
    construct,
    construct_even_even,
    construct_odd_odd,
    expected_corner_table,
    plan_for,
)
from torusmagic.diagonals import CornerPos, decompose
from torusmagic.grid import dims
from torusmagic.labeling import Labeling
from torusmagic.verify import forced_constant, verify

GOLDEN_H = [[1, 4, 9], [8, 2, 5], [6, 7, 3]]
GOLDEN_V = [[12, 18, 14], [13, 10, 17], [16, 15, 11]]


def diag_labels(lab: Labeling, j: int):
    plan = plan_for(ODD_ODD if lab.dims.n % 2 else EVEN_EVEN, lab.dims)
    diag = decompose(lab.dims, list(plan.start_cols))[j - 1]
    h = tuple(lab.label(e) for e in diag.h_edges())
    v = tuple(lab.label(e) for e in diag.v_edges())
    return h, v


def test_golden_3_3_matrices():
    lab = construct_odd_odd(dims(3, 3))
    assert lab.h.tolist() == GOLDEN_H
    assert lab.v.tolist() == GOLDEN_V


def test_golden_3_3_diagonal_sequences():
    lab = construct_odd_odd(dims(3, 3))
    assert diag_labels(lab, 1) == ((1, 2, 3), (18, 17, 16))
    assert diag_labels(lab, 3) == ((9, 8, 7), (12, 10, 11))


def test_4_4_diagonal_sequences():
    lab = construct_even_even(dims(4, 4))
    assert diag_labels(lab, 1) == ((1, 2, 3, 4), (32, 31, 30, 29))
    assert diag_labels(lab, 2) == ((8, 5, 6, 7), (28, 27, 26, 25))
    assert diag_labels(lab, 3) == ((9, 10, 11, 12), (24, 23, 22, 21))
    assert diag_labels(lab, 4) == ((16, 13, 14, 15), (20, 19, 18, 17))


def test_odd_odd_rejects_wrong_shapes():
    with pytest.raises(UnsupportedShape):
        construct_odd_odd(dims(3, 5))  # coprime
    with pytest.raises(UnsupportedShape):
        construct_odd_odd(dims(4, 4))  # even


def test_even_even_rejects_odd():
    with pytest.raises(UnsupportedShape):
        construct_even_even(dims(3, 4))


def test_dispatch():
    assert isinstance(construct(9, 15), Labeling)
    assert isinstance(construct(4, 6), Labeling)
    r = construct(3, 4)
    assert isinstance(r, Unsupported)
    assert r.reason == "mixed parity"
    assert "search 3 4" in r.suggestion
    r = construct(3, 5)
    assert isinstance(r, Unsupported)
    assert r.reason == "coprime odd"


def test_transposed_shapes_are_supermagic():
    for n, m in [(9, 3), (15, 5), (6, 4), (8, 4)]:
        lab = construct(n, m)
        assert isinstance(lab, Labeling)
        assert (lab.dims.n, lab.dims.m) == (n, m)
        assert verify(lab).is_supermagic


def test_plan_start_columns():
    # diagonal 1 starts at column d+1 (wrapped), the rest at their index
    assert plan_for(ODD_ODD, dims(3, 9)).start_cols == (4, 2, 3)
    assert plan_for(ODD_ODD, dims(3, 3)).start_cols == (1, 2, 3)
    assert plan_for(EVEN_EVEN, dims(4, 6)).start_cols == (3, 2)
    assert plan_for(EVEN_EVEN, dims(4, 4)).start_cols == (1, 2, 3, 4)


def test_plan_shape_mismatch():
    with pytest.raises(PlanShapeMismatch):
        plan_for(ODD_ODD, dims(4, 4))
    with pytest.raises(PlanShapeMismatch):
        plan_for(EVEN_EVEN, dims(3, 3))
    with pytest.raises(PlanShapeMismatch):
        plan_for(ODD_ODD, dims(3, 5))  # gcd 1
    with pytest.raises(PlanShapeMismatch):
        plan_for("spiral", dims(3, 3))


def test_expected_corner_table_3_3():
    d = dims(3, 3)
    table = expected_corner_table(plan_for(ODD_ODD, d), d)
    # five possible partial weights around 2nm = 18
    assert table[CornerPos(2, 3, "HV")] == 21  # 2nm+l, shifted diagonal
    assert table[CornerPos(3, 3, "VH")] == 17  # 2nm-l+2, interleaved diagonal
    for k in (1, 2, 3):
        assert table[CornerPos(1, k, "HV")] == 19  # 2nm+1, plain diagonal
    values = set(table.entries.values())
    assert values <= {18, 19, 20, 21, 17}


def test_expected_corner_table_matches_actual_labels():
    d = dims(3, 3)
    lab = construct_odd_odd(d)
    plan = plan_for(ODD_ODD, d)
    table = expected_corner_table(plan, d)
    diag2, diag3 = decompose(d, list(plan.start_cols))[1:]
    a, b = diag2.corner_edges(3, "HV")
    assert lab.label(a) + lab.label(b) == 21  # 6 + 15
    a, b = diag3.corner_edges(3, "VH")
    assert lab.label(a) + lab.label(b) == 17  # 10 + 7


def test_expected_corner_table_rejects_noncanonical_plan():
    d = dims(3, 3)
    with pytest.raises(PlanShapeMismatch):
        expected_corner_table(ConstructionPlan(ODD_ODD, (1, 2)), d)


def test_corner_seam_sums_to_constant():
    # the HV entry at a vertex (from its diagonal) plus the VH entry
    # (from the successor diagonal) must give the magic constant
    from torusmagic.diagonals import corner_vertex

    for n, m in [(3, 9), (5, 5), (4, 4), (4, 6), (15, 21)]:
        d = dims(n, m)
        plan = plan_for(ODD_ODD if n % 2 else EVEN_EVEN, d)
        table = expected_corner_table(plan, d)
        base = d.q
        assert set(table.entries.values()) <= {
            base - d.l + 2, base, base + 1, base + 2, base + d.l
        }
        hv_at = {}
        vh_at = {}
        for diag in decompose(d, list(plan.start_cols)):
            for k in range(1, d.l + 1):
                hv = CornerPos(diag.index, k, "HV")
                vh = CornerPos(diag.index, k, "VH")
                hv_at[corner_vertex(hv, diag.start_col, d)] = table[hv]
                vh_at[corner_vertex(vh, diag.start_col, d)] = table[vh]
        for vertex, hv_weight in hv_at.items():
            assert hv_weight + vh_at[vertex] == forced_constant(d)


@pytest.mark.parametrize("n,m", [(3, 3), (3, 9), (5, 5), (9, 15), (5, 15)])
def test_odd_odd_instances_verify(n, m):
    lab = construct_odd_odd(dims(n, m))
    report = verify(lab)
    assert report.is_supermagic
    assert report.constant == forced_constant(lab.dims) == 4 * n * m + 2


@pytest.mark.parametrize("n,m", [(4, 4), (4, 6), (6, 8), (4, 12), (10, 14)])
def test_even_even_instances_verify(n, m):
    lab = construct_even_even(dims(n, m))
    report = verify(lab)
    assert report.is_supermagic
    assert report.constant == 4 * n * m + 2


def test_label_blocks_are_a_bijection_by_construction():
    # construction writes each label exactly once; verify independently
    for n, m in [(3, 9), (4, 6), (5, 15)]:
        lab = construct(n, m)
        flat = np.sort(lab.labels())
        assert flat.tolist() == list(range(1, lab.dims.q + 1))


def test_construction_speed():
    for n, m in [(27, 27), (24, 24)]:
        t0 = time.perf_counter()
        lab = construct(n, m)
        assert verify(lab).is_supermagic
        assert time.perf_counter() - t0 < 1.0
