import numpy as np
import pytest

from torusmagic.grid import H, V, all_edges, dims
from torusmagic.labeling import DomainMismatch, Labeling


def tiny():
    d = dims(3, 3)
    h = np.arange(1, 10).reshape(3, 3)
    v = np.arange(10, 19).reshape(3, 3)
    return Labeling.from_matrices(d, h, v)


def test_label_lookup():
    lab = tiny()
    assert lab.label(H(1, 1)) == 1
    assert lab.label(H(3, 3)) == 9
    assert lab.label(V(1, 1)) == 10
    assert lab[V(2, 3)] == 15


def test_items_covers_all_edges_in_canonical_order():
    lab = tiny()
    pairs = list(lab.items())
    assert [e for e, _ in pairs] == list(all_edges(lab.dims))
    assert [value for _, value in pairs] == list(range(1, 19))


def test_labels_flat_order():
    lab = tiny()
    assert lab.labels().tolist() == list(range(1, 19))


def test_transpose_maps_h_to_v():
    d = dims(3, 5)
    h = np.arange(1, 16).reshape(3, 5)
    v = np.arange(16, 31).reshape(3, 5)
    lab = Labeling.from_matrices(d, h, v)
    t = lab.transpose()
    assert (t.dims.n, t.dims.m) == (5, 3)
    for e, value in lab.items():
        image = V(e.j, e.i) if e.orient == "H" else H(e.j, e.i)
        assert t.label(image) == value
    assert lab.transpose().transpose() == lab


def test_with_swapped():
    lab = tiny()
    swapped = lab.with_swapped(H(1, 1), V(3, 3))
    assert swapped.label(H(1, 1)) == 18
    assert swapped.label(V(3, 3)) == 1
    assert lab.label(H(1, 1)) == 1  # original untouched
    assert swapped.with_swapped(H(1, 1), V(3, 3)) == lab


def test_from_matrices_validates_shape():
    d = dims(3, 3)
    with pytest.raises(DomainMismatch):
        Labeling.from_matrices(d, np.ones((2, 3), dtype=int), np.ones((3, 3), dtype=int))


def test_rejects_nonpositive_entries():
    d = dims(3, 3)
    h = np.ones((3, 3), dtype=int)
    v = np.ones((3, 3), dtype=int)
    v[1, 1] = 0
    with pytest.raises(DomainMismatch):
        Labeling.from_matrices(d, h, v)


def test_from_edge_map_roundtrip_and_domain_check():
    lab = tiny()
    rebuilt = Labeling.from_edge_map(lab.dims, dict(lab.items()))
    assert rebuilt == lab
    partial = dict(lab.items())
    del partial[H(2, 2)]
    with pytest.raises(DomainMismatch):
        Labeling.from_edge_map(lab.dims, partial)
    extra = dict(lab.items())
    extra[H(9, 9)] = 1
    with pytest.raises(DomainMismatch):
        Labeling.from_edge_map(lab.dims, extra)
