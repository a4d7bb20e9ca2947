import pytest

from hypercist import TranscriptionError, load_q7
from hypercist import q7data
from hypercist.q7data import INV_T1, INV_T2, INV_T3


def test_three_trees_of_127_edges():
    archive = load_q7()
    assert [len(t.edges) for t in archive.trees] == [127, 127, 127]
    assert archive.errata == []


def test_internal_sets_match_listing():
    archive = load_q7()
    assert [len(s) for s in archive.internal_sets] == [44, 41, 42]
    for tree, listed in zip(archive.trees, (INV_T1, INV_T2, INV_T3)):
        assert tree.internal_vertices == listed


def test_edge_63_127_only_in_first_tree():
    t1, t2, t3 = load_q7().trees
    assert t1.has_edge(63, 127)
    assert not t2.has_edge(63, 127) and not t3.has_edge(127, 63)


def test_pairwise_disjoint_and_cover():
    archive = load_q7()
    sets = archive.internal_sets
    edges = [t.edge_set for t in archive.trees]
    for i in range(3):
        for j in range(i + 1, 3):
            assert not sets[i] & sets[j]
            assert not edges[i] & edges[j]
    assert sets[0] | sets[1] | sets[2] | archive.leaf_only == set(range(128))
    assert len(archive.leaf_only) == 128 - 44 - 41 - 42


def test_every_edge_is_single_bit_flip():
    for edges in load_q7().edges:
        assert all(bin(u ^ v).count("1") == 1 for u, v in edges)


def test_diameters():
    assert [t.diameter for t in load_q7().trees] == [15, 18, 17]


def test_corrupted_resource_is_a_hard_failure(monkeypatch):
    original = q7data.read_resource

    def corrupt(name):
        text = original(name)
        if name == "q7_t2.edges":
            text = text.replace("\n0 4\n", "\n")
        return text

    monkeypatch.setattr(q7data, "read_resource", corrupt)
    with pytest.raises(TranscriptionError, match="T2"):
        load_q7()


def test_internal_set_mismatch_names_the_difference(monkeypatch):
    monkeypatch.setattr(q7data, "INV_T3", INV_T3 - {125} | {124})
    with pytest.raises(TranscriptionError) as info:
        load_q7()
    msg = str(info.value)
    assert "T3" in msg and "[124]" in msg and "[125]" in msg
