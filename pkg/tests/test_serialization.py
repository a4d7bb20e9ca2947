import json
import warnings

import pytest

from hypercist import FormatError, from_edges, lift_to
from hypercist.q7data import read_resource
from hypercist.serialization import (
    MetadataMismatchWarning,
    family_document,
    parse_edge_list,
    parse_family_json,
    read_tree,
    render_dot,
    render_edge_list,
    render_family_json,
)


def test_parse_minimal():
    assert parse_edge_list("dim 1\n0 1\n") == (1, [(0, 1)])


def test_parse_resource_has_127_edges():
    dim, edges = parse_edge_list(read_resource("q7_t1.edges"))
    assert dim == 7 and len(edges) == 127
    assert edges[:2] == [(0, 2), (0, 8)]


@pytest.mark.parametrize("text,message", [
    ("dim 2\n0 3\n", "line 2: <0, 3> is not a hypercube edge"),
    ("0 1\n", "line 1: expected header"),
    ("", "missing 'dim N' header"),
    ("dim x\n", "line 1: non-numeric dimension"),
    ("dim 2\n0 a\n", "line 2: non-numeric token"),
    ("dim 2\n0 4\n", "line 2: label 4 not below 2^2"),
    ("# c\ndim 2\n0 1\n\n1 0\n", "line 5: duplicate edge <1, 0> (first on line 3)"),
    ("dim 2\n0 1 2\n", "line 2: expected 'u v'"),
])
def test_parse_errors_carry_line_numbers(text, message):
    with pytest.raises(FormatError) as info:
        parse_edge_list(text)
    assert message in str(info.value)


def test_edge_list_round_trip(q7):
    for t in q7.trees:
        text = render_edge_list(t, "comment")
        assert read_tree(text) == t
        lines = text.splitlines()[2:]
        pairs = [tuple(map(int, ln.split())) for ln in lines]
        assert pairs == sorted(pairs) and all(u < v for u, v in pairs)


def test_round_trip_lifted_to_twelve(q7):
    family = q7
    for dim in range(8, 13):
        family = lift_to(family, dim)
        back = parse_family_json(render_family_json(family))
        assert back.trees == family.trees
        assert back.history == family.history
        for t in family.trees[:1]:
            assert read_tree(render_edge_list(t)) == t


def test_family_json_round_trip(q7):
    back = parse_family_json(render_family_json(q7))
    assert [t.edge_set for t in back.trees] == [t.edge_set for t in q7.trees]
    assert back.accepted


def test_metadata_mismatch_warns(q7):
    doc = family_document(q7)
    doc["metadata"]["diameters"][0] = 14
    with pytest.warns(MetadataMismatchWarning, match="stored .*14.*recomputed .*15"):
        family = parse_family_json(json.dumps(doc))
    assert family.trees[0].diameter == 15


def test_no_warning_on_consistent_metadata(q7):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_family_json(render_family_json(q7))


def test_join_history_length_after_two_lifts(q7):
    doc = json.loads(render_family_json(lift_to(q7, 9)))
    assert len(doc["metadata"]["join_history"]) == 2
    assert all(len(step) == 3 for step in doc["metadata"]["join_history"])


@pytest.mark.parametrize("mutate,where", [
    (lambda d: d.update(dim="7"), "$.dim"),
    (lambda d: d.update(trees={}), "$.trees"),
    (lambda d: d["trees"][1].__setitem__(4, [1, 2, 3]), "$.trees[1][4]"),
    (lambda d: d["trees"][2].pop(), "$.trees[2]"),
    (lambda d: d.update(format="other"), "$.format"),
    (lambda d: d.update(metadata=[]), "$.metadata"),
    (lambda d: d["trees"].__delitem__(slice(1, 3)), "$.trees"),
])
def test_structural_errors_have_path_context(q7, mutate, where):
    doc = family_document(q7)
    mutate(doc)
    with pytest.raises(FormatError) as info:
        parse_family_json(json.dumps(doc))
    assert str(info.value).startswith(where)


def test_invalid_json():
    with pytest.raises(FormatError, match="invalid JSON"):
        parse_family_json("{")


def test_dot_q7(q7):
    dot = render_dot(q7)
    assert '"0" -- "2" [tree=1' in dot
    assert dot == render_dot(q7)


def test_dot_single_edge():
    dot = render_dot([from_edges(1, [(0, 1)])])
    assert dot.count(" -- ") == 1
    assert '"0";' in dot and '"1";' in dot


def test_dot_lifted_q8_counts(q7):
    dot = render_dot(lift_to(q7, 8))
    nodes = [ln for ln in dot.splitlines() if ln.strip().endswith('";')]
    assert len(nodes) == 256
    assert dot.count(" -- ") == 3 * 255
