import json

import numpy as np
import pytest

from sgs import PhaseField, Potential, path_graph, regular_tree_ball
from sgs.graphio import (canonical_json, document_to_graph, graph_digest,
                         load_graph, save_graph,
                         verify_report_certificates)


def test_document_roundtrip(tmp_path):
    g = regular_tree_ball(3, 2)
    q = Potential(np.linspace(-1, 2, g.vertex_count))
    ph = PhaseField(g, np.linspace(0, 1, g.edge_count))
    path = tmp_path / "g.json"
    save_graph(path, g, q, ph)
    g2, q2, ph2, ids = load_graph(path)
    assert g2.vertex_count == g.vertex_count
    assert g2.edges == g.edges
    assert np.allclose(q2.values, q.values)
    assert np.allclose(ph2.values, ph.values)
    assert g2.host_degree.tolist() == g.host_degree.tolist()


def test_save_load_byte_stable(tmp_path):
    # hand-written file with unordered keys, reversed edge orientation
    doc = {"edges": [{"theta": 0.25, "v": "a", "u": "b"},
                     {"u": "a", "v": "c"}],
           "vertices": [{"id": "a"}, {"q": 1.5, "id": "b"},
                        {"id": "c", "host_degree": 4}]}
    first = tmp_path / "first.json"
    first.write_text(json.dumps(doc))
    g, q, ph, ids = load_graph(first)
    second = tmp_path / "second.json"
    save_graph(second, g, q, ph, ids)
    g2, q2, ph2, ids2 = load_graph(second)
    third = tmp_path / "third.json"
    save_graph(third, g2, q2, ph2, ids2)
    assert second.read_bytes() == third.read_bytes()
    # orientation flip: theta stored for (a, b) is the negated angle
    assert ph.theta(0, 1) == pytest.approx(-0.25)


def test_parse_errors_are_positioned():
    with pytest.raises(ValueError, match=r"vertices\[1\]: duplicate id"):
        document_to_graph({"vertices": [{"id": "x"}, {"id": "x"}],
                           "edges": []})
    with pytest.raises(ValueError, match=r"edges\[0\]: unknown id"):
        document_to_graph({"vertices": [{"id": "x"}],
                           "edges": [{"u": "x", "v": "y"}]})
    with pytest.raises(ValueError, match=r"edges\[1\]: duplicate edge"):
        document_to_graph({"vertices": [{"id": "x"}, {"id": "y"}],
                           "edges": [{"u": "x", "v": "y"},
                                     {"u": "y", "v": "x"}]})
    with pytest.raises(ValueError, match=r"vertices\[0\]: host degree"):
        document_to_graph({"vertices": [{"id": "x", "host_degree": 0},
                                        {"id": "y"}],
                           "edges": [{"u": "x", "v": "y"}]})


def test_digest_stability():
    g = path_graph(3)
    assert graph_digest(g) == graph_digest(path_graph(3))
    assert graph_digest(g) != graph_digest(path_graph(4))


def test_canonical_json_floats():
    text = canonical_json({"x": 1 / 3})
    assert "0.3333333333333333" in text


def test_verify_report_certificates():
    g = path_graph(3)
    q = Potential.zero(g)
    ids = ["0", "1", "2"]
    report = {"results": {"kmin": [{"flow": {
        "a": 0.0, "k": 4 / 3, "ratio": 4 / 3,
        "witness": ["0", "1", "2"]}}]}}
    assert verify_report_certificates(report, g, q, ids) <= 1e-12
    report["results"]["kmin"][0]["flow"]["ratio"] = 1.25
    assert verify_report_certificates(report, g, q, ids) > 1e-3
