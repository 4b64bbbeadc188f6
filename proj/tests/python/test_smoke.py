import json

import zonograph as zg


def test_graph_and_cut_function():
    g = zg.complete_graph(2, "1")
    assert g.n == 2
    assert len(g.edges) == 3
    f = zg.cut_function(g)
    assert f.value([1]) == "2"
    assert f.value([0, 1]) == "2"
    assert f.is_symmetric()
    assert zg.is_submodular(f)
    assert zg.graph_rank(g) == 2


def test_weighted_graph_roundtrip():
    g = zg.Graph(2, [(0, 1, "1/2"), (0, 2, "2"), (1, 2, "7/3")])
    ws = dict(((i, j), b) for i, j, b in zg.weights_from_beta(zg.cut_function(g)))
    assert ws[(0, 1)] == "1/2"
    assert ws[(1, 2)] == "7/3"


def test_vertex_enumeration_routes_agree():
    g = zg.circuit_graph(3, "1")
    base = zg.enumerate_vertices(g)
    zono = zg.zonotope_vertices(g)
    assert base == zono
    assert len(base) == 14
    assert zg.equals_base_polytope(g)


def test_permutohedron_polytope():
    p = zg.build_polytope(zg.complete_graph(3, "1"))
    assert p.dim == 3
    assert len(p.vertices) == 24
    assert len(p.facets) == 14
    assert zg.is_primitive(p)
    assert zg.f_vector(p) == [24, 36, 14]
    assert ["3", "1", "-1", "-3"] in p.vertices


def test_type_fingerprints():
    hexagon = zg.build_polytope(zg.complete_graph(2, "1"))
    hexagon2 = zg.build_polytope(zg.Graph(2, [(0, 1, "1"), (0, 2, "2"), (1, 2, "3")]))
    square = zg.build_polytope(zg.path_graph(2, "1"))
    assert zg.same_type(hexagon, hexagon2)
    assert not zg.same_type(hexagon, square)
    assert zg.type_fingerprint(hexagon) == zg.type_fingerprint(hexagon2)


def test_tiling_report():
    rep = json.loads(zg.tiling_check(zg.complete_graph(2, "1")))
    assert rep["tiles"] is True
    assert rep["vol_squared"] == "432"
    assert rep["lattice_gram_det"] == "432"
    assert [b["length"] for b in rep["belts"]] == [6]


def test_support_and_minimal_vector_agree():
    g = zg.complete_graph(2, "1")
    alpha, center = zg.support_value(g, [1])
    assert alpha == "2"
    assert center == ["-1", "2", "-1"]
    assert zg.minimal_vector(g, [1]) == center


def test_unimodularity():
    assert zg.is_unimodular(zg.subchain_incidence_vectors(3))
    assert not zg.is_unimodular([[1, 0], [1, 1], [1, -1]])


def test_gallery_bundles():
    bundle = json.loads(zg.gallery_voronoi_an(3, "1"))
    assert bundle["expected"]["facet_pairs"] == 6
    assert len(bundle["polytope"]["vertices"]) == 14
    assert zg.nrd(zg.circuit_graph(3, "1")) == 4

    box = json.loads(zg.gallery_star_box(2, ["1", "1"]))
    assert ["1", "1"] in box["projected_vertices"]


def test_polytope_json_roundtrip():
    p = zg.build_polytope(zg.path_graph(3, "1"))
    q = zg.polytope_from_json(p.to_json())
    assert q.vertices == p.vertices
    assert q.to_json() == p.to_json()
