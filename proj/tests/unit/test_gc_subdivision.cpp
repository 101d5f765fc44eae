#include "gcsub/gc_subdivision.hpp"
#include "gcsub/generators_io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace gcsub;

namespace {

std::map<std::size_t, std::size_t> census(const SurfaceGraph& g) {
    std::map<std::size_t, std::size_t> out;
    for (FaceId f = 0; f < g.face_count(); ++f) ++out[g.face_size(f)];
    return out;
}

std::map<std::size_t, std::size_t> non_hexagons(const SurfaceGraph& g) {
    auto c = census(g);
    c.erase(6);
    return c;
}

}  // namespace

TEST_CASE("c60 child counts") {
    const SurfaceGraph g = generate_c60(1.0).graph();
    const Subdivided s = gc_subdivide(g);
    CHECK(s.graph.vertex_count() == 240);
    CHECK(s.graph.edge_count() == 360);
    CHECK(s.graph.face_count() == 122);
    CHECK(census(s.graph)[5] == 12);
    const ValidationReport r = validate(s.graph);
    CHECK(r.trivalent);
    CHECK(r.oriented);
    CHECK(r.euler_characteristic == 2);
}

TEST_CASE("closed graphs: four-fold growth and preserved census") {
    for (const SurfaceGraph& g : {testing::cube_graph(), testing::tetrahedron_graph(), testing::hex_torus(3)}) {
        const Subdivided s = gc_subdivide(g);
        CHECK(s.graph.vertex_count() == 4 * g.vertex_count());
        CHECK(s.graph.edge_count() == 4 * g.edge_count());
        CHECK(s.graph.face_count() == g.face_count() + g.edge_count());
        CHECK(validate(s.graph).euler_characteristic == validate(g).euler_characteristic);
        CHECK(non_hexagons(s.graph) == non_hexagons(g));
        CHECK(validate(s.graph).oriented);
    }
}

TEST_CASE("provenance bookkeeping") {
    const SurfaceGraph g = generate_c60(1.0).graph();
    const Subdivided s = gc_subdivide(g);
    const Provenance& p = s.provenance;
    // Survivors are the identity on parent ids.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(p.child_vertex[v] == v);
        CHECK(p.parent_vertex[v] == v);
    }
    // Inner vertices: a bijection onto the new ids.
    std::vector<int> hit(s.graph.vertex_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f) {
        const auto inner = s.graph.face(p.inner_face_of[f]);
        CHECK(inner.size() == g.face_size(f));
        for (std::size_t i = 0; i < g.face_size(f); ++i) {
            const VertexId c = p.inner_vertex_of(f, i);
            ++hit[c];
            CHECK(p.is_inner(c));
            CHECK(p.inner_parent_face[c] == f);
            // Spoke to the parent's i-th vertex.
            CHECK(s.graph.find_edge(c, p.child_vertex[g.face(f)[i]]) != kInvalidId);
            CHECK(std::find(inner.begin(), inner.end(), c) != inner.end());
        }
    }
    for (VertexId c = 0; c < s.graph.vertex_count(); ++c) CHECK(hit[c] == (c < g.vertex_count() ? 0 : 1));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        REQUIRE(p.connector_face_of[e] != kInvalidId);
        CHECK(s.graph.face_size(p.connector_face_of[e]) == 6);
        // Parent edges are not kept.
        CHECK(s.graph.find_edge(g.edge(e).u, g.edge(e).v) == kInvalidId);
    }
}

TEST_CASE("single hexagon patch: inner hexagon and six spokes") {
    const SurfaceGraph g = SurfaceGraph::from_faces(6, {{0, 1, 2, 3, 4, 5}}, std::vector<char>(6, 1));
    const Subdivided s = gc_subdivide(g);
    CHECK(s.graph.face_count() == 1);
    CHECK(s.graph.vertex_count() == 12);
    CHECK(s.graph.edge_count() == 12);
    for (VertexId v = 0; v < 6; ++v) {
        CHECK(s.graph.degree(v) == 1);
        CHECK(s.graph.is_boundary(v));
    }
    for (VertexId v = 6; v < 12; ++v) CHECK_FALSE(s.graph.is_boundary(v));
    CHECK(validate(s.graph).trivalent);
}

TEST_CASE("seven-face hexagon leaf: seven inner faces and six connectors") {
    const SurfaceGraph g = generate_hex_patch(1).graph();
    const Subdivided s = gc_subdivide(g);
    std::size_t interior_edges = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) interior_edges += g.edge_faces(e).size() == 2;
    CHECK(interior_edges == 12);
    // 7 inner faces plus one connector per interior edge.
    CHECK(s.graph.face_count() == 7 + interior_edges);
    std::size_t connectors = 0;
    for (FaceId c : s.provenance.connector_face_of) connectors += c != kInvalidId;
    CHECK(connectors == interior_edges);
    CHECK(validate(s.graph).trivalent);
    CHECK(validate(s.graph).unbranched());
}

TEST_CASE("extracted hexagon leaf: six connectors") {
    const SurfaceGraph g = generate_hex_patch(2).graph();
    FaceId center = kInvalidId;
    for (FaceId f = 0; f < g.face_count(); ++f) {
        bool inner = true;
        for (VertexId v : g.face(f)) inner &= !g.is_boundary(v);
        if (inner) center = f;
    }
    const Leaf leaf = extract_leaf(g, center);
    const Subdivided s = gc_subdivide(leaf.subgraph);
    std::size_t connectors = 0;
    for (FaceId c : s.provenance.connector_face_of) connectors += c != kInvalidId;
    CHECK(connectors == 12);
    CHECK(s.graph.face_count() == 7 + 12);
}

TEST_CASE("branched input is refused") {
    const SurfaceGraph g = load_fixture("k4-chunk").embedding.graph();
    CHECK_THROWS_WITH_AS(gc_subdivide(g), doctest::Contains("leaf"), BranchedGraphError);
    CHECK_THROWS_AS(gc_subdivide(generate_c60(1.0).graph(), GCType{1, 1}), DomainError);
}

TEST_CASE("leafwise subdivision") {
    const SurfaceGraph leaf_a = load_fixture("k4-leaf-a").embedding.graph();
    const Subdivided direct = gc_subdivide(leaf_a);
    CHECK(validate(direct.graph).unbranched());
    CHECK(validate(direct.graph).trivalent);

    // The same leaf twice gives identical results.
    const SurfaceGraph hex = generate_hex_patch(2).graph();
    FaceId center = kInvalidId;
    for (FaceId f = 0; f < hex.face_count(); ++f) {
        bool inner = true;
        for (VertexId v : hex.face(f)) inner &= !hex.is_boundary(v);
        if (inner) center = f;
    }
    std::vector<Leaf> leaves = {extract_leaf(hex, center), extract_leaf(hex, center)};
    const auto out = gc_subdivide_leafwise(leaves);
    REQUIRE(out.size() == 2);
    CHECK(out[0].graph.face_circuits() == out[1].graph.face_circuits());
    CHECK(out[0].provenance.parent_vertex == out[1].provenance.parent_vertex);
}

TEST_CASE("deterministic output") {
    const SurfaceGraph g = generate_c60(1.0).graph();
    const Subdivided a = gc_subdivide(g);
    const Subdivided b = gc_subdivide(g);
    CHECK(a.graph.face_circuits() == b.graph.face_circuits());
    for (EdgeId e = 0; e < a.graph.edge_count(); ++e) {
        CHECK(a.graph.edge(e).u == b.graph.edge(e).u);
        CHECK(a.graph.edge(e).v == b.graph.edge(e).v);
    }
}

TEST_CASE("direct recipe matches the dual route") {
    const std::vector<SurfaceGraph> graphs = {testing::tetrahedron_graph(), testing::cube_graph(), testing::hex_torus(3),
                                              testing::hex_torus(4), generate_c60(1.0).graph()};
    for (const SurfaceGraph& g : graphs) {
        const SurfaceGraph direct = gc_subdivide(g).graph;
        const SurfaceGraph dual = testing::dual_route_gc20(g);
        REQUIRE(validate(dual).trivalent);
        REQUIRE(validate(dual).oriented);
        CHECK(dual.vertex_count() == direct.vertex_count());
        CHECK(dual.edge_count() == direct.edge_count());
        CHECK(census(dual) == census(direct));
        CHECK(testing::canonical_code(dual) == testing::canonical_code(direct));
    }
}

TEST_CASE("canonical code separates non-isomorphic maps") {
    CHECK(testing::canonical_code(testing::hex_torus(3)) != testing::canonical_code(testing::hex_torus(4)));
    const SurfaceGraph twice = gc_subdivide(gc_subdivide(testing::cube_graph()).graph).graph;
    CHECK(testing::canonical_code(twice) != testing::canonical_code(gc_subdivide(testing::cube_graph()).graph));
}

TEST_CASE("repeated steps keep euler characteristic and census") {
    SurfaceGraph g = generate_c60(1.0).graph();
    const auto base = non_hexagons(g);
    for (int step = 0; step < 3; ++step) {
        g = gc_subdivide(g).graph;
        CHECK(validate(g).euler_characteristic == 2);
        CHECK(non_hexagons(g) == base);
    }
    CHECK(g.vertex_count() == 60 * 64);
}
