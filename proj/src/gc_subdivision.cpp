#include "gcsub/gc_subdivision.hpp"

#include <algorithm>
#include <sstream>

namespace gcsub {

namespace {

// Position of the directed pair a -> b along the circuit, or n when absent.
std::size_t directed_position(std::span<const VertexId> c, VertexId a, VertexId b) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        if (c[i] == a && c[(i + 1) % n] == b) return i;
    return n;
}

std::size_t position_of(std::span<const VertexId> c, VertexId v) {
    return static_cast<std::size_t>(std::find(c.begin(), c.end(), v) - c.begin());
}

}  // namespace

Subdivided gc_subdivide(const SurfaceGraph& graph, GCType type) {
    if (type.k != 2 || type.l != 0)
        throw DomainError("GC(" + std::to_string(type.k) + "," + std::to_string(type.l) +
                          ") is not supported; only GC(2,0) is implemented");
    const ValidationReport rep = validate(graph);
    if (!rep.unbranched()) {
        std::ostringstream msg;
        msg << rep.branched_edges.size() << " branched edge(s), e.g. edge " << rep.branched_edges.front().edge
            << " on " << rep.branched_edges.front().faces
            << " faces; whole-graph subdivision is undefined, subdivide leaf by leaf";
        throw BranchedGraphError(msg.str());
    }

    const std::size_t nv = graph.vertex_count();
    const std::size_t nf = graph.face_count();
    Provenance prov;

    prov.child_vertex.assign(nv, kInvalidId);
    VertexId next = 0;
    for (VertexId v = 0; v < nv; ++v) {
        if (graph.vertex_faces(v).empty()) continue;
        prov.child_vertex[v] = next++;
        prov.parent_vertex.push_back(v);
    }
    prov.inner_base.resize(nf);
    for (FaceId f = 0; f < nf; ++f) {
        prov.inner_base[f] = next;
        next += static_cast<VertexId>(graph.face_size(f));
    }
    const std::size_t child_nv = next;
    prov.parent_vertex.resize(child_nv, kInvalidId);
    prov.inner_parent_face.assign(child_nv, kInvalidId);
    for (FaceId f = 0; f < nf; ++f)
        for (std::size_t i = 0; i < graph.face_size(f); ++i) prov.inner_parent_face[prov.inner_base[f] + i] = f;

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(4 * graph.edge_count());
    std::vector<std::vector<VertexId>> faces;
    faces.reserve(nf + graph.edge_count());
    prov.inner_face_of.resize(nf);

    for (FaceId f = 0; f < nf; ++f) {
        const auto c = graph.face(f);
        const std::size_t n = c.size();
        std::vector<VertexId> inner(n);
        for (std::size_t i = 0; i < n; ++i) {
            inner[i] = prov.inner_vertex_of(f, i);
            edges.emplace_back(prov.child_vertex[c[i]], inner[i]);
        }
        for (std::size_t i = 0; i < n; ++i) edges.emplace_back(inner[i], inner[(i + 1) % n]);
        prov.inner_face_of[f] = static_cast<FaceId>(faces.size());
        faces.push_back(std::move(inner));
    }

    prov.connector_face_of.assign(graph.edge_count(), kInvalidId);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const auto ef = graph.edge_faces(e);
        if (ef.size() != 2) continue;
        const Edge& ed = graph.edge(e);
        // f walks a -> b; the connector walks the shared inner edge the other way.
        FaceId f = ef[0], g = ef[1];
        VertexId a = ed.u, b = ed.v;
        if (directed_position(graph.face(f), a, b) == graph.face_size(f)) std::swap(a, b);
        const std::size_t fa = position_of(graph.face(f), a), fb = position_of(graph.face(f), b);
        const std::size_t ga = position_of(graph.face(g), a), gb = position_of(graph.face(g), b);
        std::vector<VertexId> conn{prov.inner_vertex_of(f, fb), prov.inner_vertex_of(f, fa),
                                   prov.child_vertex[a],        prov.inner_vertex_of(g, ga),
                                   prov.inner_vertex_of(g, gb), prov.child_vertex[b]};
        prov.connector_face_of[e] = static_cast<FaceId>(faces.size());
        faces.push_back(std::move(conn));
    }

    std::vector<char> boundary(child_nv, 0);
    for (VertexId v = 0; v < nv; ++v) {
        const VertexId cv = prov.child_vertex[v];
        if (cv == kInvalidId) continue;
        boundary[cv] = graph.is_boundary(v) || graph.vertex_faces(v).size() < 3;
    }

    Subdivided out;
    out.graph = SurfaceGraph::build(child_nv, edges, std::move(faces), std::move(boundary));
    // Canonical rotation keeps face order, so the recorded face ids remain valid.
    out.provenance = std::move(prov);
    return out;
}

std::vector<Subdivided> gc_subdivide_leafwise(std::span<const Leaf> leaves, GCType type) {
    std::vector<Subdivided> out;
    out.reserve(leaves.size());
    for (const Leaf& leaf : leaves) {
        const ValidationReport rep = validate(leaf.subgraph);
        if (!rep.unbranched() || !rep.trivalent)
            throw DomainError("leaf of face " + std::to_string(leaf.core_face) + " is not a valid patch");
        out.push_back(gc_subdivide(leaf.subgraph, type));
    }
    return out;
}

}  // namespace gcsub
