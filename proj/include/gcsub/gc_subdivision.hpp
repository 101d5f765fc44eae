#pragma once

#include "gcsub/surface_graph.hpp"

#include <span>
#include <vector>

namespace gcsub {

// Goldberg-Coxeter construction type (k, l). Only (2, 0) is implemented.
struct GCType {
    int k = 2;
    int l = 0;
};

// Lineage of a GC(2,0) child graph.
//
// Child vertex ids list the surviving parent vertices first (in parent order),
// followed by the inner vertices face by face. A parent vertex survives when
// it lies on at least one parent face, so for closed graphs parent_vertex is
// the identity on [0, |V|).
struct Provenance {
    std::vector<VertexId> inner_base;         // per parent face: id of its inner vertex 0
    std::vector<FaceId> inner_face_of;        // per parent face
    std::vector<FaceId> connector_face_of;    // per parent edge; kInvalidId for rim edges
    std::vector<VertexId> parent_vertex;      // per child vertex; kInvalidId for inner vertices
    std::vector<VertexId> child_vertex;       // per parent vertex; kInvalidId when dropped
    std::vector<FaceId> inner_parent_face;    // per child vertex; owning parent face of inner vertices

    VertexId inner_vertex_of(FaceId parent_face, std::size_t position) const {
        return inner_base[parent_face] + static_cast<VertexId>(position);
    }
    bool is_inner(VertexId child) const { return parent_vertex[child] == kInvalidId; }
};

struct Subdivided {
    SurfaceGraph graph;
    Provenance provenance;
};

// Topological GC(2,0) refinement.
//
// Every parent n-gon yields an inner n-gon whose i-th vertex is joined by a
// spoke to the parent's i-th vertex; every parent edge on two faces yields a
// hexagonal connector. Parent edges are not kept. Edges on a single face
// (patch rims) get no connector, so rim vertices end up with fewer spokes
// and are tagged boundary in the child.
//
// Throws BranchedGraphError when an edge lies on more than two faces and
// DomainError for any type other than (2, 0).
Subdivided gc_subdivide(const SurfaceGraph& graph, GCType type = {});

// Applies gc_subdivide to each leaf's subgraph independently.
std::vector<Subdivided> gc_subdivide_leafwise(std::span<const Leaf> leaves, GCType type = {});

}  // namespace gcsub
