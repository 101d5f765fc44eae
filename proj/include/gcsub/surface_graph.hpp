#pragma once

#include "gcsub/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace gcsub {

// Undirected edge, stored with u < v. The reverse orientation of an edge is
// the same EdgeId traversed from v to u.
struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
};

// Trivalent surface graph with explicit face circuits.
//
// Vertex ids are dense in [0, vertex_count). Faces are stored with a
// canonical rotation (smallest vertex id first) while keeping the traversal
// direction they were given in. The neighbor list of every vertex is its
// local orientation: the cyclic order of incident edges. When the faces
// around a vertex form a consistent rotation it is derived from them,
// otherwise neighbors are listed in ascending id order.
//
// Instances are immutable after construction and safe to share read-only.
class SurfaceGraph {
public:
    SurfaceGraph() = default;

    // Throws StructuralError on out-of-range ids, self loops or duplicate
    // edges. Face circuits are stored as given; a circuit whose consecutive
    // pair is not an edge is only reported by validate().
    static SurfaceGraph build(std::size_t vertex_count,
                              std::span<const std::pair<VertexId, VertexId>> edges,
                              std::vector<std::vector<VertexId>> faces,
                              std::vector<char> boundary = {});

    // Edges are the union of the face circuits' consecutive pairs.
    static SurfaceGraph from_faces(std::size_t vertex_count,
                                   std::vector<std::vector<VertexId>> faces,
                                   std::vector<char> boundary = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t face_count() const noexcept { return face_offsets_.empty() ? 0 : face_offsets_.size() - 1; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    // kInvalidId when u and v are not adjacent.
    EdgeId find_edge(VertexId u, VertexId v) const;

    std::size_t degree(VertexId v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }
    std::span<const VertexId> neighbors(VertexId v) const;
    std::span<const EdgeId> incident_edges(VertexId v) const;

    std::span<const VertexId> face(FaceId f) const;
    // face_edges(f)[i] joins face(f)[i] and face(f)[(i+1) % n]; kInvalidId if absent.
    std::span<const EdgeId> face_edges(FaceId f) const;
    std::size_t face_size(FaceId f) const { return face_offsets_[f + 1] - face_offsets_[f]; }

    std::span<const FaceId> edge_faces(EdgeId e) const;
    std::span<const FaceId> vertex_faces(VertexId v) const;

    bool is_boundary(VertexId v) const { return boundary_[v] != 0; }
    const std::vector<char>& boundary_flags() const noexcept { return boundary_; }
    bool has_boundary() const noexcept;

    // True when the neighbor order at v was derived from a consistent face rotation.
    bool face_oriented(VertexId v) const { return face_oriented_[v] != 0; }

    // Face circuits as plain vectors, canonical rotation.
    std::vector<std::vector<VertexId>> face_circuits() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adj_offsets_;
    std::vector<VertexId> adj_vertices_;
    std::vector<EdgeId> adj_edges_;
    std::vector<std::size_t> face_offsets_;
    std::vector<VertexId> face_vertices_;
    std::vector<EdgeId> face_edge_ids_;
    std::vector<std::size_t> edge_face_offsets_;
    std::vector<FaceId> edge_face_ids_;
    std::vector<std::size_t> vertex_face_offsets_;
    std::vector<FaceId> vertex_face_ids_;
    std::vector<char> boundary_;
    std::vector<char> face_oriented_;
    std::vector<std::pair<std::uint64_t, EdgeId>> edge_lookup_;  // sorted by key
};

struct EdgeIncidence {
    EdgeId edge;
    std::size_t faces;

    bool operator==(const EdgeIncidence&) const = default;
};

struct ValidationReport {
    bool trivalent = false;
    bool oriented = false;
    std::vector<EdgeIncidence> branched_edges;  // face incidence > 2
    long euler_characteristic = 0;
    std::size_t boundary_edge_count = 0;        // face incidence == 1

    bool unbranched() const noexcept { return branched_edges.empty(); }
};

// Checks every structural invariant. Never mutates the graph.
// Throws StructuralError naming the face when a circuit is malformed
// (length < 3, repeated vertex, or a consecutive pair that is not an edge).
ValidationReport validate(const SurfaceGraph& graph);

// Every edge whose face incidence differs from 2, in edge-id order.
std::vector<EdgeIncidence> branched_edges(const SurfaceGraph& graph);

// Rotates a circuit so its smallest vertex id comes first.
void canonical_rotate(std::vector<VertexId>& circuit);

// A core face with one petal per core edge, restricted to a standalone patch.
struct Leaf {
    FaceId core_face = kInvalidId;
    std::vector<FaceId> petals;          // parent face ids, petals[i] shares core edge i
    SurfaceGraph subgraph;               // face 0 is the core, face i+1 is petals[i]
    std::vector<VertexId> vertex_map;    // subgraph vertex -> parent vertex
};

// Builds L(face). `selection`, when non-empty, holds one petal per core edge
// (kInvalidId lets that edge be resolved automatically). Throws DomainError
// when the face is unknown, the core has an edge in no other face, an edge
// has several candidate petals and none was selected, or the resulting patch
// is itself branched.
Leaf extract_leaf(const SurfaceGraph& graph, FaceId face, std::span<const FaceId> selection = {});

// Marks as boundary every vertex with degree < 3 or with an incident edge
// that lies on fewer than two faces.
std::vector<char> open_vertices(const SurfaceGraph& graph);

}  // namespace gcsub
