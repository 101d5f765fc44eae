#pragma once

#include "gcsub/surface_graph.hpp"

#include <array>
#include <memory>
#include <optional>
#include <vector>

namespace gcsub {

// Three translation vectors of a periodic embedding.
struct Lattice {
    std::array<Vec3, 3> basis;

    Vec3 shift(const IVec3& offset) const {
        return offset.x() * basis[0] + offset.y() * basis[1] + offset.z() * basis[2];
    }
};

// Positions realizing a SurfaceGraph in R^3.
//
// For periodic embeddings every edge (u, v), u < v, carries an integer
// lattice offset and the endpoint v seen from u sits at
// position(v) + lattice.shift(offset). Energies and curvatures always use
// these resolved endpoints.
class Embedding {
public:
    Embedding() = default;
    // Throws DomainError when sizes disagree with the graph or a coordinate is not finite.
    Embedding(std::shared_ptr<const SurfaceGraph> graph, std::vector<Vec3> positions,
              std::optional<Lattice> lattice = std::nullopt, std::vector<IVec3> edge_offsets = {});

    const SurfaceGraph& graph() const { return *graph_; }
    const std::shared_ptr<const SurfaceGraph>& graph_ptr() const { return graph_; }

    const std::vector<Vec3>& positions() const noexcept { return positions_; }
    const Vec3& position(VertexId v) const { return positions_[v]; }

    bool periodic() const noexcept { return lattice_.has_value(); }
    const std::optional<Lattice>& lattice() const noexcept { return lattice_; }
    const std::vector<IVec3>& edge_offsets() const noexcept { return edge_offsets_; }

    // Lattice offset of edge e when walked starting at `from`.
    IVec3 offset_from(VertexId from, EdgeId e) const;

    // Vector from `from` to the other endpoint of e, resolved through the lattice.
    Vec3 edge_vector(VertexId from, EdgeId e) const;

    // Vertex positions of face f unrolled into one affine frame, starting at
    // the face's first vertex. Throws DomainError if the circuit wraps the lattice.
    void unrolled_face(FaceId f, std::vector<Vec3>& out, std::vector<IVec3>* shifts = nullptr) const;

private:
    std::shared_ptr<const SurfaceGraph> graph_;
    std::vector<Vec3> positions_;
    std::optional<Lattice> lattice_;
    std::vector<IVec3> edge_offsets_;
};

}  // namespace gcsub
