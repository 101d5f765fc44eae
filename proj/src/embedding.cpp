#include "gcsub/embedding.hpp"

#include <cmath>

namespace gcsub {

Embedding::Embedding(std::shared_ptr<const SurfaceGraph> graph, std::vector<Vec3> positions,
                     std::optional<Lattice> lattice, std::vector<IVec3> edge_offsets)
    : graph_(std::move(graph)),
      positions_(std::move(positions)),
      lattice_(std::move(lattice)),
      edge_offsets_(std::move(edge_offsets)) {
    if (!graph_) throw DomainError("embedding needs a graph");
    if (positions_.size() != graph_->vertex_count())
        throw DomainError("embedding has " + std::to_string(positions_.size()) + " positions for " +
                          std::to_string(graph_->vertex_count()) + " vertices");
    for (std::size_t v = 0; v < positions_.size(); ++v)
        if (!positions_[v].allFinite()) throw DomainError("vertex " + std::to_string(v) + " has a non-finite position");
    if (lattice_) {
        if (edge_offsets_.empty()) edge_offsets_.assign(graph_->edge_count(), IVec3::Zero());
        if (edge_offsets_.size() != graph_->edge_count())
            throw DomainError("periodic embedding needs one offset per edge");
    } else if (!edge_offsets_.empty()) {
        throw DomainError("edge offsets given without a lattice");
    }
}

IVec3 Embedding::offset_from(VertexId from, EdgeId e) const {
    if (!lattice_) return IVec3::Zero();
    return graph_->edge(e).u == from ? edge_offsets_[e] : IVec3(-edge_offsets_[e]);
}

Vec3 Embedding::edge_vector(VertexId from, EdgeId e) const {
    const Edge& ed = graph_->edge(e);
    const VertexId to = ed.other(from);
    Vec3 d = positions_[to] - positions_[from];
    if (lattice_) d += lattice_->shift(offset_from(from, e));
    return d;
}

void Embedding::unrolled_face(FaceId f, std::vector<Vec3>& out, std::vector<IVec3>* shifts) const {
    const auto c = graph_->face(f);
    const std::size_t n = c.size();
    out.resize(n);
    if (!lattice_) {
        for (std::size_t i = 0; i < n; ++i) out[i] = positions_[c[i]];
        if (shifts) shifts->assign(n, IVec3::Zero());
        return;
    }
    const auto fe = graph_->face_edges(f);
    IVec3 s = IVec3::Zero();
    if (shifts) shifts->resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = positions_[c[i]] + lattice_->shift(s);
        if (shifts) (*shifts)[i] = s;
        s += offset_from(c[i], fe[i]);
    }
    if (!s.isZero()) throw DomainError("face " + std::to_string(f) + " wraps around the lattice");
}

}  // namespace gcsub
