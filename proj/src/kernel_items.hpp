#pragma once

// Per-item bodies shared by the serial and OpenMP kernels.

#include "gcsub/dirichlet_flow.hpp"
#include "gcsub/kernels.hpp"

#include <vector>

namespace gcsub::kernels::detail {

struct FaceScratch {
    std::vector<Vec3> circuit;
    std::vector<Vec3> inner;
};

inline void place_face(const Embedding& parent, const Provenance& prov, FaceId f, std::span<Vec3> child,
                       std::span<double> contraction, FaceScratch& s) {
    parent.unrolled_face(f, s.circuit);
    s.inner.resize(s.circuit.size());
    solve_face(s.circuit, s.inner);
    const double before = polygon_energy(s.circuit);
    const double after = face_system_energy(s.circuit, s.inner);
    contraction[f] = before > 0 ? after / before : 0.0;
    for (std::size_t i = 0; i < s.inner.size(); ++i) child[prov.inner_vertex_of(f, i)] = s.inner[i];
}

inline void project_vertex(const Embedding& tilde, const SurfaceGraph& parent, const Provenance& prov,
                           VertexId cv, std::span<Vec3> positions) {
    const VertexId pv = prov.parent_vertex[cv];
    if (pv == kInvalidId || parent.is_boundary(pv)) return;
    const SurfaceGraph& g = tilde.graph();
    if (g.degree(cv) != 3) return;
    Vec3 sum = Vec3::Zero();
    for (EdgeId e : g.incident_edges(cv)) sum += tilde.edge_vector(cv, e);
    positions[cv] = tilde.position(cv) + sum / 3.0;
}

inline double sample_max(const Segment& s, std::size_t sampling, const SegmentGrid& to) {
    double worst = 0;
    const double denom = static_cast<double>(sampling - 1);
    for (std::size_t j = 0; j < sampling; ++j) {
        const double t = static_cast<double>(j) / denom;
        const Vec3 p = (1.0 - t) * s.a + t * s.b;
        const double d = to.distance(p);
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace gcsub::kernels::detail
