#include "gcsub/kernels.hpp"

#include "kernel_items.hpp"

#include <omp.h>

namespace gcsub::kernels {

void place_inner_omp(const Embedding& parent, const Provenance& prov, std::span<Vec3> child_positions,
                     std::span<double> contraction) {
    const auto nf = static_cast<std::ptrdiff_t>(parent.graph().face_count());
#pragma omp parallel
    {
        detail::FaceScratch scratch;
#pragma omp for schedule(dynamic, 256)
        for (std::ptrdiff_t f = 0; f < nf; ++f)
            detail::place_face(parent, prov, static_cast<FaceId>(f), child_positions, contraction, scratch);
    }
}

void project_omp(const Embedding& tilde, const SurfaceGraph& parent, const Provenance& prov,
                 std::span<Vec3> positions) {
    const auto nv = static_cast<std::ptrdiff_t>(tilde.graph().vertex_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t v = 0; v < nv; ++v)
        detail::project_vertex(tilde, parent, prov, static_cast<VertexId>(v), positions);
}

void curvature_omp(const Embedding& emb, std::span<VertexCurvature> out) {
    const auto nv = static_cast<std::ptrdiff_t>(emb.graph().vertex_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t v = 0; v < nv; ++v) out[v] = vertex_curvature(emb, static_cast<VertexId>(v));
}

double directed_hausdorff_omp(std::span<const Segment> from, std::size_t sampling, const SegmentGrid& to) {
    double worst = 0;
    const auto n = static_cast<std::ptrdiff_t>(from.size());
#pragma omp parallel for schedule(dynamic, 1024) reduction(max : worst)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        worst = std::max(worst, detail::sample_max(from[i], sampling, to));
    return worst;
}

}  // namespace gcsub::kernels
