#include "gcsub/kernels.hpp"

#include "kernel_items.hpp"

namespace gcsub::kernels {

void place_inner_serial(const Embedding& parent, const Provenance& prov, std::span<Vec3> child_positions,
                        std::span<double> contraction) {
    detail::FaceScratch scratch;
    const std::size_t nf = parent.graph().face_count();
    for (std::size_t f = 0; f < nf; ++f)
        detail::place_face(parent, prov, static_cast<FaceId>(f), child_positions, contraction, scratch);
}

void project_serial(const Embedding& tilde, const SurfaceGraph& parent, const Provenance& prov,
                    std::span<Vec3> positions) {
    const std::size_t nv = tilde.graph().vertex_count();
    for (std::size_t v = 0; v < nv; ++v)
        detail::project_vertex(tilde, parent, prov, static_cast<VertexId>(v), positions);
}

void curvature_serial(const Embedding& emb, std::span<VertexCurvature> out) {
    const std::size_t nv = emb.graph().vertex_count();
    for (std::size_t v = 0; v < nv; ++v) out[v] = vertex_curvature(emb, static_cast<VertexId>(v));
}

double directed_hausdorff_serial(std::span<const Segment> from, std::size_t sampling, const SegmentGrid& to) {
    double worst = 0;
    for (const Segment& s : from) worst = std::max(worst, detail::sample_max(s, sampling, to));
    return worst;
}

}  // namespace gcsub::kernels
