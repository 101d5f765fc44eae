#include "gcsub/geometry_metrics.hpp"
#include "gcsub/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gcsub {
namespace kernels {

double point_segment_distance(const Vec3& p, const Segment& s) {
    const Vec3 d = s.b - s.a;
    const double len2 = d.squaredNorm();
    if (len2 == 0.0) return (p - s.a).norm();
    const double t = std::clamp((p - s.a).dot(d) / len2, 0.0, 1.0);
    return (p - (s.a + t * d)).norm();
}

std::vector<Segment> skeleton_segments(const Embedding& emb) {
    const SurfaceGraph& g = emb.graph();
    std::vector<Segment> out;
    out.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const VertexId u = g.edge(e).u;
        out.push_back({emb.position(u), emb.position(u) + emb.edge_vector(u, e)});
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.push_back({emb.position(v), emb.position(v)});
    return out;
}

SegmentGrid::SegmentGrid(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw DomainError("cannot measure distance to an empty skeleton");
    Vec3 lo = segments_.front().a, hi = lo;
    double total_len = 0;
    for (const Segment& s : segments_) {
        lo = lo.cwiseMin(s.a).cwiseMin(s.b);
        hi = hi.cwiseMax(s.a).cwiseMax(s.b);
        total_len += (s.b - s.a).norm();
    }
    const Vec3 ext = hi - lo;
    const double diag = ext.norm();
    // Cells about one mean edge long, capped so the grid stays O(#segments).
    double cell = total_len / static_cast<double>(segments_.size());
    const double volume_cell = std::cbrt(std::max(ext.x(), 1e-300) * std::max(ext.y(), 1e-300) *
                                         std::max(ext.z(), 1e-300) / static_cast<double>(segments_.size()));
    cell = std::max({cell, volume_cell, diag * 1e-6, 1e-300});
    for (int k = 0; k < 3; ++k) {
        const double cells = std::floor(ext[k] / cell) + 1.0;
        dims_[k] = static_cast<int>(std::min(cells, 2048.0));
    }
    while (static_cast<double>(dims_[0]) * dims_[1] * dims_[2] > 8.0 * static_cast<double>(segments_.size()) + 64) {
        cell *= 1.25;
        for (int k = 0; k < 3; ++k) dims_[k] = static_cast<int>(std::min(std::floor(ext[k] / cell) + 1.0, 2048.0));
    }
    cell_ = cell;
    lo_ = lo;

    auto clamp_index = [&](double x, int k) {
        return std::clamp(static_cast<int>(std::floor((x - lo_[k]) / cell_)), 0, dims_[k] - 1);
    };
    std::vector<std::pair<std::size_t, std::uint32_t>> items;
    items.reserve(segments_.size() * 2);
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Segment& s = segments_[i];
        const Vec3 a = s.a.cwiseMin(s.b), b = s.a.cwiseMax(s.b);
        const int i0 = clamp_index(a.x(), 0), i1 = clamp_index(b.x(), 0);
        const int j0 = clamp_index(a.y(), 1), j1 = clamp_index(b.y(), 1);
        const int k0 = clamp_index(a.z(), 2), k1 = clamp_index(b.z(), 2);
        for (int k = k0; k <= k1; ++k)
            for (int j = j0; j <= j1; ++j)
                for (int ii = i0; ii <= i1; ++ii) items.emplace_back(cell_index(ii, j, k), static_cast<std::uint32_t>(i));
    }
    std::sort(items.begin(), items.end());
    const std::size_t ncells = static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2];
    cell_offsets_.assign(ncells + 1, 0);
    cell_items_.resize(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        ++cell_offsets_[items[i].first + 1];
        cell_items_[i] = items[i].second;
    }
    for (std::size_t c = 0; c < ncells; ++c) cell_offsets_[c + 1] += cell_offsets_[c];
}

double SegmentGrid::distance(const Vec3& p) const {
    int c[3];
    for (int k = 0; k < 3; ++k)
        c[k] = std::clamp(static_cast<int>(std::floor((p[k] - lo_[k]) / cell_)), 0, dims_[k] - 1);
    const int max_ring = std::max({dims_[0], dims_[1], dims_[2]});
    double best = std::numeric_limits<double>::infinity();
    auto scan = [&](int i, int j, int k) {
        const std::size_t idx = cell_index(i, j, k);
        for (std::size_t t = cell_offsets_[idx]; t < cell_offsets_[idx + 1]; ++t)
            best = std::min(best, point_segment_distance(p, segments_[cell_items_[t]]));
    };
    for (int r = 0; r <= max_ring; ++r) {
        const int i0 = std::max(c[0] - r, 0), i1 = std::min(c[0] + r, dims_[0] - 1);
        const int j0 = std::max(c[1] - r, 0), j1 = std::min(c[1] + r, dims_[1] - 1);
        const int k0 = std::max(c[2] - r, 0), k1 = std::min(c[2] + r, dims_[2] - 1);
        for (int k = k0; k <= k1; ++k)
            for (int j = j0; j <= j1; ++j)
                for (int i = i0; i <= i1; ++i) {
                    const bool shell = std::abs(i - c[0]) == r || std::abs(j - c[1]) == r || std::abs(k - c[2]) == r;
                    if (shell) scan(i, j, k);
                }
        // Cells beyond ring r are at least r cells away from p's projection onto the grid box.
        if (best <= static_cast<double>(r) * cell_) break;
    }
    return best;
}

}  // namespace kernels

HausdorffResult hausdorff_distance(const Embedding& a, const Embedding& b, std::size_t sampling, Exec exec) {
    if (sampling < 2) throw DomainError("hausdorff sampling needs at least 2 points per edge");
    const auto sa = kernels::skeleton_segments(a);
    const auto sb = kernels::skeleton_segments(b);
    double spacing = 0;
    for (const auto* side : {&sa, &sb})
        for (const auto& s : *side) spacing = std::max(spacing, (s.b - s.a).norm() / static_cast<double>(sampling - 1));
    const kernels::SegmentGrid ga(sa);
    const kernels::SegmentGrid gb(sb);
    double ab, ba;
    if (exec == Exec::parallel) {
        ab = kernels::directed_hausdorff_omp(sa, sampling, gb);
        ba = kernels::directed_hausdorff_omp(sb, sampling, ga);
    } else {
        ab = kernels::directed_hausdorff_serial(sa, sampling, gb);
        ba = kernels::directed_hausdorff_serial(sb, sampling, ga);
    }
    return {std::max(ab, ba), spacing};
}

}  // namespace gcsub
