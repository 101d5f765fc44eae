#pragma once

// Data-parallel inner loops of a subdivision step and of the metric sweeps.
// Each kernel exists twice: an OpenMP version used by default and a serial
// reference kept for testing and benchmarking. Both call the same per-item
// code, so their outputs agree bit for bit.

#include "gcsub/embedding.hpp"
#include "gcsub/gc_subdivision.hpp"
#include "gcsub/geometry_metrics.hpp"

#include <span>
#include <vector>

namespace gcsub::kernels {

// Writes the Dirichlet-optimal inner polygon of every parent face into
// child_positions (at the provenance inner ids), expressed in the frame of the
// face's first vertex, and the face-system / parent-face energy ratio into
// contraction.
void place_inner_serial(const Embedding& parent, const Provenance& prov, std::span<Vec3> child_positions,
                        std::span<double> contraction);
void place_inner_omp(const Embedding& parent, const Provenance& prov, std::span<Vec3> child_positions,
                     std::span<double> contraction);

// Moves every interior parent vertex with three children to their barycenter.
// Reads and writes `positions` of the child embedding `tilde`.
void project_serial(const Embedding& tilde, const SurfaceGraph& parent, const Provenance& prov,
                    std::span<Vec3> positions);
void project_omp(const Embedding& tilde, const SurfaceGraph& parent, const Provenance& prov,
                 std::span<Vec3> positions);

void curvature_serial(const Embedding& emb, std::span<VertexCurvature> out);
void curvature_omp(const Embedding& emb, std::span<VertexCurvature> out);

// Sampled 1-skeleton of an embedding, and a uniform grid over another
// embedding's segments answering exact point-to-skeleton distances.
struct Segment {
    Vec3 a;
    Vec3 b;
};

std::vector<Segment> skeleton_segments(const Embedding& emb);

class SegmentGrid {
public:
    explicit SegmentGrid(std::vector<Segment> segments);
    double distance(const Vec3& p) const;

private:
    std::vector<Segment> segments_;
    Vec3 lo_ = Vec3::Zero();
    double cell_ = 1;
    int dims_[3] = {1, 1, 1};
    std::vector<std::size_t> cell_offsets_;
    std::vector<std::uint32_t> cell_items_;

    std::size_t cell_index(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * dims_[1] + j) * dims_[0] + i;
    }
};

double point_segment_distance(const Vec3& p, const Segment& s);

// max over samples of the distance to the grid's skeleton. `sampling`
// points are placed uniformly along each segment (endpoints included).
double directed_hausdorff_serial(std::span<const Segment> from, std::size_t sampling, const SegmentGrid& to);
double directed_hausdorff_omp(std::span<const Segment> from, std::size_t sampling, const SegmentGrid& to);

}  // namespace gcsub::kernels
