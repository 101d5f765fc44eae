#pragma once

#include "gcsub/dirichlet_flow.hpp"
#include "gcsub/embedding.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace gcsub {

using Mat2 = Eigen::Matrix2d;

// Discrete curvature data at one vertex. Edge vectors are taken in the
// vertex's local orientation order.
struct VertexCurvature {
    bool normal_defined = false;
    bool curvature_defined = false;
    Vec3 normal = Vec3::Zero();
    Mat2 first_form = Mat2::Zero();
    Mat2 second_form = Mat2::Zero();  // not symmetrized
    double gauss = 0;
    double mean = 0;
    double balancing_residual = 0;
    double minimality_residual = 0;
    bool interior = false;  // non-boundary and trivalent
};

struct CurvatureSummary {
    std::size_t defined = 0;
    double gauss_min = 0, gauss_max = 0;
    double gauss_abs_min = 0, gauss_abs_max = 0;
    double mean_abs_min = 0, mean_abs_max = 0, mean_abs_median = 0;
    double balancing_median = 0, balancing_max = 0;
};

struct CurvatureReport {
    std::vector<VertexCurvature> vertices;  // indexed by vertex id
    CurvatureSummary summary;
};

// Unit normal (e1 x e2 + e2 x e3 + e3 x e1) / |...|. Empty when v is not an
// interior trivalent vertex or the cross sum vanishes.
std::optional<Vec3> vertex_normal(const Embedding& emb, VertexId v);

struct GaussMean {
    double gauss;
    double mean;
};

// K = det(I^{-1} II), H = tr(I^{-1} II) / 2. Empty when v or a neighbor is
// on the boundary, a normal is undefined, or I(v) is singular.
std::optional<GaussMean> curvature(const Embedding& emb, VertexId v);

// Full per-vertex evaluation, including the fundamental forms.
VertexCurvature vertex_curvature(const Embedding& emb, VertexId v);

CurvatureReport curvature_report(const Embedding& emb, Exec exec = Exec::parallel);

// Sum of squared resolved edge lengths over `edges` (all edges when empty).
double dirichlet_energy(const Embedding& emb, std::span<const EdgeId> edges = {});

// Energy of face f's closed circuit.
double face_energy(const Embedding& emb, FaceId f);

// |sum of edge vectors at v|.
double balancing_residual(const Embedding& emb, VertexId v);

// |<e1,e2> + <e2,e3> + <e3,e1>| at a trivalent vertex.
double minimality_residual(const Embedding& emb, VertexId v);

struct HausdorffResult {
    double distance = 0;
    double error_bound = 0;  // largest spacing between consecutive samples
};

// Symmetric Hausdorff distance between the two 1-skeletons. Edge samples of
// each side are measured exactly against the other side's segments.
// Isolated vertices count as points. Throws DomainError for sampling < 2.
HausdorffResult hausdorff_distance(const Embedding& a, const Embedding& b, std::size_t sampling = 8,
                                   Exec exec = Exec::parallel);

// Energy upper bound for M_0..M_steps from M_0's face census:
// E(M_0) + sum over n != 6 of C_n (1 - lambda_1(n)^{2i}) / (1 - lambda_1(n)^2),
// C_n = (lambda_1(n) - 1/2) N_n E_n.
std::vector<double> energy_bound(const SubdivisionRun& run);

// Constants of the Hausdorff decay estimate d_H(M_i, M_{i+1}) <= E sqrt(lambda_1^{i+1}).
struct CauchyConstants {
    double lambda1 = 0;  // max over face sizes present
    double big_lambda = 0;  // (1 + sqrt(lambda1)) / (1 - lambda1)
    double energy_scale = 0;  // E = max over faces of sqrt(2 n E_D(f))
};
CauchyConstants cauchy_constants(const Embedding& m0);

// Ratio r of the least-squares fit values[i] ~ c r^i over positive entries.
double geometric_ratio(std::span<const double> values);

struct FaceLineage {
    FaceId root = kInvalidId;
    std::size_t face_size = 0;
    std::vector<FaceId> faces;        // face id at each level
    std::vector<Vec3> barycenters;    // per level
    std::vector<double> diameters;    // per level
    double decay_ratio = 0;           // fitted diameter ratio per level
    double barycenter_drift = 0;      // max distance from the level-0 barycenter
};

struct LimitReport {
    std::vector<std::vector<Vec3>> face_barycenters;  // [level][face]
    std::vector<std::size_t> vertex_cloud_sizes;      // per level
    std::vector<FaceLineage> lineages;                // one per level-0 face
    double scale = 0;                                 // bounding-box diagonal of M_0
    double max_relative_drift = 0;
    bool barycenters_constant = false;                // drift within 1e-10 relative
};

// Requires at least two levels; throws DomainError otherwise.
LimitReport limit_report(const SubdivisionRun& run);

}  // namespace gcsub
