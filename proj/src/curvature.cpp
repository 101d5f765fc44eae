#include "gcsub/geometry_metrics.hpp"
#include "gcsub/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace gcsub {

namespace {

bool interior_trivalent(const SurfaceGraph& g, VertexId v) { return !g.is_boundary(v) && g.degree(v) == 3; }

// Edge vectors at v in local orientation order.
std::array<Vec3, 3> edge_vectors(const Embedding& emb, VertexId v) {
    const auto inc = emb.graph().incident_edges(v);
    return {emb.edge_vector(v, inc[0]), emb.edge_vector(v, inc[1]), emb.edge_vector(v, inc[2])};
}

std::optional<Vec3> normal_of(const std::array<Vec3, 3>& e) {
    const Vec3 sum = e[0].cross(e[1]) + e[1].cross(e[2]) + e[2].cross(e[0]);
    const double scale = std::max({e[0].squaredNorm(), e[1].squaredNorm(), e[2].squaredNorm()});
    const double len = sum.norm();
    if (!(len > 1e-14 * scale) || scale == 0.0) return std::nullopt;
    return Vec3(sum / len);
}

double median(std::vector<double> v) {
    if (v.empty()) return 0;
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (v.size() % 2 == 1) return *mid;
    const double hi = *mid;
    const double lo = *std::max_element(v.begin(), mid);
    return 0.5 * (lo + hi);
}

}  // namespace

std::optional<Vec3> vertex_normal(const Embedding& emb, VertexId v) {
    if (!interior_trivalent(emb.graph(), v)) return std::nullopt;
    return normal_of(edge_vectors(emb, v));
}

VertexCurvature vertex_curvature(const Embedding& emb, VertexId v) {
    const SurfaceGraph& g = emb.graph();
    VertexCurvature out;
    if (!interior_trivalent(g, v)) return out;
    out.interior = true;
    const auto e = edge_vectors(emb, v);
    out.balancing_residual = (e[0] + e[1] + e[2]).norm();
    out.minimality_residual = std::abs(e[0].dot(e[1]) + e[1].dot(e[2]) + e[2].dot(e[0]));

    const auto n0 = normal_of(e);
    if (!n0) return out;
    out.normal_defined = true;
    out.normal = *n0;

    const auto nbrs = g.neighbors(v);
    std::array<Vec3, 3> nn;
    for (int i = 0; i < 3; ++i) {
        const auto ni = vertex_normal(emb, nbrs[i]);
        if (!ni) return out;
        nn[i] = *ni;
    }
    const Vec3 t1 = e[1] - e[0];
    const Vec3 t2 = e[2] - e[0];
    const Vec3 d1 = nn[1] - nn[0];
    const Vec3 d2 = nn[2] - nn[0];
    Mat2 first;
    first << t1.dot(t1), t1.dot(t2), t2.dot(t1), t2.dot(t2);
    Mat2 second;
    second << -t1.dot(d1), -t1.dot(d2), -t2.dot(d1), -t2.dot(d2);
    out.first_form = first;
    out.second_form = second;

    const double det = first(0, 0) * first(1, 1) - first(0, 1) * first(1, 0);
    const double tr = first(0, 0) + first(1, 1);
    if (!(std::abs(det) > 1e-14 * tr * tr)) return out;
    // Shape operator S = I^{-1} II.
    Mat2 inv;
    inv << first(1, 1) / det, -first(0, 1) / det, -first(1, 0) / det, first(0, 0) / det;
    const Mat2 shape = inv * second;
    out.gauss = shape(0, 0) * shape(1, 1) - shape(0, 1) * shape(1, 0);
    out.mean = 0.5 * (shape(0, 0) + shape(1, 1));
    out.curvature_defined = true;
    return out;
}

std::optional<GaussMean> curvature(const Embedding& emb, VertexId v) {
    const VertexCurvature c = vertex_curvature(emb, v);
    if (!c.curvature_defined) return std::nullopt;
    return GaussMean{c.gauss, c.mean};
}

CurvatureReport curvature_report(const Embedding& emb, Exec exec) {
    CurvatureReport rep;
    rep.vertices.resize(emb.graph().vertex_count());
    if (exec == Exec::parallel)
        kernels::curvature_omp(emb, rep.vertices);
    else
        kernels::curvature_serial(emb, rep.vertices);

    CurvatureSummary& s = rep.summary;
    std::vector<double> abs_h;
    std::vector<double> balancing;
    bool first = true;
    for (const VertexCurvature& c : rep.vertices) {
        if (c.interior) balancing.push_back(c.balancing_residual);
        if (!c.curvature_defined) continue;
        const double ak = std::abs(c.gauss);
        const double ah = std::abs(c.mean);
        abs_h.push_back(ah);
        if (first) {
            s.gauss_min = s.gauss_max = c.gauss;
            s.gauss_abs_min = s.gauss_abs_max = ak;
            s.mean_abs_min = s.mean_abs_max = ah;
            first = false;
        } else {
            s.gauss_min = std::min(s.gauss_min, c.gauss);
            s.gauss_max = std::max(s.gauss_max, c.gauss);
            s.gauss_abs_min = std::min(s.gauss_abs_min, ak);
            s.gauss_abs_max = std::max(s.gauss_abs_max, ak);
            s.mean_abs_min = std::min(s.mean_abs_min, ah);
            s.mean_abs_max = std::max(s.mean_abs_max, ah);
        }
    }
    s.defined = abs_h.size();
    s.mean_abs_median = median(abs_h);
    s.balancing_median = median(balancing);
    s.balancing_max = balancing.empty() ? 0.0 : *std::max_element(balancing.begin(), balancing.end());
    return rep;
}

double dirichlet_energy(const Embedding& emb, std::span<const EdgeId> edges) {
    const SurfaceGraph& g = emb.graph();
    double total = 0;
    if (edges.empty()) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) total += emb.edge_vector(g.edge(e).u, e).squaredNorm();
    } else {
        for (EdgeId e : edges) total += emb.edge_vector(g.edge(e).u, e).squaredNorm();
    }
    return total;
}

double face_energy(const Embedding& emb, FaceId f) {
    std::vector<Vec3> circuit;
    emb.unrolled_face(f, circuit);
    return polygon_energy(circuit);
}

double balancing_residual(const Embedding& emb, VertexId v) {
    Vec3 sum = Vec3::Zero();
    for (EdgeId e : emb.graph().incident_edges(v)) sum += emb.edge_vector(v, e);
    return sum.norm();
}

double minimality_residual(const Embedding& emb, VertexId v) {
    if (emb.graph().degree(v) != 3) throw DomainError("vertex " + std::to_string(v) + " is not trivalent");
    const auto e = edge_vectors(emb, v);
    return std::abs(e[0].dot(e[1]) + e[1].dot(e[2]) + e[2].dot(e[0]));
}

}  // namespace gcsub
