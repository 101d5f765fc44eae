#include "gcsub/geometry_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gcsub {

namespace {

struct FaceCensus {
    std::size_t count = 0;
    double max_energy = 0;
};

std::map<std::size_t, FaceCensus> census(const Embedding& m0) {
    std::map<std::size_t, FaceCensus> out;
    for (FaceId f = 0; f < m0.graph().face_count(); ++f) {
        FaceCensus& c = out[m0.graph().face_size(f)];
        ++c.count;
        c.max_energy = std::max(c.max_energy, face_energy(m0, f));
    }
    return out;
}

double bbox_diagonal(const Embedding& emb) {
    if (emb.positions().empty()) return 0;
    Vec3 lo = emb.positions().front(), hi = lo;
    for (const Vec3& p : emb.positions()) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    return (hi - lo).norm();
}

void face_shape(const Embedding& emb, FaceId f, std::vector<Vec3>& scratch, Vec3& barycenter, double& diameter) {
    emb.unrolled_face(f, scratch);
    barycenter = Vec3::Zero();
    for (const Vec3& p : scratch) barycenter += p;
    barycenter /= static_cast<double>(scratch.size());
    diameter = 0;
    for (std::size_t i = 0; i < scratch.size(); ++i)
        for (std::size_t j = i + 1; j < scratch.size(); ++j) diameter = std::max(diameter, (scratch[i] - scratch[j]).norm());
}

}  // namespace

std::vector<double> energy_bound(const SubdivisionRun& run) {
    if (run.levels.empty()) throw DomainError("energy bound needs a nonempty run");
    const Embedding& m0 = run.levels.front();
    const double e0 = dirichlet_energy(m0);
    const auto faces = census(m0);
    std::vector<double> out(run.levels.size(), e0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& [n, c] : faces) {
            if (n == 6) continue;
            const double l = lambda1(n);
            const double cn = (l - 0.5) * static_cast<double>(c.count) * c.max_energy;
            out[i] += cn * (1.0 - std::pow(l, 2.0 * static_cast<double>(i))) / (1.0 - l * l);
        }
    }
    return out;
}

CauchyConstants cauchy_constants(const Embedding& m0) {
    CauchyConstants c;
    const SurfaceGraph& g = m0.graph();
    for (FaceId f = 0; f < g.face_count(); ++f) {
        const std::size_t n = g.face_size(f);
        c.lambda1 = std::max(c.lambda1, lambda1(n));
        c.energy_scale = std::max(c.energy_scale, std::sqrt(2.0 * static_cast<double>(n) * face_energy(m0, f)));
    }
    if (c.lambda1 > 0) c.big_lambda = (1.0 + std::sqrt(c.lambda1)) / (1.0 - c.lambda1);
    return c;
}

double geometric_ratio(std::span<const double> values) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0)) continue;
        const double x = static_cast<double>(i);
        const double y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) throw DomainError("geometric fit needs at least two positive values");
    const double md = static_cast<double>(m);
    const double slope = (md * sxy - sx * sy) / (md * sxx - sx * sx);
    return std::exp(slope);
}

LimitReport limit_report(const SubdivisionRun& run) {
    if (run.levels.size() < 2) throw DomainError("limit report needs at least two levels");
    LimitReport rep;
    std::vector<Vec3> scratch;
    for (const Embedding& level : run.levels) {
        rep.vertex_cloud_sizes.push_back(level.graph().vertex_count());
        std::vector<Vec3> bary(level.graph().face_count());
        for (FaceId f = 0; f < level.graph().face_count(); ++f) {
            double unused;
            face_shape(level, f, scratch, bary[f], unused);
        }
        rep.face_barycenters.push_back(std::move(bary));
    }
    rep.scale = bbox_diagonal(run.levels.front());

    const SurfaceGraph& g0 = run.levels.front().graph();
    for (FaceId root = 0; root < g0.face_count(); ++root) {
        FaceLineage lin;
        lin.root = root;
        lin.face_size = g0.face_size(root);
        FaceId f = root;
        for (std::size_t level = 0; level < run.levels.size(); ++level) {
            if (level > 0) f = run.provenance[level - 1].inner_face_of[f];
            Vec3 b;
            double d;
            face_shape(run.levels[level], f, scratch, b, d);
            lin.faces.push_back(f);
            lin.barycenters.push_back(b);
            lin.diameters.push_back(d);
            lin.barycenter_drift = std::max(lin.barycenter_drift, (b - lin.barycenters.front()).norm());
        }
        bool positive = std::count_if(lin.diameters.begin(), lin.diameters.end(), [](double d) { return d > 0; }) >= 2;
        lin.decay_ratio = positive ? geometric_ratio(lin.diameters) : 0.0;
        const double rel = rep.scale > 0 ? lin.barycenter_drift / rep.scale : lin.barycenter_drift;
        rep.max_relative_drift = std::max(rep.max_relative_drift, rel);
        rep.lineages.push_back(std::move(lin));
    }
    rep.barycenters_constant = rep.max_relative_drift <= 1e-10;
    return rep;
}

}  // namespace gcsub
