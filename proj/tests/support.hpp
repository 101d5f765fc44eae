#pragma once

// Independent reference computations used as test oracles. Nothing here
// calls the library's numeric kernels.

#include "gcsub/embedding.hpp"
#include "gcsub/surface_graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

namespace gcsub::testing {

// 3I - T - T^t for the cyclic shift T.
inline Eigen::MatrixXd face_matrix(std::size_t n) {
    Eigen::MatrixXd m = 3.0 * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<Eigen::Index>(i);
        const auto b = static_cast<Eigen::Index>((i + 1) % n);
        m(a, b) -= 1.0;
        m(b, a) -= 1.0;
    }
    return m;
}

inline Eigen::MatrixXd dense_a(std::size_t n) { return face_matrix(n).inverse(); }

inline std::vector<Vec3> dense_solve(const std::vector<Vec3>& rhs) {
    const auto n = static_cast<Eigen::Index>(rhs.size());
    Eigen::MatrixXd b(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) b.row(i) = rhs[static_cast<std::size_t>(i)].transpose();
    const Eigen::MatrixXd x = face_matrix(rhs.size()).partialPivLu().solve(b);
    std::vector<Vec3> out(rhs.size());
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = x.row(i).transpose();
    return out;
}

inline double ring_energy(const std::vector<Vec3>& p) {
    double e = 0;
    for (std::size_t i = 0; i < p.size(); ++i) e += (p[(i + 1) % p.size()] - p[i]).squaredNorm();
    return e;
}

inline double spoke_energy(const std::vector<Vec3>& outer, const std::vector<Vec3>& inner) {
    double e = 0;
    for (std::size_t i = 0; i < outer.size(); ++i) e += (outer[i] - inner[i]).squaredNorm();
    return e;
}

inline std::vector<Vec3> random_face(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec3> f(n);
    for (Vec3& p : f) p = Vec3(u(rng), u(rng), u(rng));
    return f;
}

inline Vec3 mean(const std::vector<Vec3>& p) {
    Vec3 s = Vec3::Zero();
    for (const Vec3& q : p) s += q;
    return s / static_cast<double>(p.size());
}

inline double segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
    const Vec3 d = b - a;
    const double l = d.squaredNorm();
    double t = l > 0 ? (p - a).dot(d) / l : 0.0;
    t = std::min(1.0, std::max(0.0, t));
    return (p - a - t * d).norm();
}

// O(samples x segments) Hausdorff distance between sampled 1-skeletons.
inline double brute_hausdorff(const Embedding& a, const Embedding& b, std::size_t sampling) {
    auto segments = [](const Embedding& e) {
        std::vector<std::pair<Vec3, Vec3>> s;
        for (EdgeId id = 0; id < e.graph().edge_count(); ++id) {
            const VertexId u = e.graph().edge(id).u;
            s.emplace_back(e.position(u), e.position(u) + e.edge_vector(u, id));
        }
        for (VertexId v = 0; v < e.graph().vertex_count(); ++v)
            if (e.graph().degree(v) == 0) s.emplace_back(e.position(v), e.position(v));
        return s;
    };
    const auto sa = segments(a), sb = segments(b);
    auto directed = [&](const auto& from, const auto& to) {
        double worst = 0;
        for (const auto& s : from)
            for (std::size_t j = 0; j < sampling; ++j) {
                const double t = static_cast<double>(j) / static_cast<double>(sampling - 1);
                const Vec3 p = (1 - t) * s.first + t * s.second;
                double best = std::numeric_limits<double>::infinity();
                for (const auto& q : to) best = std::min(best, segment_distance(p, q.first, q.second));
                worst = std::max(worst, best);
            }
        return worst;
    };
    return std::max(directed(sa, sb), directed(sb, sa));
}

// Curvature at v from explicit 3x2 tangent and normal-difference matrices.
struct OracleCurvature {
    bool defined = false;
    double gauss = 0;
    double mean = 0;
    Eigen::Matrix2d first, second;
};

inline Vec3 oracle_normal(const Embedding& emb, VertexId v) {
    const auto inc = emb.graph().incident_edges(v);
    Eigen::Matrix3d e;
    for (int i = 0; i < 3; ++i) e.col(i) = emb.edge_vector(v, inc[static_cast<std::size_t>(i)]);
    const Vec3 n = e.col(0).cross(e.col(1)) + e.col(1).cross(e.col(2)) + e.col(2).cross(e.col(0));
    return n.normalized();
}

inline OracleCurvature oracle_curvature(const Embedding& emb, VertexId v) {
    OracleCurvature out;
    const auto inc = emb.graph().incident_edges(v);
    const auto nb = emb.graph().neighbors(v);
    Eigen::Matrix<double, 3, 3> e, n;
    for (int i = 0; i < 3; ++i) {
        e.col(i) = emb.edge_vector(v, inc[static_cast<std::size_t>(i)]);
        n.col(i) = oracle_normal(emb, nb[static_cast<std::size_t>(i)]);
    }
    Eigen::Matrix<double, 3, 2> t, d;
    t << e.col(1) - e.col(0), e.col(2) - e.col(0);
    d << n.col(1) - n.col(0), n.col(2) - n.col(0);
    out.first = t.transpose() * t;
    out.second = -(t.transpose() * d);
    const Eigen::Matrix2d s = out.first.inverse() * out.second;
    out.gauss = s.determinant();
    out.mean = 0.5 * s.trace();
    out.defined = true;
    return out;
}

// Faces of a trivalent graph given a rotation at every vertex (neighbors in
// counterclockwise order); each face keeps the region on its left.
inline std::vector<std::vector<VertexId>> faces_from_rotation(const std::vector<std::vector<VertexId>>& rot) {
    std::map<std::pair<VertexId, VertexId>, bool> used;
    std::vector<std::vector<VertexId>> faces;
    for (VertexId u = 0; u < rot.size(); ++u)
        for (VertexId v : rot[u]) {
            if (used[{u, v}]) continue;
            std::vector<VertexId> f;
            VertexId a = u, b = v;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                f.push_back(a);
                const auto& r = rot[b];
                const std::size_t k = static_cast<std::size_t>(std::find(r.begin(), r.end(), a) - r.begin());
                const VertexId c = r[(k + r.size() - 1) % r.size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(f));
        }
    return faces;
}

// Honeycomb on an m x m torus: 2 m^2 vertices, m^2 hexagons.
inline SurfaceGraph hex_torus(int m) {
    auto A = [m](int i, int j) { return static_cast<VertexId>(2 * (((i % m + m) % m) * m + (j % m + m) % m)); };
    auto B = [&](int i, int j) { return A(i, j) + 1; };
    std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(2 * m * m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            // A at the origin of cell (i, j) with neighbors up, lower left, lower right;
            // B one unit above with neighbors down, upper right, upper left.
            rot[A(i, j)] = {B(i, j), B(i - 1, j), B(i, j - 1)};
            rot[B(i, j)] = {A(i, j), A(i + 1, j), A(i, j + 1)};
        }
    return SurfaceGraph::from_faces(rot.size(), faces_from_rotation(rot));
}

inline SurfaceGraph cube_graph() {
    return SurfaceGraph::from_faces(8, {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

inline SurfaceGraph tetrahedron_graph() { return SurfaceGraph::from_faces(4, {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}}); }

// GC(2,0) the long way: dual triangulation, 1-to-4 split of every triangle,
// dual back. Closed graphs only.
inline SurfaceGraph dual_route_gc20(const SurfaceGraph& g) {
    // Dual triangle of primal vertex v: the faces around v, in rotation order.
    std::vector<std::array<std::uint32_t, 3>> tris;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto nb = g.neighbors(v);
        std::array<std::uint32_t, 3> t{};
        for (int i = 0; i < 3; ++i) {
            const VertexId a = nb[static_cast<std::size_t>(i)], b = nb[static_cast<std::size_t>((i + 1) % 3)];
            // Face containing a -> v -> b.
            std::uint32_t found = kInvalidId;
            for (FaceId f : g.vertex_faces(v)) {
                const auto c = g.face(f);
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (c[k] == v && c[(k + c.size() - 1) % c.size()] == a && c[(k + 1) % c.size()] == b) found = f;
            }
            t[static_cast<std::size_t>(i)] = found;
        }
        tris.push_back(t);
    }
    // 1-to-4 split. Triangulation vertices: primal faces, then one per primal edge (midpoint).
    const std::uint32_t nf = static_cast<std::uint32_t>(g.face_count());
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mid;
    auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
        const auto key = std::minmax(a, b);
        auto [it, fresh] = mid.emplace(key, nf + static_cast<std::uint32_t>(mid.size()));
        return it->second;
    };
    std::vector<std::array<std::uint32_t, 3>> small;
    for (const auto& t : tris) {
        const std::uint32_t m01 = midpoint(t[0], t[1]), m12 = midpoint(t[1], t[2]), m20 = midpoint(t[2], t[0]);
        small.push_back({t[0], m01, m20});
        small.push_back({t[1], m12, m01});
        small.push_back({t[2], m20, m12});
        small.push_back({m01, m12, m20});
    }
    // Dual back: one vertex per small triangle; one face per triangulation vertex.
    const std::size_t nt = nf + mid.size();
    std::vector<std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>>> around(nt);
    for (std::uint32_t s = 0; s < small.size(); ++s)
        for (int i = 0; i < 3; ++i) {
            const auto& t = small[s];
            around[t[static_cast<std::size_t>(i)]][s] = {t[static_cast<std::size_t>((i + 1) % 3)],
                                                         t[static_cast<std::size_t>((i + 2) % 3)]};
        }
    std::vector<std::vector<VertexId>> faces;
    for (std::size_t x = 0; x < nt; ++x) {
        const auto& ring = around[x];
        // Triangles around x chained by shared edges: the triangle (x, p, q) is followed by the one starting (x, q, .).
        std::map<std::uint32_t, std::uint32_t> by_first;
        for (const auto& [s, pq] : ring) by_first[pq.first] = s;
        std::vector<VertexId> f{ring.begin()->first};
        while (f.size() < ring.size()) f.push_back(by_first.at(ring.at(f.back()).second));
        std::reverse(f.begin(), f.end());
        faces.push_back(std::move(f));
    }
    return SurfaceGraph::from_faces(small.size(), std::move(faces));
}

// Canonical code of a connected trivalent graph from its rotation system:
// lexicographically smallest BFS relabeling over all starting darts and both
// orientations. Equal codes mean isomorphic oriented maps up to mirroring.
inline std::vector<std::uint32_t> canonical_code(const SurfaceGraph& g) {
    std::vector<std::uint32_t> best;
    const std::size_t nv = g.vertex_count();
    for (int mirror = 0; mirror < 2; ++mirror)
        for (VertexId s = 0; s < nv; ++s)
            for (std::size_t k = 0; k < g.degree(s); ++k) {
                std::vector<std::uint32_t> label(nv, kInvalidId), code;
                std::vector<VertexId> queue{s};
                std::vector<VertexId> entry{g.neighbors(s)[k]};
                label[s] = 0;
                for (std::size_t h = 0; h < queue.size(); ++h) {
                    const VertexId v = queue[h];
                    const auto nb = g.neighbors(v);
                    const std::size_t d = nb.size();
                    const std::size_t start = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), entry[h]) - nb.begin());
                    for (std::size_t i = 0; i < d; ++i) {
                        const std::size_t idx = mirror ? (start + d - i) % d : (start + i) % d;
                        const VertexId w = nb[idx];
                        if (label[w] == kInvalidId) {
                            label[w] = static_cast<std::uint32_t>(queue.size());
                            queue.push_back(w);
                            entry.push_back(v);
                        }
                        code.push_back(label[w]);
                    }
                    code.push_back(kInvalidId);
                }
                if (best.empty() || code < best) best = code;
            }
    return best;
}

}  // namespace gcsub::testing
