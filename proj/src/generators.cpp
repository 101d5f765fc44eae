#include "gcsub/generators_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

namespace gcsub {

namespace {

// Faces of a convex trivalent polyhedron, traced counterclockwise seen from outside.
std::vector<std::vector<VertexId>> trace_faces(const std::vector<Vec3>& pos,
                                               const std::vector<std::vector<VertexId>>& nbrs) {
    const std::size_t n = pos.size();
    // Neighbors of each vertex sorted counterclockwise around its outward direction.
    std::vector<std::vector<VertexId>> ccw(n);
    for (VertexId v = 0; v < n; ++v) {
        const Vec3 axis = pos[v].normalized();
        Vec3 ref = pos[nbrs[v][0]] - pos[v];
        ref = (ref - ref.dot(axis) * axis).normalized();
        const Vec3 ref2 = axis.cross(ref);
        std::vector<std::pair<double, VertexId>> ang;
        for (VertexId w : nbrs[v]) {
            const Vec3 d = pos[w] - pos[v];
            ang.emplace_back(std::atan2(d.dot(ref2), d.dot(ref)), w);
        }
        std::sort(ang.begin(), ang.end());
        for (const auto& a : ang) ccw[v].push_back(a.second);
    }
    std::map<std::pair<VertexId, VertexId>, bool> used;
    std::vector<std::vector<VertexId>> faces;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : nbrs[u]) {
            if (used[{u, v}]) continue;
            std::vector<VertexId> face;
            VertexId a = u, b = v;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                face.push_back(a);
                // Turn left: the neighbor just clockwise of a around b.
                const auto& ring = ccw[b];
                const auto it = std::find(ring.begin(), ring.end(), a);
                const std::size_t k = static_cast<std::size_t>(it - ring.begin());
                const VertexId c = ring[(k + ring.size() - 1) % ring.size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

}  // namespace

double c60_edge_length(double circumradius) {
    const double phi = std::numbers::phi;
    return 2.0 * circumradius / std::sqrt(1.0 + 9.0 * phi * phi);
}

Embedding generate_c60(double circumradius) {
    if (!(circumradius > 0) || !std::isfinite(circumradius)) throw DomainError("C60 radius must be positive");
    const double phi = std::numbers::phi;
    const std::array<Vec3, 3> seeds = {Vec3(0, 1, 3 * phi), Vec3(1, 2 + phi, 2 * phi), Vec3(phi, 2, 2 * phi + 1)};
    std::vector<Vec3> pos;
    for (const Vec3& s : seeds) {
        for (int rot = 0; rot < 3; ++rot) {
            const Vec3 p(s[rot % 3], s[(rot + 1) % 3], s[(rot + 2) % 3]);
            for (int signs = 0; signs < 8; ++signs) {
                Vec3 q = p;
                bool skip = false;
                for (int k = 0; k < 3; ++k) {
                    if (signs & (1 << k)) {
                        if (q[k] == 0) skip = true;
                        q[k] = -q[k];
                    }
                }
                if (!skip) pos.push_back(q);
            }
        }
    }
    std::vector<std::vector<VertexId>> nbrs(pos.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < pos.size(); ++i)
        for (VertexId j = i + 1; j < pos.size(); ++j)
            if (std::abs((pos[i] - pos[j]).squaredNorm() - 4.0) < 1e-9) {
                nbrs[i].push_back(j);
                nbrs[j].push_back(i);
                edges.emplace_back(i, j);
            }
    auto faces = trace_faces(pos, nbrs);
    const double scale = circumradius / std::sqrt(1.0 + 9.0 * phi * phi);
    for (Vec3& p : pos) p *= scale;
    auto graph = std::make_shared<const SurfaceGraph>(SurfaceGraph::build(pos.size(), edges, std::move(faces)));
    return Embedding(graph, std::move(pos));
}

Embedding generate_hex_patch(std::size_t rings, double edge_length) {
    if (rings < 1) throw DomainError("hex patch needs at least one ring");
    if (!(edge_length > 0) || !std::isfinite(edge_length)) throw DomainError("edge length must be positive");
    const long k = static_cast<long>(rings);
    std::map<std::pair<long, long>, VertexId> index;
    std::vector<Vec3> pos;
    std::vector<std::vector<VertexId>> faces;
    // Corner keys on a lattice of step edge_length / 2 horizontally and
    // sqrt(3)/2 * edge_length vertically, so rounding is exact.
    for (long q = -k; q <= k; ++q) {
        for (long r = std::max(-k, -q - k); r <= std::min(k, -q + k); ++r) {
            const double cx = 1.5 * static_cast<double>(q);
            const double cy = std::sqrt(3.0) * (static_cast<double>(r) + 0.5 * static_cast<double>(q));
            std::vector<VertexId> face;
            for (int j = 0; j < 6; ++j) {
                const double a = std::numbers::pi / 3.0 * j;
                const double x = cx + std::cos(a);
                const double y = cy + std::sin(a);
                const std::pair<long, long> key{std::lround(2.0 * x), std::lround(2.0 * y / std::sqrt(3.0))};
                auto [it, fresh] = index.emplace(key, static_cast<VertexId>(pos.size()));
                if (fresh) pos.emplace_back(x * edge_length, y * edge_length, 0.0);
                face.push_back(it->second);
            }
            faces.push_back(std::move(face));
        }
    }
    SurfaceGraph open = SurfaceGraph::from_faces(pos.size(), faces);
    auto rim = open_vertices(open);
    auto graph = std::make_shared<const SurfaceGraph>(SurfaceGraph::from_faces(pos.size(), std::move(faces), rim));
    return Embedding(graph, std::move(pos));
}

}  // namespace gcsub
