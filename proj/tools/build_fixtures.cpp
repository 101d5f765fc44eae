// Regenerates the bundled fixture files.
//
//   gcsub_build_fixtures [output-dir]

#include "gcsub/generators_io.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>

using namespace gcsub;

namespace {

using Key = std::array<long, 3>;

Key key_of(const Vec3& p, double unit) {
    return {std::lround(p.x() / unit), std::lround(p.y() / unit), std::lround(p.z() / unit)};
}

// Oriented polygon complex, the input to truncation.
struct Complex {
    std::vector<Vec3> points;
    std::vector<std::vector<VertexId>> faces;
};

// Octagon-hexagon network around a mucube junction: the node cube plus its
// six strut cubes, with the open tube ends as rim. Square faces point out of
// the solid.
Complex mucube_jack() {
    Complex c;
    std::map<Key, VertexId> index;
    auto vertex = [&](const Vec3& p) {
        auto [it, fresh] = index.emplace(key_of(p, 0.5), static_cast<VertexId>(c.points.size()));
        if (fresh) c.points.push_back(p);
        return it->second;
    };
    for (int a = 0; a < 3; ++a) {
        for (int s : {1, -1}) {
            for (int b = 0; b < 3; ++b) {
                if (b == a) continue;
                for (int t : {1, -1}) {
                    const int d = 3 - a - b;
                    Vec3 normal = Vec3::Zero();
                    normal[b] = t;
                    Vec3 center = Vec3::Zero();
                    center[a] = s;
                    center[b] = 0.5 * t;
                    std::vector<Vec3> corners;
                    for (double u : {-0.5, 0.5})
                        for (double w : {-0.5, 0.5}) {
                            Vec3 p = center;
                            p[a] += u;
                            p[d] += w;
                            corners.push_back(p);
                        }
                    const Vec3 ref = corners[0] - center;
                    const Vec3 ref2 = normal.cross(ref);
                    std::sort(corners.begin(), corners.end(), [&](const Vec3& x, const Vec3& y) {
                        return std::atan2((x - center).dot(ref2), (x - center).dot(ref)) <
                               std::atan2((y - center).dot(ref2), (y - center).dot(ref));
                    });
                    std::vector<VertexId> face;
                    for (const Vec3& p : corners) face.push_back(vertex(p));
                    c.faces.push_back(std::move(face));
                }
            }
        }
    }
    return c;
}

// Vertex truncation at ratio 1/3. Every edge end becomes a vertex, every
// polygon keeps its place with twice the corners, and every vertex whose
// incident polygons close up around it becomes a new face.
Embedding truncate(const Complex& c) {
    std::map<std::pair<VertexId, VertexId>, VertexId> end_of;  // (v, w) -> point near v on edge vw
    std::vector<Vec3> pos;
    auto end = [&](VertexId v, VertexId w) {
        auto [it, fresh] = end_of.emplace(std::make_pair(v, w), static_cast<VertexId>(pos.size()));
        if (fresh) pos.push_back(c.points[v] + (c.points[w] - c.points[v]) / 3.0);
        return it->second;
    };
    std::vector<std::vector<VertexId>> faces;
    std::map<VertexId, std::map<VertexId, VertexId>> corner_links;  // v -> (out end -> in end)
    std::map<VertexId, int> corner_count;
    for (const auto& f : c.faces) {
        const std::size_t n = f.size();
        std::vector<VertexId> poly;
        for (std::size_t i = 0; i < n; ++i) {
            const VertexId v = f[i], w = f[(i + 1) % n], u = f[(i + n - 1) % n];
            poly.push_back(end(v, u));
            poly.push_back(end(v, w));
            corner_links[v][end(v, w)] = end(v, u);
            ++corner_count[v];
        }
        faces.push_back(std::move(poly));
    }
    for (const auto& [v, links] : corner_links) {
        std::vector<VertexId> cycle{links.begin()->first};
        bool closed = false;
        while (true) {
            const auto it = links.find(cycle.back());
            if (it == links.end()) break;
            if (it->second == cycle.front()) {
                closed = true;
                break;
            }
            cycle.push_back(it->second);
        }
        if (closed && cycle.size() == links.size() && cycle.size() >= 3) faces.push_back(std::move(cycle));
    }
    SurfaceGraph open = SurfaceGraph::from_faces(pos.size(), faces);
    auto rim = open_vertices(open);
    auto graph = std::make_shared<const SurfaceGraph>(SurfaceGraph::from_faces(pos.size(), std::move(faces), rim));
    return Embedding(graph, std::move(pos));
}

// Moves every non-boundary vertex to the barycenter of its neighbors by one
// sparse solve with the boundary held fixed.
Embedding harmonic(const Embedding& emb) {
    const SurfaceGraph& g = emb.graph();
    std::vector<int> slot(g.vertex_count(), -1);
    int m = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.is_boundary(v)) slot[v] = m++;
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m, 3);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (slot[v] < 0) continue;
        trip.emplace_back(slot[v], slot[v], static_cast<double>(g.degree(v)));
        for (VertexId w : g.neighbors(v)) {
            if (slot[w] >= 0)
                trip.emplace_back(slot[v], slot[w], -1.0);
            else
                rhs.row(slot[v]) += emb.position(w).transpose();
        }
    }
    Eigen::SparseMatrix<double> lap(m, m);
    lap.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    if (solver.info() != Eigen::Success) throw DomainError("harmonic solve failed");
    const Eigen::MatrixXd x = solver.solve(rhs);
    std::vector<Vec3> pos = emb.positions();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (slot[v] >= 0) pos[v] = x.row(slot[v]).transpose();
    return Embedding(emb.graph_ptr(), std::move(pos));
}

// Mucube (cubes of side 1 on a cubic lattice of period 2, joined by struts
// along the axes) truncated at 1/3: one translation cell of the periodic
// octagon-hexagon network. Polygons are built in unrolled coordinates and
// folded back into the cell [-1, 1)^3 with edge offsets.
Embedding mucube_cell() {
    const double period = 2.0;
    // Squares of the struts leaving the central node cube along +x, +y, +z and
    // of the struts entering it along -x, -y, -z.
    std::vector<std::vector<Vec3>> squares;
    for (int a = 0; a < 3; ++a)
        for (int s : {1, -1})
            for (int b = 0; b < 3; ++b) {
                if (b == a) continue;
                for (int t : {1, -1}) {
                    const int d = 3 - a - b;
                    Vec3 normal = Vec3::Zero();
                    normal[b] = t;
                    Vec3 center = Vec3::Zero();
                    center[a] = s;
                    center[b] = 0.5 * t;
                    std::vector<Vec3> corners;
                    for (double u : {-0.5, 0.5})
                        for (double w : {-0.5, 0.5}) {
                            Vec3 p = center;
                            p[a] += u;
                            p[d] += w;
                            corners.push_back(p);
                        }
                    const Vec3 ref = corners[0] - center;
                    const Vec3 ref2 = normal.cross(ref);
                    std::sort(corners.begin(), corners.end(), [&](const Vec3& x, const Vec3& y) {
                        return std::atan2((x - center).dot(ref2), (x - center).dot(ref)) <
                               std::atan2((y - center).dot(ref2), (y - center).dot(ref));
                    });
                    squares.push_back(std::move(corners));
                }
            }
    auto cut = [](const Vec3& v, const Vec3& w) { return Vec3(v + (w - v) / 3.0); };
    std::vector<std::vector<Vec3>> polygons;
    // Octagons of the +x, +y, +z struts; the other three struts belong to the neighbor cells.
    for (const auto& q : squares) {
        Vec3 c = Vec3::Zero();
        for (const Vec3& p : q) c += p / 4.0;
        if (c.maxCoeff() < 0.75) continue;
        std::vector<Vec3> oct;
        for (std::size_t i = 0; i < 4; ++i) {
            oct.push_back(cut(q[i], q[(i + 3) % 4]));
            oct.push_back(cut(q[i], q[(i + 1) % 4]));
        }
        polygons.push_back(std::move(oct));
    }
    // Hexagons around the 8 node-cube corners, chained as in truncate().
    for (int corner = 0; corner < 8; ++corner) {
        const Vec3 v(corner & 1 ? 0.5 : -0.5, corner & 2 ? 0.5 : -0.5, corner & 4 ? 0.5 : -0.5);
        std::vector<std::pair<Vec3, Vec3>> links;  // out end -> in end
        for (const auto& q : squares)
            for (std::size_t i = 0; i < 4; ++i)
                if ((q[i] - v).norm() < 1e-12) links.emplace_back(cut(v, q[(i + 1) % 4]), cut(v, q[(i + 3) % 4]));
        std::vector<Vec3> hex{links.front().first};
        while (hex.size() < links.size()) {
            for (const auto& l : links)
                if ((l.first - hex.back()).norm() < 1e-12) {
                    hex.push_back(l.second);
                    break;
                }
        }
        polygons.push_back(std::move(hex));
    }

    // Fold into the cell.
    const double unit = 1.0 / 6.0;
    std::map<Key, VertexId> index;
    std::vector<Vec3> pos;
    auto fold = [&](const Vec3& p, IVec3& cell) {
        Vec3 r = p;
        for (int k = 0; k < 3; ++k) {
            cell[k] = static_cast<int>(std::floor((p[k] + 1.0) / period + 1e-9));
            r[k] = p[k] - period * cell[k];
        }
        auto [it, fresh] = index.emplace(key_of(r, unit), static_cast<VertexId>(pos.size()));
        if (fresh) pos.push_back(r);
        return it->second;
    };
    std::map<std::pair<VertexId, VertexId>, IVec3> edge_offset;
    std::vector<std::vector<VertexId>> faces;
    for (const auto& poly : polygons) {
        std::vector<VertexId> f;
        std::vector<IVec3> cells;
        for (const Vec3& p : poly) {
            IVec3 cell;
            f.push_back(fold(p, cell));
            cells.push_back(cell);
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            const std::size_t j = (i + 1) % f.size();
            IVec3 o = cells[j] - cells[i];
            VertexId a = f[i], b = f[j];
            if (a > b) {
                std::swap(a, b);
                o = -o;
            }
            const auto [it, fresh] = edge_offset.emplace(std::make_pair(a, b), o);
            if (!fresh && it->second != o) throw DomainError("inconsistent periodic edge");
        }
        faces.push_back(std::move(f));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<IVec3> offsets;
    for (const auto& [e, o] : edge_offset) {
        edges.push_back(e);
        offsets.push_back(o);
    }
    auto graph = std::make_shared<const SurfaceGraph>(SurfaceGraph::build(pos.size(), edges, std::move(faces)));
    Lattice lattice{{Vec3(period, 0, 0), Vec3(0, period, 0), Vec3(0, 0, period)}};
    return Embedding(graph, std::move(pos), lattice, std::move(offsets));
}

// Periodic harmonic placement: every vertex at the barycenter of its
// resolved neighbors, vertex 0 pinned.
Embedding periodic_harmonic(const Embedding& emb) {
    const SurfaceGraph& g = emb.graph();
    const int m = static_cast<int>(g.vertex_count()) - 1;
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m, 3);
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        trip.emplace_back(v - 1, v - 1, static_cast<double>(g.degree(v)));
        for (EdgeId e : g.incident_edges(v)) {
            const VertexId w = g.edge(e).other(v);
            const Vec3 shift = emb.lattice()->shift(emb.offset_from(v, e));
            rhs.row(v - 1) += shift.transpose();
            if (w == 0)
                rhs.row(v - 1) += emb.position(0).transpose();
            else
                trip.emplace_back(v - 1, w - 1, -1.0);
        }
    }
    Eigen::SparseMatrix<double> lap(m, m);
    lap.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    if (solver.info() != Eigen::Success) throw DomainError("harmonic solve failed");
    const Eigen::MatrixXd x = solver.solve(rhs);
    std::vector<Vec3> pos = emb.positions();
    for (VertexId v = 1; v < g.vertex_count(); ++v) pos[v] = x.row(v - 1).transpose();
    return Embedding(emb.graph_ptr(), std::move(pos), emb.lattice(), emb.edge_offsets());
}

// srs net (the K4 crystal), cubic cell of side 1, edge length sqrt(2)/4.
const std::array<Vec3, 8> kSrsCell = {
    Vec3(1, 1, 1) / 8, Vec3(3, 7, 5) / 8, Vec3(7, 5, 3) / 8, Vec3(5, 3, 7) / 8,
    Vec3(5, 5, 5) / 8, Vec3(7, 3, 1) / 8, Vec3(3, 1, 7) / 8, Vec3(1, 7, 3) / 8,
};

struct Chunk {
    Embedding embedding;
    FaceId core = kInvalidId;
};

// All 10-rings of the srs net inside a ball, with vertices and edges on no
// ring dropped. Edges well inside the ball lie on 10 rings.
Chunk k4_chunk(double radius) {
    const Vec3 center = kSrsCell[0];
    std::vector<Vec3> pos;
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j)
            for (int k = -3; k <= 3; ++k)
                for (const Vec3& p : kSrsCell) {
                    const Vec3 q = p + Vec3(i, j, k);
                    if ((q - center).norm() <= radius) pos.push_back(q);
                }
    std::sort(pos.begin(), pos.end(), [&](const Vec3& a, const Vec3& b) {
        const double da = (a - center).squaredNorm(), db = (b - center).squaredNorm();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
    });
    const double len2 = 2.0 / 16.0;
    std::vector<std::vector<VertexId>> adj(pos.size());
    for (VertexId a = 0; a < pos.size(); ++a)
        for (VertexId b = a + 1; b < pos.size(); ++b)
            if (std::abs((pos[a] - pos[b]).squaredNorm() - len2) < 1e-9) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }

    // 10-cycles through their smallest vertex, one direction each.
    std::vector<std::vector<VertexId>> rings;
    std::vector<VertexId> path;
    std::vector<char> on_path(pos.size(), 0);
    auto dfs = [&](auto&& self, VertexId v) -> void {
        if (path.size() == 10) {
            if (std::find(adj[v].begin(), adj[v].end(), path[0]) != adj[v].end() && path[1] < path[9]) rings.push_back(path);
            return;
        }
        for (VertexId w : adj[v]) {
            if (w <= path[0] || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (VertexId s = 0; s < pos.size(); ++s) {
        path = {s};
        on_path[s] = 1;
        dfs(dfs, s);
        on_path[s] = 0;
    }

    std::vector<VertexId> keep(pos.size(), kInvalidId);
    std::vector<Vec3> kept;
    for (const auto& r : rings)
        for (VertexId v : r)
            if (keep[v] == kInvalidId) {
                keep[v] = 0;
            }
    for (VertexId v = 0; v < pos.size(); ++v)
        if (keep[v] != kInvalidId) {
            keep[v] = static_cast<VertexId>(kept.size());
            kept.push_back(pos[v]);
        }
    std::set<std::pair<VertexId, VertexId>> edge_set;
    std::vector<std::vector<VertexId>> faces;
    for (const auto& r : rings) {
        std::vector<VertexId> f;
        for (VertexId v : r) f.push_back(keep[v]);
        for (std::size_t i = 0; i < f.size(); ++i)
            edge_set.emplace(std::min(f[i], f[(i + 1) % 10]), std::max(f[i], f[(i + 1) % 10]));
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](auto a, auto b) {
        canonical_rotate(a);
        canonical_rotate(b);
        return a < b;
    });
    const std::vector<std::pair<VertexId, VertexId>> edges(edge_set.begin(), edge_set.end());
    std::vector<char> boundary(kept.size(), 0);
    std::vector<int> deg(kept.size(), 0);
    for (const auto& e : edges) {
        ++deg[e.first];
        ++deg[e.second];
    }
    for (VertexId v = 0; v < kept.size(); ++v) boundary[v] = deg[v] < 3;

    // Core: the ring whose barycenter is closest to the center.
    Chunk out;
    double best = 1e300;
    for (FaceId f = 0; f < faces.size(); ++f) {
        Vec3 b = Vec3::Zero();
        for (VertexId v : faces[f]) b += kept[v];
        const double d = (b / 10.0 - center).norm();
        if (d < best - 1e-12) {
            best = d;
            out.core = f;
        }
    }
    auto graph = std::make_shared<const SurfaceGraph>(SurfaceGraph::build(kept.size(), edges, std::move(faces), boundary));
    out.embedding = Embedding(graph, std::move(kept));
    return out;
}

// Petals meeting the core in exactly one edge, one per core edge, with an
// un-branched union. Enumerated in lexicographic order of face ids.
std::vector<std::vector<FaceId>> petal_choices(const SurfaceGraph& g, FaceId core, std::size_t limit) {
    const auto cv = g.face(core);
    const auto ce = g.face_edges(core);
    std::set<VertexId> core_set(cv.begin(), cv.end());
    std::vector<std::vector<FaceId>> options(ce.size());
    for (std::size_t i = 0; i < ce.size(); ++i)
        for (FaceId f : g.edge_faces(ce[i])) {
            if (f == core) continue;
            std::size_t shared = 0;
            for (VertexId v : g.face(f)) shared += core_set.count(v);
            if (shared == 2) options[i].push_back(f);
        }
    std::vector<std::vector<FaceId>> found;
    std::vector<FaceId> pick;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (found.size() >= limit) return;
        if (i == ce.size()) {
            try {
                const Leaf leaf = extract_leaf(g, core, pick);
                if (validate(leaf.subgraph).oriented) found.push_back(pick);
            } catch (const Error&) {
            }
            return;
        }
        for (FaceId f : options[i]) {
            pick.push_back(f);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

Embedding leaf_patch(const Embedding& chunk, const Leaf& leaf) {
    std::vector<Vec3> pos;
    for (VertexId v : leaf.vertex_map) pos.push_back(chunk.position(v));
    return Embedding(std::make_shared<const SurfaceGraph>(leaf.subgraph), std::move(pos));
}

void write(const std::filesystem::path& dir, const std::string& id, const Embedding& emb,
           const std::vector<std::string>& comments) {
    const auto path = dir / (id + ".graph");
    save_graph(path, emb, comments);
    const ValidationReport r = validate(emb.graph());
    std::printf("%-10s V=%zu E=%zu F=%zu chi=%ld branched=%zu fnv1a=%016llx\n", id.c_str(), emb.graph().vertex_count(),
                emb.graph().edge_count(), emb.graph().face_count(), r.euler_characteristic, r.branched_edges.size(),
                static_cast<unsigned long long>(file_checksum(path)));
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const std::filesystem::path dir = argc > 1 ? std::filesystem::path(argv[1]) : fixture_dir();
        std::filesystem::create_directories(dir);

        const Embedding mackay = harmonic(truncate(mucube_jack()));
        write(dir, "mackay-p", mackay,
              {"mackay-p: octagon-hexagon network of one mucube junction (node cube plus six strut cubes, tube",
               "ends open), vertex-truncated at 1/3; rim fixed, interior vertices placed by a harmonic solve",
               "so every interior vertex is balanced. Cube side 1."});

        write(dir, "mackay-cell", periodic_harmonic(mucube_cell()),
              {"mackay-cell: one translation cell (period 2) of the truncated mucube network, harmonic placement"});

        const Chunk chunk = k4_chunk(2.0);
        const SurfaceGraph& cg = chunk.embedding.graph();
        write(dir, "k4-chunk", chunk.embedding,
              {"k4-chunk: every 10-ring of the srs (K4) net within distance 2 of (1/8,1/8,1/8), cubic cell",
               "of side 1, edge length sqrt(2)/4; vertices and edges on no ring removed.",
               "core face " + std::to_string(chunk.core)});

        const auto choices = petal_choices(cg, chunk.core, 64);
        if (choices.empty()) throw DomainError("no un-branched leaf around the core face");
        const auto& a = choices.front();
        const std::vector<FaceId>* b = nullptr;
        for (const auto& c : choices) {
            std::size_t diff = 0;
            for (std::size_t i = 0; i < c.size(); ++i) diff += c[i] != a[i];
            if (diff == 1) {
                b = &c;
                break;
            }
        }
        if (!b) throw DomainError("no second leaf differing in one petal");
        auto describe = [&](const std::vector<FaceId>& p) {
            std::string s = "petals (k4-chunk face ids)";
            for (FaceId f : p) s += " " + std::to_string(f);
            return s;
        };
        write(dir, "k4-leaf-a", leaf_patch(chunk.embedding, extract_leaf(cg, chunk.core, a)),
              {"k4-leaf-a: leaf of k4-chunk face " + std::to_string(chunk.core) + ", face 0 is the core", describe(a)});
        write(dir, "k4-leaf-b", leaf_patch(chunk.embedding, extract_leaf(cg, chunk.core, *b)),
              {"k4-leaf-b: leaf of k4-chunk face " + std::to_string(chunk.core) + ", face 0 is the core", describe(*b)});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
