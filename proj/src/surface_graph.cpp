#include "gcsub/surface_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gcsub {

namespace {

std::uint64_t edge_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
}

// Fills a CSR structure from (row, value) pairs, preserving insertion order per row.
template <class T>
void fill_csr(std::size_t rows, const std::vector<std::pair<std::size_t, T>>& items,
              std::vector<std::size_t>& offsets, std::vector<T>& values) {
    offsets.assign(rows + 1, 0);
    for (const auto& [r, _] : items) ++offsets[r + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    values.resize(items.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [r, val] : items) values[cursor[r]++] = val;
}

}  // namespace

void canonical_rotate(std::vector<VertexId>& circuit) {
    if (circuit.empty()) return;
    auto it = std::min_element(circuit.begin(), circuit.end());
    std::rotate(circuit.begin(), it, circuit.end());
}

SurfaceGraph SurfaceGraph::build(std::size_t vertex_count,
                                 std::span<const std::pair<VertexId, VertexId>> edges,
                                 std::vector<std::vector<VertexId>> faces,
                                 std::vector<char> boundary) {
    SurfaceGraph g;
    g.vertex_count_ = vertex_count;
    if (boundary.empty()) boundary.assign(vertex_count, 0);
    if (boundary.size() != vertex_count)
        throw StructuralError("boundary flag count does not match vertex count");
    g.boundary_ = std::move(boundary);

    g.edges_.reserve(edges.size());
    g.edge_lookup_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count)
            throw StructuralError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") references a missing vertex");
        if (a == b) throw StructuralError("self loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        g.edge_lookup_.emplace_back(edge_key(a, b), static_cast<EdgeId>(g.edges_.size()));
        g.edges_.push_back({a, b});
    }
    std::sort(g.edge_lookup_.begin(), g.edge_lookup_.end());
    for (std::size_t i = 1; i < g.edge_lookup_.size(); ++i) {
        if (g.edge_lookup_[i].first == g.edge_lookup_[i - 1].first) {
            const Edge& e = g.edges_[g.edge_lookup_[i].second];
            throw StructuralError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
    }

    // Faces.
    g.face_offsets_.assign(1, 0);
    std::vector<std::pair<std::size_t, FaceId>> edge_face_items;
    std::vector<std::pair<std::size_t, FaceId>> vertex_face_items;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        auto& c = faces[f];
        for (VertexId v : c)
            if (v >= vertex_count)
                throw StructuralError("face " + std::to_string(f) + " references missing vertex " +
                                      std::to_string(v));
        canonical_rotate(c);
        const std::size_t n = c.size();
        for (std::size_t i = 0; i < n; ++i) {
            g.face_vertices_.push_back(c[i]);
            const EdgeId e = n > 1 ? g.find_edge(c[i], c[(i + 1) % n]) : kInvalidId;
            g.face_edge_ids_.push_back(e);
            if (e != kInvalidId) edge_face_items.emplace_back(e, static_cast<FaceId>(f));
            vertex_face_items.emplace_back(c[i], static_cast<FaceId>(f));
        }
        g.face_offsets_.push_back(g.face_vertices_.size());
    }
    // A face walking an edge twice counts once.
    std::sort(edge_face_items.begin(), edge_face_items.end());
    edge_face_items.erase(std::unique(edge_face_items.begin(), edge_face_items.end()), edge_face_items.end());
    std::sort(vertex_face_items.begin(), vertex_face_items.end());
    vertex_face_items.erase(std::unique(vertex_face_items.begin(), vertex_face_items.end()),
                            vertex_face_items.end());
    fill_csr(g.edges_.size(), edge_face_items, g.edge_face_offsets_, g.edge_face_ids_);
    fill_csr(vertex_count, vertex_face_items, g.vertex_face_offsets_, g.vertex_face_ids_);

    // Adjacency, initially in ascending neighbor order.
    std::vector<std::pair<std::size_t, std::pair<VertexId, EdgeId>>> adj_items;
    adj_items.reserve(2 * g.edges_.size());
    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
        adj_items.push_back({g.edges_[e].u, {g.edges_[e].v, e}});
        adj_items.push_back({g.edges_[e].v, {g.edges_[e].u, e}});
    }
    std::sort(adj_items.begin(), adj_items.end());
    std::vector<std::pair<VertexId, EdgeId>> adj;
    fill_csr(vertex_count, adj_items, g.adj_offsets_, adj);
    g.adj_vertices_.resize(adj.size());
    g.adj_edges_.resize(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        g.adj_vertices_[i] = adj[i].first;
        g.adj_edges_[i] = adj[i].second;
    }

    // Local orientation from faces: a face passing a -> v -> b makes b follow a
    // in the rotation at v. Accept it only when the successor map is a single
    // cycle over all neighbors.
    g.face_oriented_.assign(vertex_count, 0);
    for (VertexId v = 0; v < vertex_count; ++v) {
        const std::size_t deg = g.degree(v);
        const auto vf = g.vertex_faces(v);
        if (deg < 3 || vf.size() != deg) continue;
        std::span<VertexId> nbrs(g.adj_vertices_.data() + g.adj_offsets_[v], deg);
        std::vector<VertexId> succ(deg, kInvalidId);
        bool ok = true;
        auto slot = [&](VertexId w) -> std::size_t {
            return static_cast<std::size_t>(std::find(nbrs.begin(), nbrs.end(), w) - nbrs.begin());
        };
        for (FaceId f : vf) {
            const auto c = g.face(f);
            const std::size_t n = c.size();
            const std::size_t i = static_cast<std::size_t>(std::find(c.begin(), c.end(), v) - c.begin());
            const VertexId a = c[(i + n - 1) % n];
            const VertexId b = c[(i + 1) % n];
            const std::size_t sa = slot(a), sb = slot(b);
            if (sa >= deg || sb >= deg || succ[sa] != kInvalidId) {
                ok = false;
                break;
            }
            succ[sa] = b;
        }
        if (!ok) continue;
        std::vector<VertexId> order{nbrs[0]};
        for (std::size_t k = 1; k < deg; ++k) {
            const VertexId nxt = succ[slot(order.back())];
            if (nxt == kInvalidId || nxt == order.front()) {
                ok = false;
                break;
            }
            order.push_back(nxt);
        }
        if (!ok || succ[slot(order.back())] != order.front()) continue;
        std::vector<EdgeId> eids;
        for (VertexId w : order) eids.push_back(g.find_edge(v, w));
        std::copy(order.begin(), order.end(), nbrs.begin());
        std::copy(eids.begin(), eids.end(), g.adj_edges_.begin() + static_cast<std::ptrdiff_t>(g.adj_offsets_[v]));
        g.face_oriented_[v] = 1;
    }
    return g;
}

SurfaceGraph SurfaceGraph::from_faces(std::size_t vertex_count, std::vector<std::vector<VertexId>> faces,
                                      std::vector<char> boundary) {
    std::vector<std::uint64_t> keys;
    for (const auto& c : faces)
        for (std::size_t i = 0; i < c.size(); ++i) {
            const VertexId a = c[i], b = c[(i + 1) % c.size()];
            if (a != b) keys.push_back(edge_key(a, b));
        }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(keys.size());
    for (auto k : keys) edges.emplace_back(static_cast<VertexId>(k >> 32), static_cast<VertexId>(k & 0xffffffffu));
    return build(vertex_count, edges, std::move(faces), std::move(boundary));
}

EdgeId SurfaceGraph::find_edge(VertexId u, VertexId v) const {
    const std::uint64_t key = edge_key(u, v);
    auto it = std::lower_bound(edge_lookup_.begin(), edge_lookup_.end(), std::make_pair(key, EdgeId{0}));
    if (it == edge_lookup_.end() || it->first != key) return kInvalidId;
    return it->second;
}

std::span<const VertexId> SurfaceGraph::neighbors(VertexId v) const {
    return {adj_vertices_.data() + adj_offsets_[v], degree(v)};
}

std::span<const EdgeId> SurfaceGraph::incident_edges(VertexId v) const {
    return {adj_edges_.data() + adj_offsets_[v], degree(v)};
}

std::span<const VertexId> SurfaceGraph::face(FaceId f) const {
    return {face_vertices_.data() + face_offsets_[f], face_size(f)};
}

std::span<const EdgeId> SurfaceGraph::face_edges(FaceId f) const {
    return {face_edge_ids_.data() + face_offsets_[f], face_size(f)};
}

std::span<const FaceId> SurfaceGraph::edge_faces(EdgeId e) const {
    return {edge_face_ids_.data() + edge_face_offsets_[e], edge_face_offsets_[e + 1] - edge_face_offsets_[e]};
}

std::span<const FaceId> SurfaceGraph::vertex_faces(VertexId v) const {
    return {vertex_face_ids_.data() + vertex_face_offsets_[v],
            vertex_face_offsets_[v + 1] - vertex_face_offsets_[v]};
}

bool SurfaceGraph::has_boundary() const noexcept {
    return std::any_of(boundary_.begin(), boundary_.end(), [](char b) { return b != 0; });
}

std::vector<std::vector<VertexId>> SurfaceGraph::face_circuits() const {
    std::vector<std::vector<VertexId>> out;
    out.reserve(face_count());
    for (FaceId f = 0; f < face_count(); ++f) {
        const auto c = face(f);
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

ValidationReport validate(const SurfaceGraph& graph) {
    for (FaceId f = 0; f < graph.face_count(); ++f) {
        const auto c = graph.face(f);
        if (c.size() < 3) throw StructuralError("face " + std::to_string(f) + " has fewer than 3 vertices");
        std::vector<VertexId> sorted(c.begin(), c.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw StructuralError("face " + std::to_string(f) + " repeats a vertex");
        const auto fe = graph.face_edges(f);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (fe[i] == kInvalidId)
                throw StructuralError("face " + std::to_string(f) + ": (" + std::to_string(c[i]) + "," +
                                      std::to_string(c[(i + 1) % c.size()]) + ") is not an edge");
    }

    ValidationReport r;
    r.trivalent = true;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const std::size_t d = graph.degree(v);
        if (graph.is_boundary(v) ? (d < 1 || d > 3) : d != 3) r.trivalent = false;
    }

    bool consistent = true;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const auto ef = graph.edge_faces(e);
        if (ef.size() > 2) r.branched_edges.push_back({e, ef.size()});
        if (ef.size() == 1) ++r.boundary_edge_count;
        if (ef.size() == 2) {
            // The two faces must traverse the edge in opposite directions.
            const Edge& ed = graph.edge(e);
            int dir[2];
            for (int k = 0; k < 2; ++k) {
                const auto c = graph.face(ef[k]);
                const std::size_t n = c.size();
                const std::size_t i = static_cast<std::size_t>(std::find(c.begin(), c.end(), ed.u) - c.begin());
                dir[k] = c[(i + 1) % n] == ed.v ? 1 : -1;
            }
            if (dir[0] == dir[1]) consistent = false;
        }
    }
    for (VertexId v = 0; v < graph.vertex_count() && consistent; ++v)
        if (!graph.is_boundary(v) && !graph.face_oriented(v)) consistent = false;
    r.oriented = consistent && r.branched_edges.empty();

    r.euler_characteristic = static_cast<long>(graph.vertex_count()) - static_cast<long>(graph.edge_count()) +
                             static_cast<long>(graph.face_count());
    return r;
}

std::vector<EdgeIncidence> branched_edges(const SurfaceGraph& graph) {
    std::vector<EdgeIncidence> out;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const std::size_t k = graph.edge_faces(e).size();
        if (k != 2) out.push_back({e, k});
    }
    return out;
}

std::vector<char> open_vertices(const SurfaceGraph& graph) {
    std::vector<char> open(graph.vertex_count(), 0);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (graph.degree(v) < 3) open[v] = 1;
        for (EdgeId e : graph.incident_edges(v))
            if (graph.edge_faces(e).size() < 2) open[v] = 1;
    }
    return open;
}

Leaf extract_leaf(const SurfaceGraph& graph, FaceId face, std::span<const FaceId> selection) {
    if (face >= graph.face_count()) throw DomainError("no face " + std::to_string(face));
    const auto core = graph.face(face);
    const auto core_edges = graph.face_edges(face);
    const std::size_t n = core.size();
    if (!selection.empty() && selection.size() != n)
        throw DomainError("petal selection needs " + std::to_string(n) + " entries");

    Leaf leaf;
    leaf.core_face = face;
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeId e = core_edges[i];
        if (e == kInvalidId) throw StructuralError("face " + std::to_string(face) + " is malformed");
        std::vector<FaceId> candidates;
        for (FaceId g : graph.edge_faces(e))
            if (g != face) candidates.push_back(g);
        if (candidates.empty())
            throw DomainError("core edge (" + std::to_string(core[i]) + "," + std::to_string(core[(i + 1) % n]) +
                              ") of face " + std::to_string(face) + " lies on no other face");
        const FaceId chosen = selection.empty() ? kInvalidId : selection[i];
        if (chosen != kInvalidId) {
            if (std::find(candidates.begin(), candidates.end(), chosen) == candidates.end())
                throw DomainError("face " + std::to_string(chosen) + " does not share core edge " +
                                  std::to_string(i));
            leaf.petals.push_back(chosen);
        } else if (candidates.size() == 1) {
            leaf.petals.push_back(candidates.front());
        } else {
            std::ostringstream msg;
            msg << "core edge " << i << " (" << core[i] << "," << core[(i + 1) % n]
                << ") has several petal candidates:";
            for (FaceId c : candidates) msg << ' ' << c;
            throw DomainError(msg.str());
        }
    }

    std::vector<FaceId> faces{face};
    faces.insert(faces.end(), leaf.petals.begin(), leaf.petals.end());
    std::vector<VertexId> local(graph.vertex_count(), kInvalidId);
    std::vector<std::vector<VertexId>> circuits;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        std::vector<VertexId> c;
        for (VertexId v : graph.face(faces[k])) {
            if (local[v] == kInvalidId) {
                local[v] = static_cast<VertexId>(leaf.vertex_map.size());
                leaf.vertex_map.push_back(v);
            }
            c.push_back(local[v]);
        }
        // Petals run against the core along their shared edge.
        if (k > 0) {
            const VertexId a = local[core[k - 1]];
            const VertexId b = local[core[k % n]];
            const auto it = std::find(c.begin(), c.end(), a);
            if (it != c.end() && c[(static_cast<std::size_t>(it - c.begin()) + 1) % c.size()] == b)
                std::reverse(c.begin(), c.end());
        }
        circuits.push_back(std::move(c));
    }
    SurfaceGraph sub = SurfaceGraph::from_faces(leaf.vertex_map.size(), circuits);
    auto open = open_vertices(sub);
    leaf.subgraph = SurfaceGraph::from_faces(leaf.vertex_map.size(), std::move(circuits), std::move(open));
    const ValidationReport rep = validate(leaf.subgraph);
    if (!rep.unbranched())
        throw DomainError("leaf of face " + std::to_string(face) + " is branched; choose different petals");
    return leaf;
}

}  // namespace gcsub
