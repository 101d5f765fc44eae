#include "gcsub/generators_io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#ifndef GCSUB_FIXTURE_DIR
#define GCSUB_FIXTURE_DIR "fixtures"
#endif

namespace gcsub {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

class LineParser {
public:
    LineParser(const std::string& file, std::size_t line) : file_(file), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(file_, line_, what); }

    long long integer(std::string_view tok) const {
        long long v = 0;
        const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size()) fail("expected an integer, got '" + std::string(tok) + "'");
        return v;
    }

    double real(std::string_view tok) const {
        double v = 0;
        const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(v))
            fail("expected a finite number, got '" + std::string(tok) + "'");
        return v;
    }

private:
    const std::string& file_;
    std::size_t line_;
};

struct RawEdge {
    long long u, v;
    IVec3 offset;
    bool has_offset;
    std::size_t line;
};

}  // namespace

GraphFile parse_graph(std::istream& in, const std::string& name) {
    GraphFile out;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::optional<Lattice> lattice;
    std::unordered_map<long long, VertexId> ids;
    std::vector<Vec3> pos;
    std::vector<char> boundary;
    std::vector<RawEdge> raw_edges;
    std::vector<std::pair<std::vector<long long>, std::size_t>> raw_faces;

    while (std::getline(in, line)) {
        ++lineno;
        const LineParser p(name, lineno);
        if (!line.empty() && line[0] == '#') {
            std::string_view c(line);
            c.remove_prefix(1);
            if (!c.empty() && c[0] == ' ') c.remove_prefix(1);
            out.comments.emplace_back(c);
            continue;
        }
        const auto tok = split(line);
        if (tok.empty()) continue;
        if (!header) {
            if (tok.size() != 2 || tok[0] != "GCGRAPH") p.fail("missing 'GCGRAPH 1' header");
            if (p.integer(tok[1]) != 1) p.fail("unsupported format version " + std::string(tok[1]));
            header = true;
            continue;
        }
        if (tok[0] == "LATTICE") {
            if (tok.size() != 10) p.fail("LATTICE needs 9 numbers");
            if (lattice) p.fail("duplicate LATTICE line");
            Lattice l;
            for (int k = 0; k < 3; ++k)
                l.basis[k] = Vec3(p.real(tok[1 + 3 * k]), p.real(tok[2 + 3 * k]), p.real(tok[3 + 3 * k]));
            lattice = l;
        } else if (tok[0] == "VERT") {
            if (tok.size() != 5 && tok.size() != 6) p.fail("VERT needs an id, 3 coordinates and an optional boundary flag");
            const long long id = p.integer(tok[1]);
            if (!ids.emplace(id, static_cast<VertexId>(pos.size())).second) p.fail("duplicate vertex id " + std::to_string(id));
            pos.emplace_back(p.real(tok[2]), p.real(tok[3]), p.real(tok[4]));
            char b = 0;
            if (tok.size() == 6) {
                if (tok[5] == "b" || tok[5] == "1") b = 1;
                else if (tok[5] != "0") p.fail("boundary flag must be b, 1 or 0");
            }
            boundary.push_back(b);
        } else if (tok[0] == "EDGE") {
            if (tok.size() != 3 && tok.size() != 6) p.fail("EDGE needs two ids and an optional offset triple");
            RawEdge e{p.integer(tok[1]), p.integer(tok[2]), IVec3::Zero(), tok.size() == 6, lineno};
            if (e.has_offset)
                e.offset = IVec3(static_cast<int>(p.integer(tok[3])), static_cast<int>(p.integer(tok[4])),
                                 static_cast<int>(p.integer(tok[5])));
            raw_edges.push_back(e);
        } else if (tok[0] == "FACE") {
            if (tok.size() < 4) p.fail("FACE needs at least 3 vertex ids");
            std::vector<long long> c;
            for (std::size_t i = 1; i < tok.size(); ++i) c.push_back(p.integer(tok[i]));
            raw_faces.emplace_back(std::move(c), lineno);
        } else {
            p.fail("unknown record '" + std::string(tok[0]) + "'");
        }
    }
    if (!header) throw ParseError(name, lineno, "empty file");

    auto resolve = [&](long long id, std::size_t at) {
        const auto it = ids.find(id);
        if (it == ids.end()) throw ParseError(name, at, "unknown vertex id " + std::to_string(id));
        return it->second;
    };
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<IVec3> offsets;
    for (const RawEdge& e : raw_edges) {
        VertexId a = resolve(e.u, e.line), b = resolve(e.v, e.line);
        IVec3 o = e.offset;
        if (e.has_offset && !lattice) throw ParseError(name, e.line, "edge offset without a LATTICE line");
        if (a > b) {
            std::swap(a, b);
            o = -o;
        }
        edges.emplace_back(a, b);
        offsets.push_back(o);
    }
    std::vector<std::vector<VertexId>> faces;
    for (const auto& [c, at] : raw_faces) {
        std::vector<VertexId> f;
        for (long long id : c) f.push_back(resolve(id, at));
        faces.push_back(std::move(f));
    }

    std::shared_ptr<const SurfaceGraph> graph;
    try {
        graph = std::make_shared<const SurfaceGraph>(SurfaceGraph::build(pos.size(), edges, faces, boundary));
    } catch (const StructuralError& e) {
        throw ParseError(name, lineno, e.what());
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto fe = graph->face_edges(static_cast<FaceId>(i));
        for (std::size_t k = 0; k < fe.size(); ++k)
            if (fe[k] == kInvalidId)
                throw ParseError(name, raw_faces[i].second,
                                 "face references missing edge " + std::to_string(raw_faces[i].first[k]) + "-" +
                                     std::to_string(raw_faces[i].first[(k + 1) % fe.size()]));
    }
    try {
        out.embedding = lattice ? Embedding(graph, std::move(pos), lattice, std::move(offsets))
                                : Embedding(graph, std::move(pos));
    } catch (const DomainError& e) {
        throw ParseError(name, lineno, e.what());
    }
    return out;
}

GraphFile load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_graph(in, path.string());
}

void write_graph(std::ostream& out, const Embedding& emb, std::span<const std::string> comments) {
    const SurfaceGraph& g = emb.graph();
    out << "GCGRAPH 1\n";
    for (const std::string& c : comments) out << "# " << c << '\n';
    if (emb.lattice()) {
        out << "LATTICE";
        for (const Vec3& b : emb.lattice()->basis) out << ' ' << fmt(b.x()) << ' ' << fmt(b.y()) << ' ' << fmt(b.z());
        out << '\n';
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Vec3& p = emb.position(v);
        out << "VERT " << v << ' ' << fmt(p.x()) << ' ' << fmt(p.y()) << ' ' << fmt(p.z());
        if (g.is_boundary(v)) out << " b";
        out << '\n';
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "EDGE " << g.edge(e).u << ' ' << g.edge(e).v;
        if (emb.lattice()) {
            const IVec3& o = emb.edge_offsets()[e];
            out << ' ' << o.x() << ' ' << o.y() << ' ' << o.z();
        }
        out << '\n';
    }
    for (FaceId f = 0; f < g.face_count(); ++f) {
        out << "FACE";
        for (VertexId v : g.face(f)) out << ' ' << v;
        out << '\n';
    }
}

void save_graph(const std::filesystem::path& path, const Embedding& emb, std::span<const std::string> comments) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_graph(out, emb, comments);
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

void export_obj(const std::filesystem::path& path, const Embedding& emb) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    const SurfaceGraph& g = emb.graph();
    for (const Vec3& p : emb.positions()) out << "v " << fmt(p.x()) << ' ' << fmt(p.y()) << ' ' << fmt(p.z()) << '\n';
    for (FaceId f = 0; f < g.face_count(); ++f) {
        out << 'f';
        for (VertexId v : g.face(f)) out << ' ' << v + 1;
        out << '\n';
    }
    for (const Edge& e : g.edges()) out << "l " << e.u + 1 << ' ' << e.v + 1 << '\n';
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

void export_metrics_csv(const std::filesystem::path& path, const SubdivisionRun& run,
                        std::span<const CurvatureSummary> summaries) {
    std::vector<CurvatureSummary> computed;
    if (summaries.empty()) {
        for (const Embedding& level : run.levels) computed.push_back(curvature_report(level).summary);
        summaries = computed;
    }
    if (summaries.size() != run.levels.size()) throw DomainError("one curvature summary per level expected");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "step,vertex_count,energy,hausdorff,K_min,K_max,H_min_abs,H_max_abs\n";
    for (std::size_t i = 0; i < run.levels.size(); ++i) {
        const CurvatureSummary& s = summaries[i];
        out << i << ',' << run.levels[i].graph().vertex_count() << ',' << fmt(dirichlet_energy(run.levels[i])) << ',';
        if (i > 0) out << fmt(run.steps[i - 1].hausdorff_to_parent);
        if (s.defined > 0)
            out << ',' << fmt(s.gauss_min) << ',' << fmt(s.gauss_max) << ',' << fmt(s.mean_abs_min) << ','
                << fmt(s.mean_abs_max);
        else
            out << ",,,,";
        out << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

std::vector<std::string> fixture_ids() { return {"mackay-p", "mackay-cell", "k4-chunk", "k4-leaf-a", "k4-leaf-b"}; }

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("GCSUB_FIXTURE_DIR"); env && *env) return env;
    return GCSUB_FIXTURE_DIR;
}

std::filesystem::path fixture_path(const std::string& id) {
    const auto ids = fixture_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw DomainError("unknown fixture '" + id + "'");
    return fixture_dir() / (id + ".graph");
}

GraphFile load_fixture(const std::string& id) { return load_graph(fixture_path(id)); }

std::uint64_t file_checksum(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

}  // namespace gcsub
