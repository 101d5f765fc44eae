#include "gcsub/cli.hpp"

#include "gcsub/geometry_metrics.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace gcsub::cli {

namespace {

std::string num(double x, const char* f = "%.12g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double parse_real(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("bad " + what + " '" + s + "'");
}

}  // namespace

int exit_code_for(const std::exception& e) noexcept {
    if (dynamic_cast<const ResourceCapError*>(&e)) return kResourceCap;
    if (dynamic_cast<const IoError*>(&e)) return kIo;
    if (dynamic_cast<const std::filesystem::filesystem_error*>(&e)) return kIo;
    return kValidation;
}

GraphFile resolve_input(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "c60") {
        const double r = arg.empty() ? 1.0 : parse_real(arg, "radius");
        return {generate_c60(r), {"c60 radius " + num(r)}};
    }
    if (head == "hexpatch") {
        const double k = arg.empty() ? 2.0 : parse_real(arg, "ring count");
        if (k < 1 || k != std::floor(k)) throw DomainError("bad ring count '" + arg + "'");
        return {generate_hex_patch(static_cast<std::size_t>(k)), {"hexpatch rings " + arg}};
    }
    if (head == "fixture") return load_fixture(arg);
    return load_graph(spec);
}

Embedding leaf_embedding(const Embedding& parent, const Leaf& leaf) {
    const SurfaceGraph& sub = leaf.subgraph;
    std::vector<Vec3> pos;
    pos.reserve(sub.vertex_count());
    for (VertexId v : leaf.vertex_map) pos.push_back(parent.position(v));
    auto graph = std::make_shared<const SurfaceGraph>(sub);
    if (!parent.periodic()) return Embedding(graph, std::move(pos));
    std::vector<IVec3> offsets;
    for (const Edge& e : sub.edges()) {
        const VertexId pu = leaf.vertex_map[e.u];
        const EdgeId pe = parent.graph().find_edge(pu, leaf.vertex_map[e.v]);
        offsets.push_back(parent.offset_from(pu, pe));
    }
    return Embedding(graph, std::move(pos), parent.lattice(), std::move(offsets));
}

void cmd_generate(const GenerateConfig& config, std::ostream& out) {
    GraphFile file;
    if (config.name == "c60") {
        file = {generate_c60(config.radius), {"c60 radius " + num(config.radius)}};
    } else if (config.name == "hexpatch") {
        file = {generate_hex_patch(config.rings, config.edge_length),
                {"hexpatch rings " + std::to_string(config.rings) + " edge " + num(config.edge_length)}};
    } else if (config.name.rfind("fixture:", 0) == 0) {
        const auto src = fixture_path(config.name.substr(8));
        if (config.out.empty()) {
            std::ifstream in(src, std::ios::binary);
            if (!in) throw IoError("cannot open " + src.string());
            out << in.rdbuf();
        } else {
            std::filesystem::copy_file(src, config.out, std::filesystem::copy_options::overwrite_existing);
        }
        return;
    } else {
        throw DomainError("unknown generator '" + config.name + "' (expected c60, hexpatch or fixture:<id>)");
    }
    if (config.out.empty())
        write_graph(out, file.embedding, file.comments);
    else
        save_graph(config.out, file.embedding, file.comments);
}

void cmd_subdivide(const RunConfig& config, std::ostream& out) {
    GraphFile input = resolve_input(config.input);
    Embedding m0 = std::move(input.embedding);
    const ValidationReport report = validate(m0.graph());
    if (config.leaf) {
        const Leaf leaf = extract_leaf(m0.graph(), *config.leaf, config.petals);
        m0 = leaf_embedding(m0, leaf);
        out << "leaf core " << leaf.core_face << " petals";
        for (FaceId p : leaf.petals) out << ' ' << p;
        out << '\n';
    } else if (!report.unbranched()) {
        throw BranchedGraphError("input has " + std::to_string(report.branched_edges.size()) +
                                 " branched edges (first: edge " + std::to_string(report.branched_edges[0].edge) +
                                 " on " + std::to_string(report.branched_edges[0].faces) +
                                 " faces); whole-graph subdivision is refused, pick a leaf with --leaf");
    }
    if (config.vertex_cap < m0.graph().vertex_count())
        throw ResourceCapError("vertex cap " + std::to_string(config.vertex_cap) + " is below the input size " +
                               std::to_string(m0.graph().vertex_count()));

    RunOptions options;
    options.step.mode = config.mode;
    options.step.sampling = config.sampling;
    options.vertex_cap = config.vertex_cap;
    const SubdivisionRun run = iterate(m0, config.steps, options);

    std::filesystem::create_directories(config.out);
    std::vector<CurvatureSummary> summaries;
    for (std::size_t i = 0; i < run.levels.size(); ++i) {
        const Embedding& level = run.levels[i];
        summaries.push_back(curvature_report(level).summary);
        if (level.graph().vertex_count() > config.save_limit) continue;
        const std::string stem = "step_" + std::to_string(i);
        const std::vector<std::string> comments = {
            "level " + std::to_string(i) + " of " + config.input + ", mode " + to_string(config.mode)};
        save_graph(config.out / (stem + ".graph"), level, comments);
        if (config.obj) export_obj(config.out / (stem + ".obj"), level);
    }
    export_metrics_csv(config.out / "metrics.csv", run, summaries);

    const auto bound = energy_bound(run);
    const CauchyConstants cc = cauchy_constants(run.levels.front());
    out << "mode " << to_string(run.mode) << '\n';
    out << "step vertices energy energy_bound hausdorff\n";
    for (std::size_t i = 0; i < run.levels.size(); ++i) {
        out << i << ' ' << run.levels[i].graph().vertex_count() << ' ' << num(dirichlet_energy(run.levels[i])) << ' '
            << num(bound[i]) << ' ' << (i == 0 ? std::string("-") : num(run.steps[i - 1].hausdorff_to_parent)) << '\n';
    }
    out << "lambda1 " << num(cc.lambda1) << " Lambda " << num(cc.big_lambda) << " E " << num(cc.energy_scale) << '\n';
}

void cmd_curvature(const CurvatureConfig& config, std::ostream& out) {
    const GraphFile input = resolve_input(config.input);
    const Embedding& emb = input.embedding;
    validate(emb.graph());
    const CurvatureReport rep = curvature_report(emb);
    const CurvatureSummary& s = rep.summary;

    auto row = [&](std::ostream& o, VertexId v, char sep) {
        const VertexCurvature& c = rep.vertices[v];
        o << v << sep;
        if (c.curvature_defined)
            o << num(c.gauss) << sep << num(c.mean) << sep << num(std::abs(c.mean));
        else
            o << sep << sep;
        o << sep;
        if (c.interior) o << num(c.balancing_residual) << sep << num(c.minimality_residual);
        else o << sep;
        o << '\n';
    };
    if (!config.csv.empty()) {
        std::ofstream f(config.csv);
        if (!f) throw IoError("cannot write " + config.csv.string());
        f << "vertex,K,H,H_abs,balancing,minimality\n";
        for (VertexId v = 0; v < emb.graph().vertex_count(); ++v) row(f, v, ',');
        f.flush();
        if (!f) throw IoError("write failed for " + config.csv.string());
    }
    if (config.per_vertex) {
        out << "vertex K H H_abs balancing minimality\n";
        for (VertexId v = 0; v < emb.graph().vertex_count(); ++v) row(out, v, ' ');
    }
    out << "vertices " << emb.graph().vertex_count() << " defined " << s.defined << '\n';
    out << "K min " << num(s.gauss_min) << " max " << num(s.gauss_max) << '\n';
    out << "|K| min " << num(s.gauss_abs_min) << " max " << num(s.gauss_abs_max) << '\n';
    out << "|H| min " << num(s.mean_abs_min) << " max " << num(s.mean_abs_max) << " median " << num(s.mean_abs_median)
        << '\n';
    out << "balancing median " << num(s.balancing_median) << " max " << num(s.balancing_max) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Goldberg-Coxeter (2,0) subdivision of trivalent discrete surfaces"};
    app.require_subcommand(1);

    GenerateConfig gen;
    auto* g = app.add_subcommand("generate", "Write a graph file for c60, hexpatch or fixture:<id>");
    g->add_option("name", gen.name, "Generator name")->required();
    g->add_option("--radius", gen.radius, "C60 circumradius");
    g->add_option("--rings", gen.rings, "Hex patch ring count");
    g->add_option("--edge-length", gen.edge_length, "Hex patch edge length");
    g->add_option("-o,--out", gen.out, "Output file (stdout when omitted)");

    RunConfig rc;
    std::string mode = "modified";
    FaceId leaf = 0;
    auto* s = app.add_subcommand("subdivide", "Run GC(2,0) subdivision steps and write a run directory");
    s->add_option("input", rc.input, "Graph file, c60[:radius], hexpatch[:rings] or fixture:<id>")->required();
    s->add_option("--steps", rc.steps, "Number of subdivision steps");
    s->add_option("--mode", mode, "original or modified")->check(CLI::IsMember({"original", "modified"}));
    s->add_option("--vertex-cap", rc.vertex_cap, "Refuse runs predicted to exceed this many vertices");
    s->add_option("--sampling", rc.sampling, "Points per edge for Hausdorff distances (0 skips)");
    s->add_option("--out", rc.out, "Run directory");
    auto* leaf_opt = s->add_option("--leaf", leaf, "Subdivide only the leaf around this face");
    s->add_option("--petals", rc.petals, "One petal face per core edge, for branched inputs")->delimiter(',');
    s->add_option("--save-limit", rc.save_limit, "Skip graph files of levels above this vertex count");
    s->add_flag("--obj", rc.obj, "Also export OBJ files");

    CurvatureConfig cc;
    auto* c = app.add_subcommand("curvature", "Per-vertex curvature and residual report");
    c->add_option("input", cc.input, "Graph file, c60[:radius], hexpatch[:rings] or fixture:<id>")->required();
    c->add_option("--csv", cc.csv, "Write per-vertex rows to this CSV file");
    c->add_flag("--per-vertex", cc.per_vertex, "Print per-vertex rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }
    try {
        if (*g) {
            cmd_generate(gen, std::cout);
        } else if (*s) {
            rc.mode = parse_step_mode(mode);
            if (*leaf_opt) rc.leaf = leaf;
            cmd_subdivide(rc, std::cout);
        } else {
            cmd_curvature(cc, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kOk;
}

}  // namespace gcsub::cli
