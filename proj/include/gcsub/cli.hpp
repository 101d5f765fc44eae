#pragma once

#include "gcsub/dirichlet_flow.hpp"
#include "gcsub/generators_io.hpp"

#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gcsub::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 2,
    kResourceCap = 3,
    kIo = 4,
};

// Maps a caught exception onto the process exit code.
int exit_code_for(const std::exception& e) noexcept;

// Input spec: c60[:radius], hexpatch[:rings], fixture:<id>, or a graph file path.
GraphFile resolve_input(const std::string& spec);

// Embedding of a leaf's subgraph, taking positions (and lattice offsets) from the parent.
Embedding leaf_embedding(const Embedding& parent, const Leaf& leaf);

struct GenerateConfig {
    std::string name;  // c60 | hexpatch | fixture:<id>
    double radius = 1.0;
    std::size_t rings = 2;
    double edge_length = 1.0;
    std::filesystem::path out;  // stdout when empty
};
void cmd_generate(const GenerateConfig& config, std::ostream& out);

struct RunConfig {
    std::string input;
    std::size_t steps = 3;
    StepMode mode = StepMode::modified;
    std::size_t vertex_cap = 5'000'000;
    std::size_t sampling = 8;
    std::filesystem::path out = "run";
    std::optional<FaceId> leaf;
    std::vector<FaceId> petals;
    // Graph files of levels above this vertex count are elided; metrics are kept.
    std::size_t save_limit = 2'000'000;
    bool obj = false;
};

// Writes step_<i>.graph for every level, metrics.csv and (optionally)
// step_<i>.obj into config.out, and prints the summary table.
void cmd_subdivide(const RunConfig& config, std::ostream& out);

struct CurvatureConfig {
    std::string input;
    std::filesystem::path csv;  // per-vertex table; skipped when empty
    bool per_vertex = false;    // print per-vertex rows to stdout
};
void cmd_curvature(const CurvatureConfig& config, std::ostream& out);

// Full command line driver. Returns the exit code.
int run(int argc, char** argv);

}  // namespace gcsub::cli
