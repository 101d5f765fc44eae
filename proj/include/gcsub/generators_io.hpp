#pragma once

#include "gcsub/dirichlet_flow.hpp"
#include "gcsub/embedding.hpp"
#include "gcsub/geometry_metrics.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace gcsub {

// Truncated icosahedron on the sphere of the given radius. Faces run
// counterclockwise seen from outside. Throws DomainError for radius <= 0.
Embedding generate_c60(double circumradius = 1.0);

// Common edge length of generate_c60(circumradius).
double c60_edge_length(double circumradius);

// Planar honeycomb in z = 0: every hexagon within `rings` steps of the
// central one. Rim vertices are tagged boundary. Throws DomainError for
// rings < 1 or edge_length <= 0.
Embedding generate_hex_patch(std::size_t rings, double edge_length = 1.0);

// Graph text format, see docs/graph_format.md.
struct GraphFile {
    Embedding embedding;
    std::vector<std::string> comments;  // '#' lines, without the marker
};

// Throws IoError when the file cannot be read and ParseError (with the line
// number) on malformed content, unknown ids, or faces that reference
// missing edges.
GraphFile load_graph(const std::filesystem::path& path);
GraphFile parse_graph(std::istream& in, const std::string& name = "<stream>");

void save_graph(const std::filesystem::path& path, const Embedding& emb,
                std::span<const std::string> comments = {});
void write_graph(std::ostream& out, const Embedding& emb, std::span<const std::string> comments = {});

// ASCII OBJ: one `v` per vertex, one `f` per face (not triangulated) and one
// `l` per edge.
void export_obj(const std::filesystem::path& path, const Embedding& emb);

// One row per level with columns
// step,vertex_count,energy,hausdorff,K_min,K_max,H_min_abs,H_max_abs.
// Curvature summaries are computed when `summaries` is empty.
void export_metrics_csv(const std::filesystem::path& path, const SubdivisionRun& run,
                        std::span<const CurvatureSummary> summaries = {});

// Bundled fixtures. The directory is taken from GCSUB_FIXTURE_DIR when set.
std::vector<std::string> fixture_ids();
std::filesystem::path fixture_dir();
std::filesystem::path fixture_path(const std::string& id);  // throws DomainError for unknown ids
GraphFile load_fixture(const std::string& id);

// 64-bit FNV-1a of a file's bytes.
std::uint64_t file_checksum(const std::filesystem::path& path);

}  // namespace gcsub
