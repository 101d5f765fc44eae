#pragma once

#include "gcsub/embedding.hpp"
#include "gcsub/gc_subdivision.hpp"

#include <span>
#include <string>
#include <vector>

namespace gcsub {

// Spectrum of A(n) = (3I - T - T^t)^{-1}: lambda_k(n) = 1 / (1 + 4 sin^2(k pi / n)),
// k = 0..n-1. Throws DomainError for n < 3.
std::vector<double> gc_eigenvalues(std::size_t n);

// Second largest eigenvalue lambda_1(n); the per-step contraction of an n-gon.
double lambda1(std::size_t n);

// Boundary data of one face: its circuit positions in circuit order.
struct FaceSystem {
    std::vector<Vec3> rhs;

    std::size_t size() const noexcept { return rhs.size(); }
};

// Solves the cyclic tridiagonal system -q[i-1] + 3 q[i] - q[i+1] = rhs[i]
// coordinatewise in O(n). The result is the inner polygon minimizing the
// face-local Dirichlet energy with the circuit held fixed.
void solve_face(std::span<const Vec3> rhs, std::span<Vec3> out);
std::vector<Vec3> solve_face(const FaceSystem& system);

// Energy of the closed polygon: sum of squared consecutive distances.
double polygon_energy(std::span<const Vec3> circuit);

// Energy of the face system: spokes from the circuit to the inner polygon plus the inner ring.
double face_system_energy(std::span<const Vec3> circuit, std::span<const Vec3> inner);

enum class StepMode {
    original,  // parent vertices keep their positions
    modified,  // parent vertices move to the barycenter of their three children
};

const char* to_string(StepMode mode);
StepMode parse_step_mode(const std::string& text);

struct StepMetrics {
    double energy_before = 0;
    double energy_tilde = 0;   // after the face solves, before projection
    double energy_after = 0;
    double hausdorff_to_parent = 0;
    double hausdorff_error_bound = 0;
    std::vector<double> per_face_contraction;  // E(face system) / E(parent face), per parent face
    double max_lambda1 = 0;
};

struct StepOptions {
    StepMode mode = StepMode::modified;
    std::size_t sampling = 8;  // points per edge for the Hausdorff estimate; 0 skips it
    Exec exec = Exec::parallel;
};

struct StepResult {
    Embedding embedding;
    Provenance provenance;
    StepMetrics metrics;
};

// One GC-subdivision step: topological refinement, per-face Dirichlet
// placement of the inner vertices, then (modified mode) projection of every
// interior parent vertex onto the barycenter of its three children. Boundary
// vertices never move.
StepResult subdivide_step(const Embedding& embedding, const StepOptions& options = {});

struct RunOptions {
    StepOptions step;
    std::size_t vertex_cap = 5'000'000;
};

struct SubdivisionRun {
    StepMode mode = StepMode::modified;
    std::vector<Embedding> levels;       // M_0 .. M_steps
    std::vector<Provenance> provenance;  // provenance[i] maps level i+1 back to level i
    std::vector<StepMetrics> steps;      // steps[i] describes M_i -> M_{i+1}
};

// Upper bound on the vertex count after `steps` subdivisions.
std::size_t predicted_vertex_count(const SurfaceGraph& graph, std::size_t steps);

// Throws ResourceCapError before doing any work when the predicted vertex
// count exceeds options.vertex_cap.
SubdivisionRun iterate(const Embedding& m0, std::size_t steps, const RunOptions& options = {});

}  // namespace gcsub
