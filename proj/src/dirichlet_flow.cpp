#include "gcsub/dirichlet_flow.hpp"

#include "gcsub/geometry_metrics.hpp"
#include "gcsub/kernels.hpp"

#include <algorithm>
#include <limits>

namespace gcsub {

const char* to_string(StepMode mode) { return mode == StepMode::original ? "original" : "modified"; }

StepMode parse_step_mode(const std::string& text) {
    if (text == "original") return StepMode::original;
    if (text == "modified") return StepMode::modified;
    throw DomainError("unknown mode '" + text + "' (expected original or modified)");
}

namespace {

// Lattice offsets of the child edges. A spoke leaves parent vertex c_i, which
// sits at shift s_i in the unrolled frame of its face, towards an inner vertex
// stored in that frame, so its offset is -s_i; inner ring edges stay in the frame.
std::vector<IVec3> child_offsets(const Embedding& parent, const SurfaceGraph& cg, const Provenance& prov) {
    const SurfaceGraph& pg = parent.graph();
    std::vector<IVec3> offsets(cg.edge_count(), IVec3::Zero());
    std::vector<Vec3> scratch;
    std::vector<IVec3> shifts;
    for (FaceId f = 0; f < pg.face_count(); ++f) {
        parent.unrolled_face(f, scratch, &shifts);
        const auto c = pg.face(f);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const VertexId a = prov.child_vertex[c[i]];
            const VertexId b = prov.inner_vertex_of(f, i);
            const EdgeId e = cg.find_edge(a, b);
            // Survivors precede inner vertices, so the edge is stored as (a, b).
            offsets[e] = -shifts[i];
        }
    }
    return offsets;
}

}  // namespace

StepResult subdivide_step(const Embedding& embedding, const StepOptions& options) {
    const SurfaceGraph& pg = embedding.graph();
    Subdivided sub = gc_subdivide(pg);
    const Provenance& prov = sub.provenance;
    const std::size_t child_nv = sub.graph.vertex_count();

    std::vector<Vec3> positions(child_nv, Vec3::Zero());
    for (VertexId v = 0; v < pg.vertex_count(); ++v)
        if (prov.child_vertex[v] != kInvalidId) positions[prov.child_vertex[v]] = embedding.position(v);

    StepMetrics metrics;
    metrics.per_face_contraction.assign(pg.face_count(), 0.0);
    if (options.exec == Exec::parallel)
        kernels::place_inner_omp(embedding, prov, positions, metrics.per_face_contraction);
    else
        kernels::place_inner_serial(embedding, prov, positions, metrics.per_face_contraction);

    auto graph = std::make_shared<const SurfaceGraph>(std::move(sub.graph));
    std::optional<Lattice> lattice = embedding.lattice();
    std::vector<IVec3> offsets;
    if (lattice) offsets = child_offsets(embedding, *graph, prov);

    Embedding tilde(graph, positions, lattice, offsets);
    metrics.energy_before = dirichlet_energy(embedding);
    metrics.energy_tilde = dirichlet_energy(tilde);
    for (FaceId f = 0; f < pg.face_count(); ++f)
        metrics.max_lambda1 = std::max(metrics.max_lambda1, lambda1(pg.face_size(f)));

    if (options.mode == StepMode::modified) {
        // Barrier: every face solve is complete before any parent vertex moves.
        if (options.exec == Exec::parallel)
            kernels::project_omp(tilde, pg, prov, positions);
        else
            kernels::project_serial(tilde, pg, prov, positions);
    }

    StepResult result{Embedding(graph, std::move(positions), std::move(lattice), std::move(offsets)),
                      std::move(sub.provenance), std::move(metrics)};
    result.metrics.energy_after = dirichlet_energy(result.embedding);
    if (options.sampling >= 2) {
        const HausdorffResult h = hausdorff_distance(embedding, result.embedding, options.sampling, options.exec);
        result.metrics.hausdorff_to_parent = h.distance;
        result.metrics.hausdorff_error_bound = h.error_bound;
    }
    return result;
}

std::size_t predicted_vertex_count(const SurfaceGraph& graph, std::size_t steps) {
    std::size_t count = graph.vertex_count();
    if (steps == 0) return count;
    std::size_t on_faces = 0;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) on_faces += graph.vertex_faces(v).empty() ? 0 : 1;
    std::size_t corners = 0;
    for (FaceId f = 0; f < graph.face_count(); ++f) corners += graph.face_size(f);
    count = on_faces + corners;
    // Each later step at most quadruples: a trivalent graph has at most 3|V| face corners.
    for (std::size_t s = 1; s < steps; ++s) {
        if (count > std::numeric_limits<std::size_t>::max() / 4) return std::numeric_limits<std::size_t>::max();
        count *= 4;
    }
    return count;
}

SubdivisionRun iterate(const Embedding& m0, std::size_t steps, const RunOptions& options) {
    const std::size_t predicted = predicted_vertex_count(m0.graph(), steps);
    if (predicted > options.vertex_cap)
        throw ResourceCapError(std::to_string(steps) + " steps would need up to " + std::to_string(predicted) +
                               " vertices, above the cap of " + std::to_string(options.vertex_cap));
    SubdivisionRun run;
    run.mode = options.step.mode;
    run.levels.reserve(steps + 1);
    run.levels.push_back(m0);
    for (std::size_t i = 0; i < steps; ++i) {
        StepResult r = subdivide_step(run.levels.back(), options.step);
        run.levels.push_back(std::move(r.embedding));
        run.provenance.push_back(std::move(r.provenance));
        run.steps.push_back(std::move(r.metrics));
    }
    return run;
}

}  // namespace gcsub
