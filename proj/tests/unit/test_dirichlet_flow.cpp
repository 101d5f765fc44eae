#include "gcsub/dirichlet_flow.hpp"
#include "gcsub/generators_io.hpp"
#include "gcsub/geometry_metrics.hpp"
#include "support.hpp"

#include <doctest.h>

#include <Eigen/Geometry>

#include <numbers>

using namespace gcsub;

namespace {

std::vector<Vec3> regular_polygon(std::size_t n, double r) {
    std::vector<Vec3> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        p[i] = Vec3(r * std::cos(t), r * std::sin(t), 0);
    }
    return p;
}

double max_gap(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, (a[i] - b[i]).norm());
    return m;
}

}  // namespace

TEST_CASE("spectrum matches a dense eigen-decomposition") {
    for (std::size_t n = 3; n <= 12; ++n) {
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(testing::dense_a(n));
        std::vector<double> dense(es.eigenvalues().data(), es.eigenvalues().data() + n);
        std::vector<double> ours = gc_eigenvalues(n);
        std::sort(dense.begin(), dense.end());
        std::sort(ours.begin(), ours.end());
        for (std::size_t k = 0; k < n; ++k) CHECK(ours[k] == doctest::Approx(dense[k]).epsilon(1e-12));
        // Largest is 1 (constants), next is lambda1.
        CHECK(dense[n - 1] == doctest::Approx(1.0));
        CHECK(lambda1(n) == doctest::Approx(dense[n - 2]).epsilon(1e-12));
    }
    CHECK(lambda1(5) == doctest::Approx(1.0 / (1.0 + 4.0 * std::pow(std::sin(std::numbers::pi / 5), 2))));
    CHECK(lambda1(6) == doctest::Approx(0.5));
    CHECK(lambda1(4) == doctest::Approx(1.0 / 3.0));
    CHECK(lambda1(3) == doctest::Approx(0.25));
    CHECK_THROWS_AS(gc_eigenvalues(2), DomainError);
}

TEST_CASE("face solve agrees with a dense solve") {
    std::mt19937_64 rng(7);
    for (std::size_t n = 3; n <= 40; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto rhs = testing::random_face(rng, n);
            const auto dense = testing::dense_solve(rhs);
            const auto fast = solve_face(FaceSystem{rhs});
            CHECK(max_gap(fast, dense) < 1e-12);
        }
    }
}

TEST_CASE("regular polygons shrink by lambda1") {
    const auto hex = regular_polygon(6, 2.0);
    const auto inner = solve_face(FaceSystem{hex});
    for (std::size_t i = 0; i < 6; ++i) CHECK((inner[i] - 0.5 * hex[i]).norm() < 1e-14);

    const auto sq = regular_polygon(4, 1.0);
    const auto in4 = solve_face(FaceSystem{sq});
    for (std::size_t i = 0; i < 4; ++i) CHECK((in4[i] - sq[i] / 3.0).norm() < 1e-14);

    for (std::size_t n : {5u, 7u, 9u}) {
        const auto p = regular_polygon(n, 1.0);
        const auto q = solve_face(FaceSystem{p});
        for (std::size_t i = 0; i < n; ++i) CHECK((q[i] - lambda1(n) * p[i]).norm() < 1e-13);
    }
}

TEST_CASE("constants are fixed and barycenters preserved") {
    const std::vector<Vec3> c(7, Vec3(1.5, -2, 0.25));
    for (const Vec3& q : solve_face(FaceSystem{c})) CHECK((q - c[0]).norm() < 1e-14);

    std::mt19937_64 rng(11);
    for (std::size_t n = 3; n <= 20; ++n) {
        const auto p = testing::random_face(rng, n);
        CHECK((testing::mean(solve_face(FaceSystem{p})) - testing::mean(p)).norm() < 1e-13);
    }
}

TEST_CASE("contraction bounds on random faces") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 3; n <= 16; ++n) {
        const double l1 = lambda1(n);
        for (int rep = 0; rep < 20; ++rep) {
            const auto p = testing::random_face(rng, n);
            const auto q = solve_face(FaceSystem{p});
            const double e = testing::ring_energy(p);
            CHECK(polygon_energy(p) == doctest::Approx(e).epsilon(1e-13));
            CHECK(testing::ring_energy(q) <= l1 * l1 * e * (1 + 1e-12));
            const double tilde = testing::spoke_energy(p, q) + testing::ring_energy(q);
            CHECK(face_system_energy(p, q) == doctest::Approx(tilde).epsilon(1e-13));
            CHECK(tilde <= l1 * e * (1 + 1e-12));
        }
    }
}

TEST_CASE("face solve commutes with similarities") {
    std::mt19937_64 rng(5);
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(0.7, Vec3(1, 2, 3).normalized()).toRotationMatrix();
    const Vec3 shift(3, -1, 2);
    const double s = 2.5;
    for (std::size_t n = 3; n <= 10; ++n) {
        const auto p = testing::random_face(rng, n);
        std::vector<Vec3> moved(n);
        for (std::size_t i = 0; i < n; ++i) moved[i] = s * rot * p[i] + shift;
        const auto q = solve_face(FaceSystem{p});
        const auto qm = solve_face(FaceSystem{moved});
        for (std::size_t i = 0; i < n; ++i) CHECK((qm[i] - (s * rot * q[i] + shift)).norm() < 1e-12);
        // Cyclic relabeling.
        std::vector<Vec3> rolled(p.begin() + 1, p.end());
        rolled.push_back(p[0]);
        const auto qr = solve_face(FaceSystem{rolled});
        for (std::size_t i = 0; i < n; ++i) CHECK((qr[i] - q[(i + 1) % n]).norm() < 1e-13);
    }
}

TEST_CASE("modified step moves parents to the mean of their children") {
    const Embedding c60 = generate_c60(1.0);
    const StepResult r = subdivide_step(c60, {StepMode::modified, 0, Exec::serial});
    const SurfaceGraph& g = r.embedding.graph();
    for (VertexId v = 0; v < c60.graph().vertex_count(); ++v) {
        Vec3 m = Vec3::Zero();
        for (VertexId w : g.neighbors(v)) {
            CHECK(r.provenance.is_inner(w));
            m += r.embedding.position(w);
        }
        CHECK((r.embedding.position(v) - m / 3.0).norm() < 1e-14);
        CHECK(balancing_residual(r.embedding, v) < 1e-13);
    }
    CHECK(r.metrics.energy_after <= r.metrics.energy_tilde + 1e-12);
}

TEST_CASE("original step keeps parent positions and places inner rings by the face solve") {
    const Embedding c60 = generate_c60(1.0);
    const StepResult r = subdivide_step(c60, {StepMode::original, 0, Exec::serial});
    const SurfaceGraph& pg = c60.graph();
    for (VertexId v = 0; v < pg.vertex_count(); ++v) CHECK(r.embedding.position(v) == c60.position(v));
    for (FaceId f = 0; f < pg.face_count(); ++f) {
        std::vector<Vec3> circuit;
        for (VertexId v : pg.face(f)) circuit.push_back(c60.position(v));
        const auto dense = testing::dense_solve(circuit);
        for (std::size_t i = 0; i < circuit.size(); ++i)
            CHECK((r.embedding.position(r.provenance.inner_vertex_of(f, i)) - dense[i]).norm() < 1e-13);
    }
    CHECK(r.metrics.energy_after == doctest::Approx(r.metrics.energy_tilde));
}

TEST_CASE("per-face contraction stays below lambda1") {
    const Embedding c60 = generate_c60(1.0);
    const StepResult r = subdivide_step(c60, {StepMode::original, 0, Exec::serial});
    const SurfaceGraph& g = c60.graph();
    REQUIRE(r.metrics.per_face_contraction.size() == g.face_count());
    for (FaceId f = 0; f < g.face_count(); ++f)
        CHECK(r.metrics.per_face_contraction[f] <= lambda1(g.face_size(f)) * (1 + 1e-12));
    // Hexagons contract slowest.
    CHECK(r.metrics.max_lambda1 == doctest::Approx(lambda1(6)));
}

TEST_CASE("inner faces shrink at the lambda1 rate on a regular hexagon") {
    const SurfaceGraph g = SurfaceGraph::from_faces(6, {{0, 1, 2, 3, 4, 5}}, std::vector<char>(6, 1));
    const Embedding m0(std::make_shared<const SurfaceGraph>(g), regular_polygon(6, 1.0));
    RunOptions opt;
    opt.step = {StepMode::original, 0, Exec::serial};
    const SubdivisionRun run = iterate(m0, 4, opt);
    double prev = 1.0;
    FaceId face = 0;
    for (std::size_t level = 1; level < run.levels.size(); ++level) {
        face = run.provenance[level - 1].inner_face_of[face];
        const Embedding& e = run.levels[level];
        const auto c = e.graph().face(face);
        const double radius = e.position(c[0]).norm();
        CHECK(radius / prev == doctest::Approx(0.5));
        prev = radius;
    }
}

TEST_CASE("planar input stays planar") {
    const Embedding patch = generate_hex_patch(2);
    RunOptions opt;
    opt.step = {StepMode::modified, 0, Exec::serial};
    const SubdivisionRun run = iterate(patch, 3, opt);
    for (const Vec3& p : run.levels.back().positions()) CHECK(std::abs(p.z()) < 1e-14);
}

TEST_CASE("boundary vertices never move") {
    const Embedding patch = generate_hex_patch(1);
    const StepResult r = subdivide_step(patch, {StepMode::modified, 0, Exec::serial});
    for (VertexId v = 0; v < patch.graph().vertex_count(); ++v)
        if (patch.graph().is_boundary(v)) CHECK(r.embedding.position(r.provenance.child_vertex[v]) == patch.position(v));
}

TEST_CASE("iterate bookkeeping and the vertex cap") {
    const Embedding c60 = generate_c60(1.0);
    const SubdivisionRun zero = iterate(c60, 0);
    CHECK(zero.levels.size() == 1);
    CHECK(zero.steps.empty());
    CHECK(predicted_vertex_count(c60.graph(), 2) == 960);
    RunOptions opt;
    opt.vertex_cap = 900;
    CHECK_THROWS_AS(iterate(c60, 2, opt), ResourceCapError);
    opt.vertex_cap = 960;
    const SubdivisionRun two = iterate(c60, 2, opt);
    CHECK(two.levels.size() == 3);
    CHECK(two.provenance.size() == 2);
    CHECK(two.steps.size() == 2);
    CHECK(two.levels[2].graph().vertex_count() == 960);
}

TEST_CASE("energies do not increase on closed and patch inputs") {
    for (const Embedding& m0 : {generate_c60(1.0), generate_hex_patch(2)}) {
        RunOptions opt;
        opt.step.sampling = 0;
        const SubdivisionRun run = iterate(m0, 3, opt);
        for (const StepMetrics& s : run.steps) {
            CHECK(s.energy_after <= s.energy_before * (1 + 1e-12));
            CHECK(s.energy_after <= s.energy_tilde * (1 + 1e-12));
        }
    }
}

TEST_CASE("mode names") {
    CHECK(parse_step_mode("original") == StepMode::original);
    CHECK(parse_step_mode("modified") == StepMode::modified);
    CHECK(std::string(to_string(StepMode::modified)) == "modified");
    CHECK_THROWS_AS(parse_step_mode("other"), DomainError);
}
