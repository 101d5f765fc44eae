#include "gcsub/dirichlet_flow.hpp"

#include <cmath>
#include <numbers>

namespace gcsub {

std::vector<double> gc_eigenvalues(std::size_t n) {
    if (n < 3) throw DomainError("face size must be at least 3, got " + std::to_string(n));
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
        out[k] = 1.0 / (1.0 + 4.0 * s * s);
    }
    return out;
}

double lambda1(std::size_t n) {
    if (n < 3) throw DomainError("face size must be at least 3, got " + std::to_string(n));
    const double s = std::sin(std::numbers::pi / static_cast<double>(n));
    return 1.0 / (1.0 + 4.0 * s * s);
}

// Cyclic tridiagonal solve with sub/super diagonal -1 and diagonal 3, via the
// Sherman-Morrison correction of a plain Thomas sweep. The correction vector
// z depends only on n; it is solved alongside x with a scalar right-hand side.
void solve_face(std::span<const Vec3> rhs, std::span<Vec3> out) {
    const std::size_t n = rhs.size();
    if (n < 3) throw DomainError("face size must be at least 3, got " + std::to_string(n));
    constexpr double off = -1.0;
    constexpr double diag = 3.0;
    const double gamma = -diag;
    const double alpha = off;  // A[n-1][0]
    const double beta = off;   // A[0][n-1]

    // Thomas sweep on the modified tridiagonal matrix, storing c' in a small buffer.
    thread_local std::vector<double> cprime;
    thread_local std::vector<double> zbuf;
    cprime.resize(n);
    zbuf.resize(n);

    auto b_at = [&](std::size_t i) {
        if (i == 0) return diag - gamma;
        if (i == n - 1) return diag - alpha * beta / gamma;
        return diag;
    };

    // Forward sweep.
    double denom = b_at(0);
    cprime[0] = off / denom;
    out[0] = rhs[0] / denom;
    zbuf[0] = gamma / denom;
    for (std::size_t i = 1; i < n; ++i) {
        denom = b_at(i) - off * cprime[i - 1];
        cprime[i] = off / denom;
        out[i] = (rhs[i] - off * out[i - 1]) / denom;
        const double ui = (i == n - 1) ? alpha : 0.0;
        zbuf[i] = (ui - off * zbuf[i - 1]) / denom;
    }
    // Back substitution.
    for (std::size_t i = n - 1; i-- > 0;) {
        out[i] -= cprime[i] * out[i + 1];
        zbuf[i] -= cprime[i] * zbuf[i + 1];
    }
    const double scale = 1.0 + zbuf[0] + beta * zbuf[n - 1] / gamma;
    const Vec3 fact = (out[0] + beta * out[n - 1] / gamma) / scale;
    for (std::size_t i = 0; i < n; ++i) out[i] -= zbuf[i] * fact;
}

std::vector<Vec3> solve_face(const FaceSystem& system) {
    std::vector<Vec3> out(system.size());
    solve_face(system.rhs, out);
    return out;
}

double polygon_energy(std::span<const Vec3> circuit) {
    const std::size_t n = circuit.size();
    double e = 0;
    for (std::size_t i = 0; i < n; ++i) e += (circuit[(i + 1) % n] - circuit[i]).squaredNorm();
    return e;
}

double face_system_energy(std::span<const Vec3> circuit, std::span<const Vec3> inner) {
    double e = polygon_energy(inner);
    for (std::size_t i = 0; i < circuit.size(); ++i) e += (inner[i] - circuit[i]).squaredNorm();
    return e;
}

}  // namespace gcsub
