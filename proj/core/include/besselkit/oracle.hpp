#pragma once

// Independent verification machinery: graded-panel Gauss quadrature with a
// divergence audit, singular-ODE shooting with series-matched initial data,
// and truncated-interval finite differences. These are the brute-force
// oracles the closed-form results are cross-checked against.

#include <functional>
#include <vector>

#include "besselkit/types.hpp"

namespace besselkit::oracle {

// ---------------------------------------------------------------------------
// quadrature
// ---------------------------------------------------------------------------

struct QuadOptions {
    double tol = 1e-11;
    double grading = 3.0;    // mesh x_j = a + (b-a) (j/n)^grading toward the left end
    int initial_panels = 16;
    int max_doublings = 12;
    bool audit_divergence = true;
};

/// Integral over [a, b] of a function with (at worst) an integrable algebraic
/// or logarithmic singularity at the left endpoint a. Composite Gauss panels
/// on the graded mesh, panel-doubling until successive values agree below tol.
/// Throws DivergentIntegralError when the dyadic partial sums near the left
/// endpoint keep growing (> 1% per dyad over 6 dyads).
double quad(const std::function<double(double)>& f, double a, double b,
            const QuadOptions& opts = {});

/// Same machinery for complex-valued integrands.
cxd quad_complex(const std::function<cxd(double)>& f, double a, double b,
                 const QuadOptions& opts = {});

/// Plain adaptive Gauss on [a, b] for smooth integrands (no grading).
double quad_smooth(const std::function<double(double)>& f, double a, double b,
                   double tol = 1e-12);

/// Integral over (0, S] taken as the eps -> 0 limit of dyadic blocks
/// [S 2^{-k-1}, S 2^{-k}] with a geometric tail correction; the blocks are
/// also the divergence audit (growth > 1% per dyad over 6 dyads throws).
/// Handles integrands as singular as x^{-1+delta} and log powers.
cxd quad_to_zero(const std::function<cxd(double)>& f, double S, double tol = 1e-11);
double quad_to_zero_real(const std::function<double(double)>& f, double S, double tol = 1e-11);

// ---------------------------------------------------------------------------
// numerical differentiation
// ---------------------------------------------------------------------------

/// Central second difference with step scaled to the argument.
cxd second_derivative(const std::function<cxd(double)>& f, double x, double h = 0.0);

// ---------------------------------------------------------------------------
// shooting for -y'' + ((nu^2 - 1/4)/x^2) y = lambda y
// ---------------------------------------------------------------------------

/// Initial data at the matching point is the two-term Frobenius expansion of
/// c1 x^{1/2+nu} + c2 x^{1/2-nu} (log case: c1 x^{1/2} + c2 x^{1/2} log x).
struct ShootingSpec {
    Order order{0.5};
    double b = 1.0;
    double lambda = 0.0;
    double c1 = 1.0;
    double c2 = 0.0;
    double x0 = 0.0;          // 0 = auto (1e-4 b, shrunk for large |lambda|)
    double tol = 1e-12;

    double matching_point() const {
        if (x0 > 0.0) return x0;
        // keep the omitted Frobenius term lambda^2 x0^4 / (32 (1-nu)) below 1e-11
        double denom = 32.0 * std::max(1.0 - order.nu(), 0.1);
        double cap = std::pow(1e-11 * denom, 0.25) / std::sqrt(std::fabs(lambda) + 1.0);
        return std::min(1e-4 * b, cap);
    }
    /// Frobenius truncation error estimate at the matching point must stay
    /// below 1e-10 relative; throws otherwise.
    void validate() const;
};

struct ShotResult {
    double u = 0.0;
    double du = 0.0;
};

/// Integrates the ODE from the matching point to b; returns (u(b), u'(b)).
ShotResult shoot(const ShootingSpec& spec);

enum class ShootingBoundary { friedrichs, ratio };

struct SpectrumResultOracle {
    std::vector<double> eigenvalues;
    std::vector<double> residuals;  // |u(b; lambda_k)| relative to the shot scale
};

/// Eigenvalues on (0,b) by root-finding u(b; lambda) = 0 in lambda, with the
/// left-end solution selected by the boundary choice: `friedrichs` takes the
/// principal solution (c2 = 0); `ratio` takes (c1, c2) = (2 nu h, 1)
/// (log case: (-h, 1)) so that Gamma_1 = h Gamma_0.
SpectrumResultOracle oracle_eigenvalues(const Order& order, double b, ShootingBoundary boundary,
                                        double h, int count);

// ---------------------------------------------------------------------------
// finite differences (secondary oracle)
// ---------------------------------------------------------------------------

/// Lowest `count` Dirichlet eigenvalues of -d^2/dx^2 + (nu^2-1/4)/x^2 on
/// (delta, b), 3-point self-adjoint stencil on a mesh graded toward delta,
/// symmetric tridiagonal eigenvalues by Sturm bisection.
std::vector<double> fd_eigenvalues(const Order& order, double delta, double b, int n, int count);

/// Largest eigenvalue of the symmetric tridiagonal (d, e) by Sturm bisection.
double tridiag_max_eigenvalue(const std::vector<double>& d, const std::vector<double>& e);

}  // namespace besselkit::oracle
