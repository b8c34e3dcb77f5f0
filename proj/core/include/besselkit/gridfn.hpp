#pragma once

// Sampled test functions on graded meshes, the canonical C^1 cutoff, and
// twice-differentiable closed-form test functions used by the form and
// Green-identity quadratures.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "besselkit/types.hpp"

namespace besselkit {

// ---------------------------------------------------------------------------
// canonical cutoff: xi = 1 on [0,1/2], 0 on [3/4,inf), cubic blend between
// ---------------------------------------------------------------------------

double cutoff_xi(double x);
double cutoff_xi_d1(double x);
double cutoff_xi_d2(double x);  // piecewise; jumps at the knots 1/2, 3/4

inline constexpr double kCutoffKnotA = 0.5;
inline constexpr double kCutoffKnotB = 0.75;

// ---------------------------------------------------------------------------
// real-valued function with one derivative (forms, Hardy checks)
// ---------------------------------------------------------------------------

struct RealC1Fn {
    std::function<double(double)> f;
    std::function<double(double)> df;
    double support_end = 1.0;  // integrals run over (0, support_end]
    std::string label;
};

// ---------------------------------------------------------------------------
// complex-valued function with two derivatives (Green identity, tau f)
// ---------------------------------------------------------------------------

struct C2Fn {
    // x -> (f, f', f'')
    std::function<std::array<cxd, 3>(double)> eval;
    double support_end = 1.0;
    std::string label;
    std::vector<double> knots;  // points where smoothness drops (quadrature seams)
};

/// x^p xi(x), with optional log factor; derivatives are analytic.
C2Fn singular_span_fn(double p, bool with_log = false);

/// Piecewise-smooth bump ((x-a)(b-x))^3 / normalization on [a,b], zero outside.
C2Fn bump_fn(double a, double b);

/// x^2 (c-x)^2 on [0,c], zero beyond: an H-type tail with f(0) = f'(0) = 0.
C2Fn tail_fn(double c);

// ---------------------------------------------------------------------------
// grid function
// ---------------------------------------------------------------------------

/// A sampled function on strictly increasing nodes in (0, X]; values plus
/// optional derivative values. Evaluation between nodes is cubic Hermite
/// (derivatives estimated by 3-point parabolic fits when absent); below the
/// first node the first cell's polynomial is extended.
class GridFunction {
  public:
    GridFunction(std::vector<double> nodes, std::vector<double> values,
                 std::vector<double> derivatives = {}, double grading = 3.0);

    /// Graded mesh sampling of a closed form on (0, X].
    static GridFunction sample(const std::function<double(double)>& f,
                               const std::function<double(double)>& df, double X, int n,
                               double grading = 3.0);

    double operator()(double x) const;
    double derivative(double x) const;

    const std::vector<double>& nodes() const { return nodes_; }
    double support_end() const { return nodes_.back(); }
    double grading() const { return grading_; }

    RealC1Fn as_c1(std::string label = "grid") const;

  private:
    std::size_t cell_of(double x) const;
    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> derivs_;
    double grading_;
};

}  // namespace besselkit
