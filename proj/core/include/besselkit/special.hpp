#pragma once

// Complex-argument Bessel functions J, Y and the outgoing combination
// H1 = J + iY on the closed upper half-plane, with the branch convention
// arg z in [0, 2pi) (cut along the positive half-line, boundary values from
// above). Includes the Wronskian bracket [f,g]_x and its extrapolated x -> 0
// limits, which define the regularized boundary data of the singular
// expression -d^2/dx^2 + (nu^2 - 1/4)/x^2.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "besselkit/types.hpp"

namespace besselkit::special {

/// Gamma(x) for real x in (-2, 3) excluding the poles {0, -1, -2}.
/// Lanczos approximation with reflection; relative accuracy ~1e-13.
double gamma_real(double x);

/// z^p on the cut plane: exp(p (ln|z| + i arg z)), arg in [0, 2pi).
/// Continuous from the upper half-plane onto the positive half-line.
cxd cut_power(const CutComplex& z, double p);

/// Square root with the same branch; Im(result) >= 0 everywhere.
cxd cut_sqrt(const CutComplex& z);

/// J_mu(t) for real order |mu| < 2 and complex t with Im t >= 0.
/// Power series (compensated) below |t| = 25, Hankel asymptotics above.
cxd bessel_j(double mu, cxd t);
cxd bessel_j_deriv(double mu, cxd t);

/// Y_mu(t) for mu in (-2, 2): reflection (J_mu cos - J_{-mu})/sin for
/// non-integer mu, dedicated series for mu in {0, +-1}.
cxd bessel_y(double mu, cxd t);
cxd bessel_y_deriv(double mu, cxd t);

/// H1_mu(t) = J_mu(t) + i Y_mu(t), formed before rounding so that the
/// exponentially small combination survives for Im t > 0.
cxd bessel_h1(double mu, cxd t);
cxd bessel_h1_deriv(double mu, cxd t);

/// First `count` positive zeros j_{mu,k} of J_mu, mu in [0, 1.5].
std::vector<double> bessel_j_zeros(double mu, int count);

namespace detail_api {
// Both evaluation paths, exposed for the switchover-agreement tests.
cxd bessel_j_series(double mu, cxd t);
cxd bessel_j_asymptotic(double mu, cxd t);
}  // namespace detail_api

// ---------------------------------------------------------------------------
// Wronskian bracket
// ---------------------------------------------------------------------------

/// A function with one derivative, evaluable pointwise on (0, infinity).
struct C1Fn {
    std::function<std::pair<cxd, cxd>(double)> eval;  // x -> (f(x), f'(x))
    std::string label;

    std::pair<cxd, cxd> operator()(double x) const { return eval(x); }
};

/// x^p, optionally times log(x)
C1Fn power_fn(double p, bool with_log = false);

/// [f,g]_x = f(x) conj(g'(x)) - f'(x) conj(g(x)), x > 0.
cxd bracket(const C1Fn& f, const C1Fn& g, double x);

struct BracketValue {
    cxd value{0.0, 0.0};
    bool converged = false;
    double est_error = kInf;
};

struct BracketLimitOptions {
    double tol = 1e-9;
    double x0 = 1e-2;     // first abscissa of the geometric sequence
    double ratio = 0.5;   // x_{j+1} = ratio * x_j
    int max_terms = 40;
    std::vector<double> exponents;  // error-exponent ladder; default {2,4,6,...}
};

/// Exponent ladder {2-2nu, 2, 2+2nu, 4-2nu, ...} matched to the bracket
/// remainders of the singular basis at this order (log case: {2,2,4,4,...}).
std::vector<double> bracket_exponent_ladder(const Order& order, int depth = 3);

/// Extrapolated limit of [f,g]_x as x -> 0 along a geometric sequence.
/// Throws NonConvergenceError when the extrapolants grow instead of settling.
BracketValue bracket_limit_at_zero(const C1Fn& f, const C1Fn& g,
                                   const BracketLimitOptions& opts = {});

}  // namespace besselkit::special
