#pragma once

// Closed-form Weyl functions of the boundary triplet on (0,b) and the
// half-line, their boundary limits, Fatou spectral densities, and the
// Nevanlinna integral-representation cross-check.

#include <vector>

#include "besselkit/types.hpp"

namespace besselkit::weyl {

/// M_{nu,b}(z); throws PoleError (with the nearest eigenvalue estimate) when
/// J_nu(b sqrt z) (J_0 in the log case) is below the pole threshold.
cxd weyl_finite(const Order& order, double b, const CutComplex& z);

/// M_{nu,inf}(z); throws BranchError for on-cut z without a declared side.
cxd weyl_halfline(const Order& order, const CutComplex& z);

/// Dispatch on the interval.
cxd weyl_function(const Order& order, const IntervalSpec& interval, const CutComplex& z);

struct WeylLimits {
    double m_zero;            // lim_{x->0-} M(-x); +inf possible (log half-line)
    double m_minus_infinity;  // lim_{x->inf} M(-x); always -inf here
};

/// Closed-form boundary limits of M along the negative axis.
WeylLimits weyl_limits(const Order& order, const IntervalSpec& interval);

// ---------------------------------------------------------------------------
// spectral density (half-line)
// ---------------------------------------------------------------------------

struct EpsSchedule {
    double eps0 = 1e-2;
    double ratio = 0.25;
    int count = 7;
    double tol = 1e-8;
};

struct DensitySample {
    double t = 0.0;
    double sigma_prime = 0.0;
    std::vector<double> eps_used;
};

/// Fatou density (1/pi) Im M_{nu,inf}(t + i0), Richardson-extrapolated in eps.
DensitySample spectral_density(const Order& order, double t, const EpsSchedule& sched = {});

/// Closed form t^nu / (2^{2nu+1} Gamma(1+nu)^2) for t > 0 (1/2 in the log case).
double density_closed_form(const Order& order, double t);

// ---------------------------------------------------------------------------
// Nevanlinna representation
// ---------------------------------------------------------------------------

struct NevanlinnaQuad {
    double tol = 1e-9;
    double t_max = 1e4;  // analytic tail beyond this point
};

struct NevanlinnaFit {
    double fitted_constant = 0.0;   // Re[M(z) - integral]
    double quadrature_error = 0.0;  // |Im[M(z) - integral]| plus tail bound
    double paper_constant = 0.0;    // the printed constant, for the report
    double discrepancy = 0.0;       // fitted - printed
};

/// Evaluates M(z) - int_0^inf (1/(t-z) - t/(1+t^2)) dSigma(t) on the
/// half-line and fits the representation constant.
NevanlinnaFit nevanlinna_reconstruct(const Order& order, const CutComplex& z,
                                     const NevanlinnaQuad& quad = {});

/// The printed representation constant: -C_nu cos(nu pi/2) for nu in (0,1),
/// log 2 - gamma - pi/4 in the log case.
double nevanlinna_paper_constant(const Order& order);

// ---------------------------------------------------------------------------
// b -> infinity convergence
// ---------------------------------------------------------------------------

struct ConvergenceRow {
    double b = 0.0;
    double gap = 0.0;   // |M_{nu,b}(z) - M_{nu,inf}(z)|
    bool flagged = false;  // pole collision at this b
};

std::vector<ConvergenceRow> convergence_table(const Order& order, const CutComplex& z,
                                              const std::vector<double>& b_list);

}  // namespace besselkit::weyl
