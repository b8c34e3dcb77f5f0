#pragma once

// Quadratic forms of the singular expression: the interval/half-line form
// (completed square in the log case), general potentials bounded below by
// beta/x^2 - mu, the Hardy inequality check, homogeneous-kernel operator
// norms, the discretized x^{-2} int_0^x (x-t) dt norm, and the H^2_0 decay
// estimates.

#include <functional>

#include "besselkit/gridfn.hpp"
#include "besselkit/types.hpp"

namespace besselkit::forms {

struct FormOptions {
    double tol = 1e-11;
};

/// s_{nu}[u] = int |u'|^2 + (nu^2 - 1/4) int |u|^2/x^2 over (0, support_end];
/// the log case evaluates the completed square int |u' - u/(2x)|^2.
double form_value(const Order& order, const IntervalSpec& interval, const RealC1Fn& u,
                  const FormOptions& opts = {});
double form_value(const Order& order, const IntervalSpec& interval, const GridFunction& u,
                  const FormOptions& opts = {});

// ---------------------------------------------------------------------------
// general potentials
// ---------------------------------------------------------------------------

struct PotentialSpec {
    std::function<double(double)> q;
    double beta = 0.0;  // q(x) >= beta/x^2 - mu, beta > -1/4
    double mu = 0.0;

    /// Samples the lower bound on a log grid; throws when violated.
    void audit(double x_min = 1e-6, double x_max = 10.0, int samples = 200) const;
};

double form_general_q(const PotentialSpec& pot, const RealC1Fn& u, const FormOptions& opts = {});

// ---------------------------------------------------------------------------
// Hardy inequality
// ---------------------------------------------------------------------------

struct HardyResult {
    double lhs = 0.0;  // int |u|^2 / x^2
    double rhs = 0.0;  // 4 int |u'|^2
    bool holds = false;
    bool lhs_divergent = false;
};

/// Requires u(0) = 0 (audited from the values near the first node).
HardyResult hardy_check(const RealC1Fn& u, const FormOptions& opts = {});

// ---------------------------------------------------------------------------
// homogeneous kernels
// ---------------------------------------------------------------------------

/// K(1,t) on (0, support_end) (support_end = inf allowed: algebraic decay
/// assumed integrable against t^{-1/p}).
struct KernelSlice {
    std::function<double(double)> K1;
    double support_end = 1.0;
};

/// ||T_K||_p = int_0^inf |K(1,t)| t^{-1/p} dt for a kernel of homogeneity -1.
double homogeneous_kernel_norm(const KernelSlice& k, double p, const FormOptions& opts = {});

/// Largest singular value of the midpoint-collocated, measure-weighted
/// discretization of (Q I^2 u)(x) = x^{-2} int_0^x (x-t) u(t) dt on (0,1],
/// graded mesh x_j = (j/n)^grading; approaches 4/3 from below as n grows.
double qi2_matrix_norm(int n, double grading = 3.0);

// ---------------------------------------------------------------------------
// decay estimates
// ---------------------------------------------------------------------------

struct DecayCheckResult {
    bool holds = false;
    double worst_margin_d1 = kInf;  // min over nodes of rhs/lhs for |f'|
    double worst_margin_f = kInf;   // same for |f|
};

/// For f with f(0) = f'(0) = 0 checks |f'(x)| <= sqrt(x) ||f''||_{L2(0,x)}
/// and |f(x)| <= (2/3) x^{3/2} ||f''||_{L2(0,x)} at the given nodes.
DecayCheckResult decay_estimate_check(const C2Fn& f, const std::vector<double>& nodes,
                                      const FormOptions& opts = {});

}  // namespace besselkit::forms
