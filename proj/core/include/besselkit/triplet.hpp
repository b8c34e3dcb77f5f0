#pragma once

// Boundary maps of the singular endpoint: Gamma_0 f = [f, x^{1/2+nu}]_0 and
// Gamma_1 f = -(2nu)^{-1} [f, x^{1/2-nu}]_0 (log case: [f, x^{1/2} log x]_0),
// deficiency elements on the interval and the half-line, and a numerical
// check of the abstract second Green identity.

#include <functional>
#include <utility>

#include "besselkit/gridfn.hpp"
#include "besselkit/special.hpp"
#include "besselkit/types.hpp"

namespace besselkit::triplet {

using special::C1Fn;

/// Gamma_0 f = [f, x^{1/2+nu}]_0 (all regimes).
cxd gamma0(const C1Fn& f, const Order& order, double tol = 1e-9);

/// Gamma_1 f, regime-dispatched.
cxd gamma1(const C1Fn& f, const Order& order, double tol = 1e-9);

BoundaryValues boundary_values(const C1Fn& f, const Order& order, double tol = 1e-9);

// ---------------------------------------------------------------------------
// deficiency elements
// ---------------------------------------------------------------------------

/// Solution of (tau - z) f = 0 spanning the defect subspace: on (0,b) the
/// combination vanishing at b; on the half-line the outgoing combination
/// x^{1/2} (J_nu + i Y_nu)(x sqrt z), which decays as x -> infinity.
struct DeficiencyElement {
    Order order{0.5};
    IntervalSpec interval{};
    CutComplex z{};
    std::function<std::pair<cxd, cxd>(double)> evaluator;  // x -> (f_z, f_z')

    C1Fn as_c1(const std::string& label = "f_z") const {
        return C1Fn{evaluator, label};
    }
};

DeficiencyElement deficiency_element(const Order& order, const IntervalSpec& interval,
                                     const CutComplex& z);

/// |(tau - z) f_z|(x) via numerical second differences.
double deficiency_residual(const DeficiencyElement& el, double x);

// ---------------------------------------------------------------------------
// Green identity
// ---------------------------------------------------------------------------

struct GreenOptions {
    double quad_tol = 1e-11;
    double gamma_tol = 1e-10;
};

/// | (A*f, g) - (f, A*g) - [(G1 f, G0 g) - (G0 f, G1 g)] | with the inner
/// products computed by endpoint-limited quadrature of tau f = -f'' + c/x^2 f.
double green_identity_residual(const C2Fn& f, const C2Fn& g, const Order& order,
                               const IntervalSpec& interval, const GreenOptions& opts = {});

/// tau f at a point from a C2 evaluation.
cxd apply_tau(const C2Fn& f, const Order& order, double x);

}  // namespace besselkit::triplet
