#pragma once

// The family A_h = ker(Gamma_1 - h Gamma_0) of self-adjoint extensions:
// Krein threshold h_K = M(0), nonnegativity classification, eigenvalues of
// the secular equation M(lambda) = h with pole interlacing, and membership
// tests against the defining bracket conditions of each domain.

#include <optional>
#include <vector>

#include "besselkit/special.hpp"
#include "besselkit/types.hpp"

namespace besselkit::extensions {

/// h_K = M(0): finite interval -b^{-2nu}/(2nu) (log b for nu = 0);
/// half-line 0 for nu in (0,1) and +infinity for nu = 0 (Krein = Friedrichs).
double krein_parameter(const Order& order, const IntervalSpec& interval);

struct ExtensionReport {
    bool is_friedrichs = false;
    bool is_krein = false;
    bool nonnegative = false;
    int negative_count = 0;
};

ExtensionReport classify_extension(const Order& order, const IntervalSpec& interval,
                                   const ExtensionParam& h, double krein_tol = 1e-12);

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

enum class SpectrumMethod { secular, shooting, fd };

struct SpectrumResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<double> residuals;    // |M(lambda_k) - h| (|J_nu(b sqrt l)| for h = inf)
    SpectrumMethod method = SpectrumMethod::secular;
    int negative_count = 0;
};

/// First `count` eigenvalues of A_h on (0,b). For h = infinity these are the
/// solutions of J_nu(b sqrt lambda) = 0; for finite h the real roots of
/// M_{nu,b}(lambda) = h bracketed between consecutive poles, plus the single
/// negative root when h < h_K.
SpectrumResult eigenvalues(const Order& order, double b, const ExtensionParam& h, int count);

/// 0 if h >= h_K else 1.
int count_negative_eigenvalues(const Order& order, double b, double h);

/// The negative secular root when it exists (h < h_K), found by expanding
/// geometric brackets on the negative axis.
std::optional<double> negative_secular_root(const Order& order, double b, double h);

/// Poles of M_{nu,b}, i.e. the Friedrichs eigenvalues (j_{nu,k}/b)^2.
std::vector<double> weyl_pole_table(const Order& order, double b, int count);

// ---------------------------------------------------------------------------
// domain membership
// ---------------------------------------------------------------------------

enum class ExtensionKind { friedrichs, krein, parametric };

struct ExtensionSelector {
    ExtensionKind kind = ExtensionKind::friedrichs;
    double h = 0.0;  // used by `parametric`

    static ExtensionSelector friedrichs() { return {ExtensionKind::friedrichs, 0.0}; }
    static ExtensionSelector krein() { return {ExtensionKind::krein, 0.0}; }
    static ExtensionSelector parametric(double h) { return {ExtensionKind::parametric, h}; }
};

struct MembershipResult {
    bool member = false;
    double residual = 0.0;  // |defining bracket limit|
};

/// Evaluates the defining bracket condition of the selected extension domain
/// on f (a maximal-domain element given in closed form near 0).
MembershipResult domain_membership(const special::C1Fn& f, const Order& order,
                                   const IntervalSpec& interval, const ExtensionSelector& sel,
                                   double tol = 1e-8);

}  // namespace besselkit::extensions
