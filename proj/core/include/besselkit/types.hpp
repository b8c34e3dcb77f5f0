#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace besselkit {

using cxd = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for numerical failures (non-convergence, overflow, divergence).
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergenceError : EvaluationError {
    using EvaluationError::EvaluationError;
};

struct DivergentIntegralError : EvaluationError {
    using EvaluationError::EvaluationError;
};

/// Evaluation requested too close to a pole of a meromorphic function.
struct PoleError : EvaluationError {
    PoleError(const std::string& what, double nearest)
        : EvaluationError(what), nearest_eigenvalue(nearest) {}
    double nearest_eigenvalue;
};

/// A point on the branch cut was passed without declaring the boundary side.
struct BranchError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Normalization denominator vanished (e.g. J_{-nu}(b sqrt z) = 0).
struct DegenerateNormalizationError : EvaluationError {
    using EvaluationError::EvaluationError;
};

// ---------------------------------------------------------------------------
// Order parameter
// ---------------------------------------------------------------------------

enum class Regime { log_case, generic, regular };

/// Order parameter nu in [0,1) of the singular expression
/// -d^2/dx^2 + (nu^2 - 1/4)/x^2, with its derived regime.
class Order {
  public:
    explicit Order(double nu) : nu_(nu) {
        if (!(nu >= 0.0 && nu < 1.0)) {
            throw std::invalid_argument("Order: nu must lie in [0,1), got " + std::to_string(nu));
        }
    }

    double nu() const { return nu_; }
    double coupling() const { return nu_ * nu_ - 0.25; }

    Regime regime() const {
        if (nu_ == 0.0) return Regime::log_case;
        if (nu_ == 0.5) return Regime::regular;
        return Regime::generic;
    }

  private:
    double nu_;
};

// ---------------------------------------------------------------------------
// Spectral-plane point with the cut along the positive half-line
// ---------------------------------------------------------------------------

enum class BoundarySide { none, above };

/// Point of the z-plane cut along R_+; arg z in [0, 2pi). A point with
/// im == 0, re > 0 lies on the cut and carries its side explicitly;
/// `above` means the limit from the upper half-plane, so z^nu = x^nu there.
struct CutComplex {
    double re = 0.0;
    double im = 0.0;
    BoundarySide side = BoundarySide::none;

    CutComplex() = default;
    CutComplex(double r, double i, BoundarySide s = BoundarySide::none) : re(r), im(i), side(s) {
        if (side == BoundarySide::above && !(im == 0.0 && re > 0.0)) {
            throw std::invalid_argument("CutComplex: boundary side only applies on the cut");
        }
    }
    explicit CutComplex(cxd z, BoundarySide s = BoundarySide::none)
        : CutComplex(z.real(), z.imag(), s) {}

    cxd value() const { return {re, im}; }
    bool on_cut() const { return im == 0.0 && re > 0.0; }
    bool is_zero() const { return re == 0.0 && im == 0.0; }

    /// arg in [0, 2pi); on-cut points are read from the upper side.
    double arg() const {
        if (is_zero()) throw std::domain_error("CutComplex: arg of zero");
        if (on_cut()) return 0.0;
        double a = std::atan2(im, re);
        if (a < 0.0) a += 2.0 * std::numbers::pi;
        if (a >= 2.0 * std::numbers::pi) a = 0.0;
        return a;
    }

    double abs() const { return std::hypot(re, im); }
};

// ---------------------------------------------------------------------------
// Interval and extension parameter
// ---------------------------------------------------------------------------

enum class IntervalKind { finite, halfline };

/// Finite interval (0,b) or the half-line (0,infinity).
struct IntervalSpec {
    IntervalKind kind = IntervalKind::finite;
    double b = 1.0;  // used only when kind == finite

    static IntervalSpec finite(double b) {
        if (!(b > 0.0)) throw std::invalid_argument("IntervalSpec: b must be positive");
        return {IntervalKind::finite, b};
    }
    static IntervalSpec halfline() { return {IntervalKind::halfline, kInf}; }

    bool is_finite() const { return kind == IntervalKind::finite; }
};

/// Boundary parameter h in R union {infinity} selecting the self-adjoint
/// extension A_h = ker(Gamma_1 - h Gamma_0); h = infinity denotes ker Gamma_0.
struct ExtensionParam {
    static ExtensionParam infinite() { return ExtensionParam(kInf); }
    static ExtensionParam value(double h) {
        if (!std::isfinite(h)) throw std::invalid_argument("ExtensionParam: use infinite()");
        return ExtensionParam(h);
    }

    bool is_infinite() const { return std::isinf(h_); }
    double h() const { return h_; }

  private:
    explicit ExtensionParam(double h) : h_(h) {}
    double h_;
};

// ---------------------------------------------------------------------------
// Boundary values
// ---------------------------------------------------------------------------

struct BoundaryValues {
    cxd g0{0.0, 0.0};  // Gamma_0 f
    cxd g1{0.0, 0.0};  // Gamma_1 f
};

}  // namespace besselkit
