#include "besselkit/extensions.hpp"

#include <algorithm>
#include <cmath>

#include "besselkit/weyl.hpp"

namespace besselkit::extensions {

using special::bessel_j;
using special::bessel_j_zeros;
using special::bracket_limit_at_zero;
using special::BracketLimitOptions;
using special::C1Fn;

double krein_parameter(const Order& order, const IntervalSpec& interval) {
    return weyl::weyl_limits(order, interval).m_zero;
}

ExtensionReport classify_extension(const Order& order, const IntervalSpec& interval,
                                   const ExtensionParam& h, double krein_tol) {
    ExtensionReport rep;
    double hk = krein_parameter(order, interval);
    if (h.is_infinite()) {
        rep.is_friedrichs = true;
        rep.is_krein = std::isinf(hk);  // log case on the half-line: A_F = A_K
        rep.nonnegative = true;
        rep.negative_count = 0;
        return rep;
    }
    double hv = h.h();
    rep.is_friedrichs = false;
    rep.is_krein = std::isfinite(hk) && std::fabs(hv - hk) <= krein_tol * std::max(1.0, std::fabs(hk));
    rep.nonnegative = std::isfinite(hk) ? (hv >= hk - krein_tol * std::max(1.0, std::fabs(hk)))
                                        : false;
    rep.negative_count = rep.nonnegative ? 0 : 1;
    return rep;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

std::vector<double> weyl_pole_table(const Order& order, double b, int count) {
    auto zeros = bessel_j_zeros(order.nu(), count);
    std::vector<double> poles(zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) poles[i] = (zeros[i] / b) * (zeros[i] / b);
    return poles;
}

namespace {

double secular_m(const Order& order, double b, double lambda) {
    if (lambda == 0.0) return weyl::weyl_limits(order, IntervalSpec::finite(b)).m_zero;
    // on the real axis M is real; evaluate through the cut machinery
    CutComplex z = (lambda > 0.0) ? CutComplex(lambda, 0.0, BoundarySide::above)
                                  : CutComplex(lambda, 0.0);
    return weyl::weyl_finite(order, b, z).real();
}

// bisection of M(lambda) - h on a bracket where M increases from -inf to +inf
double secular_bisect(const Order& order, double b, double h, double lo, double hi) {
    auto g = [&](double lam) { return secular_m(order, b, lam) - h; };
    // shrink away from the poles until the signs straddle
    double span = hi - lo;
    double a = lo + 1e-9 * span, bb = hi - 1e-9 * span;
    double fa = g(a), fb = g(bb);
    for (int k = 0; k < 60 && fa > 0.0; ++k) {
        a = lo + (a - lo) / 8.0;
        fa = g(a);
    }
    for (int k = 0; k < 60 && fb < 0.0; ++k) {
        bb = hi - (hi - bb) / 8.0;
        fb = g(bb);
    }
    if (!(fa <= 0.0 && fb >= 0.0)) {
        throw EvaluationError("eigenvalues: secular bracket failed in (" + std::to_string(lo) +
                              ", " + std::to_string(hi) + ")");
    }
    for (int it = 0; it < 100; ++it) {
        double m = 0.5 * (a + bb);
        double fm = g(m);
        if (fm <= 0.0) {
            a = m;
            fa = fm;
        } else {
            bb = m;
            fb = fm;
        }
        if (bb - a <= 1e-14 * std::max(1.0, std::fabs(bb))) break;
    }
    // secant polish on the secular function
    double x0 = a, x1 = bb, f0 = fa, f1 = fb;
    for (int it = 0; it < 4 && f1 != f0; ++it) {
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > lo && x2 < hi)) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = g(x2);
        if (std::fabs(f1) < 1e-12) break;
    }
    return std::fabs(f1) < std::fabs(f0) ? x1 : x0;
}

}  // namespace

std::optional<double> negative_secular_root(const Order& order, double b, double h) {
    auto g = [&](double lam) { return secular_m(order, b, lam) - h; };
    // M increases from -inf to M(0) = h_K on the negative axis
    double prev = -1e-12;
    double fprev = g(prev);
    if (fprev <= 0.0) return std::nullopt;  // h >= h_K: no negative root
    double lo = -1.0;
    for (int m = 0; m < 60; ++m) {
        double flo = g(lo);
        if (flo <= 0.0) {
            double a = lo, bb = prev, fa = flo;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (a + bb);
                double fm = g(mid);
                if (fm <= 0.0) {
                    a = mid;
                    fa = fm;
                } else {
                    bb = mid;
                }
                if (bb - a <= 1e-14 * std::max(1.0, std::fabs(a))) break;
            }
            (void)fa;
            return 0.5 * (a + bb);
        }
        prev = lo;
        lo *= 4.0;
        if (lo < -1e18) break;
    }
    throw EvaluationError("negative_secular_root: no bracket found on the negative axis");
}

SpectrumResult eigenvalues(const Order& order, double b, const ExtensionParam& h, int count) {
    if (!(b > 0.0) || count <= 0) throw std::invalid_argument("eigenvalues: bad arguments");
    SpectrumResult out;
    if (h.is_infinite()) {
        out.method = SpectrumMethod::secular;
        auto zeros = bessel_j_zeros(order.nu(), count);
        for (double zk : zeros) {
            double lam = (zk / b) * (zk / b);
            out.eigenvalues.push_back(lam);
            out.residuals.push_back(std::abs(bessel_j(order.nu(), cxd(zk, 0.0))));
        }
        out.negative_count = 0;
        return out;
    }
    double hv = h.h();
    auto poles = weyl_pole_table(order, b, count + 1);
    // the single root below the first pole (negative iff h < h_K)
    double hk = krein_parameter(order, IntervalSpec::finite(b));
    if (hv < hk) {
        auto neg = negative_secular_root(order, b, hv);
        if (neg) out.eigenvalues.push_back(*neg);
        out.negative_count = 1;
    } else if (hv == hk) {
        out.eigenvalues.push_back(0.0);
        out.negative_count = 0;
    } else {
        // root in (0, p_1)
        out.eigenvalues.push_back(secular_bisect(order, b, hv, 0.0, poles[0]));
        out.negative_count = 0;
    }
    for (std::size_t k = 0; static_cast<int>(out.eigenvalues.size()) < count; ++k) {
        out.eigenvalues.push_back(secular_bisect(order, b, hv, poles[k], poles[k + 1]));
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    for (double lam : out.eigenvalues) {
        out.residuals.push_back(std::fabs(secular_m(order, b, lam) - hv));
    }
    return out;
}

int count_negative_eigenvalues(const Order& order, double b, double h) {
    return h < krein_parameter(order, IntervalSpec::finite(b)) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// membership
// ---------------------------------------------------------------------------

namespace {

// g-side functions of the defining bracket conditions
C1Fn condition_fn(const Order& order, const IntervalSpec& interval, const ExtensionSelector& sel) {
    double nu = order.nu();
    bool log_case = order.regime() == Regime::log_case;
    switch (sel.kind) {
        case ExtensionKind::friedrichs:
            // [f, x^{1/2+nu}]_0 = 0, b-independent (x^{1/2} in the log case)
            return special::power_fn(0.5 + nu);
        case ExtensionKind::krein: {
            if (!interval.is_finite()) {
                if (log_case) return special::power_fn(0.5);  // coincides with Friedrichs
                return special::power_fn(0.5 - nu);
            }
            double b = interval.b;
            if (log_case) {
                // x^{1/2} log(x/b) = x^{1/2} log x - log(b) x^{1/2}
                C1Fn fn;
                fn.label = "x^{1/2} log(x/b)";
                double lb = std::log(b);
                fn.eval = [lb](double x) -> std::pair<cxd, cxd> {
                    double s = std::sqrt(x);
                    double lx = std::log(x) - lb;
                    return {cxd(s * lx, 0.0), cxd((0.5 * lx + 1.0) / s, 0.0)};
                };
                return fn;
            }
            C1Fn fn;
            fn.label = "b^{-2nu} x^{1/2+nu} - x^{1/2-nu}";
            double w = std::pow(b, -2.0 * nu);
            fn.eval = [w, nu](double x) -> std::pair<cxd, cxd> {
                double pp = std::pow(x, 0.5 + nu), pm = std::pow(x, 0.5 - nu);
                double v = w * pp - pm;
                double d = w * (0.5 + nu) * pp / x - (0.5 - nu) * pm / x;
                return {cxd(v, 0.0), cxd(d, 0.0)};
            };
            return fn;
        }
        case ExtensionKind::parametric: {
            double h = sel.h;
            if (log_case) {
                // [f, x^{1/2} log x - h x^{1/2}]_0 = 0
                C1Fn fn;
                fn.label = "x^{1/2}(log x - h)";
                fn.eval = [h](double x) -> std::pair<cxd, cxd> {
                    double s = std::sqrt(x);
                    double lx = std::log(x) - h;
                    return {cxd(s * lx, 0.0), cxd((0.5 * lx + 1.0) / s, 0.0)};
                };
                return fn;
            }
            // [f, x^{1/2-nu} + 2 nu h x^{1/2+nu}]_0 = 0
            C1Fn fn;
            fn.label = "x^{1/2-nu} + 2nu h x^{1/2+nu}";
            fn.eval = [h, nu](double x) -> std::pair<cxd, cxd> {
                double pp = std::pow(x, 0.5 + nu), pm = std::pow(x, 0.5 - nu);
                double c = 2.0 * nu * h;
                double v = pm + c * pp;
                double d = (0.5 - nu) * pm / x + c * (0.5 + nu) * pp / x;
                return {cxd(v, 0.0), cxd(d, 0.0)};
            };
            return fn;
        }
    }
    throw std::logic_error("condition_fn: unreachable");
}

}  // namespace

MembershipResult domain_membership(const C1Fn& f, const Order& order,
                                   const IntervalSpec& interval, const ExtensionSelector& sel,
                                   double tol) {
    C1Fn cond = condition_fn(order, interval, sel);
    BracketLimitOptions opts;
    opts.tol = std::min(tol * 0.1, 1e-9);
    opts.exponents = special::bracket_exponent_ladder(order);
    auto lim = bracket_limit_at_zero(f, cond, opts);
    if (!lim.converged) {
        throw NonConvergenceError("domain_membership: limit did not converge for " + f.label);
    }
    MembershipResult res;
    res.residual = std::abs(lim.value);
    res.member = res.residual < tol;
    return res;
}

}  // namespace besselkit::extensions
