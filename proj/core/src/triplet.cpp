#include "besselkit/triplet.hpp"

#include <algorithm>
#include <cmath>

#include "besselkit/oracle.hpp"

namespace besselkit::triplet {

using special::bessel_h1;
using special::bessel_h1_deriv;
using special::bessel_j;
using special::bessel_j_deriv;
using special::bessel_y;
using special::bessel_y_deriv;
using special::bracket_limit_at_zero;
using special::BracketLimitOptions;
using special::cut_sqrt;
using special::power_fn;

namespace {

BracketLimitOptions limit_options(const Order& order, double tol) {
    BracketLimitOptions opts;
    opts.tol = tol;
    opts.exponents = special::bracket_exponent_ladder(order);
    return opts;
}

}  // namespace

cxd gamma0(const C1Fn& f, const Order& order, double tol) {
    C1Fn g = power_fn(0.5 + order.nu());
    auto lim = bracket_limit_at_zero(f, g, limit_options(order, tol));
    if (!lim.converged) {
        throw NonConvergenceError("gamma0: bracket limit did not converge for " + f.label);
    }
    return lim.value;
}

cxd gamma1(const C1Fn& f, const Order& order, double tol) {
    if (order.regime() == Regime::log_case) {
        C1Fn g = power_fn(0.5, /*with_log=*/true);
        auto lim = bracket_limit_at_zero(f, g, limit_options(order, tol));
        if (!lim.converged) {
            throw NonConvergenceError("gamma1: bracket limit did not converge for " + f.label);
        }
        return lim.value;
    }
    C1Fn g = power_fn(0.5 - order.nu());
    auto lim = bracket_limit_at_zero(f, g, limit_options(order, tol));
    if (!lim.converged) {
        throw NonConvergenceError("gamma1: bracket limit did not converge for " + f.label);
    }
    return lim.value / (-2.0 * order.nu());
}

BoundaryValues boundary_values(const C1Fn& f, const Order& order, double tol) {
    return {gamma0(f, order, tol), gamma1(f, order, tol)};
}

// ---------------------------------------------------------------------------
// deficiency elements
// ---------------------------------------------------------------------------

DeficiencyElement deficiency_element(const Order& order, const IntervalSpec& interval,
                                     const CutComplex& z) {
    if (z.is_zero() || (z.on_cut() && z.side == BoundarySide::none)) {
        throw BranchError("deficiency_element: z must lie off the cut or carry a side");
    }
    DeficiencyElement el;
    el.order = order;
    el.interval = interval;
    el.z = z;
    cxd sz = cut_sqrt(z);
    double nu = order.nu();

    if (interval.is_finite()) {
        double b = interval.b;
        cxd tb = static_cast<double>(b) * sz;
        if (order.regime() == Regime::log_case) {
            cxd den = bessel_y(0.0, tb);
            cxd num = bessel_j(0.0, tb);
            double scale = std::max(std::abs(num), 1.0);
            if (std::abs(den) < 1e-13 * scale) {
                throw DegenerateNormalizationError("deficiency_element: Y0(b sqrt z) ~ 0");
            }
            cxd rho = num / den;
            el.evaluator = [sz, rho](double x) -> std::pair<cxd, cxd> {
                cxd t = x * sz;
                cxd g = bessel_j(0.0, t) - rho * bessel_y(0.0, t);
                cxd gd = bessel_j_deriv(0.0, t) - rho * bessel_y_deriv(0.0, t);
                double sx = std::sqrt(x);
                cxd f = sx * g;
                cxd fd = 0.5 / sx * g + sx * sz * gd;
                return {f, fd};
            };
            return el;
        }
        cxd den = bessel_j(-nu, tb);
        cxd num = bessel_j(nu, tb);
        double scale = std::max(std::abs(num), std::pow(std::abs(tb) * 0.5, -nu));
        if (std::abs(den) < 1e-13 * scale) {
            throw DegenerateNormalizationError("deficiency_element: J_{-nu}(b sqrt z) ~ 0");
        }
        cxd rho = num / den;
        el.evaluator = [sz, rho, nu](double x) -> std::pair<cxd, cxd> {
            cxd t = x * sz;
            cxd g = bessel_j(nu, t) - rho * bessel_j(-nu, t);
            cxd gd = bessel_j_deriv(nu, t) - rho * bessel_j_deriv(-nu, t);
            double sx = std::sqrt(x);
            cxd f = sx * g;
            cxd fd = 0.5 / sx * g + sx * sz * gd;
            return {f, fd};
        };
        return el;
    }

    // half-line: outgoing combination J + iY, exponentially decaying for Im sqrt z > 0
    el.evaluator = [sz, nu](double x) -> std::pair<cxd, cxd> {
        cxd t = x * sz;
        cxd g = bessel_h1(nu, t);
        cxd gd = bessel_h1_deriv(nu, t);
        double sx = std::sqrt(x);
        cxd f = sx * g;
        cxd fd = 0.5 / sx * g + sx * sz * gd;
        return {f, fd};
    };
    return el;
}

double deficiency_residual(const DeficiencyElement& el, double x) {
    auto value = [&el](double t) { return el.evaluator(t).first; };
    cxd f2 = oracle::second_derivative(value, x);
    cxd f = el.evaluator(x).first;
    cxd tau = -f2 + el.order.coupling() / (x * x) * f;
    return std::abs(tau - el.z.value() * f);
}

// ---------------------------------------------------------------------------
// Green identity
// ---------------------------------------------------------------------------

cxd apply_tau(const C2Fn& f, const Order& order, double x) {
    auto v = f.eval(x);
    return -v[2] + order.coupling() / (x * x) * v[0];
}

double green_identity_residual(const C2Fn& f, const C2Fn& g, const Order& order,
                               const IntervalSpec& interval, const GreenOptions& opts) {
    double S = std::max(f.support_end, g.support_end);
    if (interval.is_finite() && S > interval.b) {
        throw std::invalid_argument("green_identity_residual: support exceeds the interval");
    }
    auto integrand = [&](double x) -> cxd {
        auto fv = f.eval(x);
        auto gv = g.eval(x);
        cxd tf = -fv[2] + order.coupling() / (x * x) * fv[0];
        cxd tg = -gv[2] + order.coupling() / (x * x) * gv[0];
        return tf * std::conj(gv[0]) - fv[0] * std::conj(tg);
    };
    // segment at the knots so every Gauss panel sees a smooth piece
    std::vector<double> seams;
    for (const auto* fn : {&f, &g}) {
        for (double c : fn->knots) {
            if (c > 0.0 && c < S) seams.push_back(c);
        }
    }
    std::sort(seams.begin(), seams.end());
    seams.erase(std::unique(seams.begin(), seams.end()), seams.end());
    seams.push_back(S);

    cxd lhs = oracle::quad_to_zero(integrand, seams.front(), opts.quad_tol);
    for (std::size_t i = 0; i + 1 < seams.size(); ++i) {
        oracle::QuadOptions qo;
        qo.tol = opts.quad_tol;
        qo.grading = 1.0;
        qo.audit_divergence = false;
        lhs += oracle::quad_complex(integrand, seams[i], seams[i + 1], qo);
    }

    C1Fn fc{[&f](double x) {
                auto v = f.eval(x);
                return std::pair<cxd, cxd>(v[0], v[1]);
            },
            f.label};
    C1Fn gc{[&g](double x) {
                auto v = g.eval(x);
                return std::pair<cxd, cxd>(v[0], v[1]);
            },
            g.label};
    BoundaryValues bf = boundary_values(fc, order, opts.gamma_tol);
    BoundaryValues bg = boundary_values(gc, order, opts.gamma_tol);
    cxd boundary_form = bf.g1 * std::conj(bg.g0) - bf.g0 * std::conj(bg.g1);
    return std::abs(lhs - boundary_form);
}

}  // namespace besselkit::triplet
