#include "besselkit/weyl.hpp"

#include <cmath>
#include <numbers>

#include "besselkit/extrapolate.hpp"
#include "besselkit/oracle.hpp"
#include "besselkit/special.hpp"

namespace besselkit::weyl {

using std::numbers::egamma;
using std::numbers::pi;
using special::bessel_j;
using special::bessel_j_zeros;
using special::bessel_y;
using special::cut_power;
using special::cut_sqrt;
using special::gamma_real;

namespace {

// Gamma(1-nu) / (2 nu 4^nu Gamma(1+nu))
double weyl_prefactor(double nu) {
    return gamma_real(1.0 - nu) / (2.0 * nu * std::pow(4.0, nu) * gamma_real(1.0 + nu));
}

// envelope scale of J_nu used by the pole-proximity threshold
double j_scale(double nu, cxd t) {
    double at = std::abs(t);
    double env = std::sqrt(2.0 / (pi * std::max(at, 1e-8))) * std::exp(std::fabs(t.imag()));
    if (at < 1.0) env = std::max(env, std::pow(at * 0.5, nu) / gamma_real(1.0 + nu));
    return env;
}

double nearest_pole_estimate(double nu, double b, cxd t) {
    // nearest positive zero of J_nu to Re t, as a lambda estimate
    double target = std::fabs(t.real());
    auto zeros = bessel_j_zeros(nu, 64);
    double best = zeros.front();
    for (double zk : zeros) {
        if (std::fabs(zk - target) < std::fabs(best - target)) best = zk;
    }
    return (best / b) * (best / b);
}

}  // namespace

cxd weyl_finite(const Order& order, double b, const CutComplex& z) {
    if (!(b > 0.0)) throw std::invalid_argument("weyl_finite: b must be positive");
    if (z.is_zero()) throw std::domain_error("weyl_finite: z = 0 is a boundary limit");
    cxd sz = cut_sqrt(z);
    cxd tb = b * sz;
    if (order.regime() == Regime::log_case) {
        cxd den = bessel_j(0.0, tb);
        if (std::abs(den) < 1e-13 * j_scale(0.0, tb)) {
            throw PoleError("weyl_finite: z at a pole of M_{0,b}", nearest_pole_estimate(0.0, b, tb));
        }
        cxd log_term = std::log(sz) - std::log(cxd(2.0, 0.0));
        return -log_term + (pi / 2.0) * bessel_y(0.0, tb) / den - egamma;
    }
    double nu = order.nu();
    cxd den = bessel_j(nu, tb);
    if (std::abs(den) < 1e-13 * j_scale(nu, tb)) {
        throw PoleError("weyl_finite: z at a pole of M_{nu,b}", nearest_pole_estimate(nu, b, tb));
    }
    return -weyl_prefactor(nu) * (bessel_j(-nu, tb) / den) * cut_power(z, nu);
}

cxd weyl_halfline(const Order& order, const CutComplex& z) {
    if (z.is_zero()) throw std::domain_error("weyl_halfline: z = 0 is a boundary limit");
    if (z.on_cut() && z.side == BoundarySide::none) {
        throw BranchError("weyl_halfline: z on the cut needs an explicit boundary side");
    }
    if (order.regime() == Regime::log_case) {
        cxd sz = cut_sqrt(z);
        return -(std::log(sz) - std::log(cxd(2.0, 0.0))) + cxd(0.0, pi / 2.0) - egamma;
    }
    double nu = order.nu();
    cxd phase = std::exp(cxd(0.0, (1.0 - nu) * pi));
    return phase * weyl_prefactor(nu) * cut_power(z, nu);
}

cxd weyl_function(const Order& order, const IntervalSpec& interval, const CutComplex& z) {
    return interval.is_finite() ? weyl_finite(order, interval.b, z) : weyl_halfline(order, z);
}

WeylLimits weyl_limits(const Order& order, const IntervalSpec& interval) {
    WeylLimits lims{0.0, -kInf};
    if (interval.is_finite()) {
        double b = interval.b;
        if (order.regime() == Regime::log_case) {
            lims.m_zero = std::log(b);
        } else {
            double nu = order.nu();
            lims.m_zero = -std::pow(b, -2.0 * nu) / (2.0 * nu);
        }
    } else {
        lims.m_zero = (order.regime() == Regime::log_case) ? kInf : 0.0;
    }
    return lims;
}

// ---------------------------------------------------------------------------
// spectral density
// ---------------------------------------------------------------------------

DensitySample spectral_density(const Order& order, double t, const EpsSchedule& sched) {
    DensitySample out;
    out.t = t;
    std::vector<double> values;
    for (int k = 0; k < sched.count; ++k) {
        double eps = sched.eps0 * std::pow(sched.ratio, k);
        out.eps_used.push_back(eps);
        cxd m = weyl_halfline(order, CutComplex(t, eps));
        values.push_back(m.imag() / pi);
    }
    std::vector<double> exps = {1.0, 2.0, 3.0, 4.0, 5.0};
    auto sampler = std::function<double(int)>([&values](int j) { return values.at(j); });
    auto res = extrapolate_sequence<double>(sampler, sched.ratio, exps, sched.tol, sched.count);
    if (!res.converged) {
        throw NonConvergenceError("spectral_density: eps extrapolation did not converge");
    }
    double val = res.value;
    if (std::fabs(val) < 1e-9) val = 0.0;  // M real off the spectrum; clamp noise
    if (val < 0.0 && val > -1e-9) val = 0.0;
    out.sigma_prime = val;
    return out;
}

double density_closed_form(const Order& order, double t) {
    if (t <= 0.0) return 0.0;
    if (order.regime() == Regime::log_case) return 0.5;
    double nu = order.nu();
    double g = gamma_real(1.0 + nu);
    return std::pow(t, nu) / (std::pow(2.0, 2.0 * nu + 1.0) * g * g);
}

// ---------------------------------------------------------------------------
// Nevanlinna representation
// ---------------------------------------------------------------------------

double nevanlinna_paper_constant(const Order& order) {
    if (order.regime() == Regime::log_case) return std::log(2.0) - egamma - pi / 4.0;
    double nu = order.nu();
    return -weyl_prefactor(nu) * std::cos(nu * pi / 2.0);
}

NevanlinnaFit nevanlinna_reconstruct(const Order& order, const CutComplex& z,
                                     const NevanlinnaQuad& quad) {
    if (z.im == 0.0) throw std::domain_error("nevanlinna_reconstruct: Im z must be nonzero");
    cxd zz = z.value();
    double nu = order.nu();
    bool log_case = order.regime() == Regime::log_case;
    double sigma_const = log_case ? 0.5 : density_closed_form(order, 1.0);

    auto density = [&](double t) {
        return log_case ? 0.5 : sigma_const * std::pow(t, nu);
    };
    auto kernel = [&](double t) -> cxd {
        return (1.0 / (cxd(t, 0.0) - zz) - t / (1.0 + t * t)) * density(t);
    };

    double split = std::max(std::abs(zz), 1.0);
    cxd integral = oracle::quad_to_zero(kernel, split, quad.tol);

    // log-spaced panels up to the analytic tail
    double lo = split;
    oracle::QuadOptions qo;
    qo.tol = quad.tol;
    qo.grading = 1.0;
    qo.audit_divergence = false;
    while (lo < quad.t_max) {
        double hi = std::min(lo * 4.0, quad.t_max);
        integral += oracle::quad_complex(kernel, lo, hi, qo);
        lo = hi;
    }

    // analytic tail: integrand = sigma(t) [ z/t^2 + (1+z^2)/t^3 + z^3/t^4 + ... ]
    double T = quad.t_max;
    cxd tail = sigma_const *
               (zz * std::pow(T, nu - 1.0) / (1.0 - nu) +
                (1.0 + zz * zz) * std::pow(T, nu - 2.0) / (2.0 - nu) +
                (zz * zz * zz) * std::pow(T, nu - 3.0) / (3.0 - nu));
    if (log_case) {
        tail = 0.5 * (zz / T + (1.0 + zz * zz) / (2.0 * T * T) + zz * zz * zz / (3.0 * T * T * T));
    }
    integral += tail;

    cxd m = weyl_halfline(order, z);
    cxd residue = m - integral;
    NevanlinnaFit fit;
    fit.fitted_constant = residue.real();
    double tail_bound = std::abs(sigma_const * std::pow(std::abs(zz), 4.0) *
                                 std::pow(T, nu - 4.0) / (4.0 - nu));
    fit.quadrature_error = std::abs(residue.imag()) + tail_bound;
    if (fit.quadrature_error > 1e-4) {
        throw NonConvergenceError("nevanlinna_reconstruct: tail/quadrature error too large");
    }
    fit.paper_constant = nevanlinna_paper_constant(order);
    fit.discrepancy = fit.fitted_constant - fit.paper_constant;
    return fit;
}

// ---------------------------------------------------------------------------
// convergence table
// ---------------------------------------------------------------------------

std::vector<ConvergenceRow> convergence_table(const Order& order, const CutComplex& z,
                                              const std::vector<double>& b_list) {
    if (!(z.im > 0.0)) throw std::invalid_argument("convergence_table: Im z must be positive");
    cxd minf = weyl_halfline(order, z);
    std::vector<ConvergenceRow> rows;
    for (double b : b_list) {
        ConvergenceRow row;
        row.b = b;
        try {
            row.gap = std::abs(weyl_finite(order, b, z) - minf);
        } catch (const PoleError&) {
            row.flagged = true;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace besselkit::weyl
