#include "besselkit/oracle.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

namespace besselkit::oracle {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1], generated once by Newton
// iteration on the Legendre polynomial.
struct GaussRule {
    std::array<double, 16> x{};
    std::array<double, 16> w{};
};

GaussRule make_rule() {
    GaussRule r;
    const int n = 16;
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-16) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        r.x[i] = t;
        r.w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return r;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

template <class T>
T panel_gauss(const std::function<T(double)>& f, double a, double b) {
    const auto& r = rule();
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T acc{};
    for (int i = 0; i < 16; ++i) acc += f(c + h * r.x[i]) * (h * r.w[i]);
    return acc;
}

// Graded mesh value with n panels.
template <class T>
T graded_value(const std::function<T(double)>& f, double a, double b, double grading, int n) {
    std::vector<double> mesh(n + 1);
    for (int j = 0; j <= n; ++j) {
        mesh[j] = a + (b - a) * std::pow(static_cast<double>(j) / n, grading);
    }
    T total{};
    for (int j = 0; j < n; ++j) total += panel_gauss<T>(f, mesh[j], mesh[j + 1]);
    return total;
}

// adaptive-by-halving Gauss on a single block; the child tolerance floors at
// 1e-14 so the refinement cascade stops at the rounding level
template <class T>
T block_adaptive(const std::function<T(double)>& f, double a, double b, double tol, int depth) {
    T whole = panel_gauss<T>(f, a, b);
    double m = 0.5 * (a + b);
    T split = panel_gauss<T>(f, a, m) + panel_gauss<T>(f, m, b);
    if (std::abs(split - whole) <= tol * (1.0 + std::abs(split)) || depth >= 16) return split;
    double child_tol = std::max(0.5 * tol, 1e-14);
    return block_adaptive<T>(f, a, m, child_tol, depth + 1) +
           block_adaptive<T>(f, m, b, child_tol, depth + 1);
}

// Endpoint integral over (a, a+w] through the substitution u = -log((x-a)/w):
// algebraic singularities (x-a)^{-1+delta} become e^{-delta u} (block masses
// shrink super-geometrically), log powers (x-a)^{-1} |log|^{-p} become
// u^{-p} (block decay 2^{(1-p) j}), and the divergent cases give flat or
// growing blocks, which is what the audit flags. Blocks double up to
// u = 512, then the measured geometric ratio closes the tail.
template <class T>
T endpoint_integral(const std::function<T(double)>& f, double a, double w, double tol) {
    auto g = [&](double u) {
        double scaled = w * std::exp(-u);
        return f(a + scaled) * scaled;
    };
    T total{};
    T last_blk{};
    double m1 = -1.0, m2 = -1.0;  // last and second-to-last block magnitudes
    double u_lo = 0.0, u_hi = 1.0;
    for (;;) {
        if (w * std::exp(-u_lo) < 1e-305) return total;
        T blk = block_adaptive<T>(g, u_lo, u_hi, tol * 0.1, 0);
        total += blk;
        double mag = std::abs(blk);
        if (!std::isfinite(mag)) {
            // evaluations degenerated (under/overflow of the integrand near
            // the endpoint); acceptable only when the tail was already dead
            if (m1 >= 0.0 && m1 <= tol * (1.0 + std::abs(total - blk))) return total - blk;
            throw DivergentIntegralError("quad: endpoint blocks overflow");
        }
        if (u_lo >= 2.0 && mag <= 1e-2 * tol * (1.0 + std::abs(total))) return total;
        if (u_hi >= 512.0) {
            if (mag <= tol * (1.0 + std::abs(total))) return total;
            double r_last = (m1 > 0.0) ? mag / m1 : kInf;
            if (!(r_last < 0.999)) {
                throw DivergentIntegralError("quad: endpoint blocks are not decaying");
            }
            // close the tail from the drifting block ratio r_k = r_inf - d 2^{-k}
            // (the drift halves per block for the supported integrand classes):
            // sum_m prod_i r_{k+i} = R - eps (R - R2) to first order in the
            // drift, R = r_inf/(1-r_inf), R2 = (r_inf/2)/(1-r_inf/2)
            double r_prev = (m2 > 0.0) ? m1 / m2 : r_last;
            double drift = r_last - r_prev;
            double r_inf = std::clamp(r_last + drift, 0.0, 0.99);
            double eps = (r_inf > 1e-12) ? std::clamp((r_inf - r_last) / r_inf, -1.0, 1.0) : 0.0;
            double R = r_inf / (1.0 - r_inf);
            double R2 = 0.5 * r_inf / (1.0 - 0.5 * r_inf);
            T tail = blk * (R - eps * (R - R2));
            if (std::abs(tail) > 0.2 * (1.0 + std::abs(total))) {
                throw NonConvergenceError("quad: endpoint tail too heavy to close");
            }
            return total + tail;
        }
        m2 = m1;
        m1 = mag;
        last_blk = blk;
        (void)last_blk;
        u_lo = u_hi;
        u_hi = 2.0 * u_hi;
    }
}

template <class T>
T quad_impl(const std::function<T(double)>& f, double a, double b, const QuadOptions& opts) {
    if (!(b > a)) return T{};
    double w = b - a;
    // peel the singular head off by the log substitution, then graded panels
    double head_w = w * std::ldexp(1.0, -8);
    T head = opts.audit_divergence
                 ? endpoint_integral<T>(f, a, head_w, opts.tol)
                 : block_adaptive<T>(f, a, a + head_w, opts.tol, 0);
    double a2 = a + head_w;
    int n = opts.initial_panels;
    T prev = graded_value<T>(f, a2, b, opts.grading, n);
    for (int d = 0; d < opts.max_doublings; ++d) {
        n *= 2;
        T cur = graded_value<T>(f, a2, b, opts.grading, n);
        double diff = std::abs(cur - prev);
        if (diff <= opts.tol * (1.0 + std::abs(cur + head))) return head + cur;
        prev = cur;
    }
    throw NonConvergenceError("quad: panel doubling did not reach tolerance");
}

}  // namespace

double quad(const std::function<double(double)>& f, double a, double b, const QuadOptions& opts) {
    return quad_impl<double>(f, a, b, opts);
}

cxd quad_complex(const std::function<cxd(double)>& f, double a, double b,
                 const QuadOptions& opts) {
    return quad_impl<cxd>(f, a, b, opts);
}

double quad_smooth(const std::function<double(double)>& f, double a, double b, double tol) {
    QuadOptions o;
    o.tol = tol;
    o.grading = 1.0;
    o.audit_divergence = false;
    return quad_impl<double>(f, a, b, o);
}

namespace {

template <class T>
T quad_to_zero_impl(const std::function<T(double)>& f, double S, double tol) {
    if (!(S > 0.0)) return T{};
    return endpoint_integral<T>(f, 0.0, S, tol);
}

}  // namespace

cxd quad_to_zero(const std::function<cxd(double)>& f, double S, double tol) {
    return quad_to_zero_impl<cxd>(f, S, tol);
}

double quad_to_zero_real(const std::function<double(double)>& f, double S, double tol) {
    return quad_to_zero_impl<double>(f, S, tol);
}

cxd second_derivative(const std::function<cxd(double)>& f, double x, double h) {
    if (h <= 0.0) h = std::max(1e-6, 3e-3 * std::fabs(x));
    // 5-point stencil, O(h^4)
    cxd fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
    return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
}

// ---------------------------------------------------------------------------
// shooting
// ---------------------------------------------------------------------------

namespace {

struct FrobeniusData {
    double u = 0.0;
    double du = 0.0;
    double rel_error = 0.0;  // size of the first omitted correction
};

// Two-term Frobenius expansion of the selected solution at x:
//   generic: c1 x^{1/2+nu} (1 + a+ x^2) + c2 x^{1/2-nu} (1 + a- x^2),
//            a+ = -lambda/(4(nu+1)), a- = -lambda/(4(1-nu))
//   log:     c1 x^{1/2} (1 + a x^2) + c2 [x^{1/2} log x (1 + a x^2) + (lambda/4) x^{5/2}],
//            a = -lambda/4
FrobeniusData frobenius_init(const Order& order, double lambda, double c1, double c2, double x) {
    FrobeniusData out;
    double nu = order.nu();
    double x2 = x * x;
    if (order.regime() == Regime::log_case) {
        double a = -lambda / 4.0;
        double s = std::sqrt(x);
        double lx = std::log(x);
        double u1 = s * (1.0 + a * x2);
        double du1 = (0.5 / s) * (1.0 + a * x2) + s * (2.0 * a * x);
        double u2 = s * lx * (1.0 + a * x2) + (lambda / 4.0) * x2 * s;
        double du2 = (0.5 / s * lx + 1.0 / s) * (1.0 + a * x2) + s * lx * 2.0 * a * x +
                     (lambda / 4.0) * 2.5 * x * s;
        out.u = c1 * u1 + c2 * u2;
        out.du = c1 * du1 + c2 * du2;
        double next = std::fabs(lambda * lambda * x2 * x2 / 32.0) * (1.0 + std::fabs(lx));
        out.rel_error = next;
        return out;
    }
    double ap = -lambda / (4.0 * (nu + 1.0));
    double am = -lambda / (4.0 * (1.0 - nu));
    double pp = std::pow(x, 0.5 + nu);
    double pm = std::pow(x, 0.5 - nu);
    double u1 = pp * (1.0 + ap * x2);
    double du1 = (0.5 + nu) * pp / x * (1.0 + ap * x2) + pp * 2.0 * ap * x;
    double u2 = pm * (1.0 + am * x2);
    double du2 = (0.5 - nu) * pm / x * (1.0 + am * x2) + pm * 2.0 * am * x;
    out.u = c1 * u1 + c2 * u2;
    out.du = c1 * du1 + c2 * du2;
    double denom = std::max(1.0 - nu, 0.1);
    out.rel_error = std::fabs(lambda * lambda) * x2 * x2 / (32.0 * denom);
    return out;
}

}  // namespace

void ShootingSpec::validate() const {
    double x = matching_point();
    if (!(x > 0.0 && x < b)) throw std::invalid_argument("ShootingSpec: bad matching point");
    FrobeniusData d = frobenius_init(order, lambda, c1, c2, x);
    if (d.rel_error > 1e-10) {
        throw std::invalid_argument("ShootingSpec: Frobenius truncation too large at x0");
    }
}

ShotResult shoot(const ShootingSpec& spec) {
    namespace ode = boost::numeric::odeint;
    spec.validate();
    double x0 = spec.matching_point();
    FrobeniusData init = frobenius_init(spec.order, spec.lambda, spec.c1, spec.c2, x0);
    double coupling = spec.order.coupling();
    double lambda = spec.lambda;
    auto rhs = [coupling, lambda](const std::array<double, 2>& y, std::array<double, 2>& dy,
                                  double x) {
        dy[0] = y[1];
        dy[1] = (coupling / (x * x) - lambda) * y[0];
    };
    std::array<double, 2> y{init.u, init.du};
    auto stepper = ode::make_controlled<ode::runge_kutta_fehlberg78<std::array<double, 2>>>(
        spec.tol, spec.tol);
    try {
        ode::integrate_adaptive(stepper, rhs, y, x0, spec.b, (spec.b - x0) / 256.0);
    } catch (const std::exception& e) {
        throw EvaluationError(std::string("shoot: integration failed: ") + e.what());
    }
    return {y[0], y[1]};
}

SpectrumResultOracle oracle_eigenvalues(const Order& order, double b, ShootingBoundary boundary,
                                        double h, int count) {
    double c1 = 1.0, c2 = 0.0;
    if (boundary == ShootingBoundary::ratio) {
        if (order.regime() == Regime::log_case) {
            c1 = -h;
            c2 = 1.0;
        } else {
            c1 = 2.0 * order.nu() * h;
            c2 = 1.0;
        }
    }
    auto endpoint = [&](double lambda) {
        ShootingSpec spec;
        spec.order = order;
        spec.b = b;
        spec.lambda = lambda;
        spec.c1 = c1;
        spec.c2 = c2;
        ShotResult r = shoot(spec);
        double scale = std::hypot(r.u, r.du * b);
        return std::pair<double, double>(r.u, scale);
    };

    SpectrumResultOracle out;
    auto bisect = [&](double lo, double hi, double flo) {
        double a = lo, bb = hi, fa = flo;
        for (int it = 0; it < 80; ++it) {
            double m = 0.5 * (a + bb);
            double fm = endpoint(m).first;
            if (fa * fm <= 0.0) {
                bb = m;
            } else {
                a = m;
                fa = fm;
            }
            if (bb - a < 1e-13 * std::max(1.0, std::fabs(bb))) break;
        }
        return 0.5 * (a + bb);
    };

    double f_near_zero = endpoint(-1e-9).first;

    // negative eigenvalue first (at most one; exists only for the ratio
    // boundary when h is below the Krein threshold). The expansion is capped
    // where exp(sqrt(-lambda) b) would overflow the shot.
    if (boundary == ShootingBoundary::ratio) {
        double lambda_cap = -std::pow(500.0 / b, 2.0);
        double prev = -1e-9, fprev = f_near_zero;
        for (double lo = -1.0; lo > lambda_cap; lo *= 4.0) {
            double fl = endpoint(lo).first;
            if (!std::isfinite(fl)) break;
            if (fl * fprev < 0.0) {
                out.eigenvalues.push_back(bisect(lo, prev, fl));
                break;
            }
            prev = lo;
            fprev = fl;
        }
    }

    // positive axis scan: sign changes of u(b; lambda) on the sqrt scale
    double ds = std::numbers::pi / (2.0 * b);  // half of the asymptotic spacing
    double s = ds * 1e-4;
    double f0 = endpoint(s * s).first;
    // a root at (or within 1e-8 of) zero sits between the two seed points
    if (f_near_zero * f0 < 0.0) {
        out.eigenvalues.push_back(bisect(-1e-9, s * s, f_near_zero));
    }
    int guard = 0;
    while (static_cast<int>(out.eigenvalues.size()) < count && guard++ < 100000) {
        double s1 = s + ds;
        double f1 = endpoint(s1 * s1).first;
        if (f0 * f1 < 0.0) {
            out.eigenvalues.push_back(bisect(s * s, s1 * s1, f0));
        }
        s = s1;
        f0 = f1;
    }
    if (static_cast<int>(out.eigenvalues.size()) < count) {
        throw EvaluationError("oracle_eigenvalues: bracketing failed");
    }
    out.eigenvalues.resize(count);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    for (double lam : out.eigenvalues) {
        auto [u, scale] = endpoint(lam);
        out.residuals.push_back(std::fabs(u) / std::max(scale, 1e-300));
    }
    return out;
}

// ---------------------------------------------------------------------------
// finite differences
// ---------------------------------------------------------------------------

namespace {

// Sturm-sequence count of eigenvalues of the symmetric tridiagonal (d, e)
// strictly below sigma.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double sigma) {
    int count = 0;
    double q = d[0] - sigma;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        double denom = (q == 0.0) ? 1e-300 : q;
        q = (d[i] - sigma) - e[i - 1] * e[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

double tridiag_max_eigenvalue(const std::vector<double>& d, const std::vector<double>& e) {
    int m = static_cast<int>(d.size());
    double lo = d[0], hi = d[0];
    for (int i = 0; i < m; ++i) {
        double r = (i > 0 ? std::fabs(e[i - 1]) : 0.0) +
                   (i < m - 1 ? std::fabs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    double a = lo, bb = hi;
    for (int it = 0; it < 120; ++it) {
        double mid = 0.5 * (a + bb);
        if (sturm_count(d, e, mid) >= m) {
            bb = mid;
        } else {
            a = mid;
        }
        if (bb - a < 1e-14 * std::max(1.0, std::fabs(bb))) break;
    }
    return 0.5 * (a + bb);
}

std::vector<double> fd_eigenvalues(const Order& order, double delta, double b, int n, int count) {
    if (!(delta >= 0.0 && delta < b) || n < 8) throw std::invalid_argument("fd_eigenvalues");
    // mesh graded toward delta
    std::vector<double> x(n + 1);
    for (int j = 0; j <= n; ++j) {
        x[j] = delta + (b - delta) * std::pow(static_cast<double>(j) / n, 2.0);
    }
    int m = n - 1;  // interior points
    std::vector<double> d(m), e(m - 1), w(m);
    double coupling = order.coupling();
    for (int i = 1; i <= m; ++i) {
        double hl = x[i] - x[i - 1];
        double hr = x[i + 1] - x[i];
        w[i - 1] = 0.5 * (hl + hr);
        d[i - 1] = (1.0 / hl + 1.0 / hr) / w[i - 1] + coupling / (x[i] * x[i]);
    }
    for (int i = 1; i < m; ++i) {
        double h = x[i + 1] - x[i];
        e[i - 1] = -1.0 / (h * std::sqrt(w[i - 1] * w[i]));
    }
    // Gershgorin bounds
    double lo = d[0], hi = d[0];
    for (int i = 0; i < m; ++i) {
        double r = (i > 0 ? std::fabs(e[i - 1]) : 0.0) + (i < m - 1 ? std::fabs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    std::vector<double> out;
    for (int k = 1; k <= count; ++k) {
        double a = lo, bb = hi;
        for (int it = 0; it < 120; ++it) {
            double mid = 0.5 * (a + bb);
            if (sturm_count(d, e, mid) >= k) {
                bb = mid;
            } else {
                a = mid;
            }
            if (bb - a < 1e-13 * std::max(1.0, std::fabs(bb))) break;
        }
        out.push_back(0.5 * (a + bb));
    }
    return out;
}

}  // namespace besselkit::oracle
