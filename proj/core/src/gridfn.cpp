#include "besselkit/gridfn.hpp"

#include <algorithm>
#include <cmath>

namespace besselkit {

// cubic blend 1 - 3s^2 + 2s^3 on [1/2, 3/4]
double cutoff_xi(double x) {
    if (x <= kCutoffKnotA) return 1.0;
    if (x >= kCutoffKnotB) return 0.0;
    double s = (x - kCutoffKnotA) / (kCutoffKnotB - kCutoffKnotA);
    return 1.0 - s * s * (3.0 - 2.0 * s);
}

double cutoff_xi_d1(double x) {
    if (x <= kCutoffKnotA || x >= kCutoffKnotB) return 0.0;
    double inv = 1.0 / (kCutoffKnotB - kCutoffKnotA);
    double s = (x - kCutoffKnotA) * inv;
    return (-6.0 * s + 6.0 * s * s) * inv;
}

double cutoff_xi_d2(double x) {
    if (x <= kCutoffKnotA || x >= kCutoffKnotB) return 0.0;
    double inv = 1.0 / (kCutoffKnotB - kCutoffKnotA);
    double s = (x - kCutoffKnotA) * inv;
    return (-6.0 + 12.0 * s) * inv * inv;
}

C2Fn singular_span_fn(double p, bool with_log) {
    C2Fn fn;
    fn.support_end = kCutoffKnotB;
    fn.knots = {kCutoffKnotA, kCutoffKnotB};
    fn.label = with_log ? "x^" + std::to_string(p) + " log(x) xi" : "x^" + std::to_string(p) + " xi";
    fn.eval = [p, with_log](double x) -> std::array<cxd, 3> {
        double xi = cutoff_xi(x), xi1 = cutoff_xi_d1(x), xi2 = cutoff_xi_d2(x);
        double w, w1, w2;
        double xp = std::pow(x, p);
        if (!with_log) {
            w = xp;
            w1 = p * xp / x;
            w2 = p * (p - 1.0) * xp / (x * x);
        } else {
            double lx = std::log(x);
            w = xp * lx;
            w1 = xp / x * (p * lx + 1.0);
            w2 = xp / (x * x) * (p * (p - 1.0) * lx + 2.0 * p - 1.0);
        }
        double f = w * xi;
        double f1 = w1 * xi + w * xi1;
        double f2 = w2 * xi + 2.0 * w1 * xi1 + w * xi2;
        return {cxd(f, 0.0), cxd(f1, 0.0), cxd(f2, 0.0)};
    };
    return fn;
}

C2Fn bump_fn(double a, double b) {
    C2Fn fn;
    fn.support_end = b;
    fn.knots = {a, b};
    fn.label = "bump[" + std::to_string(a) + "," + std::to_string(b) + "]";
    double mid = 0.5 * (a + b);
    double norm = std::pow((mid - a) * (b - mid), 3.0);
    fn.eval = [a, b, norm](double x) -> std::array<cxd, 3> {
        if (x <= a || x >= b) return {cxd(0.0), cxd(0.0), cxd(0.0)};
        double u = (x - a) * (b - x);
        double u1 = (b - x) - (x - a);
        double u2 = -2.0;
        double f = u * u * u / norm;
        double f1 = 3.0 * u * u * u1 / norm;
        double f2 = (6.0 * u * u1 * u1 + 3.0 * u * u * u2) / norm;
        return {cxd(f, 0.0), cxd(f1, 0.0), cxd(f2, 0.0)};
    };
    return fn;
}

C2Fn tail_fn(double c) {
    C2Fn fn;
    fn.support_end = c;
    fn.knots = {c};
    fn.label = "tail x^2(c-x)^2";
    fn.eval = [c](double x) -> std::array<cxd, 3> {
        if (x >= c) return {cxd(0.0), cxd(0.0), cxd(0.0)};
        double d = c - x;
        double f = x * x * d * d;
        double f1 = 2.0 * x * d * d - 2.0 * x * x * d;
        double f2 = 2.0 * d * d - 8.0 * x * d + 2.0 * x * x;
        return {cxd(f, 0.0), cxd(f1, 0.0), cxd(f2, 0.0)};
    };
    return fn;
}

// ---------------------------------------------------------------------------
// GridFunction
// ---------------------------------------------------------------------------

GridFunction::GridFunction(std::vector<double> nodes, std::vector<double> values,
                           std::vector<double> derivatives, double grading)
    : nodes_(std::move(nodes)), values_(std::move(values)), derivs_(std::move(derivatives)),
      grading_(grading) {
    if (nodes_.size() < 3 || nodes_.size() != values_.size()) {
        throw std::invalid_argument("GridFunction: need >= 3 nodes with matching values");
    }
    if (!(nodes_.front() > 0.0)) throw std::invalid_argument("GridFunction: nodes must be > 0");
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (!(nodes_[i] > nodes_[i - 1])) {
            throw std::invalid_argument("GridFunction: nodes must strictly increase");
        }
    }
    if (derivs_.empty()) {
        // 3-point parabolic derivative estimates
        derivs_.resize(nodes_.size());
        auto slope3 = [&](std::size_t i0, std::size_t i1, std::size_t i2, double at) {
            double x0 = nodes_[i0], x1 = nodes_[i1], x2 = nodes_[i2];
            double y0 = values_[i0], y1 = values_[i1], y2 = values_[i2];
            double d01 = (y1 - y0) / (x1 - x0);
            double d12 = (y2 - y1) / (x2 - x1);
            double c = (d12 - d01) / (x2 - x0);
            return d01 + c * (2.0 * at - x0 - x1);
        };
        std::size_t n = nodes_.size();
        derivs_[0] = slope3(0, 1, 2, nodes_[0]);
        for (std::size_t i = 1; i + 1 < n; ++i) derivs_[i] = slope3(i - 1, i, i + 1, nodes_[i]);
        derivs_[n - 1] = slope3(n - 3, n - 2, n - 1, nodes_[n - 1]);
    } else if (derivs_.size() != nodes_.size()) {
        throw std::invalid_argument("GridFunction: derivative count mismatch");
    }
}

GridFunction GridFunction::sample(const std::function<double(double)>& f,
                                  const std::function<double(double)>& df, double X, int n,
                                  double grading) {
    std::vector<double> nodes(n), vals(n), ders;
    for (int j = 1; j <= n; ++j) {
        nodes[j - 1] = X * std::pow(static_cast<double>(j) / n, grading);
    }
    for (int j = 0; j < n; ++j) vals[j] = f(nodes[j]);
    if (df) {
        ders.resize(n);
        for (int j = 0; j < n; ++j) ders[j] = df(nodes[j]);
    }
    return GridFunction(std::move(nodes), std::move(vals), std::move(ders), grading);
}

std::size_t GridFunction::cell_of(double x) const {
    if (x <= nodes_.front()) return 0;
    if (x >= nodes_.back()) return nodes_.size() - 2;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

double GridFunction::operator()(double x) const {
    std::size_t i = cell_of(x);
    double h = nodes_[i + 1] - nodes_[i];
    double s = (x - nodes_[i]) / h;
    double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    double h10 = s * (1.0 - s) * (1.0 - s);
    double h01 = s * s * (3.0 - 2.0 * s);
    double h11 = s * s * (s - 1.0);
    return h00 * values_[i] + h10 * h * derivs_[i] + h01 * values_[i + 1] +
           h11 * h * derivs_[i + 1];
}

double GridFunction::derivative(double x) const {
    std::size_t i = cell_of(x);
    double h = nodes_[i + 1] - nodes_[i];
    double s = (x - nodes_[i]) / h;
    double d00 = 6.0 * s * (s - 1.0) / h;
    double d10 = (1.0 - s) * (1.0 - 3.0 * s);
    double d01 = -6.0 * s * (s - 1.0) / h;
    double d11 = s * (3.0 * s - 2.0);
    return d00 * values_[i] + d10 * derivs_[i] + d01 * values_[i + 1] + d11 * derivs_[i + 1];
}

RealC1Fn GridFunction::as_c1(std::string label) const {
    RealC1Fn out;
    GridFunction copy = *this;
    out.f = [copy](double x) { return copy(x); };
    GridFunction copy2 = *this;
    out.df = [copy2](double x) { return copy2.derivative(x); };
    out.support_end = support_end();
    out.label = std::move(label);
    return out;
}

}  // namespace besselkit
