#include "besselkit_cli/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "besselkit/extensions.hpp"
#include "besselkit/forms.hpp"
#include "besselkit/gridfn.hpp"
#include "besselkit/oracle.hpp"
#include "besselkit/triplet.hpp"
#include "besselkit/weyl.hpp"

namespace besselkit_cli {

using namespace besselkit;
using std::numbers::egamma;
using std::numbers::pi;

std::string render_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

double parse_number(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw ConfigError("trailing characters in " + what + ": " + s);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + ": '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_number(item, what));
    }
    if (out.empty()) throw ConfigError(what + " is empty");
    return out;
}

}  // namespace

std::pair<double, double> parse_complex(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw ConfigError("empty complex literal");
    // pure imaginary shorthand
    if (s == "i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    if (s.back() == 'i') {
        // find the split between real and imaginary parts: the last +/- not
        // at the start and not part of an exponent
        std::string body = s.substr(0, s.size() - 1);
        for (std::size_t p = body.size(); p-- > 1;) {
            char c = body[p];
            if ((c == '+' || c == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
                double re = parse_number(body.substr(0, p), "complex real part");
                std::string imtxt = body.substr(p);
                if (imtxt == "+") imtxt = "1";
                if (imtxt == "-") imtxt = "-1";
                return {re, parse_number(imtxt, "complex imaginary part")};
            }
        }
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_number(body, "imaginary part")};
    }
    return {parse_number(s, "real value"), 0.0};
}

std::vector<std::pair<double, double>> parse_grid(const std::string& spec) {
    if (spec.empty()) throw ConfigError("empty grid spec");
    std::string body = spec;
    bool imag_axis = false;
    auto colon = spec.find(':');
    if (colon != std::string::npos &&
        (spec.substr(0, colon) == "re" || spec.substr(0, colon) == "im")) {
        imag_axis = spec.substr(0, colon) == "im";
        body = spec.substr(colon + 1);
    }
    auto dots = body.find("..");
    std::vector<double> values;
    if (dots == std::string::npos) {
        values.push_back(parse_number(body, "grid value"));
    } else {
        double start = parse_number(body.substr(0, dots), "grid start");
        std::string rest = body.substr(dots + 2);
        auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw ConfigError("grid spec needs a count: " + body);
        double stop = parse_number(rest.substr(0, c2), "grid stop");
        int count = static_cast<int>(parse_number(rest.substr(c2 + 1), "grid count"));
        if (count < 1) throw ConfigError("grid count must be positive");
        if (count == 1) {
            values.push_back(start);
        } else {
            for (int i = 0; i < count; ++i) {
                values.push_back(start + (stop - start) * i / (count - 1));
            }
        }
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(values.size());
    for (double v : values) {
        pts.emplace_back(imag_axis ? 0.0 : v, imag_axis ? v : 0.0);
    }
    return pts;
}

void RunConfig::validate() const {
    if (!(nu >= 0.0 && nu < 1.0)) throw ConfigError("nu must lie in [0,1)");
    if (!halfline && !(b > 0.0)) throw ConfigError("b must be positive");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
    if (tol && !(*tol > 0.0)) throw ConfigError("tolerance override must be positive");
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

namespace {

IntervalSpec interval_of(const RunConfig& cfg) {
    return cfg.halfline ? IntervalSpec::halfline() : IntervalSpec::finite(cfg.b);
}

ExtensionParam parse_h(const RunConfig& cfg) {
    if (cfg.h.empty()) throw ConfigError("missing --h");
    if (cfg.h == "inf") return ExtensionParam::infinite();
    if (cfg.h == "krein") {
        double hk = extensions::krein_parameter(Order(cfg.nu), interval_of(cfg));
        if (std::isinf(hk)) return ExtensionParam::infinite();
        return ExtensionParam::value(hk);
    }
    return ExtensionParam::value(parse_number(cfg.h, "--h"));
}

// index-parallel map with deterministic assembly order
template <class Fn>
void parallel_rows(std::size_t count, Fn&& fn) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t workers = std::min<std::size_t>(hw, count);
    if (workers <= 1 || count < 4) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

CommandResult cmd_weyl(const RunConfig& cfg) {
    if (cfg.z_grid.empty()) throw ConfigError("weyl needs --z-grid");
    auto pts = parse_grid(cfg.z_grid);
    Order order(cfg.nu);
    IntervalSpec iv = interval_of(cfg);
    CommandResult res;
    res.table.columns = {"z_re", "z_im", "M_re", "M_im", "flag"};
    res.table.rows.resize(pts.size());
    parallel_rows(pts.size(), [&](std::size_t i) {
        auto [re, im] = pts[i];
        CutComplex z(re, im, im == 0.0 && re > 0.0 ? BoundarySide::above : BoundarySide::none);
        std::vector<std::string> row = {render_double(re), render_double(im), "", "", ""};
        try {
            cxd m = weyl::weyl_function(order, iv, z);
            row[2] = render_double(m.real());
            row[3] = render_double(m.imag());
        } catch (const PoleError& e) {
            row[4] = "pole";
            row[2] = "";
            row[3] = "";
            (void)e;
        }
        res.table.rows[i] = std::move(row);
    });
    return res;
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
    if (cfg.halfline) {
        throw ConfigError("spectrum needs a finite interval (the half-line A_0 has [0,inf))");
    }
    if (cfg.k < 1) throw ConfigError("--k must be positive");
    Order order(cfg.nu);
    auto res = extensions::eigenvalues(order, cfg.b, parse_h(cfg), cfg.k);
    CommandResult out;
    out.table.columns = {"k", "lambda_k", "residual"};
    for (std::size_t i = 0; i < res.eigenvalues.size(); ++i) {
        out.table.rows.push_back({std::to_string(i + 1), render_double(res.eigenvalues[i]),
                                  render_double(res.residuals[i])});
    }
    return out;
}

CommandResult cmd_classify(const RunConfig& cfg) {
    Order order(cfg.nu);
    IntervalSpec iv = interval_of(cfg);
    ExtensionParam h = parse_h(cfg);
    double window = cfg.tol.value_or(1e-3);
    auto rep = extensions::classify_extension(order, iv, h, window);
    double hk = extensions::krein_parameter(order, iv);
    CommandResult out;
    out.table.columns = {"quantity", "value"};
    out.table.rows = {
        {"h", h.is_infinite() ? "inf" : render_double(h.h())},
        {"krein_parameter", render_double(hk)},
        {"tolerance_window", render_double(window)},
        {"is_friedrichs", rep.is_friedrichs ? "true" : "false"},
        {"is_krein", rep.is_krein ? "true" : "false"},
        {"nonnegative", rep.nonnegative ? "true" : "false"},
        {"negative_count", std::to_string(rep.negative_count)},
    };
    return out;
}

CommandResult cmd_density(const RunConfig& cfg) {
    if (!cfg.halfline) throw ConfigError("density is a half-line quantity; pass --halfline");
    if (cfg.t_grid.empty()) throw ConfigError("density needs --t-grid");
    auto pts = parse_grid(cfg.t_grid);
    Order order(cfg.nu);
    weyl::EpsSchedule sched;
    if (cfg.tol) sched.tol = *cfg.tol;
    CommandResult out;
    out.table.columns = {"t", "sigma_prime", "closed_form", "gap"};
    out.table.rows.resize(pts.size());
    parallel_rows(pts.size(), [&](std::size_t i) {
        double t = pts[i].first + pts[i].second;  // either axis spelling
        auto s = weyl::spectral_density(order, t, sched);
        double cf = weyl::density_closed_form(order, t);
        out.table.rows[i] = {render_double(t), render_double(s.sigma_prime), render_double(cf),
                             render_double(s.sigma_prime - cf)};
    });
    return out;
}

CommandResult cmd_converge(const RunConfig& cfg) {
    if (cfg.b_list.empty()) throw ConfigError("converge needs --b-list");
    if (cfg.z_point.empty()) throw ConfigError("converge needs --z");
    auto [re, im] = parse_complex(cfg.z_point);
    if (!(im > 0.0)) throw ConfigError("converge needs Im z > 0");
    auto blist = parse_list(cfg.b_list, "--b-list");
    auto rows = weyl::convergence_table(Order(cfg.nu), CutComplex(re, im), blist);
    CommandResult out;
    out.table.columns = {"b", "gap", "flag"};
    for (const auto& r : rows) {
        out.table.rows.push_back(
            {render_double(r.b), r.flagged ? "" : render_double(r.gap), r.flagged ? "pole" : ""});
    }
    return out;
}

CommandResult cmd_forms(const RunConfig& cfg) {
    Order order(cfg.nu);
    if (cfg.n < 64) throw ConfigError("--n must be at least 64");
    CommandResult out;
    out.table.columns = {"quantity", "value", "reference"};
    double stein = oracle::quad([](double t) { return (1.0 - t) / std::sqrt(t); }, 0.0, 1.0);
    out.table.rows.push_back({"stein_kernel_integral", render_double(stein),
                              render_double(4.0 / 3.0)});
    forms::KernelSlice avg;
    avg.K1 = [](double t) { return t <= 1.0 ? 1.0 : 0.0; };
    avg.support_end = 1.0;
    out.table.rows.push_back({"averaging_kernel_norm",
                              render_double(forms::homogeneous_kernel_norm(avg, 2.0)),
                              render_double(2.0)});
    out.table.rows.push_back({"qi2_discretized_norm",
                              render_double(forms::qi2_matrix_norm(cfg.n, cfg.grading)),
                              render_double(4.0 / 3.0)});
    // form of the canonical test function u = x(b-x) (b = 1 on the half-line)
    double b = cfg.halfline ? 1.0 : cfg.b;
    RealC1Fn u;
    u.support_end = b;
    u.label = "x(b-x)";
    u.f = [b](double x) { return x * (b - x); };
    u.df = [b](double x) { return b - 2.0 * x; };
    double form = forms::form_value(order, interval_of(cfg), u);
    double expected = order.regime() == Regime::log_case
                          ? b * b * b / 4.0
                          : b * b * b * (order.nu() * order.nu() + 0.75) / 3.0;
    out.table.rows.push_back({"form_x_times_b_minus_x", render_double(form),
                              render_double(expected)});
    // Hardy demo u = x on (0,1): lhs 1, rhs 4
    RealC1Fn lin;
    lin.support_end = 1.0;
    lin.f = [](double x) { return x; };
    lin.df = [](double) { return 1.0; };
    auto hd = forms::hardy_check(lin);
    out.table.rows.push_back({"hardy_lhs_linear", render_double(hd.lhs), render_double(1.0)});
    out.table.rows.push_back({"hardy_rhs_linear", render_double(hd.rhs), render_double(4.0)});
    return out;
}

// one verify check row
void check_row(CommandResult& out, const std::string& name, bool pass, double detail) {
    out.table.rows.push_back({name, pass ? "pass" : "FAIL", render_double(detail)});
    out.ok = out.ok && pass;
}

CommandResult cmd_verify(const RunConfig& cfg) {
    (void)cfg;
    CommandResult out;
    out.table.columns = {"check", "status", "detail"};

    // Herglotz and conjugate symmetry
    {
        std::mt19937_64 rng(101);
        std::uniform_real_distribution<double> ure(-4.0, 4.0), uim(0.05, 6.0);
        double min_imag = kInf, worst_sym = 0.0;
        for (double nu : {0.0, 0.3, 0.7}) {
            Order order(nu);
            for (const auto& iv : {IntervalSpec::finite(1.0), IntervalSpec::halfline()}) {
                for (int i = 0; i < 10; ++i) {
                    CutComplex z(ure(rng), uim(rng));
                    cxd m;
                    try {
                        m = weyl::weyl_function(order, iv, z);
                    } catch (const PoleError&) {
                        continue;
                    }
                    min_imag = std::min(min_imag, m.imag());
                    cxd mc = weyl::weyl_function(order, iv, CutComplex(z.re, -z.im));
                    worst_sym = std::max(worst_sym,
                                         std::abs(mc - std::conj(m)) / (1.0 + std::abs(m)));
                }
            }
        }
        check_row(out, "herglotz_upper_half_plane", min_imag > 0.0, min_imag);
        check_row(out, "conjugate_symmetry", worst_sym < 1e-12, worst_sym);
    }

    // boundary limits of M
    {
        double worst = 0.0;
        for (double b : {0.5, 1.0, 2.0}) {
            cxd m = weyl::weyl_finite(Order(0.0), b, CutComplex(-1e-9, 0.0));
            worst = std::max(worst, std::fabs(m.real() - std::log(b)));
        }
        check_row(out, "log_case_M_at_zero_is_log_b", worst < 1e-6, worst);
        cxd mh = weyl::weyl_halfline(Order(0.3), CutComplex(-1e-40, 0.0));
        check_row(out, "halfline_M_at_zero_vanishes", std::abs(mh) < 1e-10, std::abs(mh));
    }

    // closed-form boundary values of a deficiency element
    {
        Order order(0.3);
        CutComplex z(0.4, 0.9);
        auto el = triplet::deficiency_element(order, IntervalSpec::finite(1.0), z);
        auto bv = triplet::boundary_values(el.as_c1(), order, 1e-9);
        cxd m = bv.g1 / bv.g0;
        cxd want = weyl::weyl_finite(order, 1.0, z);
        double err = std::abs(m - want) / (1.0 + std::abs(want));
        check_row(out, "triplet_ratio_matches_weyl", err < 1e-7, err);
    }

    // Green identity off-diagonal value 2 nu
    {
        Order order(0.3);
        C2Fn plus = singular_span_fn(0.8);
        C2Fn minus = singular_span_fn(0.2);
        double r = triplet::green_identity_residual(plus, minus, order, IntervalSpec::finite(1.0));
        check_row(out, "green_identity_residual", r < 1e-8, r);
    }

    // Wronskian recurrence sample
    {
        Order order(0.45);
        cxd sz = special::cut_sqrt(CutComplex(0.7, 1.1));
        double x = 0.8;
        special::C1Fn f;
        f.eval = [sz, &order](double xx) -> std::pair<cxd, cxd> {
            cxd t = xx * sz;
            cxd g = special::bessel_j(order.nu(), t);
            cxd gd = special::bessel_j_deriv(order.nu(), t);
            double s = std::sqrt(xx);
            return {s * g, 0.5 / s * g + s * sz * gd};
        };
        cxd lhs = special::bracket(f, special::power_fn(0.5 + order.nu()), x);
        cxd rhs = sz * std::pow(x, 0.5 + order.nu()) * std::sqrt(x) *
                  special::bessel_j(order.nu() + 1.0, x * sz);
        double err = std::abs(lhs - rhs);
        check_row(out, "wronskian_recurrence", err < 1e-8, err);
    }

    // secular vs shooting eigenvalues
    {
        auto sec = extensions::eigenvalues(Order(0.25), 1.0, ExtensionParam::infinite(), 3);
        auto orc = oracle::oracle_eigenvalues(Order(0.25), 1.0,
                                              oracle::ShootingBoundary::friedrichs, 0.0, 3);
        double worst = 0.0;
        for (int k = 0; k < 3; ++k) {
            worst = std::max(worst, std::fabs(sec.eigenvalues[k] - orc.eigenvalues[k]) /
                                        sec.eigenvalues[k]);
        }
        check_row(out, "secular_vs_shooting", worst < 1e-6, worst);
    }

    // Krein zero mode
    {
        Order order(0.3);
        double hk = extensions::krein_parameter(order, IntervalSpec::finite(1.0));
        auto res = extensions::eigenvalues(order, 1.0, ExtensionParam::value(hk), 1);
        check_row(out, "krein_zero_mode", std::fabs(res.eigenvalues[0]) < 1e-8,
                  std::fabs(res.eigenvalues[0]));
    }

    // Fatou density against the closed form
    {
        auto s = weyl::spectral_density(Order(0.4), 2.0);
        double want = weyl::density_closed_form(Order(0.4), 2.0);
        double err = std::fabs(s.sigma_prime - want);
        check_row(out, "fatou_density_generic", err < 1e-4, err);
        auto s0 = weyl::spectral_density(Order(0.0), 1.0);
        check_row(out, "fatou_density_log_case", std::fabs(s0.sigma_prime - 0.5) < 1e-6,
                  std::fabs(s0.sigma_prime - 0.5));
    }

    // interval -> half-line convergence
    {
        auto rows = weyl::convergence_table(Order(0.3), CutComplex(0.0, 1.0), {5.0, 10.0, 20.0});
        bool dec = rows[0].gap > rows[1].gap && rows[1].gap > rows[2].gap;
        check_row(out, "weyl_convergence_decreasing", dec && rows[2].gap < 1e-3, rows[2].gap);
    }

    // Stein constant and the discretized norm bound
    {
        double stein = oracle::quad([](double t) { return (1.0 - t) / std::sqrt(t); }, 0.0, 1.0);
        check_row(out, "stein_integral_4_3", std::fabs(stein - 4.0 / 3.0) < 1e-10,
                  std::fabs(stein - 4.0 / 3.0));
        double q = forms::qi2_matrix_norm(512, 3.0);
        check_row(out, "qi2_norm_bound", q <= 4.0 / 3.0 + 1e-6, q);
    }

    // Hardy sweep
    {
        std::mt19937_64 rng(202);
        std::uniform_real_distribution<double> uc(-2.0, 2.0);
        int held = 0;
        const int total = 50;
        for (int i = 0; i < total; ++i) {
            double a = uc(rng), bq = uc(rng), c = uc(rng);
            RealC1Fn u;
            u.support_end = 1.0;
            u.f = [a, bq, c](double x) { return x * (1.0 - x) * (a + bq * x + c * x * x); };
            u.df = [a, bq, c](double x) {
                double p = a + bq * x + c * x * x, dp = bq + 2.0 * c * x;
                return (1.0 - 2.0 * x) * p + x * (1.0 - x) * dp;
            };
            if (forms::hardy_check(u, forms::FormOptions{1e-9}).holds) ++held;
        }
        check_row(out, "hardy_sweep", held == total, static_cast<double>(held));
    }

    // ------------------------------------------------------------------
    // documented discrepancies with the printed constants (reported, never
    // silently corrected; they do not fail the run)
    // ------------------------------------------------------------------
    {
        // spectral density: the printed Sigma(t) = t^{nu+1}/(2^{2nu+1} G^2(1+nu))
        // implies an extra factor (nu+1) in the density relative to the Fatou
        // boundary value, which the computation reproduces without it
        double nu = 0.4, t = 2.0;
        auto s = weyl::spectral_density(Order(nu), t);
        double printed_density = (nu + 1.0) * weyl::density_closed_form(Order(nu), t);
        out.findings.push_back({"spectral-density-factor", s.sigma_prime, printed_density,
                                "measured Fatou density lacks the printed (nu+1) factor"});
        // log-case representation constant: fitted log 2 - gamma vs the
        // printed log 2 - gamma - pi/4
        auto fit = weyl::nevanlinna_reconstruct(Order(0.0), CutComplex(0.0, 1.0));
        out.findings.push_back({"representation-constant-log-case", fit.fitted_constant,
                                fit.paper_constant,
                                "fitted constant exceeds the printed one by pi/4"});
        // generic-order representation constant agrees with the printed
        // -C_nu cos(nu pi/2); reported as a confirmation
        auto fit4 = weyl::nevanlinna_reconstruct(Order(0.4), CutComplex(0.0, 1.0));
        out.findings.push_back({"representation-constant-generic", fit4.fitted_constant,
                                fit4.paper_constant,
                                "printed constant confirmed within quadrature error"});
        // the log-weight display integral is positive, not the printed negative
        double alpha = 0.5;
        double restricted = oracle::quad_to_zero_real(
            [alpha](double x) {
                double l = -std::log(x);
                return alpha * alpha * std::pow(l, -2.0 * alpha - 2.0) / x;
            },
            0.5, 1e-11);
        double printed = -alpha * alpha * std::pow(2.0, 2.0 * alpha + 1.0) /
                         (2.0 * alpha + 1.0);
        out.findings.push_back({"form-display-integral-sign", restricted, printed,
                                "the squared integrand makes the display integral positive"});
    }

    for (const auto& f : out.findings) {
        out.table.rows.push_back({"finding:" + f.id, "reported",
                                  render_double(f.computed) + " vs " + render_double(f.printed)});
    }
    return out;
}

}  // namespace

CommandResult run_command(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.command == "weyl") return cmd_weyl(cfg);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "density") return cmd_density(cfg);
    if (cfg.command == "converge") return cmd_converge(cfg);
    if (cfg.command == "forms") return cmd_forms(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    throw ConfigError("unknown command: " + cfg.command);
}

std::string emit_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += table.columns[c];
        out += (c + 1 < table.columns.size()) ? ',' : '\n';
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            out += (c + 1 < row.size()) ? ',' : '\n';
        }
    }
    return out;
}

Table parse_csv(const std::string& text) {
    Table t;
    std::stringstream ss(text);
    std::string line;
    bool header = true;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (header) {
            t.columns = std::move(cells);
            header = false;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

nlohmann::json emit_json(const RunConfig& cfg, const CommandResult& result) {
    nlohmann::json j;
    j["config"] = {{"command", cfg.command}, {"nu", cfg.nu},
                   {"interval", cfg.halfline ? "halfline" : "finite"},
                   {"format", cfg.format}};
    if (!cfg.halfline) j["config"]["b"] = cfg.b;
    if (!cfg.h.empty()) j["config"]["h"] = cfg.h;
    if (!cfg.z_grid.empty()) j["config"]["z_grid"] = cfg.z_grid;
    if (!cfg.t_grid.empty()) j["config"]["t_grid"] = cfg.t_grid;
    if (!cfg.z_point.empty()) j["config"]["z"] = cfg.z_point;
    if (!cfg.b_list.empty()) j["config"]["b_list"] = cfg.b_list;
    if (cfg.tol) j["config"]["tol"] = *cfg.tol;

    j["rows"] = nlohmann::json::array();
    for (const auto& row : result.table.rows) {
        nlohmann::json jr;
        for (std::size_t c = 0; c < row.size() && c < result.table.columns.size(); ++c) {
            jr[result.table.columns[c]] = row[c];
        }
        j["rows"].push_back(jr);
    }
    j["findings"] = nlohmann::json::array();
    for (const auto& f : result.findings) {
        j["findings"].push_back({{"id", f.id},
                                 {"computed", f.computed},
                                 {"printed", f.printed},
                                 {"note", f.note}});
    }
    return j;
}

int run_cli(const RunConfig& cfg) {
    CommandResult result;
    try {
        result = run_command(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    std::string rendered;
    if (cfg.format == "json") {
        rendered = emit_json(cfg, result).dump(2);
        rendered += "\n";
    } else {
        rendered = emit_csv(result.table);
    }
    if (cfg.output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return 2;
        }
        f << rendered;
    }
    return result.ok ? 0 : 3;
}

}  // namespace besselkit_cli
