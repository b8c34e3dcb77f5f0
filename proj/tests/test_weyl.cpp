#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "besselkit/triplet.hpp"
#include "besselkit/weyl.hpp"

using namespace besselkit;
using namespace besselkit::weyl;
using std::numbers::egamma;
using std::numbers::pi;

namespace {
cxd cot(cxd w) { return std::cos(w) / std::sin(w); }
}  // namespace

TEST_CASE("regular case: M_{1/2,b}(z) = -sqrt(z) cot(b sqrt z)") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    Order half(0.5);
    for (int i = 0; i < 20; ++i) {
        CutComplex z(u(rng), u(rng) + 3.2);
        cxd sz = special::cut_sqrt(z);
        for (double b : {1.0, 3.1415926}) {
            cxd want = -sz * cot(b * sz);
            cxd got = weyl_finite(half, b, z);
            CHECK(std::abs(got - want) < 1e-10 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("half-line closed forms") {
    Order half(0.5);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.1, 4.0);
    for (int i = 0; i < 10; ++i) {
        CutComplex z(u(rng) - 2.0, u(rng));
        cxd sz = special::cut_sqrt(z);
        CHECK(std::abs(weyl_halfline(half, z) - cxd(0.0, 1.0) * sz) < 1e-12 * (1.0 + std::abs(sz)));
    }
    // M_{0,inf}(i) = log 2 - gamma + i pi/4
    Order zero(0.0);
    cxd want(std::log(2.0) - egamma, pi / 4.0);
    CHECK(std::abs(weyl_halfline(zero, CutComplex(0.0, 1.0)) - want) < 1e-14);
    // branch guard on the cut
    CHECK_THROWS_AS(weyl_halfline(zero, CutComplex(2.0, 0.0)), BranchError);
    CHECK_NOTHROW(weyl_halfline(zero, CutComplex(2.0, 0.0, BoundarySide::above)));
}

TEST_CASE("weyl limits: closed forms and numerical confirmation") {
    for (double b : {0.5, 1.0, 2.0}) {
        auto lim = weyl_limits(Order(0.0), IntervalSpec::finite(b));
        CHECK(lim.m_zero == doctest::Approx(std::log(b)).epsilon(1e-15));
        CHECK(std::isinf(lim.m_minus_infinity));
        // numerical: M_{0,b}(-x) -> log b as x -> 0-
        cxd m = weyl_finite(Order(0.0), b, CutComplex(-1e-9, 0.0));
        CHECK(std::fabs(m.real() - std::log(b)) < 1e-6);
        CHECK(std::fabs(m.imag()) < 1e-10);
    }
    for (double nu : {0.1, 0.3, 0.7}) {
        auto lim = weyl_limits(Order(nu), IntervalSpec::halfline());
        CHECK(lim.m_zero == 0.0);
        cxd m = weyl_halfline(Order(nu), CutComplex(-1e-110, 0.0));
        CHECK(std::abs(m) < 1e-10);  // -> 0 like x^nu, so the probe sits very deep
        // finite interval: M(0-) = -b^{-2nu}/(2nu)
        auto limf = weyl_limits(Order(nu), IntervalSpec::finite(1.7));
        CHECK(limf.m_zero ==
              doctest::Approx(-std::pow(1.7, -2.0 * nu) / (2.0 * nu)).epsilon(1e-14));
        cxd mf = weyl_finite(Order(nu), 1.7, CutComplex(-1e-11, 0.0));
        CHECK(std::fabs(mf.real() - limf.m_zero) < 1e-7);
    }
    // log half-line: Krein threshold escapes to +infinity
    CHECK(std::isinf(weyl_limits(Order(0.0), IntervalSpec::halfline()).m_zero));
    CHECK(weyl_limits(Order(0.0), IntervalSpec::halfline()).m_zero > 0.0);
}

TEST_CASE("Herglotz, conjugate symmetry, realness, monotonicity") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ure(-6.0, 6.0), uim(0.01, 8.0);
    std::vector<Order> orders = {Order(0.0), Order(0.1), Order(0.3), Order(0.5), Order(0.7),
                                 Order(0.9)};
    std::vector<IntervalSpec> ivs = {IntervalSpec::finite(1.0), IntervalSpec::halfline()};
    int tested = 0;
    for (const auto& order : orders) {
        for (const auto& iv : ivs) {
            for (int i = 0; i < 17; ++i) {
                CutComplex z(ure(rng), uim(rng));
                cxd m;
                try {
                    m = weyl_function(order, iv, z);
                } catch (const PoleError&) {
                    continue;
                }
                CHECK(m.imag() > 0.0);
                // M(conj z) = conj M(z)
                cxd mc = weyl_function(order, iv, CutComplex(z.re, -z.im));
                CHECK(std::abs(mc - std::conj(m)) < 1e-12 * (1.0 + std::abs(m)));
                ++tested;
            }
        }
    }
    CHECK(tested >= 200);

    // realness and strict monotonicity below the spectrum
    for (const auto& order : orders) {
        double prev = -kInf;
        for (int k = 50; k >= 1; --k) {
            double x = 0.2 * k;  // lambda = -x < 0
            cxd m = weyl_finite(order, 1.0, CutComplex(-x, 0.0));
            CHECK(std::fabs(m.imag()) < 1e-10 * (1.0 + std::abs(m)));
            CHECK(m.real() > prev);
            prev = m.real();
        }
    }
}

TEST_CASE("M = Gamma1 f_z / Gamma0 f_z against the triplet module") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.2, 2.0);
    int n = 0;
    for (double nu : {0.0, 0.25, 0.6, 0.85}) {
        Order order(nu);
        for (const auto& iv : {IntervalSpec::finite(1.3), IntervalSpec::halfline()}) {
            for (int i = 0; i < 3; ++i) {
                CutComplex z(u(rng) - 1.0, u(rng));
                auto el = triplet::deficiency_element(order, iv, z);
                auto bv = triplet::boundary_values(el.as_c1(), order, 1e-9);
                cxd m_triplet = bv.g1 / bv.g0;
                cxd m_closed = weyl_function(order, iv, z);
                CHECK_MESSAGE(std::abs(m_triplet - m_closed) < 1e-7 * (1.0 + std::abs(m_closed)),
                              "nu=", nu, " finite=", iv.is_finite());
                ++n;
            }
        }
    }
    CHECK(n == 24);
}

TEST_CASE("pole detection carries a nearest-eigenvalue estimate") {
    Order order(0.25);
    auto zeros = special::bessel_j_zeros(0.25, 2);
    double lam_pole = zeros[0] * zeros[0];
    try {
        weyl_finite(order, 1.0, CutComplex(lam_pole, 0.0, BoundarySide::above));
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(std::fabs(e.nearest_eigenvalue - lam_pole) < 1e-6 * lam_pole);
    }
}

TEST_CASE("spectral density: Fatou limits match the closed form") {
    for (double nu : {0.2, 0.4, 0.6}) {
        Order order(nu);
        for (double t : {0.5, 1.0, 2.0}) {
            auto s = spectral_density(order, t);
            double want = density_closed_form(order, t);
            CHECK_MESSAGE(std::fabs(s.sigma_prime - want) < 1e-6 * (1.0 + want), "nu=", nu,
                          " t=", t);
            CHECK(s.eps_used.size() == 7);
        }
    }
    // log case: density 1/2
    auto s0 = spectral_density(Order(0.0), 1.7);
    CHECK(std::fabs(s0.sigma_prime - 0.5) < 1e-8);
    // below the spectrum the density vanishes
    for (double nu : {0.0, 0.4}) {
        auto sn = spectral_density(Order(nu), -2.0);
        CHECK(sn.sigma_prime == 0.0);
    }
    // closed-form spot value
    CHECK(std::fabs(density_closed_form(Order(0.4), 2.0) - 0.48134056482331430) < 1e-14);
}

TEST_CASE("Nevanlinna reconstruction: fitted constants") {
    // log case: fitted A_0 = log 2 - gamma; the printed constant is pi/4 lower
    Order zero(0.0);
    auto fit = nevanlinna_reconstruct(zero, CutComplex(0.0, 1.0));
    CHECK(std::fabs(fit.fitted_constant - (std::log(2.0) - egamma)) < 1e-5);
    CHECK(std::fabs(fit.paper_constant - (std::log(2.0) - egamma - pi / 4.0)) < 1e-14);
    CHECK(std::fabs(fit.discrepancy - pi / 4.0) < 1e-5);

    // the fitted constant does not depend on z
    std::vector<CutComplex> zs = {CutComplex(0.0, 1.0), CutComplex(0.0, 2.0),
                                  CutComplex(1.0, 1.0)};
    std::vector<double> fits;
    for (const auto& z : zs) fits.push_back(nevanlinna_reconstruct(zero, z).fitted_constant);
    for (double f : fits) CHECK(std::fabs(f - fits.front()) < 1e-5);

    // generic order: the printed A_nu = -C_nu cos(nu pi/2) is confirmed
    for (double nu : {0.2, 0.4, 0.6, 0.8}) {
        auto fitn = nevanlinna_reconstruct(Order(nu), CutComplex(0.0, 1.0));
        CHECK_MESSAGE(std::fabs(fitn.discrepancy) < 1e-5, "nu=", nu,
                      " discrepancy=", fitn.discrepancy);
        CHECK(fitn.quadrature_error < 1e-5);
    }
}

TEST_CASE("convergence of the interval Weyl function to the half-line one") {
    std::vector<double> blist = {5.0, 10.0, 20.0};
    for (double nu : {0.0, 0.3, 0.5, 0.8}) {
        auto rows = convergence_table(Order(nu), CutComplex(0.0, 1.0), blist);
        REQUIRE(rows.size() == 3);
        for (const auto& r : rows) CHECK(!r.flagged);
        CHECK(rows[0].gap > rows[1].gap);
        CHECK(rows[1].gap > rows[2].gap);
        CHECK(rows[2].gap < 1e-3);
    }
    // nu = 1/2: gap has the closed form |−sqrt(i) cot(b sqrt(i)) − i sqrt(i)|
    auto rows = convergence_table(Order(0.5), CutComplex(0.0, 1.0), blist);
    cxd si = special::cut_sqrt(CutComplex(0.0, 1.0));
    for (std::size_t k = 0; k < blist.size(); ++k) {
        cxd want = -si * cot(blist[k] * si) - cxd(0.0, 1.0) * si;
        CHECK(std::fabs(rows[k].gap - std::abs(want)) < 1e-12 + 1e-8 * std::abs(want));
    }
    // decay rate ~ e^{-sqrt(2) b}
    double rate = std::log(rows[0].gap / rows[2].gap) / (blist[2] - blist[0]);
    CHECK(std::fabs(rate - std::sqrt(2.0)) < 0.05);
}
