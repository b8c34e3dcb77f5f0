#pragma once

// Compensated double-double arithmetic used internally by the Bessel series.
// The Taylor sums cancel roughly e^{2|Im t|} near the series/asymptotic
// switchover, so terms and prefactors are carried in ~32 significant digits
// and rounded to double only at the public API boundary.

#include <cmath>
#include <complex>
#include <cstdlib>

namespace besselkit::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd renorm(double hi, double lo) { return quick_two_sum(hi, lo); }

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_add(dd a, double b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }
inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }
inline dd dd_sub(dd a, double b) { return dd_add(a, -b); }

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, q3);
}

inline dd dd_div(double a, double b) { return dd_div(dd{a, 0.0}, dd{b, 0.0}); }
inline dd dd_div(dd a, double b) { return dd_div(a, dd{b, 0.0}); }

inline double to_double(dd a) { return a.hi + a.lo; }

// constants (hi/lo split of the 34-digit values)
inline constexpr dd dd_pi{3.1415926535897931, 1.2246467991473531772e-16};
inline constexpr dd dd_pi_half{1.5707963267948966, 6.1232339957367658861e-17};
inline constexpr dd dd_ln2{0.69314718055994529, 2.3190468138462996155e-17};
inline constexpr dd dd_egamma{0.57721566490153287, -4.9429151524306451002e-18};
inline constexpr dd dd_two_over_pi{0.63661977236758138, -3.9357353350364973908e-17};

// exp on |x| <~ 700; reduced by ln 2, Taylor on the remainder
inline dd dd_exp(dd x) {
    if (x.hi > 709.0) return {HUGE_VAL, 0.0};
    if (x.hi < -746.0) return {0.0, 0.0};
    double m = std::nearbyint(x.hi / dd_ln2.hi);
    dd r = dd_sub(x, dd_mul(dd_ln2, m));
    dd sum{1.0, 0.0};
    dd term{1.0, 0.0};
    for (int k = 1; k <= 24; ++k) {
        term = dd_mul(term, r);
        term = dd_div(term, static_cast<double>(k));
        sum = dd_add(sum, term);
        if (std::fabs(term.hi) < 1e-36 * std::fabs(sum.hi)) break;
    }
    double scale = std::ldexp(1.0, static_cast<int>(m));
    return {sum.hi * scale, sum.lo * scale};
}

// natural log of a positive value; one Newton correction of the double log
inline dd dd_log(dd a) {
    double y0 = std::log(a.hi);
    dd w = dd_mul(a, dd_exp(dd{-y0, 0.0}));  // = 1 + delta, |delta| ~ 1e-16
    dd delta = dd_sub(w, 1.0);
    dd corr = dd_sub(delta, dd_mul(dd_mul(delta, delta), 0.5));
    return dd_add(corr, y0);
}

inline dd dd_log(double a) { return dd_log(dd{a, 0.0}); }

// sin/cos for |x| up to a few hundred; quadrant reduction by pi/2
inline void dd_sincos(dd x, dd& s, dd& c) {
    double m = std::nearbyint(x.hi / dd_pi_half.hi);
    dd r = dd_sub(x, dd_mul(dd_pi_half, m));
    // Taylor on |r| <= pi/4 + eps
    dd r2 = dd_mul(r, r);
    dd sr = r, tr = r;
    for (int k = 1; k <= 14; ++k) {
        tr = dd_mul(tr, r2);
        tr = dd_div(tr, -static_cast<double>((2 * k) * (2 * k + 1)));
        sr = dd_add(sr, tr);
    }
    dd cr{1.0, 0.0}, tc{1.0, 0.0};
    for (int k = 1; k <= 14; ++k) {
        tc = dd_mul(tc, r2);
        tc = dd_div(tc, -static_cast<double>((2 * k - 1) * (2 * k)));
        cr = dd_add(cr, tc);
    }
    switch (static_cast<long long>(m) & 3LL) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = dd_neg(sr); break;
        case 2: s = dd_neg(sr); c = dd_neg(cr); break;
        default: s = dd_neg(cr); c = sr; break;
    }
}

// 1/Gamma(1+x) on |x| <= 0.5 (Taylor), extended to 1+x in (-1.5, 3.5) by the
// recurrence 1/Gamma(w+1) = (1/Gamma(w))/w. Exact zeros at 1+x = 0, -1.
inline dd dd_rgamma_one_plus(dd x) {
    static constexpr dd coeff[] = {
        {1.0000000000000000, 0.0},
        {0.57721566490153287, -4.9429151524306451002e-18},
        {-0.65587807152025390, 2.1371851970685359835e-17},
        {-0.042002635034095237, 1.4920306285650504508e-18},
        {0.16653861138229148, 1.0189144546842025353e-17},
        {-0.042197734555544333, -3.3579992682480135663e-18},
        {-0.0096219715278769730, -5.3000313688302622575e-19},
        {0.0072189432466630999, -3.6006537063394283624e-19},
        {-0.0011651675918590652, 5.6599478538809804575e-20},
        {-0.00021524167411495098, 2.3758686180729363156e-21},
        {0.00012805028238811620, -9.3591244991989677827e-21},
        {-2.0134854780788239e-5, 3.0488773972037384488e-23},
        {-1.2504934821426706e-6, -2.6621409227189797694e-23},
        {1.1330272319816959e-6, -4.6222352121048686497e-23},
        {-2.0563384169776071e-7, -3.0061601618645135055e-24},
        {6.1160951044814161e-9, -2.6934582981713061417e-25},
        {5.0020076444692229e-9, -1.5381236140567507412e-26},
        {-1.1812745704870200e-9, -1.0052356155716207237e-25},
        {1.0434267116911005e-10, -2.9298419956825033888e-27},
        {7.7822634399050708e-12, 4.3972555565958475982e-28},
        {-3.6968056186422060e-12, 2.7050034921703886112e-28},
        {5.1003702874544758e-13, 2.2530014610858780221e-29},
        {-2.0583260535665066e-14, -1.4747481491954335684e-30},
        {-5.3481225394230178e-15, -1.6208384686356567695e-31},
        {1.2267786282382608e-15, -5.0729151460238670592e-32},
        {-1.1812593016974588e-16, 6.4222578381496811236e-33},
        {1.1866922547516004e-18, -4.203726549422601513e-35},
        {1.4123806553180319e-18, -7.5769467011162939419e-35},
        {-2.2987456844353702e-19, 1.333548191706914404e-36},
        {1.7144063219273374e-20, 5.2307151504269346879e-38},
        {1.3373517304936931e-22, 2.6434059649079227057e-39},
        {-2.0542335517666728e-22, 3.6856892424568950946e-39},
        {2.7360300486080001e-23, -2.8599315416397775072e-39},
        {-1.7323564459105165e-24, -1.7540883508197597694e-40},
        {-2.3606190244992872e-26, -1.2602250169957848754e-42},
        {1.8649829417172943e-26, 8.7747756172909650567e-43},
        {-2.2180956242071973e-27, 6.8096403150427525887e-44},
        {1.2977819749479937e-28, -3.3256924668040926188e-45},
        {1.1806974749665284e-30, -4.1849492759665164817e-48},
        {-1.1245843492770881e-30, -2.0184281548735500621e-47},
        {1.2770851751408661e-31, 1.0535632367878753198e-47},
        {-7.3914511696151410e-33, 1.8114253268366145939e-49},
        {1.1347502575542158e-35, -4.9791058715013303176e-52},
        {4.6391346410587220e-35, 2.6040634859975098981e-52},
        {-5.3473368184391986e-36, -2.3112956912714733596e-52},
        {3.2079959236133524e-37, 2.002602532430017854e-53},
        {-4.4458297365507567e-39, -2.2217521001995672996e-55},
        {-1.3111745188819888e-39, 6.7788456469551405705e-56},
        {1.6470333525438139e-40, -3.0700688927234060527e-57},
        {-1.0562331785035812e-41, -3.5564735779011469545e-58},
        {2.6784429826430494e-43, 1.0270533046398167481e-59},
        {2.4247154948517828e-44, -7.5062775267187315617e-61},
        {-3.7365878345356127e-45, 1.2522246282144017842e-61},
        {2.6283329809401953e-46, 1.642170141184167516e-62},
        {-9.2981759953768865e-48, 2.1318642610195911542e-64},
        {-2.3279424186994706e-49, -3.2917535161657313843e-66},
    };
    // Horner over the dd coefficients.
    dd acc = coeff[55];
    for (int k = 54; k >= 0; --k) {
        acc = dd_add(dd_mul(acc, x), coeff[k]);
    }
    return acc;
}

inline dd dd_rgamma_one_plus(double x) { return dd_rgamma_one_plus(dd{x, 0.0}); }

/// 1/Gamma(w) for w in (-1.5, 3.5]; zero at the poles w = 0, -1. The argument
/// is a dd so that shifted orders like nu + 1 stay exact.
inline dd dd_rgamma(dd w) {
    if (w.hi > 1.5) {
        dd wm = dd_sub(w, 1.0);
        return dd_div(dd_rgamma(wm), wm);
    }
    if (w.hi < 0.5) return dd_mul(dd_rgamma(dd_add(w, 1.0)), w);
    return dd_rgamma_one_plus(dd_sub(w, 1.0));
}

inline dd dd_rgamma(double w) { return dd_rgamma(dd{w, 0.0}); }

// ---------------------------------------------------------------------------
// complex double-double
// ---------------------------------------------------------------------------

struct cdd {
    dd re{};
    dd im{};
};

inline cdd cdd_from(std::complex<double> z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }
inline std::complex<double> to_complex(cdd z) { return {to_double(z.re), to_double(z.im)}; }

inline cdd cdd_add(cdd a, cdd b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }
inline cdd cdd_sub(cdd a, cdd b) { return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)}; }
inline cdd cdd_neg(cdd a) { return {dd_neg(a.re), dd_neg(a.im)}; }

inline cdd cdd_mul(cdd a, cdd b) {
    dd re = dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
    dd im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
    return {re, im};
}

inline cdd cdd_mul(cdd a, dd s) { return {dd_mul(a.re, s), dd_mul(a.im, s)}; }
inline cdd cdd_mul(cdd a, double s) { return {dd_mul(a.re, s), dd_mul(a.im, s)}; }
inline cdd cdd_div(cdd a, dd s) { return {dd_div(a.re, s), dd_div(a.im, s)}; }
inline cdd cdd_div(cdd a, double s) { return {dd_div(a.re, dd{s, 0.0}), dd_div(a.im, dd{s, 0.0})}; }

inline cdd cdd_div(cdd a, cdd b) {
    dd den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    dd re = dd_add(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
    dd im = dd_sub(dd_mul(a.im, b.re), dd_mul(a.re, b.im));
    return {dd_div(re, den), dd_div(im, den)};
}

inline double cdd_abs_estimate(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

/// exp(i theta) with theta in dd
inline cdd cdd_cis(dd theta) {
    dd s, c;
    dd_sincos(theta, s, c);
    return {c, s};
}

/// log of a nonzero complex double; the returned (log r, theta) pair is
/// dd-accurate with theta = atan2(im, re) in (-pi, pi].
struct cdd_log_t {
    dd log_r;
    dd theta;
};

inline cdd_log_t cdd_log(std::complex<double> t) {
    double r0 = std::abs(t);
    double th0 = std::arg(t);
    // u = r0 e^{i th0} in dd, then t/u = 1 + delta with |delta| ~ 1e-16
    cdd u = cdd_mul(cdd_cis(dd{th0, 0.0}), dd{r0, 0.0});
    cdd delta = cdd_sub(cdd_div(cdd_from(t), u), cdd{{1.0, 0.0}, {0.0, 0.0}});
    // log(1+delta) = delta - delta^2/2 to dd accuracy
    cdd corr = cdd_sub(delta, cdd_mul(cdd_mul(delta, delta), 0.5));
    return {dd_add(dd_log(r0), corr.re), dd_add(dd{th0, 0.0}, corr.im)};
}

/// w^p for complex double w (nonzero), double p, principal branch, in dd
inline cdd cdd_pow(std::complex<double> w, double p) {
    cdd_log_t lg = cdd_log(w);
    dd mag = dd_exp(dd_mul(lg.log_r, p));
    return cdd_mul(cdd_cis(dd_mul(lg.theta, p)), mag);
}

}  // namespace besselkit::detail
