#pragma once

// Richardson/Neville extrapolation of a sequence v(x_j), x_j = x0 * r^j,
// with a caller-supplied ladder of error exponents: after eliminating
// exponent p the residual drops from O(x^p) to the next ladder entry.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "besselkit/types.hpp"

namespace besselkit {

template <class T>
struct ExtrapolationResult {
    T value{};
    bool converged = false;
    double est_error = kInf;
    int terms_used = 0;
    bool diverging = false;
};

/// Incremental Neville extrapolation on the tableau diagonal: `sample(j)`
/// returns v(x0 * r^j). Stops when two successive diagonal entries agree
/// within tol, max_terms is hit, or the diagonal differences keep growing
/// (diverging flag).
template <class T>
ExtrapolationResult<T> extrapolate_sequence(const std::function<T(int)>& sample, double ratio,
                                            std::vector<double> exponents, double tol,
                                            int max_terms) {
    ExtrapolationResult<T> out;
    std::vector<T> prev_row;
    T prev_diag{};
    T best_value{};
    double best_err = kInf;
    int grow_count = 0;

    for (int j = 0; j < max_terms; ++j) {
        std::vector<T> row;
        row.reserve(prev_row.size() + 1);
        row.push_back(sample(j));
        std::size_t depth = std::min<std::size_t>(j, exponents.size());
        for (std::size_t i = 1; i <= depth; ++i) {
            double w = std::pow(ratio, exponents[i - 1]);
            T extrap = row[i - 1] + (row[i - 1] - prev_row[i - 1]) * (w / (1.0 - w));
            row.push_back(extrap);
        }
        T diag = row.back();
        if (j >= 1) {
            double err = std::abs(diag - prev_diag);
            out.value = diag;
            out.est_error = err;
            out.terms_used = j + 1;
            if (err <= tol * (1.0 + std::abs(diag))) {
                out.converged = true;
                return out;
            }
            if (err > 4.0 * best_err && err > tol * (1.0 + std::abs(diag))) {
                if (++grow_count >= 5) {
                    out.diverging = true;
                    out.value = best_value;
                    out.est_error = best_err;
                    return out;
                }
            } else {
                grow_count = 0;
            }
            if (err < best_err) {
                best_err = err;
                best_value = diag;
            }
        } else {
            out.value = diag;
            out.terms_used = 1;
        }
        prev_diag = diag;
        prev_row = std::move(row);
    }
    if (best_err < kInf) {
        out.value = best_value;
        out.est_error = best_err;
        out.converged = best_err <= tol * (1.0 + std::abs(best_value));
    }
    return out;
}

}  // namespace besselkit
