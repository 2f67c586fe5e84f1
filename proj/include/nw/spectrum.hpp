#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "nw/row.hpp"

namespace nw {

// Eigenvalues of X*X^T for circulant X: lambda_i = sum_k p_k cos(2 pi i k / n).
// Floating point, so these are used only to prune; every accepted candidate is
// re-verified with exact integer PAF sums downstream.
inline std::vector<double> spectrum(const CirculantRow& row,
                                    const std::vector<int>& paf) {
    const int n = row.order();
    std::vector<double> lam(n);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k)
            acc += paf[k] * std::cos(2.0 * std::numbers::pi * i * k / n);
        lam[i] = acc;
    }
    return lam;
}

inline std::vector<double> spectrum(const CirculantRow& row) {
    return spectrum(row, row.paf_vector());
}

// Single-row bound lambda_i <= 4n (Eq.-level prune): the other three terms of
// the additivity identity are PSD, so any row exceeding 4n anywhere is dead.
// One-sided epsilon slack only ever admits extra candidates.
inline bool spectrum_within_bound(const std::vector<double>& lam, int n,
                                  double epsilon) {
    for (double v : lam)
        if (v > 4.0 * n + epsilon) return false;
    return true;
}

// Pair prune: lambda_i(A) + lambda_i(B) <= 4n + epsilon on the shared Fourier
// index i (the remaining two terms are still PSD).
inline bool pair_prune(const std::vector<double>& spec_a,
                       const std::vector<double>& spec_b, int n,
                       double epsilon) {
    for (std::size_t i = 0; i < spec_a.size(); ++i)
        if (spec_a[i] + spec_b[i] > 4.0 * n + epsilon) return false;
    return true;
}

}  // namespace nw
