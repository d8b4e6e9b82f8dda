// Internal helpers shared by the trigonometric and hyperbolic identity
// suites: the skip-test pivot threshold, the base-point subset for shifted
// identities, and per-index inverse caches.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "symtrig/matrix.hpp"

namespace symtrig::detail {

// Indices failing this relative pivot threshold are excluded from identities
// that invert the corresponding function. Stricter than kDefaultPivotTol on
// purpose: near-singular functions inflate tangent-family values until
// roundoff swamps the identity tolerances.
inline constexpr double kSuitePivotTol = 1e-2;

// Relative pivoting alone cannot flag a uniformly tiny matrix (the pivot is
// compared against the matrix's own largest entry, so a 1x1 [1e-16] sails
// through), and the error of the tangent-family identities is governed by
// the inverse's actual size. Cache entries whose inverse exceeds this
// Frobenius norm are treated as undefined at that index.
inline constexpr double kSuiteInverseNormCap = 30.0;

// Base points used for the shifted/parity identities. All indices when the
// trajectory is short; otherwise a fixed stride subset (endpoints always
// included) keeps the l-loop affordable at large horizons.
inline std::vector<std::size_t> identity_base_points(std::size_t len) {
    constexpr std::size_t cap = 34;
    std::vector<std::size_t> pts;
    if (len <= cap) {
        pts.resize(len);
        for (std::size_t i = 0; i < len; ++i) {
            pts[i] = i;
        }
        return pts;
    }
    pts.push_back(1);
    pts.push_back(len - 2);
    for (std::size_t j = 0; j < cap - 2; ++j) {
        pts.push_back(j * (len - 1) / (cap - 3));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

using OptMatrix = std::optional<Matrix>;

// try_invert at the suite pivot threshold, rejecting oversized inverses.
inline OptMatrix capped_invert(const Matrix& m) {
    OptMatrix inv = try_invert(m, kSuitePivotTol);
    if (inv && frobenius_norm(*inv) > kSuiteInverseNormCap) {
        inv.reset();
    }
    return inv;
}

inline std::vector<OptMatrix> inverse_cache(const std::vector<Matrix>& ms) {
    std::vector<OptMatrix> out;
    out.reserve(ms.size());
    for (const Matrix& m : ms) {
        out.push_back(capped_invert(m));
    }
    return out;
}

// inv[k] * num[k] where the inverse exists; typically tangents or cotangents.
inline std::vector<OptMatrix> ratio_cache(const std::vector<OptMatrix>& inv,
                                          const std::vector<Matrix>& num) {
    std::vector<OptMatrix> out;
    out.reserve(num.size());
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (inv[k]) {
            out.push_back((*inv[k]) * num[k]);
        } else {
            out.push_back(std::nullopt);
        }
    }
    return out;
}

}  // namespace symtrig::detail
