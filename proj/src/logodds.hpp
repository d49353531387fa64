// SPDX-License-Identifier: Apache-2.0
// Internal helpers for Bernoulli log-probabilities on the log-odds scale.
#ifndef HETBLOCK_SRC_LOGODDS_HPP
#define HETBLOCK_SRC_LOGODDS_HPP

#include <cmath>
#include <limits>

namespace hetblock::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

/// log(1 + e^x) without overflow.
inline double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

/// log p where log-odds(p) = s. s may be +-inf.
inline double log_p(double s) {
    if (s == kPosInf) return 0.0;
    if (s == kNegInf) return kNegInf;
    return -softplus(-s);
}

/// log(1-p) where log-odds(p) = s.
inline double log_1mp(double s) {
    if (s == kPosInf) return kNegInf;
    if (s == kNegInf) return 0.0;
    return -softplus(s);
}

/// Bernoulli log-probability of observation a under log-odds s. NaN
/// marks a cell whose two factors drift in opposite directions; the ML
/// limit matches the observation exactly there, so the contribution is 0.
inline double bernoulli_logprob(double s, bool a) {
    if (std::isnan(s)) return 0.0;
    return a ? log_p(s) : log_1mp(s);
}

}  // namespace hetblock::detail

#endif
