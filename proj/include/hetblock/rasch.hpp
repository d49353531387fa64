// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_RASCH_HPP
#define HETBLOCK_RASCH_HPP

#include <utility>
#include <vector>

#include "hetblock/fit_report.hpp"
#include "hetblock/graph.hpp"

namespace hetblock {

/// Parameters of the bipartite model: odds(i,j) = b_i * g_j.
/// The pair (b, g) is identified only up to the scaling
/// (b, g) -> (kappa*b, g/kappa); normalize() picks a representative.
struct BetaGammaParams {
    std::vector<double> b;
    std::vector<double> g;
    std::vector<Drift> b_flags;
    std::vector<Drift> g_flags;

    static BetaGammaParams finite(std::vector<double> b, std::vector<double> g);
};

/// p = b_i g_j / (1 + b_i g_j).
double table_probability(double b_i, double g_j);

/// Coordinate-ratio distance; rho >= 1 and rho == 1 iff equal.
/// log(rho) is a metric on the parameter space.
double rho(const BetaGammaParams& p1, const BetaGammaParams& p2);

/// Rescales so the finite log-parameters sum to zero. When the finite
/// row and column counts are equal that sum is scaling-invariant; the
/// representative with equal row-sum and column-sum of the logs is
/// returned instead. Model probabilities are unchanged either way.
BetaGammaParams normalize(const BetaGammaParams& p);

/// Direct Bernoulli sum over all cells.
double log_likelihood_bg(const BipartiteTable& t, const BetaGammaParams& p);

/// Same value through the margin factorization:
/// -sum_ij log(1 + b_i g_j) + sum_i R_i log b_i + sum_j C_j log g_j.
double log_likelihood_bg_factorized(const BipartiteTable& t, const BetaGammaParams& p);

/// One full sweep of the two-phase update on arbitrary margins:
/// phase I refreshes every b_i from the previous iterate, phase II
/// refreshes every g_j from the new b and previous g.
BetaGammaParams sweep_beta_gamma(const std::vector<double>& r,
                                 const std::vector<double>& c,
                                 const BetaGammaParams& p);

/// Alternating fit of the margin equations. Zero and saturated rows or
/// columns are flagged divergent up front and the rest of the system is
/// iterated; the result is returned in normalized form.
std::pair<BetaGammaParams, FitReport> fit_beta_gamma(const BipartiteTable& t,
                                                     const SolverOptions& opts = {},
                                                     const BetaGammaParams* init = nullptr);

}  // namespace hetblock

#endif
