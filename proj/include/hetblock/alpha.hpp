// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_ALPHA_HPP
#define HETBLOCK_ALPHA_HPP

#include <vector>

#include "hetblock/fit_report.hpp"
#include "hetblock/graph.hpp"

namespace hetblock {

/// Parameters of the degree-factored edge model: odds(i,j) = a_i * a_j.
/// Coordinates flagged ToZero/ToInfinity carry 0.0 / +inf in `alpha`;
/// Undefined coordinates carry NaN.
struct AlphaParams {
    std::vector<double> alpha;
    std::vector<Drift> flags;

    /// log(alpha), with -inf / +inf / NaN for flagged coordinates.
    std::vector<double> beta() const;
};

/// p = a_i a_j / (1 + a_i a_j).
double edge_probability(double a_i, double a_j);

/// Entry i is sum over j != i of the model edge probability.
std::vector<double> expected_degrees(const AlphaParams& params);

/// Bernoulli sum over unordered pairs.
double log_likelihood_alpha(const Graph& g, const AlphaParams& params);

/// Same value through the sufficient-statistic factorization:
/// -sum_{i<j} log(1 + a_i a_j) + sum_i d_i log a_i.
double log_likelihood_alpha_factorized(const Graph& g, const AlphaParams& params);

/// Fixed-point solve of d_i = sum_{j!=i} a_i a_j / (1 + a_i a_j) with the
/// Jacobi-style update a_i <- d_i / sum_{j!=i} 1/(1/a_j + a_i).
/// Degree-0 and degree-(n-1) vertices are peeled off up front as
/// divergent coordinates; the rest is fit on the residual system.
std::pair<AlphaParams, FitReport> fit_alpha(const Graph& g,
                                            const SolverOptions& opts = {});

}  // namespace hetblock

#endif
