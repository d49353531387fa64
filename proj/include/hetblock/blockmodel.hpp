// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_BLOCKMODEL_HPP
#define HETBLOCK_BLOCKMODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hetblock/fit_report.hpp"
#include "hetblock/graph.hpp"

namespace hetblock {

/// Mixture weights plus the n x k affinity matrix on the log scale.
/// beta(i,u) is the affinity of vertex i towards cluster u: finite,
/// +inf (always ties), -inf (never ties), or NaN (unidentified).
struct BlockParams {
    std::vector<double> pi;
    int n = 0;
    int k = 0;
    std::vector<double> beta_;  // n x k row-major

    BlockParams() = default;
    BlockParams(int n_, int k_)
        : pi(k_, 1.0 / k_), n(n_), k(k_), beta_(static_cast<size_t>(n_) * k_, 0.0) {}

    double beta(int i, int u) const { return beta_[static_cast<size_t>(i) * k + u]; }
    double& beta(int i, int u) { return beta_[static_cast<size_t>(i) * k + u]; }
};

/// Row-stochastic n x k posterior membership matrix.
struct Responsibilities {
    int n = 0;
    int k = 0;
    std::vector<double> r;  // n x k row-major

    Responsibilities() = default;
    Responsibilities(int n_, int k_)
        : n(n_), k(k_), r(static_cast<size_t>(n_) * k_, 0.0) {}

    double at(int i, int u) const { return r[static_cast<size_t>(i) * k + u]; }
    double& at(int i, int u) { return r[static_cast<size_t>(i) * k + u]; }
};

enum class InitMode { Spectral, Random, File };

struct EmOptions {
    int k = 1;
    int outer_max = 100;
    SolverOptions inner;
    uint64_t seed = 0;
    InitMode init = InitMode::Spectral;
    Partition init_partition;  // used when init == File
};

struct BlockFitResult {
    Partition partition;
    BlockParams params;
    Responsibilities resp;
    FitReport report;
    std::vector<double> loglik_trace;  // complete-data log-likelihood per outer step
    std::vector<std::string> notes;    // empty-cluster restarts etc.
};

/// Edge probability between i and j given the partition: the log-odds
/// is beta(i, c_j) + beta(j, c_i); divergent affinities force p to 0/1.
/// NaN when the two affinities drift in opposite directions (the ML
/// limit there is decided by the data cell, not the parameters).
double block_edge_probability(const BlockParams& bp, const Partition& p, int i, int j);

/// Bayes responsibilities computed from the exact per-pair product in
/// log-space. Divergent affinities are evaluated at the trust-interval
/// endpoints (log of the divergence ceiling/floor) because a
/// hypothetical label mixes coordinates from different sub-fits.
Responsibilities e_step(const Graph& g, const Partition& p, const BlockParams& bp);

/// pi_u = column mean; labels by row argmax with smallest-index ties.
std::pair<Partition, std::vector<double>> m_step_assign(const Responsibilities& r);

/// Per-block ML fits: degree-model fit inside each cluster, bipartite
/// fit for each cluster pair, cross pairs normalized to zero log-sum.
BlockParams m_step_fit(const Graph& g, const Partition& p, const SolverOptions& opts,
                       FitReport* agg = nullptr);

/// Hard-assignment EM loop; stops when labels are stable or outer_max.
BlockFitResult fit_blocks(const Graph& g, const EmOptions& opts);

/// Log of the complete-data likelihood under hard memberships.
double complete_data_log_likelihood(const Graph& g, const Partition& p,
                                    const BlockParams& bp);

/// k-clustering from the leading eigenvectors of the symmetrically
/// normalized adjacency, followed by seeded k-means restarts.
Partition spectral_init(const Graph& g, int k, uint64_t seed);

Partition random_init(int n, int k, uint64_t seed);

}  // namespace hetblock

#endif
