// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_GENERATE_HPP
#define HETBLOCK_GENERATE_HPP

#include <cstdint>

#include "hetblock/blockmodel.hpp"
#include "hetblock/graph.hpp"

namespace hetblock {

/// i.i.d. categorical labels; deterministic given seed.
Partition sample_memberships(const std::vector<double>& pi, int n, uint64_t seed);

/// Independent Bernoulli edges with the block-model probabilities,
/// sampled row-major over i < j so output is platform-independent.
Graph sample_graph(const Partition& p, const BlockParams& bp, uint64_t seed);

struct SyntheticInstance {
    Graph graph;
    Partition partition;
    BlockParams true_params;
};

/// The three-cluster benchmark instance: n = 580, cluster sizes
/// 190/193/197, log-affinities drawn uniformly from per-(cluster, target)
/// intervals, then a graph sampled from the resulting model.
SyntheticInstance fig1_instance(uint64_t seed);

/// The interval [lo, hi] the log-affinity towards cluster v is drawn
/// from for members of cluster u in fig1_instance.
std::pair<double, double> fig1_interval(int u, int v);

}  // namespace hetblock

#endif
