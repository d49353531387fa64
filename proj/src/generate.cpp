// SPDX-License-Identifier: Apache-2.0
#include "hetblock/generate.hpp"

#include <cmath>
#include <stdexcept>

#include "hetblock/rng.hpp"

namespace hetblock {

Partition sample_memberships(const std::vector<double>& pi, int n, uint64_t seed) {
    SeededRng rng(seed);
    Partition p;
    p.k = static_cast<int>(pi.size());
    p.labels.resize(n);
    for (int i = 0; i < n; ++i) p.labels[i] = rng.categorical(pi);
    return p;
}

Graph sample_graph(const Partition& p, const BlockParams& bp, uint64_t seed) {
    const int n = static_cast<int>(p.labels.size());
    SeededRng rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(block_edge_probability(bp, p, i, j))) g.add_edge(i, j);
    return g;
}

std::pair<double, double> fig1_interval(int u, int v) {
    static const double lo[3][3] = {{0.0, -1.0, -1.0},
                                    {-0.75, -1.0, -0.5},
                                    {-0.25, -0.25, -0.5}};
    static const double hi[3][3] = {{1.0, 1.0, 0.5},
                                    {0.5, 0.0, 1.0},
                                    {0.75, 0.25, 0.5}};
    if (u < 0 || u > 2 || v < 0 || v > 2)
        throw std::out_of_range("fig1_interval: cluster index out of range");
    return {lo[u][v], hi[u][v]};
}

SyntheticInstance fig1_instance(uint64_t seed) {
    constexpr int kSizes[3] = {190, 193, 197};
    constexpr int n = 580;

    SyntheticInstance inst;
    inst.partition.k = 3;
    inst.partition.labels.reserve(n);
    for (int u = 0; u < 3; ++u)
        for (int c = 0; c < kSizes[u]; ++c) inst.partition.labels.push_back(u);

    inst.true_params = BlockParams(n, 3);
    inst.true_params.pi = {190.0 / 580, 193.0 / 580, 197.0 / 580};
    SeededRng rng(seed);
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < 3; ++v) {
            auto [lo, hi] = fig1_interval(inst.partition.labels[i], v);
            inst.true_params.beta(i, v) = rng.uniform(lo, hi);
        }

    // Distinct stream for the edges so the parameter draw is unaffected
    // by graph size changes.
    inst.graph = sample_graph(inst.partition, inst.true_params, seed ^ 0x9e3779b97f4a7c15ULL);
    return inst;
}

}  // namespace hetblock
