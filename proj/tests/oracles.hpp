// SPDX-License-Identifier: Apache-2.0
// Independent brute-force oracles used by the unit and acceptance
// suites. These deliberately avoid the library's solver code paths.
#ifndef HETBLOCK_TESTS_ORACLES_HPP
#define HETBLOCK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "hetblock/blockmodel.hpp"
#include "hetblock/graph.hpp"

namespace oracles {

/// Sorted (non-increasing) degree sequences of all labeled simple
/// graphs on n vertices, by exhaustive enumeration over edge subsets.
inline std::set<std::vector<int>> realizable_degree_sequences(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int e = static_cast<int>(pairs.size());
    std::set<std::vector<int>> out;
    for (long long mask = 0; mask < (1LL << e); ++mask) {
        std::vector<int> d(n, 0);
        for (int b = 0; b < e; ++b)
            if (mask & (1LL << b)) {
                ++d[pairs[b].first];
                ++d[pairs[b].second];
            }
        std::sort(d.begin(), d.end(), std::greater<int>());
        out.insert(std::move(d));
    }
    return out;
}

/// Sorted margin pairs of all m x n binary tables.
inline std::set<std::pair<std::vector<int>, std::vector<int>>>
realizable_margin_pairs(int m, int n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    const int cells = m * n;
    for (long long mask = 0; mask < (1LL << cells); ++mask) {
        std::vector<int> r(m, 0), c(n, 0);
        for (int b = 0; b < cells; ++b)
            if (mask & (1LL << b)) {
                ++r[b / n];
                ++c[b % n];
            }
        std::sort(r.begin(), r.end(), std::greater<int>());
        std::sort(c.begin(), c.end(), std::greater<int>());
        out.emplace(std::move(r), std::move(c));
    }
    return out;
}

/// Direct Bayes posterior over cluster hypotheses for every vertex,
/// computed as a plain probability product (small instances only).
inline hetblock::Responsibilities brute_force_e_step(const hetblock::Graph& g,
                                                     const hetblock::Partition& p,
                                                     const hetblock::BlockParams& bp) {
    const int n = g.n();
    const int k = bp.k;
    hetblock::Responsibilities resp(n, k);
    for (int i = 0; i < n; ++i) {
        std::vector<double> w(k, 0.0);
        for (int u = 0; u < k; ++u) {
            double prob = bp.pi[u];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                double odds = std::exp(bp.beta(i, p.labels[j]) + bp.beta(j, u));
                double pij = odds / (1.0 + odds);
                prob *= g.has_edge(i, j) ? pij : 1.0 - pij;
            }
            w[u] = prob;
        }
        double z = 0.0;
        for (double v : w) z += v;
        for (int u = 0; u < k; ++u) resp.at(i, u) = w[u] / z;
    }
    return resp;
}

inline hetblock::Graph path_graph(int n) {
    hetblock::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline hetblock::Graph cycle_graph(int n) {
    hetblock::Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline hetblock::Graph complete_graph(int n) {
    hetblock::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline hetblock::Graph star_graph(int leaves) {
    hetblock::Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace oracles

#endif
