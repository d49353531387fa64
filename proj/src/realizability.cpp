// SPDX-License-Identifier: Apache-2.0
#include "hetblock/realizability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hetblock {

bool is_graphic(std::vector<int> d) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return true;
    for (int v : d) {
        if (v < 0) throw std::invalid_argument("is_graphic: negative entry");
        if (v > n - 1) return false;
    }
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) return false;
    std::sort(d.begin(), d.end(), std::greater<int>());

    long long prefix = 0;
    for (int k = 1; k <= n - 1; ++k) {
        prefix += d[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(k, d[i]);
        if (prefix > rhs) return false;
    }
    return true;
}

bool is_bipartite_realizable(const Margins& mg) {
    const int m = static_cast<int>(mg.r.size());
    const int n = static_cast<int>(mg.c.size());
    for (int v : mg.r)
        if (v < 0) throw std::invalid_argument("is_bipartite_realizable: negative entry");
    for (int v : mg.c)
        if (v < 0) throw std::invalid_argument("is_bipartite_realizable: negative entry");
    long long sr = std::accumulate(mg.r.begin(), mg.r.end(), 0LL);
    long long sc = std::accumulate(mg.c.begin(), mg.c.end(), 0LL);
    if (sr != sc) return false;
    for (int v : mg.r)
        if (v > n) return false;
    for (int v : mg.c)
        if (v > m) return false;

    std::vector<int> r = mg.r;
    std::sort(r.begin(), r.end(), std::greater<int>());
    long long prefix = 0;
    for (int k = 1; k <= m; ++k) {
        prefix += r[k - 1];
        long long rhs = 0;
        for (int cj : mg.c) rhs += std::min(cj, k);
        if (prefix > rhs) return false;
    }
    return true;
}

InteriorCheck interior_degree_check(const std::vector<int>& d, int n) {
    for (int v : d) {
        if (v == 0) return {DegreeVerdict::Boundary, "zero degree present"};
        if (v == n - 1) return {DegreeVerdict::Boundary, "degree n-1 present"};
    }
    return {DegreeVerdict::Interior, ""};
}

bool is_threshold_graph(const Graph& g) {
    const int n = g.n();
    std::vector<bool> removed(n, false);
    std::vector<int> deg = g.degrees();
    int remaining = n;
    while (remaining > 1) {
        int pick = -1;
        bool dominating = false;
        for (int i = 0; i < n && pick < 0; ++i) {
            if (removed[i]) continue;
            if (deg[i] == 0) {
                pick = i;
            } else if (deg[i] == remaining - 1) {
                pick = i;
                dominating = true;
            }
        }
        if (pick < 0) return false;
        removed[pick] = true;
        --remaining;
        if (dominating)
            for (int j = 0; j < n; ++j)
                if (!removed[j] && g.has_edge(pick, j)) --deg[j];
    }
    return true;
}

InteriorCheck interior_degree_check(const Graph& g) {
    InteriorCheck c = interior_degree_check(g.degrees(), g.n());
    if (c.verdict == DegreeVerdict::Boundary) return c;
    if (g.n() >= 4 && is_threshold_graph(g))
        return {DegreeVerdict::Boundary, "threshold graph"};
    return c;
}

}  // namespace hetblock
