// SPDX-License-Identifier: Apache-2.0
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "hetblock/blockmodel.hpp"
#include "hetblock/rng.hpp"

namespace hetblock {

namespace {

// Lloyd iterations with seeded random restarts; returns labels of the
// best run by within-cluster sum of squares.
std::vector<int> kmeans(const Eigen::MatrixXd& pts, int k, uint64_t seed) {
    const int n = static_cast<int>(pts.rows());
    const int dim = static_cast<int>(pts.cols());
    SeededRng rng(seed);
    std::vector<int> best_labels(n, 0);
    double best_cost = std::numeric_limits<double>::infinity();
    const int restarts = 8;
    for (int run = 0; run < restarts; ++run) {
        Eigen::MatrixXd centers(k, dim);
        for (int u = 0; u < k; ++u) centers.row(u) = pts.row(rng.below(n));
        std::vector<int> labels(n, 0);
        for (int it = 0; it < 100; ++it) {
            bool moved = false;
            for (int i = 0; i < n; ++i) {
                int arg = 0;
                double dmin = (pts.row(i) - centers.row(0)).squaredNorm();
                for (int u = 1; u < k; ++u) {
                    double d = (pts.row(i) - centers.row(u)).squaredNorm();
                    if (d < dmin) { dmin = d; arg = u; }
                }
                if (labels[i] != arg) { labels[i] = arg; moved = true; }
            }
            centers.setZero();
            std::vector<int> counts(k, 0);
            for (int i = 0; i < n; ++i) {
                centers.row(labels[i]) += pts.row(i);
                ++counts[labels[i]];
            }
            for (int u = 0; u < k; ++u) {
                if (counts[u] > 0) centers.row(u) /= counts[u];
                else centers.row(u) = pts.row(rng.below(n));
            }
            if (!moved) break;
        }
        double cost = 0.0;
        for (int i = 0; i < n; ++i)
            cost += (pts.row(i) - centers.row(labels[i])).squaredNorm();
        if (cost < best_cost) {
            best_cost = cost;
            best_labels = labels;
        }
    }
    return best_labels;
}

}  // namespace

Partition spectral_init(const Graph& g, int k, uint64_t seed) {
    const int n = g.n();
    Partition p;
    p.k = k;
    p.labels.assign(n, 0);
    if (k == 1) return p;

    // Degree-centered adjacency (the modularity matrix). Centering strips
    // the rank-one degree background, and picking eigenvectors by largest
    // magnitude keeps disassortative structure, which lives in the
    // negative end of the spectrum.
    std::vector<int> deg = g.degrees();
    Eigen::MatrixXd mod = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) mod(i, j) = 1.0;
    double two_m = 2.0 * g.edge_count();
    if (two_m > 0.0) {
        Eigen::VectorXd d(n);
        for (int i = 0; i < n; ++i) d[i] = deg[i];
        mod -= (d * d.transpose()) / two_m;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mod);
    if (solver.info() != Eigen::Success) return random_init(n, k, seed);

    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::abs(ev[a]) > std::abs(ev[b]); });
    Eigen::MatrixXd pts(n, k);
    for (int c = 0; c < k; ++c) pts.col(c) = solver.eigenvectors().col(order[c]);
    p.labels = kmeans(pts, k, seed);

    // k-means can leave a cluster empty; reseed it with farthest points.
    std::vector<int> sizes(k, 0);
    for (int l : p.labels) ++sizes[l];
    for (int u = 0; u < k; ++u)
        if (sizes[u] == 0) {
            int pick = 0;
            for (int i = 0; i < n; ++i)
                if (sizes[p.labels[i]] > sizes[p.labels[pick]]) pick = i;
            --sizes[p.labels[pick]];
            p.labels[pick] = u;
            ++sizes[u];
        }
    return p;
}

}  // namespace hetblock
