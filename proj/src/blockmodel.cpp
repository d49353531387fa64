// SPDX-License-Identifier: Apache-2.0
#include "hetblock/blockmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hetblock/alpha.hpp"
#include "hetblock/rasch.hpp"
#include "hetblock/rng.hpp"
#include "logodds.hpp"

namespace hetblock {

using detail::kNegInf;
using detail::kPosInf;

namespace {

double effective_beta(double b) {
    // Unidentified affinities act as neutral odds.
    return std::isnan(b) ? 0.0 : b;
}

// NaN result marks a pair whose two affinities drift in opposite
// directions; the fitted probability there is determined by the data
// cell, not by the flags.
double pair_logodds(double beta_iv, double beta_ju) {
    double x = effective_beta(beta_iv);
    double y = effective_beta(beta_ju);
    if (std::isinf(x) && std::isinf(y) && x != y) return std::nan("");
    if (x == kPosInf || y == kPosInf) return kPosInf;
    if (x == kNegInf || y == kNegInf) return kNegInf;
    return x + y;
}

double drift_to_beta(double value, Drift flag) {
    switch (flag) {
        case Drift::ToZero: return kNegInf;
        case Drift::ToInfinity: return kPosInf;
        case Drift::Undefined: return std::nan("");
        default: return std::log(value);
    }
}

}  // namespace

double block_edge_probability(const BlockParams& bp, const Partition& p, int i, int j) {
    if (i == j) throw std::invalid_argument("block_edge_probability: i == j");
    double s = pair_logodds(bp.beta(i, p.labels[j]), bp.beta(j, p.labels[i]));
    if (std::isnan(s)) return std::nan("");
    if (s == kPosInf) return 1.0;
    if (s == kNegInf) return 0.0;
    return 1.0 / (1.0 + std::exp(-s));
}

Responsibilities e_step(const Graph& g, const Partition& p, const BlockParams& bp) {
    const int n = g.n();
    const int k = bp.k;
    Responsibilities resp(n, k);

    // Hypothetical labels mix affinities from different sub-fits, so
    // infinite coordinates cannot be combined symbolically the way a
    // single fit's can. Evaluate with the trust-interval endpoints
    // instead, the way the divergent coordinates actually left the
    // iteration.
    const double bound = std::log(SolverOptions{}.divergence_ceiling);
    auto clamped = [&](int i, int u) {
        double b = effective_beta(bp.beta(i, u));
        return std::clamp(b, -bound, bound);
    };

    std::vector<double> logw(k);
    for (int i = 0; i < n; ++i) {
        for (int u = 0; u < k; ++u) {
            double ll = bp.pi[u] > 0.0 ? std::log(bp.pi[u]) : kNegInf;
            for (int j = 0; j < n && ll > kNegInf; ++j) {
                if (j == i) continue;
                double s = clamped(i, p.labels[j]) + clamped(j, u);
                ll += detail::bernoulli_logprob(s, g.has_edge(i, j));
            }
            logw[u] = ll;
        }
        double mx = *std::max_element(logw.begin(), logw.end());
        if (mx == kNegInf) {
            // No hypothesis has positive probability; keep the current label.
            for (int u = 0; u < k; ++u) resp.at(i, u) = u == p.labels[i] ? 1.0 : 0.0;
            continue;
        }
        double z = 0.0;
        for (int u = 0; u < k; ++u) z += std::exp(logw[u] - mx);
        for (int u = 0; u < k; ++u) resp.at(i, u) = std::exp(logw[u] - mx) / z;
    }
    return resp;
}

std::pair<Partition, std::vector<double>> m_step_assign(const Responsibilities& r) {
    Partition p;
    p.k = r.k;
    p.labels.resize(r.n);
    std::vector<double> pi(r.k, 0.0);
    for (int i = 0; i < r.n; ++i) {
        int best = 0;
        for (int u = 1; u < r.k; ++u)
            if (r.at(i, u) > r.at(i, best)) best = u;  // ties keep the smaller index
        p.labels[i] = best;
        for (int u = 0; u < r.k; ++u) pi[u] += r.at(i, u);
    }
    double z = 0.0;
    for (double& v : pi) z += v;
    for (double& v : pi) v /= z;
    return {p, pi};
}

BlockParams m_step_fit(const Graph& g, const Partition& p, const SolverOptions& opts,
                       FitReport* agg) {
    const int n = g.n();
    const int k = p.k;
    BlockParams bp(n, k);
    std::fill(bp.beta_.begin(), bp.beta_.end(), std::nan(""));
    std::vector<int> sizes = p.cluster_sizes();
    double nn = static_cast<double>(n);
    for (int u = 0; u < k; ++u) bp.pi[u] = sizes[u] / nn;

    auto record = [&](const FitReport& r, const std::vector<int>& ids, bool cols,
                      int cluster) {
        if (!agg) return;
        agg->iterations += r.iterations;
        agg->final_residual = std::max(agg->final_residual, r.final_residual);
        for (const Divergence& dv : r.diverged) {
            int vertex = ids[dv.index];
            (void)cols;
            agg->diverged.push_back({vertex * k + cluster, false, dv.direction});
        }
    };

    for (int u = 0; u < k; ++u) {
        std::vector<int> ids;
        Graph sub = extract_subgraph(g, p, u, &ids);
        if (sub.n() < 2) continue;  // nothing to fit, entries stay unidentified
        auto [ap, rep] = fit_alpha(sub, opts);
        std::vector<double> beta = ap.beta();
        for (size_t r = 0; r < ids.size(); ++r) bp.beta(ids[r], u) = beta[r];
        record(rep, ids, false, u);
    }

    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) {
            if (sizes[u] == 0 || sizes[v] == 0) continue;
            std::vector<int> rows, cols;
            BipartiteTable t = extract_bipartite(g, p, u, v, &rows, &cols);
            auto [bg, rep] = fit_beta_gamma(t, opts);
            for (size_t r = 0; r < rows.size(); ++r)
                bp.beta(rows[r], v) = drift_to_beta(bg.b[r], bg.b_flags[r]);
            for (size_t c = 0; c < cols.size(); ++c)
                bp.beta(cols[c], u) = drift_to_beta(bg.g[c], bg.g_flags[c]);
            if (agg) {
                agg->iterations += rep.iterations;
                agg->final_residual = std::max(agg->final_residual, rep.final_residual);
                for (const Divergence& dv : rep.diverged) {
                    int vertex = dv.column ? cols[dv.index] : rows[dv.index];
                    int cluster = dv.column ? u : v;
                    agg->diverged.push_back({vertex * k + cluster, false, dv.direction});
                }
            }
        }
    }
    return bp;
}

double complete_data_log_likelihood(const Graph& g, const Partition& p,
                                    const BlockParams& bp) {
    const int n = g.n();
    double ll = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double s = pair_logodds(bp.beta(i, p.labels[j]), bp.beta(j, p.labels[i]));
            ll += detail::bernoulli_logprob(s, g.has_edge(i, j));
        }
    return ll;
}

Partition random_init(int n, int k, uint64_t seed) {
    SeededRng rng(seed);
    Partition p;
    p.k = k;
    p.labels.resize(n);
    for (int i = 0; i < n; ++i) p.labels[i] = rng.below(k);
    // Guarantee no empty cluster at the start.
    std::vector<int> sizes = p.cluster_sizes();
    for (int u = 0; u < k; ++u)
        if (sizes[u] == 0) {
            int victim = 0;
            for (int i = 0; i < n; ++i)
                if (sizes[p.labels[i]] > sizes[p.labels[victim]]) victim = i;
            --sizes[p.labels[victim]];
            p.labels[victim] = u;
            ++sizes[u];
        }
    return p;
}

BlockFitResult fit_blocks(const Graph& g, const EmOptions& opts) {
    const int n = g.n();
    const int k = opts.k;
    if (k < 1) throw std::invalid_argument("fit_blocks: k must be >= 1");
    if (k > n) throw std::invalid_argument("fit_blocks: k exceeds vertex count");

    BlockFitResult out;
    Partition part;
    switch (opts.init) {
        case InitMode::Spectral: part = spectral_init(g, k, opts.seed); break;
        case InitMode::Random: part = random_init(n, k, opts.seed); break;
        case InitMode::File:
            part = opts.init_partition;
            if (static_cast<int>(part.labels.size()) != n || part.k != k || !part.valid())
                throw std::invalid_argument("fit_blocks: invalid initial partition");
            break;
    }

    std::vector<int> sizes = part.cluster_sizes();
    std::vector<double> pi(k);
    for (int u = 0; u < k; ++u) pi[u] = static_cast<double>(sizes[u]) / n;

    BlockParams bp;
    Responsibilities resp;
    bool stable = false;
    int t = 0;
    FitReport inner_agg;
    while (t < opts.outer_max && !stable) {
        ++t;
        inner_agg = FitReport{};
        bp = m_step_fit(g, part, opts.inner, &inner_agg);
        bp.pi = pi;
        out.loglik_trace.push_back(complete_data_log_likelihood(g, part, bp));
        resp = e_step(g, part, bp);
        auto [new_part, new_pi] = m_step_assign(resp);

        std::vector<int> new_sizes = new_part.cluster_sizes();
        for (int u = 0; u < k; ++u) {
            if (new_sizes[u] > 0) continue;
            // Restart the emptied cluster with the least committed vertex.
            int pick = -1;
            double worst = 2.0;
            for (int i = 0; i < n; ++i) {
                if (new_sizes[new_part.labels[i]] <= 1) continue;
                double mx = 0.0;
                for (int v = 0; v < k; ++v) mx = std::max(mx, resp.at(i, v));
                if (mx < worst) { worst = mx; pick = i; }
            }
            if (pick < 0) throw std::runtime_error("fit_blocks: cannot refill empty cluster");
            --new_sizes[new_part.labels[pick]];
            new_part.labels[pick] = u;
            ++new_sizes[u];
            out.notes.push_back("restarted empty cluster " + std::to_string(u + 1) +
                                " with vertex " + std::to_string(pick));
        }

        stable = new_part.labels == part.labels;
        part = std::move(new_part);
        pi = std::move(new_pi);
    }

    if (!stable) {
        // Budget exhausted after a reassignment: refresh the parameters
        // for the partition actually returned.
        inner_agg = FitReport{};
        bp = m_step_fit(g, part, opts.inner, &inner_agg);
        bp.pi = pi;
        out.loglik_trace.push_back(complete_data_log_likelihood(g, part, bp));
        resp = e_step(g, part, bp);
    }

    out.partition = std::move(part);
    out.params = std::move(bp);
    out.resp = std::move(resp);
    out.report.iterations = t;
    out.report.converged = stable;
    out.report.final_residual = inner_agg.final_residual;
    out.report.diverged = inner_agg.diverged;
    out.report.loglik = out.loglik_trace.back();
    return out;
}

}  // namespace hetblock
