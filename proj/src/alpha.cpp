// SPDX-License-Identifier: Apache-2.0
#include "hetblock/alpha.hpp"

#include <cmath>
#include <stdexcept>

#include "hetblock/kernels.hpp"
#include "logodds.hpp"

namespace hetblock {

using detail::kNegInf;
using detail::kPosInf;

namespace {

double log_alpha(const AlphaParams& p, int i) {
    switch (p.flags[i]) {
        case Drift::ToZero: return kNegInf;
        case Drift::ToInfinity: return kPosInf;
        case Drift::Undefined: return 0.0;  // neutral odds, no data constrains it
        default: return std::log(p.alpha[i]);
    }
}

// Opposite drifts leave the pair indeterminate on the log-odds scale;
// NaN signals that and the likelihood treats the pair as matched.
double combine_logodds(double x, double y) {
    if (std::isinf(x) && std::isinf(y) && x != y) return std::nan("");
    if (x == kPosInf || y == kPosInf) return kPosInf;
    if (x == kNegInf || y == kNegInf) return kNegInf;
    return x + y;
}

struct ActiveSystem {
    std::vector<int> ids;      // original vertex indices
    std::vector<double> rd;    // residual degrees
    std::vector<double> a;     // current parameter values

    void remove(size_t pos) {
        ids.erase(ids.begin() + pos);
        rd.erase(rd.begin() + pos);
        a.erase(a.begin() + pos);
    }
};

// Flags coordinates whose residual equation forces 0 or n-1 and keeps
// reducing until the remaining system can have a finite solution. Each
// pass removes a whole batch at once so vertex order does not decide
// which of several equally saturated coordinates gets flagged.
void peel(ActiveSystem& sys, std::vector<Drift>& flags,
          std::vector<Divergence>& diverged) {
    bool changed = true;
    while (changed && !sys.ids.empty()) {
        changed = false;
        const size_t n_act = sys.ids.size();
        if (n_act == 1) {
            // Lone coordinate: everything incident to it is already
            // forced, so only its own residual can say anything.
            Drift dir = sys.rd[0] == 0.0 ? Drift::Undefined
                      : sys.rd[0] > 0.0  ? Drift::ToInfinity
                                         : Drift::ToZero;
            flags[sys.ids[0]] = dir;
            if (dir != Drift::Undefined)
                diverged.push_back({sys.ids[0], false, dir});
            sys.remove(0);
            break;
        }
        for (size_t p = n_act; p-- > 0;) {
            if (sys.rd[p] > 0.0) continue;
            flags[sys.ids[p]] = Drift::ToZero;
            diverged.push_back({sys.ids[p], false, Drift::ToZero});
            sys.remove(p);
            changed = true;
        }
        if (changed) continue;
        std::vector<size_t> sat;
        for (size_t p = 0; p < n_act; ++p)
            if (sys.rd[p] >= static_cast<double>(n_act) - 1.0) sat.push_back(p);
        if (sat.empty()) break;
        for (size_t p : sat) {
            flags[sys.ids[p]] = Drift::ToInfinity;
            diverged.push_back({sys.ids[p], false, Drift::ToInfinity});
        }
        const double drop = static_cast<double>(sat.size());
        for (size_t q = 0; q < n_act; ++q) sys.rd[q] -= drop;  // ties to the batch
        for (size_t s = sat.size(); s-- > 0;) sys.remove(sat[s]);
        changed = true;
    }
}

double residual_max(const ActiveSystem& sys) {
    const size_t m = sys.ids.size();
    std::vector<double> inv(m);
    for (size_t j = 0; j < m; ++j) inv[j] = 1.0 / sys.a[j];
    double worst = 0.0;
    for (size_t i = 0; i < m; ++i) {
        double s = kernels::recip_shift_sum(inv.data(), m, sys.a[i]) -
                   1.0 / (inv[i] + sys.a[i]);
        worst = std::max(worst, std::abs(sys.rd[i] - sys.a[i] * s));
    }
    return worst;
}

}  // namespace

std::vector<double> AlphaParams::beta() const {
    std::vector<double> b(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) {
        switch (flags[i]) {
            case Drift::ToZero: b[i] = kNegInf; break;
            case Drift::ToInfinity: b[i] = kPosInf; break;
            case Drift::Undefined: b[i] = std::nan(""); break;
            default: b[i] = std::log(alpha[i]);
        }
    }
    return b;
}

double edge_probability(double a_i, double a_j) {
    double odds = a_i * a_j;
    if (std::isinf(odds)) return 1.0;
    return odds / (1.0 + odds);
}

std::vector<double> expected_degrees(const AlphaParams& params) {
    const size_t n = params.alpha.size();
    std::vector<double> inv(n), out(n);
    for (size_t j = 0; j < n; ++j) inv[j] = 1.0 / params.alpha[j];
    for (size_t i = 0; i < n; ++i) {
        double s = kernels::recip_shift_sum(inv.data(), n, params.alpha[i]) -
                   1.0 / (inv[i] + params.alpha[i]);
        out[i] = params.alpha[i] * s;
    }
    return out;
}

double log_likelihood_alpha(const Graph& g, const AlphaParams& params) {
    const int n = g.n();
    std::vector<double> lb(n);
    for (int i = 0; i < n; ++i) lb[i] = log_alpha(params, i);
    double ll = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            ll += detail::bernoulli_logprob(combine_logodds(lb[i], lb[j]),
                                            g.has_edge(i, j));
    return ll;
}

double log_likelihood_alpha_factorized(const Graph& g, const AlphaParams& params) {
    const int n = g.n();
    std::vector<int> d = g.degrees();
    double log_c = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            log_c -= std::log1p(params.alpha[i] * params.alpha[j]);
    double ll = log_c;
    for (int i = 0; i < n; ++i) ll += d[i] * std::log(params.alpha[i]);
    return ll;
}

std::pair<AlphaParams, FitReport> fit_alpha(const Graph& g, const SolverOptions& opts) {
    const int n = g.n();
    std::vector<int> d = g.degrees();

    AlphaParams params;
    params.alpha.assign(n, std::nan(""));
    params.flags.assign(n, Drift::Finite);
    FitReport report;

    ActiveSystem sys;
    for (int i = 0; i < n; ++i) {
        sys.ids.push_back(i);
        sys.rd.push_back(static_cast<double>(d[i]));
        sys.a.push_back(opts.init_value);
    }
    peel(sys, params.flags, report.diverged);

    int t = 0;
    double res = sys.ids.empty() ? 0.0 : residual_max(sys);
    while (!sys.ids.empty() && res > opts.tolerance && t < opts.max_iterations) {
        ++t;
        const size_t m = sys.ids.size();
        std::vector<double> inv(m), a_new(m);
        for (size_t j = 0; j < m; ++j) inv[j] = 1.0 / sys.a[j];
        for (size_t i = 0; i < m; ++i) {
            double s = kernels::recip_shift_sum(inv.data(), m, sys.a[i]) -
                       1.0 / (inv[i] + sys.a[i]);
            a_new[i] = sys.rd[i] / s;
        }
        sys.a = a_new;

        // Coordinates escaping the trust interval signal a boundary
        // degree sequence; flag them and keep fitting the rest.
        bool escaped = false;
        for (size_t p = sys.ids.size(); p-- > 0;) {
            Drift dir = Drift::Finite;
            if (sys.a[p] > opts.divergence_ceiling) dir = Drift::ToInfinity;
            else if (sys.a[p] < opts.divergence_floor) dir = Drift::ToZero;
            if (dir == Drift::Finite) continue;
            params.flags[sys.ids[p]] = dir;
            report.diverged.push_back({sys.ids[p], false, dir});
            if (dir == Drift::ToInfinity)
                for (size_t q = 0; q < sys.ids.size(); ++q)
                    if (q != p) sys.rd[q] -= 1.0;
            sys.remove(p);
            escaped = true;
        }
        if (escaped) peel(sys, params.flags, report.diverged);
        res = sys.ids.empty() ? 0.0 : residual_max(sys);
    }

    for (size_t p = 0; p < sys.ids.size(); ++p) params.alpha[sys.ids[p]] = sys.a[p];
    for (int i = 0; i < n; ++i) {
        if (params.flags[i] == Drift::ToZero) params.alpha[i] = 0.0;
        else if (params.flags[i] == Drift::ToInfinity) params.alpha[i] = kPosInf;
    }

    report.iterations = t;
    report.final_residual = res;
    report.loglik = log_likelihood_alpha(g, params);
    report.converged = report.diverged.empty() && res <= opts.tolerance;
    return {params, report};
}

}  // namespace hetblock
