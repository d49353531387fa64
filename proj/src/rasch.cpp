// SPDX-License-Identifier: Apache-2.0
#include "hetblock/rasch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hetblock/kernels.hpp"
#include "logodds.hpp"

namespace hetblock {

using detail::kNegInf;
using detail::kPosInf;

namespace {

double log_value(double v, Drift f) {
    switch (f) {
        case Drift::ToZero: return kNegInf;
        case Drift::ToInfinity: return kPosInf;
        case Drift::Undefined: return 0.0;
        default: return std::log(v);
    }
}

// Opposite drifts (one factor to +inf, the other to 0) leave the cell
// indeterminate on the log-odds scale; NaN signals that to the caller.
double combine_logodds(double x, double y) {
    if (std::isinf(x) && std::isinf(y) && x != y) return std::nan("");
    if (x == kPosInf || y == kPosInf) return kPosInf;
    if (x == kNegInf || y == kNegInf) return kNegInf;
    return x + y;
}

struct ActiveBG {
    std::vector<int> row_ids, col_ids;
    std::vector<double> rr, rc;  // residual margins
    std::vector<double> b, g;

    void remove_row(size_t p) {
        row_ids.erase(row_ids.begin() + p);
        rr.erase(rr.begin() + p);
        b.erase(b.begin() + p);
    }
    void remove_col(size_t p) {
        col_ids.erase(col_ids.begin() + p);
        rc.erase(rc.begin() + p);
        g.erase(g.begin() + p);
    }
};

void flag_coord(BetaGammaParams& params, std::vector<Divergence>& diverged,
                int id, bool column, Drift dir) {
    (column ? params.g_flags[id] : params.b_flags[id]) = dir;
    if (dir != Drift::Undefined) diverged.push_back({id, column, dir});
}

// Removes rows/columns whose residual margin forces the parameter to 0
// or +inf (margin 0, or saturated against the remaining counterpart).
// Coordinates left without any counterpart and zero residual are
// unidentified.
void peel(ActiveBG& sys, BetaGammaParams& params, std::vector<Divergence>& diverged) {
    bool changed = true;
    while (changed) {
        changed = false;
        const size_t m_act = sys.row_ids.size();
        const size_t n_act = sys.col_ids.size();
        if (m_act == 0 && n_act == 0) break;
        if (n_act == 0) {
            // No columns left: every cell in these rows is forced.
            for (size_t p = m_act; p-- > 0;) {
                Drift dir = sys.rr[p] == 0.0 ? Drift::Undefined
                          : sys.rr[p] > 0.0  ? Drift::ToInfinity
                                             : Drift::ToZero;
                flag_coord(params, diverged, sys.row_ids[p], false, dir);
                sys.remove_row(p);
            }
            break;
        }
        if (m_act == 0) {
            for (size_t p = n_act; p-- > 0;) {
                Drift dir = sys.rc[p] == 0.0 ? Drift::Undefined
                          : sys.rc[p] > 0.0  ? Drift::ToInfinity
                                             : Drift::ToZero;
                flag_coord(params, diverged, sys.col_ids[p], true, dir);
                sys.remove_col(p);
            }
            break;
        }
        for (size_t p = m_act; p-- > 0;) {
            if (sys.rr[p] > 0.0) continue;
            flag_coord(params, diverged, sys.row_ids[p], false, Drift::ToZero);
            sys.remove_row(p);
            changed = true;
        }
        for (size_t p = n_act; p-- > 0;) {
            if (sys.rc[p] > 0.0) continue;
            flag_coord(params, diverged, sys.col_ids[p], true, Drift::ToZero);
            sys.remove_col(p);
            changed = true;
        }
        if (changed) continue;
        // Saturated batches: a full row forces a 1 into every column.
        std::vector<size_t> sat;
        for (size_t p = 0; p < sys.row_ids.size(); ++p)
            if (sys.rr[p] >= static_cast<double>(sys.col_ids.size())) sat.push_back(p);
        if (!sat.empty()) {
            for (size_t p : sat)
                flag_coord(params, diverged, sys.row_ids[p], false, Drift::ToInfinity);
            for (double& v : sys.rc) v -= static_cast<double>(sat.size());
            for (size_t s = sat.size(); s-- > 0;) sys.remove_row(sat[s]);
            changed = true;
            continue;
        }
        sat.clear();
        for (size_t p = 0; p < sys.col_ids.size(); ++p)
            if (sys.rc[p] >= static_cast<double>(sys.row_ids.size())) sat.push_back(p);
        if (!sat.empty()) {
            for (size_t p : sat)
                flag_coord(params, diverged, sys.col_ids[p], true, Drift::ToInfinity);
            for (double& v : sys.rr) v -= static_cast<double>(sat.size());
            for (size_t s = sat.size(); s-- > 0;) sys.remove_col(sat[s]);
            changed = true;
        }
    }
}

double residual_max(const ActiveBG& sys) {
    const size_t m = sys.row_ids.size();
    const size_t n = sys.col_ids.size();
    std::vector<double> inv_b(m), inv_g(n);
    for (size_t i = 0; i < m; ++i) inv_b[i] = 1.0 / sys.b[i];
    for (size_t j = 0; j < n; ++j) inv_g[j] = 1.0 / sys.g[j];
    double worst = 0.0;
    for (size_t i = 0; i < m; ++i) {
        double e = sys.b[i] * kernels::recip_shift_sum(inv_g.data(), n, sys.b[i]);
        worst = std::max(worst, std::abs(sys.rr[i] - e));
    }
    for (size_t j = 0; j < n; ++j) {
        double e = sys.g[j] * kernels::recip_shift_sum(inv_b.data(), m, sys.g[j]);
        worst = std::max(worst, std::abs(sys.rc[j] - e));
    }
    return worst;
}

}  // namespace

BetaGammaParams BetaGammaParams::finite(std::vector<double> b, std::vector<double> g) {
    BetaGammaParams p;
    p.b_flags.assign(b.size(), Drift::Finite);
    p.g_flags.assign(g.size(), Drift::Finite);
    p.b = std::move(b);
    p.g = std::move(g);
    return p;
}

double table_probability(double b_i, double g_j) {
    double odds = b_i * g_j;
    if (std::isinf(odds)) return 1.0;
    return odds / (1.0 + odds);
}

double rho(const BetaGammaParams& p1, const BetaGammaParams& p2) {
    if (p1.b.size() != p2.b.size() || p1.g.size() != p2.g.size())
        throw std::invalid_argument("rho: shape mismatch");
    double worst = 1.0;
    for (size_t i = 0; i < p1.b.size(); ++i)
        worst = std::max({worst, p1.b[i] / p2.b[i], p2.b[i] / p1.b[i]});
    for (size_t j = 0; j < p1.g.size(); ++j)
        worst = std::max({worst, p1.g[j] / p2.g[j], p2.g[j] / p1.g[j]});
    return worst;
}

BetaGammaParams normalize(const BetaGammaParams& p) {
    double sb = 0.0, sg = 0.0;
    long long mf = 0, nf = 0;
    for (size_t i = 0; i < p.b.size(); ++i)
        if (p.b_flags[i] == Drift::Finite) { sb += std::log(p.b[i]); ++mf; }
    for (size_t j = 0; j < p.g.size(); ++j)
        if (p.g_flags[j] == Drift::Finite) { sg += std::log(p.g[j]); ++nf; }
    if (mf + nf == 0)
        throw std::domain_error("normalize: no finite coordinates");
    double log_kappa;
    if (mf != nf)
        log_kappa = -(sb + sg) / static_cast<double>(mf - nf);
    else
        log_kappa = (sg - sb) / static_cast<double>(2 * mf);
    double kappa = std::exp(log_kappa);
    BetaGammaParams out = p;
    for (size_t i = 0; i < out.b.size(); ++i)
        if (out.b_flags[i] == Drift::Finite) out.b[i] *= kappa;
    for (size_t j = 0; j < out.g.size(); ++j)
        if (out.g_flags[j] == Drift::Finite) out.g[j] /= kappa;
    return out;
}

double log_likelihood_bg(const BipartiteTable& t, const BetaGammaParams& p) {
    double ll = 0.0;
    for (int i = 0; i < t.rows(); ++i) {
        double lb = log_value(p.b[i], p.b_flags[i]);
        for (int j = 0; j < t.cols(); ++j) {
            double lg = log_value(p.g[j], p.g_flags[j]);
            ll += detail::bernoulli_logprob(combine_logodds(lb, lg), t.at(i, j) != 0);
        }
    }
    return ll;
}

double log_likelihood_bg_factorized(const BipartiteTable& t, const BetaGammaParams& p) {
    std::vector<int> r = t.row_sums();
    std::vector<int> c = t.col_sums();
    double ll = 0.0;
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            ll -= std::log1p(p.b[i] * p.g[j]);
    for (int i = 0; i < t.rows(); ++i) ll += r[i] * std::log(p.b[i]);
    for (int j = 0; j < t.cols(); ++j) ll += c[j] * std::log(p.g[j]);
    return ll;
}

BetaGammaParams sweep_beta_gamma(const std::vector<double>& r,
                                 const std::vector<double>& c,
                                 const BetaGammaParams& p) {
    const size_t m = r.size();
    const size_t n = c.size();
    if (p.b.size() != m || p.g.size() != n)
        throw std::invalid_argument("sweep_beta_gamma: shape mismatch");
    BetaGammaParams out = p;
    std::vector<double> inv_g(n);
    for (size_t j = 0; j < n; ++j) inv_g[j] = 1.0 / p.g[j];
    for (size_t i = 0; i < m; ++i)
        out.b[i] = r[i] / kernels::recip_shift_sum(inv_g.data(), n, p.b[i]);
    std::vector<double> inv_b(m);
    for (size_t i = 0; i < m; ++i) inv_b[i] = 1.0 / out.b[i];
    for (size_t j = 0; j < n; ++j)
        out.g[j] = c[j] / kernels::recip_shift_sum(inv_b.data(), m, p.g[j]);
    return out;
}

std::pair<BetaGammaParams, FitReport> fit_beta_gamma(const BipartiteTable& t,
                                                     const SolverOptions& opts,
                                                     const BetaGammaParams* init) {
    const int m = t.rows();
    const int n = t.cols();
    std::vector<int> r = t.row_sums();
    std::vector<int> c = t.col_sums();

    BetaGammaParams params;
    params.b.assign(m, std::nan(""));
    params.g.assign(n, std::nan(""));
    params.b_flags.assign(m, Drift::Finite);
    params.g_flags.assign(n, Drift::Finite);
    FitReport report;

    ActiveBG sys;
    for (int i = 0; i < m; ++i) {
        sys.row_ids.push_back(i);
        sys.rr.push_back(static_cast<double>(r[i]));
        sys.b.push_back(init ? init->b[i] : opts.init_value);
    }
    for (int j = 0; j < n; ++j) {
        sys.col_ids.push_back(j);
        sys.rc.push_back(static_cast<double>(c[j]));
        sys.g.push_back(init ? init->g[j] : opts.init_value);
    }
    peel(sys, params, report.diverged);

    int iter = 0;
    bool empty = sys.row_ids.empty() && sys.col_ids.empty();
    double res = empty ? 0.0 : residual_max(sys);
    while (!empty && res > opts.tolerance && iter < opts.max_iterations) {
        ++iter;
        const size_t ma = sys.row_ids.size();
        const size_t na = sys.col_ids.size();
        // Phase I: rows from the previous iterate.
        std::vector<double> inv_g(na);
        for (size_t j = 0; j < na; ++j) inv_g[j] = 1.0 / sys.g[j];
        std::vector<double> b_new(ma);
        for (size_t i = 0; i < ma; ++i)
            b_new[i] = sys.rr[i] / kernels::recip_shift_sum(inv_g.data(), na, sys.b[i]);
        // Phase II: columns from the refreshed rows.
        std::vector<double> inv_b(ma);
        for (size_t i = 0; i < ma; ++i) inv_b[i] = 1.0 / b_new[i];
        std::vector<double> g_new(na);
        for (size_t j = 0; j < na; ++j)
            g_new[j] = sys.rc[j] / kernels::recip_shift_sum(inv_b.data(), ma, sys.g[j]);
        sys.b = b_new;
        sys.g = g_new;

        bool escaped = false;
        for (size_t p = sys.row_ids.size(); p-- > 0;) {
            Drift dir = sys.b[p] > opts.divergence_ceiling ? Drift::ToInfinity
                      : sys.b[p] < opts.divergence_floor   ? Drift::ToZero
                                                           : Drift::Finite;
            if (dir == Drift::Finite) continue;
            flag_coord(params, report.diverged, sys.row_ids[p], false, dir);
            if (dir == Drift::ToInfinity)
                for (double& v : sys.rc) v -= 1.0;
            sys.remove_row(p);
            escaped = true;
        }
        for (size_t p = sys.col_ids.size(); p-- > 0;) {
            Drift dir = sys.g[p] > opts.divergence_ceiling ? Drift::ToInfinity
                      : sys.g[p] < opts.divergence_floor   ? Drift::ToZero
                                                           : Drift::Finite;
            if (dir == Drift::Finite) continue;
            flag_coord(params, report.diverged, sys.col_ids[p], true, dir);
            if (dir == Drift::ToInfinity)
                for (double& v : sys.rr) v -= 1.0;
            sys.remove_col(p);
            escaped = true;
        }
        if (escaped) peel(sys, params, report.diverged);
        empty = sys.row_ids.empty() && sys.col_ids.empty();
        res = empty ? 0.0 : residual_max(sys);
    }

    for (size_t p = 0; p < sys.row_ids.size(); ++p) params.b[sys.row_ids[p]] = sys.b[p];
    for (size_t p = 0; p < sys.col_ids.size(); ++p) params.g[sys.col_ids[p]] = sys.g[p];
    for (int i = 0; i < m; ++i) {
        if (params.b_flags[i] == Drift::ToZero) params.b[i] = 0.0;
        else if (params.b_flags[i] == Drift::ToInfinity) params.b[i] = kPosInf;
    }
    for (int j = 0; j < n; ++j) {
        if (params.g_flags[j] == Drift::ToZero) params.g[j] = 0.0;
        else if (params.g_flags[j] == Drift::ToInfinity) params.g[j] = kPosInf;
    }

    bool any_finite = false;
    for (Drift f : params.b_flags) any_finite |= f == Drift::Finite;
    for (Drift f : params.g_flags) any_finite |= f == Drift::Finite;
    if (any_finite) params = normalize(params);

    report.iterations = iter;
    report.final_residual = res;
    report.loglik = log_likelihood_bg(t, params);
    report.converged = report.diverged.empty() && res <= opts.tolerance;
    return {params, report};
}

}  // namespace hetblock
