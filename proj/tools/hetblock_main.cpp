// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "hetblock/alpha.hpp"
#include "hetblock/blockmodel.hpp"
#include "hetblock/generate.hpp"
#include "hetblock/graph.hpp"
#include "hetblock/io.hpp"
#include "hetblock/rasch.hpp"
#include "hetblock/realizability.hpp"

using json = nlohmann::ordered_json;
using namespace hetblock;

namespace {

// Exit-code contract: scripts must be able to tell boundary phenomena
// (divergence) apart from bugs and budget exhaustion.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDiverged = 4;
constexpr int kExitNoConvergence = 5;

const char* drift_name(Drift d) {
    switch (d) {
        case Drift::ToZero: return "to_zero";
        case Drift::ToInfinity: return "to_infinity";
        case Drift::Undefined: return "undefined";
        default: return "finite";
    }
}

json report_to_json(const FitReport& r) {
    json j;
    j["iterations"] = r.iterations;
    j["residual"] = r.final_residual;
    j["converged"] = r.converged;
    j["loglik"] = r.loglik;
    j["diverged"] = json::array();
    for (const Divergence& d : r.diverged)
        j["diverged"].push_back({{"index", d.index},
                                 {"side", d.column ? "column" : "row"},
                                 {"direction", drift_name(d.direction)}});
    return j;
}

int fit_exit_code(const FitReport& r) {
    if (!r.diverged.empty()) return kExitDiverged;
    if (!r.converged) return kExitNoConvergence;
    return kExitOk;
}

void write_json(const std::string& path, const json& j) {
    atomic_write(path, j.dump(2) + "\n");
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    if (n < 2) return std::nan("");
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0 || syy == 0) return std::nan("");
    return sxy / std::sqrt(sxx * syy);
}

// Fitted cluster w plays the role of true cluster perm[w]; pick the
// permutation with the highest label agreement.
std::vector<int> best_permutation(const std::vector<int>& fitted,
                                  const std::vector<int>& truth, int k,
                                  double* agreement = nullptr) {
    std::vector<int> perm(k), best(k);
    std::iota(perm.begin(), perm.end(), 0);
    best = perm;
    int best_hits = -1;
    std::sort(perm.begin(), perm.end());
    do {
        int hits = 0;
        for (size_t i = 0; i < fitted.size(); ++i)
            if (perm[fitted[i]] == truth[i]) ++hits;
        if (hits > best_hits) {
            best_hits = hits;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (agreement) *agreement = static_cast<double>(best_hits) / fitted.size();
    return best;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        std::istringstream ts(tok);
        int v;
        std::string rest;
        if (!(ts >> v) || (ts >> rest) || v < 0)
            throw ParseError("expected comma-separated non-negative integers: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

struct SolverFlags {
    SolverOptions opts;
    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", opts.tolerance, "Margin-residual tolerance");
        cmd->add_option("--max-inner", opts.max_iterations, "Inner iteration budget");
        cmd->add_option("--div-floor", opts.divergence_floor,
                        "Coordinate below this is flagged divergent to 0");
        cmd->add_option("--div-ceil", opts.divergence_ceiling,
                        "Coordinate above this is flagged divergent to +inf");
        cmd->add_option("--init-value", opts.init_value, "Initial parameter value");
    }
};

std::string params_table_csv(const Graph& g, const std::vector<long long>& ids,
                             const std::vector<int>& labels_one_based,
                             const BlockParams& bp) {
    std::ostringstream out;
    out << "vertex,label,degree";
    for (int u = 0; u < bp.k; ++u) out << ",beta_" << (u + 1);
    out << '\n';
    std::vector<int> deg = g.degrees();
    for (int i = 0; i < g.n(); ++i) {
        out << ids[i] << ',' << labels_one_based[i] << ',' << deg[i];
        for (int u = 0; u < bp.k; ++u) out << ',' << format_double(bp.beta(i, u));
        out << '\n';
    }
    return out.str();
}

int cmd_fit_alpha(const std::string& input, const std::string& prefix,
                  const SolverOptions& opts) {
    LoadedGraph lg = read_edge_list(input);
    auto [params, report] = fit_alpha(lg.graph, opts);

    std::vector<int> deg = lg.graph.degrees();
    std::vector<double> beta = params.beta();
    std::ostringstream csv;
    csv << "vertex,degree,alpha,beta,flag\n";
    for (int i = 0; i < lg.graph.n(); ++i)
        csv << lg.vertex_ids[i] << ',' << deg[i] << ',' << format_double(params.alpha[i])
            << ',' << format_double(beta[i]) << ',' << drift_name(params.flags[i]) << '\n';
    atomic_write(prefix + "_params.csv", csv.str());
    write_json(prefix + "_report.json", report_to_json(report));
    return fit_exit_code(report);
}

int cmd_fit_rasch(const std::string& input, bool bipartite_edges,
                  const std::string& prefix, const SolverOptions& opts) {
    LoadedTable lt = read_table(input, bipartite_edges);
    auto [params, report] = fit_beta_gamma(lt.table, opts);

    std::vector<int> r = lt.table.row_sums();
    std::vector<int> c = lt.table.col_sums();
    std::ostringstream rows, cols;
    rows << "row,margin,b,beta,flag\n";
    for (int i = 0; i < lt.table.rows(); ++i) {
        double beta = params.b_flags[i] == Drift::Finite ? std::log(params.b[i])
                     : params.b_flags[i] == Drift::ToZero ? -INFINITY
                     : params.b_flags[i] == Drift::ToInfinity ? INFINITY
                                                              : std::nan("");
        rows << lt.row_ids[i] << ',' << r[i] << ',' << format_double(params.b[i]) << ','
             << format_double(beta) << ',' << drift_name(params.b_flags[i]) << '\n';
    }
    cols << "col,margin,g,gamma,flag\n";
    for (int j = 0; j < lt.table.cols(); ++j) {
        double gamma = params.g_flags[j] == Drift::Finite ? std::log(params.g[j])
                      : params.g_flags[j] == Drift::ToZero ? -INFINITY
                      : params.g_flags[j] == Drift::ToInfinity ? INFINITY
                                                               : std::nan("");
        cols << lt.col_ids[j] << ',' << c[j] << ',' << format_double(params.g[j]) << ','
             << format_double(gamma) << ',' << drift_name(params.g_flags[j]) << '\n';
    }
    atomic_write(prefix + "_rows.csv", rows.str());
    atomic_write(prefix + "_cols.csv", cols.str());
    write_json(prefix + "_report.json", report_to_json(report));
    return fit_exit_code(report);
}

json block_report_json(const BlockFitResult& res, int k) {
    json j;
    j["iterations"] = res.report.iterations;
    j["residual"] = res.report.final_residual;
    j["converged"] = res.report.converged;
    j["loglik"] = res.report.loglik;
    j["loglik_trace"] = res.loglik_trace;
    j["diverged"] = json::array();
    for (const Divergence& d : res.report.diverged)
        j["diverged"].push_back({{"vertex", d.index / k},
                                 {"cluster", d.index % k + 1},
                                 {"direction", drift_name(d.direction)}});
    j["notes"] = res.notes;
    return j;
}

int cmd_fit_blocks(const std::string& input, const std::string& prefix, EmOptions opts,
                   const std::string& init_file) {
    LoadedGraph lg = read_edge_list(input);
    if (opts.k > lg.graph.n())
        throw CLI::ValidationError("--k exceeds the number of vertices");
    if (opts.init == InitMode::File) {
        LoadedPartition lp = read_partition_csv(init_file);
        if (lp.vertex_ids.size() != lg.vertex_ids.size())
            throw ParseError(init_file + ": partition size does not match graph");
        opts.init_partition.k = opts.k;
        opts.init_partition.labels.assign(lg.graph.n(), -1);
        for (size_t r = 0; r < lp.vertex_ids.size(); ++r) {
            auto it = std::lower_bound(lg.vertex_ids.begin(), lg.vertex_ids.end(),
                                       lp.vertex_ids[r]);
            if (it == lg.vertex_ids.end() || *it != lp.vertex_ids[r])
                throw ParseError(init_file + ": unknown vertex id " +
                                 std::to_string(lp.vertex_ids[r]));
            int label = lp.labels[r] - 1;
            if (label < 0 || label >= opts.k)
                throw ParseError(init_file + ": cluster out of range for vertex " +
                                 std::to_string(lp.vertex_ids[r]));
            opts.init_partition.labels[it - lg.vertex_ids.begin()] = label;
        }
        for (int l : opts.init_partition.labels)
            if (l < 0) throw ParseError(init_file + ": missing vertices in partition");
    }

    BlockFitResult res = fit_blocks(lg.graph, opts);

    std::vector<int> labels1(res.partition.labels.size());
    for (size_t i = 0; i < labels1.size(); ++i) labels1[i] = res.partition.labels[i] + 1;
    write_partition_csv(prefix + "_partition.csv", lg.vertex_ids, labels1);
    atomic_write(prefix + "_params.csv",
                 params_table_csv(lg.graph, lg.vertex_ids, labels1, res.params));
    write_json(prefix + "_report.json", block_report_json(res, opts.k));

    if (!res.report.diverged.empty()) return kExitDiverged;
    if (!res.report.converged) return kExitNoConvergence;
    return kExitOk;
}

int cmd_check_seq(const std::string& seq, const std::string& rows,
                  const std::string& cols, bool as_json) {
    json j;
    bool ok;
    if (!rows.empty()) {
        Margins m{parse_int_list(rows), parse_int_list(cols)};
        ok = is_bipartite_realizable(m);
        j["kind"] = "bipartite";
        j["realizable"] = ok;
        if (!as_json)
            std::cout << (ok ? "realizable" : "not realizable") << '\n';
    } else {
        std::vector<int> d;
        std::istringstream ss(seq);
        int v;
        while (ss >> v) {
            if (v < 0) throw ParseError("negative degree in sequence");
            d.push_back(v);
        }
        if (!ss.eof()) throw ParseError("non-integer token in sequence");
        ok = is_graphic(d);
        j["kind"] = "graphic";
        j["graphic"] = ok;
        if (ok) {
            InteriorCheck c = interior_degree_check(d, static_cast<int>(d.size()));
            j["boundary"] = c.verdict == DegreeVerdict::Boundary;
            j["reason"] = c.reason;
            if (!as_json)
                std::cout << "graphic"
                          << (c.verdict == DegreeVerdict::Boundary
                                  ? " (boundary: " + c.reason + ")"
                                  : " (interior by the degree screen)")
                          << '\n';
        } else if (!as_json) {
            std::cout << "not graphic\n";
        }
    }
    if (as_json) std::cout << j.dump(2) << '\n';
    return kExitOk;
}

BlockParams read_block_params_csv(const std::string& path, int n, int k,
                                  const std::vector<long long>& ids) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    BlockParams bp(n, k);
    std::string line;
    int lineno = 0;
    bool header = true;
    int seen = 0;
    int beta_offset = 2;  // vertex,label,beta_*; a degree column shifts this to 3
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.find("degree") != std::string::npos) beta_offset = 3;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (static_cast<int>(cells.size()) != beta_offset + k)
            throw ParseError(path + ":" + std::to_string(lineno) + ": wrong column count");
        long long vid = std::stoll(cells[0]);
        auto it = std::lower_bound(ids.begin(), ids.end(), vid);
        if (it == ids.end() || *it != vid)
            throw ParseError(path + ":" + std::to_string(lineno) + ": unknown vertex id");
        int i = static_cast<int>(it - ids.begin());
        for (int u = 0; u < k; ++u) {
            const std::string& s = cells[beta_offset + u];
            double v;
            if (s == "inf") v = INFINITY;
            else if (s == "-inf") v = -INFINITY;
            else if (s == "nan") v = std::nan("");
            else v = std::stod(s);
            bp.beta(i, u) = v;
        }
        ++seen;
    }
    if (seen != n) throw ParseError(path + ": expected " + std::to_string(n) + " rows");
    return bp;
}

int cmd_generate(bool fig1, uint64_t seed, const std::string& partition_file,
                 const std::string& params_file, const std::string& prefix) {
    SyntheticInstance inst;
    if (fig1) {
        inst = fig1_instance(seed);
    } else {
        LoadedPartition lp = read_partition_csv(partition_file);
        const int n = static_cast<int>(lp.vertex_ids.size());
        inst.partition.labels.resize(n);
        int k = 0;
        for (int i = 0; i < n; ++i) {
            inst.partition.labels[i] = lp.labels[i] - 1;
            k = std::max(k, lp.labels[i]);
        }
        inst.partition.k = k;
        std::vector<long long> ids = lp.vertex_ids;
        std::sort(ids.begin(), ids.end());
        inst.true_params = read_block_params_csv(params_file, n, k, ids);
        inst.true_params.pi.assign(k, 0.0);
        for (int l : inst.partition.labels) inst.true_params.pi[l] += 1.0 / n;
        inst.graph = sample_graph(inst.partition, inst.true_params, seed);
    }

    std::vector<long long> ids(inst.graph.n());
    std::iota(ids.begin(), ids.end(), 0LL);
    write_edge_list(prefix + "_edges.txt", inst.graph, &ids);
    std::vector<int> labels1(inst.partition.labels.size());
    for (size_t i = 0; i < labels1.size(); ++i) labels1[i] = inst.partition.labels[i] + 1;
    write_partition_csv(prefix + "_partition.csv", ids, labels1);
    atomic_write(prefix + "_true_params.csv",
                 params_table_csv(inst.graph, ids, labels1, inst.true_params));
    return kExitOk;
}

int cmd_experiment_fig1(uint64_t seed, const std::string& init, int outer_max,
                        const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    SyntheticInstance inst = fig1_instance(seed);

    EmOptions opts;
    opts.k = 3;
    opts.seed = seed;
    opts.outer_max = outer_max;
    if (init == "true") {
        opts.init = InitMode::File;
        opts.init_partition = inst.partition;
    } else if (init == "spectral") {
        opts.init = InitMode::Spectral;
    } else {
        throw CLI::ValidationError("--init must be 'true' or 'spectral'");
    }

    BlockFitResult res = fit_blocks(inst.graph, opts);

    double agreement = 0.0;
    std::vector<int> perm =
        best_permutation(res.partition.labels, inst.partition.labels, 3, &agreement);
    std::vector<int> inv(3);
    for (int w = 0; w < 3; ++w) inv[perm[w]] = w;

    json summary;
    summary["seed"] = seed;
    summary["init"] = init;
    summary["outer_iterations"] = res.report.iterations;
    summary["label_agreement"] = agreement;
    summary["panels"] = json::array();
    // Pooled scatter across all panels, each panel centered before
    // pooling. Centering makes the statistic invariant to the per-pair
    // scaling freedom the cross fits are only defined up to, and keeps
    // the pooled correlation from being inflated by the spread of the
    // panel means. Misclassified vertices carry estimates from the
    // wrong sub-fit, so the pooled statistic uses matched points only;
    // classification quality is reported separately as label_agreement.
    std::vector<double> pooled_x, pooled_y;
    size_t matched_total = 0, finite_total = 0;
    for (int u = 0; u < 3; ++u) {
        for (int v = 0; v < 3; ++v) {
            std::ostringstream csv;
            csv << "vertex,true_beta,estimated_beta,matched\n";
            std::vector<double> xs, ys, mxs, mys;
            int skipped = 0;
            for (int i = 0; i < inst.graph.n(); ++i) {
                if (inst.partition.labels[i] != u) continue;
                double tb = inst.true_params.beta(i, v);
                double eb = res.params.beta(i, inv[v]);
                bool matched = perm[res.partition.labels[i]] == u;
                csv << i << ',' << format_double(tb) << ',' << format_double(eb)
                    << ',' << (matched ? 1 : 0) << '\n';
                if (std::isfinite(eb)) {
                    xs.push_back(tb);
                    ys.push_back(eb);
                    if (matched) {
                        mxs.push_back(tb);
                        mys.push_back(eb);
                    }
                } else {
                    ++skipped;
                }
            }
            std::string name = "panel_" + std::to_string(u + 1) + std::to_string(v + 1);
            atomic_write(out_dir + "/" + name + ".csv", csv.str());
            double r = pearson(xs, ys);
            double mae = 0.0;
            for (size_t t = 0; t < xs.size(); ++t) mae += std::abs(xs[t] - ys[t]);
            if (!xs.empty()) mae /= xs.size();
            double rm = pearson(mxs, mys);
            if (!mxs.empty()) {
                double cx = 0.0, cy = 0.0;
                for (double x : mxs) cx += x;
                for (double y : mys) cy += y;
                cx /= mxs.size();
                cy /= mys.size();
                for (size_t t = 0; t < mxs.size(); ++t) {
                    pooled_x.push_back(mxs[t] - cx);
                    pooled_y.push_back(mys[t] - cy);
                }
            }
            matched_total += mxs.size();
            finite_total += xs.size();
            summary["panels"].push_back({{"source_cluster", u + 1},
                                         {"target_cluster", v + 1},
                                         {"pearson_r", r},
                                         {"pearson_r_matched", rm},
                                         {"mae", mae},
                                         {"points", xs.size()},
                                         {"matched_points", mxs.size()},
                                         {"nonfinite_skipped", skipped}});
        }
    }
    summary["pooled_pearson_r_matched"] = pearson(pooled_x, pooled_y);
    summary["pooled_matched_points"] = matched_total;
    summary["pooled_finite_points"] = finite_total;
    write_json(out_dir + "/summary.json", summary);

    std::vector<long long> ids(inst.graph.n());
    std::iota(ids.begin(), ids.end(), 0LL);
    std::vector<int> labels1(res.partition.labels.size());
    for (size_t i = 0; i < labels1.size(); ++i)
        labels1[i] = perm[res.partition.labels[i]] + 1;
    write_partition_csv(out_dir + "/partition.csv", ids, labels1);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-parameterized random-graph model fitting"};
    app.require_subcommand(1);

    // fit-alpha
    auto* fa = app.add_subcommand("fit-alpha", "Fit the degree model to a graph");
    std::string fa_input, fa_prefix = "alpha";
    SolverFlags fa_flags;
    fa->add_option("edgelist", fa_input, "Edge-list file")->required();
    fa->add_option("--out-prefix", fa_prefix, "Output file prefix");
    fa_flags.attach(fa);

    // fit-rasch
    auto* fr = app.add_subcommand("fit-rasch", "Fit the bipartite margin model to a table");
    std::string fr_input, fr_prefix = "rasch";
    bool fr_bip_edges = false;
    SolverFlags fr_flags;
    fr->add_option("table", fr_input, "CSV 0/1 table or bipartite edge list")->required();
    fr->add_flag("--bipartite-edges", fr_bip_edges, "Input is `row col` edge lines");
    fr->add_option("--out-prefix", fr_prefix, "Output file prefix");
    fr_flags.attach(fr);

    // fit-blocks
    auto* fb = app.add_subcommand("fit-blocks", "EM fit of the heterogeneous block model");
    std::string fb_input, fb_prefix = "blocks", fb_init = "spectral", fb_init_file;
    EmOptions fb_opts;
    SolverFlags fb_flags;
    fb->add_option("edgelist", fb_input, "Edge-list file")->required();
    fb->add_option("--k", fb_opts.k, "Number of clusters")->required()
        ->check(CLI::PositiveNumber);
    fb->add_option("--init", fb_init, "spectral | random | file");
    fb->add_option("--init-file", fb_init_file, "Initial partition CSV (with --init file)");
    fb->add_option("--seed", fb_opts.seed, "Random seed");
    fb->add_option("--max-outer", fb_opts.outer_max, "Outer EM iteration budget");
    fb->add_option("--out-prefix", fb_prefix, "Output file prefix");
    fb_flags.attach(fb);

    // check-seq
    auto* cs = app.add_subcommand("check-seq", "Graphic / bipartite-realizable verdicts");
    std::string cs_seq, cs_rows, cs_cols;
    bool cs_json = false;
    cs->add_option("sequence", cs_seq, "Whitespace-separated degree sequence");
    cs->add_option("--bipartite-rows", cs_rows, "Comma-separated row sums");
    cs->add_option("--bipartite-cols", cs_cols, "Comma-separated column sums");
    cs->add_flag("--json", cs_json, "Machine-readable output");

    // generate
    auto* gen = app.add_subcommand("generate", "Sample a graph from the block model");
    bool gen_fig1 = false;
    uint64_t gen_seed = 0;
    std::string gen_prefix = "generated", gen_partition, gen_params;
    gen->add_flag("--fig1", gen_fig1, "Built-in 3-cluster benchmark instance");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--partition", gen_partition, "Partition CSV (vertex,cluster)");
    gen->add_option("--params", gen_params, "Parameter CSV (vertex,label[,degree],beta_*)");
    gen->add_option("--out-prefix", gen_prefix, "Output file prefix");

    // experiment-fig1
    auto* ex = app.add_subcommand("experiment-fig1",
                                  "Parameter-recovery experiment on the benchmark instance");
    uint64_t ex_seed = 0;
    std::string ex_init = "true", ex_dir = "fig1_out";
    int ex_outer = 100;
    ex->add_option("--seed", ex_seed, "Random seed");
    ex->add_option("--init", ex_init, "true | spectral");
    ex->add_option("--max-outer", ex_outer, "Outer EM iteration budget");
    ex->add_option("--out-dir", ex_dir, "Output directory");

    try {
        app.parse(argc, argv);

        if (fa->parsed()) return cmd_fit_alpha(fa_input, fa_prefix, fa_flags.opts);
        if (fr->parsed())
            return cmd_fit_rasch(fr_input, fr_bip_edges, fr_prefix, fr_flags.opts);
        if (fb->parsed()) {
            if (fb_init == "spectral") fb_opts.init = InitMode::Spectral;
            else if (fb_init == "random") fb_opts.init = InitMode::Random;
            else if (fb_init == "file") fb_opts.init = InitMode::File;
            else throw CLI::ValidationError("--init must be spectral, random, or file");
            if (fb_opts.init == InitMode::File && fb_init_file.empty())
                throw CLI::ValidationError("--init file requires --init-file");
            fb_opts.inner = fb_flags.opts;
            return cmd_fit_blocks(fb_input, fb_prefix, fb_opts, fb_init_file);
        }
        if (cs->parsed()) {
            if (cs_rows.empty() != cs_cols.empty())
                throw CLI::ValidationError(
                    "--bipartite-rows and --bipartite-cols go together");
            if (cs_seq.empty() && cs_rows.empty())
                throw CLI::ValidationError("provide a sequence or bipartite margins");
            return cmd_check_seq(cs_seq, cs_rows, cs_cols, cs_json);
        }
        if (gen->parsed()) {
            if (!gen_fig1 && (gen_partition.empty() || gen_params.empty()))
                throw CLI::ValidationError("use --fig1 or both --partition and --params");
            return cmd_generate(gen_fig1, gen_seed, gen_partition, gen_params, gen_prefix);
        }
        if (ex->parsed()) return cmd_experiment_fig1(ex_seed, ex_init, ex_outer, ex_dir);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
