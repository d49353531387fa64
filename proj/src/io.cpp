// SPDX-License-Identifier: Apache-2.0
#include "hetblock/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace hetblock {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long long parse_id(const std::string& tok, const std::string& path, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(path + ":" + std::to_string(line) +
                         ": expected non-negative integer, got '" + tok + "'");
    }
}

std::vector<std::pair<long long, long long>> read_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::vector<std::pair<long long, long long>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ss(t);
        std::string a, b, extra;
        if (!(ss >> a >> b) || (ss >> extra))
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected two whitespace-separated ids");
        pairs.emplace_back(parse_id(a, path, lineno), parse_id(b, path, lineno));
        if (pairs.back().first == pairs.back().second)
            throw ParseError(path + ":" + std::to_string(lineno) + ": self-loop rejected");
    }
    return pairs;
}

}  // namespace

LoadedGraph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::vector<std::tuple<long long, long long, int>> edges;
    std::set<long long> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ss(t);
        std::string a, b, extra;
        if (!(ss >> a >> b) || (ss >> extra))
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected two whitespace-separated vertex ids");
        long long u = parse_id(a, path, lineno);
        long long v = parse_id(b, path, lineno);
        if (u == v)
            throw ParseError(path + ":" + std::to_string(lineno) + ": self-loop rejected");
        edges.emplace_back(u, v, lineno);
        ids.insert(u);
        ids.insert(v);
    }
    LoadedGraph out;
    out.vertex_ids.assign(ids.begin(), ids.end());
    std::map<long long, int> index;
    for (size_t i = 0; i < out.vertex_ids.size(); ++i)
        index[out.vertex_ids[i]] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.vertex_ids.size()));
    for (auto& [u, v, ln] : edges) {
        int i = index[u], j = index[v];
        if (out.graph.has_edge(i, j))
            throw ParseError(path + ":" + std::to_string(ln) + ": duplicate edge rejected");
        out.graph.add_edge(i, j);
    }
    return out;
}

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<long long>* vertex_ids) {
    std::ostringstream out;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.has_edge(i, j)) {
                long long u = vertex_ids ? (*vertex_ids)[i] : i;
                long long v = vertex_ids ? (*vertex_ids)[j] : j;
                out << u << ' ' << v << '\n';
            }
    atomic_write(path, out.str());
}

LoadedTable read_table(const std::string& path, bool bipartite_edges) {
    LoadedTable out;
    if (bipartite_edges) {
        auto pairs = read_pairs(path);
        std::set<long long> rows, cols;
        for (auto& [r, c] : pairs) { rows.insert(r); cols.insert(c); }
        out.row_ids.assign(rows.begin(), rows.end());
        out.col_ids.assign(cols.begin(), cols.end());
        std::map<long long, int> ri, ci;
        for (size_t i = 0; i < out.row_ids.size(); ++i) ri[out.row_ids[i]] = static_cast<int>(i);
        for (size_t j = 0; j < out.col_ids.size(); ++j) ci[out.col_ids[j]] = static_cast<int>(j);
        out.table = BipartiteTable(static_cast<int>(out.row_ids.size()),
                                   static_cast<int>(out.col_ids.size()));
        for (auto& [r, c] : pairs) out.table.set(ri[r], ci[c], 1);
        return out;
    }

    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::vector<std::vector<uint8_t>> rows;
    std::string line;
    int lineno = 0;
    size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<uint8_t> row;
        std::istringstream ss(t);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::string c = trim(cell);
            if (c == "0") row.push_back(0);
            else if (c == "1") row.push_back(1);
            else
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": non-binary entry '" + c + "'");
        }
        if (rows.empty()) width = row.size();
        else if (row.size() != width)
            throw ParseError(path + ":" + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    out.table = BipartiteTable(static_cast<int>(rows.size()),
                               static_cast<int>(width));
    for (size_t i = 0; i < rows.size(); ++i) {
        out.row_ids.push_back(static_cast<long long>(i));
        for (size_t j = 0; j < width; ++j) out.table.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    }
    for (size_t j = 0; j < width; ++j) out.col_ids.push_back(static_cast<long long>(j));
    return out;
}

LoadedPartition read_partition_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    LoadedPartition out;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (!t.empty() && !std::isdigit(static_cast<unsigned char>(t[0]))) continue;
        }
        size_t comma = t.find(',');
        if (comma == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected vertex,cluster");
        out.vertex_ids.push_back(parse_id(trim(t.substr(0, comma)), path, lineno));
        long long c = parse_id(trim(t.substr(comma + 1)), path, lineno);
        if (c < 1)
            throw ParseError(path + ":" + std::to_string(lineno) + ": cluster must be >= 1");
        out.labels.push_back(static_cast<int>(c));
    }
    return out;
}

void write_partition_csv(const std::string& path,
                         const std::vector<long long>& vertex_ids,
                         const std::vector<int>& labels_one_based) {
    std::ostringstream out;
    out << "vertex,cluster\n";
    for (size_t i = 0; i < vertex_ids.size(); ++i)
        out << vertex_ids[i] << ',' << labels_one_based[i] << '\n';
    atomic_write(path, out.str());
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error(tmp + ": cannot open for writing");
        out << content;
        if (!out) throw std::runtime_error(tmp + ": write failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error(path + ": rename failed");
}

}  // namespace hetblock
