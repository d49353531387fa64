// SPDX-License-Identifier: Apache-2.0
#include "hetblock/graph.hpp"

#include <stdexcept>

namespace hetblock {

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("Graph::add_edge: vertex out of range");
    if (i == j)
        throw std::invalid_argument("Graph::add_edge: self-loop");
    adj_[static_cast<size_t>(i) * n_ + j] = 1;
    adj_[static_cast<size_t>(j) * n_ + i] = 1;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (int i = 0; i < n_; ++i) {
        int s = 0;
        const uint8_t* row = adj_.data() + static_cast<size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) s += row[j];
        d[i] = s;
    }
    return d;
}

long long Graph::edge_count() const {
    long long s = 0;
    for (uint8_t v : adj_) s += v;
    return s / 2;
}

std::vector<int> BipartiteTable::row_sums() const {
    std::vector<int> r(m_, 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += at(i, j);
    return r;
}

std::vector<int> BipartiteTable::col_sums() const {
    std::vector<int> c(n_, 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) c[j] += at(i, j);
    return c;
}

long long BipartiteTable::total() const {
    long long s = 0;
    for (uint8_t v : a_) s += v;
    return s;
}

BipartiteTable BipartiteTable::transposed() const {
    BipartiteTable t(n_, m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) t.set(j, i, at(i, j));
    return t;
}

std::vector<int> Partition::cluster_members(int u) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (labels[i] == u) out.push_back(i);
    return out;
}

std::vector<int> Partition::cluster_sizes() const {
    std::vector<int> s(k, 0);
    for (int l : labels) ++s[l];
    return s;
}

bool Partition::valid() const {
    if (k < 1) return false;
    for (int l : labels)
        if (l < 0 || l >= k) return false;
    return true;
}

Graph extract_subgraph(const Graph& g, const Partition& p, int u,
                       std::vector<int>* index_map) {
    if (u < 0 || u >= p.k)
        throw std::out_of_range("extract_subgraph: cluster index out of range");
    std::vector<int> members = p.cluster_members(u);
    Graph sub(static_cast<int>(members.size()));
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            if (g.has_edge(members[a], members[b]))
                sub.add_edge(static_cast<int>(a), static_cast<int>(b));
    if (index_map) *index_map = std::move(members);
    return sub;
}

BipartiteTable extract_bipartite(const Graph& g, const Partition& p, int u, int v,
                                 std::vector<int>* row_map, std::vector<int>* col_map) {
    if (u == v)
        throw std::invalid_argument("extract_bipartite: u == v, use extract_subgraph");
    if (u < 0 || u >= p.k || v < 0 || v >= p.k)
        throw std::out_of_range("extract_bipartite: cluster index out of range");
    std::vector<int> rows = p.cluster_members(u);
    std::vector<int> cols = p.cluster_members(v);
    BipartiteTable t(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b)
            if (g.has_edge(rows[a], cols[b]))
                t.set(static_cast<int>(a), static_cast<int>(b), 1);
    if (row_map) *row_map = std::move(rows);
    if (col_map) *col_map = std::move(cols);
    return t;
}

}  // namespace hetblock
