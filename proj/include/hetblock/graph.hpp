// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_GRAPH_HPP
#define HETBLOCK_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hetblock {

/// Simple undirected graph stored as a dense symmetric 0/1 adjacency
/// matrix with zero diagonal. Dense storage is intended for instances
/// up to roughly 20k vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }

    bool has_edge(int i, int j) const {
        return adj_[static_cast<size_t>(i) * n_ + j] != 0;
    }

    void add_edge(int i, int j);

    /// d[i] = number of neighbours of i.
    std::vector<int> degrees() const;

    long long edge_count() const;

private:
    int n_ = 0;
    std::vector<uint8_t> adj_;
};

/// m x n binary table (bipartite adjacency between two vertex sets).
class BipartiteTable {
public:
    BipartiteTable() = default;
    BipartiteTable(int m, int n) : m_(m), n_(n), a_(static_cast<size_t>(m) * n, 0) {}

    int rows() const { return m_; }
    int cols() const { return n_; }

    uint8_t at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, uint8_t v) { a_[static_cast<size_t>(i) * n_ + j] = v; }

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;

    long long total() const;

    BipartiteTable transposed() const;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<uint8_t> a_;
};

/// Row and column sums of a binary table.
struct Margins {
    std::vector<int> r;
    std::vector<int> c;
};

/// Cluster labels for n vertices. Labels are 0-based internally
/// (0..k-1); file formats use 1-based cluster indices.
struct Partition {
    std::vector<int> labels;
    int k = 1;

    std::vector<int> cluster_members(int u) const;
    std::vector<int> cluster_sizes() const;
    bool valid() const;
};

/// Induced subgraph on cluster u. index_map[r] gives the vertex of g
/// that row r of the subgraph corresponds to.
Graph extract_subgraph(const Graph& g, const Partition& p, int u,
                       std::vector<int>* index_map = nullptr);

/// Bipartite table of edges between clusters u (rows) and v (columns).
/// Throws std::invalid_argument when u == v.
BipartiteTable extract_bipartite(const Graph& g, const Partition& p, int u, int v,
                                 std::vector<int>* row_map = nullptr,
                                 std::vector<int>* col_map = nullptr);

}  // namespace hetblock

#endif
