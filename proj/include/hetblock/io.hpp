// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_IO_HPP
#define HETBLOCK_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hetblock/graph.hpp"

namespace hetblock {

/// Input problems carry the offending line for CLI diagnostics.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedGraph {
    Graph graph;
    std::vector<long long> vertex_ids;  // internal index -> original id, ascending
};

/// Edge-list text: one `u v` pair per line, '#' comments allowed.
/// Arbitrary non-negative integer ids are remapped to 0..n-1.
/// Self-loops and duplicate edges are rejected with the line number.
LoadedGraph read_edge_list(const std::string& path);

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<long long>* vertex_ids = nullptr);

struct LoadedTable {
    BipartiteTable table;
    std::vector<long long> row_ids;
    std::vector<long long> col_ids;
};

/// Dense comma-separated 0/1 table, or bipartite edge list (`row col`
/// pairs) when `bipartite_edges` is set.
LoadedTable read_table(const std::string& path, bool bipartite_edges);

struct LoadedPartition {
    std::vector<long long> vertex_ids;
    std::vector<int> labels;  // 1-based as in the file
};

/// `vertex,cluster` CSV with a header line.
LoadedPartition read_partition_csv(const std::string& path);

void write_partition_csv(const std::string& path,
                         const std::vector<long long>& vertex_ids,
                         const std::vector<int>& labels_one_based);

/// Full round-trip precision; infinities as "inf"/"-inf", NaN as "nan".
std::string format_double(double v);

/// Writes via a temp file plus rename so readers never see partial output.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace hetblock

#endif
