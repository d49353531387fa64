// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_REALIZABILITY_HPP
#define HETBLOCK_REALIZABILITY_HPP

#include <string>
#include <vector>

#include "hetblock/graph.hpp"

namespace hetblock {

/// Erdos-Gallai test: true iff d (in any order) is the degree sequence
/// of some simple graph.
bool is_graphic(std::vector<int> d);

/// Gale-Ryser style test for margins of a 0/1 table. Checks the sum
/// identity, c_max <= m, and the row-side inequalities.
bool is_bipartite_realizable(const Margins& m);

enum class DegreeVerdict { Interior, Boundary };

struct InteriorCheck {
    DegreeVerdict verdict;
    std::string reason;  // set when Boundary
};

/// Fast boundary screen on a degree sequence: flags degrees 0 and n-1.
/// An Interior verdict is heuristic; the authoritative signal for a
/// boundary sequence is divergence of the fitting iteration.
InteriorCheck interior_degree_check(const std::vector<int>& d, int n);

/// Exact threshold-graph test (no two disjoint edges with both cross
/// pairs absent), decided by peeling isolated/dominating vertices.
/// Threshold graphs realize extreme points of the degree polytope.
bool is_threshold_graph(const Graph& g);

/// Variant that also applies the threshold test to a realized graph.
InteriorCheck interior_degree_check(const Graph& g);

}  // namespace hetblock

#endif
