// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "hetblock/graph.hpp"
#include "oracles.hpp"

using namespace hetblock;

TEST_CASE("graph adjacency is symmetric with zero diagonal") {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(3, 1);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 1));
    for (int i = 0; i < 4; ++i) CHECK_FALSE(g.has_edge(i, i));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("degree sum equals twice the edge count") {
    Graph g = oracles::cycle_graph(7);
    g.add_edge(0, 3);
    auto d = g.degrees();
    int sum = std::accumulate(d.begin(), d.end(), 0);
    CHECK(sum == 2 * g.edge_count());
}

TEST_CASE("bipartite table margins and transpose") {
    BipartiteTable t(2, 3);
    t.set(0, 0, 1);
    t.set(0, 2, 1);
    t.set(1, 2, 1);
    CHECK(t.row_sums() == std::vector<int>{2, 1});
    CHECK(t.col_sums() == std::vector<int>{1, 0, 2});
    CHECK(t.total() == 3);

    BipartiteTable tt = t.transposed();
    CHECK(tt.rows() == 3);
    CHECK(tt.cols() == 2);
    CHECK(tt.row_sums() == t.col_sums());
    CHECK(tt.col_sums() == t.row_sums());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(t.at(i, j) == tt.at(j, i));
}

TEST_CASE("partition bookkeeping") {
    Partition p;
    p.labels = {0, 1, 0, 2, 1, 0};
    p.k = 3;
    CHECK(p.valid());
    CHECK(p.cluster_sizes() == std::vector<int>{3, 2, 1});
    CHECK(p.cluster_members(1) == std::vector<int>{1, 4});

    Partition bad;
    bad.labels = {0, 3};
    bad.k = 3;
    CHECK_FALSE(bad.valid());
}

TEST_CASE("subgraph extraction keeps within-cluster edges only") {
    // Two triangles joined by one cross edge.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(2, 3);
    Partition p;
    p.labels = {0, 0, 0, 1, 1, 1};
    p.k = 2;

    std::vector<int> map;
    Graph s = extract_subgraph(g, p, 1, &map);
    CHECK(s.n() == 3);
    CHECK(s.edge_count() == 3);
    CHECK(map == std::vector<int>{3, 4, 5});

    std::vector<int> rows, cols;
    BipartiteTable t = extract_bipartite(g, p, 0, 1, &rows, &cols);
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 3);
    CHECK(t.total() == 1);
    CHECK(t.at(2, 0) == 1);
    CHECK(rows == std::vector<int>{0, 1, 2});
    CHECK(cols == std::vector<int>{3, 4, 5});

    CHECK_THROWS_AS(extract_bipartite(g, p, 1, 1), std::invalid_argument);
}

TEST_CASE("bipartite extraction transposes under swapped clusters") {
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 3);
    Partition p;
    p.labels = {0, 0, 0, 1, 1};
    p.k = 2;
    BipartiteTable a = extract_bipartite(g, p, 0, 1);
    BipartiteTable b = extract_bipartite(g, p, 1, 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) CHECK(a.at(i, j) == b.at(j, i));
}
