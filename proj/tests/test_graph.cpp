#include "doctest.h"

#include <random>
#include <stdexcept>

#include "hadwiger/graph.hpp"

using namespace hadwiger;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("generators match their definitions") {
    CHECK(complete_graph(4).vertex_count() == 4);
    CHECK(complete_graph(4).edge_count() == 6);

    // W_3 is the triangle
    Graph w3 = fan_graph(3);
    CHECK(w3.edge_count() == 3);
    CHECK(w3.adjacent(0, 1));
    CHECK(w3.adjacent(0, 2));
    CHECK(w3.adjacent(1, 2));

    // two 3x3 grids plus a matching: 2*12 + 9 edges by direct count
    Graph dg = double_grid_graph(3);
    CHECK(dg.vertex_count() == 18);
    CHECK(dg.edge_count() == 33);

    CHECK(star_graph(3).vertex_count() == 4);
    CHECK(star_graph(3).edge_count() == 3);
    CHECK(grid_graph(3).edge_count() == 12);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(5).edge_count() == 5);

    CHECK_THROWS_AS(generate("frobnicate", {3}), std::invalid_argument);
    CHECK_THROWS_AS(generate("complete", {0}), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {2}), std::invalid_argument);
    CHECK(generate("fan", {5}) == fan_graph(5));
}

TEST_CASE("hypercube edge count is d * 2^(d-1)") {
    for (int d = 1; d <= 6; ++d) {
        Graph q = hypercube_graph(d);
        CHECK(q.vertex_count() == (1 << d));
        CHECK(q.edge_count() == d * (1 << (d - 1)));
    }
}

TEST_CASE("fan degree sequence") {
    // vertex 0 universal; the path endpoints 1 and n-1 see the hub plus one
    // path neighbor, interior path vertices see two plus the hub
    for (int n = 4; n <= 9; ++n) {
        Graph w = fan_graph(n);
        CHECK(w.degree(0) == n - 1);
        CHECK(w.degree(1) == 2);
        CHECK(w.degree(n - 1) == 2);
        for (int v = 2; v < n - 1; ++v) CHECK(w.degree(v) == 3);
    }
}

TEST_CASE("graph invariants hold for generator output") {
    std::vector<Graph> graphs{complete_graph(5), path_graph(6),   cycle_graph(7),
                              star_graph(4),    grid_graph(4),    double_grid_graph(3),
                              hypercube_graph(4), fan_graph(6)};
    for (const auto& g : graphs) {
        for (auto [u, v] : g.edges()) {
            CHECK(u < v);
            CHECK(g.adjacent(u, v));
            CHECK(g.adjacent(v, u)); // symmetric adjacency
            CHECK(u != v);
        }
        int degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("graph6 known encodings") {
    // 'D' encodes n=5; '?' and '{' give bits 000000 111100: the four edges
    // (0,4),(1,4),(2,4),(3,4), decoded against the published byte layout
    Graph g = parse_graph6("D?{");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));

    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(parse_graph6("D?{")) == "D?{");

    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D?"), std::invalid_argument);     // truncated
    CHECK_THROWS_AS(parse_graph6("D?{{"), std::invalid_argument);   // trailing garbage
    CHECK_THROWS_AS(parse_graph6("D?\x01"), std::invalid_argument); // out-of-range byte

    // header and trailing newline are tolerated
    CHECK(parse_graph6(">>graph6<<D?{\n") == g);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> size(0, 30);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_graph(rng, size(rng), density(rng));
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 wide vertex counts") {
    Graph g(100); // needs the 3-byte length prefix
    g.add_edge(0, 99);
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(cycle_graph(5)));
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_FALSE(is_connected(two_edges));

    // cells <1,1> and <1,3> of R_3 are two apart in one row
    Graph r3 = grid_graph(3);
    CHECK_FALSE(induced_is_connected(r3, Bitset::of(9, {0, 2})));
    CHECK(induced_is_connected(r3, Bitset::of(9, {0, 1, 2})));
    CHECK_THROWS_AS(induced_is_connected(r3, Bitset(9)), std::invalid_argument);
}

TEST_CASE("contraction and deletion") {
    Graph c4 = cycle_graph(4);
    Graph t = contract_edge(c4, 0, 1); // triangle
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    Graph p = delete_vertex(c4, 0);
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
}

TEST_CASE("canonical form separates and unifies") {
    // same graph under relabeling
    Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph b = Graph::from_edges(4, {{3, 2}, {2, 0}, {0, 1}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));
}

TEST_CASE("edge list round trip") {
    Graph g = cycle_graph(5);
    CHECK(parse_edge_list(write_edge_list(g)) == g);
    Graph iso = parse_edge_list("0 1\n", 4); // isolated trailing vertices kept via n
    CHECK(iso.vertex_count() == 4);
}

TEST_CASE("dot export") {
    std::string dot = export_dot(complete_graph(2));
    CHECK(dot.find("0 -- 1") != std::string::npos);
    std::string single = export_dot(complete_graph(1));
    CHECK(single.find("--") == std::string::npos);
    CHECK(single.find("0") != std::string::npos);
}

TEST_SUITE_END();
