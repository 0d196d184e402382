#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "hadwiger/coloring.hpp"
#include "hadwiger/minor.hpp"
#include "hadwiger/construction.hpp"
#include "hadwiger/product.hpp"

using namespace hadwiger;

TEST_SUITE_BEGIN("construction");

TEST_CASE("max_construction_prime") {
    CHECK(max_construction_prime(144) == 3);   // (3*4)^2 = 144
    CHECK_FALSE(max_construction_prime(143));  // p=3 needs 144; p=2 excluded
    CHECK(max_construction_prime(1600) == 5);  // (5*6)^2 = 900, (7*8)^2 = 3136
    CHECK_FALSE(max_construction_prime(1));
}

TEST_CASE("construction parameters") {
    auto params = make_construction_params(7, 144);
    CHECK(params.p == 3);
    CHECK(params.g == 7);
    CHECK(params.s == 1);
    CHECK(params.neglected == 0);
    CHECK(params.wrap_copy(8) == 1);
    CHECK(params.wrap_copy(0) == 7);
    CHECK(params.wrap_copy(-1) == 6);

    auto params2 = make_construction_params(20, 144);
    CHECK(params2.s == 2);
    CHECK(params2.neglected == 6);

    CHECK_THROWS_AS(make_construction_params(6, 144), std::invalid_argument);
    CHECK_THROWS_AS(make_construction_params(7, 100), std::invalid_argument);
}

TEST_CASE("product clique model (7, 144)") {
    MinorModel m = product_clique_model(7, 144);
    CHECK(m.pattern == complete_graph(63));
    CHECK(m.host.vertex_count() == 1008);
    REQUIRE(m.branch_sets.size() == 63);

    // 63 sets of (p+1)^2 = 16 vertices partition the whole host
    Bitset covered(1008);
    for (const auto& s : m.branch_sets) {
        CHECK(s.count() == 16);
        CHECK_FALSE(covered.intersects(s));
        covered |= s;
    }
    CHECK(covered.count() == 1008);
    CHECK(verify_model(m).ok);
}

TEST_CASE("product clique model (20, 144) neglects extra copies") {
    MinorModel m = product_clique_model(20, 144);
    CHECK(int(m.branch_sets.size()) == 126); // s = 2 large groups
    CHECK(verify_model(m).ok);

    // neglected copies are the highest-index K_h vertices
    auto params = make_construction_params(20, 144);
    for (const auto& s : m.branch_sets)
        for (int v = s.first(); v >= 0; v = s.next(v)) CHECK(v / 144 < params.s * params.g);
}

TEST_CASE("row and column copies never collide") {
    // offsets m+a2 and m-a1 differ because a1+a2 is never 0 mod 2p+1
    auto params = make_construction_params(7, 144);
    int p = params.p;
    for (int m = 1; m <= 2 * p + 1; ++m)
        for (int a1 = 1; a1 <= p; ++a1)
            for (int a2 = 1; a2 <= p; ++a2)
                CHECK(params.wrap_copy(m + a2) != params.wrap_copy(m - a1));
}

TEST_CASE("every branch-set pair is covered by one adjacency mechanism") {
    auto params = make_construction_params(7, 144);
    auto ids = product_clique_ids(params);
    MinorModel m = product_clique_model(7, 144);
    int l = params.l;
    int p4 = params.p * params.p * params.p * params.p;

    auto common_kl_vertex_region = [&](const Bitset& a, const Bitset& b, bool q0_region) {
        for (int u = a.first(); u >= 0; u = a.next(u))
            for (int v = b.first(); v >= 0; v = b.next(v)) {
                if (u % l != v % l || u / l == v / l) continue;
                bool in_q0 = (u % l) < p4;
                if (in_q0 == q0_region) return true;
            }
        return false;
    };

    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            auto mech = product_clique_adjacency_mechanism(params, ids[a], ids[b]);
            const Bitset& sa = m.branch_sets[a];
            const Bitset& sb = m.branch_sets[b];
            switch (mech) {
                case AdjacencyMechanism::SameCopy: {
                    int home_a = params.copy_index(ids[a].i, ids[a].j, ids[a].m);
                    int home_b = params.copy_index(ids[b].i, ids[b].j, ids[b].m);
                    CHECK(home_a == home_b);
                    break;
                }
                case AdjacencyMechanism::LineIntersection:
                    CHECK(common_kl_vertex_region(sa, sb, true));
                    break;
                case AdjacencyMechanism::CrossOverlap:
                    CHECK(common_kl_vertex_region(sa, sb, false));
                    break;
            }
        }
}

TEST_CASE("construction structure at the next prime") {
    // p = 5: l = 900 = (5*6)^2, one large group of g = 22 copies, 550 sets of
    // 36 vertices. The host is too large to materialize, but adjacency in
    // K_h [] K_l is exactly "same copy or same K_l vertex", so the branch-set
    // family can be checked abstractly.
    auto params = make_construction_params(22, 900);
    CHECK(params.p == 5);
    CHECK(params.g == 22);
    CHECK(params.s == 1);
    auto ids = product_clique_ids(params);
    REQUIRE(int(ids.size()) == 550); // s * p^2 * g

    int l = params.l;
    std::set<int> all_vertices;
    std::vector<std::uint64_t> copy_masks;
    std::vector<Bitset> kl_sets;
    for (const auto& id : ids) {
        auto vertices = product_clique_branch_set(params, id);
        CHECK(int(vertices.size()) == 36); // (p+1)^2
        std::uint64_t copies = 0;
        Bitset kl(l);
        for (int v : vertices) {
            CHECK(all_vertices.insert(v).second); // global disjointness
            copies |= std::uint64_t{1} << (v / l);
            kl.set(v % l);
        }
        copy_masks.push_back(copies);
        kl_sets.push_back(std::move(kl));
    }
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            bool adjacent = (copy_masks[a] & copy_masks[b]) != 0 ||
                            kl_sets[a].intersects(kl_sets[b]);
            CHECK(adjacent);
        }

    // row/column offsets stay distinct at p = 5 as well
    for (int m = 1; m <= 11; ++m)
        for (int a1 = 1; a1 <= 5; ++a1)
            for (int a2 = 1; a2 <= 5; ++a2)
                CHECK(params.wrap_copy(m + a2) != params.wrap_copy(m - a1));
}

TEST_CASE("fan-square clique model") {
    auto m1 = wn_square_clique_model(1);
    CHECK(m1.branch_sets.size() == 1);
    CHECK(m1.branch_sets[0].count() == 1);

    auto m4 = wn_square_clique_model(4);
    CHECK(verify_model(m4).ok);
    int total = 0;
    for (int i = 0; i < 4; ++i) {
        CHECK(m4.branch_sets[i].count() == 2 * i + 1);
        total += m4.branch_sets[i].count();
    }
    CHECK(total == 16); // the hooks partition all n^2 vertices

    // hook membership matches the quoted set definition
    for (int i = 0; i < 4; ++i) {
        Bitset expect(16);
        for (int j = 0; j <= i; ++j) expect.set(i * 4 + j);
        for (int r = 0; r < i; ++r) expect.set(r * 4 + i);
        CHECK(m4.branch_sets[i] == expect);
    }

    auto m10 = wn_square_clique_model(10);
    CHECK(m10.host.vertex_count() == 100);
    CHECK(verify_model(m10).ok);

    CHECK_THROWS_AS(wn_square_clique_model(0), std::invalid_argument);
}

TEST_CASE("double-grid clique model") {
    auto m3 = double_grid_clique_model(3);
    CHECK(m3.host == double_grid_graph(3));
    CHECK(m3.branch_sets.size() == 3);
    for (const auto& s : m3.branch_sets) CHECK(s.count() == 6);
    CHECK(verify_model(m3).ok);

    CHECK(verify_model(double_grid_clique_model(2)).ok);
    CHECK(verify_model(double_grid_clique_model(8)).ok);
    CHECK_THROWS_AS(double_grid_clique_model(1), std::invalid_argument);
}

TEST_CASE("upper bound for complete products") {
    CHECK(upper_bound_kn_km(2, 2) == 3); // the inequality reads 2 >= h - 1
    for (long long n = 1; n <= 6; ++n) CHECK(upper_bound_kn_km(n, 1) == n);
    // sandwich against the oracle for every n, m <= 4
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n; ++m) {
            auto eta = hadwiger_exact(cartesian_product(complete_graph(n), complete_graph(m)).first);
            CHECK(eta.exact);
            CHECK(eta.value <= upper_bound_kn_km(n, m));
        }
    long long v55 = upper_bound_kn_km(5, 5);
    CHECK(v55 == 12);
    CHECK(double(v55) <= 5.0 * std::sqrt(5.0) + 5.0);
    // any certified witness the budgeted oracle finds stays below the bound
    auto partial = hadwiger_exact(cartesian_product(complete_graph(5), complete_graph(5)).first,
                                  2'000'000);
    CHECK(partial.value <= v55);
    CHECK(verify_model(*partial.witness).ok);
    CHECK_THROWS_AS(upper_bound_kn_km(2, 3), std::invalid_argument);
}

TEST_CASE("hypercube lower bound formula") {
    CHECK(hypercube_lower_bound(1) == 1);
    CHECK(hypercube_lower_bound(3) == 2);
    CHECK(hypercube_lower_bound(5) == 4);
    CHECK(hypercube_lower_bound(11) == 32);
    CHECK_THROWS_AS(hypercube_lower_bound(0), std::invalid_argument);
}

TEST_CASE("equal-chi pipeline") {
    auto c5c5 = equal_chi_clique_model(cycle_graph(5), cycle_graph(5));
    CHECK(c5c5.pattern == complete_graph(3));
    CHECK(c5c5.host.vertex_count() == 25);
    CHECK(verify_model(c5c5).ok);

    auto k4k4 = equal_chi_clique_model(complete_graph(4), complete_graph(4));
    CHECK(k4k4.pattern == complete_graph(4));
    CHECK(verify_model(k4k4).ok);

    auto k3c5 = equal_chi_clique_model(complete_graph(3), cycle_graph(5));
    CHECK(k3c5.pattern == complete_graph(3));
    CHECK(verify_model(k3c5).ok);

    CHECK_THROWS_AS(equal_chi_clique_model(complete_graph(3), complete_graph(4)),
                    std::invalid_argument);
}

TEST_CASE("power pipeline") {
    auto k2 = power_clique_model(complete_graph(2), 2);
    CHECK(k2.pattern == complete_graph(2));
    CHECK(k2.host == cartesian_power(complete_graph(2), 2).first);
    CHECK(verify_model(k2).ok);

    auto c5 = power_clique_model(cycle_graph(5), 2);
    CHECK(c5.pattern == complete_graph(3));
    CHECK(verify_model(c5).ok);

    auto p3 = power_clique_model(path_graph(3), 3);
    CHECK(p3.pattern == complete_graph(2));
    CHECK(p3.host.vertex_count() == 27);
    CHECK(verify_model(p3).ok);

    CHECK_THROWS_AS(power_clique_model(complete_graph(2), 1), std::invalid_argument);
}

TEST_CASE("bound report composes the construction") {
    auto report = product_bound_report(complete_graph(7), complete_graph(144));
    CHECK(report.factor1.eta_exact == 7);
    CHECK(report.factor2.eta_exact == 144);
    int best = 0;
    bool construction_found = false;
    for (const auto& lb : report.product.lower) {
        best = std::max(best, lb.value);
        if (lb.value == 63) construction_found = true;
    }
    CHECK(construction_found);
    CHECK(best == 144); // the K_144 layer dominates at this scale
    for (const auto& [id, witness] : report.witnesses) CHECK(verify_model(witness).ok);
    // chi = 144, eta >= 144: the conjecture is decided
    CHECK(report.product.chi_exact == 144);
    CHECK(report.product.verdict == "holds");
}

TEST_CASE("bound report with an identity factor") {
    Graph g = cycle_graph(5);
    auto report = product_bound_report(g, complete_graph(1));
    CHECK(report.product.eta_exact == 3); // eta(C_5 [] K_1) = eta(C_5)
    CHECK(report.product.verdict == "holds");
}

TEST_CASE("bound report records the exact double-grid oracle value") {
    Graph g1 = cartesian_product(cycle_graph(6), complete_graph(2)).first;
    auto report = product_bound_report(g1, complete_graph(2));
    CHECK(report.factor1.eta_exact == 4);
    CHECK(report.product.verdict == "holds");
}

TEST_SUITE_END();
