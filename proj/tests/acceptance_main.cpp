// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances (exact equality unless a wall
// clock budget is part of the statement).

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hadwiger/affine.hpp"
#include "hadwiger/coloring.hpp"
#include "hadwiger/construction.hpp"
#include "hadwiger/minor.hpp"
#include "hadwiger/product.hpp"

using namespace hadwiger;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(std::mt19937& rng, int n, double extra) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < extra) g.add_edge(u, v);
    return g;
}

// all trees on 2..5 vertices, up to isomorphism
std::vector<std::pair<std::string, Graph>> small_trees() {
    std::vector<std::pair<std::string, Graph>> trees;
    trees.emplace_back("P2", path_graph(2));
    trees.emplace_back("P3", path_graph(3));
    trees.emplace_back("P4", path_graph(4));
    trees.emplace_back("K1_3", star_graph(3));
    trees.emplace_back("P5", path_graph(5));
    Graph chair(5);
    chair.add_edge(0, 1);
    chair.add_edge(0, 2);
    chair.add_edge(0, 3);
    chair.add_edge(3, 4);
    trees.emplace_back("chair", chair);
    trees.emplace_back("K1_4", star_graph(4));
    return trees;
}

// independent re-multiplication check for a factorization
bool remultiplies(const Graph& g, const FactorizationResult& f) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int diff = -1;
            bool multi = false;
            for (std::size_t i = 0; i < f.factors.size() && !multi; ++i)
                if (f.coordinates[u][i] != f.coordinates[v][i]) {
                    if (diff >= 0) multi = true;
                    else diff = int(i);
                }
            bool expect = !multi && diff >= 0 &&
                          f.factors[diff].adjacent(f.coordinates[u][diff], f.coordinates[v][diff]);
            if (expect != g.adjacent(u, v)) return false;
        }
    return true;
}

void criterion1() {
    auto start = clock_type::now();
    bool ok = true;
    std::string detail;

    MinorModel m = product_clique_model(7, 144);
    // size formula floor(h/g) * p^2 * g with p=3, s=1
    ok = ok && int(m.branch_sets.size()) == 63;
    ok = ok && m.host.vertex_count() == 1008;
    for (const auto& s : m.branch_sets) ok = ok && s.count() == 16;
    ok = ok && verify_model(m).ok;

    MinorModel m2 = product_clique_model(20, 144);
    ok = ok && int(m2.branch_sets.size()) == 126;
    ok = ok && verify_model(m2).ok;

    double secs = seconds_since(start);
    if (secs >= 10.0) {
        ok = false;
        detail = "exceeded 10 s";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    report(1, "product_clique_model(7,144) -> verified K_63; (20,144) -> K_126", ok,
           detail.empty() ? buf : detail);
}

void criterion2() {
    auto start = clock_type::now();
    bool ok = true;
    for (int q : {2, 3, 4, 5, 7, 9, 25, 49}) {
        auto check = verify_plane(affine_plane(q));
        if (!check.ok) ok = false;
    }
    double secs = seconds_since(start);
    if (secs >= 5.0) ok = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    report(2, "affine plane axioms for q in {2,3,4,5,7,9,25,49}", ok, buf);
}

void criterion3() {
    bool ok = true;
    std::string detail;
    double worst = 0;

    for (int n = 4; n <= 7 && ok; ++n) {
        auto start = clock_type::now();
        Graph host = cartesian_product(cycle_graph(n), complete_graph(2)).first;
        auto res = hadwiger_exact(host);
        double secs = seconds_since(start);
        worst = std::max(worst, secs);
        if (!res.exact || res.value != 4 || secs >= 60.0) {
            ok = false;
            detail = "C_" + std::to_string(n) + " x K_2 gave " + std::to_string(res.value);
        }
    }
    for (const auto& [name, tree] : small_trees()) {
        if (!ok) break;
        for (int n = 2; n <= 4 && ok; ++n) {
            auto start = clock_type::now();
            Graph host = cartesian_product(tree, complete_graph(n)).first;
            auto res = hadwiger_exact(host);
            double secs = seconds_since(start);
            worst = std::max(worst, secs);
            if (!res.exact || res.value != n + 1 || secs >= 60.0) {
                ok = false;
                detail = name + " x K_" + std::to_string(n) + " gave " + std::to_string(res.value);
            }
        }
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "worst instance %.2f s", worst);
    report(3, "eta(C_n x K_2) = 4 and eta(T x K_n) = n+1 on all small trees", ok,
           ok ? buf : detail);
}

void criterion4() {
    std::mt19937 rng(240401);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        Graph g = random_graph(rng, 1 + int(rng() % 7), 0.45);
        Graph h = random_graph(rng, 1 + int(rng() % 7), 0.45);
        int expect = std::max(chromatic_number(g).k, chromatic_number(h).k);
        if (g.vertex_count() == 0 || h.vertex_count() == 0) continue;
        int got = chromatic_number(cartesian_product(g, h).first).k;
        if (got != expect) ok = false;
    }
    report(4, "chi(G x H) = max(chi(G), chi(H)) on 50 seeded pairs", ok);
}

void criterion5() {
    std::mt19937 rng(240502);
    int verified = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng() % 9);
        Graph g = random_connected_graph(rng, n, 0.3);
        if (chromatic_number(g).k < 2) {
            --trial;
            continue;
        }
        MinorModel m = extract_w_minor(g);
        if (m.pattern == fan_graph(chromatic_number(g).k) && verify_model(m).ok) ++verified;
    }
    report(5, "extract_w_minor verified on 100 seeded connected graphs", verified == 100,
           std::to_string(verified) + "/100");
}

void criterion6() {
    bool ok = true;
    for (int n = 1; n <= 10 && ok; ++n) {
        MinorModel m = wn_square_clique_model(n);
        if (!verify_model(m).ok) ok = false;
        Bitset covered(n * n);
        for (int i = 0; i < n && ok; ++i) {
            // the quoted hook: <i,0>..<i,i> then <i-1,i>..<0,i>
            Bitset expect(n * n);
            for (int j = 0; j <= i; ++j) expect.set(i * n + j);
            for (int r = i - 1; r >= 0; --r) expect.set(r * n + i);
            if (!(m.branch_sets[i] == expect)) ok = false;
            covered |= m.branch_sets[i];
        }
        if (covered.count() != n * n) ok = false;
    }
    report(6, "wn_square_clique_model matches the hook sets and partitions, n = 1..10", ok);
}

void criterion7() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 4 && ok; ++n)
        for (int m = 2; m <= n && ok; ++m) {
            auto res = hadwiger_exact(cartesian_product(complete_graph(n), complete_graph(m)).first);
            long long ub = upper_bound_kn_km(n, m);
            double analytic = double(n) * std::sqrt(double(m)) + double(m);
            if (!res.exact || res.value > ub || double(ub) > analytic) {
                ok = false;
                detail = "K_" + std::to_string(n) + " x K_" + std::to_string(m) + ": eta=" +
                         std::to_string(res.value) + " ub=" + std::to_string(ub);
            }
            if (n == 2 && m == 2 && !(res.value == 3 && ub == 3)) {
                ok = false;
                detail = "(2,2) chain not tight at 3";
            }
        }
    report(7, "eta(K_n x K_m) <= growth bound <= n*sqrt(m)+m for 2 <= m <= n <= 4", ok, detail);
}

void criterion8() {
    bool ok = true;
    for (int n = 3; n <= 8 && ok; ++n)
        if (!verify_model(double_grid_clique_model(n)).ok) ok = false;
    for (int n = 3; n <= 4 && ok; ++n) {
        auto res = hadwiger_exact(grid_graph(n));
        if (!res.exact || res.value > 4) ok = false;
    }
    report(8, "double-grid K_n models verified for n = 3..8 while eta(R_n) <= 4", ok);
}

void criterion9() {
    bool ok = true;
    auto run = [&](const Graph& g, const Graph& h) {
        MinorModel m = equal_chi_clique_model(g, h);
        int n = chromatic_number(g).k;
        if (m.pattern.vertex_count() != n || !verify_model(m).ok) ok = false;
    };
    run(cycle_graph(5), cycle_graph(5));
    run(complete_graph(3), cycle_graph(5));
    run(complete_graph(4), complete_graph(4));

    std::mt19937 rng(240909);
    int done = 0;
    while (done < 20 && ok) {
        Graph g = random_graph(rng, 2 + int(rng() % 7), 0.4);
        Graph h = random_graph(rng, 2 + int(rng() % 7), 0.4);
        if (chromatic_number(g).k != chromatic_number(h).k) continue;
        if (chromatic_number(g).k < 1) continue;
        run(g, h);
        ++done;
    }
    report(9, "equal-chi pipeline verified on named and 20 seeded equal-chi pairs", ok);
}

void criterion10() {
    std::mt19937 rng(241010);
    bool ok = true;
    int done = 0;
    while (done < 200 && ok) {
        int k = 1 + int(rng() % 3);
        std::vector<Graph> factors;
        for (int i = 0; i < k; ++i) {
            Graph f = random_connected_graph(rng, 2 + int(rng() % 5), 0.35);
            if (!is_prime_graph(f)) continue;
            factors.push_back(std::move(f));
        }
        if (int(factors.size()) != k) continue;
        Graph prod = factors[0];
        for (int i = 1; i < k; ++i) prod = cartesian_product(prod, factors[i]).first;

        auto res = prime_factorize(prod);
        std::map<std::vector<std::uint8_t>, int> want, got;
        for (const auto& f : factors) ++want[canonical_form(f)];
        for (const auto& f : res.factors) ++got[canonical_form(f)];
        if (want != got || !remultiplies(prod, res)) ok = false;
        ++done;
    }
    report(10, "UPF round trip on 200 seeded products of small primes", ok,
           std::to_string(done) + " products");
}

void criterion11() {
    std::mt19937 rng(241111);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        int n = 2 + int(rng() % 8);
        Graph g = random_graph(rng, n, 0.25 + 0.5 * (double(rng() % 100) / 100.0));
        auto base = hadwiger_exact(g);
        if (!base.exact) ok = false;

        auto edges = g.edges();
        if (!edges.empty()) {
            auto [u, v] = edges[rng() % edges.size()];
            auto res = hadwiger_exact(contract_edge(g, u, v));
            if (!res.exact || base.value < res.value) ok = false;
        }
        auto res = hadwiger_exact(delete_vertex(g, int(rng() % n)));
        if (!res.exact || base.value < res.value) ok = false;
    }
    report(11, "hadwiger_exact minor-monotone under contraction and deletion, 100 graphs", ok);
}

} // namespace

int main() {
    auto start = clock_type::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    std::printf("%s: %d criterion(s) failed, total %.1f s\n", failures == 0 ? "OK" : "FAILED",
                failures, seconds_since(start));
    return failures == 0 ? 0 : 1;
}
