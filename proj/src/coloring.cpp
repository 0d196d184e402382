#include "hadwiger/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hadwiger {

bool is_proper(const Graph& g, const Coloring& c) {
    if (int(c.colors.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.k) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int n, k;
    std::vector<int> color;                  // 0 = uncolored
    std::vector<std::uint64_t> nbr_colors;   // saturation bitmask per vertex
    int used = 0;

    explicit ColorSearch(const Graph& g_, int k_)
        : g(g_), n(g_.vertex_count()), k(k_), color(n, 0), nbr_colors(n, 0) {}

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int sat = std::popcount(nbr_colors[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored) {
        if (colored == n) return true;
        int v = pick();
        int limit = std::min(k, used + 1); // new colors in first-occurrence order
        for (int c = 1; c <= limit; ++c) {
            if ((nbr_colors[v] >> (c - 1)) & 1) continue;
            color[v] = c;
            int prev_used = used;
            used = std::max(used, c);
            std::vector<int> touched;
            for (int w : g.neighbors(v))
                if (!color[w] && !((nbr_colors[w] >> (c - 1)) & 1)) {
                    nbr_colors[w] |= std::uint64_t{1} << (c - 1);
                    touched.push_back(w);
                }
            bool dead = false;
            for (int w : touched)
                if (std::popcount(nbr_colors[w]) >= k) { dead = true; break; }
            if (!dead && solve(colored + 1)) return true;
            for (int w : touched) nbr_colors[w] &= ~(std::uint64_t{1} << (c - 1));
            color[v] = 0;
            used = prev_used;
        }
        return false;
    }
};

int greedy_clique_size(const Graph& g) {
    int n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (int seed = 0; seed < n; ++seed) {
        Bitset cand = g.row(seed);
        std::vector<int> clique{seed};
        while (cand.any()) {
            int pick = -1, pick_deg = -1;
            for (int v = cand.first(); v >= 0; v = cand.next(v)) {
                int d = (g.row(v) & cand).count();
                if (d > pick_deg) { pick = v; pick_deg = d; }
            }
            clique.push_back(pick);
            cand &= g.row(pick);
        }
        best = std::max(best, int(clique.size()));
    }
    return best;
}

} // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_k_colorable: negative k");
    int n = g.vertex_count();
    if (n == 0) return Coloring{k, {}};
    if (k == 0) return std::nullopt;
    if (k >= n) {
        Coloring c{k, std::vector<int>(n)};
        std::iota(c.colors.begin(), c.colors.end(), 1);
        return c;
    }
    if (k > 64) throw std::invalid_argument("is_k_colorable: k beyond desk scale (> 64)");
    ColorSearch search(g, k);
    if (!search.solve(0)) return std::nullopt;
    Coloring c{k, std::move(search.color)};
    return c;
}

Coloring chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return Coloring{0, {}};
    int lower = std::max(1, greedy_clique_size(g));
    for (int k = lower;; ++k) {
        if (auto c = is_k_colorable(g, k)) {
            if (!is_proper(g, *c)) throw std::runtime_error("chromatic_number: improper witness");
            return *c;
        }
    }
}

namespace {

// Greedy chi-preserving removal; `kept` maps the result back to original ids.
// One pass per phase suffices: once removing an item would drop chi, that stays
// true in every chi-preserving subgraph.
std::pair<Graph, std::vector<int>> critical_with_map(const Graph& g, int k) {
    Graph h = g;
    std::vector<int> ids(g.vertex_count());
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> order = ids;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::vector<int> current = ids;
    std::vector<int> kept = ids;
    for (int v : order) {
        int cv = current[v];
        Graph candidate = delete_vertex(h, cv);
        if (is_k_colorable(candidate, k - 1)) continue; // removal would drop chi
        h = std::move(candidate);
        current[v] = -1;
        for (auto& c : current)
            if (c > cv) --c;
        kept.erase(kept.begin() + cv);
    }
    for (auto [u, v] : h.edges()) {
        Graph candidate(h.vertex_count());
        for (auto [a, b] : h.edges())
            if (!(a == u && b == v)) candidate.add_edge(a, b);
        if (is_k_colorable(candidate, k - 1)) continue;
        h = std::move(candidate);
    }
    return {std::move(h), std::move(kept)};
}

} // namespace

Graph critical_subgraph(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("critical_subgraph: empty graph");
    int k = chromatic_number(g).k;
    return critical_with_map(g, k).first;
}

MinorModel extract_w_minor(const Graph& g) {
    int k = chromatic_number(g).k;
    if (k < 2) throw std::invalid_argument("extract_w_minor: requires chi >= 2");
    auto [h, ids] = critical_with_map(g, k);

    // non-extendable simple path, grown greedily at both ends
    std::vector<int> path{0};
    Bitset on_path(h.vertex_count());
    on_path.set(0);
    bool grew = true;
    while (grew) {
        grew = false;
        Bitset back = h.row(path.back());
        back.subtract(on_path);
        if (int w = back.first(); w >= 0) {
            path.push_back(w);
            on_path.set(w);
            grew = true;
            continue;
        }
        Bitset front = h.row(path.front());
        front.subtract(on_path);
        if (int w = front.first(); w >= 0) {
            path.insert(path.begin(), w);
            on_path.set(w);
            grew = true;
        }
    }

    int v0 = path.front();
    // every neighbor of the front endpoint lies on the path
    if (!h.row(v0).is_subset_of(on_path))
        throw std::runtime_error("extract_w_minor: endpoint has an off-path neighbor");

    std::vector<int> nbr_positions;
    for (std::size_t pos = 1; pos < path.size(); ++pos)
        if (h.adjacent(v0, path[pos])) nbr_positions.push_back(int(pos));
    if (int(nbr_positions.size()) < k - 1)
        throw std::runtime_error("extract_w_minor: endpoint degree below chi - 1");
    nbr_positions.resize(k - 1); // the k-1 smallest path positions

    MinorModel model;
    model.host = g;
    model.pattern = fan_graph(k);
    model.branch_sets.assign(k, Bitset(g.vertex_count()));
    model.branch_sets[0].set(ids[v0]); // hub
    int prev = 0;
    for (int j = 1; j <= k - 1; ++j) {
        for (int pos = prev + 1; pos <= nbr_positions[j - 1]; ++pos)
            model.branch_sets[j].set(ids[path[pos]]);
        prev = nbr_positions[j - 1];
    }

    auto report = verify_model(model);
    if (!report.ok) throw std::runtime_error("extract_w_minor: produced model failed verification");
    return model;
}

} // namespace hadwiger
