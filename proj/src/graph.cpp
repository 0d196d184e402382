#include "hadwiger/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hadwiger {

Graph::Graph(int n) : n_(n), rows_(n, Bitset(n)), neighbors_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops not allowed");
    if (rows_[u].test(v)) return;
    rows_[u].set(v);
    rows_[v].set(u);
    neighbors_[u].insert(std::lower_bound(neighbors_[u].begin(), neighbors_[u].end(), v), v);
    neighbors_[v].insert(std::lower_bound(neighbors_[v].begin(), neighbors_[v].end(), u), u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

// --- families ---------------------------------------------------------------

namespace {
void require_positive(int x, const char* what) {
    if (x <= 0) throw std::invalid_argument(std::string(what) + " requires a positive parameter");
}
} // namespace

Graph complete_graph(int n) {
    require_positive(n, "complete");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    require_positive(n, "path");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    require_positive(n, "star");
    Graph g(n + 1);
    for (int v = 1; v <= n; ++v) g.add_edge(0, v);
    return g;
}

Graph grid_graph(int n) {
    require_positive(n, "grid");
    Graph g(n * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) g.add_edge(r * n + c, r * n + c + 1);
            if (r + 1 < n) g.add_edge(r * n + c, (r + 1) * n + c);
        }
    return g;
}

Graph double_grid_graph(int n) {
    require_positive(n, "double-grid");
    // grid [] K_2 with the product labeling (cell*2 + copy)
    Graph grid = grid_graph(n);
    Graph g(2 * n * n);
    for (auto [a, b] : grid.edges()) {
        g.add_edge(a * 2, b * 2);
        g.add_edge(a * 2 + 1, b * 2 + 1);
    }
    for (int cell = 0; cell < n * n; ++cell) g.add_edge(cell * 2, cell * 2 + 1);
    return g;
}

Graph hypercube_graph(int d) {
    require_positive(d, "hypercube");
    Graph g = complete_graph(2);
    for (int i = 1; i < d; ++i) {
        Graph next(g.vertex_count() * 2);
        for (auto [a, b] : g.edges()) {
            next.add_edge(a * 2, b * 2);
            next.add_edge(a * 2 + 1, b * 2 + 1);
        }
        for (int v = 0; v < g.vertex_count(); ++v) next.add_edge(v * 2, v * 2 + 1);
        g = next;
    }
    return g;
}

Graph fan_graph(int n) {
    require_positive(n, "fan");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(0, v);
        if (v + 1 < n) g.add_edge(v, v + 1);
    }
    return g;
}

Graph generate(std::string_view kind, const std::vector<int>& params) {
    auto one = [&]() {
        if (params.size() != 1) throw std::invalid_argument("family takes exactly one parameter");
        return params[0];
    };
    if (kind == "complete") return complete_graph(one());
    if (kind == "path") return path_graph(one());
    if (kind == "cycle") return cycle_graph(one());
    if (kind == "star") return star_graph(one());
    if (kind == "grid") return grid_graph(one());
    if (kind == "double-grid") return double_grid_graph(one());
    if (kind == "hypercube") return hypercube_graph(one());
    if (kind == "fan") return fan_graph(one());
    throw std::invalid_argument("unknown family: " + std::string(kind));
}

// --- queries ------------------------------------------------------------------

namespace {
// BFS over the vertices of `inside`, starting from `start`.
Bitset reach_within(const Graph& g, int start, const Bitset& inside) {
    Bitset seen(g.vertex_count());
    seen.set(start);
    std::vector<int> queue{start};
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        Bitset fresh = g.row(u);
        fresh &= inside;
        fresh.subtract(seen);
        for (int v = fresh.first(); v >= 0; v = fresh.next(v)) {
            seen.set(v);
            queue.push_back(v);
        }
    }
    return seen;
}
} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    return reach_within(g, 0, all).count() == g.vertex_count();
}

bool induced_is_connected(const Graph& g, const Bitset& s) {
    int start = s.first();
    if (start < 0) throw std::invalid_argument("induced_is_connected: empty set");
    Bitset seen = reach_within(g, start, s);
    seen &= s;
    return seen == s;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("contract_edge: not an edge");
    int n = g.vertex_count();
    auto relabel = [&](int x) { return x > v ? x - 1 : x; };
    Graph out(n - 1);
    for (auto [a, b] : g.edges()) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == b) continue;
        out.add_edge(relabel(a), relabel(b));
    }
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("delete_vertex: out of range");
    auto relabel = [&](int x) { return x > v ? x - 1 : x; };
    Graph out(g.vertex_count() - 1);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(relabel(a), relabel(b));
    return out;
}

namespace {

std::vector<std::uint8_t> triangle_bits(const Graph& g, const std::vector<int>& perm) {
    // bit order: column-wise upper triangle, matching graph6
    std::vector<std::uint8_t> bits;
    int n = g.vertex_count();
    bits.reserve(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.adjacent(perm[i], perm[j]) ? 1 : 0);
    return bits;
}

// `tight` marks that the columns placed so far coincide with the best prefix;
// only then is column comparison a valid prune.
void canon_rec(const Graph& g, std::vector<int>& perm, std::vector<bool>& used, std::size_t depth,
               std::vector<std::uint8_t>& best, bool& have, bool tight) {
    int n = g.vertex_count();
    if (depth == std::size_t(n)) {
        auto bits = triangle_bits(g, perm);
        if (!have || bits < best) {
            best = bits;
            have = true;
        }
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        perm[depth] = v;
        bool child_tight = false;
        if (have && tight) {
            int cmp = 0;
            std::size_t base = depth * (depth - 1) / 2;
            for (std::size_t i = 0; i < depth && cmp == 0; ++i) {
                std::uint8_t bit = g.adjacent(perm[i], v) ? 1 : 0;
                if (bit != best[base + i]) cmp = bit < best[base + i] ? -1 : 1;
            }
            if (cmp > 0) continue;
            child_tight = cmp == 0;
        }
        used[v] = true;
        canon_rec(g, perm, used, depth + 1, best, have, child_tight);
        used[v] = false;
    }
}

} // namespace

std::vector<std::uint8_t> canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > max_exact_canonical_n)
        throw std::invalid_argument("canonical_form: graph too large for exact canonization");
    if (n == 0) return {};
    std::vector<int> perm(n);
    std::vector<bool> used(n, false);
    std::vector<std::uint8_t> best;
    bool have = false;
    canon_rec(g, perm, used, 0, best, have, true);
    return best;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text, std::optional<int> n) {
    std::istringstream in{std::string(text)};
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list: malformed line: " + line);
        edges.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    int count = n.value_or(maxv + 1);
    return Graph::from_edges(count, edges);
}

std::string export_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace hadwiger
