#include "hadwiger/product.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace hadwiger {

int ProductLabeling::flat_of(const std::vector<int>& tuple) const {
    if (tuple.size() != factor_sizes.size()) throw std::invalid_argument("labeling: tuple arity mismatch");
    int flat = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= factor_sizes[i]) throw std::invalid_argument("labeling: coordinate out of range");
        flat = flat * factor_sizes[i] + tuple[i];
    }
    return flat;
}

std::vector<int> ProductLabeling::tuple_of(int flat) const {
    if (flat < 0 || flat >= size()) throw std::invalid_argument("labeling: flat index out of range");
    std::vector<int> tuple(factor_sizes.size());
    for (std::size_t i = factor_sizes.size(); i-- > 0;) {
        tuple[i] = flat % factor_sizes[i];
        flat /= factor_sizes[i];
    }
    return tuple;
}

std::pair<Graph, ProductLabeling> cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng * nh);
    for (auto [a, b] : g.edges())
        for (int j = 0; j < nh; ++j) out.add_edge(a * nh + j, b * nh + j);
    for (auto [a, b] : h.edges())
        for (int i = 0; i < ng; ++i) out.add_edge(i * nh + a, i * nh + b);
    return {std::move(out), ProductLabeling{{ng, nh}}};
}

std::pair<Graph, ProductLabeling> cartesian_power(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("cartesian_power: d must be >= 1");
    if (g.vertex_count() == 0) throw std::invalid_argument("cartesian_power: empty factor");
    Graph acc = g;
    for (int i = 1; i < d; ++i) acc = cartesian_product(acc, g).first;
    ProductLabeling labeling;
    labeling.factor_sizes.assign(d, g.vertex_count());
    return {std::move(acc), std::move(labeling)};
}

// --- prime factorization ------------------------------------------------------
//
// Edge classes are generated by two relations and closed transitively:
//  * incident edges that span no common chordless square are co-factor;
//  * edges e=(a,b), f=(c,d) with d(a,c)+d(b,d) != d(a,d)+d(b,c) are co-factor
//    (this contains "opposite edges of a chordless square").
// The classes are then turned into coordinates from a BFS root; any
// inconsistency merges the classes involved and the assignment restarts. The
// final factorization is certified by re-multiplication.

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u))
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
        }
    }
    return dist;
}

struct CoordinatizeResult {
    bool ok = false;
    std::pair<int, int> merge{-1, -1}; // classes to merge on failure
    std::vector<Graph> factors;
    std::vector<std::vector<int>> coords;
};

// Attempts to realize g as the product of the layer graphs through vertex 0,
// one per edge class. On failure reports a pair of classes to merge.
CoordinatizeResult coordinatize(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& edge_class, int r) {
    int n = g.vertex_count();
    CoordinatizeResult res;

    // incidence with class labels
    std::vector<std::vector<std::pair<int, int>>> inc(n); // (neighbor, class)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        inc[u].emplace_back(v, edge_class[e]);
        inc[v].emplace_back(u, edge_class[e]);
    }

    auto fallback_other = [&](int i) { return i == 0 ? 1 : 0; };

    std::vector<std::vector<int>> layer(r);      // sorted global ids
    std::vector<std::vector<int>> local(r);      // global -> local (-1 outside)
    std::vector<Graph> factors;
    std::vector<std::vector<int>> coords(n, std::vector<int>(r, -1));

    for (int i = 0; i < r; ++i) {
        // layer through 0 using class-i edges
        std::vector<int> seen(n, 0), queue{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (auto [w, c] : inc[queue[head]])
                if (c == i && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        std::vector<int>& L = layer[i];
        for (int v = 0; v < n; ++v)
            if (seen[v]) L.push_back(v);
        if (L.size() < 2) {
            // class i has edges somewhere but none at the root: not a product
            // over this partition
            res.merge = {std::min(i, fallback_other(i)), std::max(i, fallback_other(i))};
            return res;
        }
        local[i].assign(n, -1);
        for (std::size_t k = 0; k < L.size(); ++k) local[i][L[k]] = int(k);

        Graph f(int(L.size()));
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edge_class[e] == i) {
                auto [u, v] = edges[e];
                if (local[i][u] >= 0 && local[i][v] >= 0) f.add_edge(local[i][u], local[i][v]);
            }
        factors.push_back(std::move(f));

        // co-layers: components without class-i edges; each must contain
        // exactly one layer vertex, which defines coordinate i
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = ncomp;
            std::vector<int> q{s}, par(n, -1);
            for (std::size_t head = 0; head < q.size(); ++head)
                for (auto [w, c] : inc[q[head]])
                    if (c != i && comp[w] < 0) {
                        comp[w] = ncomp;
                        par[w] = q[head];
                        q.push_back(w);
                    }
            // locate layer members in this component
            int rep = -1;
            for (int v : q)
                if (local[i][v] >= 0) {
                    if (rep >= 0) {
                        // two layer vertices joined without class-i edges: the
                        // edge from v to its BFS parent lies on the offending
                        // path and has a class != i by construction
                        int p = par[v] >= 0 ? par[v] : rep;
                        int c = -1;
                        for (auto [w, cc] : inc[v])
                            if (w == p && cc != i) c = cc;
                        if (c < 0) c = fallback_other(i);
                        res.merge = {std::min(i, c), std::max(i, c)};
                        return res;
                    }
                    rep = v;
                }
            if (rep < 0) {
                res.merge = {std::min(i, fallback_other(i)), std::max(i, fallback_other(i))};
                return res;
            }
            for (int v : q) coords[v][i] = local[i][rep];
            ++ncomp;
        }
        if (ncomp != int(L.size())) {
            res.merge = {std::min(i, fallback_other(i)), std::max(i, fallback_other(i))};
            return res;
        }
    }

    // vertex count must match the product of layer sizes
    long long prod = 1;
    for (int i = 0; i < r; ++i) prod *= (long long)layer[i].size();
    if (prod != n) {
        res.merge = {0, 1};
        return res;
    }

    // injectivity of the coordinate map
    std::unordered_map<long long, int> seen_flat;
    seen_flat.reserve(n * 2);
    for (int v = 0; v < n; ++v) {
        long long flat = 0;
        for (int i = 0; i < r; ++i) flat = flat * (long long)layer[i].size() + coords[v][i];
        auto [it, fresh] = seen_flat.emplace(flat, v);
        if (!fresh) {
            res.merge = {0, 1};
            return res;
        }
    }

    // every edge must change exactly its own coordinate, along a factor edge
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        int i = edge_class[e];
        int wrong = -1;
        for (int j = 0; j < r; ++j)
            if (j != i && coords[u][j] != coords[v][j]) {
                wrong = j;
                break;
            }
        if (wrong >= 0) {
            res.merge = {std::min(i, wrong), std::max(i, wrong)};
            return res;
        }
        if (coords[u][i] == coords[v][i] || !factors[i].adjacent(coords[u][i], coords[v][i])) {
            res.merge = {std::min(i, fallback_other(i)), std::max(i, fallback_other(i))};
            return res;
        }
    }

    // re-multiplication: the product of the factors must not contain edges g lacks
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int diff = -1;
            bool multi = false;
            for (int i = 0; i < r && !multi; ++i)
                if (coords[u][i] != coords[v][i]) {
                    if (diff >= 0) multi = true;
                    else diff = i;
                }
            bool expect = !multi && diff >= 0 && factors[diff].adjacent(coords[u][diff], coords[v][diff]);
            if (expect && !g.adjacent(u, v)) {
                res.merge = {std::min(diff, fallback_other(diff)), std::max(diff, fallback_other(diff))};
                return res;
            }
        }

    res.ok = true;
    res.factors = std::move(factors);
    res.coords = std::move(coords);
    return res;
}

std::vector<std::uint8_t> factor_sort_key(const Graph& g) {
    if (g.vertex_count() <= max_exact_canonical_n) return canonical_form(g);
    // deterministic but label-dependent beyond the exact-canonization scale
    std::vector<std::uint8_t> bits;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    return bits;
}

FactorizationResult factorize_recursive(const Graph& g);

FactorizationResult factorize_once(const Graph& g) {
    int n = g.vertex_count();
    auto edges = g.edges();
    int m = int(edges.size());

    // edge index lookup
    std::unordered_map<long long, int> edge_idx;
    edge_idx.reserve(m * 2);
    for (int e = 0; e < m; ++e)
        edge_idx[(long long)edges[e].first * n + edges[e].second] = e;
    auto eid = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return edge_idx.at((long long)u * n + v);
    };

    Dsu dsu(m);

    // incident pairs with no common chordless square
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                int x = nb[a], y = nb[b];
                bool square = false;
                if (!g.adjacent(x, y)) {
                    Bitset common = g.row(x);
                    common &= g.row(y);
                    common.subtract(g.row(u));
                    common.reset(u);
                    square = common.any();
                }
                if (!square) dsu.unite(eid(u, x), eid(u, y));
            }
    }

    // distance relation
    auto dist = all_pairs_distances(g);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            if (dsu.find(e) == dsu.find(f)) continue;
            auto [a, b] = edges[e];
            auto [c, d] = edges[f];
            if (dist[a][c] + dist[b][d] != dist[a][d] + dist[b][c]) dsu.unite(e, f);
        }

    bool merged_conflicts = false;
    while (true) {
        // compact class ids
        std::vector<int> root_to_class(m, -1), edge_class(m);
        int r = 0;
        for (int e = 0; e < m; ++e) {
            int root = dsu.find(e);
            if (root_to_class[root] < 0) root_to_class[root] = r++;
            edge_class[e] = root_to_class[root];
        }

        if (r == 1) {
            FactorizationResult res;
            res.factors.push_back(g);
            res.coordinates.assign(n, std::vector<int>(1));
            for (int v = 0; v < n; ++v) res.coordinates[v][0] = v;
            return res;
        }

        auto attempt = coordinatize(g, edges, edge_class, r);
        if (attempt.ok) {
            FactorizationResult res;
            res.factors = std::move(attempt.factors);
            res.coordinates = std::move(attempt.coords);
            if (merged_conflicts) {
                // conflict merges may have grouped prime factors together;
                // re-examine each factor on its own
                FactorizationResult flat;
                std::vector<FactorizationResult> subs;
                for (const auto& f : res.factors) subs.push_back(factorize_recursive(f));
                for (auto& sub : subs)
                    for (auto& sf : sub.factors) flat.factors.push_back(std::move(sf));
                flat.coordinates.assign(n, {});
                for (int v = 0; v < n; ++v)
                    for (std::size_t i = 0; i < subs.size(); ++i) {
                        int pos = res.coordinates[v][i];
                        for (int c : subs[i].coordinates[pos]) flat.coordinates[v].push_back(c);
                    }
                return flat;
            }
            return res;
        }

        // merge the implicated classes and retry with one fewer class
        auto [ci, cj] = attempt.merge;
        int ei = -1, ej = -1;
        for (int e = 0; e < m && (ei < 0 || ej < 0); ++e) {
            if (edge_class[e] == ci && ei < 0) ei = e;
            if (edge_class[e] == cj && ej < 0) ej = e;
        }
        dsu.unite(ei, ej);
        merged_conflicts = true;
    }
}

FactorizationResult factorize_recursive(const Graph& g) {
    if (g.vertex_count() < 2) {
        FactorizationResult res;
        res.factors.push_back(g);
        res.coordinates.assign(g.vertex_count(), std::vector<int>(1, 0));
        return res;
    }
    return factorize_once(g);
}

} // namespace

FactorizationResult prime_factorize(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("prime_factorize: need at least two vertices");
    if (!is_connected(g)) throw std::invalid_argument("prime_factorize: disconnected input");

    FactorizationResult res = factorize_once(g);

    // canonical factor order
    int k = int(res.factors.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<std::uint8_t>> keys(k);
    for (int i = 0; i < k; ++i) keys[i] = factor_sort_key(res.factors[i]);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (res.factors[a].vertex_count() != res.factors[b].vertex_count())
            return res.factors[a].vertex_count() < res.factors[b].vertex_count();
        if (res.factors[a].edge_count() != res.factors[b].edge_count())
            return res.factors[a].edge_count() < res.factors[b].edge_count();
        return keys[a] < keys[b];
    });
    FactorizationResult sorted;
    for (int i : order) sorted.factors.push_back(std::move(res.factors[i]));
    sorted.coordinates.assign(g.vertex_count(), std::vector<int>(k));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < k; ++i) sorted.coordinates[v][i] = res.coordinates[v][order[i]];

    // certificate: re-multiplication must reproduce the input exactly
    int n = g.vertex_count();
    for (auto& f : sorted.factors)
        if (f.vertex_count() < 2) throw std::runtime_error("prime_factorize: internal error (degenerate factor)");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int diff = -1;
            bool multi = false;
            for (int i = 0; i < k && !multi; ++i)
                if (sorted.coordinates[u][i] != sorted.coordinates[v][i]) {
                    if (diff >= 0) multi = true;
                    else diff = i;
                }
            bool expect = !multi && diff >= 0 &&
                          sorted.factors[diff].adjacent(sorted.coordinates[u][diff], sorted.coordinates[v][diff]);
            if (expect != g.adjacent(u, v))
                throw std::runtime_error("prime_factorize: internal error (certificate failed)");
        }
    return sorted;
}

bool is_prime_graph(const Graph& g) {
    return prime_factorize(g).factors.size() == 1;
}

} // namespace hadwiger
