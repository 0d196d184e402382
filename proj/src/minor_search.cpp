#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "hadwiger/minor.hpp"

// Exact branch-and-bound search for minor containment on hosts of up to 64
// vertices. Branch sets are grown one vertex at a time; per set the candidate
// frontier is walked with include/exclude branching, so every connected set is
// visited exactly once. Clique patterns additionally break the pattern
// symmetry by requiring the minimum vertex of successive branch sets to
// increase.

namespace hadwiger {

namespace {

using u64 = std::uint64_t;

u64 bit(int i) { return u64{1} << i; }
u64 above(int i) { return i >= 63 ? 0 : ~u64{0} << (i + 1); }

struct MaskGraph {
    int n = 0;
    std::vector<u64> adj;
    u64 all = 0;

    explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(g.vertex_count(), 0) {
        if (n > 64) throw std::invalid_argument("minor search: host beyond desk scale (> 64 vertices)");
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v] |= bit(w);
        all = n == 64 ? ~u64{0} : bit(n) - 1;
    }

    u64 neighborhood(u64 set) const {
        u64 nb = 0;
        for (u64 rest = set; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            nb |= adj[v];
        }
        return nb & ~set;
    }

    // connected closure of `from` inside `allowed`
    u64 reach(u64 from, u64 allowed) const {
        u64 r = from;
        while (true) {
            u64 grown = r | (neighborhood(r) & allowed);
            if (grown == r) return r;
            r = grown;
        }
    }
};

struct Budget {
    u64 limit;
    u64 nodes = 0;
    bool exhausted = false;

    explicit Budget(u64 l) : limit(l == 0 ? ~u64{0} : l) {}
    bool tick() {
        if (++nodes > limit) exhausted = true;
        return exhausted;
    }
};

// --- clique-minor search -------------------------------------------------------

struct CliqueSearch {
    const MaskGraph& g;
    int h;
    Budget& budget;
    std::vector<u64> sets;
    std::vector<u64> nbrs;
    std::vector<u64> found;

    CliqueSearch(const MaskGraph& g_, int h_, Budget& b) : g(g_), h(h_), budget(b) {}

    bool next_set(u64 used, int prev_seed) {
        int t = int(sets.size());
        if (t == h) {
            found = sets;
            return true;
        }
        int need = h - t;
        u64 pool = g.all & ~used & above(prev_seed);
        if (std::popcount(pool) < need) return false;
        for (u64 nb : nbrs)
            if (std::popcount(nb & pool) < need) return false;

        // all remaining sets must live inside one pool component with enough
        // vertices, enough contacts to every closed set, and enough edges for
        // the pairwise adjacencies
        u64 valid = 0;
        for (u64 rest = pool; rest;) {
            int v = std::countr_zero(rest);
            u64 comp = g.reach(bit(v), pool);
            rest &= ~comp;
            if (std::popcount(comp) < need) continue;
            int comp_edges = 0;
            for (u64 cc = comp; cc;) {
                int x = std::countr_zero(cc);
                cc &= cc - 1;
                comp_edges += std::popcount(g.adj[x] & comp);
            }
            if (comp_edges / 2 < need * (need - 1) / 2) continue;
            bool ok = true;
            for (u64 nb : nbrs)
                if (std::popcount(nb & comp) < need) { ok = false; break; }
            if (ok) valid |= comp;
        }
        if (!valid) return false;

        for (u64 seeds = valid; seeds;) {
            int v = std::countr_zero(seeds);
            seeds &= seeds - 1;
            u64 unmet = 0;
            for (int j = 0; j < t; ++j)
                if (!(nbrs[j] & bit(v))) unmet |= bit(j);
            if (grow(used | bit(v), bit(v), g.adj[v], 0, unmet, v)) return true;
            if (budget.exhausted) return false;
        }
        return false;
    }

    bool close_and_continue(u64 used, u64 C, u64 nc, int seed) {
        sets.push_back(C);
        nbrs.push_back(nc);
        bool ok = next_set(used, seed);
        sets.pop_back();
        nbrs.pop_back();
        return ok;
    }

    // C = current set, nc = N(C) \ C, unmet = closed sets C lacks adjacency to.
    // Exclusion branches run iteratively by extending `banned`.
    bool grow(u64 used, u64 C, u64 nc, u64 banned, u64 unmet, int seed) {
        int t = int(sets.size());
        u64 free = g.all & ~used;
        u64 allowed_base = free & above(seed);

        while (true) {
            if (budget.tick()) return false;
            u64 allowed = allowed_base & ~banned;
            u64 cand = nc & allowed;

            if (unmet) {
                if (!cand) return false;
                u64 r = g.reach(C, allowed);
                for (u64 rest = unmet; rest;) {
                    int j = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (!(nbrs[j] & r)) return false;
                }
            } else {
                if (t == h - 1) { // last set: any completion ends the search
                    sets.push_back(C);
                    found = sets;
                    return true;
                }
                // close when no growth is possible or affordable
                if (!cand || std::popcount(allowed_base) <= h - t - 1)
                    return close_and_continue(used, C, nc, seed);
            }

            // branch candidate: hit as many unmet adjacencies as possible
            int w = -1;
            if (unmet) {
                int best_score = -1;
                for (u64 cc = cand; cc;) {
                    int x = std::countr_zero(cc);
                    cc &= cc - 1;
                    int score = 0;
                    for (u64 rest = unmet; rest;) {
                        int j = std::countr_zero(rest);
                        rest &= rest - 1;
                        if (nbrs[j] & bit(x)) ++score;
                    }
                    if (score > best_score) {
                        best_score = score;
                        w = x;
                    }
                }
            } else {
                w = std::countr_zero(cand);
            }

            u64 wbit = bit(w);
            u64 new_unmet = unmet;
            for (u64 rest = unmet; rest;) {
                int j = std::countr_zero(rest);
                rest &= rest - 1;
                if (nbrs[j] & wbit) new_unmet &= ~bit(j);
            }
            if (grow(used | wbit, C | wbit, (nc | g.adj[w]) & ~(C | wbit), banned, new_unmet, seed))
                return true;
            if (budget.exhausted) return false;
            banned |= wbit; // exclude w and loop
        }
    }
};

// --- general-pattern search ------------------------------------------------------

struct PatternSearch {
    const MaskGraph& g;
    const Graph& pattern;
    Budget& budget;
    std::vector<int> order; // slot -> pattern vertex
    std::vector<u64> req;   // slot -> mask of earlier slots that must be adjacent
    std::vector<u64> sets;
    std::vector<u64> nbrs;
    std::vector<u64> found;

    PatternSearch(const MaskGraph& g_, const Graph& p, Budget& b) : g(g_), pattern(p), budget(b) {
        int np = p.vertex_count();
        order.resize(np);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return p.degree(a) > p.degree(b); });
        std::vector<int> slot_of(np);
        for (int s = 0; s < np; ++s) slot_of[order[s]] = s;
        req.assign(np, 0);
        for (auto [x, y] : p.edges()) {
            int a = slot_of[x], b = slot_of[y];
            if (a > b) std::swap(a, b);
            req[b] |= bit(a);
        }
    }

    bool next_set(u64 used) {
        int t = int(sets.size());
        if (t == pattern.vertex_count()) {
            found = sets;
            return true;
        }
        u64 free = g.all & ~used;
        int remaining = pattern.vertex_count() - t;
        if (std::popcount(free) < remaining) return false;
        for (int j = 0; j < t; ++j) {
            int still = 0;
            for (int s = t; s < pattern.vertex_count(); ++s)
                if (req[s] & bit(j)) ++still;
            if (still > std::popcount(nbrs[j] & free)) return false;
        }
        for (u64 seeds = free; seeds;) {
            int v = std::countr_zero(seeds);
            seeds &= seeds - 1;
            if (grow(used | bit(v), bit(v), 0)) return true;
            if (budget.exhausted) return false;
        }
        return false;
    }

    bool grow(u64 used, u64 C, u64 banned) {
        if (budget.tick()) return false;
        int t = int(sets.size());

        u64 unmet = req[t];
        for (int j = 0; j < t; ++j)
            if ((unmet & bit(j)) && (nbrs[j] & C)) unmet &= ~bit(j);

        u64 free = g.all & ~used;
        u64 allowed = free & ~banned;
        u64 cand = g.neighborhood(C) & allowed;

        if (unmet) {
            if (!cand) return false;
            u64 r = g.reach(C, allowed);
            for (u64 rest = unmet; rest;) {
                int j = std::countr_zero(rest);
                rest &= rest - 1;
                if (!(nbrs[j] & r)) return false;
            }
        } else if (t == pattern.vertex_count() - 1) {
            sets.push_back(C);
            found = sets;
            return true;
        }

        if (!cand || (std::popcount(free) <= pattern.vertex_count() - t - 1 && unmet == 0)) {
            if (unmet) return false;
            sets.push_back(C);
            nbrs.push_back(g.neighborhood(C));
            bool ok = next_set(used);
            sets.pop_back();
            nbrs.pop_back();
            return ok;
        }

        int w = -1;
        if (unmet) {
            int j = std::countr_zero(unmet);
            u64 useful = cand & nbrs[j];
            if (useful) w = std::countr_zero(useful);
        }
        if (w < 0) w = std::countr_zero(cand);

        if (grow(used | bit(w), C | bit(w), banned)) return true;
        if (budget.exhausted) return false;
        return grow(used, C, banned | bit(w));
    }
};

// Runs the clique search on a copy of the host relabeled by ascending degree
// (which the seed-ordering symmetry breaking prefers) and maps the branch sets
// back. Returns nothing when no model exists or the budget ran out.
std::optional<std::vector<u64>> run_clique_search(const Graph& host, int h, Budget& budget) {
    int n = host.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return host.degree(a) < host.degree(b); });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Graph relabeled(n);
    for (auto [u, v] : host.edges()) relabeled.add_edge(pos[u], pos[v]);

    MaskGraph mg(relabeled);
    CliqueSearch search(mg, h, budget);
    if (!search.next_set(0, -1)) return std::nullopt;
    std::vector<u64> sets;
    for (u64 s : search.found) {
        u64 mapped = 0;
        for (u64 rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            mapped |= bit(order[v]);
        }
        sets.push_back(mapped);
    }
    return sets;
}

MinorModel model_from_masks(const Graph& host, const Graph& pattern, const std::vector<u64>& sets,
                            const std::vector<int>* slot_to_pattern = nullptr) {
    MinorModel m;
    m.host = host;
    m.pattern = pattern;
    m.branch_sets.assign(pattern.vertex_count(), Bitset(host.vertex_count()));
    for (std::size_t s = 0; s < sets.size(); ++s) {
        int pv = slot_to_pattern ? (*slot_to_pattern)[s] : int(s);
        for (u64 rest = sets[s]; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            m.branch_sets[pv].set(v);
        }
    }
    return m;
}

// deterministic greedy clique, used for lower bounds; beyond desk scale only
// the highest-degree vertices seed the scan
std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> seeds(g.vertex_count());
    std::iota(seeds.begin(), seeds.end(), 0);
    if (g.vertex_count() > 64) {
        std::stable_sort(seeds.begin(), seeds.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        seeds.resize(64);
    }
    std::vector<int> best;
    for (int seed : seeds) {
        std::vector<int> clique{seed};
        Bitset cand = g.row(seed);
        while (cand.any()) {
            int pick = -1, score = -1;
            for (int v = cand.first(); v >= 0; v = cand.next(v)) {
                int s = (g.row(v) & cand).count();
                if (s > score) { pick = v; score = s; }
            }
            clique.push_back(pick);
            cand &= g.row(pick);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

} // namespace

MinorSearchResult has_minor(const Graph& host, const Graph& pattern, std::uint64_t budget_limit) {
    MinorSearchResult result;
    if (pattern.vertex_count() == 0) {
        result.status = SearchStatus::Found;
        result.model = MinorModel{host, pattern, {}};
        return result;
    }
    if (pattern.vertex_count() > host.vertex_count()) {
        result.status = SearchStatus::NotFound;
        return result;
    }

    Budget budget(budget_limit);
    bool ok;
    MinorModel model;
    if (pattern.is_complete()) {
        auto sets = run_clique_search(host, pattern.vertex_count(), budget);
        ok = sets.has_value();
        if (ok) model = model_from_masks(host, pattern, *sets);
    } else {
        MaskGraph mg(host);
        PatternSearch search(mg, pattern, budget);
        ok = search.next_set(0);
        if (ok) model = model_from_masks(host, pattern, search.found, &search.order);
    }
    result.nodes = budget.nodes;
    if (ok) {
        if (!verify_model(model).ok) throw std::runtime_error("has_minor: witness failed verification");
        result.status = SearchStatus::Found;
        result.model = std::move(model);
    } else {
        result.status = budget.exhausted ? SearchStatus::Indeterminate : SearchStatus::NotFound;
    }
    return result;
}

HadwigerResult hadwiger_exact(const Graph& g, std::uint64_t budget_limit) {
    HadwigerResult result;
    int n = g.vertex_count();
    if (n == 0) {
        result.value = 0;
        result.exact = true;
        result.witness = MinorModel{g, Graph(0), {}};
        return result;
    }

    // complete hosts need no search
    if (g.is_complete()) {
        MinorModel m;
        m.host = g;
        m.pattern = complete_graph(n);
        m.branch_sets.assign(n, Bitset(n));
        for (int v = 0; v < n; ++v) m.branch_sets[v].set(v);
        result.value = n;
        result.exact = true;
        result.witness = std::move(m);
        return result;
    }

    // greedy clique start
    auto clique = greedy_clique(g);
    MinorModel best;
    best.host = g;
    best.pattern = complete_graph(int(clique.size()));
    best.branch_sets.assign(clique.size(), Bitset(n));
    for (std::size_t i = 0; i < clique.size(); ++i) best.branch_sets[i].set(clique[i]);
    int value = int(clique.size());

    // greedy contraction heuristic: track merged vertex groups and keep the
    // best verified clique found along the way
    if (n <= 256) {
        Graph cur = g;
        std::vector<Bitset> groups(n, Bitset(n));
        for (int v = 0; v < n; ++v) groups[v].set(v);
        while (cur.edge_count() > 0) {
            auto cl = greedy_clique(cur);
            if (int(cl.size()) > value) {
                MinorModel m;
                m.host = g;
                m.pattern = complete_graph(int(cl.size()));
                for (int v : cl) m.branch_sets.push_back(groups[v]);
                if (verify_model(m).ok) {
                    value = int(cl.size());
                    best = std::move(m);
                }
            }
            if (cur.vertex_count() <= 2) break;
            // contract the lowest-degree endpoint pair
            int bu = -1, bv = -1, score = INT32_MAX;
            for (auto [u, v] : cur.edges()) {
                int s = cur.degree(u) + cur.degree(v);
                if (s < score) { score = s; bu = u; bv = v; }
            }
            groups[bu] |= groups[bv];
            groups.erase(groups.begin() + bv);
            cur = contract_edge(cur, bu, bv);
        }
    }

    if (n > 64) {
        // beyond the search kernel: report the heuristic witness as a
        // certified lower bound, exactly like budget exhaustion
        result.value = value;
        result.exact = false;
        if (!verify_model(best).ok) throw std::runtime_error("hadwiger_exact: witness failed verification");
        result.witness = std::move(best);
        return result;
    }
    Budget budget(budget_limit);
    while (value < n) {
        auto sets = run_clique_search(g, value + 1, budget);
        if (sets) {
            best = model_from_masks(g, complete_graph(value + 1), *sets);
            ++value;
            continue;
        }
        result.nodes = budget.nodes;
        result.value = value;
        result.exact = !budget.exhausted;
        if (!verify_model(best).ok) throw std::runtime_error("hadwiger_exact: witness failed verification");
        result.witness = std::move(best);
        return result;
    }
    result.nodes = budget.nodes;
    result.value = value;
    result.exact = true;
    if (!verify_model(best).ok) throw std::runtime_error("hadwiger_exact: witness failed verification");
    result.witness = std::move(best);
    return result;
}

} // namespace hadwiger
