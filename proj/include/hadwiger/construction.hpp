#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadwiger/graph.hpp"
#include "hadwiger/minor.hpp"

namespace hadwiger {

/// Layout of the clique-minor construction in K_h [] K_l.
///
/// Copies of K_l are grouped as (i, j, m) with i in 1..s large groups,
/// j in 1..(p-1)/2, m in 1..2p+1; the highest-index h - s*g copies are
/// neglected. Inside each copy, the K_l vertices split into a p^2 x p^2 big
/// square Q_0 (row-major), 2p+1 small p x p squares Q_1..Q_{2p+1} (row-major),
/// and an unused remainder.
struct ConstructionParams {
    int p = 0;       // odd prime >= 3
    int h = 0, l = 0;
    int g = 0;       // copies per large group: (p-1)(2p+1)/2
    int s = 0;       // number of large groups
    int neglected = 0;

    /// K_h vertex index of copy (i, j, m), all 1-based.
    int copy_index(int i, int j, int m) const;
    /// 1-based m +- x reduced into 1..2p+1.
    int wrap_copy(int m) const;
    /// K_l vertex of cell (r, c) of Q_0, 0-based cell coordinates.
    int q0_vertex(int r, int c) const;
    /// K_l vertex of entry (a, b) of Q_k, 1-based a, b in 1..p, k in 1..2p+1.
    int qk_vertex(int k, int a, int b) const;
};

/// Derives and validates the parameters; p = max_construction_prime(l).
ConstructionParams make_construction_params(int h, int l);

/// Largest odd prime p >= 3 with (p(p+1))^2 <= l, if any.
std::optional<int> max_construction_prime(long long l);

/// Identifier of one branch set of the K_h [] K_l construction.
struct BranchSetId {
    int i = 0, j = 0, m = 0, t = 0; // all 1-based, t in 1..p^2
};

/// Why two branch sets of the construction are adjacent.
enum class AdjacencyMechanism {
    SameCopy,         // both sets own vertices of one K_l copy
    LineIntersection, // same K_l vertex (a Q_0 point) in different copies
    CrossOverlap,     // same K_l vertex (a Q_k entry) in different copies
};

/// Verified clique minor in K_h [] K_l with s * p^2 * g branch sets of size
/// (p+1)^2 each. Requires a usable prime for l and h >= g.
MinorModel product_clique_model(int h, int l, bool verify = true);

/// Branch-set identifiers in pattern-vertex order for the model above.
std::vector<BranchSetId> product_clique_ids(const ConstructionParams& params);

/// Expected adjacency mechanism between two distinct branch sets.
AdjacencyMechanism product_clique_adjacency_mechanism(const ConstructionParams& params,
                                                      const BranchSetId& a, const BranchSetId& b);

/// The host vertices of one branch set.
std::vector<int> product_clique_branch_set(const ConstructionParams& params, const BranchSetId& id);

/// Verified K_n model in W_n [] W_n; branch set i is the hook
/// {<i,0>..<i,i>, <i-1,i>..<0,i>} of size 2i+1.
MinorModel wn_square_clique_model(int n, bool verify = true);

/// Verified K_n model in the n x n double-grid (R_n [] K_2): branch set i is
/// row i of copy 0 plus column i of copy 1.
MinorModel double_grid_clique_model(int n, bool verify = true);

/// Largest h satisfying n + m - 2 + (nm/h - 1)(n - 2) >= h - 1, for n >= m.
/// Always at most n*sqrt(m) + m.
long long upper_bound_kn_km(long long n, long long m);

/// 2^floor((k-1)/2); formula-only bound for the k-dimensional hypercube.
std::uint64_t hypercube_lower_bound(int k);

/// Verified K_n model in G [] H for chi(G) = chi(H) = n: fan minors of both
/// factors, their product, composed with the fan-square clique model.
MinorModel equal_chi_clique_model(const Graph& g, const Graph& h);

/// Verified K_{chi(F)} model in F^d, d >= 2, via the equal-chi pipeline on
/// F^ceil(d/2) [] F^floor(d/2).
MinorModel power_clique_model(const Graph& f, int d);

struct LowerBoundEntry {
    int value = 0;
    std::string witness_id;
    std::string provenance;
};

struct UpperBoundEntry {
    long long value = 0;
    std::string formula;
};

/// Certified bound record for one graph.
struct BoundEntry {
    std::string graph6;
    std::optional<int> eta_exact;
    std::optional<int> chi_exact;
    std::vector<LowerBoundEntry> lower;
    std::vector<UpperBoundEntry> upper;
    std::optional<std::string> verdict;
};

struct ProductBoundReport {
    BoundEntry factor1, factor2, product;
    std::vector<std::pair<std::string, MinorModel>> witnesses;
};

/// Bound report for G1 [] G2: exact factor oracles where feasible, the
/// composed construction lower bound when the parameters admit it, and a
/// conjecture verdict when eta and chi of the product can both be pinned.
/// Every reported lower bound carries a verified witness.
ProductBoundReport product_bound_report(const Graph& g1, const Graph& g2, std::uint64_t budget = 0);

} // namespace hadwiger
