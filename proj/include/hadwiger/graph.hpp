#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hadwiger/bitset.hpp"

namespace hadwiger {

/// Simple undirected graph on dense vertex indices 0..n-1. No loops, no
/// parallel edges. Adjacency is kept both as neighbor lists and as per-vertex
/// bitmask rows; the bitmasks are the source of truth for search kernels.
///
/// Graphs are treated as immutable once handed to an operation; construction
/// happens through add_edge / from_edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return int(neighbors_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
    const Bitset& row(int v) const { return rows_[v]; }

    /// Edges as sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    /// Adds edge {u, v}; idempotent. Throws on loops or out-of-range indices.
    void add_edge(int u, int v);

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> rows_;
    std::vector<std::vector<int>> neighbors_;
};

// --- named families ---------------------------------------------------------

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Star K_{1,n}: n leaves around center 0, n+1 vertices total.
Graph star_graph(int n);
/// n x n grid R_n; cell (r, c) has index r*n + c.
Graph grid_graph(int n);
/// Two R_n copies plus a perfect matching on identical labels; identical to
/// grid_graph(n) [] K_2 with cell (r, c) of copy k at index (r*n + c)*2 + k.
Graph double_grid_graph(int n);
/// d-dimensional hypercube Q_d, built as the iterated product of K_2.
Graph hypercube_graph(int d);
/// Fan W_n: vertex 0 universal, vertices 1..n-1 a path.
Graph fan_graph(int n);

/// Dispatcher over family names: complete, path, cycle, star, grid,
/// double-grid, hypercube, fan. Throws on unknown family or bad parameters.
Graph generate(std::string_view kind, const std::vector<int>& params);

// --- basic queries -----------------------------------------------------------

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced on s (s nonempty).
bool induced_is_connected(const Graph& g, const Bitset& s);

/// Contracts edge {u, v} (v merged into u, indices above v shift down by one).
/// Parallel edges collapse; the result is simple.
Graph contract_edge(const Graph& g, int u, int v);

Graph delete_vertex(const Graph& g, int v);

/// Lexicographically smallest upper-triangle adjacency bitstring over all
/// vertex relabelings. Exact (factorial search with degree pruning); intended
/// for small graphs. Throws above max_exact_canonical_n vertices.
std::vector<std::uint8_t> canonical_form(const Graph& g);
inline constexpr int max_exact_canonical_n = 10;

// --- serialization ------------------------------------------------------------

/// Parses graph6 (optional ">>graph6<<" header, one trailing newline allowed).
/// Throws std::invalid_argument on malformed input.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "u v" per line, 0-based. vertex_count = max index + 1 unless n is given.
Graph parse_edge_list(std::string_view text, std::optional<int> n = std::nullopt);
std::string write_edge_list(const Graph& g);

std::string export_dot(const Graph& g);

} // namespace hadwiger
