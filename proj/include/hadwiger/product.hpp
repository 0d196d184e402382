#pragma once

#include <utility>
#include <vector>

#include "hadwiger/graph.hpp"

namespace hadwiger {

/// Bijection between composite coordinate tuples <i_1,...,i_k> and flat vertex
/// indices. Mixed radix with factor 1 most significant.
struct ProductLabeling {
    std::vector<int> factor_sizes;

    int size() const {
        int p = 1;
        for (int s : factor_sizes) p *= s;
        return p;
    }

    int flat_of(const std::vector<int>& tuple) const;
    std::vector<int> tuple_of(int flat) const;
};

/// Cartesian product: edge iff exactly one coordinate differs and that pair is
/// an edge of the corresponding factor. Vertex <i, j> sits at flat index
/// i * h.vertex_count() + j.
std::pair<Graph, ProductLabeling> cartesian_product(const Graph& g, const Graph& h);

/// Iterated product of g with itself, d >= 1.
std::pair<Graph, ProductLabeling> cartesian_power(const Graph& g, int d);

/// Unique prime factorization certificate: factors plus per-vertex coordinate
/// tuples. Re-multiplying the factors under `coordinates` reproduces the input
/// edge set exactly (checked before returning).
struct FactorizationResult {
    std::vector<Graph> factors;
    std::vector<std::vector<int>> coordinates; // coordinates[v][i] = position of v in factor i
};

/// Prime factorization w.r.t. the Cartesian product, for connected graphs with
/// at least two vertices. Factors are returned in canonical order (sorted by
/// vertex count, edge count, canonical edge list).
FactorizationResult prime_factorize(const Graph& g);

bool is_prime_graph(const Graph& g);

} // namespace hadwiger
