#pragma once

#include <optional>
#include <vector>

#include "hadwiger/graph.hpp"
#include "hadwiger/minor.hpp"

namespace hadwiger {

/// Proper coloring witness; colors take values 1..k.
struct Coloring {
    int k = 0;
    std::vector<int> colors;
};

bool is_proper(const Graph& g, const Coloring& c);

/// Exact decision with witness: backtracking over saturation-degree vertex
/// order, with new colors introduced in first-occurrence order.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

/// Least k with witness; greedy-clique lower bound prunes the scan.
Coloring chromatic_number(const Graph& g);

/// Greedy chi-preserving removal of vertices (increasing degree) then edges
/// (canonical order); the result is vertex- and edge-critical.
Graph critical_subgraph(const Graph& g);

/// Verified fan minor W_k with k = chi(g), built from a non-extendable path in
/// a chi-critical subgraph. Requires chi(g) >= 2.
MinorModel extract_w_minor(const Graph& g);

} // namespace hadwiger
