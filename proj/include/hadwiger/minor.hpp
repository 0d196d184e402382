#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadwiger/graph.hpp"

namespace hadwiger {

/// Branch-set certificate: one nonempty vertex set of the host per pattern
/// vertex. Valid when the sets are disjoint, each induces a connected
/// subgraph, and sets of pattern-adjacent vertices are adjacent in the host.
struct MinorModel {
    Graph host;
    Graph pattern;
    std::vector<Bitset> branch_sets;
};

enum class ViolationKind { Overlap, Disconnected, MissingAdjacency };

struct Violation {
    ViolationKind kind;
    std::vector<int> pattern_vertices;
};

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;
};

/// Checks all three model conditions exhaustively and reports every violation.
/// Structural problems (wrong set count, out-of-range indices, empty sets)
/// throw instead.
VerificationReport verify_model(const MinorModel& m);

/// Witness for "M1 [] M2 is a minor of G1 [] G2": the branch set of pattern
/// vertex <x, y> is (V_x x {r_y}) u ({r_x} x V_y) with r_* the minimum-index
/// member. Both inputs must verify; the output is verified before returning.
MinorModel product_of_models(const MinorModel& m1, const MinorModel& m2);

/// Transitivity: P-in-M composed with M-in-G gives P-in-G by unioning inner
/// branch sets. outer.host must equal inner.pattern.
MinorModel compose_models(const MinorModel& outer, const MinorModel& inner);

enum class SearchStatus { Found, NotFound, Indeterminate };

struct MinorSearchResult {
    SearchStatus status = SearchStatus::Indeterminate;
    std::optional<MinorModel> model;
    std::uint64_t nodes = 0;
};

/// Exact desk-scale minor containment. budget = 0 means unlimited; on
/// exhaustion the result is Indeterminate, which is distinct from NotFound.
MinorSearchResult has_minor(const Graph& host, const Graph& pattern, std::uint64_t budget = 0);

struct HadwigerResult {
    int value = 0;       // certified lower bound; exact when `exact`
    bool exact = false;
    std::optional<MinorModel> witness;
    std::uint64_t nodes = 0;
};

/// Largest h with a verified K_h model, by monotone search. On budget
/// exhaustion, or for hosts beyond the 64-vertex search kernel, returns the
/// best certified lower bound flagged non-exact.
HadwigerResult hadwiger_exact(const Graph& g, std::uint64_t budget = 0);

std::string export_dot(const Graph& g, const MinorModel& m);
std::string export_dot(const MinorModel& m);

} // namespace hadwiger
