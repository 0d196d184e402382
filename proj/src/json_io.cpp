#include "hadwiger/json_io.hpp"

#include <stdexcept>

namespace hadwiger {

json graph_to_json(const Graph& g) {
    return json{{"graph6", write_graph6(g)},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()}};
}

json model_to_json(const MinorModel& m) {
    json sets = json::array();
    for (const auto& s : m.branch_sets) sets.push_back(s.to_vector());
    return json{{"host", write_graph6(m.host)},
                {"pattern", write_graph6(m.pattern)},
                {"branch_sets", std::move(sets)}};
}

MinorModel model_from_json(const json& j) {
    MinorModel m;
    m.host = parse_graph6(j.at("host").get<std::string>());
    m.pattern = parse_graph6(j.at("pattern").get<std::string>());
    for (const auto& set : j.at("branch_sets")) {
        Bitset b(m.host.vertex_count());
        for (const auto& v : set) {
            int idx = v.get<int>();
            if (idx < 0 || idx >= m.host.vertex_count())
                throw std::invalid_argument("model JSON: branch set index out of range");
            b.set(idx);
        }
        m.branch_sets.push_back(std::move(b));
    }
    return m;
}

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::Disconnected: return "disconnected";
        case ViolationKind::MissingAdjacency: return "missing-adjacency";
    }
    return "unknown";
}

json report_to_json(const VerificationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"kind", violation_kind_name(v.kind)},
                                  {"pattern_vertices", v.pattern_vertices}});
    return json{{"ok", r.ok}, {"violations", std::move(violations)}};
}

json factorization_to_json(const FactorizationResult& f) {
    json factors = json::array();
    for (const auto& g : f.factors) factors.push_back(write_graph6(g));
    return json{{"factors", std::move(factors)}, {"coordinates", f.coordinates}};
}

json coloring_to_json(const Coloring& c) {
    return json{{"k", c.k}, {"colors", c.colors}};
}

json plane_to_json(const AffinePlane& p) {
    return json{{"order", p.order}, {"classes", p.classes}};
}

namespace {

json bound_entry_to_json(const BoundEntry& e) {
    json out{{"graph", e.graph6}};
    if (e.eta_exact) out["eta_exact"] = *e.eta_exact;
    if (e.chi_exact) out["chi_exact"] = *e.chi_exact;
    json lower = json::array();
    for (const auto& lb : e.lower)
        lower.push_back(json{{"value", lb.value},
                             {"witness_id", lb.witness_id},
                             {"provenance", lb.provenance}});
    out["lower"] = std::move(lower);
    json upper = json::array();
    for (const auto& ub : e.upper)
        upper.push_back(json{{"value", ub.value}, {"formula", ub.formula}});
    out["upper"] = std::move(upper);
    if (e.verdict) out["verdict"] = *e.verdict;
    return out;
}

} // namespace

json bound_report_to_json(const ProductBoundReport& r) {
    json witnesses = json::object();
    for (const auto& [id, model] : r.witnesses) witnesses[id] = model_to_json(model);
    return json{{"graphs", json::array({bound_entry_to_json(r.factor1),
                                        bound_entry_to_json(r.factor2),
                                        bound_entry_to_json(r.product)})},
                {"witnesses", std::move(witnesses)}};
}

} // namespace hadwiger
