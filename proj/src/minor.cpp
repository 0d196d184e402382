#include "hadwiger/minor.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hadwiger/product.hpp"

namespace hadwiger {

VerificationReport verify_model(const MinorModel& m) {
    int np = m.pattern.vertex_count();
    if (int(m.branch_sets.size()) != np)
        throw std::invalid_argument("verify_model: branch set count does not match pattern");
    for (const auto& s : m.branch_sets) {
        if (s.size() != m.host.vertex_count())
            throw std::invalid_argument("verify_model: branch set sized for a different host");
        if (s.none()) throw std::invalid_argument("verify_model: empty branch set");
    }

    VerificationReport report;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j)
            if (m.branch_sets[i].intersects(m.branch_sets[j]))
                report.violations.push_back({ViolationKind::Overlap, {i, j}});
    for (int i = 0; i < np; ++i)
        if (!induced_is_connected(m.host, m.branch_sets[i]))
            report.violations.push_back({ViolationKind::Disconnected, {i}});
    for (auto [x, y] : m.pattern.edges()) {
        bool adjacent = false;
        const Bitset& a = m.branch_sets[x];
        const Bitset& b = m.branch_sets[y];
        for (int u = a.first(); u >= 0 && !adjacent; u = a.next(u))
            adjacent = m.host.row(u).intersects(b);
        if (!adjacent) report.violations.push_back({ViolationKind::MissingAdjacency, {x, y}});
    }
    report.ok = report.violations.empty();
    return report;
}

MinorModel product_of_models(const MinorModel& m1, const MinorModel& m2) {
    if (!verify_model(m1).ok || !verify_model(m2).ok)
        throw std::invalid_argument("product_of_models: input model does not verify");

    auto [host, host_lab] = cartesian_product(m1.host, m2.host);
    auto [pattern, pat_lab] = cartesian_product(m1.pattern, m2.pattern);

    int n2h = m2.host.vertex_count();
    int np2 = m2.pattern.vertex_count();

    MinorModel out;
    out.host = std::move(host);
    out.pattern = std::move(pattern);
    out.branch_sets.assign(out.pattern.vertex_count(), Bitset(out.host.vertex_count()));
    for (int x = 0; x < m1.pattern.vertex_count(); ++x) {
        int rx = m1.branch_sets[x].first();
        for (int y = 0; y < np2; ++y) {
            int ry = m2.branch_sets[y].first();
            Bitset& set = out.branch_sets[x * np2 + y];
            for (int u = m1.branch_sets[x].first(); u >= 0; u = m1.branch_sets[x].next(u))
                set.set(u * n2h + ry);
            for (int v = m2.branch_sets[y].first(); v >= 0; v = m2.branch_sets[y].next(v))
                set.set(rx * n2h + v);
        }
    }
    if (!verify_model(out).ok) throw std::runtime_error("product_of_models: output failed verification");
    return out;
}

MinorModel compose_models(const MinorModel& outer, const MinorModel& inner) {
    if (!(outer.host == inner.pattern))
        throw std::invalid_argument("compose_models: outer host differs from inner pattern");
    if (!verify_model(outer).ok || !verify_model(inner).ok)
        throw std::invalid_argument("compose_models: input model does not verify");

    MinorModel out;
    out.host = inner.host;
    out.pattern = outer.pattern;
    out.branch_sets.assign(outer.pattern.vertex_count(), Bitset(inner.host.vertex_count()));
    for (int p = 0; p < outer.pattern.vertex_count(); ++p)
        for (int m = outer.branch_sets[p].first(); m >= 0; m = outer.branch_sets[p].next(m))
            out.branch_sets[p] |= inner.branch_sets[m];
    if (!verify_model(out).ok) throw std::runtime_error("compose_models: output failed verification");
    return out;
}

std::string export_dot(const Graph& g, const MinorModel& m) {
    if (!(m.host == g)) throw std::invalid_argument("export_dot: model host differs from graph");
    return export_dot(m);
}

std::string export_dot(const MinorModel& m) {
    int k = int(m.branch_sets.size());
    std::vector<int> owner(m.host.vertex_count(), -1);
    for (int i = 0; i < k; ++i)
        for (int v = m.branch_sets[i].first(); v >= 0; v = m.branch_sets[i].next(v)) owner[v] = i;
    std::ostringstream out;
    out << "graph G {\n  node [style=filled];\n";
    for (int v = 0; v < m.host.vertex_count(); ++v) {
        out << "  " << v;
        if (owner[v] >= 0) {
            char hue[16];
            std::snprintf(hue, sizeof hue, "%.3f", k > 0 ? double(owner[v]) / k : 0.0);
            out << " [fillcolor=\"" << hue << " 0.600 0.900\"]";
        } else {
            out << " [fillcolor=white]";
        }
        out << ";\n";
    }
    for (auto [u, v] : m.host.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace hadwiger
