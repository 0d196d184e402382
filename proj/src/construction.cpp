#include "hadwiger/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hadwiger/affine.hpp"
#include "hadwiger/coloring.hpp"
#include "hadwiger/product.hpp"

namespace hadwiger {

std::optional<int> max_construction_prime(long long l) {
    if (l < 1) return std::nullopt;
    // (p(p+1))^2 <= l, p odd prime >= 3; p = 2 is excluded because the layout
    // needs (p-1)/2 groups
    int best = -1;
    for (int p = 3; (long long)p * (p + 1) * p * (p + 1) <= l; ++p)
        if (p % 2 == 1 && is_prime(p)) best = p;
    if (best < 0) return std::nullopt;
    return best;
}

int ConstructionParams::copy_index(int i, int j, int m) const {
    return (i - 1) * g + (j - 1) * (2 * p + 1) + (m - 1);
}

int ConstructionParams::wrap_copy(int m) const {
    int mod = 2 * p + 1;
    int r = (m - 1) % mod;
    if (r < 0) r += mod;
    return r + 1;
}

int ConstructionParams::q0_vertex(int r, int c) const {
    return r * p * p + c;
}

int ConstructionParams::qk_vertex(int k, int a, int b) const {
    int p2 = p * p;
    return p2 * p2 + (k - 1) * p2 + (a - 1) * p + (b - 1);
}

ConstructionParams make_construction_params(int h, int l) {
    auto p = max_construction_prime(l);
    if (!p) throw std::invalid_argument("product_clique_model: no usable prime for l");
    ConstructionParams params;
    params.p = *p;
    params.h = h;
    params.l = l;
    params.g = (*p - 1) * (2 * *p + 1) / 2;
    if (h < params.g) throw std::invalid_argument("product_clique_model: h below one group of copies");
    params.s = h / params.g;
    params.neglected = h - params.s * params.g;
    // enough parallel classes for every (j, m) pair
    if (params.p * params.p + 1 < params.g)
        throw std::runtime_error("product_clique_model: parameter invariant violated");
    return params;
}

std::vector<BranchSetId> product_clique_ids(const ConstructionParams& params) {
    std::vector<BranchSetId> ids;
    int p = params.p;
    for (int i = 1; i <= params.s; ++i)
        for (int j = 1; j <= (p - 1) / 2; ++j)
            for (int m = 1; m <= 2 * p + 1; ++m)
                for (int t = 1; t <= p * p; ++t) ids.push_back({i, j, m, t});
    return ids;
}

namespace {

// shared plane of order p^2 per construction call
std::vector<int> branch_set_vertices(const ConstructionParams& params, const AffinePlane& plane,
                                     const BranchSetId& id) {
    int p = params.p;
    int l = params.l;
    int a1 = (id.t - 1) / p + 1;
    int a2 = (id.t - 1) % p + 1;

    std::vector<int> host;
    auto put = [&](int copy, int kl_vertex) { host.push_back(copy * l + kl_vertex); };

    // line A_{(j-1)(2p+1)+m, t} inside Q_0 of the home copy
    int home = params.copy_index(id.i, id.j, id.m);
    int line_class = (id.j - 1) * (2 * p + 1) + id.m; // 1-based
    for (int pt : plane.classes[line_class - 1][id.t - 1]) put(home, pt);

    // F(a1, a2, j, m): entry of Q_m in the home copy
    put(home, params.qk_vertex(id.m, a1, a2));

    // row a1 of Q_m, in copy m + a2
    int row_copy = params.copy_index(id.i, id.j, params.wrap_copy(id.m + a2));
    for (int b = 1; b <= p; ++b) put(row_copy, params.qk_vertex(id.m, a1, b));

    // column a2 of Q_m, in copy m - a1
    int col_copy = params.copy_index(id.i, id.j, params.wrap_copy(id.m - a1));
    for (int a = 1; a <= p; ++a) put(col_copy, params.qk_vertex(id.m, a, a2));

    return host;
}

} // namespace

std::vector<int> product_clique_branch_set(const ConstructionParams& params, const BranchSetId& id) {
    AffinePlane plane = affine_plane(params.p * params.p);
    return branch_set_vertices(params, plane, id);
}

AdjacencyMechanism product_clique_adjacency_mechanism(const ConstructionParams& params,
                                                      const BranchSetId& a, const BranchSetId& b) {
    int p = params.p;
    for (const BranchSetId* id : {&a, &b})
        if (id->i < 1 || id->i > params.s || id->j < 1 || id->j > (p - 1) / 2 || id->m < 1 ||
            id->m > 2 * p + 1 || id->t < 1 || id->t > p * p)
            throw std::invalid_argument("branch set identifier out of range");
    if (a.i == b.i && a.j == b.j && a.m == b.m) {
        if (a.t == b.t) throw std::invalid_argument("adjacency mechanism of a set with itself");
        return AdjacencyMechanism::SameCopy; // both own Q_0 points of the home copy
    }
    if (a.j != b.j || a.m != b.m) return AdjacencyMechanism::LineIntersection;
    if (a.t == b.t) return AdjacencyMechanism::LineIntersection; // same line in different groups
    return AdjacencyMechanism::CrossOverlap;
}

MinorModel product_clique_model(int h, int l, bool verify) {
    ConstructionParams params = make_construction_params(h, l);
    int p = params.p;
    AffinePlane plane = affine_plane(p * p);
    auto check = verify_plane(plane);
    if (!check.ok) throw std::runtime_error("product_clique_model: plane failed verification");

    auto ids = product_clique_ids(params);
    int n_sets = int(ids.size());

    MinorModel model;
    model.host = cartesian_product(complete_graph(h), complete_graph(l)).first;
    model.pattern = complete_graph(n_sets);
    model.branch_sets.assign(n_sets, Bitset(model.host.vertex_count()));
    int expected_size = (p + 1) * (p + 1);
    for (int idx = 0; idx < n_sets; ++idx) {
        auto vertices = branch_set_vertices(params, plane, ids[idx]);
        for (int v : vertices) model.branch_sets[idx].set(v);
        if (model.branch_sets[idx].count() != expected_size)
            throw std::runtime_error("product_clique_model: branch set size mismatch");
    }

    if (verify && !verify_model(model).ok)
        throw std::runtime_error("product_clique_model: model failed verification");
    return model;
}

MinorModel wn_square_clique_model(int n, bool verify) {
    if (n < 1) throw std::invalid_argument("wn_square_clique_model: n must be >= 1");
    Graph fan = fan_graph(n);
    MinorModel model;
    model.host = cartesian_product(fan, fan).first;
    model.pattern = complete_graph(n);
    model.branch_sets.assign(n, Bitset(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) model.branch_sets[i].set(i * n + j);   // <i,0>..<i,i>
        for (int r = i - 1; r >= 0; --r) model.branch_sets[i].set(r * n + i); // <i-1,i>..<0,i>
    }
    if (verify && !verify_model(model).ok)
        throw std::runtime_error("wn_square_clique_model: model failed verification");
    return model;
}

MinorModel double_grid_clique_model(int n, bool verify) {
    if (n < 2) throw std::invalid_argument("double_grid_clique_model: n must be >= 2");
    MinorModel model;
    model.host = double_grid_graph(n);
    model.pattern = complete_graph(n);
    model.branch_sets.assign(n, Bitset(2 * n * n));
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < n; ++c) model.branch_sets[i].set((i * n + c) * 2);     // row i, copy 0
        for (int r = 0; r < n; ++r) model.branch_sets[i].set((r * n + i) * 2 + 1); // column i, copy 1
    }
    if (verify && !verify_model(model).ok)
        throw std::runtime_error("double_grid_clique_model: model failed verification");
    return model;
}

long long upper_bound_kn_km(long long n, long long m) {
    if (n < m || m < 1) throw std::invalid_argument("upper_bound_kn_km: requires n >= m >= 1");
    // n + m - 2 + (nm/h - 1)(n - 2) >= h - 1, evaluated exactly after
    // multiplying through by h > 0
    auto holds = [&](long long h) {
        return (n + m - 2) * h + (n * m - h) * (n - 2) >= h * (h - 1);
    };
    long long h = 1;
    while (holds(h + 1)) ++h;
    long double bound = (long double)n * std::sqrt((long double)m) + (long double)m;
    if ((long double)h > bound + 1e-9)
        throw std::runtime_error("upper_bound_kn_km: bound exceeded n*sqrt(m) + m");
    return h;
}

std::uint64_t hypercube_lower_bound(int k) {
    if (k < 1) throw std::invalid_argument("hypercube_lower_bound: k must be >= 1");
    if (k > 127) throw std::invalid_argument("hypercube_lower_bound: k too large for 64-bit result");
    return std::uint64_t{1} << ((k - 1) / 2);
}

MinorModel equal_chi_clique_model(const Graph& g, const Graph& h) {
    int chi_g = chromatic_number(g).k;
    int chi_h = chromatic_number(h).k;
    if (chi_g != chi_h) throw std::invalid_argument("equal_chi_clique_model: chromatic numbers differ");
    int n = chi_g;
    Graph host = cartesian_product(g, h).first;

    if (n == 1) {
        // edgeless factors: a single vertex is already a K_1 model
        MinorModel model;
        model.host = std::move(host);
        model.pattern = complete_graph(1);
        model.branch_sets.assign(1, Bitset(model.host.vertex_count()));
        model.branch_sets[0].set(0);
        if (!verify_model(model).ok)
            throw std::runtime_error("equal_chi_clique_model: model failed verification");
        return model;
    }

    MinorModel fan_in_g = extract_w_minor(g);
    MinorModel fan_in_h = extract_w_minor(h);
    MinorModel fans_in_product = product_of_models(fan_in_g, fan_in_h);
    MinorModel clique_in_fans = wn_square_clique_model(n);
    if (!(clique_in_fans.host == fans_in_product.pattern))
        throw std::runtime_error("equal_chi_clique_model: fan product labeling mismatch");
    MinorModel model = compose_models(clique_in_fans, fans_in_product);
    if (!(model.host == host))
        throw std::runtime_error("equal_chi_clique_model: host labeling mismatch");
    return model;
}

MinorModel power_clique_model(const Graph& f, int d) {
    if (d < 2) throw std::invalid_argument("power_clique_model: d must be >= 2");
    if (f.vertex_count() < 2 || !is_connected(f))
        throw std::invalid_argument("power_clique_model: factor must be connected with >= 2 vertices");
    int d1 = (d + 1) / 2, d2 = d / 2;
    Graph left = cartesian_power(f, d1).first;
    Graph right = cartesian_power(f, d2).first;
    MinorModel model = equal_chi_clique_model(left, right);
    Graph full = cartesian_power(f, d).first;
    if (!(model.host == full))
        throw std::runtime_error("power_clique_model: power labeling mismatch");
    model.host = std::move(full);
    return model;
}

namespace {

void add_lower(BoundEntry& entry, ProductBoundReport& report, int value, const std::string& id,
               const std::string& provenance, MinorModel witness) {
    if (!verify_model(witness).ok)
        throw std::runtime_error("product_bound_report: unverified bound witness");
    entry.lower.push_back({value, id, provenance});
    report.witnesses.emplace_back(id, std::move(witness));
}

} // namespace

ProductBoundReport product_bound_report(const Graph& g1, const Graph& g2, std::uint64_t budget) {
    if (g1.vertex_count() == 0 || g2.vertex_count() == 0)
        throw std::invalid_argument("product_bound_report: empty factor");

    ProductBoundReport report;
    Graph product = cartesian_product(g1, g2).first;
    report.factor1.graph6 = write_graph6(g1);
    report.factor2.graph6 = write_graph6(g2);
    report.product.graph6 = write_graph6(product);

    auto eta_of = [&](const Graph& g, BoundEntry& entry,
                      const std::string& name) -> std::optional<HadwigerResult> {
        HadwigerResult res = hadwiger_exact(g, budget);
        if (res.exact) entry.eta_exact = res.value;
        add_lower(entry, report, res.value, name + "-eta-witness",
                  res.exact ? "exact oracle" : "oracle lower bound (search incomplete)",
                  *res.witness);
        return res;
    };

    auto eta1 = eta_of(g1, report.factor1, "g1");
    auto eta2 = eta_of(g2, report.factor2, "g2");

    auto chi_of = [&](const Graph& g, BoundEntry& entry) -> std::optional<int> {
        std::optional<int> chi;
        if (g.is_complete()) chi = g.vertex_count();
        else if (g.vertex_count() <= 64) chi = chromatic_number(g).k;
        if (chi) entry.chi_exact = *chi;
        return chi;
    };
    auto chi1 = chi_of(g1, report.factor1);
    auto chi2 = chi_of(g2, report.factor2);
    if (chi1 && chi2) report.product.chi_exact = std::max(*chi1, *chi2); // chi of a product is the max

    // factor layers are subgraphs of the product
    if (eta1 && eta2) {
        const HadwigerResult& stronger = eta1->value >= eta2->value ? *eta1 : *eta2;
        bool from_first = eta1->value >= eta2->value;
        MinorModel layer;
        layer.host = product;
        layer.pattern = stronger.witness->pattern;
        layer.branch_sets.assign(stronger.witness->branch_sets.size(), Bitset(product.vertex_count()));
        int n2 = g2.vertex_count();
        for (std::size_t s = 0; s < stronger.witness->branch_sets.size(); ++s)
            for (int v = stronger.witness->branch_sets[s].first(); v >= 0;
                 v = stronger.witness->branch_sets[s].next(v))
                layer.branch_sets[s].set(from_first ? v * n2 : v);
        add_lower(report.product, report, stronger.value, "layer-eta-witness",
                  std::string("factor layer (") + (from_first ? "G1" : "G2") + ")", std::move(layer));
    }

    // composed construction bound, trying both orientations
    if (eta1 && eta2 && eta1->exact && eta2->exact) {
        auto try_orientation = [&](int h, int l) -> std::optional<int> {
            auto p = max_construction_prime(l);
            if (!p) return std::nullopt;
            int g = (*p - 1) * (2 * *p + 1) / 2;
            if (h < g) return std::nullopt;
            return (h / g) * *p * *p * g;
        };
        auto n_fwd = try_orientation(eta1->value, eta2->value);
        auto n_rev = try_orientation(eta2->value, eta1->value);
        bool swap = n_rev && (!n_fwd || *n_rev > *n_fwd);
        if (n_fwd || n_rev) {
            const HadwigerResult& first = swap ? *eta2 : *eta1;
            const HadwigerResult& second = swap ? *eta1 : *eta2;
            MinorModel kh_kl = product_clique_model(first.value, second.value);
            MinorModel pair_model =
                swap ? product_of_models(*eta2->witness, *eta1->witness)
                     : product_of_models(*eta1->witness, *eta2->witness);
            MinorModel composed = compose_models(kh_kl, pair_model);
            if (swap) {
                // the construction ran on G2 [] G1; transpose back to G1 [] G2
                int n1 = g1.vertex_count(), nn2 = g2.vertex_count();
                MinorModel transposed;
                transposed.host = product;
                transposed.pattern = composed.pattern;
                transposed.branch_sets.assign(composed.branch_sets.size(),
                                              Bitset(product.vertex_count()));
                for (std::size_t s = 0; s < composed.branch_sets.size(); ++s)
                    for (int v = composed.branch_sets[s].first(); v >= 0;
                         v = composed.branch_sets[s].next(v)) {
                        int x = v / n1, y = v % n1; // v = <x in G2, y in G1>
                        transposed.branch_sets[s].set(y * nn2 + x);
                    }
                composed = std::move(transposed);
            }
            add_lower(report.product, report, composed.pattern.vertex_count(), "construction-witness",
                      "grouped-copies construction on K_h [] K_l", std::move(composed));
        }
    }

    // exact product oracle at desk scale
    if (product.vertex_count() <= 20) {
        HadwigerResult res = hadwiger_exact(product, budget);
        if (res.exact) report.product.eta_exact = res.value;
        add_lower(report.product, report, res.value, "product-eta-witness",
                  res.exact ? "exact oracle" : "oracle lower bound (search incomplete)",
                  *res.witness);
    }

    report.product.upper.push_back({(long long)product.vertex_count(), "vertex count"});
    if (g1.is_complete() && g2.is_complete()) {
        long long n = std::max(g1.vertex_count(), g2.vertex_count());
        long long m = std::min(g1.vertex_count(), g2.vertex_count());
        report.product.upper.push_back({upper_bound_kn_km(n, m),
                                        "neighborhood-growth bound for K_n [] K_m"});
    }

    // lower <= exact <= upper whenever exact is present
    for (const BoundEntry* entry : {&report.factor1, &report.factor2, &report.product})
        if (entry->eta_exact) {
            for (const auto& lb : entry->lower)
                if (lb.value > *entry->eta_exact)
                    throw std::runtime_error("product_bound_report: lower bound above exact value");
            for (const auto& ub : entry->upper)
                if (ub.value < *entry->eta_exact)
                    throw std::runtime_error("product_bound_report: upper bound below exact value");
        }

    // conjecture verdict when both sides are pinned
    int best_lower = 0;
    for (const auto& lb : report.product.lower) best_lower = std::max(best_lower, lb.value);
    if (report.product.chi_exact) {
        if (best_lower >= *report.product.chi_exact)
            report.product.verdict = "holds";
        else if (report.product.eta_exact && *report.product.eta_exact < *report.product.chi_exact)
            report.product.verdict = "counterexample"; // unreachable if the conjecture is true
    }
    return report;
}

} // namespace hadwiger
