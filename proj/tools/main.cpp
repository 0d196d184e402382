// Command-line front end: generators, oracles, constructions, and verification
// as batch commands. Standard output carries exactly one JSON document (or DOT
// with --format dot); the human summary and diagnostics go to stderr.
// Exit codes: 0 ok, 2 indeterminate (budget exhausted), 1 error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hadwiger/coloring.hpp"
#include "hadwiger/construction.hpp"
#include "hadwiger/json_io.hpp"
#include "hadwiger/minor.hpp"
#include "hadwiger/product.hpp"

namespace {

using hadwiger::json;

struct Outcome {
    std::string status = "ok"; // ok | indeterminate | error
    json payload;
    std::string summary;
    std::string text; // non-JSON output (DOT), used when nonempty
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// graphs arrive as graph6 strings or @file paths
hadwiger::Graph load_graph(const std::string& spec, bool edge_list) {
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') text = slurp(spec.substr(1));
    if (edge_list) return hadwiger::parse_edge_list(text);
    return hadwiger::parse_graph6(text);
}

std::vector<int> parse_params(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int exit_code_for(const std::string& status) {
    if (status == "ok") return 0;
    if (status == "indeterminate") return 2;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified clique-minor constructions and exact desk-scale oracles"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    // several subcommands take a --h option, so no -h short flag anywhere
    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* cmd = parent->add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print help");
        cmd->fallthrough(); // global flags may follow the subcommand
        return cmd;
    };

    bool quiet = false;
    int threads = 1;
    app.add_flag("--quiet", quiet, "suppress the summary line on stderr");
    app.add_option("--threads", threads, "worker cap; results are identical for any value")
        ->check(CLI::PositiveNumber);

    std::string format = "json";
    bool edge_list = false;
    std::uint64_t budget = 50'000'000;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));
    app.add_flag("--edge-list", edge_list, "read graphs as edge-list text instead of graph6");

    // --- gen ---
    auto* gen = sub(&app, "gen", "generate a named graph family");
    std::string gen_kind;
    std::string gen_params;
    std::uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind,
                    "complete|path|cycle|star|grid|double-grid|hypercube|fan|random")
        ->required();
    gen->add_option("--params", gen_params, "comma-separated integer parameters")->required();
    gen->add_option("--seed", gen_seed, "RNG seed (random kind only)");

    // --- product / power ---
    auto* product = sub(&app, "product", "Cartesian product of two graphs");
    std::string pr_g, pr_h;
    product->add_option("--g", pr_g)->required();
    product->add_option("--h", pr_h)->required();

    auto* power = sub(&app, "power", "Cartesian power of a graph");
    std::string pw_g;
    int pw_d = 0;
    power->add_option("--g", pw_g)->required();
    power->add_option("--d", pw_d)->required();

    // --- factor ---
    auto* factor = sub(&app, "factor", "unique prime factorization");
    std::string fa_g;
    factor->add_option("--graph6", fa_g)->required();

    // --- chi / eta ---
    auto* chi = sub(&app, "chi", "exact chromatic number with witness");
    std::string chi_g;
    chi->add_option("--graph6", chi_g)->required();

    auto* eta = sub(&app, "eta", "exact Hadwiger number with witness");
    std::string eta_g;
    eta->add_option("--graph6", eta_g)->required();
    eta->add_option("--budget", budget, "search node budget (0 = unlimited)");

    // --- minor-check / verify-model ---
    auto* minor_check = sub(&app, "minor-check", "exact minor containment");
    std::string mc_host, mc_pattern;
    minor_check->add_option("--host", mc_host)->required();
    minor_check->add_option("--pattern", mc_pattern)->required();
    minor_check->add_option("--budget", budget, "search node budget (0 = unlimited)");

    auto* verify_cmd = sub(&app, "verify-model", "verify a branch-set certificate");
    std::string vm_file;
    verify_cmd->add_option("--model", vm_file, "path to a model JSON file")->required();

    // --- plane ---
    auto* plane_cmd = sub(&app, "plane", "affine plane of prime-power order");
    int plane_q = 0;
    plane_cmd->add_option("--q", plane_q)->required();

    // --- construct ---
    auto* construct = sub(&app, "construct", "paper-specific clique-minor models");
    construct->require_subcommand(1);
    bool do_verify = true;
    construct->add_flag("--verify,!--no-verify", do_verify,
                        "verify the emitted model (--no-verify stamps it unverified)");
    auto* kh_kl = sub(construct, "kh-kl", "clique minor in K_h [] K_l");
    int c_h = 0, c_l = 0;
    kh_kl->add_option("--h", c_h)->required();
    kh_kl->add_option("--l", c_l)->required();
    auto* wn_sq = sub(construct, "wn-square", "K_n in the fan square W_n [] W_n");
    int c_n = 0;
    wn_sq->add_option("--n", c_n)->required();
    auto* dgrid = sub(construct, "double-grid", "K_n in the n x n double-grid");
    int c_dg = 0;
    dgrid->add_option("--n", c_dg)->required();

    // --- w-minor ---
    auto* w_minor = sub(&app, "w-minor", "fan minor W_chi(G) extraction");
    std::string wm_g;
    w_minor->add_option("--graph6", wm_g)->required();

    // --- conjecture ---
    auto* conjecture = sub(&app, "conjecture", "end-to-end conjecture pipelines");
    conjecture->require_subcommand(1);
    auto* eq_chi = sub(conjecture, "equal-chi", "equal chromatic number factors");
    std::string ec_g, ec_h;
    eq_chi->add_option("--g", ec_g)->required();
    eq_chi->add_option("--h", ec_h)->required();
    auto* conj_power = sub(conjecture, "power", "Cartesian power F^d, d >= 2");
    std::string cp_f;
    int cp_d = 0;
    conj_power->add_option("--f", cp_f)->required();
    conj_power->add_option("--d", cp_d)->required();

    // --- report ---
    auto* report_cmd = sub(&app, "report", "certified bound report for G1 [] G2");
    std::string rp_g, rp_h;
    report_cmd->add_option("--g", rp_g)->required();
    report_cmd->add_option("--h", rp_h)->required();
    report_cmd->add_option("--budget", budget, "search node budget (0 = unlimited)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err{{"status", "error"}, {"error", e.what()}};
        std::cout << err.dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    Outcome out;
    try {
        auto graph_payload = [&](const hadwiger::Graph& g) {
            if (format == "dot") out.text = hadwiger::export_dot(g);
            out.payload = hadwiger::graph_to_json(g);
        };
        auto model_payload = [&](const hadwiger::MinorModel& m, bool verified) {
            if (format == "dot") out.text = hadwiger::export_dot(m);
            out.payload = hadwiger::model_to_json(m);
            out.payload["verified"] = verified;
        };

        if (*gen) {
            auto params = parse_params(gen_params);
            if (gen_kind == "random") {
                // CLI-only family for test harnesses: params = n, edge percent
                if (params.size() != 2) throw std::invalid_argument("random takes params n,percent");
                std::mt19937 rng{std::uint32_t(gen_seed)};
                hadwiger::Graph g(params[0]);
                std::uniform_int_distribution<int> coin(0, 99);
                for (int u = 0; u < params[0]; ++u)
                    for (int v = u + 1; v < params[0]; ++v)
                        if (coin(rng) < params[1]) g.add_edge(u, v);
                graph_payload(g);
                out.summary = "random graph on " + std::to_string(g.vertex_count()) + " vertices";
            } else {
                hadwiger::Graph g = hadwiger::generate(gen_kind, params);
                graph_payload(g);
                out.summary = gen_kind + " graph: " + std::to_string(g.vertex_count()) +
                              " vertices, " + std::to_string(g.edge_count()) + " edges";
            }
        } else if (*product) {
            auto [g, lab] = hadwiger::cartesian_product(load_graph(pr_g, edge_list),
                                                        load_graph(pr_h, edge_list));
            graph_payload(g);
            out.payload["factor_sizes"] = lab.factor_sizes;
            out.summary = "product: " + std::to_string(g.vertex_count()) + " vertices";
        } else if (*power) {
            auto [g, lab] = hadwiger::cartesian_power(load_graph(pw_g, edge_list), pw_d);
            graph_payload(g);
            out.payload["factor_sizes"] = lab.factor_sizes;
            out.summary = "power: " + std::to_string(g.vertex_count()) + " vertices";
        } else if (*factor) {
            auto res = hadwiger::prime_factorize(load_graph(fa_g, edge_list));
            out.payload = hadwiger::factorization_to_json(res);
            out.summary = std::to_string(res.factors.size()) + " prime factor(s)";
        } else if (*chi) {
            auto res = hadwiger::chromatic_number(load_graph(chi_g, edge_list));
            out.payload = json{{"chi", res.k}, {"coloring", hadwiger::coloring_to_json(res)}};
            out.summary = "chi = " + std::to_string(res.k);
        } else if (*eta) {
            auto res = hadwiger::hadwiger_exact(load_graph(eta_g, edge_list), budget);
            out.payload = json{{"eta", res.value},
                               {"exact", res.exact},
                               {"nodes", res.nodes},
                               {"witness", hadwiger::model_to_json(*res.witness)}};
            if (!res.exact) {
                out.status = "indeterminate";
                out.summary = "eta >= " + std::to_string(res.value) + " (budget exhausted)";
            } else {
                out.summary = "eta = " + std::to_string(res.value);
            }
        } else if (*minor_check) {
            auto res = hadwiger::has_minor(load_graph(mc_host, edge_list),
                                           load_graph(mc_pattern, edge_list), budget);
            out.payload = json{{"nodes", res.nodes}};
            switch (res.status) {
                case hadwiger::SearchStatus::Found:
                    out.payload["found"] = true;
                    out.payload["model"] = hadwiger::model_to_json(*res.model);
                    out.summary = "minor found";
                    break;
                case hadwiger::SearchStatus::NotFound:
                    out.payload["found"] = false;
                    out.summary = "no such minor";
                    break;
                case hadwiger::SearchStatus::Indeterminate:
                    out.status = "indeterminate";
                    out.summary = "budget exhausted";
                    break;
            }
        } else if (*verify_cmd) {
            auto model = hadwiger::model_from_json(json::parse(slurp(vm_file)));
            auto rep = hadwiger::verify_model(model);
            out.payload = hadwiger::report_to_json(rep);
            out.summary = rep.ok ? "model ok" : "model invalid";
        } else if (*plane_cmd) {
            auto plane = hadwiger::affine_plane(plane_q);
            auto check = hadwiger::verify_plane(plane);
            out.payload = hadwiger::plane_to_json(plane);
            out.payload["verified"] = check.ok;
            if (!check.ok) out.payload["violation"] = check.violation;
            out.summary = "plane of order " + std::to_string(plane_q) +
                          (check.ok ? " verified" : " FAILED");
        } else if (*construct) {
            hadwiger::MinorModel m;
            if (*kh_kl) m = hadwiger::product_clique_model(c_h, c_l, do_verify);
            else if (*wn_sq) m = hadwiger::wn_square_clique_model(c_n, do_verify);
            else m = hadwiger::double_grid_clique_model(c_dg, do_verify);
            model_payload(m, do_verify);
            if (!do_verify) out.payload["unverified"] = true;
            out.summary = "K_" + std::to_string(m.pattern.vertex_count()) + " model, " +
                          std::to_string(m.host.vertex_count()) + "-vertex host";
        } else if (*w_minor) {
            auto m = hadwiger::extract_w_minor(load_graph(wm_g, edge_list));
            model_payload(m, true);
            out.summary = "W_" + std::to_string(m.pattern.vertex_count()) + " model";
        } else if (*conjecture) {
            hadwiger::MinorModel m;
            if (*eq_chi)
                m = hadwiger::equal_chi_clique_model(load_graph(ec_g, edge_list),
                                                     load_graph(ec_h, edge_list));
            else
                m = hadwiger::power_clique_model(load_graph(cp_f, edge_list), cp_d);
            int n = m.pattern.vertex_count();
            out.payload = json{{"verdict", "holds"},
                               {"clique_size", n},
                               {"witness", hadwiger::model_to_json(m)}};
            out.summary = "conjecture holds with a K_" + std::to_string(n) + " witness";
        } else if (*report_cmd) {
            auto rep = hadwiger::product_bound_report(load_graph(rp_g, edge_list),
                                                      load_graph(rp_h, edge_list), budget);
            out.payload = hadwiger::bound_report_to_json(rep);
            out.summary = rep.product.verdict ? ("verdict: " + *rep.product.verdict)
                                              : "no verdict";
        }
    } catch (const std::exception& e) {
        json err{{"status", "error"}, {"error", e.what()}};
        std::cout << err.dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!out.text.empty()) {
        std::cout << out.text;
    } else {
        json doc{{"status", out.status}, {"payload", out.payload}};
        std::cout << doc.dump() << "\n";
    }
    if (!quiet && !out.summary.empty()) std::cerr << out.summary << "\n";
    return exit_code_for(out.status);
}
