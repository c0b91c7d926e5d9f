// command line front end: validate | matchings | codes | resonance | check |
// equivalent | normalize | phenylene | generate
//
// exit codes: 0 = success / property holds, 1 = property violated,
// 2 = unreadable or malformed input

#include <functional>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "cers/coding.hpp"
#include "cers/equivalence.hpp"
#include "cers/generate.hpp"
#include "cers/graph.hpp"
#include "cers/io.hpp"
#include "cers/matching.hpp"
#include "cers/plane.hpp"
#include "cers/resonance.hpp"
#include "cers/spec.hpp"

namespace {

struct RunConfig {
    std::string spec_path;
    std::string other_path;
    std::string root;
    std::string order = "bfs";
    std::string format;
    bool no_reflection = false;
    std::uint64_t seed = 0;
    int count = 1;
    int max_faces = 8;
    int max_face_length = 10;
    bool hexagons_only = false;
};

cers::OrderStrategy strategy_of(const RunConfig& cfg) {
    if (cfg.order == "bfs") return cers::OrderStrategy::Bfs;
    if (cfg.order == "dfs") return cers::OrderStrategy::Dfs;
    throw std::invalid_argument("unknown ordering strategy " + cfg.order);
}

int coding_root(const cers::PlaneCers& g, const RunConfig& cfg) {
    if (cfg.root.empty()) return cers::default_coding_root(g);
    int f = g.face_index(cfg.root);
    if (f < 0) throw std::invalid_argument("unknown face " + cfg.root);
    return f;
}

int cmd_validate(const RunConfig& cfg) {
    cers::CersSpec spec = cers::load_spec(cfg.spec_path);
    cers::ValidationReport report = cers::validate_spec(spec);
    if (cfg.format == "json")
        std::cout << cers::validation_to_json(report);
    else
        std::cout << report.to_string() << (report.ok() ? "\n" : "");
    return report.ok() ? 0 : 1;
}

/// load + validate for commands that need a well-formed system
cers::PlaneCers realized(const RunConfig& cfg, const std::string& path, cers::CersSpec* keep = nullptr) {
    cers::CersSpec spec = cers::load_spec(path);
    cers::ValidationReport report = cers::validate_spec(spec);
    if (!report.ok()) throw cers::ParseError("invalid spec:\n" + report.to_string());
    if (keep) *keep = spec;
    (void)cfg;
    return cers::realize(spec);
}

int cmd_matchings(const RunConfig& cfg) {
    cers::PlaneCers g = realized(cfg, cfg.spec_path);
    auto matchings = cers::enumerate_perfect_matchings(g);
    if (cfg.format == "text")
        std::cout << cers::matchings_to_text(matchings);
    else
        std::cout << cers::matchings_to_json(matchings);
    return 0;
}

int cmd_codes(const RunConfig& cfg) {
    cers::PlaneCers g = realized(cfg, cfg.spec_path);
    auto ordering = cers::well_order_faces(g, coding_root(g, cfg), strategy_of(cfg));
    auto map = cers::coded_matchings(g, ordering);
    if (cfg.format == "json")
        std::cout << cers::coding_to_json(g, map);
    else
        std::cout << cers::codes_to_text(map.code_set);
    return 0;
}

int cmd_resonance(const RunConfig& cfg) {
    cers::PlaneCers g = realized(cfg, cfg.spec_path);
    auto matchings = cers::enumerate_perfect_matchings(g);
    auto r = cers::build_resonance_graph(g, matchings);
    auto ordering = cers::well_order_faces(g, coding_root(g, cfg), strategy_of(cfg));
    auto map = cers::coded_matchings(g, ordering);
    if (cfg.format == "json")
        std::cout << cers::resonance_to_json(r, g, &map);
    else if (cfg.format == "text")
        std::cout << cers::resonance_to_text(r, g, &map);
    else
        std::cout << cers::resonance_to_dot(r, g, &map);
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    cers::PlaneCers g = realized(cfg, cfg.spec_path);
    bool all_ok = true;
    auto report = [&all_ok](const std::string& name, bool ok, const std::string& note = "") {
        all_ok = all_ok && ok;
        std::cout << name << ": " << (ok ? "ok" : "VIOLATION");
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << '\n';
    };

    auto matchings = cers::enumerate_perfect_matchings(g);
    report("matchings", !matchings.empty(), std::to_string(matchings.size()) + " found");

    bool links = true;
    for (const auto& m : matchings) links = links && cers::check_link_property(g, m);
    report("link-property", links);

    auto r = cers::build_resonance_graph(g, matchings);
    cers::SimpleGraph rs = r.skeleton();
    report("resonance-connected", cers::is_connected(rs));
    report("resonance-bipartite", cers::is_bipartite(rs));
    report("median", cers::is_median_graph(rs));

    auto ordering = cers::well_order_faces(g, coding_root(g, cfg), strategy_of(cfg));
    auto map = cers::coded_matchings(g, ordering);
    report("code-count", map.code_set.codes.size() == matchings.size(),
           std::to_string(map.code_set.codes.size()) + " codes");

    {
        auto sorted = map.matchings;
        std::sort(sorted.begin(), sorted.end());
        report("code-bijection", sorted == matchings);
    }

    {
        // codes in resonance vertex order
        std::vector<std::string> codes(matchings.size());
        bool aligned = true;
        for (std::size_t i = 0; i < matchings.size(); ++i) {
            int at = map.index_of_matching(matchings[i]);
            if (at < 0) {
                aligned = false;
                break;
            }
            codes[i] = map.code_set.codes[at];
        }
        report("isometric-embedding", aligned && cers::verify_isometric_embedding(rs, codes));
    }

    report("code-graph-isomorphic",
           cers::graph_isomorphic(cers::code_graph(map.code_set), rs));

    bool benzenoid = true;
    for (int f = 0; f < g.face_count(); ++f) benzenoid = benzenoid && g.faces[f].length() == 6;
    auto ring = cers::girth(rs);
    std::string girth_note = ring ? "girth " + std::to_string(*ring) : "acyclic";
    if (benzenoid && !cers::is_path_graph(rs)) {
        bool shape = ring && *ring == 4 && cers::two_connected_after_leaf_removal(rs);
        report("hexagon-resonance-shape", shape, girth_note);
    } else {
        std::cout << "resonance-shape: " << girth_note << " (informational)\n";
    }
    std::cout << "normal: " << (cers::is_normal(g) ? "yes" : "no") << '\n';

    return all_ok ? 0 : 1;
}

int cmd_equivalent(const RunConfig& cfg) {
    cers::CersSpec a = cers::load_spec(cfg.spec_path);
    cers::CersSpec b = cers::load_spec(cfg.other_path);
    for (const auto* s : {&a, &b}) {
        cers::ValidationReport report = cers::validate_spec(*s);
        if (!report.ok()) throw cers::ParseError("invalid spec:\n" + report.to_string());
    }
    bool eq = cers::resonantly_equivalent(a, b, !cfg.no_reflection);
    if (cfg.format == "json") {
        std::cout << "{\"equivalent\": " << (eq ? "true" : "false") << "}\n";
    } else {
        std::cout << (eq ? "equivalent" : "not equivalent") << '\n';
        std::cout << cers::spec_to_json(cers::canonical_form(a), true);
        std::cout << cers::spec_to_json(cers::canonical_form(b), true);
    }
    return eq ? 0 : 1;
}

int cmd_normalize(const RunConfig& cfg) {
    cers::CersSpec spec;
    cers::PlaneCers g = realized(cfg, cfg.spec_path, &spec);
    if (!cers::is_normal(g)) {
        std::cerr << "not a normal ring system\n";
        return 1;
    }
    std::cout << cers::spec_to_json(cers::to_benzenoid(spec));
    return 0;
}

int cmd_phenylene(const RunConfig& cfg) {
    cers::CersSpec spec;
    realized(cfg, cfg.spec_path, &spec);
    for (const auto& f : spec.faces)
        if (f.length != 6) {
            std::cerr << "face " << f.id << " is not a hexagon\n";
            return 1;
        }
    std::cout << cers::spec_to_json(cers::benzenoid_to_phenylene(spec));
    return 0;
}

int cmd_generate(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.count; ++i) {
        cers::CersSpec spec =
            cers::random_spec(rng, cfg.max_faces, cfg.max_face_length, cfg.hexagons_only);
        std::cout << cers::spec_to_json(spec);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"catacondensed even ring systems: matchings, codes, resonance graphs"};
    app.require_subcommand(1);

    auto add_spec_arg = [&cfg](CLI::App* cmd) {
        cmd->add_option("spec", cfg.spec_path, "spec JSON file")->required();
    };
    auto add_coding_opts = [&cfg](CLI::App* cmd) {
        cmd->add_option("--root", cfg.root, "coding root face (terminal)");
        cmd->add_option("--order", cfg.order, "face ordering strategy")
            ->check(CLI::IsMember({"bfs", "dfs"}));
    };

    auto* validate = app.add_subcommand("validate", "check the structural rules");
    add_spec_arg(validate);
    validate->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* matchings = app.add_subcommand("matchings", "enumerate perfect matchings");
    add_spec_arg(matchings);
    matchings->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* codes = app.add_subcommand("codes", "binary codes of the perfect matchings");
    add_spec_arg(codes);
    add_coding_opts(codes);
    codes->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* resonance = app.add_subcommand("resonance", "export the resonance graph");
    add_spec_arg(resonance);
    add_coding_opts(resonance);
    resonance->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json", "text"}));

    auto* check = app.add_subcommand("check", "run the structural verifiers");
    add_spec_arg(check);
    add_coding_opts(check);

    auto* equivalent = app.add_subcommand("equivalent", "decide resonant equivalence");
    equivalent->add_option("spec", cfg.spec_path, "first spec")->required();
    equivalent->add_option("other", cfg.other_path, "second spec")->required();
    equivalent->add_flag("--no-reflection", cfg.no_reflection,
                         "treat mirror images as distinct");
    equivalent->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* normalize = app.add_subcommand("normalize", "equivalent all-hexagon system");
    add_spec_arg(normalize);

    auto* phenylene = app.add_subcommand("phenylene", "splice squares between hexagons");
    add_spec_arg(phenylene);

    auto* generate = app.add_subcommand("generate", "random valid specs");
    generate->add_option("--seed", cfg.seed, "rng seed");
    generate->add_option("--count", cfg.count, "how many specs");
    generate->add_option("--max-faces", cfg.max_faces);
    generate->add_option("--max-face-length", cfg.max_face_length);
    generate->add_flag("--hexagons", cfg.hexagons_only, "hexagon faces only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(cfg);
        if (*matchings) return cmd_matchings(cfg);
        if (*codes) return cmd_codes(cfg);
        if (*resonance) return cmd_resonance(cfg);
        if (*check) return cmd_check(cfg);
        if (*equivalent) return cmd_equivalent(cfg);
        if (*normalize) return cmd_normalize(cfg);
        if (*phenylene) return cmd_phenylene(cfg);
        if (*generate) return cmd_generate(cfg);
    } catch (const cers::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
