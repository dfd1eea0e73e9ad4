// Command-line front end: inspect plane graphs, check class membership,
// enumerate cycles, test good cycles, run the coloring solvers and the
// discharging audits, apply surgeries, and generate random instances.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dpc/coloring.hpp"
#include "dpc/cycles.hpp"
#include "dpc/discharging.hpp"
#include "dpc/fixtures.hpp"
#include "dpc/generator.hpp"
#include "dpc/labelling.hpp"
#include "dpc/plane_graph.hpp"
#include "dpc/structure.hpp"
#include "dpc/surgery.hpp"

using namespace dpc;

namespace {

struct Report {
    std::vector<std::pair<std::string, std::string>> fields;
    bool json = false;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }

    void print() const {
        if (json) {
            nlohmann::ordered_json j;
            for (auto& [k, v] : fields) j[k] = v;
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
        }
    }
};

std::string fnv1a_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "-";
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string join_ids(const std::vector<int>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(vs[i] + 1);
    }
    return s;
}

Coloring load_precolor(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    Coloring c;
    c.assignment.assign(n, 0);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int v, col;
        if (!(ls >> v)) continue;
        if (!(ls >> col)) fail(ErrorKind::ParseError, "precolor line needs 'v c'");
        if (v < 1 || v > n) fail(ErrorKind::UnknownVertex, "precolor vertex " + std::to_string(v));
        c.assignment[v - 1] = col;
    }
    return c;
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item) - 1);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph DP-coloring and discharging toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit reports as JSON");

    std::string graph_path, sig_path, precolor_path, plan_path, out_path, cycle_spec;
    int k = 3, jobs = 1, max_len = 13;
    bool verify = false;
    GenConfig gen_cfg;
    std::vector<int> forbid;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph_path, "input .pg file")->required();
    };

    auto* c_info = app.add_subcommand("info", "graph summary");
    add_graph(c_info);
    auto* c_member = app.add_subcommand("member", "class membership (no 4-, 7-, 9-cycles)");
    add_graph(c_member);
    auto* c_cycles = app.add_subcommand("cycles", "enumerate short cycles");
    add_graph(c_cycles);
    c_cycles->add_option("--max", max_len, "maximum cycle length")->default_val(13);
    auto* c_good = app.add_subcommand("goodcycle", "test a cycle for claws and biclaws");
    add_graph(c_good);
    c_good->add_option("--cycle", cycle_spec, "comma-separated vertex list")->required();
    auto* c_report = app.add_subcommand("report", "full structural report");
    add_graph(c_report);
    c_report->add_option("--sig", sig_path, "signature .sig file");
    auto* c_solve = app.add_subcommand("solve", "search a coloring of one labelled graph");
    add_graph(c_solve);
    c_solve->add_option("--sig", sig_path, "signature file");
    c_solve->add_option("--k", k, "number of colors")->default_val(3);
    c_solve->add_option("--precolor", precolor_path, "precoloring file (lines 'v c')");
    auto* c_dp = app.add_subcommand("dpcheck", "sweep all signature classes");
    add_graph(c_dp);
    c_dp->add_option("--k", k, "number of colors")->default_val(3);
    c_dp->add_option("--jobs", jobs, "parallel workers")->default_val(1);
    c_dp->add_flag("--verify", verify, "require class membership first");
    auto* c_extend = app.add_subcommand("extend", "extend a boundary precoloring");
    add_graph(c_extend);
    c_extend->add_option("--precolor", precolor_path, "boundary coloring file")->required();
    c_extend->add_option("--sig", sig_path, "signature file");
    auto* c_disch = app.add_subcommand("discharge", "run the discharging rules, print the ledger");
    add_graph(c_disch);
    c_disch->add_option("--sig", sig_path, "signature file");
    auto* c_audit = app.add_subcommand("audit", "claim audits and the meta-audit");
    add_graph(c_audit);
    c_audit->add_option("--sig", sig_path, "signature file");
    c_audit->add_option("--precolor", precolor_path, "boundary coloring file");
    auto* c_surgery = app.add_subcommand("surgery", "apply a surgery plan and check safety");
    add_graph(c_surgery);
    c_surgery->add_option("--plan", plan_path, "plan file")->required();
    auto* c_gen = app.add_subcommand("gen", "generate a random member of the class");
    c_gen->add_option("--n", gen_cfg.target_vertices, "target vertex count")->default_val(12);
    c_gen->add_option("--seed", gen_cfg.seed, "random seed")->default_val(1);
    c_gen->add_option("--max-attempts", gen_cfg.max_attempts)->default_val(100000);
    c_gen->add_option("--max-dim", gen_cfg.max_cyclomatic, "cyclomatic cap")->default_val(-1);
    c_gen->add_option("--forbid", forbid, "forbidden cycle lengths (default 4 7 9)");
    c_gen->add_option("-o,--out", out_path, "write the .pg here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.json = json;
    int exit_code = 0;

    try {
        auto finish = [&]() {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            rep.add("time_ms", static_cast<std::uint64_t>(ms.count()));
            rep.print();
        };
        auto load = [&]() {
            rep.add("input", graph_path);
            rep.add("digest", fnv1a_digest(graph_path));
            return std::make_shared<const PlaneGraph>(load_pg(graph_path));
        };
        auto labelled = [&](std::shared_ptr<const PlaneGraph> g, int arity) {
            return sig_path.empty() ? all_identity(g, arity) : load_sig(sig_path, g, arity);
        };

        if (*c_info) {
            rep.add("command", "info");
            auto g = load();
            rep.add("vertices", g->num_vertices());
            rep.add("edges", g->num_edges());
            rep.add("faces", g->num_faces());
            std::string sizes;
            for (int f = 0; f < g->num_faces(); ++f) {
                if (f) sizes += " ";
                sizes += std::to_string(g->face_size(f));
                if (f == g->outer_face()) sizes += "*";
            }
            rep.add("face_sizes", sizes);
            rep.add("outer_face_size", g->face_size(g->outer_face()));
        } else if (*c_member) {
            rep.add("command", "member");
            auto g = load();
            GraphClassReport r = classify(*g);
            rep.add("is_simple", r.is_simple);
            rep.add("is_connected", r.is_connected);
            rep.add("is_two_connected", r.is_two_connected);
            rep.add("forbidden_cycles", static_cast<std::uint64_t>(r.forbidden_cycles_found.size()));
            for (size_t i = 0; i < r.forbidden_cycles_found.size() && i < 10; ++i)
                rep.add("forbidden_cycle_" + std::to_string(i), join_ids(r.forbidden_cycles_found[i]));
            rep.add("in_class_g", r.in_class_g);
            exit_code = r.in_class_g ? 0 : 1;
        } else if (*c_cycles) {
            rep.add("command", "cycles");
            auto g = load();
            auto cycles = enumerate_cycles(*g, max_len);
            rep.add("max", max_len);
            rep.add("count", static_cast<std::uint64_t>(cycles.size()));
            for (size_t i = 0; i < cycles.size(); ++i)
                rep.add("cycle_" + std::to_string(i), join_ids(cycles[i].vertices()));
        } else if (*c_good) {
            rep.add("command", "goodcycle");
            auto g = load();
            Cycle c(*g, parse_id_list(cycle_spec));
            bool good = is_good_cycle(*g, c);
            rep.add("cycle", join_ids(c.vertices()));
            rep.add("good", good);
            if (!good) {
                auto shapes = classify_bad_cycle(*g, c);
                for (size_t i = 0; i < shapes.size(); ++i) {
                    std::string s;
                    for (size_t j = 0; j < shapes[i].size(); ++j) s += (j ? "," : "") + std::to_string(shapes[i][j]);
                    rep.add("shape_" + std::to_string(i), s);
                }
            }
            exit_code = good ? 0 : 1;
        } else if (*c_report) {
            rep.add("command", "report");
            auto g = load();
            LabelledGraph lg = labelled(g, 3);
            GraphClassReport r = classify(*g);
            rep.add("in_class_g", r.in_class_g);
            rep.add("two_connected", r.is_two_connected);
            auto specials = special_subgraphs(*g);
            rep.add("special_subgraphs", static_cast<std::uint64_t>(specials.size()));
            rep.add("light_faces", static_cast<std::uint64_t>(light_faces(*g).size()));
            rep.add("bad_3_faces", static_cast<std::uint64_t>(bad_3_faces(lg).size()));
            rep.add("strings", static_cast<std::uint64_t>(all_strings(*g).size()));
            rep.add("string_lemma_ok", check_string_lemma(*g).ok);
            try {
                LemmaPredicates p = lemma_predicates(lg);
                for (auto& [name, ok] : p.named()) rep.add("predicate_" + name, ok);
            } catch (const Error& e) {
                rep.add("predicates", std::string("unavailable (") + e.what() + ")");
            }
        } else if (*c_solve) {
            rep.add("command", "solve");
            auto g = load();
            LabelledGraph lg = labelled(g, k);
            Coloring pre;
            if (!precolor_path.empty()) pre = load_precolor(precolor_path, g->num_vertices());
            SolveResult r = solve(lg, k, pre);
            rep.add("status", std::string(r.found ? "found" : "exhausted"));
            rep.add("nodes", r.nodes);
            if (r.found) {
                std::string colors;
                for (int v = 0; v < g->num_vertices(); ++v)
                    colors += (v ? " " : "") + std::to_string(r.witness.assignment[v]);
                rep.add("coloring", colors);
            }
            exit_code = r.found ? 0 : 1;
        } else if (*c_dp) {
            rep.add("command", "dpcheck");
            auto g = load();
            rep.add("k", k);
            rep.add("jobs", jobs);
            if (verify) {
                TheoremReport tr = verify_theorem(g, jobs);
                rep.add("classes", tr.classes);
                rep.add("dp_colorable", tr.dp3_colorable);
                if (tr.failing_class) rep.add("failing_class", *tr.failing_class);
                if (tr.witness) rep.add("witness_sig", to_sig(*tr.witness));
                exit_code = tr.dp3_colorable ? 0 : 1;
            } else {
                SweepResult r = is_dp_k_colorable(g, k, jobs);
                rep.add("classes", r.classes);
                rep.add("classes_checked", r.classes_checked);
                rep.add("dp_colorable", r.all_colorable);
                if (r.failing_class) rep.add("failing_class", *r.failing_class);
                if (r.witness) rep.add("witness_sig", to_sig(*r.witness));
                exit_code = r.all_colorable ? 0 : 1;
            }
        } else if (*c_extend) {
            rep.add("command", "extend");
            auto g = load();
            LabelledGraph lg = labelled(g, 3);
            Coloring phi0 = load_precolor(precolor_path, g->num_vertices());
            SolveResult r = extend_boundary(lg, phi0);
            rep.add("status", std::string(r.found ? "found" : "exhausted"));
            rep.add("nodes", r.nodes);
            if (!r.found) rep.add("anomaly", std::string("extension is guaranteed under the preconditions"));
            exit_code = r.found ? 0 : 1;
        } else if (*c_disch) {
            rep.add("command", "discharge");
            auto g = load();
            LabelledGraph lg = labelled(g, 3);
            ChargeLedger led = discharge(lg);
            rep.print();
            std::cout << ledger_text(*g, led);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            std::cout << "time_ms: " << ms.count() << "\n";
            return 0;
        } else if (*c_audit) {
            rep.add("command", "audit");
            auto g = load();
            LabelledGraph lg = labelled(g, 3);
            std::optional<Coloring> phi0;
            if (!precolor_path.empty()) phi0 = load_precolor(precolor_path, g->num_vertices());
            MetaReport mr = meta_audit(lg, phi0);
            for (auto& [name, ok] : mr.predicates.named()) rep.add("predicate_" + name, ok);
            rep.add("failed_predicates", static_cast<std::uint64_t>(mr.failed_predicates.size()));
            rep.add("contradiction_witnessed", mr.contradiction_witnessed);
            rep.add("anomaly", mr.anomaly);
            rep.add("claim_checks", static_cast<std::uint64_t>(mr.claims.checks.size()));
            auto viol = mr.claims.violations();
            rep.add("claim_violations", static_cast<std::uint64_t>(viol.size()));
            for (size_t i = 0; i < viol.size() && i < 20; ++i)
                rep.add("violation_" + std::to_string(i), viol[i].claim + " at " + viol[i].subject);
            exit_code = mr.contradiction_witnessed ? 0 : 1;
        } else if (*c_surgery) {
            rep.add("command", "surgery");
            auto g = load();
            LabelledGraph lg = labelled(g, 3);
            SurgeryPlan plan = load_plan(plan_path, 3);
            SafetyReport sr = check_safety(lg, plan);
            rep.add("condition_a", sr.condition_a);
            rep.add("condition_b", sr.condition_b);
            if (!sr.created_short_cycle.empty()) rep.add("short_cycle", join_ids(sr.created_short_cycle));
            rep.add("result_vertices", sr.result.lg.g().num_vertices());
            rep.add("result_in_class_g", sr.result_class.in_class_g);
            exit_code = sr.condition_a && sr.condition_b ? 0 : 1;
        } else if (*c_gen) {
            rep.add("command", "gen");
            if (!forbid.empty()) gen_cfg.forbidden_lengths = std::set<int>(forbid.begin(), forbid.end());
            PlaneGraph g = generate(gen_cfg);
            std::string text = to_pg(g);
            if (out_path.empty()) {
                std::cout << text;
                return 0;
            }
            std::ofstream out(out_path);
            out << text;
            rep.add("out", out_path);
            rep.add("vertices", g.num_vertices());
            rep.add("edges", g.num_edges());
        }
        finish();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
