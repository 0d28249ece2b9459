// Command-line front end: construct the self-complementary block families,
// certify graphs and witnesses, compute exact Hadwiger numbers, and drive the
// full (n, h) catalog.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "scm/bounds.hpp"
#include "scm/canonical.hpp"
#include "scm/catalog.hpp"
#include "scm/constructions.hpp"
#include "scm/graph6.hpp"
#include "scm/serialize.hpp"

namespace {

using scm::json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HF_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

json range_to_json(const scm::Range& r) { return json::array({r.begin, r.end}); }

json blocks_to_json(const scm::BlockLabeling& b) {
    json j{{"x", range_to_json(b.x)},   {"e1", range_to_json(b.e1)}, {"k1", range_to_json(b.k1)},
           {"k2", range_to_json(b.k2)}, {"e2", range_to_json(b.e2)}};
    if (b.apex) {
        j["a"] = *b.apex;
        j["small_half"] = b.small_half.to_vector();
    }
    return j;
}

void emit_construction(const scm::Construction& c, const std::string& out_prefix) {
    const std::string g6 = scm::encode_graph6(c.graph);
    json sidecar{{"blocks", blocks_to_json(c.blocks)}, {"sigma", scm::sigma_to_json(c.sigma)}};
    if (out_prefix.empty()) {
        std::cout << g6 << "\n" << sidecar.dump(2) << "\n";
    } else {
        scm::write_text_file(out_prefix + ".g6", g6 + "\n");
        scm::write_text_file(out_prefix + ".json", sidecar.dump(2) + "\n");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Self-complementary graphs and their complete minors"};
    app.require_subcommand(1);

    // verify-sc <file>
    std::string verify_file;
    auto* verify = app.add_subcommand("verify-sc", "Certify self-complementarity");
    verify->add_option("file", verify_file, "graph6 or JSON adjacency file")->required();

    // enumerate-sc --n N --out DIR
    int enum_n = 0;
    std::string enum_out;
    bool enum_large = false;
    auto* enumerate = app.add_subcommand("enumerate-sc", "All SC graphs on n vertices up to isomorphism");
    enumerate->add_option("--n", enum_n, "vertex count (1,4,5,8,9; 12,13 with --allow-large)")->required();
    enumerate->add_option("--out", enum_out, "output directory")->required();
    enumerate->add_flag("--allow-large", enum_large, "permit the minutes-long n in {12,13}");

    // construct --family ... / extend
    std::string family, x_file, cons_out;
    int cons_r = 0, cons_q = 0, cons_s = 0;
    std::uint64_t cons_seed = default_seed();
    auto* construct = app.add_subcommand("construct", "Build a block-family instance");
    construct->add_option("--family", family, "five-cycle | vertex-added")->required();
    construct->add_option("--r", cons_r, "X block size (five-cycle)");
    construct->add_option("--q", cons_q, "E/K block size (five-cycle)");
    construct->add_option("--s", cons_s, "family parameter (vertex-added)");
    construct->add_option("--x", x_file, "explicit X graph file");
    construct->add_option("--seed", cons_seed, "seed for the default X");
    construct->add_option("--out", cons_out, "output prefix (writes .g6 and .json)");

    std::string extend_in, extend_out;
    int extend_times = 1;
    auto* extend_cmd = app.add_subcommand("extend", "Apply the +4-vertex extension");
    extend_cmd->add_option("--in", extend_in, "input SC graph file")->required();
    extend_cmd->add_option("--times", extend_times, "number of applications");
    extend_cmd->add_option("--out", extend_out, "output prefix (writes .g6 and .json)");

    // hadwiger <file>
    std::string had_file;
    bool had_exact = false, had_bounds = false;
    double had_secs = 60.0;
    std::uint64_t had_nodes = 100000000ULL;
    auto* had = app.add_subcommand("hadwiger", "Hadwiger number by branch and bound");
    had->add_option("file", had_file)->required();
    had->add_flag("--exact", had_exact, "require an exact answer (default)");
    had->add_flag("--bounds", had_bounds, "accept bounds on budget exhaustion");
    had->add_option("--budget-secs", had_secs, "per-decision time budget");
    had->add_option("--budget-nodes", had_nodes, "per-decision node budget");

    // witness check <graph> <witness.json>
    auto* witness = app.add_subcommand("witness", "Witness utilities");
    std::string wit_graph, wit_json;
    auto* wit_check = witness->add_subcommand("check", "Validate a minor witness");
    wit_check->add_option("graph", wit_graph)->required();
    wit_check->add_option("witness", wit_json)->required();

    // report <file>
    std::string report_file;
    double report_secs = 60.0;
    auto* report = app.add_subcommand("report", "Bound report for an SC graph");
    report->add_option("file", report_file)->required();
    report->add_option("--budget-secs", report_secs);

    // theorem1
    int th_n = -1, th_max_n = 21;
    std::uint64_t th_seed = default_seed();
    double th_secs = 60.0;
    std::uint64_t th_nodes = 100000000ULL;
    std::string th_out;
    bool th_all_20s12 = false;
    auto* theorem1 = app.add_subcommand("theorem1", "Emit the certified (n, h) catalog");
    theorem1->add_option("--n", th_n, "single n (default: the driver range)");
    theorem1->add_option("--max-n", th_max_n, "cap for the driver range");
    theorem1->add_option("--seed", th_seed);
    theorem1->add_option("--budget-secs", th_secs, "per-decision time budget");
    theorem1->add_option("--budget-nodes", th_nodes, "per-decision node budget");
    theorem1->add_option("--out", th_out, "output directory")->required();
    theorem1->add_flag("--all-20s12", th_all_20s12, "attempt n ≡ 12 (mod 20) beyond n = 12");

    // search
    int se_n = 0, se_h = 0;
    bool se_exhaustive = false;
    std::uint64_t se_seed = default_seed();
    double se_secs = 60.0;
    std::string se_out;
    auto* search = app.add_subcommand("search", "Find an SC graph with a given Hadwiger number");
    search->add_option("--n", se_n)->required();
    search->add_option("--target-h", se_h)->required();
    search->add_flag("--exhaustive", se_exhaustive, "iterate the full catalog instead of seeds");
    search->add_option("--seed", se_seed);
    search->add_option("--budget-secs", se_secs);
    search->add_option("--out", se_out, "output prefix (writes .g6 and .cert.json)");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        scm::Graph g = scm::load_graph_file(verify_file);
        auto sigma = scm::find_antimorphism(g);
        if (!sigma)
            return 1;
        std::cout << json{{"sigma", scm::sigma_to_json(*sigma)}}.dump() << "\n";
        return 0;
    }

    if (enumerate->parsed()) {
        auto all = scm::enumerate_sc(enum_n, enum_large);
        std::filesystem::create_directories(enum_out);
        int idx = 0;
        for (const auto& sc : all) {
            std::ostringstream base;
            base << "sc-n" << enum_n << "-" << std::setw(4) << std::setfill('0') << idx++;
            scm::write_text_file(std::filesystem::path(enum_out) / (base.str() + ".g6"),
                                 scm::encode_graph6(sc.graph) + "\n");
            json cert{{"graph6", scm::encode_graph6(sc.graph)}, {"sigma", scm::sigma_to_json(sc.sigma)}};
            scm::write_text_file(std::filesystem::path(enum_out) / (base.str() + ".cert.json"),
                                 cert.dump(2) + "\n");
        }
        std::cout << all.size() << " graphs\n";
        return 0;
    }

    if (construct->parsed()) {
        if (family == "five-cycle") {
            scm::Graph x = x_file.empty() ? (cons_r == 0 ? scm::Graph(0) : scm::generate_sc(cons_r, cons_seed).graph)
                                          : scm::load_graph_file(x_file);
            if (x.order() != cons_r)
                throw std::invalid_argument("construct: --r does not match the X graph");
            emit_construction(scm::five_cycle(x, cons_q), cons_out);
            return 0;
        }
        if (family == "vertex-added") {
            scm::Graph x = x_file.empty() ? scm::generate_sc(4 * cons_s + 4, cons_seed).graph
                                          : scm::load_graph_file(x_file);
            emit_construction(scm::vertex_added(cons_s, x), cons_out);
            return 0;
        }
        throw std::invalid_argument("construct: unknown family '" + family + "'");
    }

    if (extend_cmd->parsed()) {
        if (extend_times < 1)
            throw std::invalid_argument("extend: --times must be at least 1");
        scm::Graph g = scm::load_graph_file(extend_in);
        scm::Construction c;
        for (int i = 0; i < extend_times; ++i) {
            c = scm::extend(g);
            g = c.graph;
        }
        emit_construction(c, extend_out);
        return 0;
    }

    if (had->parsed()) {
        if (had_exact && had_bounds)
            throw std::invalid_argument("hadwiger: --exact and --bounds are mutually exclusive");
        scm::Graph g = scm::load_graph_file(had_file);
        scm::HadwigerResult r = scm::hadwiger(g, scm::Budget{had_secs, had_nodes});
        json j;
        if (r.exact)
            j["h"] = r.lower;
        else {
            j["lo"] = r.lower;
            j["hi"] = r.upper;
        }
        if (r.witness)
            j["witness"] = scm::witness_to_json(*r.witness);
        j["nodes"] = r.stats.nodes;
        j["millis"] = r.stats.millis;
        std::cout << j.dump(2) << "\n";
        return r.exact || had_bounds ? 0 : 3;
    }

    if (wit_check->parsed()) {
        scm::Graph g = scm::load_graph_file(wit_graph);
        json j = json::parse(scm::read_text_file(wit_json));
        scm::MinorWitness w = scm::witness_from_json(j, g.order());
        bool ok = scm::check_witness(g, w);
        std::cout << (ok ? "valid" : "invalid") << " (h=" << w.size() << ")\n";
        return ok ? 0 : 1;
    }

    if (report->parsed()) {
        scm::Graph g = scm::load_graph_file(report_file);
        scm::BoundReport rep = scm::conjecture_report(g, scm::Budget{report_secs, 100000000ULL});
        std::cout << scm::report_to_json(rep).dump(2) << "\n";
        return 0;
    }

    if (theorem1->parsed()) {
        scm::CatalogOptions opts;
        opts.seed = th_seed;
        opts.budget = scm::Budget{th_secs, th_nodes};
        opts.max_n = th_max_n;
        opts.attempt_large_20s12 = th_all_20s12;
        std::vector<int> targets;
        if (th_n >= 0) {
            targets.push_back(th_n);
        } else {
            for (int n : {4, 5, 8, 9, 12, 13, 16, 17, 20, 21})
                if (n <= th_max_n)
                    targets.push_back(n);
        }
        std::vector<scm::CatalogEntry> all;
        bool complete = true;
        for (int n : targets) {
            auto entries = scm::theorem1_catalog(n, opts);
            auto [lo, hi] = scm::sc_bounds(n);
            int expected = hi - lo + 1;
            if (static_cast<int>(entries.size()) != expected)
                complete = false;
            for (auto& e : entries) {
                if (e.upper_proof == scm::UpperProof::pending)
                    complete = false;
                all.push_back(std::move(e));
            }
        }
        scm::emit_catalog(all, th_out);
        std::cout << all.size() << " entries -> " << th_out << (complete ? "" : " (incomplete)")
                  << "\n";
        return complete ? 0 : 2;
    }

    if (search->parsed()) {
        auto entry = scm::search_sc_with_h(se_n, se_h,
                                           se_exhaustive ? scm::SearchMode::exhaustive
                                                         : scm::SearchMode::seeded,
                                           se_seed, scm::Budget{se_secs, 100000000ULL});
        if (!entry) {
            std::cout << "absent\n";
            return 1;
        }
        json cert{{"n", entry->n},
                  {"h", entry->target_h},
                  {"graph6", scm::encode_graph6(entry->graph)},
                  {"sigma", scm::sigma_to_json(entry->sigma)},
                  {"witness", scm::witness_to_json(entry->lower_witness)},
                  {"upper_proof", scm::upper_proof_name(entry->upper_proof)},
                  {"provenance", entry->provenance}};
        if (se_out.empty()) {
            std::cout << cert.dump(2) << "\n";
        } else {
            scm::write_text_file(se_out + ".g6", scm::encode_graph6(entry->graph) + "\n");
            scm::write_text_file(se_out + ".cert.json", cert.dump(2) + "\n");
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
