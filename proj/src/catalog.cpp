#include "scm/catalog.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "scm/bounds.hpp"
#include "scm/canonical.hpp"
#include "scm/constructions.hpp"
#include "scm/graph6.hpp"
#include "scm/serialize.hpp"

namespace scm {

namespace {

using Clock = std::chrono::steady_clock;

Graph default_x(int r, std::uint64_t seed) {
    if (r == 0)
        return Graph(0);
    return generate_sc(r, seed).graph;
}

// Lifts a parent witness through extend(): the parent's branch sets survive
// unchanged inside the X block, and the two {E,K} pairs complete the join
// structure to every X set and to each other.
MinorWitness lift_extend_witness(const Construction& ext, const MinorWitness& parent_witness) {
    const int n = ext.graph.order();
    MinorWitness w;
    for (const auto& bs : parent_witness.branch_sets)
        w.branch_sets.push_back(VertexSet::from_vertices(n, bs.to_vector()));
    w.branch_sets.push_back(
        VertexSet::of(n, {ext.blocks.e1.begin, ext.blocks.k1.begin}));
    w.branch_sets.push_back(
        VertexSet::of(n, {ext.blocks.e2.begin, ext.blocks.k2.begin}));
    return w;
}

struct Builder {
    CatalogOptions opts;
    std::map<int, std::vector<CatalogEntry>> memo;

    const std::vector<CatalogEntry>& build(int n) {
        auto it = memo.find(n);
        if (it != memo.end())
            return it->second;

        auto [lower, upper] = sc_bounds(n);
        std::vector<CatalogEntry> entries;
        for (int h = lower; h <= upper; ++h) {
            if (h == upper) {
                auto top = build_top(n, h);
                if (top)
                    entries.push_back(std::move(*top));
                continue;
            }
            entries.push_back(build_interior(n, h));
        }
        return memo.emplace(n, std::move(entries)).first->second;
    }

    std::optional<CatalogEntry> build_top(int n, int h) {
        if (auto row = table1_params(n)) {
            Graph x = default_x(row->r, opts.seed);
            Construction c = five_cycle(x, row->q);
            MinorWitness w = table1_schedule(c.graph, c.blocks, row->q, row->r);
            return finish_entry(n, h, std::move(c.graph), std::move(c.sigma), std::move(w), "table1");
        }
        if (n % 20 == 17) {
            const int s = n / 20;
            Graph x = default_x(4 * s + 4, opts.seed);
            Construction c = vertex_added(s, x);
            MinorWitness w = vertex_added_schedule(c.graph, c.blocks, s, c.blocks.small_half.min());
            return finish_entry(n, h, std::move(c.graph), std::move(c.sigma), std::move(w), "vertex-added");
        }
        // n ≡ 12 (mod 20): no five-cycle parameters reach floor(3n/5).
        if (n != 12 && !opts.attempt_large_20s12)
            return std::nullopt;
        auto found = search_sc_with_h(n, h, SearchMode::seeded, opts.seed, opts.budget);
        if (!found)
            throw std::runtime_error("theorem1_catalog: search for n=" + std::to_string(n) +
                                     ", h=" + std::to_string(h) + " exhausted its budget");
        return found;
    }

    CatalogEntry build_interior(int n, int h) {
        const auto& parents = build(n - 4);
        const CatalogEntry* parent = nullptr;
        for (const auto& e : parents)
            if (e.target_h == h - 2)
                parent = &e;
        if (!parent)
            throw std::logic_error("theorem1_catalog: missing parent entry for the extension step");

        Construction ext = extend(parent->graph, parent->sigma);
        MinorWitness w = lift_extend_witness(ext, parent->lower_witness);
        if (!check_witness(ext.graph, w))
            throw std::logic_error("theorem1_catalog: lifted extension witness failed");
        auto entry = finish_entry(n, h, std::move(ext.graph), std::move(ext.sigma), std::move(w),
                                  "extend(" + parent->id() + ")");
        if (entry)
            return std::move(*entry);
        // The extension exceeded h (would contradict the +2 growth law);
        // fall back to a direct search for an exact-h graph.
        auto found = search_sc_with_h(n, h, SearchMode::seeded, opts.seed, opts.budget);
        if (!found)
            throw std::runtime_error("theorem1_catalog: no graph with h=" + std::to_string(h) +
                                     " on n=" + std::to_string(n) + " within budget");
        return std::move(*found);
    }

    // Attaches the upper proof. Returns nullopt when h+1 turns out feasible
    // (only possible on the interior/extension route).
    std::optional<CatalogEntry> finish_entry(int n, int h, Graph g, Antimorphism sigma,
                                             MinorWitness w, std::string provenance) {
        CatalogEntry e;
        e.n = n;
        e.target_h = h;
        e.graph = std::move(g);
        e.sigma = std::move(sigma);
        e.lower_witness = std::move(w);
        e.provenance = std::move(provenance);
        if (e.lower_witness.size() != h || !check_witness(e.graph, e.lower_witness))
            throw std::logic_error("theorem1_catalog: lower witness failed for " + e.id());
        if (!verify_antimorphism(e.graph, e.sigma))
            throw std::logic_error("theorem1_catalog: certificate failed for " + e.id());

        MinorDecision d = has_clique_minor(e.graph, h + 1, opts.budget);
        const int top = sc_bounds(n).second;
        switch (d.kind) {
        case Feasibility::no:
            e.upper_proof = UpperProof::exhaustive_search;
            return e;
        case Feasibility::unknown:
            // Only the top value may fall back to the Stiebitz formula.
            e.upper_proof = h == top ? UpperProof::stiebitz_formula : UpperProof::pending;
            return e;
        case Feasibility::yes:
            if (h == top)
                throw std::logic_error("theorem1_catalog: K_{h+1} minor above floor(3n/5) on " + e.id());
            return std::nullopt;
        }
        throw std::logic_error("theorem1_catalog: unreachable");
    }
};

} // namespace

std::string CatalogEntry::id() const {
    return "n" + std::to_string(n) + "-h" + std::to_string(target_h);
}

std::string upper_proof_name(UpperProof p) {
    switch (p) {
    case UpperProof::exhaustive_search: return "exhaustive-search";
    case UpperProof::stiebitz_formula: return "stiebitz-formula";
    case UpperProof::pending: return "pending";
    }
    return "pending";
}

std::vector<CatalogEntry> theorem1_catalog(int n, const CatalogOptions& opts) {
    if (n < 4 || (n % 4 != 0 && n % 4 != 1))
        throw std::invalid_argument("theorem1_catalog: n must be >= 4 and 0 or 1 mod 4");
    if (n > opts.max_n)
        throw std::invalid_argument("theorem1_catalog: n exceeds the configured maximum");
    Builder b{opts, {}};
    return b.build(n);
}

std::optional<CatalogEntry> search_sc_with_h(int n, int h, SearchMode mode, std::uint64_t seed,
                                             const Budget& budget) {
    if (n < 1 || (n % 4 != 0 && n % 4 != 1))
        throw std::invalid_argument("search_sc_with_h: n must be 0 or 1 mod 4");
    if (h < 1 || h > n)
        throw std::invalid_argument("search_sc_with_h: h out of [1, n]");

    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(budget.seconds));
    auto remaining = [&]() {
        return std::chrono::duration<double>(deadline - Clock::now()).count();
    };
    auto certify = [&](const ScGraph& cand, std::string provenance) -> std::optional<CatalogEntry> {
        Budget per{std::min(budget.seconds, std::max(remaining(), 0.0)), budget.max_nodes};
        MinorDecision at_h = has_clique_minor(cand.graph, h, per);
        if (at_h.kind != Feasibility::yes)
            return std::nullopt;
        MinorDecision above = has_clique_minor(cand.graph, h + 1, per);
        if (above.kind != Feasibility::no)
            return std::nullopt;
        CatalogEntry e;
        e.n = n;
        e.target_h = h;
        e.graph = cand.graph;
        e.sigma = cand.sigma;
        e.lower_witness = std::move(*at_h.witness);
        e.upper_proof = UpperProof::exhaustive_search;
        e.provenance = std::move(provenance);
        return e;
    };

    if (mode == SearchMode::exhaustive) {
        for (const auto& cand : enumerate_sc(n, /*allow_large=*/n >= 12)) {
            if (remaining() <= 0)
                return std::nullopt;
            if (auto e = certify(cand, "search(exhaustive)"))
                return e;
        }
        return std::nullopt;
    }

    std::set<std::string> tried;
    for (std::uint64_t s = seed; remaining() > 0; ++s) {
        ScGraph cand = generate_sc(n, s);
        if (!tried.insert(canonical_g6(cand.graph)).second)
            continue;
        // The greedy witness is a lower bound, so it can only reject
        // candidates that provably exceed the target.
        if (greedy_clique_minor(cand.graph).size() > h)
            continue;
        if (auto e = certify(cand, "search(seed=" + std::to_string(s) + ")"))
            return e;
    }
    return std::nullopt;
}

void emit_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    json summary = json::array();
    std::ostringstream md;
    md << "| n | h | id | provenance | upper proof |\n";
    md << "|---|---|----|------------|-------------|\n";
    for (const auto& e : entries) {
        const std::string g6 = encode_graph6(e.graph);
        json cert{{"n", e.n},
                  {"h", e.target_h},
                  {"graph6", g6},
                  {"sigma", sigma_to_json(e.sigma)},
                  {"witness", witness_to_json(e.lower_witness)},
                  {"upper_proof", upper_proof_name(e.upper_proof)},
                  {"provenance", e.provenance}};
        write_text_file(dir / (e.id() + ".g6"), g6 + "\n");
        write_text_file(dir / (e.id() + ".cert.json"), cert.dump(2) + "\n");
        summary.push_back(json{{"n", e.n},
                               {"h", e.target_h},
                               {"id", e.id()},
                               {"provenance", e.provenance},
                               {"upper_proof", upper_proof_name(e.upper_proof)},
                               {"graph6", g6}});
        md << "| " << e.n << " | " << e.target_h << " | " << e.id() << " | " << e.provenance
           << " | " << upper_proof_name(e.upper_proof) << " |\n";
    }
    write_text_file(dir / "summary.json", summary.dump(2) + "\n");
    write_text_file(dir / "summary.md", md.str());
}

} // namespace scm
