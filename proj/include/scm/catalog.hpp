#ifndef SCM_CATALOG_HPP
#define SCM_CATALOG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scm/antimorphism.hpp"
#include "scm/minors.hpp"

namespace scm {

enum class UpperProof { exhaustive_search, stiebitz_formula, pending };

// One row of the attainability table: a self-complementary graph on n
// vertices whose Hadwiger number is target_h, fully certified.
struct CatalogEntry {
    int n = 0;
    int target_h = 0;
    Graph graph;
    Antimorphism sigma;          // verified antimorphism
    MinorWitness lower_witness;  // checked witness of size target_h
    UpperProof upper_proof = UpperProof::pending;
    std::string provenance;      // table1 | vertex-added | extend(<id>) | search(seed=N)
    std::string id() const;      // "n<N>-h<H>"
};

struct CatalogOptions {
    std::uint64_t seed = 0;
    Budget budget;
    int max_n = 21;
    // Only n = 12 of the 20s+12 class is attempted by default; larger members
    // need budget-heavy search.
    bool attempt_large_20s12 = false;
};

// Entries for every h in [floor((n+1)/2), floor(3n/5)], built by (1) Table 1 /
// vertex-added / search for the top value, (2) the +4-vertex extension of the
// (n-4, h-2) entry for interior values. Entries whose mandatory exhaustive
// upper proof exhausts its budget come back with upper_proof == pending.
std::vector<CatalogEntry> theorem1_catalog(int n, const CatalogOptions& opts = {});

enum class SearchMode { seeded, exhaustive };

// A certified entry with Hadwiger number exactly h, found by iterating
// generate_sc (seeded) or enumerate_sc (exhaustive, n <= 13); absent when the
// budget is exhausted or (exhaustive mode) no such graph exists.
std::optional<CatalogEntry> search_sc_with_h(int n, int h, SearchMode mode,
                                             std::uint64_t seed = 0, const Budget& budget = {});

// Per-entry graph6 + certificate JSON plus summary.md / summary.json;
// byte-stable across runs for identical inputs.
void emit_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& dir);

std::string upper_proof_name(UpperProof p);

} // namespace scm

#endif
