#ifndef SCM_SERIALIZE_HPP
#define SCM_SERIALIZE_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "scm/antimorphism.hpp"
#include "scm/bounds.hpp"
#include "scm/graph.hpp"
#include "scm/minors.hpp"

namespace scm {

using json = nlohmann::json;

// {"h": int, "branch_sets": [[v,...],...]}
json witness_to_json(const MinorWitness& w);
MinorWitness witness_from_json(const json& j, int n);

json sigma_to_json(const Antimorphism& sigma);
Antimorphism sigma_from_json(const json& j);

// {"n": int, "edges": [[u,v],...]}
Graph graph_from_adjacency_json(const json& j);

// graph6 bytes, or a JSON adjacency object when the content starts with '{'.
Graph load_graph_file(const std::filesystem::path& path);

json report_to_json(const BoundReport& rep);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

} // namespace scm

#endif
