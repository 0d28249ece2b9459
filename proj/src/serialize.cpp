#include "scm/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "scm/graph6.hpp"

namespace scm {

json witness_to_json(const MinorWitness& w) {
    json sets = json::array();
    for (const auto& bs : w.branch_sets)
        sets.push_back(bs.to_vector());
    return json{{"h", w.size()}, {"branch_sets", sets}};
}

MinorWitness witness_from_json(const json& j, int n) {
    if (!j.is_object() || !j.contains("branch_sets") || !j["branch_sets"].is_array())
        throw std::invalid_argument("witness: expected {\"h\":..., \"branch_sets\": [[...],...]}");
    MinorWitness w;
    for (const auto& arr : j["branch_sets"]) {
        VertexSet s(n);
        for (const auto& v : arr)
            s.add(v.get<int>());
        w.branch_sets.push_back(std::move(s));
    }
    if (j.contains("h") && j["h"].get<int>() != w.size())
        throw std::invalid_argument("witness: h does not match the number of branch sets");
    return w;
}

json sigma_to_json(const Antimorphism& sigma) { return json(sigma.sigma); }

Antimorphism sigma_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("sigma: expected an array");
    Antimorphism s;
    for (const auto& v : j)
        s.sigma.push_back(v.get<int>());
    return s;
}

Graph graph_from_adjacency_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph: expected {\"n\": int, \"edges\": [[u,v],...]}");
    Graph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph: each edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

Graph load_graph_file(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
        ++i;
    if (i < text.size() && text[i] == '{')
        return graph_from_adjacency_json(json::parse(text));
    // graph6: first non-empty line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            return decode_graph6(line);
    throw std::invalid_argument("load_graph_file: no graph found in " + path.string());
}

json report_to_json(const BoundReport& rep) {
    json j{{"n", rep.n}, {"lower", rep.lower}, {"upper", rep.upper}};
    if (rep.h_exact)
        j["h"] = rep.h_lo;
    else {
        j["h_lo"] = rep.h_lo;
        j["h_hi"] = rep.h_hi;
    }
    if (rep.h_complement_exact)
        j["h_complement"] = rep.h_complement_lo;
    else {
        j["h_complement_lo"] = rep.h_complement_lo;
        j["h_complement_hi"] = rep.h_complement_hi;
    }
    if (rep.chi_exact)
        j["chi"] = rep.chi_lo;
    else {
        j["chi_lo"] = rep.chi_lo;
        j["chi_hi"] = rep.chi_hi;
    }
    auto flag = [](std::optional<bool> f) { return f ? json(*f) : json(nullptr); };
    j["flags"] = json{{"lower_ok", flag(rep.lower_ok)},
                      {"upper_ok", flag(rep.upper_ok)},
                      {"stiebitz_ok", flag(rep.stiebitz_ok)},
                      {"ng_ok", flag(rep.ng_ok)},
                      {"hadwiger_conj_ok", flag(rep.hadwiger_conj_ok)}};
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace scm
