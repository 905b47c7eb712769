#include "berezin/graph.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <set>

#include <json.hpp>

#include "berezin/errors.hpp"

namespace berezin {

void DirectedMultigraph::add_edge(int from, int to, MultiPoly weight) {
    edges.push_back({from, to, std::move(weight)});
}

void DirectedMultigraph::validate() const {
    if (n_vertices < 0) throw argument_error("graph: negative vertex count");
    for (const auto& e : edges) {
        if (e.from < 1 || e.from > n_vertices || e.to < 1 || e.to > n_vertices)
            throw argument_error("graph: edge endpoint out of range");
        if (e.weight.is_zero()) throw argument_error("graph: zero edge weight");
    }
}

bool DirectedMultigraph::is_acyclic() const {
    // colors: 0 unvisited, 1 on stack, 2 done
    std::vector<int> color(static_cast<size_t>(n_vertices) + 1, 0);
    std::vector<std::vector<int>> out(static_cast<size_t>(n_vertices) + 1);
    for (const auto& e : edges) out[e.from].push_back(e.to);
    std::function<bool(int)> dfs = [&](int v) {
        color[v] = 1;
        for (int u : out[v]) {
            if (color[u] == 1) return false;
            if (color[u] == 0 && !dfs(u)) return false;
        }
        color[v] = 2;
        return true;
    };
    for (int v = 1; v <= n_vertices; ++v)
        if (color[v] == 0 && !dfs(v)) return false;
    return true;
}

PolyMatrix weighted_adjacency(const DirectedMultigraph& g) {
    g.validate();
    PolyMatrix a(g.n_vertices, g.n_vertices);
    for (const auto& e : g.edges) a.at(e.from - 1, e.to - 1) += e.weight;
    return a;
}

std::vector<std::string> weight_variables(const DirectedMultigraph& g) {
    std::set<std::string> names;
    for (const auto& e : g.edges)
        for (const auto& v : e.weight.vars()) names.insert(v);
    std::vector<std::string> out(names.begin(), names.end());
    std::sort(out.begin(), out.end(), variable_less);
    return out;
}

std::string auto_weight_name(int from, int to, int multiplicity) {
    return "w_" + std::to_string(from) + "_" + std::to_string(to) + "_" +
           std::to_string(multiplicity);
}

namespace {

MultiPoly parse_weight(const nlohmann::json& w) {
    if (w.is_number_integer())
        return MultiPoly(Rational(w.get<long>()));
    if (!w.is_string())
        throw argument_error("graph JSON: weight must be a string or integer");
    const std::string s = w.get<std::string>();
    static const std::regex name(R"(^[A-Za-z_][A-Za-z0-9_]*$)");
    if (std::regex_match(s, name)) return MultiPoly::variable(s);
    return MultiPoly(parse_rational(s)); // throws argument_error on garbage
}

} // namespace

DirectedMultigraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw argument_error(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw argument_error("graph JSON: missing integer field 'n'");
    DirectedMultigraph g;
    g.n_vertices = j["n"].get<int>();
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw argument_error("graph JSON: 'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.contains("from") || !e.contains("to") || !e.contains("weight"))
                throw argument_error("graph JSON: edge needs 'from', 'to', 'weight'");
            g.add_edge(e["from"].get<int>(), e["to"].get<int>(), parse_weight(e["weight"]));
        }
    }
    g.validate();
    return g;
}

std::string graph_to_json(const DirectedMultigraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n_vertices;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) {
        nlohmann::ordered_json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["weight"] = e.weight.str();
        j["edges"].push_back(je);
    }
    return j.dump();
}

} // namespace berezin
