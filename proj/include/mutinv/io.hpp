#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mutinv/dio.hpp"
#include "mutinv/exmat.hpp"
#include "mutinv/fixtures.hpp"
#include "mutinv/seed.hpp"

namespace mutinv {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matrix file format: a JSON document with fields
//   n       - index count
//   mutable - list of 1-based mutable indices
//   rows    - n lists of n integers (JSON integers or decimal strings)

inline Int json_to_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw parse_error("field '" + where + "': not a decimal integer");
        }
    }
    throw parse_error("field '" + where + "': expected an integer or decimal string");
}

inline ExchangeMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object()) throw parse_error("matrix document: expected a JSON object");
    for (const char* field : {"n", "rows"}) {
        if (!doc.contains(field))
            throw parse_error(std::string("matrix document: missing field '") + field + "'");
    }
    Int n_big = json_to_int(doc.at("n"), "n");
    if (n_big < 1 || n_big > 64) throw parse_error("field 'n': out of range");
    int n = n_big.convert_to<int>();

    const json& rows = doc.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw parse_error("field 'rows': expected " + std::to_string(n) + " rows");
    IntMatrix entries;
    for (int i = 0; i < n; ++i) {
        const json& row = rows.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw parse_error("field 'rows[" + std::to_string(i) + "]': expected " +
                              std::to_string(n) + " entries");
        std::vector<Int> r;
        for (int j = 0; j < n; ++j)
            r.push_back(json_to_int(row.at(static_cast<size_t>(j)),
                                    "rows[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        entries.push_back(std::move(r));
    }

    std::vector<bool> mut(static_cast<size_t>(n), true);
    if (doc.contains("mutable")) {
        const json& m = doc.at("mutable");
        if (!m.is_array()) throw parse_error("field 'mutable': expected a list of indices");
        mut.assign(static_cast<size_t>(n), false);
        for (const json& v : m) {
            Int idx = json_to_int(v, "mutable");
            if (idx < 1 || idx > n)
                throw parse_error("field 'mutable': index out of range 1.." + std::to_string(n));
            mut[static_cast<size_t>(idx.convert_to<int>() - 1)] = true;
        }
    }
    return ExchangeMatrix(std::move(entries), std::move(mut));
}

inline json matrix_to_json(const ExchangeMatrix& b) {
    json doc;
    doc["n"] = b.size();
    json mut = json::array();
    for (int i = 0; i < b.size(); ++i)
        if (b.is_mutable(i)) mut.push_back(i + 1);
    doc["mutable"] = std::move(mut);
    json rows = json::array();
    for (int i = 0; i < b.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < b.size(); ++j) row.push_back(to_string(b.at(i, j)));
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

// Named fixture or file path.
inline ExchangeMatrix parse_matrix_source(const std::string& source) {
    for (const std::string& name : fixture_names()) {
        if (source == name) return fixture_matrix(source);
    }
    std::ifstream in(source);
    if (!in) throw parse_error("cannot open matrix source '" + source + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error("matrix source '" + source + "': " + e.what());
    }
    return matrix_from_json(doc);
}

inline std::string matrix_to_text(const ExchangeMatrix& b) {
    std::ostringstream out;
    out << "n " << b.size() << "\nmutable";
    for (int i = 0; i < b.size(); ++i)
        if (b.is_mutable(i)) out << ' ' << (i + 1);
    out << '\n';
    for (int i = 0; i < b.size(); ++i) {
        out << "row";
        for (int j = 0; j < b.size(); ++j) out << ' ' << b.at(i, j);
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Solution tuples and trees.

inline std::string tuple_to_string(std::span<const Int> values) {
    std::string out = "(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += to_string(values[i]);
    }
    return out + ")";
}

inline std::string tuple_to_string(const SolutionTuple& t) { return tuple_to_string(t.values); }

// Parse "a,b,c" or "(a,b,c)" into positive integers.
inline std::vector<Int> parse_tuple_values(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(') s.erase(s.begin());
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<Int> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t first = item.find_first_not_of(" \t");
        size_t last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw parse_error("empty tuple entry");
        item = item.substr(first, last - first + 1);
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw parse_error("tuple entry '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw parse_error("empty tuple");
    return out;
}

// JSON tree document: nodes as decimal-string lists in BFS order, edges as
// (parent, child, label) with 1-based labels.
inline json tree_to_json(const SolutionTree& tree) {
    json doc;
    doc["system"] = system_name(tree.sys);
    doc["depth"] = tree.depth;
    doc["bound"] = tree.bound ? json(to_string(*tree.bound)) : json(nullptr);
    json nodes = json::array();
    for (const auto& node : tree.nodes) {
        json tup = json::array();
        for (const Int& x : node.values) tup.push_back(to_string(x));
        nodes.push_back(std::move(tup));
    }
    doc["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& e : tree.edges) {
        json edge;
        edge["parent"] = e.parent;
        edge["child"] = e.child;
        edge["label"] = e.label + 1;
        edges.push_back(std::move(edge));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

inline SolutionTree tree_from_json(const json& doc) {
    SolutionTree tree;
    if (!doc.is_object() || !doc.contains("system") || !doc.contains("nodes") ||
        !doc.contains("edges"))
        throw parse_error("tree document: missing field");
    tree.sys = parse_system(doc.at("system").get<std::string>());
    tree.depth = doc.contains("depth") ? doc.at("depth").get<int>() : 0;
    if (doc.contains("bound") && !doc.at("bound").is_null())
        tree.bound = json_to_int(doc.at("bound"), "bound");
    for (const json& tup : doc.at("nodes")) {
        std::vector<Int> values;
        for (const json& x : tup) values.push_back(json_to_int(x, "nodes"));
        tree.nodes.emplace_back(tree.sys, std::move(values));
    }
    for (const json& e : doc.at("edges")) {
        TreeEdge edge;
        edge.parent = e.at("parent").get<size_t>();
        edge.child = e.at("child").get<size_t>();
        edge.label = e.at("label").get<int>() - 1;
        if (edge.parent >= tree.nodes.size() || edge.child >= tree.nodes.size())
            throw parse_error("tree document: edge endpoint out of range");
        tree.edges.push_back(edge);
    }
    return tree;
}

// DOT rendering. Involutive systems get an undirected graph with one label
// per exchange; rank4 gets a digraph with each neighbor pair connected both
// ways, the back arrow labeled by the inverse map.
inline std::string tree_to_dot(const SolutionTree& tree) {
    bool directed = tree.sys == System::rank4;
    std::ostringstream out;
    out << (directed ? "digraph" : "graph") << " solutions {\n";
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << tuple_to_string(tree.nodes[i]) << "\"];\n";
    }
    for (const auto& e : tree.edges) {
        if (directed) {
            out << "  n" << e.parent << " -> n" << e.child << " [label=\"" << (e.label + 1)
                << "\"];\n";
            out << "  n" << e.child << " -> n" << e.parent << " [label=\""
                << (inverse_map_index(tree.sys, e.label) + 1) << "\"];\n";
        } else {
            out << "  n" << e.parent << " -- n" << e.child << " [label=\"" << (e.label + 1)
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

inline std::string tree_to_text(const SolutionTree& tree) {
    std::ostringstream out;
    out << "system " << system_name(tree.sys) << "\nnodes " << tree.nodes.size() << "\n";
    for (size_t i = 0; i < tree.nodes.size(); ++i)
        out << "  [" << i << "] " << tuple_to_string(tree.nodes[i]) << "\n";
    out << "edges " << tree.edges.size() << "\n";
    for (const auto& e : tree.edges)
        out << "  " << tuple_to_string(tree.nodes[e.parent]) << " -" << (e.label + 1) << "- "
            << tuple_to_string(tree.nodes[e.child]) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Seed dump: matrix block, history word (1-based) and the rendered Laurent
// polynomial of every cluster variable.
inline json seed_to_json(const Seed& s) {
    json doc;
    doc["matrix"] = matrix_to_json(s.matrix());
    json hist = json::array();
    for (int k : s.history()) hist.push_back(k + 1);
    doc["history"] = std::move(hist);
    json vars = json::array();
    for (const auto& v : s.vars()) vars.push_back(to_string(v));
    doc["vars"] = std::move(vars);
    return doc;
}

// SearchReport as a structured document with explicit bounds and counts.
inline json search_report_to_json(const SearchReport& report) {
    json doc;
    doc["bound"] = to_string(report.bound);
    doc["used_group"] = report.used_group;
    doc["note"] = report.note;
    auto tuples = [](const std::vector<std::vector<Int>>& set) {
        json arr = json::array();
        for (const auto& v : set) arr.push_back(tuple_to_string(v));
        return arr;
    };
    auto multisets = [](const std::set<std::vector<Int>>& set) {
        json arr = json::array();
        for (const auto& v : set) arr.push_back(tuple_to_string(v));
        return arr;
    };
    doc["counts"] = {{"oracle", report.oracle_set.size()},
                     {"reachable", report.reachable_set.size()},
                     {"unreachable", report.unreachable_set.size()},
                     {"reachable_closure_total", report.reachable_total},
                     {"oracle_multisets", report.oracle_multisets.size()},
                     {"reachable_multisets", report.reachable_multisets.size()},
                     {"unreachable_multisets", report.unreachable_multisets.size()}};
    doc["oracle"] = tuples(report.oracle_set);
    doc["reachable"] = tuples(report.reachable_set);
    doc["unreachable"] = tuples(report.unreachable_set);
    doc["unreachable_multisets"] = multisets(report.unreachable_multisets);
    return doc;
}

}  // namespace mutinv
