#include "arrival/graph_io.hpp"

#include <json.hpp>
#include <sstream>

#include "arrival/errors.hpp"
#include "json_util.hpp"

namespace arrival {

using nlohmann::ordered_json;

SwitchGraph parse_graph(std::string_view text, ValidationOptions opts) {
    const ordered_json doc = detail::parse_json_document(text, "graph");
    detail::require_fields(doc, "graph", {"n", "origin", "dest", "even", "odd"},
                           {"labels"});

    std::uint64_t n;
    try {
        n = detail::get_uint(doc, "n");
    } catch (const ParseError& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
    if (n == 0) {
        throw ParseError("graph: /n: vertex count must be positive");
    }
    std::vector<Vertex> even, odd;
    Vertex origin, dest;
    try {
        even = detail::get_vertex_array(doc, "even", n);
        odd = detail::get_vertex_array(doc, "odd", n);
        origin = detail::get_vertex(doc, "origin");
        dest = detail::get_vertex(doc, "dest");
    } catch (const ParseError& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const auto& arr = doc["labels"];
        if (!arr.is_array() || arr.size() != n) {
            throw ParseError("graph: /labels: expected an array of " + std::to_string(n) +
                             " strings");
        }
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string()) {
                throw ParseError("graph: /labels/" + std::to_string(i) + ": expected a string");
            }
            labels.push_back(arr[i].get<std::string>());
        }
    }

    SwitchGraph g(std::move(even), std::move(odd), origin, dest, std::move(labels));
    auto violations = validate(g, opts);
    if (!violations.empty()) {
        throw ParseError("graph: " + violations.front());
    }
    return g;
}

std::string serialize_graph(const SwitchGraph& g) {
    ordered_json doc;
    doc["n"] = g.size();
    doc["origin"] = g.origin();
    doc["dest"] = g.dest();
    doc["even"] = g.even();
    doc["odd"] = g.odd();
    if (!g.labels().empty()) {
        doc["labels"] = g.labels();
    }
    return doc.dump();
}

std::string to_dot(const SwitchGraph& g) {
    std::ostringstream os;
    os << "digraph switch_graph {\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        os << "  " << v << " [";
        if (!g.labels().empty()) {
            os << "label=" << ordered_json(g.labels()[v]).dump() << ", ";
        }
        if (v == g.origin()) {
            os << "role=\"origin\", ";
        } else if (v == g.dest()) {
            os << "role=\"dest\", ";
        }
        os << "shape=circle];\n";
    }
    for (const EdgeSlot& s : g.slots()) {
        os << "  " << s.tail << " -> " << g.head(s) << " [parity=\"" << to_string(s.parity)
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace arrival
