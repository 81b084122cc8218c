#pragma once

// Shared helpers for the strict JSON readers. Private to the library.

#include <cstdint>
#include <initializer_list>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "arrival/errors.hpp"
#include "arrival/graph.hpp"

namespace arrival::detail {

inline nlohmann::ordered_json parse_json_document(std::string_view text, const std::string& what) {
    try {
        return nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(what + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
}

// Object check plus the exact key set: every required key present, nothing unknown.
inline void require_fields(const nlohmann::ordered_json& doc, const std::string& what,
                           std::initializer_list<std::string_view> required,
                           std::initializer_list<std::string_view> optional = {}) {
    if (!doc.is_object()) {
        throw ParseError(what + ": expected a JSON object at top level");
    }
    for (auto key : required) {
        if (!doc.contains(std::string(key))) {
            throw ParseError(what + ": missing required field \"" + std::string(key) + "\"");
        }
    }
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (auto k : required) known = known || key == k;
        for (auto k : optional) known = known || key == k;
        if (!known) {
            throw ParseError(what + ": unknown field \"" + key + "\"");
        }
    }
}

inline std::uint64_t as_uint(const nlohmann::ordered_json& v, const std::string& path) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw ParseError(path + ": expected a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

inline std::uint64_t get_uint(const nlohmann::ordered_json& doc, const std::string& key) {
    return as_uint(doc.at(key), "/" + key);
}

inline Vertex get_vertex(const nlohmann::ordered_json& doc, const std::string& key) {
    const auto v = get_uint(doc, key);
    if (v > UINT32_MAX) throw ParseError("/" + key + ": vertex id too large");
    return static_cast<Vertex>(v);
}

inline std::vector<Vertex> get_vertex_array(const nlohmann::ordered_json& doc,
                                            const std::string& key, std::uint64_t n) {
    const auto& arr = doc.at(key);
    if (!arr.is_array() || arr.size() != n) {
        throw ParseError("/" + key + ": expected an array of " + std::to_string(n) +
                         " vertex ids");
    }
    std::vector<Vertex> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto v = as_uint(arr[i], "/" + key + "/" + std::to_string(i));
        if (v > UINT32_MAX) {
            throw ParseError("/" + key + "/" + std::to_string(i) + ": vertex id too large");
        }
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}  // namespace arrival::detail
