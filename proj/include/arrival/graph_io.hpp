#pragma once

#include <string>
#include <string_view>

#include "arrival/graph.hpp"

namespace arrival {

// JSON form: {"n":..,"origin":..,"dest":..,"even":[..],"odd":[..],"labels":[..]}
// with "labels" optional. serialize() emits keys in exactly that order with no
// whitespace, so parse(serialize(g)) == g and serialize(parse(t)) == t for
// canonical t.
//
// parse() throws ParseError naming the byte offset or field path of the first
// problem, including invariant violations from validate().
SwitchGraph parse_graph(std::string_view text, ValidationOptions opts = {});
std::string serialize_graph(const SwitchGraph& g);

// Graphviz digraph with one edge line per slot, tagged parity="even"|"odd".
std::string to_dot(const SwitchGraph& g);

}  // namespace arrival
