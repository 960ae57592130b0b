#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "spix/graph.hpp"

namespace spix {

enum class GraphFormat { EdgeList, Gml };

std::string_view to_string(GraphFormat f) noexcept;

// ".gml" (any case) selects GML, everything else the edge list.
GraphFormat format_for_path(const std::filesystem::path& path);

// One edge per line as "u v [w]", weight defaulting to 1. A line holding a
// single token declares a node without edges. Tokens are whitespace
// separated; double quotes allow labels with spaces, and inside them a
// backslash escapes the next character. '#' starts a comment outside
// quotes. Nodes get dense ids in order of first appearance.
WeightedGraph parse_edgelist(std::string_view text);

// The GML subset graph [ node [ id .. label .. ] edge [ source .. target ..
// value .. ] ]. Unknown keys are skipped, nested lists included. Nodes get
// dense ids in file order; a missing label falls back to the GML id and a
// missing value to 1.
WeightedGraph parse_gml(std::string_view text);

// Node declarations in id order, then edges, weights at full precision.
void write_edgelist(std::ostream& os, const WeightedGraph& g);
void write_gml(std::ostream& os, const WeightedGraph& g);

// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

WeightedGraph load_graph(const std::filesystem::path& path, GraphFormat format);

// The component with the most nodes; among equally large ones, the one
// holding the lexicographically smallest label. Ids are dense again and
// labels carried over.
WeightedGraph largest_component(const WeightedGraph& g);

}  // namespace spix
