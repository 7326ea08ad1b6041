#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

enum class GraphFormat { Dimacs, EdgeJson };

// By extension: .json is edge-JSON, anything else DIMACS.
GraphFormat format_for_path(const std::string& path);

// DIMACS: "c" comments, one "p edge n m" header, "e u v" lines with 1-based
// ids. ParseError (with line number), HeaderMismatch.
Graph parse_dimacs(std::istream& in);
// {"n": int, "edges": [[u, v], ...]} with 0-based ids. ParseError.
Graph parse_edge_json(std::istream& in);
Graph read_graph(const std::string& path, std::optional<GraphFormat> format = std::nullopt);

void write_dimacs(std::ostream& out, const Graph& g);
void write_edge_json(std::ostream& out, const Graph& g);
void write_graph(const std::string& path, const Graph& g, std::optional<GraphFormat> format = std::nullopt);

// {"k": int, "assignment": [...], "counts": [...]}; -1 marks an uncolored vertex.
nlohmann::json coloring_to_json(const PartialColoring& f);
// ParseError when malformed or when "counts" disagrees with "assignment".
PartialColoring coloring_from_json(const nlohmann::json& j);

// {"lists": [[c, ...], ...]} or a bare array of lists.
ListAssignment lists_from_json(const nlohmann::json& j);
nlohmann::json lists_to_json(const ListAssignment& lists);

nlohmann::json read_json_file(const std::string& path);

}  // namespace equicolor
