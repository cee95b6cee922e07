#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cycgr/colored_graph.hpp"
#include "cycgr/cyclic_spec.hpp"

namespace cycgr {

/// {"n": int, "k": int, "colors": [pair colors in pair_index order]}
nlohmann::json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const nlohmann::json& j);

/// Compact JSON text followed by a newline; byte-stable for equal graphs.
std::string serialize_graph(const ColoredGraph& g);
ColoredGraph parse_graph(const std::string& text);

void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g);
ColoredGraph read_graph_file(const std::filesystem::path& path);

/// Undirected DOT graph with one edge per pair of non-zero color. Vertices
/// are labeled "v^j_i" when a layout is given, by index otherwise.
std::string to_dot(const ColoredGraph& g, const std::optional<OrbitLayout>& layout = std::nullopt);

}  // namespace cycgr
