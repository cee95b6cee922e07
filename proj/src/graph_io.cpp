#include "cycgr/graph_io.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cycgr {

namespace {

struct EdgeStyle {
  const char* color;
  const char* style;
};

// Indexed by edge color modulo 8. Entry 0 is never drawn.
constexpr std::array<EdgeStyle, 8> kPalette{{
    {"gray", "invis"},
    {"black", "solid"},
    {"red", "dashed"},
    {"blue", "bold"},
    {"darkgreen", "dotted"},
    {"orange", "solid"},
    {"purple", "dashed"},
    {"brown", "bold"},
}};

}  // namespace

nlohmann::json graph_to_json(const ColoredGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["k"] = g.k();
  j["colors"] = std::vector<Color>(g.colors().begin(), g.colors().end());
  return j;
}

ColoredGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("colors")) {
    throw std::invalid_argument("graph JSON needs fields n, k and colors");
  }
  const auto n = j.at("n").get<std::int64_t>();
  const auto k = j.at("k").get<std::int64_t>();
  if (n < 0) throw std::invalid_argument("graph JSON: n must be non-negative");
  if (k < 1 || k > 65535) throw std::invalid_argument("graph JSON: k out of range");
  std::vector<Color> colors;
  for (const auto& c : j.at("colors")) {
    const auto value = c.get<std::int64_t>();
    if (value < 0 || value >= k) throw std::invalid_argument("graph JSON: color out of range");
    colors.push_back(static_cast<Color>(value));
  }
  return ColoredGraph(static_cast<std::size_t>(n), static_cast<Color>(k), std::move(colors));
}

std::string serialize_graph(const ColoredGraph& g) { return graph_to_json(g).dump() + "\n"; }

ColoredGraph parse_graph(const std::string& text) {
  return graph_from_json(nlohmann::json::parse(text));
}

void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << serialize_graph(g);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string to_dot(const ColoredGraph& g, const std::optional<OrbitLayout>& layout) {
  if (layout && layout->degree() != g.n()) {
    throw std::invalid_argument("layout degree does not match graph");
  }
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v << " [label=\"" << (layout ? layout->label(v) : std::to_string(v)) << "\"];\n";
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const Color c = g.color(u, v);
      if (c == 0) continue;
      const auto& style = kPalette[c % kPalette.size()];
      os << "  " << u << " -- " << v << " [color=\"" << style.color << "\", style=\"" << style.style
         << "\", label=\"" << c << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cycgr
