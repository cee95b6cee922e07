#include "cycgr/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cycgr {

ColoredGraph::ColoredGraph(std::size_t n, Color k) : n_(n), k_(k), colors_(pair_count(n), 0) {
  if (k_ == 0) throw std::invalid_argument("a colored graph needs at least one color");
}

ColoredGraph::ColoredGraph(std::size_t n, Color k, std::vector<Color> colors)
    : n_(n), k_(k), colors_(std::move(colors)) {
  if (k_ == 0) throw std::invalid_argument("a colored graph needs at least one color");
  if (colors_.size() != pair_count(n_)) {
    throw std::invalid_argument("expected " + std::to_string(pair_count(n_)) +
                                " pair colors, got " + std::to_string(colors_.size()));
  }
  for (Color c : colors_) {
    if (c >= k_) throw std::invalid_argument("edge color " + std::to_string(c) + " >= k");
  }
}

std::size_t ColoredGraph::colors_used() const {
  std::vector<bool> seen(k_, false);
  for (Color c : colors_) seen[c] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

std::size_t ColoredGraph::nonzero_edges() const {
  return static_cast<std::size_t>(
      std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != 0; }));
}

GraphBuilder::GraphBuilder(std::size_t n, Color k) : n_(n), k_(k), colors_(pair_count(n), 0) {
  if (k_ == 0) throw std::invalid_argument("a colored graph needs at least one color");
}

GraphBuilder& GraphBuilder::set(Vertex u, Vertex v, Color c) {
  if (u == v) throw std::invalid_argument("cannot color a loop");
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (c >= k_) throw std::invalid_argument("color out of range");
  colors_[pair_index(n_, u, v)] = c;
  return *this;
}

Color GraphBuilder::get(Vertex u, Vertex v) const { return colors_.at(pair_index(n_, u, v)); }

ColoredGraph GraphBuilder::build() const { return ColoredGraph(n_, k_, colors_); }

Color edge_color(const ColoredGraph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("edge_color of a vertex with itself");
  if (u >= g.n() || v >= g.n()) throw std::invalid_argument("vertex out of range");
  return g.color(u, v);
}

std::size_t i_degree(const ColoredGraph& g, Vertex v, Color i) {
  if (v >= g.n()) throw std::invalid_argument("vertex out of range");
  if (i >= g.k()) throw std::invalid_argument("color out of range");
  std::size_t d = 0;
  for (Vertex w = 0; w < g.n(); ++w) {
    if (w != v && g.color(v, w) == i) ++d;
  }
  return d;
}

bool x_connected(const ColoredGraph& g, std::span<const Color> allowed) {
  if (g.n() <= 1) return true;
  std::vector<bool> ok(g.k(), false);
  for (Color c : allowed) {
    if (c < g.k()) ok[c] = true;
  }
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < g.n(); ++w) {
      if (!seen[w] && w != v && ok[g.color(v, w)]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

ColoredGraph spanned_subgraph(const ColoredGraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> w(subset.begin(), subset.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (w.size() < 2) throw std::invalid_argument("spanned subgraph needs at least two vertices");
  if (w.back() >= g.n()) throw std::invalid_argument("vertex out of range");
  GraphBuilder b(w.size(), g.k());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      b.set(static_cast<Vertex>(i), static_cast<Vertex>(j), g.color(w[i], w[j]));
    }
  }
  return b.build();
}

ColoredGraph relabel(const ColoredGraph& g, const Permutation& pi) {
  if (pi.degree() != g.n()) throw std::invalid_argument("relabeling degree mismatch");
  GraphBuilder b(g.n(), g.k());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) b.set(pi(u), pi(v), g.color(u, v));
  }
  return b.build();
}

}  // namespace cycgr
