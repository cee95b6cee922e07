#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cycgr/permutation.hpp"

namespace cycgr {

using Color = std::uint16_t;

/// Index of the unordered pair {u, v}, u != v, in the row-major upper
/// triangle: u*n - u*(u+1)/2 + (v-u-1) with u < v.
inline std::size_t pair_index(std::size_t n, Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
}

inline std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// A complete graph on n vertices with every edge colored from {0, ..., k-1}.
/// Color 0 is the "absent" color for rendering purposes.
class ColoredGraph {
 public:
  /// All edges colored 0.
  ColoredGraph(std::size_t n, Color k);
  /// Throws std::invalid_argument unless colors has n(n-1)/2 entries, all < k.
  ColoredGraph(std::size_t n, Color k, std::vector<Color> colors);

  std::size_t n() const noexcept { return n_; }
  Color k() const noexcept { return k_; }
  std::span<const Color> colors() const noexcept { return colors_; }

  /// Unchecked lookup; u != v.
  Color color(Vertex u, Vertex v) const noexcept { return colors_[pair_index(n_, u, v)]; }

  /// Number of distinct colors that actually occur.
  std::size_t colors_used() const;
  std::size_t nonzero_edges() const;

  bool operator==(const ColoredGraph&) const = default;

 private:
  std::size_t n_;
  Color k_;
  std::vector<Color> colors_;
};

/// Mutable staging area for building a ColoredGraph.
class GraphBuilder {
 public:
  GraphBuilder(std::size_t n, Color k);

  /// Throws std::invalid_argument for a loop, an out-of-range vertex or color.
  GraphBuilder& set(Vertex u, Vertex v, Color c);
  Color get(Vertex u, Vertex v) const;
  std::size_t n() const noexcept { return n_; }

  ColoredGraph build() const;

 private:
  std::size_t n_;
  Color k_;
  std::vector<Color> colors_;
};

/// E({u,v}). Throws std::invalid_argument when u == v or out of range.
Color edge_color(const ColoredGraph& g, Vertex u, Vertex v);

/// Number of i-neighbors of v.
std::size_t i_degree(const ColoredGraph& g, Vertex v, Color i);

/// True iff every two vertices are joined by a path using only colors in `allowed`.
bool x_connected(const ColoredGraph& g, std::span<const Color> allowed);

/// Subgraph spanned by `subset` (sorted and deduplicated first); vertices are
/// renumbered in increasing order. Needs at least two distinct vertices.
ColoredGraph spanned_subgraph(const ColoredGraph& g, std::span<const Vertex> subset);

/// The graph pi.G with E'({pi(u), pi(v)}) = E({u, v}).
ColoredGraph relabel(const ColoredGraph& g, const Permutation& pi);

}  // namespace cycgr
