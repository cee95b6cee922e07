#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cycgr/colored_graph.hpp"

namespace cycgr::detail {

using Cells = std::vector<std::vector<Vertex>>;

/// True iff the image table preserves every edge color.
bool preserves_colors(const ColoredGraph& graph, std::span<const Vertex> images);

/// Ordered cells grouped by label value (ascending); one cell if no labels.
Cells initial_cells(std::size_t n, std::span<const std::uint32_t> labels);

/// Equitable refinement of an ordered partition.
///
/// For every splitter cell S and vertex v the invariant is the multiset of
/// colors on edges from v into S. Cells split into sub-cells ordered by that
/// invariant, in place, until stable. The procedure only looks at colors and
/// cell positions, so it commutes with relabeling; the returned trace hash
/// therefore agrees on partitions related by an automorphism.
class Refiner {
 public:
  explicit Refiner(const ColoredGraph& graph);

  std::uint64_t refine(Cells& cells) const;

 private:
  void invariant(Vertex v, const std::vector<Vertex>& splitter, std::vector<std::uint32_t>& key) const;

  const ColoredGraph& graph_;
  bool count_by_color_;
};

}  // namespace cycgr::detail
