#include "refinement.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cycgr::detail {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline void mix(std::uint64_t& h, std::uint64_t value) {
  h ^= value + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= kFnvPrime;
}

// Per-color counts are cheap for small palettes; large palettes (closure
// graphs color every edge orbit differently) use the sorted color list.
constexpr Color kCountingColorLimit = 32;

}  // namespace

bool preserves_colors(const ColoredGraph& graph, std::span<const Vertex> images) {
  const std::size_t n = graph.n();
  for (Vertex u = 0; u < n; ++u) {
    const Vertex gu = images[u];
    for (Vertex v = u + 1; v < n; ++v) {
      if (graph.color(u, v) != graph.color(gu, images[v])) return false;
    }
  }
  return true;
}

Cells initial_cells(std::size_t n, std::span<const std::uint32_t> labels) {
  if (labels.empty()) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    return Cells{std::move(all)};
  }
  std::map<std::uint32_t, std::vector<Vertex>> by_label;
  for (std::size_t i = 0; i < n; ++i) by_label[labels[i]].push_back(static_cast<Vertex>(i));
  Cells out;
  for (auto& [label, cell] : by_label) out.push_back(std::move(cell));
  return out;
}

Refiner::Refiner(const ColoredGraph& graph)
    : graph_(graph), count_by_color_(graph.k() <= kCountingColorLimit) {}

void Refiner::invariant(Vertex v, const std::vector<Vertex>& splitter,
                        std::vector<std::uint32_t>& key) const {
  if (count_by_color_) {
    key.assign(graph_.k(), 0);
    for (Vertex w : splitter) {
      if (w != v) ++key[graph_.color(v, w)];
    }
  } else {
    key.clear();
    for (Vertex w : splitter) {
      if (w != v) key.push_back(graph_.color(v, w));
    }
    std::sort(key.begin(), key.end());
  }
}

std::uint64_t Refiner::refine(Cells& cells) const {
  const std::size_t n = graph_.n();
  std::uint64_t trace = kFnvOffset;
  mix(trace, cells.size());
  std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> keyed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if (cells.size() == n) return trace;
      const std::vector<Vertex> splitter = cells[s];
      Cells next;
      next.reserve(cells.size() + 2);
      bool split = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        std::vector<Vertex>& cell = cells[c];
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        keyed.resize(cell.size());
        for (std::size_t i = 0; i < cell.size(); ++i) {
          invariant(cell[i], splitter, keyed[i].first);
          keyed[i].second = cell[i];
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t groups = 1;
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) ++groups;
        }
        if (groups == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        split = true;
        mix(trace, s);
        mix(trace, c);
        std::size_t begin = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[begin].first) {
            std::vector<Vertex> part;
            part.reserve(i - begin);
            for (std::size_t j = begin; j < i; ++j) part.push_back(keyed[j].second);
            mix(trace, part.size());
            for (auto x : keyed[begin].first) mix(trace, x);
            next.push_back(std::move(part));
            begin = i;
          }
        }
      }
      cells = std::move(next);
      if (split) changed = true;
    }
  }
  return trace;
}

}  // namespace cycgr::detail
