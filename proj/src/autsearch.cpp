#include "cycgr/autsearch.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "refinement.hpp"

namespace cycgr {

std::size_t bruteforce_cap() {
  if (const char* env = std::getenv("CYCGR_BRUTEFORCE_CAP")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return 8;
}

bool is_automorphism(const ColoredGraph& graph, const Permutation& g) {
  if (g.degree() != graph.n()) throw std::invalid_argument("permutation degree mismatch");
  return detail::preserves_colors(graph, g.images());
}

bool preserves_graph(const ColoredGraph& graph, const PermGroup& group) {
  if (group.degree() != graph.n()) throw std::invalid_argument("group degree mismatch");
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [&](const Permutation& g) { return is_automorphism(graph, g); });
}

namespace {

using detail::Cells;

bool same_shape(const Cells& a, const Cells& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
  }
  return true;
}

Cells individualize(const Cells& cells, std::size_t target, Vertex v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != target) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<Vertex> rest;
    rest.reserve(cells[i].size() - 1);
    for (Vertex w : cells[i]) {
      if (w != v) rest.push_back(w);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

std::size_t choose_target(const Cells& cells) {
  std::size_t best = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1 && (best == cells.size() || cells[i].size() < cells[best].size())) {
      best = i;
    }
  }
  return best;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const ColoredGraph& graph, std::span<const std::uint32_t> labels)
      : graph_(graph), refiner_(graph) {
    Level root;
    root.cells = detail::initial_cells(graph.n(), labels);
    root.trace = refiner_.refine(root.cells);
    path_.push_back(std::move(root));
    while (path_.back().cells.size() < graph.n()) {
      Level& top = path_.back();
      top.target = choose_target(top.cells);
      const auto& cell = top.cells[top.target];
      top.base = *std::min_element(cell.begin(), cell.end());
      Level next;
      next.cells = individualize(top.cells, top.target, top.base);
      next.trace = refiner_.refine(next.cells);
      path_.push_back(std::move(next));
    }
  }

  PermGroup run(const AutOptions& options) {
    const std::size_t n = graph_.n();
    std::vector<Permutation> gens;
    GroupOrder order = 1;
    for (std::size_t level = path_.size() - 1; level-- > 0;) {
      const Vertex base = path_[level].base;
      std::vector<Vertex> candidates = path_[level].cells[path_[level].target];
      std::sort(candidates.begin(), candidates.end());

      std::vector<std::size_t> orbit_id = orbit_labels(n, gens);
      std::vector<bool> failed_orbit(n, false);
      for (Vertex c : candidates) {
        if (orbit_id[c] == orbit_id[base] || failed_orbit[orbit_id[c]]) continue;
        if (auto g = find_mapping(level, c)) {
          gens.push_back(std::move(*g));
          // Orbit ids change; carry failures over to the merged orbits.
          std::vector<bool> failed_vertex(n, false);
          for (Vertex v = 0; v < n; ++v) failed_vertex[v] = failed_orbit[orbit_id[v]];
          orbit_id = orbit_labels(n, gens);
          failed_orbit.assign(n, false);
          for (Vertex v = 0; v < n; ++v) {
            if (failed_vertex[v]) failed_orbit[orbit_id[v]] = true;
          }
        } else {
          failed_orbit[orbit_id[c]] = true;
        }
      }
      const auto orbit_size = static_cast<std::size_t>(
          std::count(orbit_id.begin(), orbit_id.end(), orbit_id[base]));
      order *= orbit_size;
    }
    if (options.materialize && order <= options.materialize_cap) {
      return PermGroup::generated_by(n, std::move(gens), options.materialize_cap);
    }
    return PermGroup(n, std::move(gens), std::move(order));
  }

 private:
  struct Level {
    Cells cells;
    std::uint64_t trace = 0;
    std::size_t target = 0;
    Vertex base = 0;
  };

  static std::vector<std::size_t> orbit_labels(std::size_t n, const std::vector<Permutation>& gens) {
    std::vector<std::size_t> id(n, n);
    std::size_t next = 0;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
      if (id[s] != n) continue;
      id[s] = next;
      queue.assign(1, s);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : gens) {
          const Vertex w = g(queue[i]);
          if (id[w] == n) {
            id[w] = next;
            queue.push_back(w);
          }
        }
      }
      ++next;
    }
    return id;
  }

  // An automorphism fixing the bases above `level` and sending the base at
  // `level` to `image`, if one exists.
  std::optional<Permutation> find_mapping(std::size_t level, Vertex image) {
    Cells right = individualize(path_[level].cells, path_[level].target, image);
    const std::uint64_t trace = refiner_.refine(right);
    if (trace != path_[level + 1].trace || !same_shape(right, path_[level + 1].cells)) {
      return std::nullopt;
    }
    return descend(level + 1, right);
  }

  std::optional<Permutation> descend(std::size_t depth, const Cells& right) {
    const Level& left = path_[depth];
    if (depth + 1 == path_.size()) {
      std::vector<Vertex> images(graph_.n());
      for (std::size_t q = 0; q < left.cells.size(); ++q) images[left.cells[q][0]] = right[q][0];
      if (!detail::preserves_colors(graph_, images)) return std::nullopt;
      return Permutation(std::move(images));
    }
    for (Vertex c : right[left.target]) {
      Cells next = individualize(right, left.target, c);
      const std::uint64_t trace = refiner_.refine(next);
      if (trace != path_[depth + 1].trace || !same_shape(next, path_[depth + 1].cells)) continue;
      if (auto g = descend(depth + 1, next)) return g;
    }
    return std::nullopt;
  }

  const ColoredGraph& graph_;
  detail::Refiner refiner_;
  std::vector<Level> path_;
};

}  // namespace

PermGroup automorphism_group(const ColoredGraph& graph, const AutOptions& options) {
  if (graph.n() == 0) throw std::invalid_argument("automorphism group of the empty graph");
  if (!options.vertex_labels.empty() && options.vertex_labels.size() != graph.n()) {
    throw std::invalid_argument("vertex label count does not match graph");
  }
  AutomorphismSearch search(graph, options.vertex_labels);
  return search.run(options);
}

bool stabilizer_is_trivial(const ColoredGraph& graph, Vertex v, const PermGroup& known) {
  if (v >= graph.n()) throw std::invalid_argument("vertex out of range");
  if (!preserves_graph(graph, known)) {
    throw std::invalid_argument("the supplied group is not a group of automorphisms");
  }
  AutOptions options;
  options.vertex_labels.assign(graph.n(), 0);
  options.vertex_labels[v] = 1;
  options.materialize = false;
  return automorphism_group(graph, options).order() == 1;
}

std::vector<std::vector<Vertex>> equitable_partition(const ColoredGraph& graph,
                                                     std::span<const std::uint32_t> labels) {
  if (!labels.empty() && labels.size() != graph.n()) {
    throw std::invalid_argument("vertex label count does not match graph");
  }
  Cells cells = detail::initial_cells(graph.n(), labels);
  detail::Refiner(graph).refine(cells);
  return cells;
}

}  // namespace cycgr
