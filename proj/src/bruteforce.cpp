// Brute-force automorphism enumeration: serial reference and OpenMP kernel.
#include <algorithm>
#include <numeric>
#include <string>

#include <omp.h>

#include "cycgr/autsearch.hpp"
#include "refinement.hpp"

namespace cycgr {

namespace {

// All automorphisms whose image of vertex 0 is `first`, in lexicographic order.
void scan_branch(const ColoredGraph& graph, Vertex first, std::vector<Permutation>& out) {
  const std::size_t n = graph.n();
  std::vector<Vertex> images;
  images.reserve(n);
  images.push_back(first);
  for (Vertex v = 0; v < n; ++v) {
    if (v != first) images.push_back(v);
  }
  do {
    if (detail::preserves_colors(graph, images)) out.emplace_back(images);
  } while (std::next_permutation(images.begin() + 1, images.end()));
}

std::vector<Permutation> scan_serial(const ColoredGraph& graph) {
  std::vector<Permutation> out;
  for (Vertex first = 0; first < graph.n(); ++first) scan_branch(graph, first, out);
  return out;
}

std::vector<Permutation> scan_parallel(const ColoredGraph& graph) {
  const auto n = static_cast<std::int64_t>(graph.n());
  std::vector<std::vector<Permutation>> buckets(graph.n());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t first = 0; first < n; ++first) {
    scan_branch(graph, static_cast<Vertex>(first), buckets[static_cast<std::size_t>(first)]);
  }
  std::vector<Permutation> out;
  for (auto& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

}  // namespace

PermGroup automorphism_group_bruteforce(const ColoredGraph& graph, Execution exec,
                                        std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(bruteforce_cap());
  if (graph.n() == 0) throw std::invalid_argument("automorphism group of the empty graph");
  if (graph.n() > limit) {
    throw SearchLimitExceeded("brute force refuses n = " + std::to_string(graph.n()) +
                              " (cap " + std::to_string(limit) + ")");
  }
  std::vector<Permutation> elements =
      exec == Execution::parallel ? scan_parallel(graph) : scan_serial(graph);
  return PermGroup::from_elements(graph.n(), std::move(elements));
}

}  // namespace cycgr
