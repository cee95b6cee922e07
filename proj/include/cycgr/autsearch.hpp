#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cycgr/colored_graph.hpp"
#include "cycgr/execution.hpp"
#include "cycgr/perm_group.hpp"

namespace cycgr {

/// Largest n accepted by the brute-force engine. Defaults to 8; the
/// environment variable CYCGR_BRUTEFORCE_CAP overrides it.
std::size_t bruteforce_cap();

class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff g preserves every edge color. Throws on degree mismatch.
bool is_automorphism(const ColoredGraph& graph, const Permutation& g);

/// True iff every generator of `group` is an automorphism of `graph`.
bool preserves_graph(const ColoredGraph& graph, const PermGroup& group);

/// Filters all n! permutations. Elements come back sorted and materialized.
/// Throws SearchLimitExceeded when n exceeds `cap` (bruteforce_cap() if unset).
PermGroup automorphism_group_bruteforce(const ColoredGraph& graph,
                                        Execution exec = Execution::serial,
                                        std::optional<std::size_t> cap = std::nullopt);

struct AutOptions {
  /// Optional vertex colors; automorphisms must preserve them. Empty means
  /// all vertices start in one cell.
  std::vector<std::uint32_t> vertex_labels;
  bool materialize = true;
  std::size_t materialize_cap = kDefaultMaterializeCap;
};

/// Exact automorphism group by individualization and equitable refinement.
///
/// Generators are a strong generating set relative to the base chosen by the
/// search (smallest non-singleton cell, lowest vertex). The order is the
/// product of the basic orbit lengths. Elements are materialized when
/// requested and the order is within the cap.
PermGroup automorphism_group(const ColoredGraph& graph, const AutOptions& options = {});

/// True iff the only automorphism fixing v is the identity. `known` must
/// already be a group of automorphisms of `graph` (checked).
bool stabilizer_is_trivial(const ColoredGraph& graph, Vertex v, const PermGroup& known);

/// Coarsest equitable ordered partition refining the vertex labels. Every
/// automorphism maps each cell onto itself.
std::vector<std::vector<Vertex>> equitable_partition(const ColoredGraph& graph,
                                                     std::span<const std::uint32_t> labels = {});

}  // namespace cycgr
