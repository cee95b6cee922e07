#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycgr/colored_graph.hpp"
#include "cycgr/execution.hpp"
#include "cycgr/perm_group.hpp"

namespace cycgr {

/// Orbits of a permutation group on unordered vertex pairs.
///
/// Ids are 0..count()-1, numbered by smallest member pair (in pair_index
/// order, which is lexicographic on (u, v) with u < v).
struct EdgeOrbitPartition {
  std::size_t n = 0;
  std::vector<std::uint32_t> orbit_of;  // indexed by pair_index
  std::vector<std::pair<Vertex, Vertex>> representatives;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return representatives.size(); }
  std::uint32_t orbit(Vertex u, Vertex v) const { return orbit_of[pair_index(n, u, v)]; }
};

/// Throws std::invalid_argument for degree < 2.
EdgeOrbitPartition edge_orbits(const PermGroup& group);

/// Graph whose pair {u,v} gets coloring[orbit(u,v)]. k = 1 + largest color.
ColoredGraph coloring_graph(const EdgeOrbitPartition& orbits, std::span<const Color> coloring);

/// Automorphism group of the graph giving every edge orbit its own color.
/// Always contains `group`; equal to it iff the group is 2*-closed.
PermGroup two_star_closure(const PermGroup& group);

/// Calls `visit` on every coloring of m orbits with at most k colors, up to
/// renaming of colors (restricted growth strings: orbit 0 gets color 0, each
/// orbit uses at most one more than the largest color so far). Lexicographic
/// order. Stops early when `visit` returns false; returns the number visited.
std::size_t for_each_coloring(std::size_t m, std::size_t k,
                              const std::function<bool(std::span<const Color>)>& visit);

/// Number of colorings for_each_coloring visits, saturating at UINT64_MAX.
std::uint64_t coloring_count(std::size_t m, std::size_t k);

enum class Membership { member, not_member, inconclusive };
const char* to_string(Membership m);

struct MembershipOptions {
  std::size_t budget = 200'000;  // colorings examined before giving up
  std::size_t probes = 512;      // random colorings tried first
  std::uint64_t seed = 0x5eed;
  Execution execution = Execution::serial;
};

struct MembershipReport {
  std::string group;  // free-form description of the group examined
  std::size_t k = 0;
  Membership status = Membership::inconclusive;
  std::size_t edge_orbit_count = 0;
  std::uint64_t colorings_total = 0;
  std::size_t colorings_examined = 0;
  /// Orbit id -> color, restricted growth form; set when member.
  std::optional<std::vector<Color>> witness;
  /// Automorphisms outside the group; every examined coloring is preserved
  /// by at least one of them. Set when not_member.
  std::vector<Permutation> extra_automorphisms;

  nlohmann::json to_json() const;
};

/// Decides whether some coloring of the edge orbits with at most k colors
/// has automorphism group exactly `group`.
///
/// A seeded batch of random colorings is tried first (skipped when the
/// exhaustive count is small), then every coloring up to color renaming is
/// enumerated. Colorings preserved by an already known automorphism outside
/// the group are rejected without a search. Running out of budget yields
/// Membership::inconclusive. The group must be materializable.
///
/// Serial and parallel execution return identical reports.
MembershipReport gr_k_membership(const PermGroup& group, std::size_t k,
                                 const MembershipOptions& options = {});

struct MinColorsResult {
  // above_limit: 2*-closed, but no coloring with k_max colors works.
  enum class Kind { colors, not_in_gr, above_limit, inconclusive };
  Kind kind = Kind::inconclusive;
  std::size_t k = 0;  // valid for Kind::colors; also the last k tried otherwise
  std::vector<MembershipReport> reports;
};

/// Least k in [2, k_max] with membership, or not_in_gr when the 2*-closure is
/// strictly larger than the group. Degree must be at least 2.
MinColorsResult min_colors(const PermGroup& group, std::size_t k_max,
                           const MembershipOptions& options = {});

}  // namespace cycgr
