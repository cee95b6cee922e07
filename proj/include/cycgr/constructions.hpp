#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cycgr/colored_graph.hpp"
#include "cycgr/cyclic_spec.hpp"
#include "cycgr/perm_group.hpp"

namespace cycgr {

// Witness graphs. Every builder numbers vertices as OrbitLayout does and
// works on the non-trivial orbits only; specs with fixed points are rejected
// (attach them afterwards with append_trivial_orbits). Shape violations throw
// std::invalid_argument naming the builder that does apply.
//
// Between orbits of different sizes an index i is reduced modulo the size of
// the orbit it lands in.

/// Two orbits of size n: color 1 on the first orbit's cycle and on the
/// matching v_i w_i, color 2 on the shifted matching v_i w_{i+1}. n >= 3.
ColoredGraph build_two_orbit_3colored(std::uint32_t n);

/// r >= 3 orbits of size n >= 3, two colors: cycle on O_1, matchings
/// v^j_i v^l_i for l = j+1 and for (j, l) = (1, 3), shifted matching
/// v^1_i v^2_{i+1}.
ColoredGraph build_many_orbit_2colored(std::uint32_t n, std::uint32_t r);

/// At least two non-trivial orbits and either p > 5 or |O_2| >= 7. Two
/// colors: cycle on O_1, links v^1_j v^2_{j+e} for e in {0, 1, 3}, chain
/// v^l_h v^{l+1}_{h+1} for l >= 2. Any O_l (l >= 2) whose vertices would
/// otherwise also have 1-degree 5 is made a color-1 clique so that O_1 stays
/// recognizable by degree.
ColoredGraph build_prime_power_generic(const CyclicSpec& spec);

/// Exactly two orbits, of sizes p^n > n_p and n_p (p in {2, 3, 5}). Three
/// colors: cycles on both orbits, matching v_i w_i, color-2 matching
/// v_i w_{i+1}.
ColoredGraph build_two_nontrivial_3colored(const CyclicSpec& spec);

/// p in {2, 3, 5}, one orbit of size p^n > n_p, at least two more of size
/// n_p (so no orbits of size 2). Two colors: complement of the cycle on O_1, matchings
/// v^j_i v^l_i for l = j+1 and (j, l) = (1, 3), shifted matching v^1_i v^2_{i+1}.
ColoredGraph build_small_p_many_orbits(const CyclicSpec& spec);

/// p = 2 with r >= 1 orbits of size 2 (P_1..P_r, laid out last) and t >= 2
/// orbits of size >= 4, at most one of them larger than 4. Two colors.
ColoredGraph build_mixed_two_power(const CyclicSpec& spec);

/// r orbits of size 2: the path v^r_1 ... v^1_1 v^1_0 ... v^r_0, whose only
/// symmetry swaps the two ends.
ColoredGraph build_order_two(std::uint32_t r);

/// Adds m vertices fixed by every automorphism: a color-1 path u_1 .. u_m
/// with u_1 joined in color 1 to an anchor set that is a union of orbits of
/// `group`. Anchors tried in order: the first orbit, its complement, all
/// vertices, none; the first whose refinement isolates every new vertex wins.
/// Throws std::runtime_error when none does. m = 0 returns g unchanged.
ColoredGraph append_trivial_orbits(const ColoredGraph& g, const PermGroup& group, std::size_t m);

enum class CertificateKind { reflection_all_orbits, lifted };
const char* to_string(CertificateKind kind);

/// A permutation outside a group that maps every vertex orbit and every edge
/// orbit of the group onto itself, so it preserves every coloring the group
/// preserves.
struct Certificate {
  Permutation sigma;
  CertificateKind kind = CertificateKind::reflection_all_orbits;
  std::string description;
};

/// For specs outside GR: a single orbit of size >= 3, or p = 2 with orbits of
/// size 2 plus exactly one larger orbit. Reflects every non-trivial orbit
/// (j -> -j on a lone orbit, j -> size-1-j otherwise) and fixes the fixed
/// points. Throws std::invalid_argument for any other spec.
Certificate negative_certificate(const CyclicSpec& spec);

/// Two orbits of size n in {3, 4, 5}, 2-colorings of the edges between them.
/// Up to color renaming and rotating the second orbit there are 2 classes for
/// n = 3 and 4 for n in {4, 5}; class c colors the distance set D_c (distance
/// of v_i w_j is j - i) differently from the rest:
///   1: empty set   2: {0}   3: {2, 3}   4: {1, n-1}
/// Returns the class's distance set.
std::vector<std::uint32_t> mixed_coloring_class(std::uint32_t n, std::uint32_t coloring_class);

/// The class representative on v_0..v_{n-1}, w_0..w_{n-1}: v_i w_j has
/// color 1 when j - i lies in the class's distance set, everything else 0.
ColoredGraph mixed_class_representative(std::uint32_t n, std::uint32_t coloring_class);

/// A permutation outside the parallel cyclic group preserving the class
/// representative (any coloring inside the two orbits is preserved too):
/// v_i -> v_{-i}, w_j -> w_{-j}, except for n = 4, class 3, which needs
/// v_i -> v_{-i}, w_j -> w_{1-j}.
Certificate two_orbit_certificate(std::uint32_t n, std::uint32_t coloring_class);

struct CertificateCheck {
  bool outside_group = false;
  bool stabilizes_vertex_orbits = false;
  bool stabilizes_edge_orbits = false;
  bool ok() const { return outside_group && stabilizes_vertex_orbits && stabilizes_edge_orbits; }
};

CertificateCheck verify_certificate(const PermGroup& group, const Permutation& sigma);

}  // namespace cycgr
