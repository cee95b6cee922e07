#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cycgr/perm_group.hpp"

namespace cycgr {

bool is_prime(std::uint64_t value);

/// A cyclic permutation group of prime power order: one orbit of size
/// p^e for every exponent e, plus `trivial_count` fixed points.
///
/// Exponents are kept sorted non-increasing; the largest is the exponent of
/// the group order.
class CyclicSpec {
 public:
  /// Throws std::invalid_argument for non-prime p, zero exponents or an
  /// empty point set.
  CyclicSpec(std::uint32_t p, std::vector<std::uint32_t> exponents, std::uint32_t trivial_count);

  /// Orbit sizes must be powers p^e with e >= 1, in any order.
  static CyclicSpec from_orbit_sizes(std::uint32_t p, const std::vector<std::uint64_t>& sizes,
                                     std::uint32_t trivial_count);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::uint32_t trivial_count() const noexcept { return trivial_count_; }

  std::uint32_t max_exponent() const noexcept { return exponents_.empty() ? 0 : exponents_[0]; }
  std::uint64_t order() const;
  std::size_t degree() const;
  std::size_t nontrivial_count() const noexcept { return exponents_.size(); }
  /// Orbit sizes, non-increasing, without the fixed points.
  std::vector<std::uint64_t> orbit_sizes() const;
  /// Size of the smallest orbit that is not the largest one: p for p in {3,5}, 4 for p = 2.
  std::uint64_t small_orbit_size() const;

  /// The same group without its fixed points.
  CyclicSpec without_fixed_points() const;

  /// "p=3 orbits=9,3 fixed=2"
  std::string to_string() const;

  bool operator==(const CyclicSpec&) const = default;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> exponents_;
  std::uint32_t trivial_count_;
};

/// Every spec for prime p with degree <= max_degree: all non-increasing
/// exponent lists and fixed-point counts, ordered by degree, then by
/// exponent list (lexicographically), then by fixed points. Trivial groups
/// (no non-trivial orbit) are included only on request.
std::vector<CyclicSpec> specs_up_to(std::uint32_t p, std::size_t max_degree, bool include_trivial = false);

/// Contiguous vertex numbering: non-trivial orbits by non-increasing size,
/// then the fixed points. Vertex i of orbit j is base(j) + i.
class OrbitLayout {
 public:
  struct Orbit {
    Vertex base;
    std::uint32_t size;
  };

  explicit OrbitLayout(const CyclicSpec& spec);
  explicit OrbitLayout(std::vector<Orbit> orbits);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  std::uint32_t size(std::size_t orbit) const { return orbits_.at(orbit).size; }

  /// Vertex `index` (taken modulo the orbit size) of orbit `orbit`.
  Vertex vertex(std::size_t orbit, std::int64_t index) const;

  std::size_t orbit_of(Vertex v) const;
  std::uint32_t index_in_orbit(Vertex v) const;

  /// "v^j_i" with 1-based orbit number j.
  std::string label(Vertex v) const;

 private:
  std::vector<Orbit> orbits_;
  std::size_t degree_ = 0;
};

/// The generator that advances every non-trivial orbit by one step.
Permutation cyclic_generator(const CyclicSpec& spec);

/// Group generated by cyclic_generator(spec); materialized when small.
PermGroup cyclic_group(const CyclicSpec& spec);

}  // namespace cycgr
