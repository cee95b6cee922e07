#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cycgr {

using Vertex = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image table.
///
/// Composition follows the functional convention: (g * h)(x) = g(h(x)),
/// so h is applied first.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Vertex>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const noexcept { return images_[v]; }
  std::span<const Vertex> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Non-trivial cycles, each rotated to start at its smallest point, sorted
  /// by that point.
  std::vector<std::vector<Vertex>> cycles() const;

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// Parses cycle notation as produced by to_cycle_string().
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cycgr
