#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cycgr/permutation.hpp"

namespace cycgr {

using GroupOrder = boost::multiprecision::cpp_int;

/// Largest group order that will be expanded into an explicit element list.
inline constexpr std::size_t kDefaultMaterializeCap = 1'000'000;

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation group given by generators and its order, optionally with the
/// full sorted element list.
///
/// Immutable after construction; the element list is shared between copies.
class PermGroup {
 public:
  /// Group with a known order, elements left unmaterialized.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupOrder order);

  /// Closes `generators` under composition. Throws GroupTooLarge once more
  /// than `cap` elements are produced.
  static PermGroup generated_by(std::size_t degree, std::vector<Permutation> generators,
                                std::size_t cap = kDefaultMaterializeCap);

  /// Group with a complete element list. A small generating set is picked
  /// greedily; throws std::invalid_argument if the list is not closed.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const GroupOrder& order() const noexcept { return order_; }

  bool is_materialized() const noexcept { return elements_ != nullptr; }
  /// Sorted element list. Throws std::logic_error when not materialized.
  const std::vector<Permutation>& elements() const;

  /// This group with its element list filled in.
  PermGroup materialized(std::size_t cap = kDefaultMaterializeCap) const;

  /// Orbits on points, each sorted, listed by smallest point.
  std::vector<std::vector<Vertex>> orbits() const;

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  GroupOrder order_ = 1;
  std::shared_ptr<const std::vector<Permutation>> elements_;
};

/// Closure of the generators under composition, sorted. Throws GroupTooLarge
/// past `cap` elements.
std::vector<Permutation> enumerate_elements(std::size_t degree,
                                            const std::vector<Permutation>& generators,
                                            std::size_t cap = kDefaultMaterializeCap);

/// Set equality of the two groups. Both are materialized (bounded by `cap`).
bool group_equals(const PermGroup& a, const PermGroup& b,
                  std::size_t cap = kDefaultMaterializeCap);

/// Membership of g in the materialized element list of `group`.
bool contains(const PermGroup& group, const Permutation& g,
              std::size_t cap = kDefaultMaterializeCap);

PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);

/// Componentwise action on the disjoint union; B's points follow A's.
PermGroup direct_sum(const PermGroup& a, const PermGroup& b);

/// The same element acting simultaneously on `copies` disjoint copies.
PermGroup parallel_product(const PermGroup& a, std::size_t copies);

}  // namespace cycgr
