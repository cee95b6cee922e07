#include "cycgr/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace cycgr {

namespace {

void check_degree(std::size_t degree, const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator degree does not match group degree");
    }
  }
}

Permutation shifted(const Permutation& g, std::size_t offset, std::size_t degree) {
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  for (std::size_t i = 0; i < g.degree(); ++i) {
    images[offset + i] = static_cast<Vertex>(offset + g(static_cast<Vertex>(i)));
  }
  return Permutation(std::move(images));
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupOrder order)
    : degree_(degree), generators_(std::move(generators)), order_(std::move(order)) {
  if (degree_ == 0) throw std::invalid_argument("permutation group of degree 0");
  if (order_ < 1) throw std::invalid_argument("group order must be positive");
  check_degree(degree_, generators_);
}

PermGroup PermGroup::generated_by(std::size_t degree, std::vector<Permutation> generators,
                                  std::size_t cap) {
  if (degree == 0) throw std::invalid_argument("permutation group of degree 0");
  check_degree(degree, generators);
  auto elements = enumerate_elements(degree, generators, cap);
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.order_ = GroupOrder(elements.size());
  g.elements_ = std::make_shared<const std::vector<Permutation>>(std::move(elements));
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  if (degree == 0) throw std::invalid_argument("permutation group of degree 0");
  check_degree(degree, elements);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Permutation> gens;
  std::vector<Permutation> span{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    try {
      span = enumerate_elements(degree, gens, elements.size());
    } catch (const GroupTooLarge&) {
      throw std::invalid_argument("element list is not a group");
    }
  }
  if (span != elements) throw std::invalid_argument("element list is not a group");
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(gens);
  g.order_ = GroupOrder(elements.size());
  g.elements_ = std::make_shared<const std::vector<Permutation>>(std::move(elements));
  return g;
}

PermGroup PermGroup::trivial(std::size_t degree) { return generated_by(degree, {}); }

const std::vector<Permutation>& PermGroup::elements() const {
  if (!elements_) throw std::logic_error("group elements were not materialized");
  return *elements_;
}

PermGroup PermGroup::materialized(std::size_t cap) const {
  if (elements_) return *this;
  if (order_ > cap) {
    throw GroupTooLarge("group order " + order_.str() + " exceeds the materialization cap " +
                        std::to_string(cap));
  }
  auto elements = enumerate_elements(degree_, generators_, cap);
  if (GroupOrder(elements.size()) != order_) {
    throw std::logic_error("declared group order disagrees with generated elements");
  }
  PermGroup g = *this;
  g.elements_ = std::make_shared<const std::vector<Permutation>>(std::move(elements));
  return g;
}

std::vector<std::vector<Vertex>> PermGroup::orbits() const {
  std::vector<int> label(degree_, -1);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t start = 0; start < degree_; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> orbit{static_cast<Vertex>(start)};
    label[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : generators_) {
        const Vertex w = g(orbit[i]);
        if (label[w] < 0) {
          label[w] = id;
          orbit.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Permutation> enumerate_elements(std::size_t degree,
                                            const std::vector<Permutation>& generators,
                                            std::size_t cap) {
  check_degree(degree, generators);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> frontier;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw GroupTooLarge("group has more than " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool group_equals(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  if (a.degree() != b.degree()) throw std::invalid_argument("group degree mismatch");
  if (a.order() != b.order()) return false;
  return a.materialized(cap).elements() == b.materialized(cap).elements();
}

bool contains(const PermGroup& group, const Permutation& g, std::size_t cap) {
  if (group.degree() != g.degree()) throw std::invalid_argument("group degree mismatch");
  const auto& elements = group.materialized(cap).elements();
  return std::binary_search(elements.begin(), elements.end(), g);
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<Vertex> rotation(n);
  std::vector<Vertex> reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<Vertex>((i + 1) % n);
    reflection[i] = static_cast<Vertex>((n - i) % n);
  }
  return PermGroup::generated_by(
      n, {Permutation(std::move(rotation)), Permutation(std::move(reflection))});
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric group of degree 0");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Vertex> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Vertex{0});
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  GroupOrder order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  return PermGroup(n, std::move(gens), order);
}

PermGroup direct_sum(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(shifted(g, 0, degree));
  for (const auto& g : b.generators()) gens.push_back(shifted(g, a.degree(), degree));
  return PermGroup(degree, std::move(gens), a.order() * b.order());
}

PermGroup parallel_product(const PermGroup& a, std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("parallel product needs at least one copy");
  const std::size_t base = a.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Vertex> images(base * copies);
    for (std::size_t c = 0; c < copies; ++c) {
      for (std::size_t i = 0; i < base; ++i) {
        images[c * base + i] = static_cast<Vertex>(c * base + g(static_cast<Vertex>(i)));
      }
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(base * copies, std::move(gens), a.order());
}

}  // namespace cycgr
