#include "cycgr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cycgr {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Vertex> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Vertex>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Vertex> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Vertex>(i);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex from = cycle[i];
      const Vertex to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw std::invalid_argument("cycle point out of range");
      }
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Vertex>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> Permutation::cycles() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Vertex> cycle;
    Vertex v = static_cast<Vertex>(start);
    while (!seen[v]) {
      seen[v] = true;
      cycle.push_back(v);
      v = images_[v];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> current;
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (open) throw std::invalid_argument("nested '(' in cycle notation");
      open = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced ')' in cycle notation");
      open = false;
      if (!current.empty()) cycles.push_back(current);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw std::invalid_argument("point outside a cycle");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      current.push_back(static_cast<Vertex>(value));
    } else if (c == ' ' || c == ',' || c == '\t') {
      ++i;
    } else {
      throw std::invalid_argument(std::string("unexpected character in cycle notation: ") + c);
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");
  return Permutation::from_cycles(degree, cycles);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Vertex v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cycgr
