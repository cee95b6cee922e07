#include "cycgr/cyclic_spec.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cycgr {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::invalid_argument("orbit size overflows 64 bits");
    }
    out *= base;
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

CyclicSpec::CyclicSpec(std::uint32_t p, std::vector<std::uint32_t> exponents,
                       std::uint32_t trivial_count)
    : p_(p), exponents_(std::move(exponents)), trivial_count_(trivial_count) {
  if (!is_prime(p_)) throw std::invalid_argument("p = " + std::to_string(p_) + " is not prime");
  for (auto e : exponents_) {
    if (e == 0) throw std::invalid_argument("orbit exponents must be at least 1");
  }
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
  if (degree() == 0) throw std::invalid_argument("spec has no points");
}

CyclicSpec CyclicSpec::from_orbit_sizes(std::uint32_t p, const std::vector<std::uint64_t>& sizes,
                                        std::uint32_t trivial_count) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  std::vector<std::uint32_t> exps;
  for (auto s : sizes) {
    std::uint32_t e = 0;
    std::uint64_t v = s;
    while (v > 1 && v % p == 0) {
      v /= p;
      ++e;
    }
    if (v != 1 || e == 0) {
      throw std::invalid_argument("orbit size " + std::to_string(s) + " is not a positive power of " +
                                  std::to_string(p));
    }
    exps.push_back(e);
  }
  return CyclicSpec(p, std::move(exps), trivial_count);
}

std::uint64_t CyclicSpec::order() const { return checked_pow(p_, max_exponent()); }

std::size_t CyclicSpec::degree() const {
  std::size_t d = trivial_count_;
  for (auto e : exponents_) d += checked_pow(p_, e);
  return d;
}

std::vector<std::uint64_t> CyclicSpec::orbit_sizes() const {
  std::vector<std::uint64_t> out;
  for (auto e : exponents_) out.push_back(checked_pow(p_, e));
  return out;
}

std::uint64_t CyclicSpec::small_orbit_size() const {
  switch (p_) {
    case 2: return 4;
    case 3: return 3;
    case 5: return 5;
    default: throw std::invalid_argument("small orbit size is only defined for p in {2,3,5}");
  }
}

CyclicSpec CyclicSpec::without_fixed_points() const { return CyclicSpec(p_, exponents_, 0); }

std::string CyclicSpec::to_string() const {
  std::ostringstream os;
  os << "p=" << p_ << " orbits=";
  const auto sizes = orbit_sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) os << ',';
    os << sizes[i];
  }
  os << " fixed=" << trivial_count_;
  return os.str();
}

OrbitLayout::OrbitLayout(const CyclicSpec& spec) {
  Vertex base = 0;
  for (auto size : spec.orbit_sizes()) {
    orbits_.push_back({base, static_cast<std::uint32_t>(size)});
    base += static_cast<Vertex>(size);
  }
  for (std::uint32_t i = 0; i < spec.trivial_count(); ++i) {
    orbits_.push_back({base, 1});
    ++base;
  }
  degree_ = base;
}

OrbitLayout::OrbitLayout(std::vector<Orbit> orbits) : orbits_(std::move(orbits)) {
  Vertex expected = 0;
  for (const auto& o : orbits_) {
    if (o.base != expected || o.size == 0) {
      throw std::invalid_argument("orbit layout must be contiguous and non-empty");
    }
    expected += o.size;
  }
  degree_ = expected;
}

Vertex OrbitLayout::vertex(std::size_t orbit, std::int64_t index) const {
  const auto& o = orbits_.at(orbit);
  const std::int64_t size = o.size;
  const std::int64_t reduced = ((index % size) + size) % size;
  return o.base + static_cast<Vertex>(reduced);
}

std::size_t OrbitLayout::orbit_of(Vertex v) const {
  if (v >= degree_) throw std::out_of_range("vertex outside layout");
  auto it = std::upper_bound(orbits_.begin(), orbits_.end(), v,
                             [](Vertex x, const Orbit& o) { return x < o.base; });
  return static_cast<std::size_t>(std::distance(orbits_.begin(), it) - 1);
}

std::uint32_t OrbitLayout::index_in_orbit(Vertex v) const {
  return v - orbits_[orbit_of(v)].base;
}

std::string OrbitLayout::label(Vertex v) const {
  return "v^" + std::to_string(orbit_of(v) + 1) + "_" + std::to_string(index_in_orbit(v));
}

std::vector<CyclicSpec> specs_up_to(std::uint32_t p, std::size_t max_degree, bool include_trivial) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  std::vector<std::vector<std::uint32_t>> lists;
  std::vector<std::uint32_t> current;
  // non-increasing exponent lists with sum of p^e within max_degree
  std::function<void(std::uint32_t, std::size_t)> extend = [&](std::uint32_t max_e, std::size_t used) {
    lists.push_back(current);
    std::size_t size = p;
    for (std::uint32_t e = 1; e <= max_e && used + size <= max_degree; ++e, size *= p) {
      current.push_back(e);
      extend(e, used + size);
      current.pop_back();
    }
  };
  extend(64, 0);

  std::vector<CyclicSpec> out;
  for (const auto& exps : lists) {
    if (exps.empty() && !include_trivial) continue;
    std::size_t moved = 0;
    for (auto e : exps) moved += checked_pow(p, e);
    for (std::size_t fixed = exps.empty() ? 1 : 0; moved + fixed <= max_degree; ++fixed) {
      out.emplace_back(p, exps, static_cast<std::uint32_t>(fixed));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CyclicSpec& a, const CyclicSpec& b) {
    auto key = [](const CyclicSpec& s) { return std::make_tuple(s.degree(), s.exponents(), s.trivial_count()); };
    return key(a) < key(b);
  });
  return out;
}

Permutation cyclic_generator(const CyclicSpec& spec) {
  const OrbitLayout layout(spec);
  std::vector<Vertex> images(layout.degree());
  for (std::size_t j = 0; j < layout.orbit_count(); ++j) {
    for (std::uint32_t i = 0; i < layout.size(j); ++i) {
      images[layout.vertex(j, i)] = layout.vertex(j, static_cast<std::int64_t>(i) + 1);
    }
  }
  return Permutation(std::move(images));
}

PermGroup cyclic_group(const CyclicSpec& spec) {
  const std::size_t degree = spec.degree();
  if (spec.nontrivial_count() == 0) return PermGroup::trivial(degree);
  auto gen = cyclic_generator(spec);
  if (spec.order() <= kDefaultMaterializeCap) {
    return PermGroup::generated_by(degree, {std::move(gen)});
  }
  return PermGroup(degree, {std::move(gen)}, GroupOrder(spec.order()));
}

}  // namespace cycgr
