#include "cycgr/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cycgr/autsearch.hpp"
#include "cycgr/closure.hpp"

namespace cycgr {

namespace {

[[noreturn]] void reject(const std::string& builder, const CyclicSpec& spec, const std::string& why) {
  throw std::invalid_argument(builder + ": " + spec.to_string() + " " + why);
}

void require_no_fixed_points(const std::string& builder, const CyclicSpec& spec) {
  if (spec.trivial_count() != 0) {
    reject(builder, spec, "has fixed points; build without them and use append_trivial_orbits");
  }
}

std::size_t count_size(const std::vector<std::uint64_t>& sizes, std::uint64_t s) {
  return static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), s));
}

void add_cycle(GraphBuilder& b, const OrbitLayout& layout, std::size_t orbit, Color c) {
  const auto size = layout.size(orbit);
  if (size < 3) return;
  for (std::int64_t i = 0; i < size; ++i) b.set(layout.vertex(orbit, i), layout.vertex(orbit, i + 1), c);
}

void add_clique(GraphBuilder& b, const OrbitLayout& layout, std::size_t orbit, Color c) {
  const auto size = layout.size(orbit);
  for (std::int64_t i = 0; i < size; ++i) {
    for (std::int64_t j = i + 1; j < size; ++j) b.set(layout.vertex(orbit, i), layout.vertex(orbit, j), c);
  }
}

// v^a_i v^b_{i+shift} for every i in orbit a.
void add_matching(GraphBuilder& b, const OrbitLayout& layout, std::size_t a, std::size_t bo,
                  std::int64_t shift, Color c) {
  for (std::int64_t i = 0; i < layout.size(a); ++i) {
    b.set(layout.vertex(a, i), layout.vertex(bo, i + shift), c);
  }
}

std::size_t one_degree(const GraphBuilder& b, Vertex v) {
  std::size_t d = 0;
  for (Vertex w = 0; w < b.n(); ++w) {
    if (w != v && b.get(v, w) == 1) ++d;
  }
  return d;
}

}  // namespace

ColoredGraph build_two_orbit_3colored(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("build_two_orbit_3colored: needs n >= 3");
  OrbitLayout layout({{0, n}, {n, n}});
  GraphBuilder b(2 * n, 3);
  add_cycle(b, layout, 0, 1);
  add_matching(b, layout, 0, 1, 0, 1);
  add_matching(b, layout, 0, 1, 1, 2);
  return b.build();
}

ColoredGraph build_many_orbit_2colored(std::uint32_t n, std::uint32_t r) {
  if (n < 3) throw std::invalid_argument("build_many_orbit_2colored: needs orbit size >= 3");
  if (r < 3) {
    throw std::invalid_argument(
        "build_many_orbit_2colored: needs r >= 3 orbits; use build_two_orbit_3colored for two");
  }
  std::vector<OrbitLayout::Orbit> orbits;
  for (std::uint32_t j = 0; j < r; ++j) orbits.push_back({j * n, n});
  OrbitLayout layout(orbits);
  GraphBuilder b(static_cast<std::size_t>(n) * r, 2);
  add_cycle(b, layout, 0, 1);
  for (std::size_t j = 0; j + 1 < r; ++j) add_matching(b, layout, j, j + 1, 0, 1);
  add_matching(b, layout, 0, 2, 0, 1);
  add_matching(b, layout, 0, 1, 1, 1);
  return b.build();
}

ColoredGraph build_prime_power_generic(const CyclicSpec& spec) {
  const std::string name = "build_prime_power_generic";
  require_no_fixed_points(name, spec);
  const auto sizes = spec.orbit_sizes();
  if (sizes.size() < 2) reject(name, spec, "needs at least two non-trivial orbits");
  if (spec.p() <= 5 && sizes[1] < 7) {
    reject(name, spec,
           "needs p > 5 or two orbits of size >= 7; see build_two_nontrivial_3colored, "
           "build_small_p_many_orbits, build_mixed_two_power");
  }
  OrbitLayout layout(spec);
  GraphBuilder b(layout.degree(), 2);
  add_cycle(b, layout, 0, 1);
  for (std::int64_t e : {0, 1, 3}) add_matching(b, layout, 0, 1, e, 1);
  for (std::size_t l = 1; l + 1 < sizes.size(); ++l) add_matching(b, layout, l, l + 1, 1, 1);
  for (std::size_t l = 1; l < sizes.size(); ++l) {
    if (one_degree(b, layout.vertex(l, 0)) == 5) add_clique(b, layout, l, 1);
  }
  return b.build();
}

ColoredGraph build_two_nontrivial_3colored(const CyclicSpec& spec) {
  const std::string name = "build_two_nontrivial_3colored";
  require_no_fixed_points(name, spec);
  const auto sizes = spec.orbit_sizes();
  if (spec.p() > 5) reject(name, spec, "needs p in {2, 3, 5}");
  if (sizes.size() != 2) reject(name, spec, "needs exactly two non-trivial orbits");
  const auto np = spec.small_orbit_size();
  if (sizes[1] != np) reject(name, spec, "needs a second orbit of size " + std::to_string(np));
  if (sizes[0] == np) reject(name, spec, "has equal orbits; use build_two_orbit_3colored");
  OrbitLayout layout(spec);
  GraphBuilder b(layout.degree(), 3);
  add_cycle(b, layout, 0, 1);
  add_cycle(b, layout, 1, 1);
  add_matching(b, layout, 0, 1, 0, 1);
  add_matching(b, layout, 0, 1, 1, 2);
  return b.build();
}

ColoredGraph build_small_p_many_orbits(const CyclicSpec& spec) {
  const std::string name = "build_small_p_many_orbits";
  require_no_fixed_points(name, spec);
  const auto sizes = spec.orbit_sizes();
  if (spec.p() > 5) reject(name, spec, "needs p in {2, 3, 5}");
  if (sizes.size() < 3) reject(name, spec, "needs at least three non-trivial orbits");
  const auto np = spec.small_orbit_size();
  for (std::size_t j = 1; j < sizes.size(); ++j) {
    if (sizes[j] != np) reject(name, spec, "needs every orbit but the first of size " + std::to_string(np));
  }
  if (sizes[0] == np) reject(name, spec, "has all orbits equal; use build_many_orbit_2colored");
  OrbitLayout layout(spec);
  GraphBuilder b(layout.degree(), 2);
  const auto big = static_cast<std::int64_t>(sizes[0]);
  for (std::int64_t i = 0; i < big; ++i) {
    for (std::int64_t j = 2; j <= big - 2; ++j) b.set(layout.vertex(0, i), layout.vertex(0, i + j), 1);
  }
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j) add_matching(b, layout, j, j + 1, 0, 1);
  add_matching(b, layout, 0, 2, 0, 1);
  add_matching(b, layout, 0, 1, 1, 1);
  return b.build();
}

ColoredGraph build_mixed_two_power(const CyclicSpec& spec) {
  const std::string name = "build_mixed_two_power";
  require_no_fixed_points(name, spec);
  if (spec.p() != 2) reject(name, spec, "needs p = 2");
  const auto sizes = spec.orbit_sizes();
  const std::size_t r = count_size(sizes, 2);
  const std::size_t t = sizes.size() - r;
  if (r == 0) reject(name, spec, "needs an orbit of size 2");
  if (t < 2) reject(name, spec, "needs two orbits of size >= 4 (one larger orbit is not in GR)");
  if (sizes[1] != 4) reject(name, spec, "allows at most one orbit larger than 4");

  OrbitLayout layout(spec);
  GraphBuilder b(layout.degree(), 2);
  const std::size_t p1 = t;  // first orbit of size 2
  add_cycle(b, layout, 0, 1);
  add_clique(b, layout, 1, 1);
  for (std::size_t i = 0; i + 1 < t; ++i) add_matching(b, layout, i, i + 1, 0, 1);
  add_matching(b, layout, 0, 1, 1, 1);
  add_matching(b, layout, 0, p1, 0, 1);
  add_matching(b, layout, 1, p1, 0, 1);
  if (r >= 2) add_matching(b, layout, t - 1, p1 + 1, 0, 1);
  for (std::size_t i = p1 + 1; i + 1 < p1 + r; ++i) add_matching(b, layout, i, i + 1, 0, 1);
  return b.build();
}

ColoredGraph build_order_two(std::uint32_t r) {
  if (r == 0) throw std::invalid_argument("build_order_two: needs r >= 1");
  std::vector<OrbitLayout::Orbit> orbits;
  for (std::uint32_t j = 0; j < r; ++j) orbits.push_back({2 * j, 2});
  OrbitLayout layout(orbits);
  GraphBuilder b(2 * static_cast<std::size_t>(r), 2);
  b.set(layout.vertex(0, 0), layout.vertex(0, 1), 1);
  for (std::size_t j = 0; j + 1 < r; ++j) add_matching(b, layout, j, j + 1, 0, 1);
  return b.build();
}

ColoredGraph append_trivial_orbits(const ColoredGraph& g, const PermGroup& group, std::size_t m) {
  if (m == 0) return g;
  if (group.degree() != g.n()) throw std::invalid_argument("append_trivial_orbits: degree mismatch");
  const std::size_t n = g.n();
  const auto orbits = group.orbits();

  std::vector<std::vector<Vertex>> anchors;
  anchors.push_back(orbits.front());
  std::vector<Vertex> rest;
  for (std::size_t j = 1; j < orbits.size(); ++j) rest.insert(rest.end(), orbits[j].begin(), orbits[j].end());
  if (!rest.empty()) anchors.push_back(rest);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  if (orbits.size() > 1) anchors.push_back(all);
  anchors.emplace_back();  // a detached path

  for (const auto& anchor : anchors) {
    GraphBuilder b(n + m, std::max<Color>(g.k(), 2));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) b.set(u, v, g.color(u, v));
    }
    const auto first = static_cast<Vertex>(n);
    for (Vertex a : anchor) b.set(a, first, 1);
    for (std::size_t i = 0; i + 1 < m; ++i) b.set(first + i, first + i + 1, 1);
    ColoredGraph out = b.build();

    const auto cells = equitable_partition(out);
    std::vector<bool> alone(n + m, false);
    for (const auto& cell : cells) {
      if (cell.size() == 1) alone[cell[0]] = true;
    }
    if (std::all_of(alone.begin() + static_cast<std::ptrdiff_t>(n), alone.end(), [](bool x) { return x; })) {
      return out;
    }
  }
  throw std::runtime_error("append_trivial_orbits: no anchor isolates the added vertices");
}

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::reflection_all_orbits: return "reflection-all-orbits";
    case CertificateKind::lifted: return "lifted";
  }
  return "?";
}

Certificate negative_certificate(const CyclicSpec& spec) {
  const auto sizes = spec.orbit_sizes();
  const auto larger = static_cast<std::size_t>(
      std::count_if(sizes.begin(), sizes.end(), [](std::uint64_t s) { return s > 2; }));
  if (larger != 1) {
    throw std::invalid_argument("negative_certificate: " + spec.to_string() +
                                " does not have exactly one orbit of size > 2");
  }
  OrbitLayout layout(spec);
  std::vector<Vertex> images(layout.degree());
  std::iota(images.begin(), images.end(), Vertex{0});
  const bool lone = sizes.size() == 1;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    const auto size = static_cast<std::int64_t>(sizes[j]);
    for (std::int64_t i = 0; i < size; ++i) {
      images[layout.vertex(j, i)] = layout.vertex(j, lone ? -i : size - 1 - i);
    }
  }
  Certificate cert;
  cert.sigma = Permutation(std::move(images));
  cert.description = lone ? "reflection j -> -j of the only non-trivial orbit"
                          : "reflection j -> size-1-j of every non-trivial orbit";
  if (spec.trivial_count() > 0) {
    cert.kind = CertificateKind::lifted;
    cert.description += ", identity on the fixed points";
  }
  return cert;
}

std::vector<std::uint32_t> mixed_coloring_class(std::uint32_t n, std::uint32_t coloring_class) {
  if (n < 3 || n > 5) throw std::invalid_argument("mixed_coloring_class: n must be 3, 4 or 5");
  const std::uint32_t classes = n == 3 ? 2 : 4;
  if (coloring_class < 1 || coloring_class > classes) {
    throw std::invalid_argument("mixed_coloring_class: class must be in 1.." + std::to_string(classes));
  }
  switch (coloring_class) {
    case 1: return {};
    case 2: return {0};
    case 3: return {2, 3};
    default: return {1, n - 1};
  }
}

ColoredGraph mixed_class_representative(std::uint32_t n, std::uint32_t coloring_class) {
  const auto set = mixed_coloring_class(n, coloring_class);
  GraphBuilder b(2 * static_cast<std::size_t>(n), 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (std::find(set.begin(), set.end(), (j + n - i) % n) != set.end()) b.set(i, n + j, 1);
    }
  }
  return b.build();
}

Certificate two_orbit_certificate(std::uint32_t n, std::uint32_t coloring_class) {
  mixed_coloring_class(n, coloring_class);  // validates
  const bool exceptional = n == 4 && coloring_class == 3;
  std::vector<Vertex> images(2 * n);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t i = 0; i < nn; ++i) {
    images[i] = static_cast<Vertex>(((nn - i) % nn));
    const std::int64_t j = exceptional ? 1 - i : -i;
    images[n + i] = static_cast<Vertex>(n + ((j % nn) + nn) % nn);
  }
  Certificate cert;
  cert.sigma = Permutation(std::move(images));
  cert.description = exceptional ? "v_i -> v_{-i}, w_j -> w_{1-j}" : "v_i -> v_{-i}, w_j -> w_{-j}";
  return cert;
}

CertificateCheck verify_certificate(const PermGroup& group, const Permutation& sigma) {
  if (group.degree() != sigma.degree()) throw std::invalid_argument("verify_certificate: degree mismatch");
  CertificateCheck check;
  check.outside_group = !contains(group, sigma);

  check.stabilizes_vertex_orbits = true;
  for (const auto& orbit : group.orbits()) {
    for (Vertex v : orbit) {
      if (!std::binary_search(orbit.begin(), orbit.end(), sigma(v))) check.stabilizes_vertex_orbits = false;
    }
  }

  check.stabilizes_edge_orbits = true;
  if (group.degree() >= 2) {
    const auto edges = edge_orbits(group);
    for (Vertex u = 0; u < group.degree() && check.stabilizes_edge_orbits; ++u) {
      for (Vertex v = u + 1; v < group.degree(); ++v) {
        if (edges.orbit(u, v) != edges.orbit(sigma(u), sigma(v))) {
          check.stabilizes_edge_orbits = false;
          break;
        }
      }
    }
  }
  return check;
}

}  // namespace cycgr
