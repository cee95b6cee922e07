#include "cycgr/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "cycgr/autsearch.hpp"

namespace cycgr {

namespace {

std::size_t count_larger_than_two(const std::vector<std::uint64_t>& sizes) {
  return static_cast<std::size_t>(
      std::count_if(sizes.begin(), sizes.end(), [](std::uint64_t s) { return s > 2; }));
}

bool all_equal(const std::vector<std::uint64_t>& sizes) {
  return std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
}

AutOptions order_only() {
  AutOptions o;
  o.materialize = false;
  return o;
}

using Builder = std::function<ColoredGraph(const CyclicSpec&)>;

// Shape checks for the builders keyed by a size rather than a spec; the
// others reject unsuitable specs themselves.
const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"two_orbit_3colored",
       [](const CyclicSpec& s) {
         const auto sizes = s.orbit_sizes();
         if (sizes.size() != 2 || sizes[0] != sizes[1]) throw std::invalid_argument("shape");
         return build_two_orbit_3colored(static_cast<std::uint32_t>(sizes[0]));
       }},
      {"many_orbit_2colored",
       [](const CyclicSpec& s) {
         const auto sizes = s.orbit_sizes();
         if (!all_equal(sizes)) throw std::invalid_argument("shape");
         return build_many_orbit_2colored(static_cast<std::uint32_t>(sizes.at(0)),
                                          static_cast<std::uint32_t>(sizes.size()));
       }},
      {"prime_power_generic", build_prime_power_generic},
      {"two_nontrivial_3colored", build_two_nontrivial_3colored},
      {"small_p_many_orbits", build_small_p_many_orbits},
      {"mixed_two_power", build_mixed_two_power},
      {"order_two",
       [](const CyclicSpec& s) {
         const auto sizes = s.orbit_sizes();
         if (sizes.empty() || sizes[0] != 2) throw std::invalid_argument("shape");
         return build_order_two(static_cast<std::uint32_t>(sizes.size()));
       }},
  };
  return table;
}

}  // namespace

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::NotInGR: return "NotInGR";
    case GraphClass::GR2: return "GR2";
    case GraphClass::GR3Star: return "GR3Star";
  }
  return "?";
}

const char* to_string(LowerBound b) {
  switch (b) {
    case LowerBound::none: return "none";
    case LowerBound::exhaustive: return "exhaustive";
    case LowerBound::theorem_cited: return "theorem-cited";
  }
  return "?";
}

bool in_gr(const CyclicSpec& spec) {
  if (spec.order() == 1) return spec.degree() != 2;
  return spec.order() == 2 || count_larger_than_two(spec.orbit_sizes()) >= 2;
}

GraphClass predicted_class(const CyclicSpec& spec) {
  if (spec.order() == 1) {
    const auto q = spec.degree();
    if (q == 2) return GraphClass::NotInGR;
    return (q >= 3 && q <= 5) ? GraphClass::GR3Star : GraphClass::GR2;
  }
  if (spec.order() == 2) return GraphClass::GR2;
  const auto sizes = spec.orbit_sizes();
  if (count_larger_than_two(sizes) == 1) return GraphClass::NotInGR;
  const auto p = spec.p();
  if ((p == 3 || p == 5) && sizes.size() == 2 && sizes[1] == p) return GraphClass::GR3Star;
  if (p == 2 && sizes.back() != 2 && sizes.size() == 2 && sizes[1] == 4) return GraphClass::GR3Star;
  return GraphClass::GR2;
}

namespace {

std::string source_of(const CyclicSpec& spec) {
  if (spec.order() == 1) return "trivial group on " + std::to_string(spec.degree()) + " points";
  if (spec.order() == 2) return "order two";
  const auto sizes = spec.orbit_sizes();
  if (count_larger_than_two(sizes) == 1) {
    return spec.p() == 2 && sizes.back() == 2 ? "one orbit larger than two, plus orbits of size two"
                                              : "single orbit larger than two";
  }
  switch (predicted_class(spec)) {
    case GraphClass::GR3Star:
      return spec.p() == 2 ? "two orbits of size at least 4, one of size 4"
                           : "two orbits, one of size p in {3, 5}";
    default: return "at least two orbits larger than two";
  }
}

}  // namespace

ColoredGraph asymmetric_graph(std::size_t q, std::uint64_t seed) {
  if (q == 2) throw std::invalid_argument("asymmetric_graph: no graph on 2 vertices is asymmetric");
  if (q == 0) throw std::invalid_argument("asymmetric_graph: needs at least one vertex");
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint64_t>, ColoredGraph> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({q, seed}); it != cache.end()) return it->second;
  }
  const Color k = (q >= 3 && q <= 5) ? 3 : 2;
  std::mt19937_64 rng(seed + q);
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::optional<ColoredGraph> found;
  if (q == 1) found.emplace(1, k);
  for (int attempt = 0; !found && attempt < 100000; ++attempt) {
    std::vector<Color> colors(pair_count(q));
    for (auto& c : colors) c = static_cast<Color>(pick(rng));
    ColoredGraph g(q, k, std::move(colors));
    if (g.colors_used() != k) continue;
    if (automorphism_group(g, order_only()).order() == 1) found = std::move(g);
  }
  if (!found) throw std::runtime_error("asymmetric_graph: search exhausted");
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(q, seed), *found).first->second;
}

Witness build_witness(const CyclicSpec& spec, std::uint64_t seed) {
  if (!in_gr(spec)) throw std::invalid_argument("build_witness: " + spec.to_string() + " is not in GR");
  if (spec.order() == 1) return {asymmetric_graph(spec.degree(), seed), "asymmetric_search"};

  const CyclicSpec core = spec.without_fixed_points();
  std::optional<Witness> best;
  for (const auto& [name, build] : builders()) {
    std::optional<ColoredGraph> g;
    try {
      g = build(core);
    } catch (const std::invalid_argument&) {
      continue;
    }
    auto key = [](const ColoredGraph& h) { return std::make_tuple(h.colors_used(), h.nonzero_edges()); };
    if (!best || key(*g) < key(best->graph)) best = Witness{std::move(*g), name};
  }
  if (!best) throw std::logic_error("build_witness: no builder applies to " + spec.to_string());
  if (spec.trivial_count() > 0) {
    best->graph = append_trivial_orbits(best->graph, cyclic_group(core), spec.trivial_count());
    best->builder += "+trivial_orbits";
  }
  return *best;
}

std::size_t Verdict::colors_used() const { return witness ? witness->colors_used() : 0; }

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["spec"] = {{"p", spec.p()},
               {"orbits", spec.orbit_sizes()},
               {"fixed", spec.trivial_count()},
               {"degree", spec.degree()},
               {"order", spec.order()}};
  j["class"] = to_string(graph_class);
  j["source"] = source;
  j["builder"] = builder.empty() ? nlohmann::json(nullptr) : nlohmann::json(builder);
  j["colors_used"] = colors_used();
  j["verified"] = {{"containment", containment_verified}, {"exact", exact_verified}};
  j["certificate"] = certificate ? nlohmann::json(certificate->sigma.to_cycle_string()) : nlohmann::json(nullptr);
  if (certificate) {
    j["certificate_kind"] = to_string(certificate->kind);
    j["certificate_description"] = certificate->description;
  }
  if (graph_class == GraphClass::GR3Star) {
    j["justification"] = to_string(lower_bound);
    j["colorings_examined"] = colorings_examined;
  } else {
    j["justification"] = nullptr;
  }
  return j;
}

Verdict classify(const CyclicSpec& spec, const ClassifyOptions& options) {
  Verdict v(spec);
  v.graph_class = predicted_class(spec);
  v.source = source_of(spec);
  const PermGroup group = cyclic_group(spec);

  if (v.graph_class == GraphClass::NotInGR) {
    if (spec.order() == 1) {
      // two fixed points: the closure swaps them
      const bool larger = two_star_closure(group).order() > group.order();
      v.containment_verified = v.exact_verified = larger;
    } else {
      v.certificate = negative_certificate(spec);
      const bool ok = verify_certificate(group, v.certificate->sigma).ok();
      v.containment_verified = v.exact_verified = ok;
    }
    if (!v.exact_verified) throw std::runtime_error("classify: negative evidence failed for " + spec.to_string());
    return v;
  }

  Witness w = build_witness(spec, options.seed);
  v.builder = w.builder;
  v.witness = std::move(w.graph);
  const std::size_t allowed = v.graph_class == GraphClass::GR2 ? 2 : 3;
  if (v.witness->colors_used() > allowed) {
    throw std::logic_error("classify: witness for " + spec.to_string() + " uses too many colors");
  }

  v.containment_verified = preserves_graph(*v.witness, group);
  if (!v.containment_verified) throw std::runtime_error("classify: witness for " + spec.to_string() + " is not invariant");
  if (spec.degree() <= options.exact_cap) {
    v.exact_verified = automorphism_group(*v.witness, order_only()).order() == group.order();
    if (!v.exact_verified) throw std::runtime_error("classify: witness for " + spec.to_string() + " has extra automorphisms");
  }

  if (v.graph_class == GraphClass::GR3Star) {
    if (v.witness->colors_used() != 3) throw std::logic_error("classify: GR3Star witness must use 3 colors");
    const auto orbits = edge_orbits(group);
    const auto total = coloring_count(orbits.count(), 2);
    v.lower_bound = LowerBound::theorem_cited;
    if (total <= options.exhaustive_limit) {
      MembershipOptions mo;
      mo.budget = static_cast<std::size_t>(total) + mo.probes + 1;
      const auto report = gr_k_membership(group, 2, mo);
      if (report.status == Membership::member) {
        throw std::runtime_error("classify: " + spec.to_string() + " has a 2-colored witness");
      }
      if (report.status == Membership::not_member) v.lower_bound = LowerBound::exhaustive;
      v.colorings_examined = report.colorings_examined;
    }
  }
  return v;
}

}  // namespace cycgr
