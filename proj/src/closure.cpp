#include "cycgr/closure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cycgr/autsearch.hpp"

namespace cycgr {

EdgeOrbitPartition edge_orbits(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n < 2) throw std::invalid_argument("edge orbits need at least two points");
  const std::size_t pairs = pair_count(n);

  std::vector<std::uint32_t> parent(pairs);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : group.generators()) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        auto a = find(static_cast<std::uint32_t>(pair_index(n, u, v)));
        auto b = find(static_cast<std::uint32_t>(pair_index(n, g(u), g(v))));
        // Keep the smaller index as root so roots are orbit minima.
        if (a < b) parent[b] = a;
        else if (b < a) parent[a] = b;
      }
    }
  }

  EdgeOrbitPartition out;
  out.n = n;
  out.orbit_of.assign(pairs, 0);
  std::vector<std::uint32_t> id_of_root(pairs, std::numeric_limits<std::uint32_t>::max());
  std::size_t p = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++p) {
      const auto root = find(static_cast<std::uint32_t>(p));
      if (id_of_root[root] == std::numeric_limits<std::uint32_t>::max()) {
        id_of_root[root] = static_cast<std::uint32_t>(out.representatives.size());
        out.representatives.emplace_back(u, v);
        out.sizes.push_back(0);
      }
      out.orbit_of[p] = id_of_root[root];
      ++out.sizes[id_of_root[root]];
    }
  }
  return out;
}

ColoredGraph coloring_graph(const EdgeOrbitPartition& orbits, std::span<const Color> coloring) {
  if (coloring.size() != orbits.count()) {
    throw std::invalid_argument("coloring length does not match the edge orbit count");
  }
  Color top = 0;
  for (Color c : coloring) top = std::max(top, c);
  std::vector<Color> colors(orbits.orbit_of.size());
  for (std::size_t p = 0; p < colors.size(); ++p) colors[p] = coloring[orbits.orbit_of[p]];
  return ColoredGraph(orbits.n, static_cast<Color>(top + 1), std::move(colors));
}

PermGroup two_star_closure(const PermGroup& group) {
  const auto orbits = edge_orbits(group);
  if (orbits.count() > std::numeric_limits<Color>::max()) {
    throw std::invalid_argument("too many edge orbits for the color type");
  }
  std::vector<Color> distinct(orbits.count());
  std::iota(distinct.begin(), distinct.end(), Color{0});
  return automorphism_group(coloring_graph(orbits, distinct));
}

std::size_t for_each_coloring(std::size_t m, std::size_t k,
                              const std::function<bool(std::span<const Color>)>& visit) {
  if (m == 0 || k == 0) return 0;
  std::vector<Color> c(m, 0);
  std::vector<Color> prefix_max(m, 0);  // largest color among c[0..i]
  std::size_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(c)) return visited;
    // Increment the rightmost position that can still grow.
    std::size_t i = m - 1;
    while (i > 0) {
      const Color limit = static_cast<Color>(std::min<std::size_t>(prefix_max[i - 1] + 1, k - 1));
      if (c[i] < limit) break;
      --i;
    }
    if (i == 0) return visited;
    ++c[i];
    prefix_max[i] = std::max(prefix_max[i - 1], c[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      c[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::uint64_t coloring_count(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0) return 0;
  // Stirling numbers of the second kind, row by row.
  std::vector<GroupOrder> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = row[j] * j + row[j - 1];
    row[0] = 0;
  }
  GroupOrder total = 0;
  for (std::size_t j = 1; j <= k; ++j) total += row[j];
  if (total > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::not_member: return "not_member";
    case Membership::inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json MembershipReport::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["k"] = k;
  j["status"] = to_string(status);
  j["edge_orbits"] = edge_orbit_count;
  j["colorings_total"] = colorings_total;
  j["colorings_examined"] = colorings_examined;
  j["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
  auto extra = nlohmann::json::array();
  for (const auto& g : extra_automorphisms) extra.push_back(g.to_cycle_string());
  j["extra_automorphisms"] = std::move(extra);
  return j;
}

namespace {

// A known automorphism outside the group, reduced to the orbit pairs it
// identifies: it preserves a coloring iff c[a] == c[b] for every (a, b).
struct Blocker {
  Permutation sigma;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> links;

  bool preserves(std::span<const Color> c) const {
    return std::all_of(links.begin(), links.end(),
                       [&](const auto& l) { return c[l.first] == c[l.second]; });
  }
};

Blocker make_blocker(const EdgeOrbitPartition& orbits, Permutation sigma) {
  Blocker b{std::move(sigma), {}};
  const std::size_t n = orbits.n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      auto a = orbits.orbit(u, v);
      auto c = orbits.orbit(b.sigma(u), b.sigma(v));
      if (a != c) b.links.emplace_back(std::min(a, c), std::max(a, c));
    }
  }
  std::sort(b.links.begin(), b.links.end());
  b.links.erase(std::unique(b.links.begin(), b.links.end()), b.links.end());
  return b;
}

struct Outcome {
  bool skipped = false;  // preserved by a blocker known at evaluation time
  bool member = false;
  std::optional<Permutation> extra;
};

class MembershipSearch {
 public:
  MembershipSearch(const PermGroup& group, std::size_t k, const MembershipOptions& options)
      : group_(group.materialized()), k_(k), options_(options), orbits_(edge_orbits(group)) {}

  MembershipReport run() {
    MembershipReport report;
    report.k = k_;
    report.edge_orbit_count = orbits_.count();
    report.colorings_total = coloring_count(orbits_.count(), k_);

    std::vector<std::vector<Color>> pending;
    auto flush = [&] {
      if (!pending.empty()) process(pending, report);
      pending.clear();
      return !report.witness.has_value();
    };
    const std::size_t batch = options_.execution == Execution::parallel ? 256 : 1;

    if (report.colorings_total > 4 * options_.probes) {
      std::mt19937_64 rng(options_.seed);
      for (std::size_t i = 0; i < options_.probes; ++i) {
        pending.push_back(random_coloring(rng));
        if (pending.size() == batch && !flush()) break;
      }
      flush();
    }

    std::size_t exhaustive = 0;
    if (!report.witness) {
      for_each_coloring(orbits_.count(), k_, [&](std::span<const Color> c) {
        if (exhaustive == options_.budget) return false;
        ++exhaustive;
        pending.emplace_back(c.begin(), c.end());
        return pending.size() < batch || flush();
      });
      flush();
    }

    if (report.witness) {
      report.status = Membership::member;
    } else if (exhaustive >= report.colorings_total) {
      report.status = Membership::not_member;
      for (const auto& b : blockers_) report.extra_automorphisms.push_back(b.sigma);
    } else {
      report.status = Membership::inconclusive;
    }
    return report;
  }

 private:
  std::vector<Color> random_coloring(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, k_ - 1);
    std::vector<Color> raw(orbits_.count());
    for (auto& c : raw) c = static_cast<Color>(pick(rng));
    // Rename colors by first occurrence.
    std::vector<int> rename(k_, -1);
    int next = 0;
    for (auto& c : raw) {
      if (rename[c] < 0) rename[c] = next++;
      c = static_cast<Color>(rename[c]);
    }
    return raw;
  }

  bool blocked(std::span<const Color> c, std::size_t known) const {
    for (std::size_t i = 0; i < known; ++i) {
      if (blockers_[i].preserves(c)) return true;
    }
    return false;
  }

  Outcome evaluate(std::span<const Color> c, std::size_t known) const {
    Outcome out;
    if (blocked(c, known)) {
      out.skipped = true;
      return out;
    }
    AutOptions aut_options;
    aut_options.materialize = false;
    const PermGroup aut = automorphism_group(coloring_graph(orbits_, c), aut_options);
    if (aut.order() == group_.order()) {
      out.member = true;
      return out;
    }
    for (const auto& g : aut.generators()) {
      if (!contains(group_, g)) {
        out.extra = g;
        return out;
      }
    }
    throw std::logic_error("automorphism group larger than the group but no generator outside it");
  }

  // Evaluates a batch against the blockers known at its start, then replays
  // it in order exactly as a one-at-a-time scan would.
  void process(const std::vector<std::vector<Color>>& batch, MembershipReport& report) {
    const std::size_t known = blockers_.size();
    std::vector<Outcome> outcomes(batch.size());
    if (options_.execution == Execution::parallel && batch.size() > 1) {
      const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < count; ++i) {
        outcomes[static_cast<std::size_t>(i)] = evaluate(batch[static_cast<std::size_t>(i)], known);
      }
    } else {
      for (std::size_t i = 0; i < batch.size(); ++i) outcomes[i] = evaluate(batch[i], known);
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++report.colorings_examined;
      if (outcomes[i].skipped || blocked(batch[i], blockers_.size())) continue;
      if (outcomes[i].member) {
        report.witness = batch[i];
        return;
      }
      blockers_.push_back(make_blocker(orbits_, std::move(*outcomes[i].extra)));
    }
  }

  const PermGroup group_;
  const std::size_t k_;
  const MembershipOptions options_;
  const EdgeOrbitPartition orbits_;
  std::vector<Blocker> blockers_;
};

std::string describe(const PermGroup& group) {
  return "degree " + std::to_string(group.degree()) + " order " + group.order().str();
}

}  // namespace

MembershipReport gr_k_membership(const PermGroup& group, std::size_t k,
                                 const MembershipOptions& options) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > std::numeric_limits<Color>::max()) throw std::invalid_argument("k too large");
  MembershipReport report = MembershipSearch(group, k, options).run();
  report.group = describe(group);
  return report;
}

MinColorsResult min_colors(const PermGroup& group, std::size_t k_max,
                           const MembershipOptions& options) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  MinColorsResult result;
  if (two_star_closure(group).order() != group.order()) {
    result.kind = MinColorsResult::Kind::not_in_gr;
    return result;
  }
  for (std::size_t k = 2; k <= k_max; ++k) {
    result.k = k;
    result.reports.push_back(gr_k_membership(group, k, options));
    const auto status = result.reports.back().status;
    if (status == Membership::member) {
      result.kind = MinColorsResult::Kind::colors;
      return result;
    }
    if (status == Membership::inconclusive) {
      result.kind = MinColorsResult::Kind::inconclusive;
      return result;
    }
  }
  result.kind = MinColorsResult::Kind::above_limit;
  return result;
}

}  // namespace cycgr
