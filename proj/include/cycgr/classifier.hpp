#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycgr/closure.hpp"
#include "cycgr/colored_graph.hpp"
#include "cycgr/constructions.hpp"
#include "cycgr/cyclic_spec.hpp"

namespace cycgr {

enum class GraphClass { NotInGR, GR2, GR3Star };
const char* to_string(GraphClass c);

/// How a GR3Star verdict shows that two colors are not enough.
enum class LowerBound {
  none,           // not a GR3Star verdict
  exhaustive,     // every 2-coloring of the edge orbits was examined
  theorem_cited,  // too many colorings to examine; stated, not checked
};
const char* to_string(LowerBound b);

struct ClassifyOptions {
  /// Witnesses up to this many vertices get a full automorphism group check;
  /// larger ones only the generator containment check.
  std::size_t exact_cap = 64;
  /// GR3Star verdicts examine all 2-colorings when there are at most this many.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
  /// Seed for the asymmetric-graph search behind trivial groups.
  std::uint64_t seed = 0x5eed;
};

struct Verdict {
  explicit Verdict(CyclicSpec s) : spec(std::move(s)) {}

  CyclicSpec spec;
  GraphClass graph_class = GraphClass::NotInGR;
  /// Which case of the classification decided the answer.
  std::string source;

  /// GR2 / GR3Star: the witness and the builder that produced it.
  std::optional<ColoredGraph> witness;
  std::string builder;

  /// NotInGR with a non-trivial group.
  std::optional<Certificate> certificate;

  /// Witness: generators preserve it / its full group is the target.
  /// NotInGR: the certificate (or the closure, for two fixed points)
  /// passed its checks; both flags agree.
  bool containment_verified = false;
  bool exact_verified = false;

  LowerBound lower_bound = LowerBound::none;
  std::size_t colorings_examined = 0;

  std::size_t colors_used() const;
  /// {spec, class, source, colors_used, verified, certificate, ...}
  nlohmann::json to_json() const;
};

/// Class predicted by the case analysis, with no evidence attached.
GraphClass predicted_class(const CyclicSpec& spec);

/// Predicted class plus verified evidence. Deterministic.
///
/// Throws std::runtime_error when a produced witness or certificate fails
/// verification; nothing unverified is returned without its flag unset.
Verdict classify(const CyclicSpec& spec, const ClassifyOptions& options = {});

/// At least two orbits of size > 2, or order two. Trivial groups: every
/// degree except 2.
bool in_gr(const CyclicSpec& spec);

/// Witness for a spec in GR: candidate builders are tried and the one with
/// the fewest colors, then fewest non-zero edges, wins. Fixed points are
/// attached with append_trivial_orbits. Unverified. Throws
/// std::invalid_argument for specs outside GR.
struct Witness {
  ColoredGraph graph;
  std::string builder;
};
Witness build_witness(const CyclicSpec& spec, std::uint64_t seed = 0x5eed);

/// A graph on q vertices with no automorphism but the identity, using
/// 3 colors for q in {3, 4, 5} and at most 2 otherwise. Found by seeded
/// random search; results are cached per (q, seed). Throws for q = 2.
ColoredGraph asymmetric_graph(std::size_t q, std::uint64_t seed = 0x5eed);

}  // namespace cycgr
