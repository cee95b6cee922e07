#include "cycgr/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cycgr/autsearch.hpp"
#include "cycgr/classifier.hpp"
#include "cycgr/closure.hpp"
#include "cycgr/constructions.hpp"
#include "cycgr/graph_io.hpp"

namespace cycgr::cli {

namespace {

namespace fs = std::filesystem;

struct SpecArgs {
  std::uint32_t p = 0;
  std::vector<std::uint64_t> orbits;
  std::uint32_t fixed = 0;

  CyclicSpec spec() const { return CyclicSpec::from_orbit_sizes(p, orbits, fixed); }
};

void add_spec_options(CLI::App* sub, SpecArgs& args) {
  sub->add_option("--p", args.p, "prime")->required();
  sub->add_option("--orbits", args.orbits, "non-trivial orbit sizes, comma separated")->delimiter(',');
  sub->add_option("--fixed", args.fixed, "number of fixed points");
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

AutOptions order_only() {
  AutOptions o;
  o.materialize = false;
  return o;
}

int do_classify(const SpecArgs& args, bool compact, const std::string& evidence, std::uint64_t seed,
                std::ostream& out) {
  ClassifyOptions options;
  options.seed = seed;
  const auto verdict = classify(args.spec(), options);
  const auto j = verdict.to_json();
  out << (compact ? j.dump() : j.dump(2)) << "\n";
  if (!evidence.empty()) {
    const fs::path dir(evidence);
    fs::create_directories(dir);
    write_text(dir / "verdict.json", j.dump(2) + "\n");
    if (verdict.witness) {
      write_graph_file(dir / "witness.json", *verdict.witness);
      write_text(dir / "witness.dot", to_dot(*verdict.witness, OrbitLayout(verdict.spec)));
    }
    if (verdict.certificate) write_text(dir / "certificate.txt", verdict.certificate->sigma.to_cycle_string() + "\n");
  }
  return kExitOk;
}

int do_construct(const SpecArgs& args, const std::string& out_path, const std::string& dot_path, bool verify,
                 std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const auto spec = args.spec();
  if (!in_gr(spec)) {
    err << "error: " << spec.to_string() << " is not in GR, no witness exists (classify gives a certificate)\n";
    return kExitFailure;
  }
  const auto w = build_witness(spec, seed);
  std::ostream& info = out_path.empty() ? err : out;
  if (out_path.empty()) {
    out << serialize_graph(w.graph);
  } else {
    write_graph_file(out_path, w.graph);
  }
  if (!dot_path.empty()) write_text(dot_path, to_dot(w.graph, OrbitLayout(spec)));
  info << "n=" << w.graph.n() << " k=" << w.graph.k() << " colors_used=" << w.graph.colors_used()
       << " builder=" << w.builder << "\n";
  if (verify) {
    const auto group = cyclic_group(spec);
    if (!preserves_graph(w.graph, group)) {
      err << "verification failed: the group does not preserve the graph\n";
      return kExitFailure;
    }
    const auto aut = automorphism_group(w.graph, order_only());
    if (aut.order() != group.order()) {
      err << "verification failed: Aut has order " << aut.order() << ", expected " << group.order() << "\n";
      return kExitFailure;
    }
    info << "verified: Aut = A, order " << aut.order() << "\n";
  }
  return kExitOk;
}

int do_aut(const std::string& path, bool bruteforce, std::ostream& out) {
  const auto g = read_graph_file(path);
  const auto group = bruteforce ? automorphism_group_bruteforce(g) : automorphism_group(g, order_only());
  out << "n " << g.n() << "\n";
  out << "k " << g.k() << "\n";
  out << "order " << group.order() << "\n";
  out << "generators " << group.generators().size() << "\n";
  for (const auto& gen : group.generators()) out << gen.to_cycle_string() << "\n";
  return kExitOk;
}

int do_closure(const SpecArgs& args, std::ostream& out) {
  const auto spec = args.spec();
  if (spec.degree() < 2) throw std::invalid_argument("closure needs at least two points");
  const auto group = cyclic_group(spec);
  const auto closure = two_star_closure(group);
  const bool closed = closure.order() == group.order();
  out << "group " << spec.to_string() << "\n";
  out << "degree " << spec.degree() << "\n";
  out << "order " << group.order() << "\n";
  out << "edge_orbits " << edge_orbits(group).count() << "\n";
  out << "closure_order " << closure.order() << "\n";
  out << "2*-closed " << (closed ? "yes" : "no") << "\n";
  out << "in_gr " << (closed ? "yes" : "no") << "\n";
  return kExitOk;
}

int do_oracle(const SpecArgs& args, std::size_t k, std::size_t budget, bool parallel, std::uint64_t seed,
              std::ostream& out) {
  const auto spec = args.spec();
  if (spec.degree() < 2) throw std::invalid_argument("oracle needs at least two points");
  if (k < 1) throw std::invalid_argument("--max-colors must be at least 1");
  MembershipOptions options;
  options.budget = budget;
  options.seed = seed;
  options.execution = parallel ? Execution::parallel : Execution::serial;
  auto report = gr_k_membership(cyclic_group(spec), k, options);
  report.group = spec.to_string();
  out << report.to_json().dump(2) << "\n";
  return kExitOk;
}

int do_verify_all(bool serial, std::ostream& out) {
  const auto table = verification_table(serial ? Execution::serial : Execution::parallel);
  std::size_t width = 0;
  for (const auto& e : table) width = std::max(width, e.name.size());
  std::size_t passed = 0;
  for (const auto& e : table) {
    out << (e.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << e.name << "  "
        << e.detail << "\n";
    if (e.passed) ++passed;
  }
  out << passed << " of " << table.size() << " checks passed\n";
  return passed == table.size() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphical complexity of cyclic permutation groups of prime power order", "cycgr"};
  app.require_subcommand(1);
  std::uint64_t seed = 0x5eed;
  app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();

  SpecArgs classify_args;
  bool compact = false;
  std::string evidence;
  auto* classify_cmd = app.add_subcommand("classify", "verdict with verified evidence, as JSON");
  add_spec_options(classify_cmd, classify_args);
  classify_cmd->add_flag("--json", compact, "single-line JSON");
  classify_cmd->add_option("--evidence", evidence, "directory for the witness or certificate files");

  SpecArgs construct_args;
  std::string out_path, dot_path;
  bool verify = false;
  auto* construct_cmd = app.add_subcommand("construct", "build the witness graph");
  add_spec_options(construct_cmd, construct_args);
  construct_cmd->add_option("--out", out_path, "graph JSON file (stdout if omitted)");
  construct_cmd->add_option("--dot", dot_path, "DOT file");
  construct_cmd->add_flag("--verify", verify, "check Aut(graph) = A, exit 1 on mismatch");

  std::string graph_path;
  bool bruteforce = false;
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a graph file");
  aut_cmd->add_option("graph", graph_path, "graph JSON file")->required();
  aut_cmd->add_flag("--bruteforce", bruteforce, "use the brute-force engine (small n only)");

  SpecArgs closure_args;
  auto* closure_cmd = app.add_subcommand("closure", "2*-closure order and verdict");
  add_spec_options(closure_cmd, closure_args);

  SpecArgs oracle_args;
  std::size_t max_colors = 2;
  std::size_t budget = MembershipOptions{}.budget;
  bool parallel = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "search colorings of the edge orbits");
  add_spec_options(oracle_cmd, oracle_args);
  oracle_cmd->add_option("--max-colors", max_colors, "number of colors k")->required();
  oracle_cmd->add_option("--budget", budget, "colorings examined before giving up")->capture_default_str();
  oracle_cmd->add_flag("--parallel", parallel, "use the OpenMP kernel");

  bool serial = false;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the built-in check table");
  verify_cmd->add_flag("--serial", serial, "one check at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return do_classify(classify_args, compact, evidence, seed, out);
    if (*construct_cmd) return do_construct(construct_args, out_path, dot_path, verify, seed, out, err);
    if (*aut_cmd) return do_aut(graph_path, bruteforce, out);
    if (*closure_cmd) return do_closure(closure_args, out);
    if (*oracle_cmd) return do_oracle(oracle_args, max_colors, budget, parallel, seed, out);
    if (*verify_cmd) return do_verify_all(serial, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  argv.push_back(nullptr);
  return run(static_cast<int>(args.size()), argv.data(), out, err);
}

// ---------------------------------------------------------------------------
// verify-all

namespace {

struct Check {
  std::string name;
  std::function<std::string()> body;  // detail on success; throws on failure
};

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

CyclicSpec spec_of(std::uint32_t p, std::vector<std::uint64_t> sizes, std::uint32_t fixed = 0) {
  return CyclicSpec::from_orbit_sizes(p, sizes, fixed);
}

std::string order_str(const PermGroup& g) {
  std::ostringstream os;
  os << g.order();
  return os.str();
}

Check exact_witness(std::string name, CyclicSpec spec, std::function<ColoredGraph()> build, std::size_t n) {
  return {std::move(name), [spec = std::move(spec), build = std::move(build), n] {
            const auto g = build();
            const auto target = cyclic_group(spec);
            expect(g.n() == n, "expected " + std::to_string(n) + " vertices, got " + std::to_string(g.n()));
            expect(preserves_graph(g, target), "the group does not preserve the graph");
            const auto aut = automorphism_group(g);
            expect(group_equals(aut, target), "Aut has order " + order_str(aut));
            return std::to_string(n) + " vertices, Aut = A of order " + order_str(aut);
          }};
}

Check class_check(CyclicSpec spec, GraphClass expected) {
  return {"classify " + spec.to_string(), [spec, expected] {
            const auto v = classify(spec);
            expect(v.graph_class == expected, std::string("got ") + to_string(v.graph_class));
            expect(v.exact_verified, "evidence not verified");
            return std::string(to_string(v.graph_class)) + " via " + (v.builder.empty() ? "certificate" : v.builder);
          }};
}

Check in_gr_check(CyclicSpec spec, bool expected) {
  return {"in_gr " + spec.to_string(), [spec, expected] {
            expect(in_gr(spec) == expected, "wrong answer");
            expect((classify(spec).graph_class != GraphClass::NotInGR) == expected, "classify disagrees");
            return std::string(expected ? "true" : "false");
          }};
}

Check cert_check(std::string name, CyclicSpec spec, Permutation expected, CertificateKind kind) {
  return {std::move(name), [spec, expected, kind] {
            const auto cert = negative_certificate(spec);
            expect(cert.sigma == expected, "got " + cert.sigma.to_cycle_string());
            expect(cert.kind == kind, "wrong kind");
            expect(verify_certificate(cyclic_group(spec), cert.sigma).ok(), "fails orbit checks");
            return cert.sigma.to_cycle_string() + ", stabilizes all orbits, outside A";
          }};
}

std::string run_captured(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run(args, out, err);
  return out.str() + err.str();
}

fs::path scratch_dir(const std::string& tag) {
  auto dir = fs::temp_directory_path() / ("cycgr-verify-" + std::to_string(::getpid()) + "-" + tag);
  fs::create_directories(dir);
  return dir;
}

std::vector<Check> checks() {
  const auto triangles = [] { return build_two_orbit_3colored(3); };
  const auto c3x2 = [] { return cyclic_group(spec_of(3, {3, 3})); };
  std::vector<Check> t;

  // groups and graphs
  t.push_back({"direct sum of two one-point trivial groups", [] {
                 const auto s = direct_sum(PermGroup::trivial(1), PermGroup::trivial(1));
                 expect(s.degree() == 2 && s.order() == 1, "wrong degree or order");
                 return std::string("degree 2, order 1");
               }});
  t.push_back({"two-orbit reflection lies outside C_3^(2)", [c3x2] {
                 expect(!contains(c3x2(), Permutation::from_cycles(6, {{1, 2}, {4, 5}})), "it is inside");
                 return std::string("(1 2)(4 5) not in group");
               }});
  t.push_back({"triangles graph: edge colors", [triangles] {
                 const auto g = triangles();
                 expect(edge_color(g, 0, 4) == 2, "E(v0,w1) != 2");
                 expect(edge_color(g, 0, 3) == 1, "E(v0,w0) != 1");
                 expect(edge_color(g, 2, 3) == 2, "E(v2,w0) != 2");
                 return std::string("E(v0,w1)=2 E(v0,w0)=1 E(v2,w0)=2");
               }});
  t.push_back({"triangles graph: 1-degrees", [triangles] {
                 const auto g = triangles();
                 for (Vertex v = 0; v < 3; ++v) expect(i_degree(g, v, 1) == 3, "O_1 vertex 1-degree != 3");
                 for (Vertex v = 3; v < 6; ++v) expect(i_degree(g, v, 1) == 1, "O_2 vertex 1-degree != 1");
                 return std::string("3 on O_1, 1 on O_2");
               }});
  t.push_back({"triangles graph: O_1 spans a color-1 triangle", [triangles] {
                 const std::vector<Vertex> o1{0, 1, 2};
                 const auto s = spanned_subgraph(triangles(), o1);
                 expect(s.color(0, 1) == 1 && s.color(1, 2) == 1 && s.color(0, 2) == 1, "not a triangle");
                 return std::string("3-cycle");
               }});
  t.push_back({"three triangles graph: O_1 spans a color-1 3-cycle", [] {
                 const std::vector<Vertex> o1{0, 1, 2};
                 const auto s = spanned_subgraph(build_many_orbit_2colored(3, 3), o1);
                 expect(s.color(0, 1) == 1 && s.color(1, 2) == 1 && s.color(0, 2) == 1, "not a cycle");
                 return std::string("3-cycle");
               }});
  t.push_back({"triangles graph: generator kept, reflection not", [triangles] {
                 const auto g = triangles();
                 expect(is_automorphism(g, cyclic_generator(spec_of(3, {3, 3}))), "generator rejected");
                 expect(!is_automorphism(g, Permutation::from_cycles(6, {{1, 2}, {4, 5}})), "reflection kept");
                 return std::string("w_1 is a 2-neighbor of v_0, w_2 is not");
               }});
  t.push_back({"5-cycle has the dihedral group", [] {
                 GraphBuilder b(5, 2);
                 for (Vertex i = 0; i < 5; ++i) b.set(i, (i + 1) % 5, 1);
                 const auto aut = automorphism_group(b.build());
                 expect(group_equals(aut, dihedral_group(5)), "order " + order_str(aut));
                 return std::string("D_5, order 10");
               }});
  t.push_back(exact_witness("triangles graph realizes C_3^(2)", spec_of(3, {3, 3}), triangles, 6));
  t.push_back(exact_witness("three triangles graph realizes C_3^(3)", spec_of(3, {3, 3, 3}),
                            [] { return build_many_orbit_2colored(3, 3); }, 9));
  t.push_back(exact_witness("mixed graph (4,4,2) realizes its group", spec_of(2, {4, 4, 2}),
                            [] { return build_mixed_two_power(spec_of(2, {4, 4, 2})); }, 10));
  t.push_back(exact_witness("generic graph (7,7) realizes C_7^(2)", spec_of(7, {7, 7}),
                            [] { return build_prime_power_generic(spec_of(7, {7, 7})); }, 14));
  t.push_back({"trivial stabilizers of v_0: triangles and three triangles graphs", [triangles] {
                 const auto g1 = triangles();
                 const auto g2 = build_many_orbit_2colored(3, 3);
                 expect(stabilizer_is_trivial(g1, 0, automorphism_group(g1)), "triangles graph");
                 expect(stabilizer_is_trivial(g2, 0, automorphism_group(g2)), "three triangles graph");
                 return std::string("both trivial");
               }});

  // degree counts
  t.push_back({"1-degree 5 on O_1: three triangles, (7,7), mixed (4,4,2)", [] {
                 const auto a = build_many_orbit_2colored(3, 3);
                 const auto b = build_prime_power_generic(spec_of(7, {7, 7}));
                 const auto c = build_mixed_two_power(spec_of(2, {4, 4, 2}));
                 for (Vertex v = 0; v < 3; ++v) expect(i_degree(a, v, 1) == 5, "three triangles");
                 for (Vertex v = 0; v < 7; ++v) expect(i_degree(b, v, 1) == 5, "(7,7)");
                 for (Vertex v = 0; v < 4; ++v) expect(i_degree(c, v, 1) == 5, "mixed");
                 return std::string("all 5");
               }});
  t.push_back({"two orbit sizes (9,3): 2-neighbor counts separate the orbits", [] {
                 const auto g = build_two_nontrivial_3colored(spec_of(3, {9, 3}));
                 for (Vertex v = 0; v < 9; ++v) expect(i_degree(g, v, 2) == 1, "O_1 vertex");
                 for (Vertex v = 9; v < 12; ++v) expect(i_degree(g, v, 2) == 3, "O_2 vertex");
                 return std::string("O_1: 1, O_2: 3");
               }});
  t.push_back({"small prime, orbits (9,3,3): O_2 1-degree 7", [] {
                 const auto g = build_small_p_many_orbits(spec_of(3, {9, 3, 3}));
                 for (Vertex v = 9; v < 12; ++v) expect(i_degree(g, v, 1) == 7, "got " + std::to_string(i_degree(g, v, 1)));
                 return std::string("2*9/3+1 = 7");
               }});

  // closure and oracle
  t.push_back({"edge orbits of C_3^(2)", [c3x2] {
                 const auto n = edge_orbits(c3x2()).count();
                 expect(n == 5, "got " + std::to_string(n));
                 return std::string("5");
               }});
  t.push_back({"closure of C_3 is S_3", [] {
                 const auto c = two_star_closure(cyclic_group(spec_of(3, {3})));
                 expect(group_equals(c, symmetric_group(3)), "order " + order_str(c));
                 return std::string("order 6");
               }});
  t.push_back({"C_7^(2) is 2*-closed", [] {
                 const auto g = cyclic_group(spec_of(7, {7, 7}));
                 expect(group_equals(two_star_closure(g), g), "closure larger");
                 return std::string("closure = group");
               }});
  t.push_back({"C_3^(2): no 2-coloring, every class keeps the reflection", [c3x2] {
                 const auto report = gr_k_membership(c3x2(), 2);
                 expect(report.status == Membership::not_member, to_string(report.status));
                 const auto sigma = Permutation::from_cycles(6, {{1, 2}, {4, 5}});
                 for (std::uint32_t c = 1; c <= 2; ++c) {
                   expect(is_automorphism(mixed_class_representative(3, c), sigma), "class " + std::to_string(c));
                 }
                 return std::to_string(report.colorings_examined) + " colorings examined";
               }});
  t.push_back({"C_3^(2): a 3-coloring works, the triangles graph among them", [c3x2, triangles] {
                 const auto report = gr_k_membership(c3x2(), 3);
                 expect(report.status == Membership::member, to_string(report.status));
                 const auto g = triangles();
                 expect(automorphism_group(g).order() == 3 && preserves_graph(g, c3x2()), "triangles graph");
                 return std::string("member");
               }});
  t.push_back({"C_4^(2): no 2-coloring; class 3 needs the shifted certificate", [] {
                 const auto report = gr_k_membership(cyclic_group(spec_of(2, {4, 4})), 2);
                 expect(report.status == Membership::not_member, to_string(report.status));
                 const auto plain = Permutation::from_cycles(8, {{1, 3}, {5, 7}});
                 for (std::uint32_t c = 1; c <= 4; ++c) {
                   const auto rep = mixed_class_representative(4, c);
                   expect(is_automorphism(rep, plain) == (c != 3), "plain reflection, class " + std::to_string(c));
                   expect(is_automorphism(rep, two_orbit_certificate(4, c).sigma), "class " + std::to_string(c));
                 }
                 return std::string("classes 1,2,4 keep v_i->v_-i w_j->w_-j; class 3 keeps w_j->w_{1-j}");
               }});
  t.push_back({"least number of colors", [] {
                 const auto a = min_colors(cyclic_group(spec_of(3, {3, 3})), 3);
                 const auto b = min_colors(cyclic_group(spec_of(7, {7, 7})), 3);
                 const auto c = min_colors(cyclic_group(spec_of(5, {5})), 3);
                 expect(a.kind == MinColorsResult::Kind::colors && a.k == 3, "C_3^(2)");
                 expect(b.kind == MinColorsResult::Kind::colors && b.k == 2, "C_7^(2)");
                 expect(c.kind == MinColorsResult::Kind::not_in_gr, "C_5");
                 return std::string("C_3^(2): 3, C_7^(2): 2, C_5: not in GR");
               }});

  // certificates
  t.push_back(cert_check("certificate C_5", spec_of(5, {5}), Permutation::from_cycles(5, {{1, 4}, {2, 3}}),
                         CertificateKind::reflection_all_orbits));
  t.push_back(cert_check("certificate p=2 (4,2)", spec_of(2, {4, 2}),
                         Permutation::from_cycles(6, {{0, 3}, {1, 2}, {4, 5}}), CertificateKind::reflection_all_orbits));
  t.push_back(cert_check("certificate C_3 + 2 fixed points", spec_of(3, {3}, 2),
                         Permutation::from_cycles(5, {{1, 2}}), CertificateKind::lifted));
  t.push_back({"two-orbit certificate n=3 class 1", [] {
                 const auto cert = two_orbit_certificate(3, 1);
                 expect(cert.sigma == Permutation::from_cycles(6, {{1, 2}, {4, 5}}), cert.sigma.to_cycle_string());
                 expect(is_automorphism(mixed_class_representative(3, 1), cert.sigma), "class not kept");
                 return cert.sigma.to_cycle_string();
               }});
  t.push_back({"two-orbit certificate n=4 class 3", [] {
                 const auto cert = two_orbit_certificate(4, 3);
                 const auto rep = mixed_class_representative(4, 3);
                 const auto group = cyclic_group(spec_of(2, {4, 4}));
                 expect(is_automorphism(rep, cert.sigma) && !contains(group, cert.sigma), "corrected certificate");
                 const auto swap_pairs = Permutation::from_cycles(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
                 expect(!is_automorphism(rep, swap_pairs), "adjacent-pair swap keeps the class");
                 return cert.sigma.to_cycle_string() + " (the adjacent-pair swap does not keep D={2,3})";
               }});
  t.push_back({"two-orbit certificate n=5 class 2", [] {
                 const auto cert = two_orbit_certificate(5, 2);
                 expect(cert.sigma == Permutation::from_cycles(10, {{1, 4}, {2, 3}, {6, 9}, {7, 8}}),
                        cert.sigma.to_cycle_string());
                 expect(is_automorphism(mixed_class_representative(5, 2), cert.sigma), "class not kept");
                 return cert.sigma.to_cycle_string();
               }});

  // classification
  t.push_back(class_check(spec_of(3, {3}), GraphClass::NotInGR));
  t.push_back(class_check(spec_of(3, {3, 3}), GraphClass::GR3Star));
  t.push_back(class_check(spec_of(7, {7, 7}), GraphClass::GR2));
  t.push_back(class_check(spec_of(5, {25, 5}), GraphClass::GR3Star));
  t.push_back(class_check(spec_of(3, {9, 9}), GraphClass::GR2));
  t.push_back(class_check(spec_of(2, {4}), GraphClass::NotInGR));
  t.push_back(class_check(spec_of(2, {8, 4}), GraphClass::GR3Star));
  t.push_back(class_check(spec_of(2, {4, 2, 2}), GraphClass::NotInGR));
  t.push_back(class_check(spec_of(2, {8, 4, 2}), GraphClass::GR2));
  t.push_back(class_check(spec_of(3, {3}, 2), GraphClass::NotInGR));
  t.push_back(class_check(spec_of(2, {2}), GraphClass::GR2));
  t.push_back(in_gr_check(spec_of(2, {2, 2, 2}), true));
  t.push_back(in_gr_check(spec_of(5, {5}), false));
  t.push_back(in_gr_check(spec_of(2, {4, 4, 2}), true));

  // command line
  t.push_back({"cli: classify --p 3 --orbits 3,3", [] {
                 int code = 0;
                 const auto text = run_captured({"cycgr", "classify", "--p", "3", "--orbits", "3,3"}, code);
                 expect(code == kExitOk, "exit " + std::to_string(code));
                 expect(nlohmann::json::parse(text)["class"] == "GR3Star", "class");
                 return std::string("GR3Star");
               }});
  t.push_back({"cli: construct --p 3 --orbits 3,3 --verify", [] {
                 const auto file = scratch_dir("construct") / "g.json";
                 int code = 0;
                 run_captured({"cycgr", "construct", "--p", "3", "--orbits", "3,3", "--out", file.string(), "--verify"},
                              code);
                 expect(code == kExitOk, "exit " + std::to_string(code));
                 const auto g = read_graph_file(file);
                 fs::remove_all(file.parent_path());
                 expect(g.n() == 6 && g.k() == 3, "n or k");
                 return std::string("n=6 k=3");
               }});
  t.push_back({"cli: aut of monochromatic K_4", [] {
                 const auto file = scratch_dir("aut") / "k4.json";
                 GraphBuilder b(4, 2);
                 for (Vertex u = 0; u < 4; ++u) {
                   for (Vertex v = u + 1; v < 4; ++v) b.set(u, v, 1);
                 }
                 write_graph_file(file, b.build());
                 int code = 0;
                 const auto text = run_captured({"cycgr", "aut", file.string()}, code);
                 fs::remove_all(file.parent_path());
                 expect(code == kExitOk, "exit " + std::to_string(code));
                 expect(text.find("order 24\n") != std::string::npos, text);
                 return std::string("order 24");
               }});
  return t;
}

}  // namespace

std::vector<TableEntry> verification_table(Execution exec) {
  const auto table = checks();
  std::vector<TableEntry> results(table.size());
  const auto n = static_cast<std::int64_t>(table.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& r = results[i];
    r.name = table[i].name;
    try {
      r.detail = table[i].body();
      r.passed = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
  }
  return results;
}

}  // namespace cycgr::cli
