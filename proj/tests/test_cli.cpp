#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cycgr/cli.hpp"
#include "cycgr/graph_io.hpp"

using namespace cycgr;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cycgr");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("cycgr-test-" + std::to_string(::getpid()) + "-" + tag)) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("classify prints the verdict") {
  auto r = invoke({"classify", "--p", "3", "--orbits", "3,3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["class"] == "GR3Star");
  CHECK(j["colors_used"] == 3);

  auto compact = invoke({"classify", "--p", "3", "--orbits", "3,3", "--json"});
  CHECK(compact.out.find('\n') == compact.out.size() - 1);
  CHECK(nlohmann::json::parse(compact.out) == j);

  auto neg = invoke({"classify", "--p", "5", "--orbits", "5"});
  CHECK(neg.code == 0);
  CHECK(nlohmann::json::parse(neg.out)["certificate"] == "(1 4)(2 3)");

  auto identity = invoke({"classify", "--p", "2", "--fixed", "4"});
  CHECK(nlohmann::json::parse(identity.out)["class"] == "GR3Star");
}

TEST_CASE("classify writes evidence files") {
  TempDir dir("evidence");
  auto r = invoke({"classify", "--p", "2", "--orbits", "8,4,2", "--evidence", (dir.path / "e").string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir.path / "e" / "verdict.json"));
  CHECK(fs::exists(dir.path / "e" / "witness.dot"));
  CHECK(read_graph_file(dir.path / "e" / "witness.json").n() == 14);

  auto neg = invoke({"classify", "--p", "3", "--orbits", "3", "--fixed", "1", "--evidence", (dir.path / "n").string()});
  CHECK(neg.code == 0);
  CHECK(slurp(dir.path / "n" / "certificate.txt") == "(1 2)\n");
}

TEST_CASE("construct, then aut reads the same graph back") {
  TempDir dir("construct");
  const auto file = dir.path / "g.json";
  const auto dot = dir.path / "g.dot";
  auto r = invoke({"construct", "--p", "3", "--orbits", "3,3", "--out", file.string(), "--dot", dot.string(),
                  "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified") != std::string::npos);
  const auto g = read_graph_file(file);
  CHECK(g.n() == 6);
  CHECK(g.k() == 3);
  CHECK(serialize_graph(g) == slurp(file));
  CHECK(slurp(dot).find("graph") != std::string::npos);

  auto aut = invoke({"aut", file.string()});
  CHECK(aut.code == 0);
  CHECK(aut.out.find("order 3\n") != std::string::npos);
  auto brute = invoke({"aut", file.string(), "--bruteforce"});
  CHECK(brute.out.find("order 3\n") != std::string::npos);

  // stdout form is the same bytes as the file
  auto printed = invoke({"construct", "--p", "3", "--orbits", "3,3"});
  CHECK(printed.out == slurp(file));
}

TEST_CASE("construct with fixed points and larger specs") {
  auto r = invoke({"construct", "--p", "2", "--orbits", "16,4,2,2", "--verify"});
  CHECK(r.code == 0);
  CHECK(parse_graph(r.out).n() == 24);
  auto f = invoke({"construct", "--p", "5", "--orbits", "5,5", "--fixed", "2", "--verify"});
  CHECK(f.code == 0);
  CHECK(parse_graph(f.out).n() == 12);
}

TEST_CASE("construct refuses specs outside GR") {
  auto r = invoke({"construct", "--p", "3", "--orbits", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not in GR") != std::string::npos);
}

TEST_CASE("aut on monochromatic K_4") {
  TempDir dir("k4");
  GraphBuilder b(4, 2);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) b.set(u, v, 1);
  }
  write_graph_file(dir.path / "k4.json", b.build());
  auto r = invoke({"aut", (dir.path / "k4.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 24\n") != std::string::npos);
}

TEST_CASE("closure and oracle") {
  auto c = invoke({"closure", "--p", "3", "--orbits", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("closure_order 6\n") != std::string::npos);
  CHECK(c.out.find("2*-closed no\n") != std::string::npos);
  auto d = invoke({"closure", "--p", "7", "--orbits", "7,7"});
  CHECK(d.out.find("2*-closed yes\n") != std::string::npos);

  auto o = invoke({"oracle", "--p", "3", "--orbits", "3,3", "--max-colors", "2"});
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["status"] == "not_member");
  CHECK(j["edge_orbits"] == 5);
  auto m = invoke({"oracle", "--p", "3", "--orbits", "3,3", "--max-colors", "3", "--parallel"});
  CHECK(nlohmann::json::parse(m.out)["status"] == "member");
  auto serial = invoke({"oracle", "--p", "3", "--orbits", "3,3", "--max-colors", "3"});
  CHECK(serial.out == m.out);
  auto seeded = invoke({"--seed", "7", "oracle", "--p", "7", "--orbits", "7,7", "--max-colors", "2"});
  CHECK(seeded.code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"classify"}).code == 2);                                  // --p missing
  CHECK(invoke({"classify", "--p", "4", "--orbits", "4"}).code == 2);    // not prime
  CHECK(invoke({"classify", "--p", "3", "--orbits", "6"}).code == 2);    // not a power of p
  CHECK(invoke({"classify", "--p", "3", "--orbits", "x"}).code == 2);
  CHECK(invoke({"oracle", "--p", "3", "--orbits", "3,3"}).code == 2);    // --max-colors missing
  CHECK(invoke({"aut"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("bad input files") {
  TempDir dir("bad");
  CHECK(invoke({"aut", (dir.path / "missing.json").string()}).code != 0);
  std::ofstream(dir.path / "bad.json") << "{\"n\": 3, \"k\": 2, \"colors\": [0, 1]}";
  CHECK(invoke({"aut", (dir.path / "bad.json").string()}).code == 2);
  std::ofstream(dir.path / "junk.json") << "not json";
  CHECK(invoke({"aut", (dir.path / "junk.json").string()}).code == 2);
}

TEST_CASE("verify-all passes and its output does not depend on scheduling") {
  auto parallel = invoke({"verify-all"});
  auto serial = invoke({"verify-all", "--serial"});
  CHECK(parallel.code == 0);
  CHECK(parallel.out == serial.out);
  CHECK(parallel.out.find("FAIL") == std::string::npos);
  for (const auto& entry : cli::verification_table()) {
    INFO(entry.name << ": " << entry.detail);
    CHECK(entry.passed);
  }
}
