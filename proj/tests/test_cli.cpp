#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "scheme_forge/cli.hpp"

using namespace scheme_forge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "scheme-forge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("build M(9) on pairs") {
  const auto r = run_cli({"build", "--q", "9", "--group", "m", "--domain", "pairs"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "n = 45, d = 4"));
  CHECK(contains(r.out, "symmetric: yes"));
}

TEST_CASE("build PSL(2,7) has 6 classes") {
  const auto r = run_cli({"scheme", "build", "--q", "7", "--group", "psl"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "d = 6"));
  CHECK(contains(r.out, "symmetric: no"));
}

TEST_CASE("non-pair domains warn and build generically") {
  const auto r = run_cli({"build", "--q", "9", "--group", "m", "--domain", "tangent-lines"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning"));
  CHECK(contains(r.out, "n = 10"));
}

TEST_CASE("JSON export carries the p-tensor") {
  const auto r = run_cli({"build", "--q", "5", "--group", "psl", "--format", "json", "--p-tensor"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["n"] == 15);
  CHECK(j["d"] == 5);
  CHECK(j["p_tensor"].size() == 6);
  std::size_t sum = 0;
  for (const auto& k : j["valencies"]) sum += k.get<std::size_t>();
  CHECK(sum == 15);
  CHECK(j["labels"][0]["orbit"] == "Γ_0");
}

TEST_CASE("CSV export of the intersection matrices") {
  const auto r = run_cli({"build", "--q", "5", "--group", "pgl", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("i,k,j0,j1,j2,j3\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 4 * 4);
}

TEST_CASE("--out writes the payload to a file") {
  const auto path = std::filesystem::temp_directory_path() / "scheme_forge_test_out.json";
  const auto r = run_cli({"build", "--q", "5", "--group", "pgl", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  CHECK(json::parse(in)["d"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"verify", "paper", "--q", "6"}).code == 2);
  CHECK(run_cli({"build", "--q", "7", "--group", "m"}).code == 2);
  CHECK(run_cli({"build", "--q", "7", "--group", "sl"}).code == 2);
  CHECK(run_cli({"build", "--q", "7"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"verify", "paper", "--q", "81"}).code == 2);
  CHECK(run_cli({"build", "--q", "9", "--group", "pgl", "--modulus", "2,0,1"}).code == 2);
  const auto large = run_cli({"build", "--q", "131", "--group", "pgl"});
  CHECK(large.code == 2);
  CHECK(contains(large.err, "--allow-large"));
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify paper at q = 9 passes") {
  const auto r = run_cli({"verify", "paper", "--q", "9"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "q9.fusion_diagram"));
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK_FALSE(contains(r.out, " ms)"));
  const auto again = run_cli({"verify", "paper", "--q", "9"});
  CHECK(again.out == r.out);
}

TEST_CASE("verify paper JSON and timings") {
  const auto r = run_cli({"verify", "paper", "--q", "5", "--format", "json", "--timings"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["failures"].empty());
  CHECK(j.contains("timings_ms"));
}

TEST_CASE("a custom modulus gives the same class counts") {
  const auto r = run_cli({"build", "--q", "9", "--group", "psl", "--modulus", "1,0,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "d = 8"));
  CHECK(run_cli({"verify", "paper", "--q", "9", "--modulus", "1,0,1"}).code == 0);
}

TEST_CASE("group info") {
  const auto r = run_cli({"group", "info", "--q", "9", "--group", "pgl", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["order"] == 720);
  CHECK(j["base_pair_stabilizer_order"] == 16);
  CHECK(j["generators"][0].contains("matrix"));
}

TEST_CASE("scheme labels") {
  const auto r = run_cli({"scheme", "labels", "--q", "9", "--group", "psl"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Γ_1^+"));
  CHECK(contains(r.out, "8 classes"));
}

TEST_CASE("geometry dump") {
  const auto r = run_cli({"geometry", "dump", "--q", "7", "--what", "conic", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["items"].size() == 8);
  CHECK(j["items"][0]["point"].size() == 3);
  const auto lines = run_cli({"geometry", "dump", "--q", "5", "--what", "lines"});
  CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 31);
}

TEST_CASE("fusion check") {
  CHECK(run_cli({"fusion", "check", "--q", "9", "--coarse", "ft", "--fine", "psl"}).code == 0);
  CHECK(run_cli({"fusion", "check", "--q", "9", "--coarse", "pgammal", "--fine", "m"}).code == 0);
  CHECK(run_cli({"fusion", "check", "--q", "9", "--coarse", "t", "--fine", "ft"}).code == 0);
  CHECK(run_cli({"fusion", "check", "--q", "9", "--coarse", "psl", "--fine", "ft"}).code == 1);
}

TEST_CASE("generator permutations are cached") {
  const char* dir = std::getenv("SCHEME_FORGE_CACHE_DIR");
  if (dir == nullptr) SKIP("SCHEME_FORGE_CACHE_DIR not set");
  std::filesystem::remove_all(dir);
  const auto first = run_cli({"build", "--q", "7", "--group", "psl", "--path", "generic"});
  REQUIRE(first.code == 0);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
  CHECK(files == 1);
  const auto second = run_cli({"build", "--q", "7", "--group", "psl", "--path", "generic"});
  CHECK(second.out == first.out);
}
